#include "cfmix/element_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cfmix/errors.hpp"
#include "checked.hpp"

namespace cfmix {

namespace {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

std::uint64_t full_mask(int m) {
  return m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
}

std::uint64_t rotate_mask(std::uint64_t mask, std::int64_t by, int m) {
  const auto k = static_cast<int>(detail::mod(by, m));
  if (k == 0) return mask;
  const std::uint64_t full = full_mask(m);
  return ((mask << k) | (mask >> (m - k))) & full;
}

std::uint64_t reflect_mask(std::uint64_t mask, int m) {
  std::uint64_t out = 0;
  for (int r = 0; r < m; ++r)
    if (mask >> r & 1U) out |= std::uint64_t{1} << ((m - r) % m);
  return out;
}

std::uint64_t sum_masks(std::uint64_t a, std::uint64_t b, int m) {
  std::uint64_t out = 0;
  for (int r = 0; r < m; ++r)
    if (a >> r & 1U) out |= rotate_mask(b, r, m);
  return out;
}

void trim_masks(std::vector<std::uint64_t>& masks) {
  while (!masks.empty() && masks.back() == 1U) masks.pop_back();
}

std::uint64_t mask_at(const Block& b, std::size_t i) {
  return i < b.masks.size() ? b.masks[i] : std::uint64_t{1};
}

bool block_empty(const Block& b) {
  for (const auto& iv : b.axes)
    if (iv.empty()) return true;
  for (auto m : b.masks)
    if (m == 0) return true;
  return false;
}

Block block_of(const GroupElement& g) {
  Block b;
  const auto c = g.coords();
  if (g.group().kind() == GroupKind::integer_lattice) {
    b.axes.reserve(c.size());
    for (auto x : c) b.axes.push_back({x, x});
  } else {
    b.masks.reserve(c.size());
    for (auto x : c) b.masks.push_back(std::uint64_t{1} << x);
  }
  return b;
}

Count block_size(const Block& b) {
  Count n = 1;
  for (const auto& iv : b.axes) {
    if (iv.empty()) return 0;
    n *= Count(iv.hi) - Count(iv.lo) + 1;
  }
  for (auto m : b.masks) n *= std::popcount(m);
  return n;
}

bool block_contains(const Block& b, const GroupElement& g) {
  const auto c = g.coords();
  if (!b.axes.empty()) {
    for (std::size_t i = 0; i < b.axes.size(); ++i)
      if (c[i] < b.axes[i].lo || c[i] > b.axes[i].hi) return false;
    return true;
  }
  const std::size_t n = std::max(b.masks.size(), c.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t r = i < c.size() ? c[i] : 0;
    if (!(mask_at(b, i) >> r & 1U)) return false;
  }
  return true;
}

std::optional<Block> block_intersect(const Block& a, const Block& b) {
  Block out;
  if (!a.axes.empty()) {
    out.axes.resize(a.axes.size());
    for (std::size_t i = 0; i < a.axes.size(); ++i) {
      out.axes[i] = {std::max(a.axes[i].lo, b.axes[i].lo), std::min(a.axes[i].hi, b.axes[i].hi)};
      if (out.axes[i].empty()) return std::nullopt;
    }
    return out;
  }
  const std::size_t n = std::max(a.masks.size(), b.masks.size());
  out.masks.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.masks[i] = mask_at(a, i) & mask_at(b, i);
    if (out.masks[i] == 0) return std::nullopt;
  }
  trim_masks(out.masks);
  return out;
}

// a \ b as pairwise-disjoint pieces.
std::vector<Block> block_subtract(const Block& a, const Block& b) {
  if (!block_intersect(a, b)) return {a};
  std::vector<Block> pieces;
  Block cur = a;
  if (!a.axes.empty()) {
    for (std::size_t i = 0; i < a.axes.size(); ++i) {
      const Interval ci = cur.axes[i];
      const Interval bi = b.axes[i];
      if (ci.lo < bi.lo) {
        Block p = cur;
        p.axes[i] = {ci.lo, bi.lo - 1};
        pieces.push_back(std::move(p));
      }
      if (ci.hi > bi.hi) {
        Block p = cur;
        p.axes[i] = {bi.hi + 1, ci.hi};
        pieces.push_back(std::move(p));
      }
      cur.axes[i] = {std::max(ci.lo, bi.lo), std::min(ci.hi, bi.hi)};
    }
    return pieces;
  }
  const std::size_t n = std::max(a.masks.size(), b.masks.size());
  cur.masks.resize(n, 1U);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t outside = cur.masks[i] & ~mask_at(b, i);
    if (outside != 0) {
      Block p = cur;
      p.masks[i] = outside;
      trim_masks(p.masks);
      pieces.push_back(std::move(p));
    }
    cur.masks[i] &= mask_at(b, i);
  }
  return pieces;
}

Block block_sum(const GroupDescriptor& d, const Block& a, const Block& b) {
  Block out;
  if (!a.axes.empty()) {
    out.axes.resize(a.axes.size());
    for (std::size_t i = 0; i < a.axes.size(); ++i)
      out.axes[i] = {checked_add(a.axes[i].lo, b.axes[i].lo),
                     checked_add(a.axes[i].hi, b.axes[i].hi)};
    return out;
  }
  const std::size_t n = std::max(a.masks.size(), b.masks.size());
  out.masks.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.masks[i] = sum_masks(mask_at(a, i), mask_at(b, i), d.order_at(i));
  trim_masks(out.masks);
  return out;
}

Block block_negate(const GroupDescriptor& d, const Block& a) {
  Block out;
  if (!a.axes.empty()) {
    out.axes.resize(a.axes.size());
    for (std::size_t i = 0; i < a.axes.size(); ++i)
      out.axes[i] = {checked_mul(a.axes[i].hi, -1), checked_mul(a.axes[i].lo, -1)};
    return out;
  }
  out.masks.resize(a.masks.size());
  for (std::size_t i = 0; i < a.masks.size(); ++i)
    out.masks[i] = reflect_mask(a.masks[i], d.order_at(i));
  return out;
}

Block block_translate(const GroupDescriptor& d, const Block& a, const GroupElement& g) {
  const auto c = g.coords();
  Block out = a;
  if (!a.axes.empty()) {
    for (std::size_t i = 0; i < a.axes.size(); ++i)
      out.axes[i] = {checked_add(a.axes[i].lo, c[i]), checked_add(a.axes[i].hi, c[i])};
    return out;
  }
  out.masks.resize(std::max(a.masks.size(), c.size()), 1U);
  for (std::size_t i = 0; i < c.size(); ++i)
    out.masks[i] = rotate_mask(out.masks[i], c[i], d.order_at(i));
  trim_masks(out.masks);
  return out;
}

GroupElement block_min(const Group& group, const Block& b) {
  std::vector<std::int64_t> c;
  if (!b.axes.empty()) {
    c.reserve(b.axes.size());
    for (const auto& iv : b.axes) c.push_back(iv.lo);
  } else {
    c.reserve(b.masks.size());
    for (auto m : b.masks) c.push_back(std::countr_zero(m));
  }
  return GroupElement(group, std::move(c));
}

std::vector<Block> disjointify(std::vector<Block> blocks) {
  std::vector<Block> out;
  for (auto& b : blocks) {
    if (block_empty(b)) continue;
    std::vector<Block> pieces{std::move(b)};
    for (const auto& r : out) {
      std::vector<Block> next;
      for (const auto& p : pieces) {
        auto sub = block_subtract(p, r);
        next.insert(next.end(), std::make_move_iterator(sub.begin()),
                    std::make_move_iterator(sub.end()));
      }
      pieces = std::move(next);
      if (pieces.empty()) break;
    }
    out.insert(out.end(), std::make_move_iterator(pieces.begin()),
               std::make_move_iterator(pieces.end()));
  }
  return out;
}

void sort_unique(std::vector<GroupElement>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void require_same(const ElementSet& a, const ElementSet& b) {
  if (!(a.group() == b.group())) throw GroupMismatch("element sets belong to different groups");
}

void require_same(const ElementSet& a, const GroupElement& g) {
  if (!(a.group() == g.group())) throw GroupMismatch("element and set belong to different groups");
}

}  // namespace

ElementSet::ElementSet(Group group) : group_(std::move(group)) {
  if (group_.abelian())
    rep_ = Blocks{};
  else
    rep_ = Explicit{};
}

ElementSet::ElementSet(Group group, Blocks blocks) : group_(std::move(group)), rep_(std::move(blocks)) {
  build_index();
}

ElementSet::ElementSet(Group group, Explicit elements)
    : group_(std::move(group)), rep_(std::move(elements)) {}

void ElementSet::build_index() {
  auto* blocks = std::get_if<Blocks>(&rep_);
  if (!blocks) return;
  std::erase_if(*blocks, [](const Block& b) { return block_empty(b); });
  prefix_max_hi_.clear();
  if (group_.kind() != GroupKind::integer_lattice) return;
  std::sort(blocks->begin(), blocks->end(), [](const Block& a, const Block& b) {
    for (std::size_t i = 0; i < a.axes.size(); ++i) {
      if (a.axes[i].lo != b.axes[i].lo) return a.axes[i].lo < b.axes[i].lo;
    }
    return false;
  });
  prefix_max_hi_.reserve(blocks->size());
  std::int64_t running = std::numeric_limits<std::int64_t>::min();
  for (const auto& b : *blocks) {
    running = std::max(running, b.axes[0].hi);
    prefix_max_hi_.push_back(running);
  }
}

ElementSet ElementSet::of(Group group, std::span<const GroupElement> elements) {
  for (const auto& g : elements)
    if (!(g.group() == group)) throw GroupMismatch("ElementSet::of: element from another group");
  if (group.abelian()) {
    std::vector<GroupElement> sorted(elements.begin(), elements.end());
    sort_unique(sorted);
    Blocks blocks;
    blocks.reserve(sorted.size());
    for (const auto& g : sorted) blocks.push_back(block_of(g));
    return ElementSet(std::move(group), std::move(blocks));
  }
  Explicit v(elements.begin(), elements.end());
  sort_unique(v);
  return ElementSet(std::move(group), std::move(v));
}

ElementSet ElementSet::singleton(const GroupElement& g) {
  return of(g.group(), std::span(&g, 1));
}

ElementSet ElementSet::box(Group group, std::vector<Interval> axes) {
  if (group.kind() != GroupKind::integer_lattice)
    throw GroupMismatch("box: not an integer lattice");
  if (axes.size() != static_cast<std::size_t>(group.descriptor().dimension()))
    throw GroupMismatch("box: wrong number of axes");
  Block b;
  b.axes = std::move(axes);
  return ElementSet(std::move(group), Blocks{std::move(b)});
}

ElementSet ElementSet::coordinate_subgroup(Group group, std::size_t coordinates) {
  if (group.kind() != GroupKind::finite_sum)
    throw GroupMismatch("coordinate_subgroup: not a finite sum");
  Block b;
  b.masks.resize(coordinates);
  for (std::size_t i = 0; i < coordinates; ++i)
    b.masks[i] = full_mask(group.descriptor().order_at(i));
  trim_masks(b.masks);
  return ElementSet(std::move(group), Blocks{std::move(b)});
}

ElementSet ElementSet::from_disjoint_blocks(Group group, std::vector<Block> blocks) {
  if (!group.abelian()) throw GroupMismatch("from_disjoint_blocks: group is not abelian");
  return ElementSet(std::move(group), std::move(blocks));
}

std::span<const Block> ElementSet::blocks() const {
  if (const auto* b = std::get_if<Blocks>(&rep_)) return *b;
  throw std::logic_error("ElementSet::blocks on an explicit set");
}

std::span<const GroupElement> ElementSet::explicit_elements() const {
  if (const auto* e = std::get_if<Explicit>(&rep_)) return *e;
  throw std::logic_error("ElementSet::explicit_elements on a structured set");
}

bool ElementSet::empty() const noexcept {
  return std::visit([](const auto& v) { return v.empty(); }, rep_);
}

std::size_t ElementSet::part_count() const noexcept {
  return std::visit([](const auto& v) { return v.size(); }, rep_);
}

Count ElementSet::size() const {
  if (const auto* e = std::get_if<Explicit>(&rep_)) return Count(e->size());
  Count n = 0;
  for (const auto& b : std::get<Blocks>(rep_)) n += block_size(b);
  return n;
}

Count ElementSet::part_size(std::size_t part) const {
  if (std::holds_alternative<Explicit>(rep_)) return 1;
  return block_size(std::get<Blocks>(rep_).at(part));
}

bool ElementSet::contains(const GroupElement& g) const { return part_of(g).has_value(); }

std::optional<std::size_t> ElementSet::part_of(const GroupElement& g) const {
  if (!(g.group() == group_)) return std::nullopt;
  if (const auto* e = std::get_if<Explicit>(&rep_)) {
    const auto it = std::lower_bound(e->begin(), e->end(), g);
    if (it == e->end() || !(*it == g)) return std::nullopt;
    return static_cast<std::size_t>(it - e->begin());
  }
  const auto& blocks = std::get<Blocks>(rep_);
  if (!prefix_max_hi_.empty()) {
    const std::int64_t x0 = g.coords()[0];
    const auto first = static_cast<std::size_t>(
        std::lower_bound(prefix_max_hi_.begin(), prefix_max_hi_.end(), x0) -
        prefix_max_hi_.begin());
    for (std::size_t i = first; i < blocks.size() && blocks[i].axes[0].lo <= x0; ++i)
      if (block_contains(blocks[i], g)) return i;
    return std::nullopt;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (block_contains(blocks[i], g)) return i;
  return std::nullopt;
}

std::optional<GroupElement> ElementSet::min_element() const {
  if (const auto* e = std::get_if<Explicit>(&rep_)) {
    if (e->empty()) return std::nullopt;
    return e->front();
  }
  std::optional<GroupElement> best;
  for (const auto& b : std::get<Blocks>(rep_)) {
    GroupElement m = block_min(group_, b);
    if (!best || m < *best) best = std::move(m);
  }
  return best;
}

std::vector<GroupElement> ElementSet::elements(std::size_t limit) const {
  if (size() > limit) throw std::length_error("ElementSet::elements: set too large to list");
  if (const auto* e = std::get_if<Explicit>(&rep_)) return *e;
  std::vector<GroupElement> out;
  for (const auto& b : std::get<Blocks>(rep_)) {
    if (!b.axes.empty()) {
      std::vector<std::int64_t> x(b.axes.size());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = b.axes[i].lo;
      while (true) {
        out.emplace_back(group_, x);
        std::size_t i = x.size();
        bool done = true;
        while (i > 0) {
          --i;
          if (x[i] < b.axes[i].hi) {
            ++x[i];
            done = false;
            break;
          }
          x[i] = b.axes[i].lo;
        }
        if (done) break;
      }
    } else {
      std::vector<std::vector<std::int64_t>> choices(b.masks.size());
      for (std::size_t i = 0; i < b.masks.size(); ++i)
        for (int r = 0; r < 64; ++r)
          if (b.masks[i] >> r & 1U) choices[i].push_back(r);
      std::vector<std::size_t> idx(b.masks.size(), 0);
      while (true) {
        std::vector<std::int64_t> x(b.masks.size());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = choices[i][idx[i]];
        out.emplace_back(group_, std::move(x));
        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
          if (++idx[i] < choices[i].size()) break;
          idx[i] = 0;
        }
        if (i == idx.size()) break;
      }
    }
  }
  sort_unique(out);
  return out;
}

GroupElement ElementSet::sample_part(std::size_t part, std::mt19937_64& rng) const {
  if (const auto* e = std::get_if<Explicit>(&rep_)) return e->at(part);
  const Block& b = std::get<Blocks>(rep_).at(part);
  std::vector<std::int64_t> x;
  if (!b.axes.empty()) {
    x.reserve(b.axes.size());
    for (const auto& iv : b.axes)
      x.push_back(std::uniform_int_distribution<std::int64_t>(iv.lo, iv.hi)(rng));
  } else {
    x.reserve(b.masks.size());
    for (auto m : b.masks) {
      const int k = std::uniform_int_distribution<int>(0, std::popcount(m) - 1)(rng);
      std::uint64_t rest = m;
      for (int j = 0; j < k; ++j) rest &= rest - 1;
      x.push_back(std::countr_zero(rest));
    }
  }
  return GroupElement(group_, std::move(x));
}

bool operator==(const ElementSet& a, const ElementSet& b) {
  if (!(a.group_ == b.group_)) return false;
  if (const auto* ea = std::get_if<ElementSet::Explicit>(&a.rep_))
    return *ea == std::get<ElementSet::Explicit>(b.rep_);
  return a.size() == b.size() && is_subset(a, b);
}

ElementSet product(const ElementSet& a, const ElementSet& b) {
  require_same(a, b);
  if (const auto* ea = std::get_if<ElementSet::Explicit>(&a.rep_)) {
    const auto& eb = std::get<ElementSet::Explicit>(b.rep_);
    ElementSet::Explicit out;
    out.reserve(ea->size() * eb.size());
    for (const auto& x : *ea)
      for (const auto& y : eb) out.push_back(compose(x, y));
    sort_unique(out);
    return ElementSet(a.group_, std::move(out));
  }
  const auto& d = a.group_.descriptor();
  std::vector<Block> sums;
  const auto& ba = std::get<ElementSet::Blocks>(a.rep_);
  const auto& bb = std::get<ElementSet::Blocks>(b.rep_);
  sums.reserve(ba.size() * bb.size());
  for (const auto& x : ba)
    for (const auto& y : bb) sums.push_back(block_sum(d, x, y));
  return ElementSet(a.group_, disjointify(std::move(sums)));
}

ElementSet product_disjoint(const ElementSet& a, const ElementSet& b) {
  require_same(a, b);
  if (std::holds_alternative<ElementSet::Explicit>(a.rep_)) return product(a, b);
  const auto& d = a.group_.descriptor();
  const auto& ba = std::get<ElementSet::Blocks>(a.rep_);
  const auto& bb = std::get<ElementSet::Blocks>(b.rep_);
  std::vector<Block> sums;
  sums.reserve(ba.size() * bb.size());
  for (const auto& x : ba)
    for (const auto& y : bb) sums.push_back(block_sum(d, x, y));
  return ElementSet(a.group_, std::move(sums));
}

ElementSet inverse(const ElementSet& a) {
  if (const auto* e = std::get_if<ElementSet::Explicit>(&a.rep_)) {
    ElementSet::Explicit out;
    out.reserve(e->size());
    for (const auto& x : *e) out.push_back(inverse(x));
    sort_unique(out);
    return ElementSet(a.group_, std::move(out));
  }
  std::vector<Block> out;
  for (const auto& b : std::get<ElementSet::Blocks>(a.rep_))
    out.push_back(block_negate(a.group_.descriptor(), b));
  return ElementSet(a.group_, std::move(out));
}

ElementSet translate(const GroupElement& g, const ElementSet& a) {
  require_same(a, g);
  if (const auto* e = std::get_if<ElementSet::Explicit>(&a.rep_)) {
    ElementSet::Explicit out;
    out.reserve(e->size());
    for (const auto& x : *e) out.push_back(compose(g, x));
    sort_unique(out);
    return ElementSet(a.group_, std::move(out));
  }
  std::vector<Block> out;
  for (const auto& b : std::get<ElementSet::Blocks>(a.rep_))
    out.push_back(block_translate(a.group_.descriptor(), b, g));
  return ElementSet(a.group_, std::move(out));
}

ElementSet translate(const ElementSet& a, const GroupElement& g) {
  require_same(a, g);
  if (const auto* e = std::get_if<ElementSet::Explicit>(&a.rep_)) {
    ElementSet::Explicit out;
    out.reserve(e->size());
    for (const auto& x : *e) out.push_back(compose(x, g));
    sort_unique(out);
    return ElementSet(a.group_, std::move(out));
  }
  return translate(g, a);
}

namespace {

// Visits index ranges of blocks in `b` that may meet `q` (lattice index when available).
template <class F>
void for_each_candidate(const std::vector<Block>& b, const std::vector<std::int64_t>& prefix,
                        const Block& q, F&& f) {
  if (prefix.empty()) {
    for (const auto& x : b) f(x);
    return;
  }
  const auto first = static_cast<std::size_t>(
      std::lower_bound(prefix.begin(), prefix.end(), q.axes[0].lo) - prefix.begin());
  for (std::size_t i = first; i < b.size() && b[i].axes[0].lo <= q.axes[0].hi; ++i) f(b[i]);
}

}  // namespace

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  require_same(a, b);
  if (const auto* ea = std::get_if<ElementSet::Explicit>(&a.rep_)) {
    const auto& eb = std::get<ElementSet::Explicit>(b.rep_);
    ElementSet::Explicit out;
    std::set_intersection(ea->begin(), ea->end(), eb.begin(), eb.end(), std::back_inserter(out));
    return ElementSet(a.group_, std::move(out));
  }
  const auto& ba = std::get<ElementSet::Blocks>(a.rep_);
  const auto& bb = std::get<ElementSet::Blocks>(b.rep_);
  std::vector<Block> out;
  for (const auto& x : ba)
    for_each_candidate(bb, b.prefix_max_hi_, x, [&](const Block& y) {
      if (auto z = block_intersect(x, y)) out.push_back(std::move(*z));
    });
  return ElementSet(a.group_, std::move(out));
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  require_same(a, b);
  if (const auto* ea = std::get_if<ElementSet::Explicit>(&a.rep_)) {
    const auto& eb = std::get<ElementSet::Explicit>(b.rep_);
    ElementSet::Explicit out;
    std::set_difference(ea->begin(), ea->end(), eb.begin(), eb.end(), std::back_inserter(out));
    return ElementSet(a.group_, std::move(out));
  }
  const auto& ba = std::get<ElementSet::Blocks>(a.rep_);
  const auto& bb = std::get<ElementSet::Blocks>(b.rep_);
  std::vector<Block> out;
  for (const auto& x : ba) {
    std::vector<Block> pieces{x};
    for_each_candidate(bb, b.prefix_max_hi_, x, [&](const Block& y) {
      if (pieces.empty()) return;
      std::vector<Block> next;
      for (const auto& p : pieces) {
        auto sub = block_subtract(p, y);
        next.insert(next.end(), std::make_move_iterator(sub.begin()),
                    std::make_move_iterator(sub.end()));
      }
      pieces = std::move(next);
    });
    out.insert(out.end(), std::make_move_iterator(pieces.begin()),
               std::make_move_iterator(pieces.end()));
  }
  return ElementSet(a.group_, std::move(out));
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  require_same(a, b);
  if (const auto* ea = std::get_if<ElementSet::Explicit>(&a.rep_)) {
    const auto& eb = std::get<ElementSet::Explicit>(b.rep_);
    ElementSet::Explicit out;
    std::set_union(ea->begin(), ea->end(), eb.begin(), eb.end(), std::back_inserter(out));
    return ElementSet(a.group_, std::move(out));
  }
  ElementSet rest = set_difference(b, a);
  std::vector<Block> out = std::get<ElementSet::Blocks>(a.rep_);
  const auto& br = std::get<ElementSet::Blocks>(rest.rep_);
  out.insert(out.end(), br.begin(), br.end());
  return ElementSet(a.group_, std::move(out));
}

std::optional<GroupElement> common_element(const ElementSet& a, const ElementSet& b) {
  require_same(a, b);
  if (const auto* ea = std::get_if<ElementSet::Explicit>(&a.rep_)) {
    const auto& eb = std::get<ElementSet::Explicit>(b.rep_);
    auto i = ea->begin();
    auto j = eb.begin();
    while (i != ea->end() && j != eb.end()) {
      if (*i < *j)
        ++i;
      else if (*j < *i)
        ++j;
      else
        return *i;
    }
    return std::nullopt;
  }
  return set_intersection(a, b).min_element();
}

std::optional<GroupElement> escaping_element(const ElementSet& a, const ElementSet& b) {
  return set_difference(a, b).min_element();
}

bool is_subset(const ElementSet& a, const ElementSet& b) {
  require_same(a, b);
  if (const auto* ea = std::get_if<ElementSet::Explicit>(&a.rep_)) {
    return std::all_of(ea->begin(), ea->end(), [&](const GroupElement& g) { return b.contains(g); });
  }
  return set_difference(a, b).empty();
}

}  // namespace cfmix
