#include "cfmix/builder.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "cfmix/errors.hpp"
#include "cfmix/verify.hpp"
#include "checked.hpp"

namespace cfmix {

namespace {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

std::vector<Interval> bounding_box(const ElementSet& s) {
  const auto blocks = s.blocks();
  std::vector<Interval> box = blocks.front().axes;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < box.size(); ++i) {
      box[i].lo = std::min(box[i].lo, b.axes[i].lo);
      box[i].hi = std::max(box[i].hi, b.axes[i].hi);
    }
  return box;
}

std::size_t coordinate_support(const ElementSet& s) {
  std::size_t k = 0;
  for (const auto& b : s.blocks()) k = std::max(k, b.masks.size());
  return k;
}

std::pair<std::int64_t, std::int64_t> shift_range(const ElementSet& s) {
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (const auto& g : s.explicit_elements()) {
    lo = std::min(lo, g.shift());
    hi = std::max(hi, g.shift());
  }
  return {lo, hi};
}

// Spaced candidates for C_{n+1}, identity excluded.
std::vector<GroupElement> candidates(const Group& G, const ElementSet& F, std::size_t limit) {
  std::vector<GroupElement> out;
  out.reserve(limit);
  switch (G.kind()) {
    case GroupKind::integer_lattice: {
      const auto box = bounding_box(F);
      std::vector<std::int64_t> step(box.size());
      for (std::size_t i = 0; i < box.size(); ++i)
        step[i] = checked_add(checked_mul(2, checked_sub(box[i].hi, box[i].lo)), 1);
      const auto vs = enumerate(G, limit + 1);
      for (std::size_t j = 1; j < vs.size(); ++j) {
        std::vector<std::int64_t> c(step.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(step[i], vs[j].coords()[i]);
        out.emplace_back(G, std::move(c));
      }
      break;
    }
    case GroupKind::finite_sum: {
      const std::size_t k = coordinate_support(F);
      const auto& d = G.descriptor();
      for (std::size_t idx = 1; idx <= limit; ++idx) {
        std::vector<std::int64_t> c(k, 0);
        std::size_t rest = idx;
        for (std::size_t i = k; rest > 0; ++i) {
          const auto m = static_cast<std::size_t>(d.order_at(i));
          c.push_back(static_cast<std::int64_t>(rest % m));
          rest /= m;
        }
        out.emplace_back(G, std::move(c));
      }
      break;
    }
    case GroupKind::lamplighter: {
      const auto [lo, hi] = shift_range(F);
      const std::int64_t step = 2 * (hi - lo) + 3;
      for (std::size_t j = 1; j <= limit; ++j)
        out.emplace_back(G, std::vector<std::int64_t>{checked_mul(step, unzigzag(j))});
      break;
    }
  }
  return out;
}

struct PairSet {
  std::size_t a;
  std::size_t b;
  ElementSet set;
};

std::vector<GroupElement> choose_C(const Group& G, const ElementSet& F, int level, int k,
                                   const BuildOptions& options) {
  const GroupElement e = identity(G);
  const ElementSet Finv = inverse(F);
  const ElementSet D0 = product(F, Finv);
  auto difference_set = [&](const GroupElement& x, const GroupElement& y) {
    const GroupElement d = compose(x, inverse(y));
    return G.abelian() ? translate(d, D0) : product(translate(F, d), Finv);
  };

  std::vector<GroupElement> chosen{e};
  std::vector<ElementSet> translates{F};
  std::vector<PairSet> pairs;

  for (const auto& c : candidates(G, F, options.candidate_limit)) {
    if (static_cast<int>(chosen.size()) == k) break;
    const ElementSet Fc = translate(F, c);
    if (std::any_of(translates.begin(), translates.end(),
                    [&](const ElementSet& t) { return intersects(t, Fc); }))
      continue;
    std::vector<PairSet> fresh;
    bool ok = true;
    if (options.require_mixing) {
      const std::size_t idx = chosen.size();
      for (std::size_t j = 0; j < chosen.size() && ok; ++j) {
        for (auto [x, y] : {std::pair{idx, j}, std::pair{j, idx}}) {
          const GroupElement& gx = x == idx ? c : chosen[x];
          const GroupElement& gy = y == idx ? c : chosen[y];
          ElementSet s = difference_set(gx, gy);
          if (intersects(s, D0) ||
              std::any_of(pairs.begin(), pairs.end(),
                          [&](const PairSet& p) { return intersects(p.set, s); }) ||
              std::any_of(fresh.begin(), fresh.end(),
                          [&](const PairSet& p) { return intersects(p.set, s); })) {
            ok = false;
            break;
          }
          fresh.push_back({x, y, std::move(s)});
        }
      }
    }
    if (!ok) continue;
    chosen.push_back(c);
    translates.push_back(Fc);
    for (auto& p : fresh) pairs.push_back(std::move(p));
  }
  if (static_cast<int>(chosen.size()) < k)
    throw SearchExhausted(static_cast<std::size_t>(level), options.require_mixing ? "mix-ii" : "basic3",
                          "no " + std::to_string(k) + " admissible C elements at level " +
                              std::to_string(level) + " among " +
                              std::to_string(options.candidate_limit) + " candidates");
  return chosen;
}

// Lamp configurations on the smallest window of positions holding every lamp of `torsion`.
ElementSet lamp_subgroup(const Group& G, const std::vector<GroupElement>& torsion) {
  const GroupElement e = identity(G);
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (const auto& g : torsion) {
    const auto c = g.coords();
    if (c.size() < 3) continue;
    lo = std::min(lo, c[1]);
    hi = std::max(hi, c[1] + static_cast<std::int64_t>(c.size()) - 3);
  }
  if (lo > hi) return ElementSet::singleton(e);
  const int m = G.descriptor().lamp_order();
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  std::vector<GroupElement> all;
  std::vector<std::int64_t> values(width, 0);
  while (true) {
    all.push_back(lamplighter_element(G, 0, lo, values));
    std::size_t i = 0;
    for (; i < width; ++i) {
      if (++values[i] < m) break;
      values[i] = 0;
    }
    if (i == width) break;
    if (all.size() > 1'000'000) throw std::length_error("lamp subgroup too large");
  }
  return ElementSet::of(G, all);
}

}  // namespace

std::vector<int> default_growth_profile(int depth) {
  std::vector<int> p;
  for (int n = 1; n <= depth; ++n) p.push_back(n + 2);
  return p;
}

void validate_growth_profile(int depth, const std::vector<int>& profile) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (profile.size() != static_cast<std::size_t>(depth))
    throw std::invalid_argument("growth profile needs one entry per level");
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] < 2) throw std::invalid_argument("growth profile entries must be >= 2 (#C_n > 1)");
    if (i > 0 && profile[i] < profile[i - 1])
      throw std::invalid_argument("growth profile must be nondecreasing");
  }
}

CFSequence build_sequence(const Group& G, int depth, const std::vector<int>& profile,
                          const BuildOptions& options) {
  validate_growth_profile(depth, profile);
  const GroupElement e = identity(G);

  std::vector<GroupElement> infinite;
  std::vector<GroupElement> torsion;
  {
    const auto first = enumerate(G, options.obligations + 1);
    for (std::size_t i = 1; i < first.size(); ++i)
      (element_order(first[i]) ? torsion : infinite).push_back(first[i]);
  }
  const ElementSet lamps =
      G.kind() == GroupKind::lamplighter ? lamp_subgroup(G, torsion) : ElementSet::singleton(e);
  std::size_t torsion_support = 0;
  for (const auto& g : torsion) torsion_support = std::max(torsion_support, g.coords().size());

  std::vector<ElementSet> F{ElementSet::singleton(e)};
  std::vector<std::vector<GroupElement>> C;
  std::vector<ScheduleEntry> schedule;
  Count c_product = 1;

  for (int n = 0; n < depth; ++n) {
    const ElementSet& Fn = F.back();
    const int k = profile[static_cast<std::size_t>(n)];
    C.push_back(choose_C(G, Fn, n + 1, k, options));
    const ElementSet Cset = ElementSet::of(G, C.back());
    c_product *= k;

    const ElementSet Finv = inverse(Fn);
    const ElementSet FC = product(Fn, Cset);
    const ElementSet left = product(product(product(Finv, Fn), Fn), Cset);
    ElementSet base = set_union(left, ElementSet::singleton(e));
    if (!G.abelian()) base = set_union(base, product(product(product(Fn, Finv), Fn), Cset));
    const std::int64_t scan = 10 * set_extent(FC) + 10;
    for (const auto& g : infinite) {
      if (auto l = least_escape_exponent(g, FC, FC, nullptr, scan))
        base = set_union(base, translate(power(g, *l), FC));
    }

    const Count& left_size = left.size();
    const Count min_size = Count(k) * Fn.size() + 1;
    auto big_enough = [&](const ElementSet& s) {
      const Count size = s.size();
      if (size <= left_size || size < min_size) return false;
      if (n + 1 == depth && Rational(size) / Rational(c_product) < options.growth_threshold)
        return false;
      return true;
    };

    ElementSet next(G);
    switch (G.kind()) {
      case GroupKind::integer_lattice: {
        auto box = bounding_box(base);
        next = ElementSet::box(G, box);
        while (!big_enough(next)) {
          box[0].hi = checked_add(box[0].hi, std::max<std::int64_t>(1, box[0].hi - box[0].lo + 1));
          next = ElementSet::box(G, box);
        }
        break;
      }
      case GroupKind::finite_sum: {
        std::size_t K = std::max(coordinate_support(base), torsion_support);
        next = ElementSet::coordinate_subgroup(G, K);
        while (!big_enough(next)) next = ElementSet::coordinate_subgroup(G, ++K);
        break;
      }
      case GroupKind::lamplighter: {
        next = product(lamps, base);
        std::int64_t top = shift_range(next).second;
        while (!big_enough(next)) {
          const GroupElement step(G, {checked_add(top, 1)});
          next = set_union(next, translate(lamps, step));
          ++top;
        }
        break;
      }
    }
    F.push_back(std::move(next));

    const ElementSet& Fnext = F.back();
    const std::int64_t bound = 10 * set_extent(Fnext) + 10;
    for (const auto& g : infinite)
      if (auto l = least_escape_exponent(g, FC, FC, &Fnext, bound))
        schedule.push_back({g, n, CertificateKind::triangle, *l});
    for (const auto& g : torsion)
      if (translate(g, Fnext) == Fnext) schedule.push_back({g, n + 1, CertificateKind::square, {}});
  }

  auto certified = [&](const GroupElement& g) {
    return std::any_of(schedule.begin(), schedule.end(),
                       [&](const ScheduleEntry& s) { return s.element == g; });
  };
  std::vector<ScheduleEntry> deferred;
  for (const auto* list : {&infinite, &torsion})
    for (const auto& g : *list)
      if (!certified(g)) deferred.push_back({g, depth, CertificateKind::deferred, {}});
  schedule.insert(schedule.end(), deferred.begin(), deferred.end());

  return CFSequence(G, std::move(F), std::move(C), std::move(schedule));
}

}  // namespace cfmix
