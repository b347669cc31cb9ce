#include "cfmix/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cfmix/errors.hpp"
#include "checked.hpp"

namespace cfmix {

using detail::checked_add;
using detail::checked_mul;
using detail::mod;

GroupDescriptor GroupDescriptor::integer_lattice(int dimension) {
  if (dimension < 1) throw std::invalid_argument("integer lattice dimension must be >= 1");
  GroupDescriptor d;
  d.kind_ = GroupKind::integer_lattice;
  d.dimension_ = dimension;
  return d;
}

GroupDescriptor GroupDescriptor::finite_sum(std::vector<int> prefix, std::vector<int> period) {
  if (period.empty()) throw std::invalid_argument("finite sum needs a nonempty repeating period");
  for (int m : prefix)
    if (m < 2 || m > 64) throw std::invalid_argument("finite sum orders must lie in [2, 64]");
  for (int m : period)
    if (m < 2 || m > 64) throw std::invalid_argument("finite sum orders must lie in [2, 64]");
  GroupDescriptor d;
  d.kind_ = GroupKind::finite_sum;
  d.prefix_ = std::move(prefix);
  d.period_ = std::move(period);
  return d;
}

GroupDescriptor GroupDescriptor::lamplighter(int base) {
  if (base < 2 || base > 64) throw std::invalid_argument("lamplighter base must lie in [2, 64]");
  GroupDescriptor d;
  d.kind_ = GroupKind::lamplighter;
  d.base_ = base;
  return d;
}

int GroupDescriptor::order_at(std::size_t coordinate) const {
  if (kind_ != GroupKind::finite_sum) throw std::logic_error("order_at: not a finite sum");
  if (coordinate < prefix_.size()) return prefix_[coordinate];
  return period_[(coordinate - prefix_.size()) % period_.size()];
}

std::string GroupDescriptor::name() const {
  std::ostringstream os;
  switch (kind_) {
    case GroupKind::integer_lattice:
      os << "Z^" << dimension_;
      break;
    case GroupKind::finite_sum: {
      os << "FiniteSum(";
      bool first = true;
      for (int m : prefix_) {
        os << (first ? "" : ",") << m;
        first = false;
      }
      os << (first ? "" : ";") << "repeat ";
      for (std::size_t i = 0; i < period_.size(); ++i) os << (i ? "," : "") << period_[i];
      os << ")";
      break;
    }
    case GroupKind::lamplighter:
      os << "Lamplighter(" << base_ << ")";
      break;
  }
  return os.str();
}

Group::Group(GroupDescriptor descriptor)
    : descriptor_(std::make_shared<const GroupDescriptor>(std::move(descriptor))) {}

namespace {

void trim_trailing_zeros(std::vector<std::int64_t>& v, std::size_t keep) {
  while (v.size() > keep && v.back() == 0) v.pop_back();
}

// Builds canonical lamplighter coordinates from a dense lamp array.
std::vector<std::int64_t> lamplighter_coords(std::int64_t shift, std::int64_t offset,
                                             std::span<const std::int64_t> values, int m) {
  std::size_t lo = 0;
  std::size_t hi = values.size();
  auto val = [&](std::size_t i) { return mod(values[i], m); };
  while (lo < hi && val(lo) == 0) ++lo;
  while (hi > lo && val(hi - 1) == 0) --hi;
  std::vector<std::int64_t> out{shift};
  if (lo == hi) return out;
  out.reserve(2 + (hi - lo));
  out.push_back(checked_add(offset, static_cast<std::int64_t>(lo)));
  for (std::size_t i = lo; i < hi; ++i) out.push_back(val(i));
  return out;
}

std::vector<std::int64_t> canonicalize(const GroupDescriptor& d, std::vector<std::int64_t> c) {
  switch (d.kind()) {
    case GroupKind::integer_lattice:
      if (c.size() != static_cast<std::size_t>(d.dimension()))
        throw GroupMismatch("lattice element has wrong dimension for " + d.name());
      return c;
    case GroupKind::finite_sum:
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(c[i], d.order_at(i));
      trim_trailing_zeros(c, 0);
      return c;
    case GroupKind::lamplighter: {
      if (c.empty()) throw GroupMismatch("lamplighter element needs a shift coordinate");
      if (c.size() == 1) return c;
      if (c.size() == 2) throw GroupMismatch("lamplighter element has an offset but no lamps");
      return lamplighter_coords(c[0], c[1], std::span(c).subspan(2), d.lamp_order());
    }
  }
  return c;
}

void require_same_group(const GroupElement& a, const GroupElement& b) {
  if (!(a.group() == b.group()))
    throw GroupMismatch("elements belong to different groups: " + a.group().descriptor().name() +
                        " vs " + b.group().descriptor().name());
}

std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

GroupElement::GroupElement(Group group, std::vector<std::int64_t> coords)
    : group_(std::move(group)), coords_(canonicalize(group_.descriptor(), std::move(coords))) {}

bool GroupElement::is_identity() const noexcept {
  switch (group_.kind()) {
    case GroupKind::integer_lattice:
      return std::all_of(coords_.begin(), coords_.end(), [](auto x) { return x == 0; });
    case GroupKind::finite_sum:
      return coords_.empty();
    case GroupKind::lamplighter:
      return coords_.size() == 1 && coords_[0] == 0;
  }
  return false;
}

std::int64_t GroupElement::shift() const {
  if (group_.kind() != GroupKind::lamplighter) throw std::logic_error("shift: not a lamplighter");
  return coords_[0];
}

std::int64_t GroupElement::lamp(std::int64_t position) const {
  if (group_.kind() != GroupKind::lamplighter) throw std::logic_error("lamp: not a lamplighter");
  if (coords_.size() < 3) return 0;
  const std::int64_t idx = position - coords_[1];
  if (idx < 0 || idx >= static_cast<std::int64_t>(coords_.size() - 2)) return 0;
  return coords_[static_cast<std::size_t>(idx) + 2];
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  switch (group_.kind()) {
    case GroupKind::integer_lattice:
      if (coords_.size() == 1) {
        os << coords_[0];
        break;
      }
      [[fallthrough]];
    case GroupKind::finite_sum:
      os << "(";
      if (coords_.empty()) os << "0";
      for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
      os << ")";
      break;
    case GroupKind::lamplighter:
      os << "(" << coords_[0];
      if (coords_.size() > 2) {
        os << "; lamps@" << coords_[1] << ":";
        for (std::size_t i = 2; i < coords_.size(); ++i) os << coords_[i];
      }
      os << ")";
      break;
  }
  return os.str();
}

GroupElement identity(const Group& group) {
  switch (group.kind()) {
    case GroupKind::integer_lattice:
      return GroupElement(group,
                          std::vector<std::int64_t>(
                              static_cast<std::size_t>(group.descriptor().dimension()), 0));
    case GroupKind::finite_sum:
      return GroupElement(group, {});
    case GroupKind::lamplighter:
      return GroupElement(group, {0});
  }
  throw std::logic_error("unknown group kind");
}

GroupElement lamplighter_element(const Group& group, std::int64_t shift, std::int64_t offset,
                                 std::span<const std::int64_t> values) {
  if (group.kind() != GroupKind::lamplighter)
    throw GroupMismatch("lamplighter_element on " + group.descriptor().name());
  return GroupElement(group,
                      lamplighter_coords(shift, offset, values, group.descriptor().lamp_order()));
}

namespace {

// (l1, t1)(l2, t2) = (l1 + l2(. - t1), t1 + t2)
GroupElement lamplighter_compose(const GroupElement& a, const GroupElement& b) {
  const auto ca = a.coords();
  const auto cb = b.coords();
  const std::int64_t t1 = ca[0];
  const std::int64_t t2 = cb[0];
  const std::int64_t shift = checked_add(t1, t2);
  const bool a_lit = ca.size() > 2;
  const bool b_lit = cb.size() > 2;
  if (!a_lit && !b_lit) return GroupElement(a.group(), {shift});
  const int m = a.group().descriptor().lamp_order();

  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  if (a_lit) {
    lo = std::min(lo, ca[1]);
    hi = std::max(hi, ca[1] + static_cast<std::int64_t>(ca.size() - 2));
  }
  const std::int64_t b_off = b_lit ? checked_add(cb[1], t1) : 0;
  if (b_lit) {
    lo = std::min(lo, b_off);
    hi = std::max(hi, b_off + static_cast<std::int64_t>(cb.size() - 2));
  }
  std::vector<std::int64_t> dense(static_cast<std::size_t>(hi - lo), 0);
  if (a_lit)
    for (std::size_t i = 2; i < ca.size(); ++i)
      dense[static_cast<std::size_t>(ca[1] - lo) + i - 2] += ca[i];
  if (b_lit)
    for (std::size_t i = 2; i < cb.size(); ++i)
      dense[static_cast<std::size_t>(b_off - lo) + i - 2] += cb[i];
  return GroupElement(a.group(), lamplighter_coords(shift, lo, dense, m));
}

}  // namespace

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  const auto& d = a.group().descriptor();
  switch (d.kind()) {
    case GroupKind::integer_lattice: {
      std::vector<std::int64_t> c(a.coords().begin(), a.coords().end());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(c[i], b.coords()[i]);
      return GroupElement(a.group(), std::move(c));
    }
    case GroupKind::finite_sum: {
      const auto ca = a.coords();
      const auto cb = b.coords();
      std::vector<std::int64_t> c(std::max(ca.size(), cb.size()), 0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        const std::int64_t x = (i < ca.size() ? ca[i] : 0) + (i < cb.size() ? cb[i] : 0);
        c[i] = x % d.order_at(i);
      }
      return GroupElement(a.group(), std::move(c));
    }
    case GroupKind::lamplighter:
      return lamplighter_compose(a, b);
  }
  throw std::logic_error("unknown group kind");
}

GroupElement inverse(const GroupElement& a) {
  const auto& d = a.group().descriptor();
  const auto ca = a.coords();
  switch (d.kind()) {
    case GroupKind::integer_lattice: {
      std::vector<std::int64_t> c(ca.size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(ca[i], -1);
      return GroupElement(a.group(), std::move(c));
    }
    case GroupKind::finite_sum: {
      std::vector<std::int64_t> c(ca.size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(-ca[i], d.order_at(i));
      return GroupElement(a.group(), std::move(c));
    }
    case GroupKind::lamplighter: {
      // (l, t)^-1 = (-l(. + t), -t)
      const std::int64_t t = ca[0];
      if (ca.size() == 1) return GroupElement(a.group(), {checked_mul(t, -1)});
      std::vector<std::int64_t> values(ca.begin() + 2, ca.end());
      for (auto& v : values) v = -v;
      return GroupElement(a.group(),
                          lamplighter_coords(-t, detail::checked_sub(ca[1], t), values,
                                             d.lamp_order()));
    }
  }
  throw std::logic_error("unknown group kind");
}

GroupElement power(const GroupElement& a, std::int64_t exponent) {
  const auto& d = a.group().descriptor();
  const auto ca = a.coords();
  if (d.kind() == GroupKind::integer_lattice) {
    std::vector<std::int64_t> c(ca.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(ca[i], exponent);
    return GroupElement(a.group(), std::move(c));
  }
  if (d.kind() == GroupKind::finite_sum) {
    std::vector<std::int64_t> c(ca.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::int64_t m = d.order_at(i);
      c[i] = mod(mod(ca[i], m) * mod(exponent, m), m);
    }
    return GroupElement(a.group(), std::move(c));
  }
  GroupElement base = exponent < 0 ? inverse(a) : a;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  GroupElement result = identity(a.group());
  while (e > 0) {
    if (e & 1U) result = compose(result, base);
    e >>= 1U;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

std::optional<std::uint64_t> element_order(const GroupElement& a) {
  const auto& d = a.group().descriptor();
  const auto ca = a.coords();
  switch (d.kind()) {
    case GroupKind::integer_lattice:
      if (a.is_identity()) return 1;
      return std::nullopt;
    case GroupKind::finite_sum: {
      std::uint64_t k = 1;
      for (std::size_t i = 0; i < ca.size(); ++i) {
        const auto m = static_cast<std::uint64_t>(d.order_at(i));
        k = lcm_u(k, m / std::gcd(m, static_cast<std::uint64_t>(ca[i])));
      }
      return k;
    }
    case GroupKind::lamplighter: {
      if (ca[0] != 0) return std::nullopt;
      const auto m = static_cast<std::uint64_t>(d.lamp_order());
      std::uint64_t k = 1;
      for (std::size_t i = 2; i < ca.size(); ++i)
        k = lcm_u(k, m / std::gcd(m, static_cast<std::uint64_t>(ca[i])));
      return k;
    }
  }
  return std::nullopt;
}

namespace {

// Visits shell r of the enumeration in order; the visitor returns false to stop.
bool visit_shell(const Group& group, std::int64_t r,
                 const std::function<bool(GroupElement)>& visit) {
  const auto& d = group.descriptor();
  switch (d.kind()) {
    case GroupKind::integer_lattice: {
      const auto dim = static_cast<std::size_t>(d.dimension());
      if (r == 0) return visit(identity(group));
      const std::uint64_t top = 2 * static_cast<std::uint64_t>(r);
      std::vector<std::uint64_t> code(dim, 0);
      while (true) {
        const bool on_shell = std::any_of(code.begin(), code.end(),
                                          [&](std::uint64_t c) { return c + 1 >= top; });
        if (on_shell) {
          std::vector<std::int64_t> x(dim);
          for (std::size_t i = 0; i < dim; ++i) x[i] = unzigzag(code[i]);
          if (!visit(GroupElement(group, std::move(x)))) return false;
        }
        std::size_t i = dim;
        while (i > 0) {
          --i;
          if (code[i] < top) {
            ++code[i];
            break;
          }
          code[i] = 0;
          if (i == 0) return true;
        }
      }
    }
    case GroupKind::finite_sum: {
      // Shell r holds the elements whose last nonzero coordinate has index r - 1.
      if (r == 0) return visit(identity(group));
      const auto len = static_cast<std::size_t>(r);
      std::vector<std::int64_t> digits(len, 0);
      digits[len - 1] = 1;
      while (true) {
        if (!visit(GroupElement(group, digits))) return false;
        std::size_t i = 0;
        while (true) {
          if (++digits[i] < d.order_at(i)) break;
          digits[i] = 0;
          if (++i == len) return true;
        }
        if (digits[len - 1] == 0) return true;
      }
    }
    case GroupKind::lamplighter: {
      const std::int64_t m = d.lamp_order();
      const std::size_t width = 2 * static_cast<std::size_t>(r) + 1;
      std::uint64_t full = 1;
      std::uint64_t inner = 1;
      for (std::size_t i = 0; i < width; ++i) {
        if (full > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(m))
          throw std::overflow_error("lamplighter shell too large to enumerate");
        full *= static_cast<std::uint64_t>(m);
        if (i + 2 < width) inner *= static_cast<std::uint64_t>(m);
      }
      if (r == 0) inner = 0;
      std::vector<std::int64_t> values(width);
      for (std::uint64_t zt = 0; zt <= 2 * static_cast<std::uint64_t>(r); ++zt) {
        const std::int64_t t = unzigzag(zt);
        const bool inner_shift = t >= -(r - 1) && t <= r - 1;
        for (std::uint64_t code = 0; code < full; ++code) {
          if (inner_shift && code < inner) continue;
          std::uint64_t rest = code;
          std::fill(values.begin(), values.end(), 0);
          for (std::uint64_t k = 0; rest > 0; ++k) {
            const std::int64_t pos = unzigzag(k);
            values[static_cast<std::size_t>(pos + r)] =
                static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(m));
            rest /= static_cast<std::uint64_t>(m);
          }
          if (!visit(lamplighter_element(group, t, -r, values))) return false;
        }
      }
      return true;
    }
  }
  return true;
}

}  // namespace

std::vector<GroupElement> enumerate(const Group& group, std::size_t count) {
  if (count == 0) throw std::invalid_argument("enumerate: count must be >= 1");
  std::vector<GroupElement> out;
  out.reserve(count);
  for (std::int64_t r = 0; out.size() < count; ++r) {
    visit_shell(group, r, [&](GroupElement g) {
      out.push_back(std::move(g));
      return out.size() < count;
    });
  }
  return out;
}

std::int64_t shell_radius(const GroupElement& a) {
  const auto c = a.coords();
  switch (a.group().kind()) {
    case GroupKind::integer_lattice: {
      std::int64_t r = 0;
      for (auto x : c) r = std::max(r, x < 0 ? -x : x);
      return r;
    }
    case GroupKind::finite_sum:
      return static_cast<std::int64_t>(c.size());
    case GroupKind::lamplighter: {
      std::int64_t r = c[0] < 0 ? -c[0] : c[0];
      if (c.size() > 2) {
        const std::int64_t first = c[1];
        const std::int64_t last = c[1] + static_cast<std::int64_t>(c.size()) - 3;
        r = std::max({r, first < 0 ? -first : first, last < 0 ? -last : last});
      }
      return r;
    }
  }
  return 0;
}

std::vector<GroupElement> shell(const Group& group, std::int64_t inner, std::int64_t outer,
                                std::size_t cap) {
  std::vector<GroupElement> out;
  for (std::int64_t r = std::max<std::int64_t>(inner + 1, 0); r <= outer && out.size() < cap;
       ++r) {
    visit_shell(group, r, [&](GroupElement g) {
      out.push_back(std::move(g));
      return out.size() < cap;
    });
  }
  return out;
}

}  // namespace cfmix
