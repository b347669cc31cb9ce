#include "cfmix/verify.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cfmix/errors.hpp"
#include "checked.hpp"

namespace cfmix {

namespace {

using detail::ceil_div;
using detail::checked_sub;
using detail::floor_div;

CheckResult fail(std::vector<GroupElement> witness, std::string detail) {
  return {false, std::move(witness), std::nullopt, std::move(detail)};
}

CheckResult pass(std::string detail = {}) { return {true, {}, std::nullopt, std::move(detail)}; }

std::string count_string(const Count& c) { return c.str(); }

// l with l * g in [p, q], intersected with `range`.
Interval solve_axis(std::int64_t g, std::int64_t p, std::int64_t q, Interval range) {
  if (p > q) return {1, 0};
  if (g == 0) return (p <= 0 && 0 <= q) ? range : Interval{1, 0};
  Interval r = g > 0 ? Interval{ceil_div(p, g), floor_div(q, g)}
                     : Interval{ceil_div(q, g), floor_div(p, g)};
  return {std::max(r.lo, range.lo), std::min(r.hi, range.hi)};
}

void check_same_group(const CFSequence& seq, const GroupElement& g) {
  if (!(seq.group() == g.group())) throw GroupMismatch("element does not belong to the sequence's group");
}

}  // namespace

bool ConditionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.passed; });
}

std::int64_t set_extent(const ElementSet& s) {
  if (s.empty()) return 0;
  switch (s.group().kind()) {
    case GroupKind::integer_lattice: {
      const auto blocks = s.blocks();
      std::int64_t best = 0;
      for (std::size_t i = 0; i < blocks.front().axes.size(); ++i) {
        std::int64_t lo = std::numeric_limits<std::int64_t>::max();
        std::int64_t hi = std::numeric_limits<std::int64_t>::min();
        for (const auto& b : blocks) {
          lo = std::min(lo, b.axes[i].lo);
          hi = std::max(hi, b.axes[i].hi);
        }
        best = std::max(best, checked_sub(hi, lo) + 1);
      }
      return best;
    }
    case GroupKind::lamplighter: {
      std::int64_t lo = std::numeric_limits<std::int64_t>::max();
      std::int64_t hi = std::numeric_limits<std::int64_t>::min();
      for (const auto& g : s.explicit_elements()) {
        lo = std::min(lo, g.shift());
        hi = std::max(hi, g.shift());
      }
      return hi - lo + 1;
    }
    case GroupKind::finite_sum:
      return 1;
  }
  return 0;
}

std::optional<std::int64_t> least_escape_exponent(const GroupElement& g, const ElementSet& S,
                                                  const ElementSet& T, const ElementSet* inside,
                                                  std::int64_t bound) {
  if (bound < 1) return std::nullopt;
  const bool lattice_fast = g.group().kind() == GroupKind::integer_lattice &&
                            (inside == nullptr || inside->part_count() <= 1);
  if (lattice_fast) {
    if (S.empty()) return 1;
    const auto gc = g.coords();
    Interval good{1, bound};
    if (inside != nullptr) {
      if (inside->empty()) return std::nullopt;
      const Block& q = inside->blocks().front();
      for (const auto& a : S.blocks()) {
        for (std::size_t i = 0; i < gc.size(); ++i)
          good = solve_axis(gc[i], checked_sub(q.axes[i].lo, a.axes[i].lo),
                            checked_sub(q.axes[i].hi, a.axes[i].hi), good);
        if (good.empty()) return std::nullopt;
      }
    }
    std::vector<Interval> bad;
    for (const auto& a : S.blocks()) {
      for (const auto& b : T.blocks()) {
        Interval r = good;
        for (std::size_t i = 0; i < gc.size() && !r.empty(); ++i)
          r = solve_axis(gc[i], checked_sub(b.axes[i].lo, a.axes[i].hi),
                         checked_sub(b.axes[i].hi, a.axes[i].lo), r);
        if (!r.empty()) bad.push_back(r);
      }
    }
    std::sort(bad.begin(), bad.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    std::int64_t l = good.lo;
    for (const auto& r : bad) {
      if (r.lo > l) break;
      if (r.hi >= l) l = r.hi + 1;
    }
    if (l > good.hi) return std::nullopt;
    return l;
  }
  GroupElement step = g;
  for (std::int64_t l = 1; l <= bound; ++l, step = compose(step, g)) {
    const ElementSet moved = translate(step, S);
    if (intersects(moved, T)) continue;
    if (inside != nullptr && !is_subset(moved, *inside)) continue;
    return l;
  }
  return std::nullopt;
}

ConditionReport verify_basic(const CFSequence& seq, int n) {
  if (n < 0 || n > seq.depth()) throw std::out_of_range("verify_basic: level out of range");
  ConditionReport report;
  report.level = n;
  const Group& G = seq.group();
  const ElementSet& F = seq.F(n);
  const GroupElement e = identity(G);

  if (!F.contains(e)) {
    report.checks["basic1"] = fail({e}, "identity not in F_" + std::to_string(n));
  } else if (n >= 1 && seq.c_count(n) <= 1) {
    const auto c = seq.C(n);
    report.checks["basic1"] = fail({c.begin(), c.end()}, "#C_" + std::to_string(n) + " <= 1");
  } else {
    report.checks["basic1"] = pass();
  }
  if (n == seq.depth()) return report;

  const ElementSet& next = seq.F(n + 1);
  const ElementSet grown = product(product(product(inverse(F), F), F), seq.C_set(n + 1));
  if (auto x = escaping_element(grown, next)) {
    report.checks["basic2"] = fail({*x}, "F^-1 F F C escapes F_" + std::to_string(n + 1));
  } else if (grown.size() == next.size()) {
    report.checks["basic2"] =
        fail({}, "F^-1 F F C equals F_" + std::to_string(n + 1) + "; inclusion is not strict");
  } else {
    report.checks["basic2"] =
        pass(count_string(grown.size()) + " < " + count_string(next.size()));
  }

  const auto C = seq.C(n + 1);
  std::vector<ElementSet> shifted;
  shifted.reserve(C.size());
  for (const auto& c : C) shifted.push_back(translate(F, c));
  CheckResult disjoint = pass();
  for (std::size_t i = 0; i < C.size() && disjoint.passed; ++i)
    for (std::size_t j = i + 1; j < C.size(); ++j) {
      if (auto x = common_element(shifted[i], shifted[j])) {
        const Count overlap = set_intersection(shifted[i], shifted[j]).size();
        disjoint = fail({C[i], C[j], *x}, "F c and F c' share " + count_string(overlap) + " elements");
        break;
      }
    }
  report.checks["basic3"] = std::move(disjoint);
  return report;
}

ConditionReport verify_mixing(const CFSequence& seq, int n) {
  if (n < 0 || n >= seq.depth()) throw std::out_of_range("verify_mixing: level out of range");
  ConditionReport report;
  report.level = n;
  const ElementSet& F = seq.F(n);
  const ElementSet Finv = inverse(F);
  const auto C = seq.C(n + 1);

  const ElementSet grown = product(product(product(F, Finv), F), seq.C_set(n + 1));
  if (auto x = escaping_element(grown, seq.F(n + 1)))
    report.checks["mix-i"] = fail({*x}, "F F^-1 F C escapes F_" + std::to_string(n + 1));
  else
    report.checks["mix-i"] = pass();

  // Entry 0 is F F^-1 with no labels.
  struct Labeled {
    std::vector<GroupElement> label;
    ElementSet set;
  };
  std::vector<Labeled> sets;
  sets.push_back({{}, product(F, Finv)});
  for (const auto& c1 : C)
    for (const auto& c2 : C) {
      if (c1 == c2) continue;
      sets.push_back({{c1, c2}, product(translate(F, compose(c1, inverse(c2))), Finv)});
    }
  CheckResult disjoint = pass();
  for (std::size_t i = 0; i < sets.size() && disjoint.passed; ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (auto x = common_element(sets[i].set, sets[j].set)) {
        std::vector<GroupElement> w = sets[i].label;
        w.insert(w.end(), sets[j].label.begin(), sets[j].label.end());
        w.push_back(*x);
        disjoint = fail(std::move(w), i == 0 ? "F c1 c2^-1 F^-1 meets F F^-1"
                                             : "F c1 c2^-1 F^-1 meets F c1' c2'^-1 F^-1");
        break;
      }
    }
  report.checks["mix-ii"] = std::move(disjoint);

  const std::size_t k = seq.c_count(n + 1);
  const std::size_t prev = n == 0 ? 1 : seq.c_count(n);
  std::ostringstream detail;
  detail << "#C_" << n + 1 << " = " << k << ", previous " << prev;
  if (k > prev)
    report.checks["mix-iii"] = pass(detail.str());
  else
    report.checks["mix-iii"] = fail({}, detail.str() + "; #C_n must increase");
  return report;
}

GrowthReport verify_growth(const CFSequence& seq, const Rational& threshold) {
  GrowthReport report;
  report.threshold = threshold;
  for (int n = 0; n <= seq.depth(); ++n)
    report.ratios.push_back(Rational(seq.F(n).size()) / Rational(seq.c_product(n)));
  report.passed = true;
  for (std::size_t i = 1; i < report.ratios.size(); ++i)
    if (report.ratios[i] <= report.ratios[i - 1]) {
      report.passed = false;
      report.detail = "ratio does not increase at level " + std::to_string(i);
      return report;
    }
  if (report.ratios.back() < threshold) {
    report.passed = false;
    report.detail = "final ratio " + report.ratios.back().str() + " below threshold " + threshold.str();
  }
  return report;
}

bool triangle_holds(const CFSequence& seq, const GroupElement& g, int n, std::int64_t l) {
  check_same_group(seq, g);
  if (n < 0 || n >= seq.depth()) throw std::out_of_range("triangle_holds: level out of range");
  const ElementSet moved = translate(power(g, l), seq.FC(n));
  return !intersects(moved, seq.FC(n)) && is_subset(moved, seq.F(n + 1));
}

std::int64_t default_triangle_bound(const CFSequence& seq, int n) {
  return 10 * set_extent(seq.F(n + 1)) + 10;
}

std::optional<std::int64_t> verify_triangle(const CFSequence& seq, const GroupElement& g, int n,
                                            std::int64_t bound) {
  check_same_group(seq, g);
  if (n < 0 || n >= seq.depth()) throw std::out_of_range("verify_triangle: level out of range");
  if (element_order(g)) throw OrderMismatch("verify_triangle: " + g.to_string() + " has finite order");
  if (bound <= 0) bound = default_triangle_bound(seq, n);
  return least_escape_exponent(g, seq.FC(n), seq.FC(n), &seq.F(n + 1), bound);
}

CheckResult verify_square(const CFSequence& seq, const GroupElement& g, int n) {
  check_same_group(seq, g);
  if (!element_order(g)) throw OrderMismatch("verify_square: " + g.to_string() + " has infinite order");
  const ElementSet& F = seq.F(n);
  const ElementSet moved = translate(g, F);
  if (auto x = escaping_element(moved, F)) return fail({g, *x}, "g F_n leaves F_n");
  return pass();
}

std::vector<ConditionReport> verify_schedule(const CFSequence& seq) {
  std::vector<ConditionReport> out(static_cast<std::size_t>(seq.depth()) + 1);
  for (int n = 0; n <= seq.depth(); ++n) out[static_cast<std::size_t>(n)].level = n;
  for (const auto& entry : seq.schedule()) {
    if (entry.level < 0 || entry.level > seq.depth())
      throw std::out_of_range("verify_schedule: entry level out of range");
    auto& report = out[static_cast<std::size_t>(entry.level)];
    const std::string arg = "(" + entry.element.to_string() + ")";
    switch (entry.kind) {
      case CertificateKind::triangle: {
        CheckResult r;
        r.exponent = entry.exponent;
        r.passed = entry.exponent && *entry.exponent > 0 && entry.level < seq.depth() &&
                   !element_order(entry.element) &&
                   triangle_holds(seq, entry.element, entry.level, *entry.exponent);
        if (!r.passed) {
          r.witness = {entry.element};
          r.detail = "certificate does not re-verify";
        }
        report.checks["triangle" + arg] = std::move(r);
        break;
      }
      case CertificateKind::square:
        report.checks["square" + arg] = element_order(entry.element)
                                            ? verify_square(seq, entry.element, entry.level)
                                            : fail({entry.element}, "element has infinite order");
        break;
      case CertificateKind::deferred:
        report.checks["deferred" + arg] = pass("deferred");
        break;
    }
  }
  return out;
}

std::vector<ConditionReport> verify_all(const CFSequence& seq) {
  std::vector<ConditionReport> out = verify_schedule(seq);
  for (int n = 0; n <= seq.depth(); ++n) {
    auto& report = out[static_cast<std::size_t>(n)];
    report.checks.merge(verify_basic(seq, n).checks);
    if (n < seq.depth()) report.checks.merge(verify_mixing(seq, n).checks);
  }
  const GrowthReport growth = verify_growth(seq);
  CheckResult g;
  g.passed = growth.passed;
  g.detail = growth.passed ? "ratio " + growth.ratios.back().str() : growth.detail;
  out.back().checks["growth"] = std::move(g);
  return out;
}

}  // namespace cfmix
