#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cfmix/cf_sequence.hpp"

namespace cfmix {

struct CheckResult {
  bool passed = true;
  // Offending tuple on failure (for instance c, c', common element); empty on success.
  std::vector<GroupElement> witness;
  // l_n for a passing triangle check.
  std::optional<std::int64_t> exponent;
  std::string detail;
};

// Check names: basic1, basic2, basic3, growth, mix-i, mix-ii, mix-iii, triangle(g), square(g).
struct ConditionReport {
  int level = 0;
  std::map<std::string, CheckResult> checks;

  bool passed() const;
};

// basic1: identity in F_n and #C_n > 1 (n >= 1).
// basic2: F_n^-1 F_n F_n C_{n+1} is a proper subset of F_{n+1} (n < depth).
// basic3: the sets F_n c, c in C_{n+1}, are pairwise disjoint (n < depth).
ConditionReport verify_basic(const CFSequence& seq, int n);

// mix-i:   F_n F_n^-1 F_n C_{n+1} is a subset of F_{n+1}
// mix-ii:  F_n c1 c2^-1 F_n^-1 over ordered pairs c1 != c2 of C_{n+1}, together with
//          F_n F_n^-1, are pairwise disjoint
// mix-iii: #C_{n+1} > #C_n (and #C_1 > 1 at n = 0)
// Requires n < depth.
ConditionReport verify_mixing(const CFSequence& seq, int n);

struct GrowthReport {
  // r_n = #F_n / (#C_1 ... #C_n), n = 0..depth.
  std::vector<Rational> ratios;
  Rational threshold;
  bool passed = false;
  std::string detail;
};

// Passes when r_n strictly increases and the last ratio reaches `threshold`.
GrowthReport verify_growth(const CFSequence& seq, const Rational& threshold = 2);

// Whether g^l F_n C_{n+1} lies in F_{n+1} and misses F_n C_{n+1}.
bool triangle_holds(const CFSequence& seq, const GroupElement& g, int n, std::int64_t l);

// Default exponent bound: 10 * (diameter of F_{n+1}) + 10.
std::int64_t default_triangle_bound(const CFSequence& seq, int n);

// Least l in [1, bound] with triangle_holds; nullopt when none. bound <= 0 uses the default.
// Throws OrderMismatch when g has finite order.
std::optional<std::int64_t> verify_triangle(const CFSequence& seq, const GroupElement& g, int n,
                                            std::int64_t bound = 0);

// Exact test g F_n = F_n; a failure carries an element of g F_n outside F_n.
// Throws OrderMismatch when g has infinite order.
CheckResult verify_square(const CFSequence& seq, const GroupElement& g, int n);

// Re-verifies every triangle/square entry of the schedule, one report per level 0..depth.
// Deferred entries are listed as passing with detail "deferred".
std::vector<ConditionReport> verify_schedule(const CFSequence& seq);

// Per level 0..depth: verify_basic, verify_mixing (n < depth) and the schedule certificates;
// the growth check is attached to the last level.
std::vector<ConditionReport> verify_all(const CFSequence& seq);

// Least l >= 1, l <= bound, such that g^l S misses T and, when given, lies inside `inside`.
std::optional<std::int64_t> least_escape_exponent(const GroupElement& g, const ElementSet& S,
                                                  const ElementSet& T,
                                                  const ElementSet* inside,
                                                  std::int64_t bound);

// Largest coordinate spread of a set (lattice bounding-box width, lamplighter shift span,
// 1 for finite sums); 0 when empty.
std::int64_t set_extent(const ElementSet& s);

}  // namespace cfmix
