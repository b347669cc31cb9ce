#pragma once

#include <cstddef>
#include <vector>

#include "cfmix/cf_sequence.hpp"
#include "cfmix/rational.hpp"

namespace cfmix {

struct BuildOptions {
  // Number of leading nonidentity enumerated elements that receive (triangle)/(square)
  // obligations.
  std::size_t obligations = 16;
  // Candidates tried per C_n before giving up with SearchExhausted.
  std::size_t candidate_limit = 4096;
  // Enforce mix-ii while choosing C_n. Groups in which c1 c2^-1 = c2 c1^-1 for all pairs
  // (every element of order 2) cannot satisfy it; they can still be built without it.
  bool require_mixing = true;
  // Minimum final ratio #F_N / (#C_1 ... #C_N).
  Rational growth_threshold = 2;
};

// #C_n = n + 2: 3, 4, 5, ...
std::vector<int> default_growth_profile(int depth);

// Throws std::invalid_argument unless the profile has `depth` entries, each >= 2, nondecreasing.
void validate_growth_profile(int depth, const std::vector<int>& profile);

// Greedy level-by-level construction.
//
// C_{n+1} is picked from a spaced candidate list (lexicographic in enumeration order of the
// spacing pattern, identity first), accepting a candidate when F_n c stays disjoint from the
// earlier translates and, with require_mixing, when every set F_n c1 c2^-1 F_n^-1 stays
// disjoint from the others. F_{n+1} is then the smallest set of the group's shape (lattice box,
// coordinate subgroup, lamp-closed set) containing F_n^-1 F_n F_n C_{n+1},
// F_n F_n^-1 F_n C_{n+1}, the identity and g^l F_n C_{n+1} for each infinite-order obligation,
// enlarged until the inclusion is strict and the growth ratio increases.
//
// Throws SearchExhausted(level, condition) when the candidates run out.
CFSequence build_sequence(const Group& group, int depth, const std::vector<int>& profile,
                          const BuildOptions& options = {});

}  // namespace cfmix
