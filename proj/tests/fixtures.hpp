#pragma once

#include <map>

#include "cfmix/builder.hpp"
#include "oracles.hpp"

namespace fixtures {

inline cfmix::Group z1() { return cfmix::Group(cfmix::GroupDescriptor::integer_lattice(1)); }
inline cfmix::Group z2() { return cfmix::Group(cfmix::GroupDescriptor::integer_lattice(2)); }
inline cfmix::Group sum23() { return cfmix::Group(cfmix::GroupDescriptor::finite_sum({}, {2, 3})); }
inline cfmix::Group sum2() { return cfmix::Group(cfmix::GroupDescriptor::finite_sum({}, {2})); }
inline cfmix::Group lamp2() { return cfmix::Group(cfmix::GroupDescriptor::lamplighter(2)); }

// Reference builds, built once per test binary.
inline const cfmix::CFSequence& z1_depth(int depth) {
  static std::map<int, cfmix::CFSequence> cache;
  auto it = cache.find(depth);
  if (it == cache.end())
    it = cache.emplace(depth, cfmix::build_sequence(z1(), depth, cfmix::default_growth_profile(depth)))
             .first;
  return it->second;
}

inline const cfmix::CFSequence& z2_depth6() {
  static const auto seq = cfmix::build_sequence(z2(), 6, cfmix::default_growth_profile(6));
  return seq;
}

inline const cfmix::CFSequence& sum23_depth6() {
  static const auto seq = cfmix::build_sequence(sum23(), 6, cfmix::default_growth_profile(6));
  return seq;
}

inline const cfmix::CFSequence& lamp2_depth2() {
  static const auto seq = [] {
    cfmix::BuildOptions o;
    o.obligations = 8;
    return cfmix::build_sequence(lamp2(), 2, {2, 3}, o);
  }();
  return seq;
}

}  // namespace fixtures
