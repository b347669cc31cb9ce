#pragma once

#include <nlohmann/json.hpp>

#include "cfmix/cf_sequence.hpp"
#include "cfmix/cf_space.hpp"
#include "cfmix/poisson.hpp"
#include "cfmix/verify.hpp"

// JSON forms. Elements are canonical coordinate arrays. Sets are either
//   {"elements": [[...], ...]}                                   (lamplighter)
//   {"blocks": [{"axes": [[lo, hi], ...]}, ...]}                 (lattice boxes, inclusive)
//   {"blocks": [{"residues": [[r, ...], ...]}, ...]}             (finite sums; residue lists
//                                                                 per coordinate, {0} beyond)
// Parsers throw std::invalid_argument on malformed input.
namespace cfmix {

inline constexpr int kSchemaVersion = 1;

nlohmann::json descriptor_to_json(const GroupDescriptor& d);
GroupDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const GroupElement& g);
GroupElement element_from_json(const Group& group, const nlohmann::json& j);

nlohmann::json set_to_json(const ElementSet& s);
// Blocks must be pairwise disjoint.
ElementSet set_from_json(const Group& group, const nlohmann::json& j);

nlohmann::json sequence_to_json(const CFSequence& seq);
CFSequence sequence_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ConditionReport& r);

nlohmann::json window_to_json(const Window& w);
// Accepts {"level", "words"}, {"cylinders": [{"level", "word"}, ...]} or {"tower_level": n}.
Window window_from_json(const CFSequence& seq, const nlohmann::json& j);

nlohmann::json configuration_to_json(const CFSequence& seq, const Configuration& c);
Configuration configuration_from_json(const CFSequence& seq, const nlohmann::json& j);

}  // namespace cfmix
