#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cfmix/element_set.hpp"
#include "cfmix/group.hpp"
#include "cfmix/rational.hpp"

namespace cfmix {

enum class CertificateKind { triangle, square, deferred };

// One discharged (or deferred) per-element obligation.
//   triangle  g^exponent F_n C_{n+1} lies in F_{n+1} and misses F_n C_{n+1}
//   square    g F_n = F_n
//   deferred  no certificate was found within the built depth
struct ScheduleEntry {
  GroupElement element;
  int level = 0;
  CertificateKind kind = CertificateKind::deferred;
  std::optional<std::int64_t> exponent;

  friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

// Tower data (F_0, ..., F_N) and (C_1, ..., C_N).
//
// The constructor checks only the shape: F_0 = {identity}, every set in the same group,
// no repeated element inside a C_n. Whether the conditions of the construction hold is
// what the verifiers report.
class CFSequence {
 public:
  CFSequence(Group group, std::vector<ElementSet> F, std::vector<std::vector<GroupElement>> C,
             std::vector<ScheduleEntry> schedule = {});

  const Group& group() const noexcept { return group_; }
  int depth() const noexcept { return static_cast<int>(C_.size()); }

  const ElementSet& F(int n) const;
  // C_n for 1 <= n <= depth, in construction order (tail indices refer to this order).
  std::span<const GroupElement> C(int n) const;
  const ElementSet& C_set(int n) const;
  std::size_t c_count(int n) const { return C(n).size(); }
  // F_n C_{n+1}.
  const ElementSet& FC(int n) const;

  // #C_1 ... #C_n (1 for n = 0).
  const Count& c_product(int n) const;
  // mu([f]_n) = 1 / (#C_1 ... #C_n).
  Rational cylinder_measure(int n) const;

  const std::vector<ScheduleEntry>& schedule() const noexcept { return schedule_; }

 private:
  Group group_;
  std::vector<ElementSet> F_;
  std::vector<std::vector<GroupElement>> C_;
  std::vector<ElementSet> C_sets_;
  std::vector<ElementSet> FC_;
  std::vector<Count> c_products_;
  std::vector<ScheduleEntry> schedule_;
};

}  // namespace cfmix
