#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "cfmix/group.hpp"
#include "cfmix/rational.hpp"

namespace cfmix {

// Inclusive integer interval; empty when lo > hi.
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const noexcept { return lo > hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// A product set in an abelian catalog group.
//   lattice     one interval per axis
//   finite sum  one residue mask per coordinate (bit r <=> residue r); coordinates past the
//               end of `masks` are {0}
struct Block {
  std::vector<Interval> axes;
  std::vector<std::uint64_t> masks;

  friend bool operator==(const Block&, const Block&) = default;
};

// A finite subset of a catalog group.
//
// Abelian groups use a union of pairwise-disjoint product blocks, which keeps intervals,
// boxes and coordinate subgroups with hundreds of billions of elements cheap to store.
// The lamplighter uses a sorted explicit element list.
class ElementSet {
 public:
  explicit ElementSet(Group group);

  static ElementSet of(Group group, std::span<const GroupElement> elements);
  static ElementSet singleton(const GroupElement& g);
  // Lattice box with the given inclusive interval per axis.
  static ElementSet box(Group group, std::vector<Interval> axes);
  // Finite-sum subgroup of elements supported on the first `coordinates` coordinates.
  static ElementSet coordinate_subgroup(Group group, std::size_t coordinates);
  // Blocks must already be pairwise disjoint; this is not checked.
  static ElementSet from_disjoint_blocks(Group group, std::vector<Block> blocks);

  const Group& group() const noexcept { return group_; }
  bool structured() const noexcept { return std::holds_alternative<Blocks>(rep_); }
  std::span<const Block> blocks() const;
  std::span<const GroupElement> explicit_elements() const;

  bool empty() const noexcept;
  Count size() const;
  // Number of blocks (structured) or elements (explicit).
  std::size_t part_count() const noexcept;
  bool contains(const GroupElement& g) const;
  // Index of the part (block or explicit element) holding g.
  std::optional<std::size_t> part_of(const GroupElement& g) const;

  // Least element in coordinate order; nullopt when empty.
  std::optional<GroupElement> min_element() const;
  // All elements; throws std::length_error when there are more than `limit`.
  std::vector<GroupElement> elements(std::size_t limit = 1'000'000) const;

  // Uniform element of the given part (block or explicit element).
  GroupElement sample_part(std::size_t part, std::mt19937_64& rng) const;
  Count part_size(std::size_t part) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b);

 private:
  using Blocks = std::vector<Block>;
  using Explicit = std::vector<GroupElement>;

  ElementSet(Group group, Blocks blocks);
  ElementSet(Group group, Explicit elements);
  void build_index();

  friend ElementSet product(const ElementSet&, const ElementSet&);
  friend ElementSet product_disjoint(const ElementSet&, const ElementSet&);
  friend ElementSet inverse(const ElementSet&);
  friend ElementSet translate(const GroupElement&, const ElementSet&);
  friend ElementSet translate(const ElementSet&, const GroupElement&);
  friend ElementSet set_union(const ElementSet&, const ElementSet&);
  friend ElementSet set_intersection(const ElementSet&, const ElementSet&);
  friend ElementSet set_difference(const ElementSet&, const ElementSet&);
  friend std::optional<GroupElement> common_element(const ElementSet&, const ElementSet&);
  friend bool is_subset(const ElementSet&, const ElementSet&);

  Group group_;
  std::variant<Blocks, Explicit> rep_;
  // Lattice only: prefix maximum of axes[0].hi over blocks sorted by axes[0].lo.
  std::vector<std::int64_t> prefix_max_hi_;
};

// A * B = {ab}.
ElementSet product(const ElementSet& a, const ElementSet& b);
// A * B when the caller knows the products ab are pairwise distinct (for instance F_n C_{n+1}
// under the disjointness condition); skips the disjointness pass.
ElementSet product_disjoint(const ElementSet& a, const ElementSet& b);
// A^-1 = {a^-1}.
ElementSet inverse(const ElementSet& a);
// gA and Ag.
ElementSet translate(const GroupElement& g, const ElementSet& a);
ElementSet translate(const ElementSet& a, const GroupElement& g);

ElementSet set_union(const ElementSet& a, const ElementSet& b);
ElementSet set_intersection(const ElementSet& a, const ElementSet& b);
ElementSet set_difference(const ElementSet& a, const ElementSet& b);

// Least element of the intersection, if any.
std::optional<GroupElement> common_element(const ElementSet& a, const ElementSet& b);
// Least element of a \ b, if any.
std::optional<GroupElement> escaping_element(const ElementSet& a, const ElementSet& b);
bool is_subset(const ElementSet& a, const ElementSet& b);
inline bool intersects(const ElementSet& a, const ElementSet& b) {
  return common_element(a, b).has_value();
}

}  // namespace cfmix
