#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cfmix {

enum class GroupKind { integer_lattice, finite_sum, lamplighter };

// Describes one entry of the group catalog:
//   integer_lattice  Z^d
//   finite_sum       direct sum of Z/m_i, orders given as prefix + repeating period
//   lamplighter      Z/m wreath Z
class GroupDescriptor {
 public:
  static GroupDescriptor integer_lattice(int dimension);
  static GroupDescriptor finite_sum(std::vector<int> prefix, std::vector<int> period);
  static GroupDescriptor lamplighter(int base);

  GroupKind kind() const noexcept { return kind_; }
  int dimension() const noexcept { return dimension_; }
  const std::vector<int>& prefix() const noexcept { return prefix_; }
  const std::vector<int>& period() const noexcept { return period_; }
  int lamp_order() const noexcept { return base_; }

  // Order m_i of the i-th cyclic summand (finite_sum only).
  int order_at(std::size_t coordinate) const;

  std::string name() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

 private:
  GroupDescriptor() = default;

  GroupKind kind_ = GroupKind::integer_lattice;
  int dimension_ = 0;
  std::vector<int> prefix_;
  std::vector<int> period_;
  int base_ = 0;
};

// Shared, immutable handle to a descriptor. Cheap to copy.
class Group {
 public:
  explicit Group(GroupDescriptor descriptor);

  const GroupDescriptor& descriptor() const noexcept { return *descriptor_; }
  GroupKind kind() const noexcept { return descriptor_->kind(); }

  // Lattice and finite-sum groups are abelian and use the block set representation.
  bool abelian() const noexcept { return kind() != GroupKind::lamplighter; }

  friend bool operator==(const Group& a, const Group& b) {
    return a.descriptor_ == b.descriptor_ || *a.descriptor_ == *b.descriptor_;
  }

 private:
  std::shared_ptr<const GroupDescriptor> descriptor_;
};

// An element in canonical coordinates:
//   integer_lattice  (x_1, ..., x_d)
//   finite_sum       (r_0, r_1, ...) residues, trailing zeros trimmed
//   lamplighter      (shift) when no lamp is lit, else (shift, offset, l_offset, ..., l_last)
//                    with l_offset and l_last nonzero
class GroupElement {
 public:
  // Validates and canonicalizes the coordinates.
  GroupElement(Group group, std::vector<std::int64_t> coords);

  const Group& group() const noexcept { return group_; }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }
  bool is_identity() const noexcept;

  // Lamplighter accessors.
  std::int64_t shift() const;
  std::int64_t lamp(std::int64_t position) const;

  std::string to_string() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.coords_ == b.coords_ && a.group_ == b.group_;
  }
  // Orders elements of one group lexicographically by coordinates.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  Group group_;
  std::vector<std::int64_t> coords_;
};

GroupElement identity(const Group& group);

// Lamplighter element with the given lamp function (values[i] sits at position offset + i).
GroupElement lamplighter_element(const Group& group, std::int64_t shift, std::int64_t offset,
                                 std::span<const std::int64_t> values);

GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement power(const GroupElement& a, std::int64_t exponent);

// Smallest k >= 1 with a^k = identity; nullopt when a has infinite order.
std::optional<std::uint64_t> element_order(const GroupElement& a);

// Deterministic, prefix-stable, duplicate-free enumeration starting at the identity.
//   integer_lattice  sup-norm shells r = 0, 1, ...; inside a shell vectors are sorted
//                    lexicographically by the zigzag code of each coordinate
//                    (0, 1, -1, 2, -2, ... -> 0, 1, 2, 3, 4, ...)
//   finite_sum       index n maps to its mixed-radix digits (m_0, m_1, ...)
//   lamplighter      shells of the balls {|shift| <= r, lamps inside [-r, r]}; inside a shell
//                    elements are sorted by (zigzag(shift), lamp code), the lamp code being the
//                    base-m number whose digit of weight m^zigzag(p) is the lamp at position p
std::vector<GroupElement> enumerate(const Group& group, std::size_t count);

// Radius of the smallest enumeration shell containing the element (sup-norm on lattices).
std::int64_t shell_radius(const GroupElement& a);

// Elements with shell radius in (inner, outer], in enumeration order, at most `cap` of them.
std::vector<GroupElement> shell(const Group& group, std::int64_t inner, std::int64_t outer,
                                std::size_t cap);

// Zigzag code: 0, 1, -1, 2, -2, ... -> 0, 1, 2, 3, 4, ...
constexpr std::uint64_t zigzag(std::int64_t v) noexcept {
  return v > 0 ? 2 * static_cast<std::uint64_t>(v) - 1 : 2 * static_cast<std::uint64_t>(-v);
}
constexpr std::int64_t unzigzag(std::uint64_t code) noexcept {
  return (code % 2 == 1) ? static_cast<std::int64_t>((code + 1) / 2)
                         : -static_cast<std::int64_t>(code / 2);
}

}  // namespace cfmix
