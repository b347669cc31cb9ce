#include "cfmix/cf_sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cfmix/errors.hpp"

namespace cfmix {

CFSequence::CFSequence(Group group, std::vector<ElementSet> F,
                       std::vector<std::vector<GroupElement>> C,
                       std::vector<ScheduleEntry> schedule)
    : group_(std::move(group)), F_(std::move(F)), C_(std::move(C)), schedule_(std::move(schedule)) {
  if (F_.size() != C_.size() + 1)
    throw std::invalid_argument("CFSequence: need exactly one more F than C");
  for (const auto& f : F_)
    if (!(f.group() == group_)) throw GroupMismatch("CFSequence: F set from another group");
  if (!(F_[0] == ElementSet::singleton(identity(group_))))
    throw std::invalid_argument("CFSequence: F_0 must be {identity}");

  c_products_.push_back(1);
  for (std::size_t i = 0; i < C_.size(); ++i) {
    const auto& c = C_[i];
    if (c.empty()) throw std::invalid_argument("CFSequence: empty C_" + std::to_string(i + 1));
    for (const auto& x : c)
      if (!(x.group() == group_)) throw GroupMismatch("CFSequence: C element from another group");
    C_sets_.push_back(ElementSet::of(group_, c));
    if (C_sets_.back().size() != c.size())
      throw std::invalid_argument("CFSequence: repeated element in C_" + std::to_string(i + 1));
    c_products_.push_back(c_products_.back() * c.size());
    FC_.push_back(product(F_[i], C_sets_.back()));
  }
  for (const auto& e : schedule_)
    if (!(e.element.group() == group_))
      throw GroupMismatch("CFSequence: schedule element from another group");
}

const ElementSet& CFSequence::F(int n) const {
  if (n < 0 || n > depth()) throw std::out_of_range("CFSequence::F: level out of range");
  return F_[static_cast<std::size_t>(n)];
}

std::span<const GroupElement> CFSequence::C(int n) const {
  if (n < 1 || n > depth()) throw std::out_of_range("CFSequence::C: level out of range");
  return C_[static_cast<std::size_t>(n - 1)];
}

const ElementSet& CFSequence::C_set(int n) const {
  if (n < 1 || n > depth()) throw std::out_of_range("CFSequence::C_set: level out of range");
  return C_sets_[static_cast<std::size_t>(n - 1)];
}

const ElementSet& CFSequence::FC(int n) const {
  if (n < 0 || n >= depth()) throw std::out_of_range("CFSequence::FC: level out of range");
  return FC_[static_cast<std::size_t>(n)];
}

const Count& CFSequence::c_product(int n) const {
  if (n < 0 || n > depth()) throw std::out_of_range("CFSequence::c_product: level out of range");
  return c_products_[static_cast<std::size_t>(n)];
}

Rational CFSequence::cylinder_measure(int n) const { return Rational(1) / Rational(c_product(n)); }

}  // namespace cfmix
