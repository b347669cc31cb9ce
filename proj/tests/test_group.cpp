#include <gtest/gtest.h>

#include <set>

#include "cfmix/errors.hpp"
#include "cfmix/group.hpp"
#include "oracles.hpp"

using namespace cfmix;

namespace {

Group z(int d) { return Group(GroupDescriptor::integer_lattice(d)); }
Group sum23() { return Group(GroupDescriptor::finite_sum({}, {2, 3})); }
Group sum2() { return Group(GroupDescriptor::finite_sum({}, {2})); }
Group lamp(int m) { return Group(GroupDescriptor::lamplighter(m)); }

GroupElement el(const Group& g, std::vector<std::int64_t> c) { return GroupElement(g, std::move(c)); }

oracle::Coords coords(const GroupElement& g) { return {g.coords().begin(), g.coords().end()}; }

std::vector<Group> catalog() {
  return {z(1), z(2), z(3), sum2(), sum23(), Group(GroupDescriptor::finite_sum({5, 7}, {2, 3})),
          lamp(2), lamp(3)};
}

}  // namespace

TEST(Group, ComposeExamples) {
  EXPECT_EQ(compose(el(z(1), {2}), el(z(1), {3})), el(z(1), {5}));
  EXPECT_EQ(compose(el(sum2(), {1}), el(sum2(), {1, 1})), el(sum2(), {0, 1}));
  for (const auto& G : catalog())
    for (const auto& g : enumerate(G, 20)) EXPECT_EQ(compose(g, identity(G)), g);
}

TEST(Group, InverseExamples) {
  EXPECT_EQ(inverse(el(z(1), {5})), el(z(1), {-5}));
  for (const auto& G : catalog()) EXPECT_TRUE(inverse(identity(G)).is_identity());
}

TEST(Group, MismatchThrows) {
  EXPECT_THROW(compose(el(z(1), {1}), el(z(2), {1, 0})), GroupMismatch);
  EXPECT_THROW(compose(el(sum2(), {1}), el(sum23(), {1})), GroupMismatch);
}

TEST(Group, CanonicalFormValidation) {
  EXPECT_THROW(el(z(2), {1}), GroupMismatch);
  EXPECT_EQ(el(sum23(), {1, 0, 0}), el(sum23(), {1}));
  EXPECT_TRUE(el(sum23(), {2, 3}).is_identity());
  EXPECT_EQ(el(sum23(), {-1}), el(sum23(), {1}));
  EXPECT_THROW(GroupDescriptor::finite_sum({}, {1}), std::invalid_argument);
  EXPECT_THROW(GroupDescriptor::finite_sum({}, {}), std::invalid_argument);
  EXPECT_THROW(GroupDescriptor::integer_lattice(0), std::invalid_argument);
}

TEST(Group, LamplighterInverseOverBall) {
  for (int m : {2, 3}) {
    const Group G = lamp(m);
    for (const auto& a : enumerate(G, 2000)) {
      EXPECT_TRUE(compose(a, inverse(a)).is_identity()) << a.to_string();
      EXPECT_TRUE(compose(inverse(a), a).is_identity()) << a.to_string();
    }
  }
}

TEST(Group, ComposeMatchesOracle) {
  for (const auto& G : catalog()) {
    const auto els = enumerate(G, 64);
    for (const auto& a : els)
      for (const auto& b : els)
        ASSERT_EQ(coords(compose(a, b)), oracle::compose(G.descriptor(), coords(a), coords(b)))
            << G.descriptor().name() << " " << a.to_string() << " * " << b.to_string();
  }
}

TEST(Group, AxiomsOnFirst64) {
  for (const auto& G : catalog()) {
    const auto els = enumerate(G, 64);
    for (const auto& a : els) {
      EXPECT_EQ(compose(identity(G), a), a);
      EXPECT_TRUE(compose(a, inverse(a)).is_identity());
      for (const auto& b : els)
        for (std::size_t k = 0; k < els.size(); k += 7)
          ASSERT_EQ(compose(compose(a, b), els[k]), compose(a, compose(b, els[k])));
    }
  }
}

TEST(Group, OrderExamples) {
  EXPECT_FALSE(element_order(el(z(2), {1, 0})).has_value());
  for (const auto& G : catalog()) EXPECT_EQ(element_order(identity(G)), 1u);
  // iterate compose until the identity comes back
  const GroupElement a = el(sum23(), {1, 1});
  GroupElement x = a;
  std::uint64_t k = 1;
  while (!x.is_identity()) x = compose(x, a), ++k;
  EXPECT_EQ(k, 6u);
  EXPECT_EQ(element_order(a), 6u);
}

TEST(Group, OrderIsExact) {
  for (const auto& G : catalog()) {
    for (const auto& a : enumerate(G, 64)) {
      const auto k = element_order(a);
      if (!k) {
        // infinite order: no small power is trivial
        GroupElement x = a;
        for (int j = 1; j <= 64; ++j, x = compose(x, a)) ASSERT_FALSE(x.is_identity());
        continue;
      }
      if (*k > 64) {
        // beyond the exhaustive range: a^k = e and a^(k/p) != e for each prime p | k
        EXPECT_TRUE(power(a, static_cast<std::int64_t>(*k)).is_identity());
        for (std::uint64_t p = 2; p <= *k; ++p)
          if (*k % p == 0) EXPECT_FALSE(power(a, static_cast<std::int64_t>(*k / p)).is_identity());
        continue;
      }
      GroupElement x = a;
      for (std::uint64_t j = 1; j < *k; ++j, x = compose(x, a)) ASSERT_FALSE(x.is_identity());
      EXPECT_TRUE(x.is_identity());
      EXPECT_TRUE(power(a, static_cast<std::int64_t>(*k)).is_identity());
    }
  }
}

TEST(Group, LamplighterOrders) {
  const Group G = lamp(2);
  EXPECT_FALSE(element_order(lamplighter_element(G, 1, 0, std::vector<std::int64_t>{1})));
  EXPECT_EQ(element_order(lamplighter_element(G, 0, -3, std::vector<std::int64_t>{1, 0, 1})), 2u);
}

TEST(Group, PowerMatchesRepeatedCompose) {
  for (const auto& G : catalog())
    for (const auto& a : enumerate(G, 24)) {
      GroupElement x = identity(G);
      for (int k = 0; k <= 9; ++k, x = compose(x, a)) {
        EXPECT_EQ(power(a, k), x);
        EXPECT_EQ(power(a, -k), inverse(x));
      }
    }
}

TEST(Enumerate, Examples) {
  std::vector<GroupElement> want;
  for (std::int64_t v : {0, 1, -1, 2, -2}) want.push_back(el(z(1), {v}));
  EXPECT_EQ(enumerate(z(1), 5), want);
  for (const auto& G : catalog()) {
    const auto one = enumerate(G, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_TRUE(one[0].is_identity());
  }
  std::vector<GroupElement> box;
  for (auto [x, y] : std::vector<std::pair<int, int>>{
           {0, 0}, {0, 1}, {0, -1}, {1, 0}, {1, 1}, {1, -1}, {-1, 0}, {-1, 1}, {-1, -1}})
    box.push_back(el(z(2), {x, y}));
  EXPECT_EQ(enumerate(z(2), 9), box);
}

TEST(Enumerate, PrefixStableAndDuplicateFree) {
  for (const auto& G : catalog()) {
    const auto big = enumerate(G, 600);
    std::set<GroupElement> seen(big.begin(), big.end());
    EXPECT_EQ(seen.size(), big.size()) << G.descriptor().name();
    for (std::size_t n : {1u, 7u, 64u, 333u}) {
      const auto small = enumerate(G, n);
      ASSERT_TRUE(std::equal(small.begin(), small.end(), big.begin())) << G.descriptor().name();
    }
  }
}

TEST(Enumerate, ExhaustsBalls) {
  // every vector of the sup-norm ball of radius 3 in Z^2 shows up among the first 49
  std::set<GroupElement> first;
  for (const auto& g : enumerate(z(2), 49)) first.insert(g);
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) EXPECT_TRUE(first.count(el(z(2), {x, y})));
  // the first 6^3 elements of Z/2+Z/3+Z/2+... are the subgroup on three coordinates
  std::set<GroupElement> sub;
  for (const auto& g : enumerate(sum23(), 12)) sub.insert(g);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 2; ++c) EXPECT_TRUE(sub.count(el(sum23(), {a, b, c})));
}

TEST(Enumerate, ShellRadiusNondecreasing) {
  for (const auto& G : catalog()) {
    const auto els = enumerate(G, 500);
    for (std::size_t i = 1; i < els.size(); ++i)
      EXPECT_LE(shell_radius(els[i - 1]), shell_radius(els[i])) << G.descriptor().name();
  }
}

TEST(Enumerate, ShellMatchesFilteredEnumeration) {
  for (const auto& G : {z(1), z(2), lamp(2)}) {
    const auto els = enumerate(G, 3000);
    std::vector<GroupElement> want;
    for (const auto& g : els)
      if (shell_radius(g) > 1 && shell_radius(g) <= 2) want.push_back(g);
    EXPECT_EQ(shell(G, 1, 2, 10000), want) << G.descriptor().name();
    EXPECT_EQ(shell(G, 1, 2, 1).size(), 1u);
  }
}

TEST(Zigzag, RoundTrip) {
  EXPECT_EQ(zigzag(0), 0u);
  EXPECT_EQ(zigzag(1), 1u);
  EXPECT_EQ(zigzag(-1), 2u);
  for (std::int64_t v = -1000; v <= 1000; ++v) EXPECT_EQ(unzigzag(zigzag(v)), v);
}
