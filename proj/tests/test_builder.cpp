#include <gtest/gtest.h>

#include "cfmix/errors.hpp"
#include "cfmix/verify.hpp"
#include "fixtures.hpp"

using namespace cfmix;

namespace {

bool all_pass(const std::vector<ConditionReport>& reports, std::string* failed = nullptr) {
  for (const auto& r : reports)
    for (const auto& [name, c] : r.checks)
      if (!c.passed) {
        if (failed) *failed = name + " at level " + std::to_string(r.level) + ": " + c.detail;
        return false;
      }
  return true;
}

std::vector<const CFSequence*> reference_builds() {
  return {&fixtures::z1_depth(6), &fixtures::z2_depth6(), &fixtures::sum23_depth6(),
          &fixtures::lamp2_depth2()};
}

}  // namespace

TEST(Builder, Z1SmallProfile) {
  const auto seq = build_sequence(fixtures::z1(), 3, {2, 3, 4});
  std::string why;
  EXPECT_TRUE(all_pass(verify_all(seq), &why)) << why;
  EXPECT_TRUE(seq.F(0) == ElementSet::singleton(identity(seq.group())));
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(seq.F(n).part_count(), 1u) << "F_" << n << " should be an interval";
    EXPECT_EQ(seq.c_count(n), static_cast<std::size_t>(n + 1));
  }
}

TEST(Builder, DepthOneEveryGroup) {
  for (const auto& G : {fixtures::z1(), fixtures::z2(), fixtures::sum23(), fixtures::lamp2()}) {
    const auto seq = build_sequence(G, 1, {2});
    EXPECT_EQ(seq.depth(), 1);
    EXPECT_EQ(seq.F(0).size(), 1);
    EXPECT_TRUE(seq.F(1).contains(identity(G)));
    EXPECT_GT(seq.c_count(1), 1u);
    EXPECT_TRUE(verify_basic(seq, 1).passed()) << G.descriptor().name();
  }
}

TEST(Builder, ElementaryAbelianTwoGroupWithoutMixing) {
  // every element has order 2, so c1 c2^-1 = c2 c1^-1 and mix-ii cannot hold
  const Group G = fixtures::sum2();
  EXPECT_THROW(build_sequence(G, 3, {2, 3, 4}), SearchExhausted);
  try {
    build_sequence(G, 3, {2, 3, 4});
  } catch (const SearchExhausted& e) {
    EXPECT_EQ(e.condition(), "mix-ii");
    EXPECT_EQ(e.level(), 1u);
  }
  BuildOptions o;
  o.require_mixing = false;
  const auto seq = build_sequence(G, 3, {2, 3, 4}, o);
  for (int n = 0; n <= 3; ++n) {
    // F_n is the full subgroup on its first k coordinates
    bool subgroup = false;
    for (std::size_t k = 0; k <= 64 && !subgroup; ++k)
      subgroup = seq.F(n) == ElementSet::coordinate_subgroup(G, k);
    EXPECT_TRUE(subgroup) << "F_" << n;
    EXPECT_TRUE(verify_basic(seq, n).passed()) << n;
  }
  EXPECT_TRUE(verify_growth(seq).passed);
  for (const auto& g : enumerate(G, 17)) {
    if (g.is_identity()) continue;
    bool stabilized = false;
    for (int n = 0; n <= 3; ++n) {
      if (!seq.F(n).contains(g)) continue;
      // subgroup closure: g F_n = F_n whenever g is in F_n
      EXPECT_TRUE(verify_square(seq, g, n).passed);
      EXPECT_TRUE(translate(g, seq.F(n)) == seq.F(n));
      stabilized = true;
    }
    EXPECT_TRUE(stabilized) << g.to_string();
  }
  EXPECT_TRUE(all_pass(verify_schedule(seq)));
}

TEST(Builder, RejectsBadProfiles) {
  EXPECT_THROW(build_sequence(fixtures::z1(), 3, {2, 3}), std::invalid_argument);
  EXPECT_THROW(build_sequence(fixtures::z1(), 2, {1, 3}), std::invalid_argument);
  EXPECT_THROW(build_sequence(fixtures::z1(), 2, {4, 3}), std::invalid_argument);
  EXPECT_THROW(build_sequence(fixtures::z1(), 0, {}), std::invalid_argument);
  EXPECT_NO_THROW(validate_growth_profile(3, {2, 2, 5}));
  EXPECT_EQ(default_growth_profile(3), (std::vector<int>{3, 4, 5}));
}

TEST(Builder, ReferenceBuildsPassEveryCheck) {
  for (const auto* seq : reference_builds()) {
    std::string why;
    EXPECT_TRUE(all_pass(verify_all(*seq), &why)) << seq->group().descriptor().name() << " " << why;
  }
}

TEST(Builder, GrowthRatiosStrictlyIncrease) {
  for (const auto* seq : reference_builds()) {
    const auto g = verify_growth(*seq);
    for (std::size_t i = 1; i < g.ratios.size(); ++i) EXPECT_GT(g.ratios[i], g.ratios[i - 1]);
    EXPECT_GE(g.ratios.back(), 2);
  }
}

TEST(Builder, MixIIImpliesBasic3) {
  std::vector<CFSequence> seqs;
  for (const auto* s : reference_builds()) seqs.push_back(*s);
  // hand-made levels where mix-ii passes and fails
  const Group G = fixtures::z1();
  auto zs = [&](std::initializer_list<std::int64_t> v) {
    std::vector<GroupElement> out;
    for (auto x : v) out.push_back(GroupElement(G, {x}));
    return out;
  };
  for (std::int64_t gap : {5, 10, 15, 19, 20, 25, 40}) {
    seqs.emplace_back(G, std::vector<ElementSet>{ElementSet::box(G, {{0, 0}}), ElementSet::box(G, {{0, 9}}),
                                                 ElementSet::box(G, {{-100, 200}})},
                      std::vector<std::vector<GroupElement>>{zs({0, 20}), zs({0, gap, 3 * gap})});
  }
  int mixing_passes = 0;
  for (const auto& seq : seqs)
    for (int n = 0; n < seq.depth(); ++n) {
      if (!verify_mixing(seq, n).checks.at("mix-ii").passed) continue;
      ++mixing_passes;
      EXPECT_TRUE(verify_basic(seq, n).checks.at("basic3").passed);
    }
  EXPECT_GT(mixing_passes, 10);
}

TEST(Builder, EveryEarlyElementGetsACertificate) {
  for (const auto* seq : reference_builds()) {
    const std::size_t want = seq == &fixtures::lamp2_depth2() ? 8 : 16;
    const auto els = enumerate(seq->group(), want + 1);
    for (std::size_t i = 1; i < els.size(); ++i) {
      bool certified = false;
      for (const auto& e : seq->schedule())
        if (e.element == els[i] && e.kind != CertificateKind::deferred) certified = true;
      EXPECT_TRUE(certified) << seq->group().descriptor().name() << " " << els[i].to_string();
    }
  }
}

TEST(Builder, TriangleCertificatesUseLeastExponent) {
  for (const auto* seq : reference_builds())
    for (const auto& e : seq->schedule()) {
      if (e.kind != CertificateKind::triangle) continue;
      ASSERT_TRUE(e.exponent.has_value());
      const auto least = verify_triangle(*seq, e.element, e.level, *e.exponent);
      EXPECT_EQ(least, e.exponent) << e.element.to_string() << " at " << e.level;
    }
}

TEST(Builder, Deterministic) {
  const auto a = build_sequence(fixtures::z2(), 3, {3, 4, 5});
  const auto b = build_sequence(fixtures::z2(), 3, {3, 4, 5});
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(a.F(n) == b.F(n));
  for (int n = 1; n <= 3; ++n)
    EXPECT_TRUE(std::equal(a.C(n).begin(), a.C(n).end(), b.C(n).begin(), b.C(n).end()));
  EXPECT_EQ(a.schedule(), b.schedule());
}

TEST(Builder, SequenceShapeChecks) {
  const Group G = fixtures::z1();
  const auto e = ElementSet::singleton(identity(G));
  EXPECT_THROW(CFSequence(G, {ElementSet::box(G, {{0, 1}})}, {}), std::invalid_argument);
  EXPECT_THROW(CFSequence(G, {e, e}, {{identity(G), identity(G)}}), std::invalid_argument);
  EXPECT_THROW(CFSequence(G, {e, e}, {}), std::invalid_argument);
}
