#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "cfmix/errors.hpp"
#include "cfmix/estimators.hpp"
#include "cfmix/verify.hpp"
#include "fixtures.hpp"

using namespace cfmix;

namespace {

const CFSequence& ref() { return fixtures::z1_depth(6); }

GroupElement z(std::int64_t v) { return GroupElement(fixtures::z1(), {v}); }

Window level2(std::size_t first, std::size_t n) {
  static const auto words = ref().F(2).elements();
  std::vector<Cylinder> parts;
  for (std::size_t i = first; i < first + n; ++i) parts.push_back({2, words[i]});
  return Window::from_cylinders(ref(), parts);
}

Window x1() { return Window::from_cylinders(ref(), {{1, z(0)}}); }

// P(X1 + X2 = a, X2 + X3 = b) for independent Poisson X1, X2, X3 with means alpha - m, m, beta - m.
double joint_oracle(double alpha, double beta, double m, int a, int b) {
  double p = 0;
  for (int i = 0; i <= std::min(a, b); ++i)
    p += oracle::pmf(m, i) * oracle::pmf(alpha - m, a - i) * oracle::pmf(beta - m, b - i);
  return p;
}

}  // namespace

TEST(EventProbability, Examples) {
  const auto K = level2(0, 3);
  const auto L = level2(3, 6);
  const double mk = 3.0 / 12, ml = 6.0 / 12;
  EXPECT_NEAR(event_probability(ref(), {{K, 0}}), std::exp(-mk), 1e-15);
  EXPECT_NEAR(event_probability(ref(), {{K, 0}, {L, 0}}), std::exp(-mk - ml), 1e-15);
  EXPECT_NEAR(event_probability(ref(), {{K, 2}, {L, 1}}), oracle::pmf(mk, 2) * oracle::pmf(ml, 1), 1e-15);
  EXPECT_THROW(event_probability(ref(), {{K, 0}, {level2(2, 3), 0}}), DisjointnessError);
  EXPECT_EQ(event_probability(ref(), {}), 1.0);
}

TEST(EventProbability, MatchesFrequency) {
  const auto K = level2(0, 6);
  const auto L = level2(6, 12);
  const auto W = window_union(ref(), K, L);
  const PoissonSampler s(ref(), W, 2);
  std::mt19937_64 rng(123);
  const int n = 100000;
  int hits = 0;
  for (int i = 0; i < n; ++i) {
    const auto c = s.sample(rng);
    hits += count(ref(), c, K) == 1 && count(ref(), c, L) == 0;
  }
  const double p = event_probability(ref(), {{K, 1}, {L, 0}});
  EXPECT_NEAR(static_cast<double>(hits) / n, p, 3 * std::sqrt(p * (1 - p) / n));
}

TEST(OverlapProbability, MatchesOracle) {
  for (double alpha : {0.25, 1.0, 4.0})
    for (double beta : {0.25, 1.0, 4.0})
      for (double frac : {0.0, 0.3, 1.0}) {
        const double m = frac * std::min(alpha, beta);
        for (int a = 0; a <= 6; ++a)
          for (int b = 0; b <= 6; ++b)
            EXPECT_NEAR(overlap_probability(alpha, beta, m, a, b), joint_oracle(alpha, beta, m, a, b), 1e-14);
      }
}

TEST(MixingExact, IdentityIsMaximalDependence) {
  for (const auto& K : {x1(), level2(0, 3), level2(0, 48)}) {
    const double mu = to_double(measure(ref(), K));
    const auto r = mixing_correlation_exact(ref(), identity(ref().group()), {K, 0}, {K, 0}, 6);
    EXPECT_NEAR(r.lower, std::exp(-mu) - std::exp(-2 * mu), 1e-14);
    EXPECT_NEAR(r.upper, r.lower, 1e-14);
    EXPECT_GT(r.lower, 0);
  }
}

TEST(MixingExact, DisjointImageIsIndependent) {
  const auto K = level2(0, 3);
  const auto L = level2(20, 3);
  for (const auto& g : enumerate(ref().group(), 30)) {
    const auto img = act_window(ref(), g, K, 6);
    if (!img.fully_resolved) continue;
    const auto overlap = intersect_measure(ref(), g, K, L, 6);
    if (overlap.upper != 0) continue;
    const auto r = mixing_correlation_exact(ref(), g, {K, 0}, {L, 0}, 6);
    // P = exp(-mu(T_g K u L)) = exp(-mu(K) - mu(L)) = mu*(A) mu*(B)
    EXPECT_NEAR(r.lower, 0, 1e-15) << g.to_string();
    EXPECT_NEAR(r.upper, 0, 1e-15) << g.to_string();
  }
}

TEST(MixingExact, MonotoneInOverlap) {
  const double alpha = 1, beta = 1;
  double prev = -1;
  for (double m = 0; m <= 1.0; m += 0.05) {
    const double corr = overlap_probability(alpha, beta, m, 0, 0) - std::exp(-alpha - beta);
    EXPECT_GT(corr, prev);
    EXPECT_NEAR(corr, std::exp(-alpha - beta + m) - std::exp(-alpha - beta), 1e-15);
    prev = corr;
  }
}

TEST(MixingExact, IntervalWidensWithUnresolvedMass) {
  const auto K = x1();
  // resolving only down to level 1 leaves part of T_g X_1 undecided
  const auto r = mixing_correlation_exact(ref(), z(set_extent(ref().F(1))), {K, 0}, {K, 0}, 1);
  const auto full = mixing_correlation_exact(ref(), z(set_extent(ref().F(1))), {K, 0}, {K, 0}, 6);
  EXPECT_LE(r.lower, full.lower + 1e-15);
  EXPECT_GE(r.upper, full.upper - 1e-15);
  EXPECT_GT(r.upper - r.lower, 0);
}

TEST(MixingMonteCarlo, AgreesWithExactAtIdentity) {
  const auto K = x1();
  const auto exact = mixing_correlation_exact(ref(), identity(ref().group()), {K, 0}, {K, 0}, 6);
  const auto mc = mixing_correlation_mc(ref(), identity(ref().group()), {K, 0}, {K, 0}, 20000, 6, 5);
  EXPECT_LE(exact.distance(mc.mean), 3 * mc.std_error);
  EXPECT_EQ(mc.samples, 20000u);
}

TEST(MixingMonteCarlo, FarElementNearZero) {
  const auto K = x1();
  const auto g = z(3 * set_extent(ref().F(3)));
  const auto exact = mixing_correlation_exact(ref(), g, {K, 0}, {K, 0}, 6);
  EXPECT_TRUE(exact.contains(0));
  const auto mc = mixing_correlation_mc(ref(), g, {K, 0}, {K, 0}, 20000, 6, 9);
  EXPECT_LE(std::abs(mc.mean), 3 * mc.std_error);
}

TEST(MixingMonteCarlo, StdErrorScaling) {
  const auto K = x1();
  const auto e = identity(ref().group());
  const auto a = mixing_correlation_mc(ref(), e, {K, 0}, {K, 0}, 8000, 6, 1);
  const auto b = mixing_correlation_mc(ref(), e, {K, 0}, {K, 0}, 16000, 6, 2);
  EXPECT_NEAR(a.std_error / b.std_error, std::sqrt(2.0), 0.1);
}

TEST(MixingMonteCarlo, DeterministicAcrossThreadCounts) {
  const auto K = x1();
  const auto g = z(2);
  MonteCarloOptions one;
  one.threads = 1;
  MonteCarloOptions many;
  many.threads = 4;
  const auto a = mixing_correlation_mc(ref(), g, {K, 0}, {K, 0}, 5000, 6, 77, one);
  const auto b = mixing_correlation_mc(ref(), g, {K, 0}, {K, 0}, 5000, 6, 77, many);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_EQ(a.mean, b.mean);
  const auto c = mixing_correlation_mc(ref(), g, {K, 0}, {K, 0}, 5000, 6, 78, many);
  EXPECT_NE(a.hits, c.hits);
}

TEST(MixingMonteCarlo, Errors) {
  const auto K = x1();
  EXPECT_THROW(mixing_correlation_mc(ref(), z(0), {K, 0}, {K, 0}, 999, 6, 1), std::invalid_argument);
  EXPECT_THROW(mixing_correlation_mc(ref(), z(1'000'000'000'000), {K, 0}, {K, 0}, 1000, 6, 1),
               ResolutionError);
}

TEST(Koopman, IdentityAndIntersection) {
  const auto A = level2(0, 10);
  const auto B = level2(5, 10);
  const auto rows = koopman_decay(ref(), {identity(ref().group())}, A, A, 6);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(rows[0].exact());
  EXPECT_EQ(rows[0].lower, measure(ref(), A));
  const auto ab = koopman_decay(ref(), {identity(ref().group())}, A, B, 6);
  EXPECT_EQ(ab[0].lower, measure(ref(), window_intersection(ref(), A, B)));
  EXPECT_EQ(ab[0].lower, Rational(5, 12));
}

TEST(Koopman, TriangleCertificatesGiveZero) {
  for (const auto& e : ref().schedule()) {
    if (e.kind != CertificateKind::triangle) continue;
    const auto X = Window::tower(ref(), e.level);
    const auto r = koopman_decay(ref(), {power(e.element, *e.exponent)}, X, X, e.level + 1);
    EXPECT_EQ(r[0].lower, 0);
    EXPECT_EQ(r[0].upper, 0);
  }
}

// mu(T_g X_1 cap X_1) is 0 until g hits a return time c - c' of some level and the return peaks
// decay with #C_n. Group the dyadic shells by the level whose F_n first exceeds the inner radius;
// the block maxima are bounded by mu(X_1) / #C_n and decrease from block to block.
TEST(Koopman, ReturnPeaksDecayByLevel) {
  const auto A = x1();
  const Rational muA = measure(ref(), A);
  std::map<int, Rational> block;
  for (int k = 1; k <= 14; ++k) {
    const std::int64_t inner = std::int64_t{1} << (k - 1);
    int n = 1;
    while (set_extent(ref().F(n)) <= inner) ++n;
    const auto gs = shell(ref().group(), inner, 2 * inner, 1 << 14);
    Rational env = 0;
    for (const auto& r : koopman_decay(ref(), gs, A, A, 6)) env = std::max(env, r.upper);
    EXPECT_LE(env, muA / ref().c_count(n)) << "shell " << k;
    block[n] = std::max(block[n], env);
  }
  ASSERT_GE(block.size(), 3u);
  EXPECT_EQ(block[1], 0);
  EXPECT_GT(block[2], 0);
  EXPECT_LT(block[3], block[2]);
}

TEST(Entropy, Rows) {
  const auto rows = entropy_bound(ref(), ref().depth());
  ASSERT_EQ(rows.size(), static_cast<std::size_t>(ref().depth()) + 1);
  EXPECT_EQ(rows[0].mu, 1);
  EXPECT_NEAR(rows[0].bound, oracle::entropy_series(1.0, 60), 1e-12);
  for (std::size_t n = 1; n < rows.size(); ++n) {
    EXPECT_LT(rows[n].mu, rows[n - 1].mu);
    EXPECT_LT(rows[n].bound, rows[n - 1].bound);
    EXPECT_EQ(rows[n].mu, ref().cylinder_measure(static_cast<int>(n)));
    EXPECT_NEAR(rows[n].bound, oracle::entropy_series(to_double(rows[n].mu), 60), 1e-12);
  }
  EXPECT_THROW(entropy_bound(ref(), ref().depth() + 1), std::out_of_range);
}

TEST(Entropy, HalvingProfile) {
  const Group G = fixtures::z1();
  std::vector<ElementSet> F{ElementSet::box(G, {{0, 0}})};
  std::vector<std::vector<GroupElement>> C;
  std::int64_t w = 1;
  for (int n = 1; n <= 16; ++n) {
    C.push_back({GroupElement(G, {0}), GroupElement(G, {2 * w})});
    w = 4 * w + 2;
    F.push_back(ElementSet::box(G, {{-w, w}}));
  }
  const CFSequence seq(G, F, C);
  const auto rows = entropy_bound(seq, 16);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    EXPECT_EQ(rows[n].mu, Rational(1, Count(1) << n));
    if (n > 0) EXPECT_LT(rows[n].bound, rows[n - 1].bound);
  }
}

TEST(Entropy, SmallParameterAsymptotic) {
  // f(t) = t (1 - log t) + O(t^2); below 1e-3 once 1/t reaches about 1.1e4
  for (double inv : {11000.0, 20160.0, 1e5, 1e7}) {
    const double t = 1 / inv;
    EXPECT_NEAR(poisson_entropy(t), t * (1 - std::log(t)), t * t);
    EXPECT_LT(poisson_entropy(t), 1e-3);
  }
  EXPECT_GT(poisson_entropy(1e-4), 1e-3);
}

TEST(Freeness, RejectsIdentity) {
  EXPECT_THROW(freeness_check(ref(), identity(ref().group()), x1(), 1000, 6, 1), std::invalid_argument);
}

TEST(Freeness, InfiniteOrderNeverFixes) {
  for (std::int64_t v : {1, -1, 2, 5}) {
    const auto r = freeness_check(ref(), z(v), x1(), 10000, 6, 3);
    EXPECT_EQ(r.samples, 10000u);
    EXPECT_EQ(r.nonempty_fixed, 0u);
    EXPECT_EQ(r.points_fixed_at_word_level, 0u);
    EXPECT_LE(r.fixed, r.empty);
    EXPECT_LE(r.frequency, r.empty_bound + 0.01);
  }
}

TEST(Freeness, TorsionBoundedByEmptyProbability) {
  const auto& seq = fixtures::sum23_depth6();
  const auto W = Window::from_cylinders(seq, {{1, identity(seq.group())}});
  for (const auto& g : enumerate(seq.group(), 9)) {
    if (g.is_identity()) continue;
    const auto r = freeness_check(seq, g, W, 10000, 6, 4);
    EXPECT_NEAR(r.empty_bound, std::exp(-to_double(measure(seq, W))), 1e-15);
    EXPECT_EQ(r.nonempty_fixed, 0u) << g.to_string();
    EXPECT_LE(r.frequency, r.empty_bound + 0.01) << g.to_string();
  }
}

TEST(ChiSquare, ExactHistogramHasZeroStatistic) {
  for (double t : {0.25, 1.0, 4.0}) {
    std::vector<double> h;
    for (std::uint64_t j = 0; j <= 80; ++j) h.push_back(1e5 * poisson_pmf(t, j));
    const auto r = chi_square_poisson(h, t);
    EXPECT_LT(r.statistic, 1e-9);
    EXPECT_GT(r.p_value, 0.999);
    EXPECT_GE(r.dof, 1);
  }
}

TEST(ChiSquare, ShiftedHistogramRejected) {
  std::mt19937_64 rng(4);
  std::poisson_distribution<std::uint64_t> d(1.0);
  std::vector<std::uint64_t> shifted;
  for (int i = 0; i < 100000; ++i) shifted.push_back(d(rng) + 1);
  EXPECT_LT(chi_square_poisson(count_histogram(shifted), 1.0).p_value, 1e-6);
}

TEST(ChiSquare, InsufficientData) {
  EXPECT_THROW(chi_square_poisson({500, 400}, 1.0), InsufficientData);
  // a single pooled bin
  EXPECT_THROW(chi_square_poisson({5000}, 1e-6), InsufficientData);
}

TEST(ChiSquare, HistogramHelper) {
  EXPECT_EQ(count_histogram({0, 2, 2, 5}), (std::vector<double>{1, 0, 2, 0, 0, 1}));
  EXPECT_TRUE(count_histogram({}).empty());
}

TEST(Envelope, Shells) {
  const auto K = x1();
  const auto rows = correlation_envelope(ref(), {K, 0}, {K, 0}, 5, 6);
  ASSERT_EQ(rows.size(), 5u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].k, static_cast<int>(i) + 1);
    EXPECT_EQ(rows[i].radius, std::int64_t{1} << (i + 1));
    EXPECT_EQ(rows[i].elements, std::size_t{1} << (i + 1));
    EXPECT_GE(rows[i].envelope, 0);
  }
}
