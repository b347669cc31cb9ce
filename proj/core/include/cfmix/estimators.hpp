#pragma once

#include <cstdint>
#include <vector>

#include "cfmix/poisson.hpp"

namespace cfmix {

// {x* : x*(window) = count}.
struct CountEvent {
  Window window;
  std::uint64_t count = 0;
};

struct ValueInterval {
  double lower = 0;
  double upper = 0;

  bool contains(double x) const noexcept { return lower <= x && x <= upper; }
  // Distance from x to the interval (0 inside).
  double distance(double x) const noexcept {
    return x < lower ? lower - x : (x > upper ? x - upper : 0.0);
  }
};

struct MonteCarloOptions {
  // 0 = hardware concurrency. Results do not depend on this.
  unsigned threads = 0;
  // Samples per RNG stream; stream b covers samples [b * batch, (b + 1) * batch).
  std::size_t batch = 1024;
};

struct MonteCarloEstimate {
  // Empirical probability minus the exact product mu*(A) mu*(B).
  double mean = 0;
  // Binomial standard error of the empirical probability, using the smoothed frequency
  // (hits + 1) / (samples + 2) so that it never collapses to zero.
  double std_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
};

// Product of pmf(mu(K_i), j_i). Throws DisjointnessError when two windows overlap.
double event_probability(const CFSequence& seq, const std::vector<CountEvent>& events);

// P(x*(I) = a, x*(J) = b) for windows with mu(I) = alpha, mu(J) = beta and mu(I cap J) = m:
// the sum over i of pmf(m, i) pmf(alpha - m, a - i) pmf(beta - m, b - i).
double overlap_probability(double alpha, double beta, double m, std::uint64_t a, std::uint64_t b);

// mu*(T_g^* A cap B) - mu*(A) mu*(B). T_g^* A is {x*(T_g K_A) = a}; the overlap measure is
// taken from intersect_measure and its uncertainty widens the interval.
ValueInterval mixing_correlation_exact(const CFSequence& seq, const GroupElement& g,
                                       const CountEvent& A, const CountEvent& B, int max_level);

// Monte Carlo estimate on a window covering T_g K_A and K_B. Throws ResolutionError when
// T_g K_A does not resolve below the horizon. Requires samples >= 1000.
MonteCarloEstimate mixing_correlation_mc(const CFSequence& seq, const GroupElement& g,
                                         const CountEvent& A, const CountEvent& B,
                                         std::uint64_t samples, int horizon, std::uint64_t seed,
                                         const MonteCarloOptions& options = {});

// intersect_measure for each g.
std::vector<MeasureBounds> koopman_decay(const CFSequence& seq, const std::vector<GroupElement>& gs,
                                         const Window& A, const Window& B, int max_level);

struct EntropyRow {
  int level = 0;
  Rational mu;   // mu([1]_n)
  double bound;  // f(mu([1]_n))
};

// Rows n = 0..max_n.
std::vector<EntropyRow> entropy_bound(const CFSequence& seq, int max_n);

struct FreenessReport {
  std::uint64_t samples = 0;
  // Samples whose every point stayed defined under g.
  std::uint64_t resolved = 0;
  std::uint64_t empty = 0;
  // Resolved samples with push(config) = config as multisets.
  std::uint64_t fixed = 0;
  std::uint64_t nonempty_fixed = 0;
  // Points with g f = f at their own level (no promotion); 0 unless g is the identity.
  std::uint64_t points_fixed_at_word_level = 0;
  double frequency = 0;   // fixed / resolved
  double empty_bound = 0; // e^-mu(window)
};

// Fixed-point frequency of T_g^* on Poisson configurations of `window`.
// Throws std::invalid_argument for the identity.
FreenessReport freeness_check(const CFSequence& seq, const GroupElement& g, const Window& window,
                              std::uint64_t samples, int horizon, std::uint64_t seed,
                              const MonteCarloOptions& options = {});

struct ChiSquareResult {
  double statistic = 0;
  double p_value = 1;
  int dof = 0;
};

// Goodness of fit of a count histogram (histogram[j] = number of observations equal to j)
// against Poisson(t). Bins are pooled from j = 0 upward until each expected count is >= 5; the
// last bin is the whole tail. Throws InsufficientData below 1000 observations or 2 bins.
ChiSquareResult chi_square_poisson(const std::vector<double>& histogram, double t);

// histogram[j] = #{i : counts[i] = j}.
std::vector<double> count_histogram(const std::vector<std::uint64_t>& counts);

// Per-shell maximum of |correlation interval| endpoints: shells k = 1..K cover radii
// (2^(k-1), 2^k].
struct ShellEnvelope {
  int k = 0;
  std::int64_t radius = 0;
  double envelope = 0;
  std::size_t elements = 0;
};

// Exact correlation envelope over the enumeration shells of radius 2^k, k = 1..k_max, at most
// `cap` elements per shell.
std::vector<ShellEnvelope> correlation_envelope(const CFSequence& seq, const CountEvent& A,
                                                const CountEvent& B, int k_max, int max_level,
                                                std::size_t cap = 4096);

}  // namespace cfmix
