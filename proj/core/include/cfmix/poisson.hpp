#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cfmix/cf_space.hpp"

namespace cfmix {

// Independent generator for (seed, stream); streams with different indices do not overlap in
// practice. Monte Carlo loops use one stream per batch so results do not depend on the number
// of threads.
std::mt19937_64 rng_stream(std::uint64_t seed, std::uint64_t stream);

// e^-t t^j / j!, evaluated in log space.
double poisson_pmf(double t, std::uint64_t j);
double poisson_log_pmf(double t, std::uint64_t j);

// Entropy in nats of Poisson(t); the neglected tail is below 1e-12.
double poisson_entropy(double t);

// A Poisson configuration restricted to a window.
//
// Parts are the blocks (or explicit words) of window.words; part_counts[i] counts the points
// whose word lies in part i. Points are ordered by part and carry tails down to `horizon`.
struct Configuration {
  Window window;
  int horizon = 0;
  std::vector<std::uint64_t> part_counts;
  std::vector<TruncatedPoint> points;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// Samples Poisson configurations on a fixed window.
//
// Stream order: the total count N ~ Poisson(mu(window)) first, then for each point in turn the
// part (probability proportional to its measure), a uniform word inside the part, and the tail
// indices c_{level+1}, ..., c_horizon, each uniform. Splitting a Poisson total by independent
// categorical labels gives independent Poisson counts per part, so this is the same law as one
// Poisson draw per part followed by uniform placement.
class PoissonSampler {
 public:
  PoissonSampler(const CFSequence& seq, Window window, int horizon);

  const Window& window() const noexcept { return window_; }
  int horizon() const noexcept { return horizon_; }
  // mu(window).
  double mean() const noexcept { return mean_; }

  Configuration sample(std::mt19937_64& rng) const;
  Configuration sample(std::uint64_t seed, std::uint64_t stream = 0) const;

 private:
  const CFSequence* seq_;
  Window window_;
  int horizon_;
  double mean_;
  std::vector<double> cumulative_;
};

Configuration sample_configuration(const CFSequence& seq, const Window& window, int horizon,
                                   std::uint64_t seed, std::uint64_t stream = 0);

// Number of points in K. Throws ContainmentError when K is not inside the configuration's
// window or is finer than the horizon.
std::uint64_t count(const CFSequence& seq, const Configuration& config, const Window& K);

struct PushResult {
  // Points that stayed defined, on the image window of the resolved part.
  Configuration config;
  // Indices (into the source configuration) of points whose image is undefined at the horizon.
  std::vector<std::size_t> unresolved;

  bool complete() const noexcept { return unresolved.empty(); }
};

// T_g^* applied to the configuration: every point moved by act_point.
PushResult push_configuration(const CFSequence& seq, const GroupElement& g,
                              const Configuration& config);

// Equality of the point multisets, points compared at the common horizon.
bool same_points(const CFSequence& seq, const Configuration& a, const Configuration& b);

}  // namespace cfmix
