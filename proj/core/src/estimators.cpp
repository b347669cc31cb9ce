#include "cfmix/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "cfmix/errors.hpp"
#include "parallel.hpp"

namespace cfmix {

double event_probability(const CFSequence& seq, const std::vector<CountEvent>& events) {
  for (std::size_t i = 0; i < events.size(); ++i)
    for (std::size_t j = i + 1; j < events.size(); ++j)
      if (!windows_disjoint(seq, events[i].window, events[j].window))
        throw DisjointnessError("event_probability: windows " + std::to_string(i) + " and " +
                                std::to_string(j) + " overlap");
  double log_p = 0;
  for (const auto& e : events) log_p += poisson_log_pmf(to_double(measure(seq, e.window)), e.count);
  return std::exp(log_p);
}

double overlap_probability(double alpha, double beta, double m, std::uint64_t a, std::uint64_t b) {
  m = std::clamp(m, 0.0, std::min(alpha, beta));
  const double ra = std::max(0.0, alpha - m);
  const double rb = std::max(0.0, beta - m);
  double p = 0;
  for (std::uint64_t i = 0; i <= std::min(a, b); ++i)
    p += std::exp(poisson_log_pmf(m, i) + poisson_log_pmf(ra, a - i) + poisson_log_pmf(rb, b - i));
  return p;
}

ValueInterval mixing_correlation_exact(const CFSequence& seq, const GroupElement& g,
                                       const CountEvent& A, const CountEvent& B, int max_level) {
  const double alpha = to_double(measure(seq, A.window));
  const double beta = to_double(measure(seq, B.window));
  const MeasureBounds m = intersect_measure(seq, g, A.window, B.window, max_level);
  const double base = poisson_pmf(alpha, A.count) * poisson_pmf(beta, B.count);
  const double lo = to_double(m.lower);
  if (m.exact()) {
    const double p = overlap_probability(alpha, beta, lo, A.count, B.count) - base;
    return {p, p};
  }
  const double hi = std::min(to_double(m.upper), std::min(alpha, beta));
  // |dP/dm| <= 6 (each pmf derivative sums to at most 2 in absolute value), so a grid with
  // spacing h misses the extremes by at most 3h.
  constexpr int points = 65;
  const double h = (hi - lo) / (points - 1);
  double pmin = 1;
  double pmax = 0;
  for (int i = 0; i < points; ++i) {
    const double p = overlap_probability(alpha, beta, lo + h * i, A.count, B.count);
    pmin = std::min(pmin, p);
    pmax = std::max(pmax, p);
  }
  return {std::max(0.0, pmin - 3 * h) - base, std::min(1.0, pmax + 3 * h) - base};
}

MonteCarloEstimate mixing_correlation_mc(const CFSequence& seq, const GroupElement& g,
                                         const CountEvent& A, const CountEvent& B,
                                         std::uint64_t samples, int horizon, std::uint64_t seed,
                                         const MonteCarloOptions& options) {
  if (samples < 1000) throw std::invalid_argument("mixing_correlation_mc: need at least 1000 samples");
  const WindowImage img = act_window(seq, g, A.window, horizon);
  if (!img.fully_resolved)
    throw ResolutionError("T_g K_A does not resolve below horizon " + std::to_string(horizon));
  const Window cover = window_union(seq, img.image, B.window);
  const Window image = refine_to(seq, img.image, cover.level);
  const Window target = refine_to(seq, B.window, cover.level);
  const PoissonSampler sampler(seq, cover, horizon);

  const std::size_t batch = std::max<std::size_t>(1, options.batch);
  const std::size_t batches = static_cast<std::size_t>((samples + batch - 1) / batch);
  std::vector<std::uint64_t> hits(batches, 0);
  detail::parallel_for(batches, options.threads, [&](std::size_t b) {
    auto rng = rng_stream(seed, b);
    const std::uint64_t n = std::min<std::uint64_t>(batch, samples - b * batch);
    for (std::uint64_t s = 0; s < n; ++s) {
      const Configuration c = sampler.sample(rng);
      std::uint64_t in_image = 0;
      std::uint64_t in_target = 0;
      for (const auto& p : c.points) {
        in_image += image.words.contains(p.word);
        in_target += target.words.contains(p.word);
      }
      hits[b] += (in_image == A.count && in_target == B.count);
    }
  });

  MonteCarloEstimate est;
  est.samples = samples;
  for (auto h : hits) est.hits += h;
  const double n = static_cast<double>(samples);
  const double base = poisson_pmf(to_double(measure(seq, A.window)), A.count) *
                      poisson_pmf(to_double(measure(seq, B.window)), B.count);
  est.mean = static_cast<double>(est.hits) / n - base;
  const double smoothed = (static_cast<double>(est.hits) + 1) / (n + 2);
  est.std_error = std::sqrt(smoothed * (1 - smoothed) / n);
  return est;
}

std::vector<MeasureBounds> koopman_decay(const CFSequence& seq, const std::vector<GroupElement>& gs,
                                         const Window& A, const Window& B, int max_level) {
  std::vector<MeasureBounds> out;
  out.reserve(gs.size());
  for (const auto& g : gs) out.push_back(intersect_measure(seq, g, A, B, max_level));
  return out;
}

std::vector<EntropyRow> entropy_bound(const CFSequence& seq, int max_n) {
  if (max_n < 0 || max_n > seq.depth()) throw std::out_of_range("entropy_bound: level out of range");
  std::vector<EntropyRow> rows;
  for (int n = 0; n <= max_n; ++n) {
    Rational mu = seq.cylinder_measure(n);
    const double f = poisson_entropy(to_double(mu));
    rows.push_back({n, std::move(mu), f});
  }
  return rows;
}

FreenessReport freeness_check(const CFSequence& seq, const GroupElement& g, const Window& window,
                              std::uint64_t samples, int horizon, std::uint64_t seed,
                              const MonteCarloOptions& options) {
  if (g.is_identity()) throw std::invalid_argument("freeness_check: g must not be the identity");
  const PoissonSampler sampler(seq, window, horizon);

  const std::size_t batch = std::max<std::size_t>(1, options.batch);
  const std::size_t batches = static_cast<std::size_t>((samples + batch - 1) / batch);
  std::vector<FreenessReport> parts(batches);
  detail::parallel_for(batches, options.threads, [&](std::size_t b) {
    auto rng = rng_stream(seed, b);
    FreenessReport& r = parts[b];
    const std::uint64_t n = std::min<std::uint64_t>(batch, samples - b * batch);
    for (std::uint64_t s = 0; s < n; ++s) {
      const Configuration c = sampler.sample(rng);
      ++r.samples;
      for (const auto& p : c.points)
        if (compose(g, p.word) == p.word)
          ++r.points_fixed_at_word_level;
      const PushResult pushed = push_configuration(seq, g, c);
      if (!pushed.complete()) continue;
      ++r.resolved;
      if (c.points.empty()) ++r.empty;
      if (same_points(seq, c, pushed.config)) {
        ++r.fixed;
        if (!c.points.empty()) ++r.nonempty_fixed;
      }
    }
  });

  FreenessReport out;
  for (const auto& r : parts) {
    out.samples += r.samples;
    out.resolved += r.resolved;
    out.empty += r.empty;
    out.fixed += r.fixed;
    out.nonempty_fixed += r.nonempty_fixed;
    out.points_fixed_at_word_level += r.points_fixed_at_word_level;
  }
  out.frequency = out.resolved ? static_cast<double>(out.fixed) / static_cast<double>(out.resolved) : 0;
  out.empty_bound = std::exp(-sampler.mean());
  return out;
}

ChiSquareResult chi_square_poisson(const std::vector<double>& histogram, double t) {
  double total = 0;
  for (double h : histogram) total += h;
  if (total < 1000) throw InsufficientData("chi_square_poisson: fewer than 1000 observations");

  std::vector<std::pair<double, double>> bins;  // (observed, expected)
  double obs = 0;
  double expd = 0;
  double cdf = 0;
  std::size_t j = 0;
  while (true) {
    const double p = poisson_pmf(t, j);
    obs += j < histogram.size() ? histogram[j] : 0;
    expd += total * p;
    cdf += p;
    ++j;
    const double tail = total * std::max(0.0, 1 - cdf);
    if (expd >= 5 && tail >= 5) {
      bins.emplace_back(obs, expd);
      obs = expd = 0;
      continue;
    }
    if (tail < 5 && static_cast<double>(j) > t) {
      double rest = 0;
      for (std::size_t i = j; i < histogram.size(); ++i) rest += histogram[i];
      const double last_expected = expd + tail;
      if (last_expected >= 5 || bins.empty())
        bins.emplace_back(obs + rest, last_expected);
      else {
        bins.back().first += obs + rest;
        bins.back().second += last_expected;
      }
      break;
    }
  }
  if (bins.size() < 2) throw InsufficientData("chi_square_poisson: fewer than two bins after pooling");

  ChiSquareResult r;
  for (const auto& [o, e] : bins) r.statistic += (o - e) * (o - e) / e;
  r.dof = static_cast<int>(bins.size()) - 1;
  r.p_value = boost::math::gamma_q(r.dof / 2.0, r.statistic / 2.0);
  return r;
}

std::vector<double> count_histogram(const std::vector<std::uint64_t>& counts) {
  std::vector<double> h;
  for (auto c : counts) {
    if (c >= h.size()) h.resize(c + 1, 0);
    h[c] += 1;
  }
  return h;
}

std::vector<ShellEnvelope> correlation_envelope(const CFSequence& seq, const CountEvent& A,
                                                const CountEvent& B, int k_max, int max_level,
                                                std::size_t cap) {
  std::vector<ShellEnvelope> out;
  for (int k = 1; k <= k_max; ++k) {
    const std::int64_t outer = std::int64_t{1} << k;
    const auto elements = shell(seq.group(), outer / 2, outer, cap);
    ShellEnvelope row{k, outer, 0, elements.size()};
    for (const auto& g : elements) {
      const ValueInterval c = mixing_correlation_exact(seq, g, A, B, max_level);
      row.envelope = std::max({row.envelope, std::abs(c.lower), std::abs(c.upper)});
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace cfmix
