#include "cfmix/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cfmix/errors.hpp"

namespace cfmix {

std::mt19937_64 rng_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x9e3779b9U};
  return std::mt19937_64(seq);
}

double poisson_log_pmf(double t, std::uint64_t j) {
  if (t < 0) throw std::invalid_argument("poisson_pmf: negative parameter");
  if (t == 0) return j == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  const double jd = static_cast<double>(j);
  return -t + jd * std::log(t) - std::lgamma(jd + 1);
}

double poisson_pmf(double t, std::uint64_t j) { return std::exp(poisson_log_pmf(t, j)); }

double poisson_entropy(double t) {
  if (t < 0) throw std::invalid_argument("poisson_entropy: negative parameter");
  if (t == 0) return 0.0;
  double h = 0;
  for (std::uint64_t j = 0;; ++j) {
    const double lp = poisson_log_pmf(t, j);
    const double p = std::exp(lp);
    if (p > 0) h -= p * lp;
    // Past j + 1 >= 2t the pmf at least halves each step, and -x log x increases on [0, 1/e],
    // so the rest of the series is at most p (-log p) + 2 log 2 p.
    if (static_cast<double>(j + 1) >= 2 * t && lp <= -1.0) {
      const double tail = p * (-lp) + 2 * std::log(2.0) * p;
      if (tail < 1e-12) break;
    }
  }
  return h;
}

PoissonSampler::PoissonSampler(const CFSequence& seq, Window window, int horizon)
    : seq_(&seq), window_(std::move(window)), horizon_(horizon) {
  if (horizon_ < window_.level || horizon_ > seq.depth())
    throw std::invalid_argument("PoissonSampler: horizon outside [window level, depth]");
  const double cyl = to_double(seq.cylinder_measure(window_.level));
  mean_ = to_double(window_.words.size()) * cyl;
  cumulative_.reserve(window_.words.part_count());
  double acc = 0;
  for (std::size_t i = 0; i < window_.words.part_count(); ++i) {
    acc += to_double(window_.words.part_size(i));
    cumulative_.push_back(acc);
  }
}

Configuration PoissonSampler::sample(std::mt19937_64& rng) const {
  Configuration config{window_, horizon_, std::vector<std::uint64_t>(cumulative_.size(), 0), {}, 0, 0};
  if (mean_ <= 0) return config;
  const std::uint64_t n = std::poisson_distribution<std::uint64_t>(mean_)(rng);
  std::vector<std::pair<std::size_t, TruncatedPoint>> drawn;
  drawn.reserve(n);
  std::uniform_real_distribution<double> unit(0.0, cumulative_.back());
  for (std::uint64_t i = 0; i < n; ++i) {
    std::size_t part = 0;
    if (cumulative_.size() > 1) {
      const double u = unit(rng);
      part = static_cast<std::size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), u) -
                                      cumulative_.begin());
      part = std::min(part, cumulative_.size() - 1);
    }
    TruncatedPoint p{window_.level, window_.words.sample_part(part, rng), {}};
    for (int lvl = window_.level + 1; lvl <= horizon_; ++lvl) {
      const auto k = static_cast<std::uint32_t>(seq_->c_count(lvl));
      p.tail.push_back(std::uniform_int_distribution<std::uint32_t>(0, k - 1)(rng));
    }
    ++config.part_counts[part];
    drawn.emplace_back(part, std::move(p));
  }
  std::stable_sort(drawn.begin(), drawn.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  config.points.reserve(drawn.size());
  for (auto& d : drawn) config.points.push_back(std::move(d.second));
  return config;
}

Configuration PoissonSampler::sample(std::uint64_t seed, std::uint64_t stream) const {
  auto rng = rng_stream(seed, stream);
  Configuration c = sample(rng);
  c.seed = seed;
  c.stream = stream;
  return c;
}

Configuration sample_configuration(const CFSequence& seq, const Window& window, int horizon,
                                   std::uint64_t seed, std::uint64_t stream) {
  return PoissonSampler(seq, window, horizon).sample(seed, stream);
}

std::uint64_t count(const CFSequence& seq, const Configuration& config, const Window& K) {
  if (K.level > config.horizon)
    throw ContainmentError("count: window is finer than the configuration horizon");
  if (!window_subset(seq, K, config.window))
    throw ContainmentError("count: window is not inside the configuration window");
  const WindowIndex index(seq, K);
  return static_cast<std::uint64_t>(std::count_if(
      config.points.begin(), config.points.end(),
      [&](const TruncatedPoint& p) { return index.contains(p); }));
}

PushResult push_configuration(const CFSequence& seq, const GroupElement& g,
                              const Configuration& config) {
  const WindowImage img = act_window(seq, g, config.window, config.horizon);
  PushResult out{{img.image, config.horizon,
                  std::vector<std::uint64_t>(img.image.words.part_count(), 0), {}, config.seed,
                  config.stream},
                 {}};
  std::vector<std::pair<std::size_t, TruncatedPoint>> moved;
  for (std::size_t i = 0; i < config.points.size(); ++i) {
    auto r = act_point(seq, g, config.points[i]);
    if (auto* q = std::get_if<TruncatedPoint>(&r)) {
      const TruncatedPoint at = q->level < img.image.level ? promote(seq, *q, img.image.level) : *q;
      const auto part = img.image.words.part_of(at.word);
      if (!part) throw std::logic_error("push_configuration: pushed point outside the image window");
      ++out.config.part_counts[*part];
      moved.emplace_back(*part, std::move(*q));
    } else {
      out.unresolved.push_back(i);
    }
  }
  std::stable_sort(moved.begin(), moved.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& m : moved) out.config.points.push_back(std::move(m.second));
  return out;
}

bool same_points(const CFSequence& seq, const Configuration& a, const Configuration& b) {
  if (a.points.size() != b.points.size()) return false;
  auto normalized = [&](const Configuration& c) {
    std::vector<std::pair<int, GroupElement>> out;
    out.reserve(c.points.size());
    for (const auto& p : c.points) out.emplace_back(p.horizon(), promote(seq, p, p.horizon()).word);
    std::sort(out.begin(), out.end());
    return out;
  };
  return normalized(a) == normalized(b);
}

}  // namespace cfmix
