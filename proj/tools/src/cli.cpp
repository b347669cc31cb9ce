#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cfmix/errors.hpp"
#include "cfmix/estimators.hpp"
#include "cfmix/serialize.hpp"
#include "cfmix/verify.hpp"

namespace cfmix::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

CFSequence load_sequence(const fs::path& path) {
  try {
    return sequence_from_json(read_json(path));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("field \"") + key + "\" has the wrong type");
  }
}

CountEvent parse_event(const CFSequence& seq, const json& section, const char* key) {
  json e = section.contains(key)
               ? section.at(key)
               : json{{"window", {{"cylinders", {{{"level", 1}, {"word", element_to_json(identity(seq.group()))}}}}}},
                      {"count", 0}};
  try {
    return {window_from_json(seq, e.at("window")), e.value("count", std::uint64_t{0})};
  } catch (const std::exception& ex) {
    throw ConfigError(std::string("mix.") + key + ": " + ex.what());
  }
}

int level_or(const json& section, const char* key, int fallback, int depth) {
  const int v = get_or<int>(section, key, fallback);
  if (v < 0 || v > depth) throw ConfigError(std::string(key) + " outside [0, depth]");
  return v;
}

}  // namespace

ExperimentConfig parse_config(const json& j, const Overrides& overrides) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  if (get_or<int>(j, "schema_version", -1) != kSchemaVersion)
    throw ConfigError("config needs \"schema_version\": " + std::to_string(kSchemaVersion));
  ExperimentConfig c;
  try {
    c.group = descriptor_from_json(j.at("group"));
  } catch (const std::exception& e) {
    throw ConfigError(std::string("group: ") + e.what());
  }
  c.depth = get_or<int>(j, "depth", 0);
  if (c.depth < 1) throw ConfigError("depth must be >= 1");
  c.growth_profile = get_or<std::vector<int>>(j, "growth_profile", default_growth_profile(c.depth));
  try {
    validate_growth_profile(c.depth, c.growth_profile);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("growth_profile: ") + e.what());
  }
  c.horizon = overrides.horizon.value_or(get_or<int>(j, "horizon", c.depth));
  if (c.horizon < 0 || c.horizon > c.depth) throw ConfigError("horizon outside [0, depth]");
  c.seed = overrides.seed.value_or(get_or<std::uint64_t>(j, "seed", 1));

  const json build = j.value("build", json::object());
  c.build.obligations = get_or<std::size_t>(build, "obligations", c.build.obligations);
  c.build.candidate_limit = get_or<std::size_t>(build, "candidate_limit", c.build.candidate_limit);
  c.build.require_mixing = get_or<bool>(build, "require_mixing", c.build.require_mixing);
  c.build.growth_threshold = get_or<std::int64_t>(build, "growth_threshold", 2);

  c.mix = j.value("mix", json::object());
  c.entropy = j.value("entropy", json::object());
  c.sample = j.value("sample", json::object());
  if (!c.mix.is_object() || !c.entropy.is_object() || !c.sample.is_object())
    throw ConfigError("mix, entropy and sample sections must be objects");
  if (overrides.samples) c.mix["samples"] = *overrides.samples;
  if (overrides.max_level) {
    c.mix["max_level"] = *overrides.max_level;
    c.entropy["max_level"] = *overrides.max_level;
  }
  return c;
}

ExperimentConfig load_config(const fs::path& path, const Overrides& overrides) {
  return parse_config(read_json(path), overrides);
}

int cmd_build(const ExperimentConfig& config, const fs::path& out, std::ostream& log) {
  const Group group(config.group);
  std::optional<CFSequence> seq;
  try {
    seq.emplace(build_sequence(group, config.depth, config.growth_profile, config.build));
  } catch (const SearchExhausted& e) {
    log << "search exhausted at level " << e.level() << " (" << e.condition() << "): " << e.what() << "\n";
    return kConditionFailure;
  }
  write_text(out / "sequence.json", sequence_to_json(*seq).dump(1) + "\n");
  const int status = cmd_verify(out / "sequence.json", out, log);
  log << "built " << group.descriptor().name() << " to depth " << config.depth << "\n";
  return status;
}

int cmd_verify(const fs::path& sequence, const fs::path& out, std::ostream& log) {
  const CFSequence seq = load_sequence(sequence);
  const auto reports = verify_all(seq);
  const GrowthReport growth = verify_growth(seq);
  json levels = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    levels.push_back(report_to_json(r));
    for (const auto& [name, c] : r.checks)
      if (!c.passed) {
        ok = false;
        log << "level " << r.level << ": " << name << " failed: " << c.detail << "\n";
      }
  }
  json ratios = json::array();
  for (const auto& r : growth.ratios) ratios.push_back(r.str());
  json doc = {{"schema_version", kSchemaVersion},
              {"group", descriptor_to_json(seq.group().descriptor())},
              {"passed", ok},
              {"levels", levels},
              {"growth", {{"ratios", ratios}, {"threshold", growth.threshold.str()}, {"passed", growth.passed}}}};
  write_text(out / "conditions.json", doc.dump(1) + "\n");
  return ok ? kSuccess : kConditionFailure;
}

int cmd_mix(const ExperimentConfig& config, const fs::path& sequence, const fs::path& out,
            std::ostream& log) {
  const CFSequence seq = load_sequence(sequence);
  const json& m = config.mix;
  const CountEvent A = parse_event(seq, m, "A");
  const CountEvent B = parse_event(seq, m, "B");
  const int max_level = level_or(m, "max_level", seq.depth(), seq.depth());
  const int horizon = std::min(config.horizon, seq.depth());
  const auto samples = get_or<std::uint64_t>(m, "samples", 10000);
  const int shells = get_or<int>(m, "shells", 5);
  const auto cap = get_or<std::size_t>(m, "shell_cap", 64);
  if (samples < 1000) throw ConfigError("mix.samples must be >= 1000");

  std::vector<GroupElement> rows;
  if (m.contains("elements")) {
    for (const auto& e : m.at("elements")) {
      try {
        rows.push_back(element_from_json(seq.group(), e));
      } catch (const std::exception& ex) {
        throw ConfigError(std::string("mix.elements: ") + ex.what());
      }
    }
  } else if (m.contains("enumerate")) {
    rows = enumerate(seq.group(), get_or<std::size_t>(m, "enumerate", 1));
  } else {
    rows.push_back(identity(seq.group()));
    for (int k = 1; k <= shells; ++k) {
      const std::int64_t outer = std::int64_t{1} << k;
      for (auto& g : shell(seq.group(), outer / 2, outer, cap)) rows.push_back(std::move(g));
    }
  }

  std::ostringstream csv;
  csv << "g,exact_lo,exact_hi,mc_mean,mc_stderr,samples,status\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& g = rows[i];
    const ValueInterval exact = mixing_correlation_exact(seq, g, A, B, max_level);
    csv << csv_field(g.to_string()) << ',' << fmt_double(exact.lower) << ',' << fmt_double(exact.upper) << ',';
    try {
      const auto est = mixing_correlation_mc(seq, g, A, B, samples, horizon, splitmix64(config.seed ^ i));
      csv << fmt_double(est.mean) << ',' << fmt_double(est.std_error) << ',' << est.samples << ",ok\n";
    } catch (const ResolutionError&) {
      csv << ",,0,unresolved\n";
    }
  }
  write_text(out / "mixing.csv", csv.str());

  std::ostringstream env;
  env << "k,radius,elements,envelope\n";
  for (const auto& row : correlation_envelope(seq, A, B, shells, max_level, cap))
    env << row.k << ',' << row.radius << ',' << row.elements << ',' << fmt_double(row.envelope) << '\n';
  write_text(out / "envelope.csv", env.str());
  log << "mixing report: " << rows.size() << " rows\n";
  return kSuccess;
}

int cmd_entropy(const ExperimentConfig& config, const fs::path& sequence, const fs::path& out,
                std::ostream& log) {
  const CFSequence seq = load_sequence(sequence);
  const int max_level = level_or(config.entropy, "max_level", seq.depth(), seq.depth());
  std::ostringstream csv;
  csv << "n,mu_1n_num,mu_1n_den,f_bound\n";
  for (const auto& r : entropy_bound(seq, max_level))
    csv << r.level << ',' << numerator_string(r.mu) << ',' << denominator_string(r.mu) << ','
        << fmt_double(r.bound) << '\n';
  write_text(out / "entropy.csv", csv.str());
  log << "entropy report: " << max_level + 1 << " rows\n";
  return kSuccess;
}

int cmd_sample(const ExperimentConfig& config, const fs::path& sequence, const fs::path& out,
               std::ostream& log) {
  const CFSequence seq = load_sequence(sequence);
  Window window = Window::tower(seq, 0);
  try {
    window = window_from_json(seq, config.sample.value("window", json{{"tower_level", std::min(1, seq.depth())}}));
  } catch (const std::exception& e) {
    throw ConfigError(std::string("sample.window: ") + e.what());
  }
  const int horizon = std::min(config.horizon, seq.depth());
  if (horizon < window.level) throw ConfigError("horizon is coarser than the sample window");
  const auto stream = get_or<std::uint64_t>(config.sample, "stream", 0);
  const Configuration c = sample_configuration(seq, window, horizon, config.seed, stream);
  write_text(out / "configuration.json", configuration_to_json(seq, c).dump(1) + "\n");
  log << "sampled " << c.points.size() << " points\n";
  return kSuccess;
}

int run(int argc, char** argv) {
  CLI::App app{"cfmix: (C,F)-actions and their Poisson suspensions"};
  app.require_subcommand(1);

  std::string config_path;
  std::string sequence_path;
  std::string out_dir = ".";
  Overrides ov;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  int horizon = 0;
  int max_level = 0;

  auto add_common = [&](CLI::App* sub, bool needs_config, bool needs_sequence) {
    auto* c = sub->add_option("--config", config_path, "experiment config (JSON)");
    if (needs_config) c->required();
    auto* s = sub->add_option("--sequence", sequence_path, "sequence file (JSON)");
    if (needs_sequence) s->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "RNG seed");
    sub->add_option("--samples", samples, "Monte Carlo samples per row");
    sub->add_option("--horizon", horizon, "point horizon");
    sub->add_option("--max-level", max_level, "deepest level used to resolve the action");
  };
  auto* build = app.add_subcommand("build", "build a sequence and verify it");
  auto* verify = app.add_subcommand("verify", "verify a sequence file");
  auto* mix = app.add_subcommand("mix", "mixing report");
  auto* entropy = app.add_subcommand("entropy", "entropy bound report");
  auto* sample = app.add_subcommand("sample", "sample one Poisson configuration");
  add_common(build, true, false);
  add_common(verify, false, true);
  add_common(mix, true, true);
  add_common(entropy, true, true);
  add_common(sample, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kConfigError;
  }
  auto given = [&](const char* flag) {
    for (auto* sub : app.get_subcommands())
      if (sub->count(flag) > 0) return true;
    return false;
  };
  if (given("--seed")) ov.seed = seed;
  if (given("--samples")) ov.samples = samples;
  if (given("--horizon")) ov.horizon = horizon;
  if (given("--max-level")) ov.max_level = max_level;

  try {
    const fs::path out(out_dir);
    if (verify->parsed()) return cmd_verify(sequence_path, out, std::cerr);
    const ExperimentConfig config = load_config(config_path, ov);
    if (build->parsed()) return cmd_build(config, out, std::cerr);
    if (mix->parsed()) return cmd_mix(config, sequence_path, out, std::cerr);
    if (entropy->parsed()) return cmd_entropy(config, sequence_path, out, std::cerr);
    if (sample->parsed()) return cmd_sample(config, sequence_path, out, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConditionFailure;
  }
  return kConfigError;
}

}  // namespace cfmix::cli
