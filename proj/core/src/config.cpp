#include "lcrg/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "lcrg/errors.hpp"
#include "lcrg/graph_algorithms.hpp"
#include "lcrg/oracle.hpp"

namespace lcrg {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("key '" + key + "': '" + text + "' is not a number");
  }
  return value;
}

template <class Int>
Int parse_integer(const std::string& key, const std::string& text) {
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("key '" + key + "': '" + text + "' is not a non-negative integer");
  }
  return value;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) out.push_back(parse_double(key, item));
  if (out.empty()) throw ConfigError("key '" + key + "' needs at least one value");
  return out;
}

const std::map<std::string, ExperimentKind>& kind_names() {
  static const std::map<std::string, ExperimentKind> names{
      {"connectivity", ExperimentKind::kConnectivity}, {"matching", ExperimentKind::kMatching},
      {"giant", ExperimentKind::kGiant},               {"diameter", ExperimentKind::kDiameter},
      {"hamilton", ExperimentKind::kHamilton},         {"mst", ExperimentKind::kMst},
      {"atsp", ExperimentKind::kAtsp},                 {"moments", ExperimentKind::kMoments},
      {"marginals", ExperimentKind::kMarginals}};
  return names;
}

void set_schedule(ExperimentConfig& cfg, ScheduleKind kind, const std::string& key,
                  const std::string& value) {
  if (cfg.schedule != ScheduleKind::kNone) {
    throw ConfigError("only one p schedule may be given (second one: '" + key + "')");
  }
  cfg.schedule = kind;
  cfg.schedule_values = parse_doubles(key, value);
}

bool is_threshold_kind(ExperimentKind k) {
  return k != ExperimentKind::kMst && k != ExperimentKind::kAtsp;
}

double cycled(const std::vector<double>& values, std::size_t i) {
  return values[i % values.size()];
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  for (const auto& [name, k] : kind_names()) {
    if (k == kind) return name;
  }
  return "unknown";
}

ExperimentKind parse_kind(const std::string& text) {
  const auto it = kind_names().find(text);
  if (it == kind_names().end()) throw ConfigError("unknown experiment kind '" + text + "'");
  return it->second;
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "kind") {
      cfg.kind = parse_kind(value);
    } else if (key == "model") {
      if (value == "simplex") {
        cfg.model = ModelKind::kSimplex;
      } else if (value == "exponential") {
        cfg.model = ModelKind::kExponential;
      } else if (value == "orthant-ball") {
        cfg.model = ModelKind::kOrthantBall;
      } else {
        throw ConfigError("unknown model '" + value + "'");
      }
    } else if (key == "n") {
      cfg.n = parse_integer<std::size_t>(key, value);
    } else if (key == "alpha") {
      if (value == "uniform") {
        cfg.alpha = AlphaKind::kUniform;
      } else if (value == "bounded") {
        cfg.alpha = AlphaKind::kBounded;
      } else if (value == "decomposable") {
        cfg.alpha = AlphaKind::kDecomposable;
      } else {
        throw ConfigError("unknown alpha kind '" + value + "'");
      }
    } else if (key == "alpha_bound") {
      cfg.alpha_bound = parse_double(key, value);
    } else if (key == "alpha_seed") {
      cfg.alpha_seed = parse_integer<std::uint64_t>(key, value);
    } else if (key == "d") {
      cfg.d = parse_doubles(key, value);
    } else if (key == "beta") {
      cfg.beta = parse_doubles(key, value);
    } else if (key == "budget") {
      cfg.budget = parse_double(key, value);
    } else if (key == "rate") {
      cfg.rate = parse_double(key, value);
    } else if (key == "radius") {
      cfg.radius = parse_double(key, value);
    } else if (key == "p") {
      set_schedule(cfg, ScheduleKind::kExplicit, key, value);
    } else if (key == "c") {
      set_schedule(cfg, ScheduleKind::kConnectivity, key, value);
    } else if (key == "eps") {
      set_schedule(cfg, ScheduleKind::kP0Band, key, value);
    } else if (key == "theta") {
      set_schedule(cfg, ScheduleKind::kDiameter, key, value);
    } else if (key == "p_times_n") {
      set_schedule(cfg, ScheduleKind::kScaledByN, key, value);
    } else if (key == "sigma_multiples") {
      set_schedule(cfg, ScheduleKind::kSigmaMultiples, key, value);
    } else if (key == "sizes") {
      cfg.sizes.clear();
      for (const auto& item : split_list(value)) {
        cfg.sizes.push_back(parse_integer<std::size_t>(key, item));
      }
    } else if (key == "edge") {
      cfg.edge = parse_integer<std::size_t>(key, value);
    } else if (key == "trials") {
      cfg.trials = parse_integer<std::size_t>(key, value);
    } else if (key == "seed") {
      cfg.seed = parse_integer<std::uint64_t>(key, value);
    } else if (key == "workers") {
      cfg.workers = parse_integer<std::size_t>(key, value);
    } else if (key == "out") {
      cfg.out = value;
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

void validate(const ExperimentConfig& cfg) {
  const bool atsp = cfg.kind == ExperimentKind::kAtsp;
  if (!atsp && cfg.n < 2) throw ConfigError("n must be at least 2");
  if (atsp) {
    if (cfg.sizes.empty() && cfg.n < 2) throw ConfigError("atsp needs n or sizes");
    for (std::size_t s : cfg.sizes) {
      if (s < 2) throw ConfigError("atsp sizes must be at least 2");
    }
  }
  if (cfg.workers == 0) throw ConfigError("workers must be positive");
  if (cfg.budget && !(*cfg.budget > 0.0)) throw ConfigError("budget must be positive");
  if (cfg.model == ModelKind::kExponential && !(cfg.rate > 0.0)) {
    throw ConfigError("rate must be positive");
  }
  if (cfg.radius && !(*cfg.radius > 0.0)) throw ConfigError("radius must be positive");
  if (cfg.alpha == AlphaKind::kBounded && !(cfg.alpha_bound >= 1.0)) {
    throw ConfigError("alpha_bound must be >= 1");
  }
  if (cfg.alpha == AlphaKind::kDecomposable && cfg.d.empty()) {
    throw ConfigError("alpha = decomposable needs a d list");
  }
  for (double v : cfg.d) {
    if (!(v > 0.0)) throw ConfigError("d values must be positive");
  }
  for (double v : cfg.beta) {
    if (!(v > 0.0)) throw ConfigError("beta values must be positive");
  }

  const bool simplex = cfg.model == ModelKind::kSimplex;
  const bool uniform = simplex && cfg.alpha == AlphaKind::kUniform;

  if (is_threshold_kind(cfg.kind)) {
    if (cfg.schedule == ScheduleKind::kNone) {
      throw ConfigError("kind '" + to_string(cfg.kind) + "' needs a p schedule");
    }
  } else if (cfg.schedule != ScheduleKind::kNone) {
    throw ConfigError("kind '" + to_string(cfg.kind) + "' does not take a p schedule");
  }

  switch (cfg.schedule) {
    case ScheduleKind::kConnectivity:
      if (!uniform) throw ConfigError("the c schedule (connectivity limit law) requires alpha = 1");
      break;
    case ScheduleKind::kP0Band:
      if (!simplex) throw ConfigError("the eps schedule is defined through p_0 of a simplex model");
      for (double eps : cfg.schedule_values) {
        if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("eps must lie in (0, 1)");
      }
      break;
    case ScheduleKind::kDiameter:
      for (double theta : cfg.schedule_values) {
        if (!(theta > 0.0 && theta < 1.0)) throw ConfigError("theta must lie in (0, 1)");
      }
      break;
    default:
      break;
  }

  switch (cfg.kind) {
    case ExperimentKind::kMatching:
      if (cfg.n % 2 != 0) throw ConfigError("matching needs an even n");
      break;
    case ExperimentKind::kHamilton:
      if (cfg.n > kHamiltonianMaxVertices) {
        throw CapacityError("hamilton experiments support n <= 24");
      }
      break;
    case ExperimentKind::kMst:
      if (!simplex || cfg.alpha == AlphaKind::kBounded) {
        throw ConfigError("mst compares against the series and needs a decomposable simplex");
      }
      break;
    case ExperimentKind::kAtsp:
      if (!simplex || cfg.alpha != AlphaKind::kUniform) {
        throw ConfigError("atsp uses a row-symmetric simplex; set beta instead of alpha");
      }
      break;
    case ExperimentKind::kMoments:
      if (!uniform) throw ConfigError("moments compares against q N, which needs alpha = 1");
      break;
    case ExperimentKind::kMarginals: {
      const std::size_t dim = cfg.n * (cfg.n - 1) / 2;
      if (cfg.edge >= dim) throw ConfigError("edge index out of range");
      break;
    }
    default:
      break;
  }
  if (!simplex && cfg.alpha != AlphaKind::kUniform) {
    throw ConfigError("alpha applies to the simplex model only");
  }
}

DecomposableWeights build_decomposable(const ExperimentConfig& cfg) {
  if (cfg.alpha == AlphaKind::kUniform) return DecomposableWeights::uniform(cfg.n);
  if (cfg.alpha != AlphaKind::kDecomposable) {
    throw ConfigError("config does not describe decomposable weights");
  }
  std::vector<double> d(cfg.n);
  for (std::size_t v = 0; v < cfg.n; ++v) d[v] = cycled(cfg.d, v);
  return DecomposableWeights(std::move(d));
}

SimplexModel build_simplex(const ExperimentConfig& cfg) {
  if (cfg.model != ModelKind::kSimplex) throw ConfigError("config does not describe a simplex");
  const auto space = EdgeSpace::undirected(cfg.n);
  switch (cfg.alpha) {
    case AlphaKind::kUniform:
      return SimplexModel::uniform(space, cfg.budget);
    case AlphaKind::kDecomposable:
      return SimplexModel::decomposable(build_decomposable(cfg), cfg.budget);
    case AlphaKind::kBounded: {
      SeededRng rng(cfg.alpha_seed, 0);
      const double lo = 1.0 / cfg.alpha_bound;
      std::vector<double> alpha(space.size());
      for (double& a : alpha) a = lo + (cfg.alpha_bound - lo) * rng.uniform();
      return SimplexModel(space, std::move(alpha), cfg.budget, cfg.alpha_bound);
    }
  }
  throw ConfigError("unknown alpha kind");
}

SimplexModel build_row_symmetric(const ExperimentConfig& cfg, std::size_t n) {
  std::vector<double> beta(n, 1.0);
  if (!cfg.beta.empty()) {
    for (std::size_t v = 0; v < n; ++v) beta[v] = cycled(cfg.beta, v);
  }
  return SimplexModel::row_symmetric(std::move(beta), cfg.budget);
}

DensityModel build_density(const ExperimentConfig& cfg) {
  const auto space = EdgeSpace::undirected(cfg.n);
  switch (cfg.model) {
    case ModelKind::kSimplex:
      return DensityModel(build_simplex(cfg));
    case ModelKind::kExponential:
      return DensityModel(ProductExponential{space, std::vector<double>(space.size(), cfg.rate)});
    case ModelKind::kOrthantBall: {
      // Default radius gives E(X_e^2) = 1.
      const double r = cfg.radius.value_or(std::sqrt(static_cast<double>(space.size()) + 2.0));
      return DensityModel(OrthantBall{space, r});
    }
  }
  throw ConfigError("unknown model kind");
}

std::vector<double> resolve_schedule(const ExperimentConfig& cfg) {
  const double n = static_cast<double>(cfg.n);
  std::vector<double> ps;
  switch (cfg.schedule) {
    case ScheduleKind::kNone:
      return ps;
    case ScheduleKind::kExplicit:
      ps = cfg.schedule_values;
      break;
    case ScheduleKind::kConnectivity:
      for (double c : cfg.schedule_values) ps.push_back((std::log(n) + c) / n);
      break;
    case ScheduleKind::kP0Band: {
      const double p0 = solve_p0(build_simplex(cfg));
      for (double eps : cfg.schedule_values) {
        ps.push_back((1.0 - eps) * p0);
        ps.push_back((1.0 + eps) * p0);
      }
      break;
    }
    case ScheduleKind::kDiameter:
      for (double theta : cfg.schedule_values) ps.push_back(std::pow(n, theta - 1.0));
      break;
    case ScheduleKind::kScaledByN:
      for (double c : cfg.schedule_values) ps.push_back(c / n);
      break;
    case ScheduleKind::kSigmaMultiples: {
      const double sigma = build_density(cfg).sigma_max();
      for (double c : cfg.schedule_values) ps.push_back(c * sigma * std::log(n) / n);
      break;
    }
  }
  for (double p : ps) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw ConfigError("schedule resolved to a non-positive or non-finite p");
    }
  }
  return ps;
}

}  // namespace lcrg
