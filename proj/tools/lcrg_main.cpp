// Command line front end: sample, oracle, sweep, mst, atsp, selftest.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lcrg/atsp.hpp"
#include "lcrg/config.hpp"
#include "lcrg/errors.hpp"
#include "lcrg/experiments.hpp"
#include "lcrg/graph_algorithms.hpp"
#include "lcrg/oracle.hpp"
#include "lcrg/samplers.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitCapacity = 3;

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> workers;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool needs_config) {
  auto* opt = cmd->add_option("--config", flags.config, "experiment config file");
  if (needs_config) opt->required()->check(CLI::ExistingFile);
  cmd->add_option("--seed", flags.seed, "base seed (overrides config)");
  cmd->add_option("--trials", flags.trials, "trials per p value (overrides config)");
  cmd->add_option("--workers", flags.workers, "worker threads (overrides config)");
  cmd->add_option("--out", flags.out, "output path (default: config 'out' or stdout)");
}

lcrg::ExperimentConfig load(const CommonFlags& flags) {
  lcrg::ExperimentConfig cfg = lcrg::load_config(flags.config);
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.trials) cfg.trials = *flags.trials;
  if (flags.workers) cfg.workers = *flags.workers;
  if (!flags.out.empty()) cfg.out = flags.out;
  return cfg;
}

// Writes `text` to `path`, or stdout when path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw lcrg::ConfigError("cannot write '" + path + "'");
  file << text;
}

int cmd_sample(const CommonFlags& flags) {
  lcrg::ExperimentConfig cfg = load(flags);
  if (cfg.n < 2) throw lcrg::ConfigError("n must be at least 2");
  const lcrg::DensityModel model = lcrg::build_density(cfg);
  lcrg::SeededRng rng(cfg.seed, 0);
  const lcrg::WeightVector x = model.sample(rng);
  std::ostringstream os;
  os << std::setprecision(17) << "edge,i,j,x\n";
  for (lcrg::EdgeIndex e = 0; e < x.size(); ++e) {
    const auto [i, j] = x.space().endpoints(e);
    os << e << ',' << i << ',' << j << ',' << x[e] << '\n';
  }
  emit(cfg.out, os.str());
  return 0;
}

int cmd_oracle(const CommonFlags& flags) {
  lcrg::ExperimentConfig cfg = load(flags);
  lcrg::validate(cfg);
  std::ostringstream os;
  os << std::setprecision(12);
  os << "n=" << cfg.n << '\n';
  const lcrg::DensityModel density = lcrg::build_density(cfg);
  os << "sigma_min=" << density.sigma_min() << "\nsigma_max=" << density.sigma_max() << '\n';
  if (cfg.model == lcrg::ModelKind::kSimplex) {
    const lcrg::SimplexModel model = lcrg::build_simplex(cfg);
    os << "budget=" << model.budget() << "\nbound_M=" << model.effective_bound() << '\n';
    os << "p0=" << lcrg::solve_p0(model) << '\n';
    if (cfg.alpha != lcrg::AlphaKind::kBounded) {
      const auto weights = lcrg::build_decomposable(cfg);
      try {
        const auto mode = lcrg::mst_series_mode(weights);
        os << "mst_series=" << lcrg::mst_series(weights, mode) << '\n';
      } catch (const lcrg::ConfigError&) {
        os << "mst_series=" << lcrg::mst_series(weights, lcrg::SeriesMode::kTruncated)
           << " (truncated)\n";
      }
    }
  }
  const auto ps = lcrg::resolve_schedule(cfg);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    os << "p[" << i << "]=" << ps[i] << " marginal_cdf=" << density.marginal_cdf(cfg.edge, ps[i]);
    if (cfg.model == lcrg::ModelKind::kSimplex) {
      const lcrg::SimplexModel model = lcrg::build_simplex(cfg);
      const lcrg::IsolationProfile iso(model);
      os << " sum_xi=" << iso.total(ps[i]);
      if (model.is_uniform()) {
        os << " q=" << lcrg::edge_prob_q(model, ps[i])
           << " expected_edges=" << lcrg::expected_edge_count(model, ps[i]);
      }
    }
    os << '\n';
  }
  emit(cfg.out, os.str());
  return 0;
}

int cmd_sweep(const CommonFlags& flags) {
  const lcrg::ExperimentConfig cfg = load(flags);
  const lcrg::SweepResult result = lcrg::run_sweep(cfg);
  std::ostringstream os;
  lcrg::write_csv(os, result);
  emit(cfg.out, os.str());
  return 0;
}

int cmd_mst(const CommonFlags& flags) {
  lcrg::ExperimentConfig cfg = load(flags);
  cfg.kind = lcrg::ExperimentKind::kMst;
  cfg.schedule = lcrg::ScheduleKind::kNone;
  lcrg::validate(cfg);
  const auto r =
      lcrg::mst_experiment(lcrg::build_decomposable(cfg), cfg.trials, cfg.seed, cfg.workers);
  std::ostringstream os;
  os << std::setprecision(12) << "n=" << cfg.n << "\ntrials=" << r.monte_carlo.count
     << "\nmc_mean=" << r.monte_carlo.mean << "\nmc_std_error=" << r.monte_carlo.std_error
     << "\nseries=" << r.series
     << "\nseries_mode=" << (r.mode == lcrg::SeriesMode::kGrouped ? "grouped" : "exact")
     << "\nrelative_gap=" << r.relative_gap << '\n';
  emit(cfg.out, os.str());
  return 0;
}

int cmd_atsp(const CommonFlags& flags, const std::string& costs_path) {
  std::ostringstream os;
  os << std::setprecision(12);
  if (!costs_path.empty()) {
    std::ifstream in(costs_path);
    if (!in) throw lcrg::ConfigError("cannot open '" + costs_path + "'");
    const lcrg::CostMatrix costs = lcrg::read_cost_matrix(in);
    const auto assignment = lcrg::hungarian(costs);
    const auto traced = lcrg::patch_traced(assignment, costs);
    os << "n=" << costs.size() << "\nassignment_cost=" << assignment.cost
       << "\ncycles=" << assignment.cycles.size() << "\ntour_cost=" << traced.tour.cost
       << "\ntour=";
    for (std::size_t k = 0; k < traced.tour.order.size(); ++k) {
      os << (k ? " " : "") << traced.tour.order[k];
    }
    os << '\n';
    for (const auto& s : traced.steps) {
      os << "patch remove (" << s.a << "," << s.b << ") (" << s.c << "," << s.d
         << ") added_cost=" << s.added_cost << " increase=" << s.cost_increase << '\n';
    }
    if (costs.size() <= lcrg::kHeldKarpMaxVertices) {
      os << "optimal_cost=" << lcrg::held_karp(costs).cost << '\n';
    }
    emit(flags.out, os.str());
    return 0;
  }
  if (flags.config.empty()) throw lcrg::ConfigError("atsp needs --costs or --config");
  lcrg::ExperimentConfig cfg = load(flags);
  cfg.kind = lcrg::ExperimentKind::kAtsp;
  lcrg::validate(cfg);
  std::vector<std::size_t> sizes = cfg.sizes;
  if (sizes.empty()) sizes.push_back(cfg.n);
  const auto rows = lcrg::atsp_experiment(cfg.beta, sizes, cfg.trials, cfg.seed, cfg.workers);
  os << "n,trials,bound_M,tour_over_assignment,std_error,tour_over_optimum,mean_cycles,expected_cycles\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.tour_over_assignment.count << ',' << r.bound << ','
       << r.tour_over_assignment.mean << ',' << r.tour_over_assignment.std_error << ',';
    if (r.tour_over_optimum) os << r.tour_over_optimum->mean;
    os << ',' << r.cycles.mean << ',' << r.expected_cycles << '\n';
  }
  emit(cfg.out, os.str());
  return 0;
}

// Fast smoke checks of the exact oracles; the full suite lives in ctest.
int cmd_selftest() {
  int failures = 0;
  auto check = [&](const char* name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
    if (!ok) ++failures;
  };

  const auto uniform = lcrg::SimplexModel::uniform(lcrg::EdgeSpace::undirected(20));
  const lcrg::IsolationProfile iso(uniform);
  const double p0 = lcrg::solve_p0(uniform);
  check("p0 residual", std::abs(iso.total(p0) - 1.0) <= 1e-9);

  const double series = lcrg::mst_series(lcrg::DecomposableWeights::uniform(4),
                                         lcrg::SeriesMode::kExact);
  check("mst series n=4", std::abs(series - 1.1091037326388888) < 1e-9);

  const auto dw = lcrg::DecomposableWeights::uniform(12);
  check("series grouped == exact",
        std::abs(lcrg::mst_series(dw, lcrg::SeriesMode::kGrouped) -
                 lcrg::mst_series(dw, lcrg::SeriesMode::kExact)) < 1e-10);

  lcrg::SeededRng rng(7, 0);
  const auto model = lcrg::SimplexModel::row_symmetric(std::vector<double>(9, 1.0));
  bool atsp_ok = true;
  for (int t = 0; t < 10; ++t) {
    const auto costs = lcrg::sample_row_symmetric_costs(model, rng);
    const auto a = lcrg::hungarian(costs);
    const auto tour = lcrg::patch(a, costs);
    const double opt = lcrg::held_karp(costs).cost;
    atsp_ok = atsp_ok && lcrg::is_valid_tour(tour.order, 9) && a.cost <= opt + 1e-9 &&
              tour.cost >= opt - 1e-9;
  }
  check("assignment <= optimum <= patched tour", atsp_ok);

  const auto x = lcrg::sample_simplex(uniform, rng);
  const auto g = lcrg::threshold(x, p0);
  check("component sizes sum to n", [&] {
    std::size_t total = 0;
    for (std::size_t s : lcrg::components(g).sizes()) total += s;
    return total == 20;
  }());

  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random graphs from thresholded logconcave edge weights"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string costs_path;
  auto* sample = app.add_subcommand("sample", "draw one weight vector as CSV");
  add_common(sample, flags, true);
  auto* oracle = app.add_subcommand("oracle", "print closed-form quantities for a config");
  add_common(oracle, flags, true);
  auto* sweep = app.add_subcommand("sweep", "run a seeded experiment and write CSV");
  add_common(sweep, flags, true);
  auto* mst = app.add_subcommand("mst", "Monte Carlo MST weight against the series");
  add_common(mst, flags, true);
  auto* atsp = app.add_subcommand("atsp", "solve a cost matrix or run the patching experiment");
  add_common(atsp, flags, false);
  atsp->add_option("--costs", costs_path, "cost matrix CSV (n=<int> then n rows)")
      ->check(CLI::ExistingFile);
  auto* selftest = app.add_subcommand("selftest", "quick oracle consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (sample->parsed()) return cmd_sample(flags);
    if (oracle->parsed()) return cmd_oracle(flags);
    if (sweep->parsed()) return cmd_sweep(flags);
    if (mst->parsed()) return cmd_mst(flags);
    if (atsp->parsed()) return cmd_atsp(flags, costs_path);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const lcrg::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const lcrg::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const lcrg::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
