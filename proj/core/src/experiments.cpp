#include "lcrg/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "lcrg/atsp.hpp"
#include "lcrg/errors.hpp"
#include "lcrg/graph_algorithms.hpp"
#include "lcrg/samplers.hpp"
#include "lcrg/threshold_graph.hpp"

namespace lcrg {

namespace {

// Calls fn(i) for i in [0, count) on up to `workers` threads. The first
// exception stops further work and is rethrown on the caller's thread.
template <class Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
  }
  if (error) std::rethrow_exception(error);
}

TrialRecord threshold_trial(const DensityModel& model, ExperimentKind kind, double p,
                            std::size_t p_index, std::size_t trial, std::uint64_t base,
                            EdgeIndex observed_edge) {
  TrialRecord rec;
  rec.p_index = p_index;
  rec.trial = trial;
  rec.seed = trial_seed(base, p_index, trial);
  rec.p = p;
  rec.n = model.space().vertex_count();
  SeededRng rng(rec.seed, 0);
  const WeightVector x = model.sample(rng);

  if (kind == ExperimentKind::kMarginals) {
    rec.outcome = x[observed_edge] <= p ? 1.0 : 0.0;
    return rec;
  }

  const ThresholdGraph g = threshold(x, p);
  rec.edges = g.edge_count();
  switch (kind) {
    case ExperimentKind::kConnectivity:
    case ExperimentKind::kGiant: {
      const ComponentSummary cs = components(g);
      rec.components = cs.count;
      rec.largest_fraction = cs.largest_fraction;
      rec.outcome = kind == ExperimentKind::kConnectivity ? (cs.count == 1 ? 1.0 : 0.0)
                                                          : cs.largest_fraction;
      break;
    }
    case ExperimentKind::kMatching:
      rec.outcome = bipartite_perfect_matching(g) ? 1.0 : 0.0;
      break;
    case ExperimentKind::kDiameter: {
      const std::size_t d = diameter(g);
      rec.diameter = d;
      rec.outcome = d == kInfiniteDiameter ? HUGE_VAL : static_cast<double>(d);
      break;
    }
    case ExperimentKind::kHamilton:
      rec.outcome = is_hamiltonian(g) ? 1.0 : 0.0;
      break;
    case ExperimentKind::kMoments:
      rec.outcome = static_cast<double>(g.edge_count());
      break;
    default:
      throw std::logic_error("threshold_trial: kind does not threshold");
  }
  return rec;
}

TrialRecord mst_trial(const SimplexModel& model, std::size_t trial, std::uint64_t base) {
  TrialRecord rec;
  rec.trial = trial;
  rec.seed = trial_seed(base, 0, trial);
  rec.n = model.vertex_count();
  SeededRng rng(rec.seed, 0);
  const double w = mst_weight(sample_simplex(model, rng)).weight;
  rec.mst_weight = w;
  rec.outcome = w;
  return rec;
}

TrialRecord atsp_trial(const SimplexModel& model, std::size_t size_index, std::size_t trial,
                       std::uint64_t base) {
  TrialRecord rec;
  rec.p_index = size_index;
  rec.trial = trial;
  rec.seed = trial_seed(base, size_index, trial);
  rec.n = model.vertex_count();
  SeededRng rng(rec.seed, 0);
  const CostMatrix costs = sample_row_symmetric_costs(model, rng);
  const AssignmentResult assignment = hungarian(costs);
  const Tour tour = patch(assignment, costs);
  if (!is_valid_tour(tour.order, costs.size())) {
    throw std::logic_error("patching produced an invalid tour");
  }
  rec.assignment_cost = assignment.cost;
  rec.tour_cost = tour.cost;
  rec.cycles = assignment.cycles.size();
  rec.outcome = tour.cost / assignment.cost;
  if (costs.size() <= kHeldKarpMaxVertices) rec.optimal_cost = held_karp(costs).cost;
  return rec;
}

double bound_of(std::span<const double> values) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return std::max(*hi, 1.0 / *lo);
}

std::vector<double> cycled_beta(std::span<const double> beta, std::size_t n) {
  std::vector<double> out(n, 1.0);
  if (!beta.empty()) {
    for (std::size_t v = 0; v < n; ++v) out[v] = beta[v % beta.size()];
  }
  return out;
}

std::vector<SummaryRow> summarize_records(ExperimentKind kind, std::span<const TrialRecord> records,
                                          std::size_t groups) {
  std::vector<SummaryRow> rows(groups);
  std::vector<std::vector<double>> outcomes(groups);
  std::vector<std::map<std::size_t, std::size_t>> diameters(groups);
  for (const TrialRecord& r : records) {
    outcomes[r.p_index].push_back(r.outcome);
    rows[r.p_index].p = r.p;
    rows[r.p_index].n = r.n;
    if (r.diameter) ++diameters[r.p_index][*r.diameter];
  }
  for (std::size_t i = 0; i < groups; ++i) {
    rows[i].p_index = i;
    rows[i].mean = summarize(outcomes[i]);
    if (is_predicate_kind(kind)) {
      const auto hits = static_cast<std::size_t>(
          std::count(outcomes[i].begin(), outcomes[i].end(), 1.0));
      rows[i].frequency = wilson_interval(hits, outcomes[i].size());
    }
    if (!diameters[i].empty()) {
      std::size_t best = 0;
      for (const auto& [d, count] : diameters[i]) {
        if (count > best) {
          best = count;
          rows[i].mode = d;
        }
      }
    }
  }
  return rows;
}

void write_number(std::string& out, double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

template <class T>
void write_field(std::string& out, const std::optional<T>& v) {
  out.push_back(',');
  if (!v) return;
  if constexpr (std::is_same_v<T, double>) {
    write_number(out, *v);
  } else {
    if (*v == kInfiniteDiameter) {
      out += "inf";
    } else {
      out += std::to_string(*v);
    }
  }
}

}  // namespace

double expected_derangement_cycles(std::size_t n) noexcept {
  if (n < 2) return 0.0;
  // D_n = (n-1)(D_{n-1} + D_{n-2}) counts derangements and
  // C_n = (n-1)(C_{n-1} + C_{n-2} + D_{n-2}) their total cycles; only the
  // ratios r = D_n / D_{n-1} and e = C_n / D_n are tracked.
  double e_prev = 1.0;
  double e = 1.0;
  double r = 2.0;
  if (n == 2) return 1.0;
  for (std::size_t m = 4; m <= n; ++m) {
    const double next = (e + (e_prev + 1.0) / r) / (1.0 + 1.0 / r);
    r = static_cast<double>(m - 1) * (1.0 + 1.0 / r);
    e_prev = e;
    e = next;
  }
  return e;
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t p_index, std::size_t trial) noexcept {
  return derive_seed(base, p_index, trial);
}

bool is_predicate_kind(ExperimentKind kind) noexcept {
  switch (kind) {
    case ExperimentKind::kConnectivity:
    case ExperimentKind::kMatching:
    case ExperimentKind::kHamilton:
    case ExperimentKind::kMarginals:
      return true;
    default:
      return false;
  }
}

std::vector<TrialRecord> run_threshold_trials(const DensityModel& model, ExperimentKind kind,
                                              std::span<const double> ps, std::size_t trials,
                                              std::uint64_t seed, std::size_t workers,
                                              EdgeIndex observed_edge) {
  for (double p : ps) {
    if (!(p >= 0.0)) throw ConfigError("threshold values must be non-negative");
  }
  std::vector<TrialRecord> records(ps.size() * trials);
  parallel_for(records.size(), workers, [&](std::size_t i) {
    const std::size_t p_index = i / trials;
    records[i] = threshold_trial(model, kind, ps[p_index], p_index, i % trials, seed, observed_edge);
  });
  return records;
}

SweepResult run_sweep(const ExperimentConfig& config) {
  validate(config);
  SweepResult result;
  result.kind = config.kind;
  const std::size_t trials = config.trials;

  if (config.kind == ExperimentKind::kMst) {
    const DecomposableWeights weights = build_decomposable(config);
    const double series = mst_series(weights, mst_series_mode(weights));
    const SimplexModel model = build_simplex(config);
    result.records.resize(trials);
    parallel_for(trials, config.workers,
                 [&](std::size_t t) { result.records[t] = mst_trial(model, t, config.seed); });
    if (trials > 0) {
      result.summary = summarize_records(config.kind, result.records, 1);
      result.summary[0].theory = series;
    }
    return result;
  }

  if (config.kind == ExperimentKind::kAtsp) {
    std::vector<std::size_t> sizes = config.sizes;
    if (sizes.empty()) sizes.push_back(config.n);
    std::vector<SimplexModel> models;
    for (std::size_t n : sizes) models.push_back(build_row_symmetric(config, n));
    result.records.resize(sizes.size() * trials);
    parallel_for(result.records.size(), config.workers, [&](std::size_t i) {
      result.records[i] = atsp_trial(models[i / trials], i / trials, i % trials, config.seed);
    });
    if (trials > 0) {
      result.summary = summarize_records(config.kind, result.records, sizes.size());
      for (std::size_t i = 0; i < sizes.size(); ++i) result.summary[i].n = sizes[i];
    }
    return result;
  }

  result.schedule = resolve_schedule(config);
  const DensityModel model = build_density(config);
  result.records = run_threshold_trials(model, config.kind, result.schedule, trials, config.seed,
                                        config.workers, config.edge);
  if (trials == 0) return result;
  result.summary = summarize_records(config.kind, result.records, result.schedule.size());
  for (std::size_t i = 0; i < result.schedule.size(); ++i) {
    SummaryRow& row = result.summary[i];
    const double p = result.schedule[i];
    if (config.schedule == ScheduleKind::kConnectivity) {
      row.theory = std::exp(-std::exp(-config.schedule_values[i]));
    } else if (config.kind == ExperimentKind::kMoments) {
      row.theory = expected_edge_count(std::get<SimplexModel>(model.kind()), p);
    } else if (config.kind == ExperimentKind::kMarginals) {
      row.theory = model.marginal_cdf(config.edge, p);
    }
  }
  return result;
}

void write_csv(std::ostream& out, const SweepResult& result) {
  std::string text =
      "p_index,trial,seed,n,p,outcome,edges,components,largest_fraction,diameter,mst_weight,"
      "assignment_cost,tour_cost,optimal_cost,cycles\n";
  for (const TrialRecord& r : result.records) {
    text += std::to_string(r.p_index);
    text += ',' + std::to_string(r.trial);
    text += ',' + std::to_string(r.seed);
    text += ',' + std::to_string(r.n);
    write_field(text, r.p);
    text.push_back(',');
    write_number(text, r.outcome);
    write_field(text, r.edges);
    write_field(text, r.components);
    write_field(text, r.largest_fraction);
    write_field(text, r.diameter);
    write_field(text, r.mst_weight);
    write_field(text, r.assignment_cost);
    write_field(text, r.tour_cost);
    write_field(text, r.optimal_cost);
    write_field(text, r.cycles);
    text.push_back('\n');
  }
  if (!result.summary.empty()) {
    text +=
        "#summary,p_index,n,p,trials,successes,frequency,wilson_lo,wilson_hi,mean,std_error,mode,"
        "theory\n";
  }
  for (const SummaryRow& s : result.summary) {
    text += "#summary," + std::to_string(s.p_index) + ',' + std::to_string(s.n);
    write_field(text, s.p);
    text += ',' + std::to_string(s.mean.count);
    if (s.frequency) {
      text += ',' + std::to_string(s.frequency->successes);
      write_field(text, std::optional<double>(s.frequency->estimate));
      write_field(text, std::optional<double>(s.frequency->lower));
      write_field(text, std::optional<double>(s.frequency->upper));
    } else {
      text += ",,,,";
    }
    write_field(text, std::optional<double>(s.mean.mean));
    write_field(text, std::optional<double>(s.mean.std_error));
    write_field(text, s.mode);
    write_field(text, s.theory);
    text.push_back('\n');
  }
  out << text;
}

std::vector<LimitLawRow> connectivity_limit_experiment(std::size_t n, std::span<const double> cs,
                                                       std::size_t trials, std::uint64_t seed,
                                                       std::size_t workers) {
  const double dn = static_cast<double>(n);
  std::vector<double> ps;
  for (double c : cs) {
    const double p = (std::log(dn) + c) / dn;
    if (!(p > 0.0)) throw ConfigError("c too small: (ln n + c)/n must be positive");
    ps.push_back(p);
  }
  const DensityModel model(SimplexModel::uniform(EdgeSpace::undirected(n)));
  const auto records =
      run_threshold_trials(model, ExperimentKind::kConnectivity, ps, trials, seed, workers);
  const auto summary = summarize_records(ExperimentKind::kConnectivity, records, ps.size());
  std::vector<LimitLawRow> rows;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Proportion freq =
        trials > 0 ? *summary[i].frequency : wilson_interval(0, 0);
    rows.push_back({cs[i], ps[i], freq, std::exp(-std::exp(-cs[i]))});
  }
  return rows;
}

TransitionResult threshold_transition_experiment(const SimplexModel& model, double eps,
                                                 std::size_t trials, std::uint64_t seed,
                                                 std::size_t workers) {
  if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("eps must lie in (0, 1)");
  TransitionResult out;
  out.eps = eps;
  out.p0 = solve_p0(model);
  out.bound = model.effective_bound();
  out.hypothesis_ok =
      out.bound <= std::pow(std::log(static_cast<double>(model.vertex_count())), 0.25);
  const double ps[2] = {(1.0 - eps) * out.p0, (1.0 + eps) * out.p0};
  const DensityModel density(model);
  const auto records =
      run_threshold_trials(density, ExperimentKind::kConnectivity, ps, trials, seed, workers);
  const auto summary = summarize_records(ExperimentKind::kConnectivity, records, 2);
  out.below = summary[0].frequency.value_or(wilson_interval(0, 0));
  out.above = summary[1].frequency.value_or(wilson_interval(0, 0));
  return out;
}

SeriesMode mst_series_mode(const DecomposableWeights& weights) {
  if (distinct_weight_count(weights) <= 4) return SeriesMode::kGrouped;
  if (weights.vertex_count() <= 20) return SeriesMode::kExact;
  throw ConfigError("no exact series mode for this d profile (needs <= 4 distinct values or n <= 20)");
}

MstExperimentResult mst_experiment(const DecomposableWeights& weights, std::size_t trials,
                                   std::uint64_t seed, std::size_t workers) {
  MstExperimentResult out;
  out.mode = mst_series_mode(weights);
  out.series = mst_series(weights, out.mode);
  const SimplexModel model = SimplexModel::decomposable(weights);
  std::vector<double> values(trials);
  parallel_for(trials, workers,
               [&](std::size_t t) { values[t] = mst_trial(model, t, seed).outcome; });
  out.monte_carlo = summarize(values);
  out.relative_gap = std::abs(out.monte_carlo.mean - out.series) / out.series;
  return out;
}

std::vector<AtspRow> atsp_experiment(std::span<const double> beta,
                                     std::span<const std::size_t> sizes, std::size_t trials,
                                     std::uint64_t seed, std::size_t workers) {
  std::vector<SimplexModel> models;
  for (std::size_t n : sizes) {
    if (n < 2) throw ConfigError("atsp sizes must be at least 2");
    models.push_back(SimplexModel::row_symmetric(cycled_beta(beta, n)));
  }
  std::vector<TrialRecord> records(sizes.size() * trials);
  parallel_for(records.size(), workers, [&](std::size_t i) {
    records[i] = atsp_trial(models[i / trials], i / trials, i % trials, seed);
  });

  std::vector<AtspRow> rows;
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    AtspRow row;
    row.n = sizes[s];
    row.expected_cycles = expected_derangement_cycles(sizes[s]);
    row.bound = bound_of(cycled_beta(beta, sizes[s]));
    std::vector<double> ratio, exact_ratio, cycles;
    for (std::size_t t = 0; t < trials; ++t) {
      const TrialRecord& r = records[s * trials + t];
      ratio.push_back(r.outcome);
      cycles.push_back(static_cast<double>(*r.cycles));
      if (r.optimal_cost) {
        exact_ratio.push_back(*r.tour_cost / *r.optimal_cost);
        // Relative slack absorbs rounding between the two solvers.
        const double tol = 1e-9 * std::max(1.0, *r.optimal_cost);
        if (*r.assignment_cost > *r.optimal_cost + tol) row.assignment_never_above_optimum = false;
        if (*r.tour_cost < *r.optimal_cost - tol) row.tour_never_below_optimum = false;
      }
    }
    row.tour_over_assignment = summarize(ratio);
    row.cycles = summarize(cycles);
    if (sizes[s] <= kHeldKarpMaxVertices) row.tour_over_optimum = summarize(exact_ratio);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lcrg
