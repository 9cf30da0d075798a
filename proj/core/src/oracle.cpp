#include "lcrg/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "lcrg/errors.hpp"

namespace lcrg {

namespace {

void require_distinct(std::span<const EdgeIndex> edges, std::size_t dim) {
  std::vector<EdgeIndex> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("edge set contains a repeated coordinate");
  }
  if (!sorted.empty() && sorted.back() >= dim) throw DomainError("edge index out of range");
}

void require_uniform(const SimplexModel& model) {
  if (!model.is_uniform()) throw DomainError("formula holds only for alpha = 1");
}

}  // namespace

double prob_all_absent(const SimplexModel& model, std::span<const EdgeIndex> absent, double p) {
  if (!(p >= 0.0)) throw DomainError("p must be non-negative");
  require_distinct(absent, model.dimension());
  const double x = model.alpha_of(absent) * p / model.budget();
  return pow_one_minus(x, static_cast<double>(model.dimension()));
}

BracketedProbability prob_absent_present(const SimplexModel& model,
                                         std::span<const EdgeIndex> absent,
                                         std::span<const EdgeIndex> present, double p) {
  if (!(p >= 0.0)) throw DomainError("p must be non-negative");
  require_distinct(absent, model.dimension());
  require_distinct(present, model.dimension());
  std::vector<EdgeIndex> both(absent.begin(), absent.end());
  both.insert(both.end(), present.begin(), present.end());
  std::sort(both.begin(), both.end());
  if (std::adjacent_find(both.begin(), both.end()) != both.end()) {
    throw DomainError("absent and present edge sets overlap");
  }

  const double dim = static_cast<double>(model.dimension());
  const double budget = model.budget();
  const double base = prob_all_absent(model, absent, p);
  if (present.empty()) return {base, base, base, true};

  double log_product = 0.0;
  for (EdgeIndex e : present) log_product += std::log(model.alpha(e));
  const double t = static_cast<double>(present.size());
  const double value = std::exp(log_product + t * std::log(dim * p / budget)) * base;

  const double alpha_s = model.alpha_of(absent);
  const double alpha_t = model.alpha_of(present);
  const double c = 2.0 * (t * t / dim + alpha_t * dim * p / budget + alpha_s * t * p / budget);
  return {value, value * std::exp(-c), value * std::exp(c), false};
}

double edge_prob_q(const SimplexModel& model, double p) {
  require_uniform(model);
  if (!(p >= 0.0)) throw DomainError("p must be non-negative");
  return 1.0 - pow_one_minus(p / model.budget(), static_cast<double>(model.dimension()));
}

double expected_edge_count(const SimplexModel& model, double p) {
  return edge_prob_q(model, p) * static_cast<double>(model.dimension());
}

double edge_count_variance_bound(const SimplexModel& model, double p) {
  return expected_edge_count(model, p);
}

IsolationProfile::IsolationProfile(const SimplexModel& model)
    : vertex_alpha_(lcrg::vertex_alphas(model)),
      dimension_(static_cast<double>(model.dimension())) {}

double IsolationProfile::xi(Vertex v, double p) const {
  return pow_one_minus(vertex_alpha_.at(v) * p / dimension_, dimension_);
}

double IsolationProfile::total(double p) const {
  double s = 0.0;
  for (double a : vertex_alpha_) s += pow_one_minus(a * p / dimension_, dimension_);
  return s;
}

double solve_p0(const SimplexModel& model) {
  const IsolationProfile profile(model);
  const auto alphas = profile.vertex_alphas();
  // Every xi_v vanishes at N / min alpha_v, so the sum drops from n > 1 to 0
  // on this bracket.
  double lo = 0.0;
  double hi = static_cast<double>(model.dimension()) / *std::min_element(alphas.begin(), alphas.end());
  for (int it = 0; it < 200 && hi - lo > 1e-12 * lo; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (profile.total(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double sigma_simplex(const SimplexModel& model, EdgeIndex e) {
  const double n = static_cast<double>(model.dimension());
  const double s = model.budget() / model.alpha(e);
  return 2.0 * s * s / ((n + 1.0) * (n + 2.0));
}

bool BasicBoundReport::all_hold() const noexcept {
  return std::all_of(rows.begin(), rows.end(),
                     [](const BasicBoundRow& r) { return r.upper_holds && r.lower_holds; });
}

BasicBoundReport check_basic_bounds(const DensityModel& model, EdgeIndex e,
                                    std::span<const double> grid) {
  BasicBoundReport report{model.standard_deviation(e), model.mode_density(e), {}, {}};
  // Relative slack for rounding in the CDF evaluation.
  constexpr double kSlack = 1e-12;
  for (double p : grid) {
    if (p > report.sd) {
      report.skipped.push_back(p);
      continue;
    }
    const double cdf = model.marginal_cdf(e, p);
    const double upper = p * report.mode_density;
    const double lower = upper / 2.0;
    report.rows.push_back({p, cdf, upper, lower, cdf <= upper * (1.0 + kSlack),
                           cdf >= lower * (1.0 - kSlack)});
  }
  return report;
}

}  // namespace lcrg
