#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lcrg/errors.hpp"
#include "lcrg/oracle.hpp"
#include "lcrg/samplers.hpp"
#include "lcrg/statistics.hpp"

namespace lcrg {
namespace {

std::vector<EdgeIndex> star(const EdgeSpace& s, Vertex v) {
  std::vector<EdgeIndex> out;
  for (Vertex w = 0; w < s.vertex_count(); ++w) {
    if (w != v) out.push_back(s.index(v, w));
  }
  return out;
}

// P(S absent, T present) by inclusion-exclusion over subsets of T, using
// the exact all-absent formula for each S u U.
double absent_present_exact(const SimplexModel& m, std::vector<EdgeIndex> s,
                            const std::vector<EdgeIndex>& t, double p) {
  double total = 0.0;
  for (unsigned mask = 0; mask < (1u << t.size()); ++mask) {
    std::vector<EdgeIndex> u = s;
    int sign = 1;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if ((mask >> k) & 1u) {
        u.push_back(t[k]);
        sign = -sign;
      }
    }
    total += sign * prob_all_absent(m, u, p);
  }
  return total;
}

TEST(ProbAllAbsent, Examples) {
  const auto m = SimplexModel::uniform(EdgeSpace::undirected(4));
  const std::vector<EdgeIndex> s{0, 3};
  EXPECT_NEAR(prob_all_absent(m, s, 0.5), std::pow(5.0 / 6.0, 6.0), 1e-15);
  EXPECT_NEAR(prob_all_absent(m, s, 0.5), 0.33490, 5e-6);
  EXPECT_EQ(prob_all_absent(m, {}, 0.7), 1.0);
  EXPECT_EQ(prob_all_absent(m, s, 3.0), 0.0);
  EXPECT_THROW(prob_all_absent(m, std::vector<EdgeIndex>{1, 1}, 0.5), DomainError);
  EXPECT_THROW(prob_all_absent(m, s, -0.5), DomainError);
}

TEST(ProbAllAbsent, StarEqualsIsolation) {
  const auto m = SimplexModel::decomposable(DecomposableWeights({0.5, 1.0, 2.0, 1.5, 0.8}));
  const IsolationProfile iso(m);
  for (Vertex v = 0; v < 5; ++v) {
    for (double p : {0.0, 0.1, 0.4, 1.3}) {
      EXPECT_NEAR(prob_all_absent(m, star(m.space(), v), p), iso.xi(v, p), 1e-14);
    }
  }
}

TEST(ProbAllAbsent, MonotoneInSetExhaustive) {
  const auto m = SimplexModel::uniform(EdgeSpace::undirected(4));
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<EdgeIndex> s;
    for (EdgeIndex e = 0; e < 6; ++e) {
      if ((mask >> e) & 1u) s.push_back(e);
    }
    for (EdgeIndex e = 0; e < 6; ++e) {
      if ((mask >> e) & 1u) continue;
      auto bigger = s;
      bigger.push_back(e);
      EXPECT_LE(prob_all_absent(m, bigger, 0.4), prob_all_absent(m, s, 0.4));
    }
  }
}

TEST(ProbAllAbsent, DependsOnlyOnAlphaTotal) {
  const SimplexModel m(EdgeSpace::undirected(4), {1.0, 2.0, 3.0, 1.0, 4.0, 2.0});
  // alpha({0, 4}) = 5 = alpha({1, 2}).
  EXPECT_DOUBLE_EQ(prob_all_absent(m, std::vector<EdgeIndex>{0, 4}, 0.3),
                   prob_all_absent(m, std::vector<EdgeIndex>{1, 2}, 0.3));
}

TEST(ProbAllAbsent, MonteCarloAgreement) {
  SeededRng rng(21, 0);
  const auto m = SimplexModel::decomposable(DecomposableWeights({0.7, 1.0, 1.4, 0.9, 1.2, 1.1}));
  const std::vector<EdgeIndex> s{0, 4, 9, 12};
  const double p = 0.15;
  const int trials = 100000;
  std::size_t hits = 0;
  for (int t = 0; t < trials; ++t) {
    const auto x = sample_simplex(m, rng);
    hits += std::all_of(s.begin(), s.end(), [&](EdgeIndex e) { return x[e] > p; });
  }
  EXPECT_TRUE(wilson_interval(hits, trials, 3.0).contains(prob_all_absent(m, s, p)));
}

TEST(ProbAbsentPresent, EmptyTIsExact) {
  const auto m = SimplexModel::uniform(EdgeSpace::undirected(5));
  const std::vector<EdgeIndex> s{1, 2};
  const auto r = prob_absent_present(m, s, {}, 0.2);
  EXPECT_TRUE(r.exact);
  EXPECT_DOUBLE_EQ(r.value, prob_all_absent(m, s, 0.2));
  EXPECT_DOUBLE_EQ(r.lower, r.value);
  EXPECT_DOUBLE_EQ(r.upper, r.value);
}

TEST(ProbAbsentPresent, OverlapRejected) {
  const auto m = SimplexModel::uniform(EdgeSpace::undirected(5));
  EXPECT_THROW(prob_absent_present(m, std::vector<EdgeIndex>{1, 2},
                                   std::vector<EdgeIndex>{2}, 0.2),
               DomainError);
}

TEST(ProbAbsentPresent, SingleEdgeValue) {
  const auto m = SimplexModel::uniform(EdgeSpace::undirected(30));
  const std::vector<EdgeIndex> t{17};
  const auto r = prob_absent_present(m, {}, t, 0.05);
  EXPECT_NEAR(r.value, 0.05, 1e-15);
  EXPECT_FALSE(r.exact);
  SeededRng rng(22, 0);
  const int trials = 100000;
  std::size_t hits = 0;
  for (int k = 0; k < trials; ++k) hits += sample_simplex(m, rng)[17] <= 0.05;
  EXPECT_TRUE(r.contains(static_cast<double>(hits) / trials));
}

TEST(ProbAbsentPresent, StarExampleMonteCarlo) {
  const auto m = SimplexModel::uniform(EdgeSpace::undirected(8));
  const auto& sp = m.space();
  const std::vector<EdgeIndex> t{sp.index(0, 1), sp.index(2, 3)};
  std::vector<EdgeIndex> s;
  for (Vertex w = 2; w < 8; ++w) s.push_back(sp.index(0, w));
  const double p = 0.1;
  const auto r = prob_absent_present(m, s, t, p);
  SeededRng rng(23, 0);
  const int trials = 1000000;
  std::size_t hits = 0;
  for (int k = 0; k < trials; ++k) {
    const auto x = sample_simplex(m, rng);
    bool ok = x[t[0]] <= p && x[t[1]] <= p;
    for (EdgeIndex e : s) ok = ok && x[e] > p;
    hits += ok;
  }
  EXPECT_TRUE(r.contains(static_cast<double>(hits) / trials))
      << hits << " vs [" << r.lower << ", " << r.upper << "]";
}

TEST(ProbAbsentPresent, BracketContainsInclusionExclusion) {
  SeededRng rng(24, 0);
  for (int c = 0; c < 200; ++c) {
    const std::size_t n = 6 + rng() % 20;
    const auto space = EdgeSpace::undirected(n);
    std::vector<double> alpha(space.size());
    for (double& a : alpha) a = 0.5 + 1.5 * rng.uniform();
    const SimplexModel m(space, alpha);
    std::vector<EdgeIndex> perm(space.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t ts = 1 + rng() % 3;
    const std::size_t ss = rng() % 6;
    const std::vector<EdgeIndex> t(perm.begin(), perm.begin() + ts);
    const std::vector<EdgeIndex> s(perm.begin() + ts, perm.begin() + ts + ss);
    const double p = 0.5 * rng.uniform() / static_cast<double>(space.size());
    const auto r = prob_absent_present(m, s, t, p);
    const double exact = absent_present_exact(m, s, t, p);
    EXPECT_TRUE(r.contains(exact)) << "case " << c << ": " << exact << " not in [" << r.lower
                                   << ", " << r.upper << "]";
  }
}

TEST(EdgeProbQ, Examples) {
  const auto m = SimplexModel::uniform(EdgeSpace::undirected(4));
  EXPECT_NEAR(edge_prob_q(m, 0.5), 0.40671, 5e-6);
  EXPECT_EQ(edge_prob_q(m, 0.0), 0.0);
  EXPECT_EQ(edge_prob_q(m, 6.0), 1.0);
  EXPECT_NEAR(expected_edge_count(m, 0.5), 6.0 * edge_prob_q(m, 0.5), 1e-15);
  EXPECT_NEAR(edge_count_variance_bound(m, 0.5), 2.4402, 5e-5);
  EXPECT_EQ(edge_count_variance_bound(m, 0.0), 0.0);
  const auto d = SimplexModel::decomposable(DecomposableWeights({1.0, 2.0, 1.0}));
  EXPECT_THROW(edge_prob_q(d, 0.5), DomainError);
  EXPECT_THROW(edge_count_variance_bound(d, 0.5), DomainError);
}

TEST(EdgeCount, MomentsWithinTwoSidedInterval) {
  // m stays within E(m) -/+ sqrt(E(m) omega) for omega = 20 on nearly every draw.
  SeededRng rng(25, 0);
  const auto model = SimplexModel::uniform(EdgeSpace::undirected(40));
  const double p = 0.1;
  const double em = expected_edge_count(model, p);
  const double half = std::sqrt(em * 20.0);
  int outside = 0;
  for (int t = 0; t < 2000; ++t) {
    const auto x = sample_simplex(model, rng);
    const auto m = std::count_if(x.values().begin(), x.values().end(),
                                 [&](double v) { return v <= p; });
    outside += std::abs(static_cast<double>(m) - em) > half;
  }
  EXPECT_LE(outside, 2);
}

TEST(SolveP0, SmallExactRoot) {
  const auto m = SimplexModel::uniform(EdgeSpace::undirected(4));
  const double expected = 2.0 * (1.0 - std::pow(4.0, -1.0 / 6.0));
  EXPECT_NEAR(solve_p0(m), expected, 1e-12);
  EXPECT_NEAR(solve_p0(m), 0.41260, 5e-6);
}

TEST(SolveP0, LargeUniformAsymptotics) {
  const auto m = SimplexModel::uniform(EdgeSpace::undirected(1000));
  const double p0 = solve_p0(m);
  const double ref = std::log(1000.0) / 999.0;
  EXPECT_GE(p0, 0.95 * ref);
  EXPECT_LE(p0, 1.05 * ref);
  EXPECT_NEAR(IsolationProfile(m).total(p0), 1.0, 1e-9);
}

TEST(SolveP0, ScalingIdentity) {
  SeededRng rng(26, 0);
  const auto space = EdgeSpace::undirected(30);
  std::vector<double> alpha(space.size());
  for (double& a : alpha) a = 0.5 + 1.5 * rng.uniform();
  std::vector<double> doubled(alpha);
  for (double& a : doubled) a *= 2.0;
  const double p0 = solve_p0(SimplexModel(space, alpha));
  EXPECT_NEAR(solve_p0(SimplexModel(space, doubled)), p0 / 2.0, 1e-12 * p0);
}

TEST(IsolationProfile, RangeAndMonotone) {
  const auto m = SimplexModel::decomposable(DecomposableWeights({0.5, 1.0, 2.0, 1.5}));
  const IsolationProfile iso(m);
  for (Vertex v = 0; v < 4; ++v) {
    double prev = 1.0;
    EXPECT_EQ(iso.xi(v, 0.0), 1.0);
    for (double p = 0.05; p < 6.0 / iso.vertex_alphas()[v]; p += 0.05) {
      const double x = iso.xi(v, p);
      EXPECT_GE(x, 0.0);
      EXPECT_LT(x, prev);
      prev = x;
    }
    EXPECT_EQ(iso.xi(v, 100.0), 0.0);
  }
}

TEST(SigmaSimplex, Values) {
  const auto m = SimplexModel::uniform(EdgeSpace::undirected(4));
  EXPECT_NEAR(sigma_simplex(m, 0), 9.0 / 7.0, 1e-14);
  const SimplexModel two(EdgeSpace::undirected(4), {1.0, 2.0, 1.0, 1.0, 1.0, 1.0});
  EXPECT_NEAR(sigma_simplex(two, 1), sigma_simplex(two, 0) / 4.0, 1e-14);
}

TEST(SigmaSimplex, MatchesEmpiricalSecondMoment) {
  SeededRng rng(27, 0);
  const SimplexModel m(EdgeSpace::undirected(5), {1.0, 2.0, 0.5, 1.0, 1.5, 1.0, 1.0, 3.0, 1.0, 1.0});
  std::vector<double> sq;
  for (int t = 0; t < 100000; ++t) sq.push_back(std::pow(sample_simplex(m, rng)[2], 2));
  const auto est = summarize(sq);
  EXPECT_NEAR(est.mean, sigma_simplex(m, 2), 3.0 * est.std_error);
}

std::vector<double> grid_to(double top, int points) {
  std::vector<double> g;
  for (int k = 0; k + 1 < points; ++k) g.push_back(top * k / (points - 1));
  g.push_back(top);
  return g;
}

TEST(BasicBounds, ExponentialExample) {
  const DensityModel m(ProductExponential{EdgeSpace::undirected(2), {1.0}});
  const std::vector<double> grid{0.0, 0.5};
  const auto report = check_basic_bounds(m, 0, grid);
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.rows[0].cdf, 0.0);
  EXPECT_EQ(report.rows[0].upper, 0.0);
  EXPECT_EQ(report.rows[0].lower, 0.0);
  EXPECT_NEAR(report.rows[1].cdf, 0.39347, 5e-6);
  EXPECT_DOUBLE_EQ(report.rows[1].upper, 0.5);
  EXPECT_DOUBLE_EQ(report.rows[1].lower, 0.25);
  EXPECT_TRUE(report.all_hold());
}

TEST(BasicBounds, SimplexAtHalfSigma) {
  const DensityModel m(SimplexModel::uniform(EdgeSpace::undirected(20)));
  const double sd = m.standard_deviation(0);
  const std::vector<double> grid{sd / 2.0};
  const auto report = check_basic_bounds(m, 0, grid);
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_TRUE(report.rows[0].upper_holds);
  EXPECT_TRUE(report.rows[0].lower_holds);
  EXPECT_DOUBLE_EQ(report.mode_density, 1.0);
}

TEST(BasicBounds, PointsAboveSdSkipped) {
  const DensityModel m(ProductExponential{EdgeSpace::undirected(2), {1.0}});
  const std::vector<double> grid{0.5, 1.5, 3.0};
  const auto report = check_basic_bounds(m, 0, grid);
  EXPECT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.skipped.size(), 2u);
}

TEST(BasicBounds, HoldOnFullGridForEveryModel) {
  const auto space = EdgeSpace::undirected(10);
  const std::vector<DensityModel> models{
      DensityModel(SimplexModel::uniform(space)),
      DensityModel(SimplexModel::decomposable(DecomposableWeights(
          {0.5, 1.0, 2.0, 1.5, 0.8, 1.2, 0.9, 1.1, 1.3, 0.7}))),
      DensityModel(ProductExponential{space, std::vector<double>(space.size(), 3.0)}),
      DensityModel(OrthantBall{space, 2.0}),
  };
  for (const auto& m : models) {
    for (EdgeIndex e : {EdgeIndex{0}, EdgeIndex{17}, EdgeIndex{44}}) {
      const auto report = check_basic_bounds(m, e, grid_to(m.standard_deviation(e), 100));
      EXPECT_EQ(report.rows.size(), 100u);
      EXPECT_TRUE(report.all_hold());
    }
  }
}

}  // namespace
}  // namespace lcrg
