#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lcrg/atsp.hpp"
#include "lcrg/errors.hpp"
#include "lcrg/experiments.hpp"
#include "lcrg/statistics.hpp"
#include "brute_force.hpp"

namespace lcrg {
namespace {

using testing::brute_assignment;
using testing::brute_tour;
using testing::random_costs;

TEST(CostMatrix, DiagonalAndValidation) {
  const CostMatrix c(2, {5.0, 1.0, 2.0, 7.0});
  EXPECT_TRUE(std::isinf(c(0, 0)));
  EXPECT_TRUE(std::isinf(c(1, 1)));
  EXPECT_EQ(c(0, 1), 1.0);
  EXPECT_THROW(CostMatrix(2, {0.0, -1.0, 1.0, 0.0}), DomainError);
  EXPECT_THROW(CostMatrix(2, {0.0, std::nan(""), 1.0, 0.0}), DomainError);
  EXPECT_THROW(CostMatrix(2, {0.0, 1.0, 1.0}), DomainError);
}

TEST(Hungarian, TwoVertices) {
  const CostMatrix c(2, {0.0, 3.0, 4.0, 0.0});
  const auto a = hungarian(c);
  EXPECT_DOUBLE_EQ(a.cost, 7.0);
  ASSERT_EQ(a.cycles.size(), 1u);
  EXPECT_EQ(a.cycles[0].size(), 2u);
}

TEST(Hungarian, ThreeByThreeExample) {
  const double inf = CostMatrix::kNoEdge;
  const CostMatrix c(3, {inf, 2, 9, 1, inf, 6, 8, 7, inf});
  const auto a = hungarian(c);
  EXPECT_DOUBLE_EQ(a.cost, brute_assignment(c));
  EXPECT_DOUBLE_EQ(a.cost, 16.0);
}

TEST(Hungarian, MatchesBruteForceOnRandom7x7) {
  SeededRng rng(51, 0);
  for (int t = 0; t < 100; ++t) {
    const auto c = random_costs(7, rng);
    const auto a = hungarian(c);
    ASSERT_NEAR(a.cost, brute_assignment(c), 1e-9);
    double recomputed = 0.0;
    for (Vertex i = 0; i < 7; ++i) {
      ASSERT_NE(a.successor[i], i);
      recomputed += c(i, a.successor[i]);
    }
    ASSERT_NEAR(recomputed, a.cost, 1e-12);
  }
}

TEST(Hungarian, CycleStructure) {
  SeededRng rng(52, 0);
  for (int t = 0; t < 50; ++t) {
    const auto c = random_costs(20, rng);
    const auto a = hungarian(c);
    std::size_t total = 0;
    for (std::size_t k = 0; k < a.cycles.size(); ++k) {
      total += a.cycles[k].size();
      ASSERT_GE(a.cycles[k].size(), 2u);
      if (k > 0) ASSERT_LE(a.cycles[k].size(), a.cycles[k - 1].size());
      for (std::size_t j = 0; j < a.cycles[k].size(); ++j) {
        ASSERT_EQ(a.successor[a.cycles[k][j]], a.cycles[k][(j + 1) % a.cycles[k].size()]);
      }
    }
    ASSERT_EQ(total, 20u);
  }
}

TEST(Hungarian, RowShiftKeepsPermutation) {
  SeededRng rng(53, 0);
  for (int t = 0; t < 50; ++t) {
    auto c = random_costs(9, rng);
    const auto before = hungarian(c);
    const Vertex row = rng() % 9;
    for (Vertex j = 0; j < 9; ++j) {
      if (j != row) c.at(row, j) += 5.0;
    }
    const auto after = hungarian(c);
    EXPECT_EQ(before.successor, after.successor);
    EXPECT_NEAR(after.cost, before.cost + 5.0, 1e-9);
  }
}

TEST(Patch, TwoTwoCyclesPicksMinimumAddedCost) {
  // Assignment {0 <-> 1}, {2 <-> 3} is forced by the cheap pair costs.
  const double inf = CostMatrix::kNoEdge;
  const CostMatrix c(4, {inf, 1, 5, 9,
                         1, inf, 3, 4,
                         6, 2, inf, 1,
                         8, 7, 1, inf});
  const auto a = hungarian(c);
  ASSERT_EQ(a.cycles.size(), 2u);
  const auto traced = patch_traced(a, c);
  ASSERT_EQ(traced.steps.size(), 1u);
  const auto& s = traced.steps[0];

  // Enumerate the four removal choices: (a,b) from C_1, (c,d) from C_2.
  double best_added = HUGE_VAL;
  for (const auto& [x, y] : {std::pair{0, 1}, std::pair{1, 0}}) {
    for (const auto& [u, w] : {std::pair{2, 3}, std::pair{3, 2}}) {
      best_added = std::min(best_added, c(x, w) + c(u, y));
    }
  }
  EXPECT_DOUBLE_EQ(s.added_cost, best_added);
  EXPECT_DOUBLE_EQ(s.added_cost, c(s.a, s.d) + c(s.c, s.b));
  EXPECT_DOUBLE_EQ(traced.tour.cost, a.cost + s.cost_increase);
  EXPECT_TRUE(is_valid_tour(traced.tour.order, 4));
  EXPECT_EQ(traced.tour.order.front(), 0u);
}

TEST(Patch, SingleCycleUnchanged) {
  const double inf = CostMatrix::kNoEdge;
  const CostMatrix c(3, {inf, 1, 9, 9, inf, 1, 1, 9, inf});
  const auto a = hungarian(c);
  ASSERT_EQ(a.cycles.size(), 1u);
  const auto traced = patch_traced(a, c);
  EXPECT_TRUE(traced.steps.empty());
  EXPECT_DOUBLE_EQ(traced.tour.cost, a.cost);
}

TEST(Patch, InvariantsOnRandomInstances) {
  SeededRng rng(54, 0);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 4 + rng() % 40;
    const auto c = random_costs(n, rng);
    const auto a = hungarian(c);
    const auto traced = patch_traced(a, c);
    ASSERT_TRUE(is_valid_tour(traced.tour.order, n));
    ASSERT_GE(traced.tour.cost, a.cost - 1e-12);
    ASSERT_EQ(traced.steps.size(), a.cycles.size() - 1);
    double increase = 0.0;
    for (std::size_t k = 0; k < traced.steps.size(); ++k) {
      ASSERT_EQ(traced.steps[k].cycles_after, a.cycles.size() - 1 - k);
      increase += traced.steps[k].cost_increase;
    }
    ASSERT_NEAR(traced.tour.cost, a.cost + increase, 1e-9);
    ASSERT_NEAR(traced.tour.cost, tour_cost(c, traced.tour.order), 1e-12);
  }
}

TEST(HeldKarp, SmallCases) {
  const double inf = CostMatrix::kNoEdge;
  const CostMatrix tri(3, {inf, 1, 5, 4, inf, 2, 3, 6, inf});
  // 0->1->2->0 costs 6; 0->2->1->0 costs 15.
  EXPECT_DOUBLE_EQ(held_karp(tri).cost, 6.0);
  SeededRng rng(55, 0);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 4 + t % 5;
    const auto c = random_costs(n, rng);
    const auto opt = held_karp(c);
    ASSERT_NEAR(opt.cost, brute_tour(c), 1e-12);
    ASSERT_TRUE(is_valid_tour(opt.order, n));
    ASSERT_NEAR(tour_cost(c, opt.order), opt.cost, 1e-12);
    ASSERT_LE(hungarian(c).cost, opt.cost + 1e-12);
    ASSERT_GE(patch(hungarian(c), c).cost, opt.cost - 1e-12);
  }
  EXPECT_THROW(held_karp(CostMatrix(14, std::vector<double>(196, 1.0))), CapacityError);
}

TEST(RowSymmetric, CostsRespectBudget) {
  SeededRng rng(56, 0);
  const std::vector<double> beta{1.0, 2.0, 0.5, 1.5, 1.0};
  const auto model = SimplexModel::row_symmetric(beta);
  for (int t = 0; t < 100; ++t) {
    const auto c = sample_row_symmetric_costs(model, rng);
    double used = 0.0;
    for (Vertex i = 0; i < 5; ++i) {
      for (Vertex j = 0; j < 5; ++j) {
        if (i == j) continue;
        ASSERT_GE(c(i, j), 0.0);
        used += beta[j] * c(i, j);
      }
    }
    ASSERT_LE(used, model.budget() * (1.0 + 1e-12));
  }
  EXPECT_THROW(SimplexModel::row_symmetric({1.0, 0.0, 1.0}), DomainError);
}

TEST(RowSymmetric, CoordinateMarginal) {
  SeededRng rng(57, 0);
  const auto model = SimplexModel::row_symmetric({1.0, 2.0, 0.5, 1.5});
  const double n = static_cast<double>(model.dimension());
  std::vector<double> xs;
  for (int t = 0; t < 100000; ++t) xs.push_back(sample_row_symmetric_costs(model, rng)(3, 1));
  const double top = model.budget() / 2.0;
  EXPECT_LT(ks_statistic(xs, [&](double p) { return 1.0 - std::pow(std::max(0.0, 1.0 - p / top), n); }),
            0.0062);
}

TEST(RowSymmetric, AssignmentCycleCountMatchesDerangements) {
  SeededRng rng(58, 0);
  const auto model = SimplexModel::row_symmetric(std::vector<double>(100, 1.0));
  std::vector<double> cycles;
  for (int t = 0; t < 500; ++t) {
    cycles.push_back(static_cast<double>(hungarian(sample_row_symmetric_costs(model, rng)).cycles.size()));
  }
  const double expected = expected_derangement_cycles(100);
  const auto est = summarize(cycles);
  // The diagonal is forbidden, so the optimal assignment is a uniform
  // derangement rather than a uniform permutation.
  EXPECT_NEAR(est.mean, expected, 3.0 * est.std_error);
}

TEST(CostMatrixIo, RoundTrip) {
  SeededRng rng(59, 0);
  const auto c = random_costs(6, rng);
  std::stringstream buf;
  write_cost_matrix(buf, c);
  const auto back = read_cost_matrix(buf);
  ASSERT_EQ(back.size(), 6u);
  for (Vertex i = 0; i < 6; ++i) {
    for (Vertex j = 0; j < 6; ++j) {
      if (i != j) EXPECT_EQ(back(i, j), c(i, j));
    }
  }
}

TEST(CostMatrixIo, RejectsMalformed) {
  for (const char* text : {"3\n", "n=2\ninf,1\n", "n=2\ninf,1\n1,inf,3\n", "n=2\n0,1\n1,inf\n",
                           "n=2\ninf,x\n1,inf\n", "n=2\ninf,-1\n1,inf\n"}) {
    std::stringstream in(text);
    EXPECT_THROW(read_cost_matrix(in), ConfigError) << text;
  }
}

}  // namespace
TEST(Derangements, ExpectedCyclesMatchEnumeration) {
  for (std::size_t n = 2; n <= 8; ++n) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double total = 0.0;
    double count = 0.0;
    do {
      bool fixed = false;
      for (Vertex i = 0; i < n; ++i) fixed = fixed || perm[i] == i;
      if (fixed) continue;
      std::vector<bool> seen(n, false);
      for (Vertex i = 0; i < n; ++i) {
        if (seen[i]) continue;
        total += 1.0;
        for (Vertex j = i; !seen[j]; j = perm[j]) seen[j] = true;
      }
      count += 1.0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_NEAR(expected_derangement_cycles(n), total / count, 1e-12) << n;
  }
  EXPECT_NEAR(expected_derangement_cycles(4), 4.0 / 3.0, 1e-15);
  EXPECT_EQ(expected_derangement_cycles(1), 0.0);
}

}  // namespace lcrg
