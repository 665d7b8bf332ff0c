//------------------------------------------------------------------------------
//
//   Copyright 2026 The Coopetition Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "coopetition/lp.hpp"

#include "support/random_instances.hpp"

#include "gtest/gtest.h"

#include <functional>

using namespace coop;
using namespace coop::lp;

namespace {

// Test-only oracle: best vertex by trying every choice of n tight rows among
// the constraints and x >= 0.
std::optional<Scalar> brute_force_min(std::vector<Scalar> const &cost, std::vector<LinearConstraint> const &rows)
{
  std::size_t const n = cost.size();
  std::vector<std::vector<Scalar>> a;
  std::vector<Scalar>              b;
  for (auto const &r : rows)
  {
    a.push_back(r.coefficients);
    b.push_back(r.rhs);
  }
  for (std::size_t i = 0; i < n; ++i)
  {
    std::vector<Scalar> e(n, Scalar(0));
    e[i] = 1;
    a.push_back(e);
    b.push_back(0);
  }

  auto feasible = [&](std::vector<Scalar> const &x) {
    for (auto const &v : x)
    {
      if (v < 0)
      {
        return false;
      }
    }
    for (auto const &r : rows)
    {
      Scalar lhs = 0;
      for (std::size_t i = 0; i < n; ++i)
      {
        lhs += r.coefficients[i] * x[i];
      }
      if ((r.relation == Relation::kLessEqual && lhs > r.rhs) ||
          (r.relation == Relation::kGreaterEqual && lhs < r.rhs) || (r.relation == Relation::kEqual && lhs != r.rhs))
      {
        return false;
      }
    }
    return true;
  };

  std::optional<Scalar>    best;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> recurse = [&](std::size_t start) {
    if (chosen.size() == n)
    {
      std::vector<std::vector<Scalar>> sa;
      std::vector<Scalar>              sb;
      for (auto c : chosen)
      {
        sa.push_back(a[c]);
        sb.push_back(b[c]);
      }
      if (auto x = solve_square(sa, sb); x && feasible(*x))
      {
        Scalar obj = 0;
        for (std::size_t i = 0; i < n; ++i)
        {
          obj += cost[i] * (*x)[i];
        }
        if (!best || obj < *best)
        {
          best = obj;
        }
      }
      return;
    }
    for (std::size_t c = start; c < a.size(); ++c)
    {
      chosen.push_back(c);
      recurse(c + 1);
      chosen.pop_back();
    }
  };
  recurse(0);
  return best;
}

}  // namespace

TEST(lp, small_covering_problem)
{
  // min x + y + 3z  s.t. x + z >= 1, y + z >= 1, x, y, z <= 1
  std::vector<Scalar>           cost{1, 1, 3};
  std::vector<LinearConstraint> rows{
      {{1, 0, 1}, Relation::kGreaterEqual, 1}, {{0, 1, 1}, Relation::kGreaterEqual, 1},
      {{1, 0, 0}, Relation::kLessEqual, 1},    {{0, 1, 0}, Relation::kLessEqual, 1},
      {{0, 0, 1}, Relation::kLessEqual, 1},
  };
  auto s = minimize(cost, rows);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.objective, 2);
  EXPECT_EQ(s.x, (std::vector<Scalar>{1, 1, 0}));
}

TEST(lp, infeasible_and_unbounded)
{
  std::vector<Scalar>           cost{1};
  std::vector<LinearConstraint> contradictory{{{1}, Relation::kGreaterEqual, 2}, {{1}, Relation::kLessEqual, 1}};
  EXPECT_EQ(minimize(cost, contradictory).status, Status::kInfeasible);

  std::vector<Scalar>           down{-1};
  std::vector<LinearConstraint> open{{{1}, Relation::kGreaterEqual, 1}};
  EXPECT_EQ(minimize(down, open).status, Status::kUnbounded);
}

TEST(lp, equality_and_negative_rhs)
{
  // min 2x + y  s.t. x + y = 3, -x <= -1
  std::vector<Scalar>           cost{2, 1};
  std::vector<LinearConstraint> rows{{{1, 1}, Relation::kEqual, 3}, {{-1, 0}, Relation::kLessEqual, -1}};
  auto                          s = minimize(cost, rows);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.x, (std::vector<Scalar>{1, 2}));
  EXPECT_EQ(s.objective, 4);
}

TEST(lp, redundant_equalities_are_dropped)
{
  std::vector<Scalar>           cost{1, 1};
  std::vector<LinearConstraint> rows{{{1, 1}, Relation::kEqual, 2}, {{2, 2}, Relation::kEqual, 4}};
  auto                          s = minimize(cost, rows);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.objective, 2);
}

TEST(lp, bland_rule_survives_beale_cycling_example)
{
  auto q = [](int p, int d) { return Scalar(p, d); };
  std::vector<Scalar>           cost{q(-3, 4), 20, q(-1, 2), 6};
  std::vector<LinearConstraint> rows{
      {{q(1, 4), -8, -1, 9}, Relation::kLessEqual, 0},
      {{q(1, 2), -12, q(-1, 2), 3}, Relation::kLessEqual, 0},
      {{0, 0, 1, 0}, Relation::kLessEqual, 1},
  };
  auto s = minimize(cost, rows);
  ASSERT_EQ(s.status, Status::kOptimal);
  EXPECT_EQ(s.objective, q(-5, 4));
  EXPECT_EQ(brute_force_min(cost, rows), q(-5, 4));
}

TEST(lp, matches_vertex_brute_force_on_random_bounded_problems)
{
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial)
  {
    std::size_t const n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::size_t const m = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::uniform_int_distribution<int> coef(-3, 3);

    std::vector<Scalar> cost;
    for (std::size_t i = 0; i < n; ++i)
    {
      cost.emplace_back(coef(rng));
    }
    std::vector<LinearConstraint> rows;
    for (std::size_t r = 0; r < m; ++r)
    {
      LinearConstraint row;
      for (std::size_t i = 0; i < n; ++i)
      {
        row.coefficients.emplace_back(coef(rng));
      }
      row.relation = static_cast<Relation>(std::uniform_int_distribution<int>(0, 2)(rng));
      row.rhs      = coop::testing::random_rational(rng, 6, 3);
      rows.push_back(std::move(row));
    }
    // Box keeps it bounded.
    for (std::size_t i = 0; i < n; ++i)
    {
      LinearConstraint box{std::vector<Scalar>(n, Scalar(0)), Relation::kLessEqual, Scalar(5)};
      box.coefficients[i] = 1;
      rows.push_back(std::move(box));
    }

    auto s     = minimize(cost, rows);
    auto brute = brute_force_min(cost, rows);
    if (!brute)
    {
      EXPECT_EQ(s.status, Status::kInfeasible) << "trial " << trial;
      continue;
    }
    ASSERT_EQ(s.status, Status::kOptimal) << "trial " << trial;
    EXPECT_EQ(s.objective, *brute) << "trial " << trial;
  }
}

TEST(lp, solve_square_detects_singular)
{
  EXPECT_FALSE(solve_square({{1, 2}, {2, 4}}, {1, 2}).has_value());
  auto x = solve_square({{0, 1}, {1, 0}}, {3, 4});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (std::vector<Scalar>{4, 3}));
}
