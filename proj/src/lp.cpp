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

#include <cassert>
#include <stdexcept>
#include <string>

namespace coop::lp {
namespace {

class Tableau
{
public:
  // rows_[r] holds the constraint coefficients followed by the rhs.
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::size_t>         basis;
  std::size_t                      columns = 0;

  Scalar &rhs(std::size_t r)
  {
    return rows[r][columns];
  }

  void pivot(std::size_t row, std::size_t col)
  {
    Scalar const inv = 1 / rows[row][col];
    for (auto &a : rows[row])
    {
      a *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
      if (r == row || rows[r][col] == 0)
      {
        continue;
      }
      Scalar const factor = rows[r][col];
      for (std::size_t c = 0; c <= columns; ++c)
      {
        if (rows[row][c] != 0)
        {
          rows[r][c] -= factor * rows[row][c];
        }
      }
    }
    basis[row] = col;
  }

  // Reduced costs of all columns for `cost` (indexed by column) under the
  // current basis.
  std::vector<Scalar> reduced_costs(std::vector<Scalar> const &cost) const
  {
    std::vector<Scalar> reduced(cost);
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
      Scalar const cb = cost[basis[r]];
      if (cb == 0)
      {
        continue;
      }
      for (std::size_t c = 0; c < columns; ++c)
      {
        reduced[c] -= cb * rows[r][c];
      }
    }
    return reduced;
  }

  // Runs Bland's-rule simplex on `cost`, only letting columns with
  // allowed[c] enter. Returns false if unbounded.
  bool optimize(std::vector<Scalar> const &cost, std::vector<bool> const &allowed)
  {
    for (;;)
    {
      auto const reduced = reduced_costs(cost);
      std::size_t entering = columns;
      for (std::size_t c = 0; c < columns; ++c)
      {
        if (allowed[c] && reduced[c] < 0)
        {
          entering = c;
          break;
        }
      }
      if (entering == columns)
      {
        return true;
      }

      std::size_t leaving = rows.size();
      Scalar      best_ratio;
      for (std::size_t r = 0; r < rows.size(); ++r)
      {
        if (rows[r][entering] <= 0)
        {
          continue;
        }
        Scalar ratio = rows[r][columns] / rows[r][entering];
        if (leaving == rows.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leaving]))
        {
          leaving    = r;
          best_ratio = ratio;
        }
      }
      if (leaving == rows.size())
      {
        return false;
      }
      pivot(leaving, entering);
    }
  }
};

}  // namespace

Solution minimize(std::span<Scalar const> cost, std::span<LinearConstraint const> constraints)
{
  std::size_t const n = cost.size();
  std::size_t const m = constraints.size();

  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (auto const &row : constraints)
  {
    if (row.coefficients.size() != n)
    {
      throw std::invalid_argument("constraint has " + std::to_string(row.coefficients.size()) +
                                  " coefficients, expected " + std::to_string(n));
    }
    // After normalizing rhs >= 0 a "<=" row has a usable slack; everything
    // else needs an artificial.
    bool const flip = row.rhs < 0;
    Relation   rel  = row.relation;
    if (flip && rel != Relation::kEqual)
    {
      rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual : Relation::kLessEqual;
    }
    if (rel != Relation::kEqual)
    {
      ++slack_count;
    }
    if (rel != Relation::kLessEqual)
    {
      ++artificial_count;
    }
  }

  Tableau t;
  t.columns = n + slack_count + artificial_count;
  t.rows.assign(m, std::vector<Scalar>(t.columns + 1, Scalar(0)));
  t.basis.assign(m, 0);

  std::size_t const first_artificial = n + slack_count;
  std::size_t       next_slack       = n;
  std::size_t       next_artificial  = first_artificial;
  for (std::size_t r = 0; r < m; ++r)
  {
    auto const &row  = constraints[r];
    bool const  flip = row.rhs < 0;
    Relation    rel  = row.relation;
    if (flip && rel != Relation::kEqual)
    {
      rel = rel == Relation::kLessEqual ? Relation::kGreaterEqual : Relation::kLessEqual;
    }
    for (std::size_t c = 0; c < n; ++c)
    {
      t.rows[r][c] = flip ? Scalar(-row.coefficients[c]) : row.coefficients[c];
    }
    t.rhs(r) = flip ? Scalar(-row.rhs) : row.rhs;

    if (rel == Relation::kLessEqual)
    {
      t.rows[r][next_slack] = 1;
      t.basis[r]            = next_slack++;
    }
    else
    {
      if (rel == Relation::kGreaterEqual)
      {
        t.rows[r][next_slack++] = -1;
      }
      t.rows[r][next_artificial] = 1;
      t.basis[r]                 = next_artificial++;
    }
  }

  std::vector<bool> allowed(t.columns, true);

  // Phase 1: drive the artificials to zero.
  if (artificial_count > 0)
  {
    std::vector<Scalar> phase1(t.columns, Scalar(0));
    for (std::size_t c = first_artificial; c < t.columns; ++c)
    {
      phase1[c] = 1;
    }
    [[maybe_unused]] bool bounded = t.optimize(phase1, allowed);
    assert(bounded);

    Scalar infeasibility = 0;
    for (std::size_t r = 0; r < m; ++r)
    {
      if (t.basis[r] >= first_artificial)
      {
        infeasibility += t.rhs(r);
      }
    }
    if (infeasibility != 0)
    {
      return Solution{Status::kInfeasible, {}, Scalar(0)};
    }

    // Pivot remaining zero-level artificials out; rows where that is
    // impossible are redundant and dropped.
    for (std::size_t r = 0; r < t.rows.size();)
    {
      if (t.basis[r] < first_artificial)
      {
        ++r;
        continue;
      }
      std::size_t col = first_artificial;
      for (std::size_t c = 0; c < first_artificial; ++c)
      {
        if (t.rows[r][c] != 0)
        {
          col = c;
          break;
        }
      }
      if (col < first_artificial)
      {
        t.pivot(r, col);
        ++r;
      }
      else
      {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
    for (std::size_t c = first_artificial; c < t.columns; ++c)
    {
      allowed[c] = false;
    }
  }

  // Phase 2.
  std::vector<Scalar> phase2(t.columns, Scalar(0));
  for (std::size_t c = 0; c < n; ++c)
  {
    phase2[c] = cost[c];
  }
  if (!t.optimize(phase2, allowed))
  {
    return Solution{Status::kUnbounded, {}, Scalar(0)};
  }

  Solution solution{Status::kOptimal, std::vector<Scalar>(n, Scalar(0)), Scalar(0)};
  for (std::size_t r = 0; r < t.rows.size(); ++r)
  {
    if (t.basis[r] < n)
    {
      solution.x[t.basis[r]] = t.rhs(r);
    }
  }
  for (std::size_t c = 0; c < n; ++c)
  {
    solution.objective += cost[c] * solution.x[c];
  }
  return solution;
}

std::optional<std::vector<Scalar>> solve_square(std::vector<std::vector<Scalar>> a,
                                                std::vector<Scalar>              b)
{
  std::size_t const n = b.size();
  if (a.size() != n)
  {
    throw std::invalid_argument("solve_square: matrix/rhs size mismatch");
  }
  for (std::size_t col = 0; col < n; ++col)
  {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0)
    {
      ++pivot;
    }
    if (pivot == n)
    {
      return std::nullopt;
    }
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r)
    {
      if (r == col || a[r][col] == 0)
      {
        continue;
      }
      Scalar const factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c)
      {
        a[r][c] -= factor * a[col][c];
      }
      b[r] -= factor * b[col];
    }
  }
  std::vector<Scalar> x(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    x[i] = b[i] / a[i][i];
  }
  return x;
}

}  // namespace coop::lp
