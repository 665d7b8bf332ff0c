#pragma once
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

#include "coopetition/scalar.hpp"

#include <optional>
#include <span>
#include <vector>

namespace coop::lp {

enum class Relation
{
  kLessEqual,
  kGreaterEqual,
  kEqual,
};

struct LinearConstraint
{
  std::vector<Scalar> coefficients;
  Relation            relation = Relation::kLessEqual;
  Scalar              rhs;
};

enum class Status
{
  kOptimal,
  kInfeasible,
  kUnbounded,
};

struct Solution
{
  Status              status = Status::kInfeasible;
  std::vector<Scalar> x;
  Scalar              objective;
};

/**
 * Minimizes cost . x subject to the constraints and x >= 0.
 *
 * Dense two-phase tableau simplex over exact rationals. Entering and leaving
 * variables follow Bland's rule so degenerate problems cannot cycle. When
 * the status is kOptimal, `x` is a basic (vertex) solution.
 */
Solution minimize(std::span<Scalar const> cost, std::span<LinearConstraint const> constraints);

/// Solves the square system a x = b. Returns nullopt when `a` is singular.
std::optional<std::vector<Scalar>> solve_square(std::vector<std::vector<Scalar>> a,
                                                std::vector<Scalar>              b);

}  // namespace coop::lp
