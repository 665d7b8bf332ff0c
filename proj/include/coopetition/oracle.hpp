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

#include "coopetition/mechanisms.hpp"
#include "coopetition/model.hpp"

#include <cstdint>
#include <vector>

namespace coop {

/// Discretization of the winning-ad bid space. Each member i ranges over
/// {0, e, 2e, ...} up to v_i, with v_i itself always included so that
/// truthful bids lie on the grid.
struct GridSpec
{
  Scalar        resolution{1};
  std::uint64_t budget = 10'000'000;
};

class GridBudgetExceeded : public Error
{
public:
  GridBudgetExceeded(double required, std::uint64_t allowed);

  double required() const noexcept
  {
    return required_;
  }

  std::uint64_t allowed() const noexcept
  {
    return allowed_;
  }

private:
  double        required_;
  std::uint64_t allowed_;
};

/// Number of grid points over the efficient ad's members.
double grid_size(AuctionInstance const &instance, GridSpec const &grid);

/**
 * Brute-force list of approximate equilibria: every grid point (losers at
 * their values) that is IR, exactly CEF, and where each positive bidder in
 * the winning ad is excluded from some competing ad whose total bid is
 * within strictly less than `resolution` of the winner's. Returned in
 * lexicographic order of the member bids.
 *
 * Shares no code with the exact solvers; all arithmetic is on integers
 * after scaling by a common denominator.
 */
std::vector<BidProfile> enumerate_equilibria_grid(AuctionInstance const &instance, GridSpec const &grid);

/// The grid equilibrium whose increasing-sorted surplus vector is
/// lexicographically largest; ties go to the lexicographically smallest bids.
BidProfile lexmax_surplus_grid(AuctionInstance const &instance, GridSpec const &grid);

/// VCG by search: for each winning member, the smallest value (over the
/// finite set of breakpoints where welfare comparisons can flip) at which it
/// would still belong to a welfare-maximizing ad.
VcgResult vcg_bruteforce(AuctionInstance const &instance);

}  // namespace coop
