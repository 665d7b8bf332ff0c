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

#include "coopetition/model.hpp"

#include <vector>

namespace coop {

struct VcgResult
{
  AdId                winner{};
  std::vector<Scalar> payments;
  Scalar              revenue;

  friend bool operator==(VcgResult const &, VcgResult const &) = default;
};

/// The ad with the largest total value; ties go to the lowest ad id.
AdId efficient_winner(AuctionInstance const &instance);

/// Every ad whose total value equals the maximum, in id order. More than one
/// entry means the tie-break decided the winner.
std::vector<AdId> welfare_maximizing_ads(AuctionInstance const &instance);

/**
 * Coopetitive VCG for one slot. The efficient ad is shown and each member i
 * pays its externality
 *
 *   p_i = W_{-i} - (W - v_i)
 *
 * where W is the winning ad's total value and W_{-i} the best total value of
 * any ad once i's value is removed. Non-members pay nothing.
 */
VcgResult vcg(AuctionInstance const &instance);

/// First-price clearing: the ad with the largest total bid is shown (ties to
/// the lowest id) and its members pay their bids.
Outcome first_price_clear(AuctionInstance const &instance, BidProfile const &bids);

/// Largest total value of non-winning advertisers within a single
/// non-winning ad; 0 when the efficient ad is the only ad. Every CEF
/// equilibrium raises at least this much.
Scalar revenue_lower_bound(AuctionInstance const &instance);

}  // namespace coop
