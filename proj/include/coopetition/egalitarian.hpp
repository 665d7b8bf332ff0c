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
#include "coopetition/oracle.hpp"

#include <string>
#include <vector>

namespace coop {

enum class LoweringTrigger
{
  kZeroBid,  ///< `bidder` reached a bid of zero
  kTightAd,  ///< ad `ad` now ties the winning ad
};

struct LoweringEvent
{
  LoweringTrigger trigger = LoweringTrigger::kZeroBid;
  AdvertiserId    bidder{};  // kZeroBid only
  AdId            ad{};      // kTightAd only

  friend bool operator==(LoweringEvent const &, LoweringEvent const &) = default;
};

/// One step of uniform lowering: every bidder still free drops by
/// `decrement`, then `fixed` stop moving because of `events`.
struct LoweringRound
{
  Scalar                     decrement;
  std::vector<AdvertiserId>  fixed;
  std::vector<LoweringEvent> events;
  std::vector<Scalar>        bids_after;  // winning-ad members, in id order

  friend bool operator==(LoweringRound const &, LoweringRound const &) = default;
};

struct LoweringTrace
{
  std::vector<LoweringRound> rounds;

  /// Round-by-round log, one block per round.
  std::string to_string(AuctionInstance const &instance) const;
};

struct EgalitarianResult
{
  BidProfile    bids;
  Outcome       outcome;
  LoweringTrace trace;
};

/**
 * Computes the egalitarian equilibrium of the first-price auction.
 *
 * All bids start at values. Bids of the winning ad's members are lowered
 * together until a bidder reaches zero or some competing ad S_j would tie
 * the winner, at which point everybody in T \ S_j (or the zero bidder) is
 * fixed. Repeats until all members are fixed. Event times are exact, so a
 * round is one rational step; simultaneous events are handled in the same
 * round. Losers keep bidding their values.
 */
EgalitarianResult egalitarian_solve(AuctionInstance const &instance);

/// Grid check of lexicographic maximality: false if the oracle finds a grid
/// equilibrium whose sorted surplus vector beats the one of `bids` by more
/// than the resolution in the first coordinate where they differ by more
/// than that. Also false when `bids` is not an equilibrium.
bool verify_egalitarian(AuctionInstance const &instance, BidProfile const &bids, GridSpec const &grid);

}  // namespace coop
