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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coop {

class ContractError : public Error
{
public:
  using Error::Error;
};

/**
 * The status-quo setting: every ad has a single owner who bids for it in a
 * standard multi-slot VCG pay-per-click auction. Other members of an ad can
 * only help through external contracts with the owner.
 *
 * Slot CTRs must be strictly decreasing and lie in [0, 1].
 */
class OwnedAuction
{
public:
  OwnedAuction(AuctionInstance instance, std::vector<AdvertiserId> owners, std::vector<Scalar> slots);

  AuctionInstance const &instance() const noexcept
  {
    return instance_;
  }

  AdvertiserId owner(AdId ad) const
  {
    return owners_.at(index(ad));
  }

  std::span<Scalar const> slots() const noexcept
  {
    return slots_;
  }

private:
  AuctionInstance           instance_;
  std::vector<AdvertiserId> owners_;
  std::vector<Scalar>       slots_;
};

/// `supporter` pays the owner of `ad` min(fraction * price, cap) per click
/// and, in exchange, the owner raises its bid on the ad by `subsidy`.
struct Contract
{
  AdvertiserId supporter{};
  AdId         ad{};
  Scalar       fraction;
  Scalar       cap;
  Scalar       subsidy;

  friend bool operator==(Contract const &, Contract const &) = default;
};

struct ContractProfile
{
  std::vector<Contract> contracts;

  friend bool operator==(ContractProfile const &, ContractProfile const &) = default;
};

struct SlotAssignment
{
  AdId        ad{};
  std::size_t slot = 0;
  Scalar      price;  // per click

  friend bool operator==(SlotAssignment const &, SlotAssignment const &) = default;
};

struct PositionOutcome
{
  std::vector<SlotAssignment> assignment;  // in slot order
  std::vector<Scalar>         effective_bids;
  std::vector<Scalar>         transfers;  // per click, parallel to the contracts
  std::vector<Scalar>         utilities;  // expected, per advertiser

  std::optional<SlotAssignment> slot_of(AdId ad) const;

  friend bool operator==(PositionOutcome const &, PositionOutcome const &) = default;
};

/**
 * Standard VCG position auction on per-ad bids. Ads fill slots in order of
 * bid (ties to the lowest ad id); with bids sorted b_1 >= b_2 >= ... the ad
 * in slot k pays per click
 *
 *   p_k = sum_{l > k} b_l (c_{l-1} - c_l) / c_k,    c_l = 0 past the last slot.
 *
 * Utilities carry no transfers: each member of an assigned ad gains
 * c * v_i, the owner additionally pays c * p. Someone in several assigned
 * ads adds up those terms.
 */
PositionOutcome position_vcg(OwnedAuction const &owned, std::span<Scalar const> effective_bids);

/// Owner bids are values plus the subsidies promised on their ads; the
/// auction is cleared by position_vcg and contract transfers settled at the
/// realized prices.
PositionOutcome evaluate_contracts(OwnedAuction const &owned, ContractProfile const &contracts);

/// Ads that `advertiser` belongs to without owning them.
std::vector<AdId> supported_ads(OwnedAuction const &owned, AdvertiserId advertiser);

/// Subsidies range over {0, step, 2 step, ...} up to `max` (included).
struct SubsidyGrid
{
  Scalar        step{1};
  Scalar        max{0};
  std::uint64_t budget = 1'000'000;
};

struct BestResponse
{
  ContractProfile contracts;  // responder's contracts only; zero subsidies omitted
  Scalar          utility;
  Scalar          zero_subsidy_utility;
};

/**
 * Grid search over the responder's subsidy on each ad it supports, holding
 * `others` fixed (any contracts of the responder in it are dropped). Each
 * candidate contract is "pay the whole price up to s per click" with
 * subsidy s. Ties go to the lexicographically smallest subsidy vector.
 */
BestResponse best_response_contract(OwnedAuction const &owned, AdvertiserId responder,
                                    ContractProfile const &others, SubsidyGrid const &grid);

/**
 * The instance document plus
 *
 *   "owners": ["S", "D", "A"],          one per ad, default: first listed member
 *   "slots": ["0.1", "0.08", "0.05"],   default: ["1"]
 *   "contracts": [{"supporter": "M", "ad": 0, "fraction": "1",
 *                  "cap": "2", "subsidy": "2"}]          optional
 */
struct OwnedAuctionDocument
{
  OwnedAuction    auction;
  ContractProfile contracts;
};

OwnedAuctionDocument parse_owned_auction(std::string_view text);

}  // namespace coop
