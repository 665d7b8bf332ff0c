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

#include "coopetition/external_contracts.hpp"

#include "instance_json.hpp"

#include <algorithm>
#include <numeric>

namespace coop {

OwnedAuction::OwnedAuction(AuctionInstance instance, std::vector<AdvertiserId> owners, std::vector<Scalar> slots)
  : instance_(std::move(instance))
  , owners_(std::move(owners))
  , slots_(std::move(slots))
{
  if (owners_.size() != instance_.num_ads())
  {
    throw InstanceError("owners", "expected one owner per ad (" + std::to_string(instance_.num_ads()) + "), got " +
                                      std::to_string(owners_.size()));
  }
  for (std::size_t j = 0; j < owners_.size(); ++j)
  {
    if (index(owners_[j]) >= instance_.num_advertisers() || !instance_.contains(AdId{j}, owners_[j]))
    {
      throw InstanceError("owners[" + std::to_string(j) + "]", "owner must be a member of the ad");
    }
  }
  if (slots_.empty())
  {
    throw InstanceError("slots", "at least one slot is required");
  }
  for (std::size_t k = 0; k < slots_.size(); ++k)
  {
    auto where = "slots[" + std::to_string(k) + "]";
    if (slots_[k] < 0 || slots_[k] > 1)
    {
      throw InstanceError(where, "CTR must lie in [0, 1]");
    }
    if (k > 0 && slots_[k] >= slots_[k - 1])
    {
      throw InstanceError(where, "CTRs must be strictly decreasing");
    }
  }
}

std::optional<SlotAssignment> PositionOutcome::slot_of(AdId ad) const
{
  auto it = std::find_if(assignment.begin(), assignment.end(), [&](auto const &a) { return a.ad == ad; });
  if (it == assignment.end())
  {
    return std::nullopt;
  }
  return *it;
}

PositionOutcome position_vcg(OwnedAuction const &owned, std::span<Scalar const> effective_bids)
{
  auto const &instance = owned.instance();
  auto const  slots    = owned.slots();
  if (effective_bids.size() != instance.num_ads())
  {
    throw DimensionError("expected " + std::to_string(instance.num_ads()) + " ad bids, got " +
                         std::to_string(effective_bids.size()));
  }
  for (auto const &b : effective_bids)
  {
    if (b < 0)
    {
      throw Error("effective bids must be non-negative");
    }
  }

  std::vector<std::size_t> order(instance.num_ads());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return effective_bids[a] > effective_bids[b]; });

  PositionOutcome out;
  out.effective_bids.assign(effective_bids.begin(), effective_bids.end());
  out.utilities.assign(instance.num_advertisers(), Scalar(0));

  std::size_t const s     = slots.size();
  std::size_t const shown = std::min(s, order.size());
  for (std::size_t k = 0; k < shown; ++k)
  {
    Scalar price = 0;
    if (slots[k] > 0)
    {
      for (std::size_t l = k + 1; l <= s && l < order.size(); ++l)
      {
        Scalar const below = l < s ? slots[l] : Scalar(0);
        price += effective_bids[order[l]] * (slots[l - 1] - below);
      }
      price /= slots[k];
    }
    AdId const ad{order[k]};
    out.assignment.push_back(SlotAssignment{ad, k, price});

    for (auto i : instance.ad(ad).members)
    {
      out.utilities[index(i)] += slots[k] * instance.value(i);
    }
    out.utilities[index(owned.owner(ad))] -= slots[k] * price;
  }
  return out;
}

namespace {

void validate(OwnedAuction const &owned, Contract const &c)
{
  auto const &instance = owned.instance();
  if (index(c.ad) >= instance.num_ads())
  {
    throw ContractError("contract targets unknown ad " + std::to_string(index(c.ad)));
  }
  if (index(c.supporter) >= instance.num_advertisers() || !instance.contains(c.ad, c.supporter) ||
      owned.owner(c.ad) == c.supporter)
  {
    throw ContractError("contract supporter must be a non-owner member of ad " + std::to_string(index(c.ad)));
  }
  if (c.fraction < 0 || c.fraction > 1)
  {
    throw ContractError("contract fraction must lie in [0, 1]");
  }
  if (c.cap < 0 || c.subsidy < 0)
  {
    throw ContractError("contract cap and subsidy must be non-negative");
  }
}

}  // namespace

PositionOutcome evaluate_contracts(OwnedAuction const &owned, ContractProfile const &profile)
{
  auto const &instance = owned.instance();
  std::vector<Scalar> bids;
  for (std::size_t j = 0; j < instance.num_ads(); ++j)
  {
    bids.push_back(instance.value(owned.owner(AdId{j})));
  }
  for (auto const &c : profile.contracts)
  {
    validate(owned, c);
    bids[index(c.ad)] += c.subsidy;
  }

  auto out = position_vcg(owned, bids);
  for (auto const &c : profile.contracts)
  {
    Scalar transfer = 0;
    if (auto placed = out.slot_of(c.ad))
    {
      transfer = std::min(Scalar(c.fraction * placed->price), c.cap);
      Scalar const ctr = owned.slots()[placed->slot];
      out.utilities[index(c.supporter)] -= ctr * transfer;
      out.utilities[index(owned.owner(c.ad))] += ctr * transfer;
    }
    out.transfers.push_back(transfer);
  }
  return out;
}

std::vector<AdId> supported_ads(OwnedAuction const &owned, AdvertiserId advertiser)
{
  std::vector<AdId> out;
  for (auto const &ad : owned.instance().ads())
  {
    if (owned.owner(ad.id) != advertiser && owned.instance().contains(ad.id, advertiser))
    {
      out.push_back(ad.id);
    }
  }
  return out;
}

BestResponse best_response_contract(OwnedAuction const &owned, AdvertiserId responder,
                                    ContractProfile const &others, SubsidyGrid const &grid)
{
  if (grid.step <= 0 || grid.max < 0)
  {
    throw Error("subsidy grid needs a positive step and a non-negative maximum");
  }
  auto const ads = supported_ads(owned, responder);

  std::vector<Scalar> levels;
  for (Scalar x = 0; x <= grid.max; x += grid.step)
  {
    levels.push_back(x);
  }
  if (levels.back() != grid.max)
  {
    levels.push_back(grid.max);
  }
  double size = 1;
  for (std::size_t k = 0; k < ads.size(); ++k)
  {
    size *= static_cast<double>(levels.size());
  }
  if (size > static_cast<double>(grid.budget))
  {
    throw Error("subsidy grid needs " + std::to_string(static_cast<std::uint64_t>(size)) +
                " points, budget allows " + std::to_string(grid.budget));
  }

  ContractProfile base;
  std::copy_if(others.contracts.begin(), others.contracts.end(), std::back_inserter(base.contracts),
               [&](Contract const &c) { return c.supporter != responder; });

  auto profile_for = [&](std::vector<std::size_t> const &cursor) {
    ContractProfile own;
    for (std::size_t k = 0; k < ads.size(); ++k)
    {
      Scalar const &s = levels[cursor[k]];
      if (s > 0)
      {
        own.contracts.push_back(Contract{responder, ads[k], Scalar(1), s, s});
      }
    }
    return own;
  };
  auto utility_of = [&](ContractProfile const &own) {
    ContractProfile all = base;
    all.contracts.insert(all.contracts.end(), own.contracts.begin(), own.contracts.end());
    return evaluate_contracts(owned, all).utilities[index(responder)];
  };

  BestResponse best;
  best.zero_subsidy_utility = utility_of(ContractProfile{});
  best.utility              = best.zero_subsidy_utility;

  std::vector<std::size_t> cursor(ads.size(), 0);
  while (!ads.empty())
  {
    std::size_t k = ads.size();
    while (k > 0)
    {
      --k;
      if (++cursor[k] < levels.size())
      {
        break;
      }
      cursor[k] = 0;
    }
    if (std::all_of(cursor.begin(), cursor.end(), [](std::size_t c) { return c == 0; }))
    {
      break;
    }
    auto own = profile_for(cursor);
    auto u   = utility_of(own);
    if (u > best.utility)
    {
      best.utility   = u;
      best.contracts = std::move(own);
    }
  }
  return best;
}

OwnedAuctionDocument parse_owned_auction(std::string_view text)
{
  using detail::Json;
  auto const document = detail::parse_json(text);
  auto       instance = detail::instance_from_json(document);

  std::vector<AdvertiserId> owners;
  if (document.contains("owners"))
  {
    auto const &list = document["owners"];
    if (!list.is_array())
    {
      throw InstanceError("owners", "expected an array of advertiser names");
    }
    for (std::size_t j = 0; j < list.size(); ++j)
    {
      auto where = "owners[" + std::to_string(j) + "]";
      if (!list[j].is_string())
      {
        throw InstanceError(where, "expected an advertiser name");
      }
      auto id = instance.find(list[j].get<std::string>());
      if (!id)
      {
        throw InstanceError(where, "unknown advertiser \"" + list[j].get<std::string>() + "\"");
      }
      owners.push_back(*id);
    }
  }
  else
  {
    for (std::size_t j = 0; j < instance.num_ads(); ++j)
    {
      owners.push_back(*instance.find(document["ads"][j][0].get<std::string>()));
    }
  }

  std::vector<Scalar> slots{Scalar(1)};
  if (document.contains("slots"))
  {
    auto const &list = document["slots"];
    if (!list.is_array())
    {
      throw InstanceError("slots", "expected an array of CTRs");
    }
    slots.clear();
    for (std::size_t k = 0; k < list.size(); ++k)
    {
      slots.push_back(detail::scalar_from_json(list[k], "slots[" + std::to_string(k) + "]"));
    }
  }

  OwnedAuctionDocument out{OwnedAuction(std::move(instance), std::move(owners), std::move(slots)), {}};
  if (document.contains("contracts"))
  {
    auto const &list = document["contracts"];
    if (!list.is_array())
    {
      throw InstanceError("contracts", "expected an array");
    }
    auto const &inst = out.auction.instance();
    for (std::size_t k = 0; k < list.size(); ++k)
    {
      auto        where = "contracts[" + std::to_string(k) + "]";
      auto const &entry = list[k];
      if (!entry.is_object() || !entry.contains("supporter") || !entry["supporter"].is_string() ||
          !entry.contains("ad") || !entry["ad"].is_number_unsigned())
      {
        throw InstanceError(where, "expected {\"supporter\": str, \"ad\": int, ...}");
      }
      auto supporter = inst.find(entry["supporter"].get<std::string>());
      if (!supporter)
      {
        throw InstanceError(where, "unknown advertiser \"" + entry["supporter"].get<std::string>() + "\"");
      }
      auto field = [&](char const *key, Scalar fallback) {
        return entry.contains(key) ? detail::scalar_from_json(entry[key], where + "." + key) : fallback;
      };
      Contract c{*supporter, AdId{entry["ad"].get<std::size_t>()}, field("fraction", Scalar(1)), Scalar(0), Scalar(0)};
      c.subsidy = field("subsidy", Scalar(0));
      c.cap     = field("cap", c.subsidy);
      try
      {
        validate(out.auction, c);
      }
      catch (ContractError const &e)
      {
        throw InstanceError(where, e.what());
      }
      out.contracts.contracts.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace coop
