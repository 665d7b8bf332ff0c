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

#include <algorithm>
#include <set>

namespace coop {
namespace {

std::string default_name(std::size_t i)
{
  std::string name(1, static_cast<char>('A' + i % 26));
  if (i >= 26)
  {
    name += std::to_string(i / 26);
  }
  return name;
}

}  // namespace

AuctionInstance::AuctionInstance(std::vector<std::string> names, std::vector<Scalar> values,
                                 std::vector<std::vector<AdvertiserId>> ads)
  : names_(std::move(names))
  , values_(std::move(values))
{
  if (names_.size() != values_.size())
  {
    throw InstanceError("advertisers", "got " + std::to_string(names_.size()) + " names for " +
                                           std::to_string(values_.size()) + " values");
  }

  std::set<std::string_view> seen_names;
  for (std::size_t i = 0; i < names_.size(); ++i)
  {
    auto where = "advertisers[" + std::to_string(i) + "]";
    if (names_[i].empty())
    {
      throw InstanceError(where, "empty advertiser name");
    }
    if (!seen_names.insert(names_[i]).second)
    {
      throw InstanceError(where, "duplicate advertiser \"" + names_[i] + "\"");
    }
    if (values_[i] < 0)
    {
      throw InstanceError(where, "negative value " + to_exact_string(values_[i]) + " for \"" +
                                     names_[i] + "\"");
    }
  }

  if (ads.empty())
  {
    throw InstanceError("ads", "at least one ad is required");
  }

  std::size_t const n = names_.size();
  std::set<std::vector<AdvertiserId>> seen_ads;
  std::vector<bool>                   covered(n, false);
  for (std::size_t j = 0; j < ads.size(); ++j)
  {
    auto  where   = "ads[" + std::to_string(j) + "]";
    auto &members = ads[j];
    if (members.empty())
    {
      throw InstanceError(where, "ad has no members");
    }
    std::vector<bool> row(n, false);
    for (std::size_t k = 0; k < members.size(); ++k)
    {
      auto i = index(members[k]);
      if (i >= n)
      {
        throw InstanceError(where + "[" + std::to_string(k) + "]",
                            "advertiser index " + std::to_string(i) + " out of range");
      }
      if (row[i])
      {
        throw InstanceError(where + "[" + std::to_string(k) + "]",
                            "advertiser \"" + names_[i] + "\" listed twice");
      }
      row[i]     = true;
      covered[i] = true;
    }
    std::sort(members.begin(), members.end());
    if (!seen_ads.insert(members).second)
    {
      throw InstanceError(where, "duplicate ad: same member set as an earlier ad");
    }
    ads_.push_back(Ad{AdId{j}, members});
    membership_.push_back(std::move(row));
  }

  for (std::size_t i = 0; i < n; ++i)
  {
    if (!covered[i])
    {
      throw InstanceError("advertisers[" + std::to_string(i) + "]",
                          "advertiser \"" + names_[i] + "\" appears in no ad");
    }
  }
}

AuctionInstance AuctionInstance::from_values(std::vector<Scalar>                    values,
                                             std::vector<std::vector<AdvertiserId>> ads)
{
  std::vector<std::string> names;
  for (std::size_t i = 0; i < values.size(); ++i)
  {
    names.push_back(default_name(i));
  }
  return AuctionInstance(std::move(names), std::move(values), std::move(ads));
}

Ad const &AuctionInstance::ad(AdId j) const
{
  if (index(j) >= ads_.size())
  {
    throw Error("ad id " + std::to_string(index(j)) + " out of range (instance has " +
                std::to_string(ads_.size()) + " ads)");
  }
  return ads_[index(j)];
}

bool AuctionInstance::contains(AdId j, AdvertiserId i) const
{
  return membership_.at(index(j)).at(index(i));
}

std::optional<AdvertiserId> AuctionInstance::find(std::string_view name) const
{
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
  {
    return std::nullopt;
  }
  return AdvertiserId{static_cast<std::size_t>(it - names_.begin())};
}

std::vector<AdvertiserId> AuctionInstance::difference(AdId a, AdId b) const
{
  std::vector<AdvertiserId> out;
  for (auto i : ad(a).members)
  {
    if (!contains(b, i))
    {
      out.push_back(i);
    }
  }
  return out;
}

Scalar total_value(AuctionInstance const &instance, AdId ad)
{
  Scalar sum = 0;
  for (auto i : instance.ad(ad).members)
  {
    sum += instance.value(i);
  }
  return sum;
}

void check_dimension(AuctionInstance const &instance, BidProfile const &bids)
{
  if (bids.bids.size() != instance.num_advertisers())
  {
    throw DimensionError("bid profile has " + std::to_string(bids.bids.size()) +
                         " entries, instance has " + std::to_string(instance.num_advertisers()) +
                         " advertisers");
  }
}

Scalar total_bid(AuctionInstance const &instance, BidProfile const &bids, AdId ad)
{
  check_dimension(instance, bids);
  Scalar sum = 0;
  for (auto i : instance.ad(ad).members)
  {
    sum += bids[i];
  }
  return sum;
}

Outcome make_outcome(AuctionInstance const &instance, AdId winner, std::vector<Scalar> payments)
{
  if (payments.size() != instance.num_advertisers())
  {
    throw DimensionError("payment vector has " + std::to_string(payments.size()) + " entries");
  }
  instance.ad(winner);

  Outcome out;
  out.winner   = winner;
  out.revenue  = 0;
  out.payments = std::move(payments);
  out.surpluses.assign(instance.num_advertisers(), Scalar(0));
  for (std::size_t i = 0; i < instance.num_advertisers(); ++i)
  {
    AdvertiserId id{i};
    if (instance.contains(winner, id))
    {
      out.surpluses[i] = instance.value(id) - out.payments[i];
      out.revenue += out.payments[i];
    }
    else
    {
      out.payments[i] = 0;
    }
  }
  return out;
}

BidProfile truthful_bids(AuctionInstance const &instance)
{
  return BidProfile{std::vector<Scalar>(instance.values().begin(), instance.values().end())};
}

}  // namespace coop
