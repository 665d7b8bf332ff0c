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

#include <algorithm>

namespace coop {

AdId efficient_winner(AuctionInstance const &instance)
{
  return welfare_maximizing_ads(instance).front();
}

std::vector<AdId> welfare_maximizing_ads(AuctionInstance const &instance)
{
  std::vector<AdId> best;
  Scalar            best_value;
  for (auto const &ad : instance.ads())
  {
    auto value = total_value(instance, ad.id);
    if (best.empty() || value > best_value)
    {
      best.assign(1, ad.id);
      best_value = value;
    }
    else if (value == best_value)
    {
      best.push_back(ad.id);
    }
  }
  return best;
}

VcgResult vcg(AuctionInstance const &instance)
{
  VcgResult result;
  result.winner = efficient_winner(instance);
  result.payments.assign(instance.num_advertisers(), Scalar(0));
  result.revenue = 0;

  Scalar const welfare = total_value(instance, result.winner);
  for (auto i : instance.ad(result.winner).members)
  {
    Scalar best_without_i = 0;
    for (auto const &ad : instance.ads())
    {
      auto value = total_value(instance, ad.id);
      if (instance.contains(ad.id, i))
      {
        value -= instance.value(i);
      }
      best_without_i = std::max(best_without_i, value);
    }
    Scalar payment = best_without_i - (welfare - instance.value(i));
    if (payment < 0)
    {
      payment = 0;
    }
    result.payments[index(i)] = payment;
    result.revenue += payment;
  }
  return result;
}

Outcome first_price_clear(AuctionInstance const &instance, BidProfile const &bids)
{
  check_dimension(instance, bids);

  AdId   winner{0};
  Scalar best = total_bid(instance, bids, winner);
  for (auto const &ad : instance.ads())
  {
    auto bid = total_bid(instance, bids, ad.id);
    if (bid > best)
    {
      best   = bid;
      winner = ad.id;
    }
  }
  return make_outcome(instance, winner, bids.bids);
}

Scalar revenue_lower_bound(AuctionInstance const &instance)
{
  auto const winner = efficient_winner(instance);
  Scalar     bound  = 0;
  for (auto const &ad : instance.ads())
  {
    if (ad.id == winner)
    {
      continue;
    }
    Scalar outside = 0;
    for (auto i : instance.difference(ad.id, winner))
    {
      outside += instance.value(i);
    }
    bound = std::max(bound, outside);
  }
  return bound;
}

}  // namespace coop
