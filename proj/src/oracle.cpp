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

#include "coopetition/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace coop {

GridBudgetExceeded::GridBudgetExceeded(double required, std::uint64_t allowed)
  : Error([&] {
    std::ostringstream os;
    os.precision(0);
    os << std::fixed << "grid needs " << required << " points, budget allows " << allowed;
    return os.str();
  }())
  , required_(required)
  , allowed_(allowed)
{}

namespace {

using Count   = std::int64_t;

/// The instance rescaled to integers: values and step are multiples of
/// 1/scale in the original units.
struct ScaledGrid
{
  Integer            scale;
  Count              step = 0;
  std::vector<Count> values;
  std::size_t        winner = 0;
  std::vector<std::size_t> members;

  // Per competing ad: which member positions are outside it, and the value
  // of its members outside the winner.
  struct Rival
  {
    std::vector<bool> outside;
    Count             threshold = 0;
  };
  std::vector<Rival> rivals;

  Scalar unscale(Count x) const
  {
    return Scalar(Integer(x), scale);
  }
};

ScaledGrid scale_instance(AuctionInstance const &instance, GridSpec const &grid)
{
  if (grid.resolution <= 0)
  {
    throw Error("grid resolution must be positive");
  }

  ScaledGrid s;
  s.scale = boost::multiprecision::denominator(grid.resolution);
  for (auto const &v : instance.values())
  {
    s.scale = boost::multiprecision::lcm(s.scale, Integer(boost::multiprecision::denominator(v)));
  }

  Integer total = 0;
  auto to_count = [&](Scalar const &x) {
    Scalar scaled = x * Scalar(s.scale);
    total += boost::multiprecision::numerator(scaled);
    return boost::multiprecision::numerator(scaled);
  };
  std::vector<Integer> big;
  for (auto const &v : instance.values())
  {
    big.push_back(to_count(v));
  }
  Integer step = to_count(grid.resolution);
  if (total > Integer(std::numeric_limits<Count>::max() / 4))
  {
    throw Error("grid oracle: values too large after scaling to a common denominator");
  }
  s.step = step.convert_to<Count>();
  for (auto const &b : big)
  {
    s.values.push_back(b.convert_to<Count>());
  }

  // Efficient ad, lowest id on ties.
  Count best = -1;
  for (std::size_t j = 0; j < instance.num_ads(); ++j)
  {
    Count sum = 0;
    for (auto i : instance.ad(AdId{j}).members)
    {
      sum += s.values[index(i)];
    }
    if (sum > best)
    {
      best     = sum;
      s.winner = j;
    }
  }
  for (auto i : instance.ad(AdId{s.winner}).members)
  {
    s.members.push_back(index(i));
  }

  for (std::size_t j = 0; j < instance.num_ads(); ++j)
  {
    if (j == s.winner)
    {
      continue;
    }
    ScaledGrid::Rival rival;
    for (auto m : s.members)
    {
      rival.outside.push_back(!instance.contains(AdId{j}, AdvertiserId{m}));
    }
    for (auto i : instance.ad(AdId{j}).members)
    {
      if (!instance.contains(AdId{s.winner}, i))
      {
        rival.threshold += s.values[index(i)];
      }
    }
    s.rivals.push_back(std::move(rival));
  }
  return s;
}

/// Grid coordinates for one member: 0, step, 2 step, ... and the value.
std::vector<Count> axis(Count value, Count step)
{
  std::vector<Count> points;
  for (Count x = 0; x <= value; x += step)
  {
    points.push_back(x);
  }
  if (points.back() != value)
  {
    points.push_back(value);
  }
  return points;
}

double count_points(ScaledGrid const &s)
{
  double size = 1;
  for (auto m : s.members)
  {
    size *= static_cast<double>(s.values[m] / s.step + 1 + (s.values[m] % s.step != 0 ? 1 : 0));
  }
  return size;
}

void for_each_grid_equilibrium(ScaledGrid const &s, GridSpec const &grid,
                               std::function<void(std::vector<Count> const &)> const &visit)
{
  double const size = count_points(s);
  if (size > static_cast<double>(grid.budget))
  {
    throw GridBudgetExceeded(size, grid.budget);
  }

  std::size_t const               d = s.members.size();
  std::vector<std::vector<Count>> axes;
  for (auto m : s.members)
  {
    axes.push_back(axis(s.values[m], s.step));
  }

  std::vector<std::size_t> cursor(d, 0);
  std::vector<Count>       bids(d, 0);
  std::vector<Count>       slack(s.rivals.size());
  for (;;)
  {
    for (std::size_t k = 0; k < d; ++k)
    {
      bids[k] = axes[k][cursor[k]];
    }

    bool cef = true;
    for (std::size_t r = 0; r < s.rivals.size() && cef; ++r)
    {
      Count lhs = 0;
      for (std::size_t k = 0; k < d; ++k)
      {
        if (s.rivals[r].outside[k])
        {
          lhs += bids[k];
        }
      }
      slack[r] = lhs - s.rivals[r].threshold;
      cef      = slack[r] >= 0;
    }

    if (cef)
    {
      bool pinned = true;
      for (std::size_t k = 0; k < d && pinned; ++k)
      {
        if (bids[k] == 0)
        {
          continue;
        }
        pinned = false;
        for (std::size_t r = 0; r < s.rivals.size(); ++r)
        {
          if (s.rivals[r].outside[k] && slack[r] < s.step)
          {
            pinned = true;
            break;
          }
        }
      }
      if (pinned)
      {
        visit(bids);
      }
    }

    // Odometer, last coordinate fastest, so points come out in
    // lexicographic order.
    std::size_t k = d;
    while (k > 0)
    {
      --k;
      if (++cursor[k] < axes[k].size())
      {
        break;
      }
      cursor[k] = 0;
      if (k == 0)
      {
        return;
      }
    }
    if (d == 0)
    {
      return;
    }
  }
}

BidProfile to_profile(AuctionInstance const &instance, ScaledGrid const &s, std::vector<Count> const &bids)
{
  BidProfile profile = truthful_bids(instance);
  for (std::size_t k = 0; k < s.members.size(); ++k)
  {
    profile.bids[s.members[k]] = s.unscale(bids[k]);
  }
  return profile;
}

}  // namespace

double grid_size(AuctionInstance const &instance, GridSpec const &grid)
{
  return count_points(scale_instance(instance, grid));
}

std::vector<BidProfile> enumerate_equilibria_grid(AuctionInstance const &instance, GridSpec const &grid)
{
  auto const              s = scale_instance(instance, grid);
  std::vector<BidProfile> out;
  for_each_grid_equilibrium(s, grid, [&](std::vector<Count> const &bids) {
    out.push_back(to_profile(instance, s, bids));
  });
  return out;
}

BidProfile lexmax_surplus_grid(AuctionInstance const &instance, GridSpec const &grid)
{
  auto const s = scale_instance(instance, grid);

  std::optional<std::vector<Count>> best_bids;
  std::vector<Count>                best_surplus;
  std::vector<Count>                surplus(s.members.size());
  for_each_grid_equilibrium(s, grid, [&](std::vector<Count> const &bids) {
    for (std::size_t k = 0; k < bids.size(); ++k)
    {
      surplus[k] = s.values[s.members[k]] - bids[k];
    }
    std::sort(surplus.begin(), surplus.end());
    // Strictly greater only: earlier points have smaller bids.
    if (!best_bids || surplus > best_surplus)
    {
      best_bids    = bids;
      best_surplus = surplus;
    }
  });
  if (!best_bids)
  {
    throw std::logic_error("grid contains no equilibrium although truthful bids are on it");
  }
  return to_profile(instance, s, *best_bids);
}

VcgResult vcg_bruteforce(AuctionInstance const &instance)
{
  std::size_t const n = instance.num_advertisers();

  // Welfare of every ad when advertiser i's value is replaced by x.
  auto welfare = [&](AdvertiserId i, Scalar const &x) {
    std::vector<Scalar> w;
    for (auto const &ad : instance.ads())
    {
      Scalar sum = 0;
      for (auto member : ad.members)
      {
        sum += member == i ? x : instance.value(member);
      }
      w.push_back(sum);
    }
    return w;
  };
  auto in_some_best_ad = [&](AdvertiserId i, Scalar const &x) {
    auto const w    = welfare(i, x);
    auto const best = *std::max_element(w.begin(), w.end());
    for (std::size_t j = 0; j < w.size(); ++j)
    {
      if (w[j] == best && instance.contains(AdId{j}, i))
      {
        return true;
      }
    }
    return false;
  };

  // Winner: largest welfare, first on ties.
  auto const truthful = welfare(AdvertiserId{0}, instance.value(AdvertiserId{0}));
  VcgResult  result;
  result.winner = AdId{static_cast<std::size_t>(std::max_element(truthful.begin(), truthful.end()) -
                                                truthful.begin())};
  result.payments.assign(n, Scalar(0));
  result.revenue = 0;

  for (auto i : instance.ad(result.winner).members)
  {
    // Membership can only flip where an ad with i ties one without it.
    std::set<Scalar> breakpoints{Scalar(0), instance.value(i)};
    auto const       zeroed = welfare(i, Scalar(0));
    for (std::size_t with = 0; with < zeroed.size(); ++with)
    {
      if (!instance.contains(AdId{with}, i))
      {
        continue;
      }
      for (std::size_t without = 0; without < zeroed.size(); ++without)
      {
        Scalar gap = zeroed[without] - zeroed[with];
        if (gap > 0 && gap < instance.value(i))
        {
          breakpoints.insert(gap);
        }
      }
    }

    // Monotone predicate over sorted candidates: binary search for the first
    // value that keeps i in a best ad.
    std::vector<Scalar> candidates(breakpoints.begin(), breakpoints.end());
    std::size_t         lo = 0;
    std::size_t         hi = candidates.size() - 1;
    while (lo < hi)
    {
      std::size_t mid = (lo + hi) / 2;
      if (in_some_best_ad(i, candidates[mid]))
      {
        hi = mid;
      }
      else
      {
        lo = mid + 1;
      }
    }
    result.payments[index(i)] = candidates[lo];
    result.revenue += candidates[lo];
  }
  return result;
}

}  // namespace coop
