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

#include "coopetition/egalitarian.hpp"

#include "coopetition/cef_polytope.hpp"

#include <algorithm>
#include <sstream>

namespace coop {

EgalitarianResult egalitarian_solve(AuctionInstance const &instance)
{
  CefPolytope const polytope(instance);
  auto const        members     = polytope.members();
  auto const        constraints = polytope.constraints();
  std::size_t const d           = members.size();

  auto position = [&](AdvertiserId i) {
    return static_cast<std::size_t>(std::find(members.begin(), members.end(), i) - members.begin());
  };

  std::vector<Scalar> bids;
  for (auto i : members)
  {
    bids.push_back(instance.value(i));
  }
  std::vector<bool> fixed(d, false);
  std::size_t       remaining = d;

  auto slack = [&](CefConstraint const &c) {
    Scalar lhs = 0;
    for (auto i : c.bidders)
    {
      lhs += bids[position(i)];
    }
    return lhs - c.threshold;
  };
  auto rate = [&](CefConstraint const &c) {
    return static_cast<long>(std::count_if(c.bidders.begin(), c.bidders.end(),
                                           [&](AdvertiserId i) { return !fixed[position(i)]; }));
  };

  LoweringTrace trace;
  while (remaining > 0)
  {
    std::optional<Scalar> step;
    auto consider = [&](Scalar const &t) {
      if (!step || t < *step)
      {
        step = t;
      }
    };
    for (std::size_t k = 0; k < d; ++k)
    {
      if (!fixed[k])
      {
        consider(bids[k]);
      }
    }
    for (auto const &c : constraints)
    {
      if (auto r = rate(c); r > 0)
      {
        consider(slack(c) / r);
      }
    }

    LoweringRound round;
    round.decrement = *step;
    for (std::size_t k = 0; k < d; ++k)
    {
      if (!fixed[k])
      {
        bids[k] -= round.decrement;
      }
    }

    std::vector<bool> newly(d, false);
    for (auto const &c : constraints)
    {
      if (rate(c) > 0 && slack(c) == 0)
      {
        round.events.push_back({LoweringTrigger::kTightAd, AdvertiserId{}, c.competitor});
        for (auto i : c.bidders)
        {
          newly[position(i)] = !fixed[position(i)];
        }
      }
    }
    for (std::size_t k = 0; k < d; ++k)
    {
      if (!fixed[k] && bids[k] == 0)
      {
        round.events.push_back({LoweringTrigger::kZeroBid, members[k], AdId{}});
        newly[k] = true;
      }
    }
    for (std::size_t k = 0; k < d; ++k)
    {
      if (newly[k])
      {
        fixed[k] = true;
        --remaining;
        round.fixed.push_back(members[k]);
      }
    }

    for (auto const &c : constraints)
    {
      if (slack(c) < 0)
      {
        throw std::logic_error("uniform lowering let ad " + std::to_string(index(c.competitor)) +
                               " overtake the winner");
      }
    }
    if (round.fixed.empty())
    {
      throw std::logic_error("lowering round fixed no bidder");
    }
    round.bids_after = bids;
    trace.rounds.push_back(std::move(round));
  }
  if (trace.rounds.size() > d)
  {
    throw std::logic_error("uniform lowering took more rounds than bidders");
  }

  EgalitarianResult result{polytope.expand(bids), {}, std::move(trace)};
  result.outcome = make_outcome(instance, polytope.winner(), result.bids.bids);
  return result;
}

std::string LoweringTrace::to_string(AuctionInstance const &instance) const
{
  std::ostringstream os;
  for (std::size_t r = 0; r < rounds.size(); ++r)
  {
    auto const &round = rounds[r];
    os << "round " << r + 1 << ": lower by " << to_display_string(round.decrement) << "\n";
    for (auto const &e : round.events)
    {
      if (e.trigger == LoweringTrigger::kZeroBid)
      {
        os << "  " << instance.name(e.bidder) << " reached zero\n";
      }
      else
      {
        os << "  ad " << index(e.ad) << " tied the winner\n";
      }
    }
    os << "  fixed:";
    for (auto i : round.fixed)
    {
      os << " " << instance.name(i);
    }
    os << "\n";
  }
  return os.str();
}

bool verify_egalitarian(AuctionInstance const &instance, BidProfile const &bids, GridSpec const &grid)
{
  CefPolytope const polytope(instance);
  if (!is_equilibrium(polytope, bids).holds)
  {
    return false;
  }

  auto sorted_surplus = [&](BidProfile const &profile) {
    std::vector<Scalar> s;
    for (auto i : polytope.members())
    {
      s.push_back(instance.value(i) - profile[i]);
    }
    std::sort(s.begin(), s.end());
    return s;
  };

  auto const mine = sorted_surplus(bids);
  auto const best = sorted_surplus(lexmax_surplus_grid(instance, grid));
  for (std::size_t k = 0; k < mine.size(); ++k)
  {
    Scalar diff = best[k] - mine[k];
    if (diff > grid.resolution)
    {
      return false;
    }
    if (-diff > grid.resolution)
    {
      return true;
    }
  }
  return true;
}

}  // namespace coop
