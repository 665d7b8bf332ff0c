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

#include "coopetition/cef_polytope.hpp"

#include "coopetition/lp.hpp"
#include "coopetition/mechanisms.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace coop {

CefPolytope::CefPolytope(AuctionInstance instance)
  : instance_(std::move(instance))
  , winner_(efficient_winner(instance_))
  , members_(instance_.ad(winner_).members)
{
  for (auto const &ad : instance_.ads())
  {
    if (ad.id == winner_)
    {
      continue;
    }
    CefConstraint c{ad.id, instance_.difference(winner_, ad.id), Scalar(0)};
    if (c.bidders.empty())
    {
      continue;
    }
    for (auto i : instance_.difference(ad.id, winner_))
    {
      c.threshold += instance_.value(i);
    }
    constraints_.push_back(std::move(c));
  }
}

BidProfile CefPolytope::expand(std::span<Scalar const> member_bids) const
{
  if (member_bids.size() != members_.size())
  {
    throw DimensionError("expected " + std::to_string(members_.size()) + " member bids, got " +
                         std::to_string(member_bids.size()));
  }
  BidProfile bids = truthful_bids(instance_);
  for (std::size_t k = 0; k < members_.size(); ++k)
  {
    bids[members_[k]] = member_bids[k];
  }
  return bids;
}

CefPolytope build_polytope(AuctionInstance const &instance)
{
  return CefPolytope(instance);
}

namespace {

Scalar constraint_lhs(CefConstraint const &c, BidProfile const &bids)
{
  Scalar sum = 0;
  for (auto i : c.bidders)
  {
    sum += bids[i];
  }
  return sum;
}

}  // namespace

std::optional<CefConstraint> first_cef_violation(CefPolytope const &polytope, BidProfile const &bids)
{
  check_dimension(polytope.instance(), bids);
  for (auto const &c : polytope.constraints())
  {
    if (constraint_lhs(c, bids) < c.threshold)
    {
      return c;
    }
  }
  return std::nullopt;
}

bool is_cef(CefPolytope const &polytope, BidProfile const &bids)
{
  return !first_cef_violation(polytope, bids).has_value();
}

std::optional<AdvertiserId> first_ir_violation(AuctionInstance const &instance, BidProfile const &bids)
{
  check_dimension(instance, bids);
  for (std::size_t i = 0; i < instance.num_advertisers(); ++i)
  {
    AdvertiserId id{i};
    if (bids[id] < 0 || bids[id] > instance.value(id))
    {
      return id;
    }
  }
  return std::nullopt;
}

bool is_ir(AuctionInstance const &instance, BidProfile const &bids)
{
  return !first_ir_violation(instance, bids).has_value();
}

EquilibriumCheck is_equilibrium(CefPolytope const &polytope, BidProfile const &bids)
{
  auto const &instance = polytope.instance();
  check_dimension(instance, bids);

  std::vector<Scalar> member_bids;
  for (auto i : polytope.members())
  {
    member_bids.push_back(bids[i]);
  }
  BidProfile const canonical = polytope.expand(member_bids);

  EquilibriumCheck check;
  if (auto bad = first_ir_violation(instance, canonical))
  {
    check.reason = "bid of " + instance.name(*bad) + " is outside [0, value]";
    return check;
  }
  if (auto bad = first_cef_violation(polytope, canonical))
  {
    check.reason = "not CEF: ad " + std::to_string(index(bad->competitor)) + " could outbid the winner";
    return check;
  }

  Scalar const winning_total = total_bid(instance, canonical, polytope.winner());
  std::vector<AdId> tight;
  for (auto const &ad : instance.ads())
  {
    if (ad.id != polytope.winner() && total_bid(instance, canonical, ad.id) == winning_total)
    {
      tight.push_back(ad.id);
    }
  }

  EquilibriumCertificate certificate;
  for (auto k : polytope.members())
  {
    if (canonical[k] == 0)
    {
      certificate.push_back(Witness{k, std::nullopt});
      continue;
    }
    auto it = std::find_if(tight.begin(), tight.end(),
                           [&](AdId j) { return !instance.contains(j, k); });
    if (it == tight.end())
    {
      check.reason = instance.name(k) + " bids " + to_exact_string(canonical[k]) +
                     " but no tight ad excludes it; it could bid less and still win";
      return check;
    }
    certificate.push_back(Witness{k, *it});
  }
  check.holds       = true;
  check.certificate = std::move(certificate);
  return check;
}

namespace {

std::vector<lp::LinearConstraint> lp_constraints(CefPolytope const &polytope)
{
  auto const members = polytope.members();
  auto const position = [&](AdvertiserId i) {
    return static_cast<std::size_t>(std::find(members.begin(), members.end(), i) - members.begin());
  };

  std::vector<lp::LinearConstraint> rows;
  for (auto const &c : polytope.constraints())
  {
    lp::LinearConstraint row{std::vector<Scalar>(members.size(), Scalar(0)),
                             lp::Relation::kGreaterEqual, c.threshold};
    for (auto i : c.bidders)
    {
      row.coefficients[position(i)] = 1;
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < members.size(); ++k)
  {
    lp::LinearConstraint row{std::vector<Scalar>(members.size(), Scalar(0)), lp::Relation::kLessEqual,
                             polytope.instance().value(members[k])};
    row.coefficients[k] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

BidProfile sample_pareto_equilibrium(CefPolytope const &polytope, std::span<Scalar const> weights)
{
  if (weights.size() != polytope.members().size())
  {
    throw DimensionError("expected " + std::to_string(polytope.members().size()) +
                         " weights (one per winning-ad member), got " + std::to_string(weights.size()));
  }
  for (auto const &w : weights)
  {
    if (w <= 0)
    {
      throw Error("weights must be strictly positive, got " + to_exact_string(w));
    }
  }

  auto const solution = lp::minimize(weights, lp_constraints(polytope));
  if (solution.status != lp::Status::kOptimal)
  {
    // Truthful bids are always feasible for the efficient ad.
    throw std::logic_error("CEF polytope LP did not reach an optimum");
  }
  auto bids = polytope.expand(solution.x);
  if (!is_equilibrium(polytope, bids).holds)
  {
    throw std::logic_error("LP optimum is not an equilibrium");
  }
  return bids;
}

std::vector<std::vector<Scalar>> enumerate_vertices(CefPolytope const &polytope, std::size_t max_members)
{
  auto const  members = polytope.members();
  auto const &instance = polytope.instance();
  std::size_t const d  = members.size();
  if (d > max_members)
  {
    throw Error("vertex enumeration over " + std::to_string(d) + " winning-ad members exceeds the limit of " +
                std::to_string(max_members));
  }

  auto const constraints = polytope.constraints();
  std::vector<std::vector<bool>> in_constraint(constraints.size(), std::vector<bool>(d, false));
  for (std::size_t c = 0; c < constraints.size(); ++c)
  {
    for (std::size_t k = 0; k < d; ++k)
    {
      in_constraint[c][k] =
          std::find(constraints[c].bidders.begin(), constraints[c].bidders.end(), members[k]) !=
          constraints[c].bidders.end();
    }
  }

  auto feasible = [&](std::vector<Scalar> const &x) {
    for (std::size_t k = 0; k < d; ++k)
    {
      if (x[k] < 0 || x[k] > instance.value(members[k]))
      {
        return false;
      }
    }
    for (std::size_t c = 0; c < constraints.size(); ++c)
    {
      Scalar lhs = 0;
      for (std::size_t k = 0; k < d; ++k)
      {
        if (in_constraint[c][k])
        {
          lhs += x[k];
        }
      }
      if (lhs < constraints[c].threshold)
      {
        return false;
      }
    }
    return true;
  };

  std::set<std::vector<Scalar>> vertices;

  // A vertex has d linearly independent tight constraints: each coordinate
  // is pinned by a bound or left free, and the free ones are determined by
  // as many tight CEF rows.
  enum class Pin
  {
    kZero,
    kValue,
    kFree
  };
  std::vector<Pin> pins(d, Pin::kZero);

  std::function<void(std::size_t, std::size_t)> assign;
  assign = [&](std::size_t k, std::size_t free_count) {
    if (free_count > constraints.size())
    {
      return;
    }
    if (k < d)
    {
      for (Pin p : {Pin::kZero, Pin::kValue, Pin::kFree})
      {
        if (p == Pin::kValue && instance.value(members[k]) == 0)
        {
          continue;
        }
        pins[k] = p;
        assign(k + 1, free_count + (p == Pin::kFree ? 1 : 0));
      }
      return;
    }

    std::vector<Scalar>      x(d, Scalar(0));
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < d; ++i)
    {
      if (pins[i] == Pin::kValue)
      {
        x[i] = instance.value(members[i]);
      }
      else if (pins[i] == Pin::kFree)
      {
        free.push_back(i);
      }
    }
    if (free.empty())
    {
      if (feasible(x))
      {
        vertices.insert(x);
      }
      return;
    }

    // Choose |free| tight CEF rows.
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> choose = [&](std::size_t start) {
      if (chosen.size() == free.size())
      {
        std::vector<std::vector<Scalar>> a;
        std::vector<Scalar>              b;
        for (auto c : chosen)
        {
          std::vector<Scalar> row;
          Scalar              rhs = constraints[c].threshold;
          for (std::size_t i = 0; i < d; ++i)
          {
            if (!in_constraint[c][i])
            {
              continue;
            }
            if (pins[i] == Pin::kFree)
            {
              continue;
            }
            rhs -= x[i];
          }
          for (auto f : free)
          {
            row.push_back(in_constraint[c][f] ? Scalar(1) : Scalar(0));
          }
          a.push_back(std::move(row));
          b.push_back(rhs);
        }
        if (auto solved = lp::solve_square(std::move(a), std::move(b)))
        {
          auto y = x;
          for (std::size_t f = 0; f < free.size(); ++f)
          {
            y[free[f]] = (*solved)[f];
          }
          if (feasible(y))
          {
            vertices.insert(std::move(y));
          }
        }
        return;
      }
      for (std::size_t c = start; c < constraints.size(); ++c)
      {
        chosen.push_back(c);
        choose(c + 1);
        chosen.pop_back();
      }
    };
    choose(0);
  };
  assign(0, 0);

  return {vertices.begin(), vertices.end()};
}

RevenueRange revenue_range(CefPolytope const &polytope)
{
  std::vector<Scalar> const unit(polytope.members().size(), Scalar(1));
  auto const                cheapest = sample_pareto_equilibrium(polytope, unit);

  RevenueRange range;
  range.min = total_bid(polytope.instance(), cheapest, polytope.winner());
  range.max = range.min;
  for (auto const &vertex : enumerate_vertices(polytope))
  {
    auto bids = polytope.expand(vertex);
    if (!is_equilibrium(polytope, bids).holds)
    {
      continue;
    }
    range.max = std::max(range.max, total_bid(polytope.instance(), bids, polytope.winner()));
  }
  return range;
}

}  // namespace coop
