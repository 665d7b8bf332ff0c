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

// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when
// any criterion fails.

#include "coopetition/cef_polytope.hpp"
#include "coopetition/egalitarian.hpp"
#include "coopetition/external_contracts.hpp"
#include "coopetition/mechanisms.hpp"
#include "coopetition/oracle.hpp"

#include "support/random_instances.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace coop;
using coop::testing::make_instance;
using coop::testing::random_instance;
using coop::testing::InstanceShape;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict
{
  bool        pass = true;
  std::string detail;

  void require(bool condition, std::string const &what)
  {
    if (!condition && pass)
    {
      pass   = false;
      detail = what;
    }
  }
};

std::string join(std::vector<Scalar> const &values)
{
  std::string out = "(";
  for (std::size_t k = 0; k < values.size(); ++k)
  {
    out += (k ? ", " : "") + to_exact_string(values[k]);
  }
  return out + ")";
}

std::string describe(AuctionInstance const &instance)
{
  std::string out = "{";
  for (auto const &ad : instance.ads())
  {
    out += "(";
    for (std::size_t k = 0; k < ad.members.size(); ++k)
    {
      auto i = ad.members[k];
      out += (k ? "," : "") + instance.name(i) + ":" + to_exact_string(instance.value(i));
    }
    out += ")";
  }
  return out + "}";
}

int failures = 0;

void run(int id, std::string const &title, double limit_seconds, std::function<Verdict()> const &body)
{
  auto const start = Clock::now();
  Verdict    verdict;
  try
  {
    verdict = body();
  }
  catch (std::exception const &e)
  {
    verdict.pass   = false;
    verdict.detail = std::string("threw: ") + e.what();
  }
  double const seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (verdict.pass && seconds >= limit_seconds)
  {
    std::ostringstream os;
    os << "took " << seconds << " s, limit " << limit_seconds << " s";
    verdict.pass   = false;
    verdict.detail = os.str();
  }
  failures += verdict.pass ? 0 : 1;

  std::ostringstream time;
  time.precision(2);
  time << std::fixed << seconds;
  std::cout << (verdict.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << time.str() << " s)";
  if (!verdict.detail.empty())
  {
    std::cout << ": " << verdict.detail;
  }
  std::cout << std::endl;
}

BidProfile bids(std::vector<Scalar> values)
{
  return BidProfile{std::move(values)};
}

// Shared by criteria 6 and 10.
std::vector<AuctionInstance> property_instances()
{
  std::mt19937_64              rng(20260601);
  std::vector<AuctionInstance> out;
  for (int k = 0; k < 1000; ++k)
  {
    out.push_back(random_instance(rng, InstanceShape{8, 6, 20, {1, 2, 3, 4, 5, 6}}));
  }
  return out;
}

}  // namespace

int main()
{
  auto const four_small = make_instance({"A", "B", "C", "D", "E"}, {1, 1, 1, 1, Scalar(29, 10)}, {{0, 1, 2, 3}, {4}});
  auto const pair       = make_instance({"A", "B", "E"}, {2, 2, 3}, {{0, 1}, {2}});
  auto const triangle   = make_instance({"A", "B", "C", "D", "E"}, {1, 1, 1, 1, 1}, {{0, 1, 2}, {0, 3}, {1, 4}});
  auto const hundreds   = make_instance({"A", "B", "C"}, {100, 100, 99}, {{0, 1}, {2}});

  run(1, "VCG charges nothing when four small bidders beat 2.9", 1.0, [&] {
    Verdict v;
    auto    r = vcg(four_small);
    v.require(r.winner == AdId{0}, "winner is ad " + std::to_string(index(r.winner)));
    v.require(r.payments == std::vector<Scalar>(5, Scalar(0)), "payments " + join(r.payments));
    v.require(r.revenue == 0, "revenue " + to_exact_string(r.revenue));
    v.detail = v.pass ? "payments " + join(r.payments) : v.detail;
    return v;
  });

  run(2, "VCG payments (1, 1) and revenue 2 on {(A:2,B:2),(E:3)}", 1.0, [&] {
    Verdict v;
    auto    r = vcg(pair);
    v.require(r.winner == AdId{0}, "winner is ad " + std::to_string(index(r.winner)));
    v.require(r.payments == std::vector<Scalar>{1, 1, 0}, "payments " + join(r.payments));
    v.require(r.revenue == 2, "revenue " + to_exact_string(r.revenue));
    v.detail = v.pass ? "payments " + join(r.payments) + ", revenue 2" : v.detail;
    return v;
  });

  run(3, "Egalitarian first-price revenue 3 on {(A:2,B:2),(E:3)}", 1.0, [&] {
    Verdict v;
    auto    r = egalitarian_solve(pair);
    v.require(r.outcome.revenue == 3, "revenue " + to_exact_string(r.outcome.revenue));
    v.detail = v.pass ? "bids " + join(r.bids.bids) : v.detail;
    return v;
  });

  run(4, "Revenue range (1, 2) on the triangle, named points are equilibria", 1.0, [&] {
    Verdict           v;
    CefPolytope const polytope(triangle);
    auto const        range = revenue_range(polytope);
    v.require(range == RevenueRange{1, 2}, "range (" + to_exact_string(range.min) + ", " + to_exact_string(range.max) + ")");

    // The named points are given with coordinates ordered (A, C, B): in
    // (A, B, C) order they are (1, 1, 0) and (0, 0, 1).
    auto const first  = polytope.expand(std::vector<Scalar>{1, 1, 0});
    auto const second = polytope.expand(std::vector<Scalar>{0, 0, 1});
    v.require(is_equilibrium(polytope, first).holds, "(1,1,0) not an equilibrium");
    v.require(is_equilibrium(polytope, second).holds, "(0,0,1) not an equilibrium");
    auto const mid = polytope.expand(std::vector<Scalar>{Scalar(1, 2), Scalar(1, 2), Scalar(1, 2)});
    v.require(is_cef(polytope, mid) && is_ir(triangle, mid), "midpoint fails CEF or IR");

    bool const literal_first  = is_equilibrium(polytope, polytope.expand(std::vector<Scalar>{1, 0, 1})).holds;
    bool const literal_second = is_equilibrium(polytope, polytope.expand(std::vector<Scalar>{0, 1, 0})).holds;
    if (v.pass)
    {
      v.detail = std::string("range (1, 2); points read as (b_A, b_C, b_B); informational, read as (b_A, b_B, b_C): ") +
                 "(1,0,1) equilibrium=" + (literal_first ? "true" : "false") +
                 ", (0,1,0) equilibrium=" + (literal_second ? "true" : "false");
    }
    return v;
  });

  run(5, "Equilibrium family (x, 99 - x) and egalitarian (49.5, 49.5)", 1.0, [&] {
    Verdict           v;
    CefPolytope const polytope(hundreds);
    for (Scalar x : {Scalar(0), Scalar(10), Scalar(99, 2), Scalar(99)})
    {
      v.require(is_equilibrium(polytope, bids({x, 99 - x, 99})).holds,
                "x = " + to_exact_string(x) + " not an equilibrium");
    }
    auto r = egalitarian_solve(hundreds);
    v.require(r.bids == bids({Scalar(99, 2), Scalar(99, 2), 99}), "egalitarian bids " + join(r.bids.bids));
    return v;
  });

  std::vector<AuctionInstance> instances;
  run(6, "Property suite over 1000 random instances", 60.0, [&] {
    Verdict v;
    instances = property_instances();
    for (auto const &instance : instances)
    {
      auto const        result   = egalitarian_solve(instance);
      CefPolytope const polytope(instance);
      auto const        payments = vcg(instance).payments;
      auto const        where    = " on " + describe(instance);
      v.require(is_ir(instance, result.bids), "not IR" + where);
      v.require(is_cef(polytope, result.bids), "not CEF" + where);
      v.require(is_equilibrium(polytope, result.bids).holds, "not an equilibrium" + where);
      v.require(result.outcome.winner == efficient_winner(instance), "inefficient winner" + where);
      v.require(result.outcome.revenue >= revenue_lower_bound(instance), "revenue below lower bound" + where);
      for (auto i : polytope.members())
      {
        v.require(result.bids[i] >= payments[index(i)], "bid below VCG payment" + where);
      }
      if (!v.pass)
      {
        break;
      }
    }
    return v;
  });

  run(7, "Egalitarian matches grid lexmax within 1/8 and brute-force VCG matches, 200 instances", 300.0, [&] {
    Verdict         v;
    std::mt19937_64 rng(20260602);
    Scalar const    eps(1, 8);
    GridSpec const  grid{eps, 10'000'000};
    Scalar          worst = 0;
    for (int k = 0; k < 200 && v.pass; ++k)
    {
      auto const instance = random_instance(rng, InstanceShape{5, 4, 8, {4}});
      auto const where    = " on " + describe(instance);
      auto const egal     = egalitarian_solve(instance).bids;
      auto const lexmax   = lexmax_surplus_grid(instance, grid);
      for (std::size_t i = 0; i < instance.num_advertisers(); ++i)
      {
        Scalar diff = egal.bids[i] - lexmax.bids[i];
        diff        = diff < 0 ? Scalar(-diff) : diff;
        worst       = std::max(worst, diff);
        v.require(diff <= eps, "egalitarian " + join(egal.bids) + " vs grid " + join(lexmax.bids) + where);
      }
      v.require(vcg_bruteforce(instance) == vcg(instance), "VCG mismatch" + where);
    }
    if (v.pass)
    {
      v.detail = "largest coordinate gap " + to_exact_string(worst);
    }
    return v;
  });

  run(8, "Pareto samples are equilibria dominating VCG, 50 instances x 100 weights", 60.0, [&] {
    Verdict         v;
    std::mt19937_64 rng(20260603);
    std::uniform_int_distribution<int> num(1, 20);
    std::uniform_int_distribution<int> den(1, 5);
    for (int k = 0; k < 50 && v.pass; ++k)
    {
      auto const        instance = random_instance(rng, InstanceShape{});
      CefPolytope const polytope(instance);
      auto const        payments = vcg(instance).payments;
      for (int w = 0; w < 100 && v.pass; ++w)
      {
        std::vector<Scalar> weights;
        for (std::size_t i = 0; i < polytope.members().size(); ++i)
        {
          weights.emplace_back(num(rng), den(rng));
        }
        auto const sample = sample_pareto_equilibrium(polytope, weights);
        auto const where  = " on " + describe(instance) + " with weights " + join(weights);
        v.require(is_equilibrium(polytope, sample).holds, "not an equilibrium" + where);
        for (auto i : polytope.members())
        {
          v.require(sample[i] >= payments[index(i)], "below VCG payment" + where);
        }
      }
    }
    return v;
  });

  run(9, "External contracts: subsidies only pay off against an outside rival", 10.0, [&] {
    Verdict      v;
    auto const   plain = make_instance({"S", "M", "D"}, {3, 10, 2}, {{0, 1}, {2, 1}});
    auto const   rival = make_instance({"S", "M", "D", "A"}, {3, 10, 2, 11}, {{0, 1}, {2, 1}, {3}});
    OwnedAuction without(plain, {AdvertiserId{0}, AdvertiserId{2}}, {Scalar(1)});
    OwnedAuction with(rival, {AdvertiserId{0}, AdvertiserId{2}, AdvertiserId{3}}, {Scalar(1)});
    AdvertiserId const M{1};

    auto utility = [&](OwnedAuction const &owned, Scalar const &s0, Scalar const &s1) {
      ContractProfile p;
      if (s0 > 0)
      {
        p.contracts.push_back(Contract{M, AdId{0}, 1, s0, s0});
      }
      if (s1 > 0)
      {
        p.contracts.push_back(Contract{M, AdId{1}, 1, s1, s1});
      }
      return evaluate_contracts(owned, p).utilities[index(M)];
    };

    Scalar const step(1, 4);
    Scalar const zero_plain = utility(without, 0, 0);
    Scalar const zero_rival = utility(with, 0, 0);
    Scalar       best_rival = zero_rival;
    std::string  best_at;
    for (Scalar s0 = 0; s0 <= 11; s0 += step)
    {
      for (Scalar s1 = 0; s1 <= 11; s1 += step)
      {
        if (s0 == 0 && s1 == 0)
        {
          continue;
        }
        auto const u = utility(without, s0, s1);
        v.require(u <= zero_plain, "subsidy (" + to_exact_string(s0) + ", " + to_exact_string(s1) +
                                       ") raises M's utility to " + to_exact_string(u));
        auto const r = utility(with, s0, s1);
        if (r > best_rival)
        {
          best_rival = r;
          best_at    = "(" + to_exact_string(s0) + ", " + to_exact_string(s1) + ")";
        }
      }
    }
    v.require(best_rival > zero_rival, "no positive subsidy helps against the rival");
    if (v.pass)
    {
      v.detail = "without rival M keeps " + to_exact_string(zero_plain) + "; with rival " +
                 to_exact_string(zero_rival) + " -> " + to_exact_string(best_rival) + " at " + best_at;
    }

    // Three slots: reported only.
    auto const three = OwnedAuction(rival, {AdvertiserId{0}, AdvertiserId{2}, AdvertiserId{3}},
                                    {Scalar(1, 10), Scalar(8, 100), Scalar(5, 100)});
    auto const br    = best_response_contract(three, M, {}, SubsidyGrid{step, Scalar(11)});
    std::cout << "INFO [9] three slots (0.1, 0.08, 0.05): M utility without subsidy "
              << to_exact_string(br.zero_subsidy_utility) << ", best grid response " << to_exact_string(br.utility)
              << std::endl;
    return v;
  });

  run(10, "Lowering ends within |T| rounds and the winner never falls behind", 60.0, [&] {
    Verdict v;
    if (instances.empty())
    {
      instances = property_instances();
    }
    std::size_t most_rounds = 0;
    for (auto const &instance : instances)
    {
      CefPolytope const polytope(instance);
      auto const        result = egalitarian_solve(instance);
      auto const        where  = " on " + describe(instance);
      auto const        size   = polytope.members().size();
      v.require(result.trace.rounds.size() <= size, "too many rounds" + where);
      most_rounds = std::max(most_rounds, result.trace.rounds.size());

      // Replay the decrements independently of the stored bids.
      std::vector<Scalar> current;
      for (auto i : polytope.members())
      {
        current.push_back(instance.value(i));
      }
      std::vector<bool> fixed(size, false);
      for (auto const &round : result.trace.rounds)
      {
        for (std::size_t k = 0; k < size; ++k)
        {
          if (!fixed[k])
          {
            current[k] -= round.decrement;
          }
        }
        for (auto i : round.fixed)
        {
          auto pos   = std::find(polytope.members().begin(), polytope.members().end(), i) - polytope.members().begin();
          fixed[pos] = true;
        }
        v.require(current == round.bids_after, "replayed bids disagree with the trace" + where);
        auto const profile = polytope.expand(current);
        auto const ours    = total_bid(instance, profile, polytope.winner());
        for (auto const &ad : instance.ads())
        {
          v.require(ours >= total_bid(instance, profile, ad.id),
                    "ad " + std::to_string(index(ad.id)) + " overtook the winner" + where);
        }
      }
      v.require(std::all_of(fixed.begin(), fixed.end(), [](bool f) { return f; }), "bidders left unfixed" + where);
      v.require(polytope.expand(current) == result.bids, "final bids differ from the replay" + where);
      if (!v.pass)
      {
        break;
      }
    }
    if (v.pass)
    {
      v.detail = "at most " + std::to_string(most_rounds) + " rounds";
    }
    return v;
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
