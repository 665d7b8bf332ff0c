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

#include "support/random_instances.hpp"

#include "gtest/gtest.h"

using namespace coop;
using namespace coop::testing;

TEST(efficient_winner, picks_largest_total_value)
{
  auto notation = make_instance({"A", "B", "C"}, {2, 1, 3}, {{0, 1, 2}, {0, 1}, {2}});
  EXPECT_EQ(efficient_winner(notation), AdId{0});
  EXPECT_EQ(efficient_winner(pair_vs_single()), AdId{0});
}

TEST(efficient_winner, ties_break_to_lowest_id)
{
  auto tied = make_instance({"A", "B"}, {1, 1}, {{0}, {1}});
  EXPECT_EQ(efficient_winner(tied), AdId{0});
  EXPECT_EQ(welfare_maximizing_ads(tied), (std::vector<AdId>{AdId{0}, AdId{1}}));
  EXPECT_EQ(welfare_maximizing_ads(pair_vs_single()).size(), 1u);
}

TEST(vcg, many_small_bidders_pay_nothing)
{
  auto result = vcg(four_small_vs_one());
  EXPECT_EQ(result.winner, AdId{0});
  for (auto const &p : result.payments)
  {
    EXPECT_EQ(p, 0);
  }
  EXPECT_EQ(result.revenue, 0);
}

TEST(vcg, pair_each_pays_one)
{
  auto result = vcg(pair_vs_single());
  EXPECT_EQ(result.winner, AdId{0});
  EXPECT_EQ(result.payments, (std::vector<Scalar>{1, 1, 0}));
  EXPECT_EQ(result.revenue, 2);
}

TEST(vcg, lone_ad_pays_nothing)
{
  auto result = vcg(single_ad());
  EXPECT_EQ(result.payments, (std::vector<Scalar>{0}));
  EXPECT_EQ(result.revenue, 0);
}

TEST(vcg, triangle_charges_nothing)
{
  EXPECT_EQ(vcg(triangle()).revenue, 0);
}

TEST(first_price_clear, highest_total_bid_wins)
{
  auto instance = pair_vs_single();
  auto fourteen = Scalar(14, 10);
  auto out      = first_price_clear(instance, bids_of({fourteen, fourteen, 3}));
  EXPECT_EQ(out.winner, AdId{1});
  EXPECT_EQ(out.revenue, 3);
  EXPECT_EQ(out.payments, (std::vector<Scalar>{0, 0, 3}));
  EXPECT_EQ(out.surpluses, (std::vector<Scalar>{0, 0, 0}));

  auto tie = first_price_clear(instance, bids_of({Scalar(3, 2), Scalar(3, 2), 3}));
  EXPECT_EQ(tie.winner, AdId{0});
  EXPECT_EQ(tie.revenue, 3);
}

TEST(first_price_clear, zero_bids_show_first_ad)
{
  auto out = first_price_clear(triangle(), bids_of({0, 0, 0, 0, 0}));
  EXPECT_EQ(out.winner, AdId{0});
  EXPECT_EQ(out.revenue, 0);
}

TEST(first_price_clear, split_of_ninety_nine)
{
  auto half = Scalar(99, 2);
  auto out  = first_price_clear(hundreds(), bids_of({half, half, 99}));
  EXPECT_EQ(out.winner, AdId{0});
  EXPECT_EQ(out.revenue, 99);
  EXPECT_EQ(out.surpluses, (std::vector<Scalar>{Scalar(101, 2), Scalar(101, 2), 0}));
  EXPECT_THROW(first_price_clear(hundreds(), bids_of({1})), DimensionError);
}

TEST(revenue_lower_bound, examples)
{
  EXPECT_EQ(revenue_lower_bound(pair_vs_single()), 3);
  EXPECT_EQ(revenue_lower_bound(triangle()), 1);
  EXPECT_EQ(revenue_lower_bound(single_ad()), 0);
}

TEST(vcg, properties_over_random_instances)
{
  std::mt19937_64 rng(1234);
  InstanceShape   shape;
  shape.max_ads = 8;
  for (int trial = 0; trial < 500; ++trial)
  {
    auto instance = random_instance(rng, shape);
    auto result   = vcg(instance);
    EXPECT_EQ(result.winner, efficient_winner(instance));
    Scalar sum = 0;
    for (std::size_t i = 0; i < instance.num_advertisers(); ++i)
    {
      AdvertiserId id{i};
      EXPECT_GE(result.payments[i], 0);
      EXPECT_LE(result.payments[i], instance.value(id));
      if (!instance.contains(result.winner, id))
      {
        EXPECT_EQ(result.payments[i], 0);
      }
      sum += result.payments[i];
    }
    EXPECT_EQ(sum, result.revenue);
    EXPECT_EQ(vcg(instance), result);
  }
}

TEST(first_price_clear, deterministic_and_consistent)
{
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial)
  {
    auto       instance = random_instance(rng, InstanceShape{});
    BidProfile bids;
    for (std::size_t i = 0; i < instance.num_advertisers(); ++i)
    {
      bids.bids.emplace_back(std::uniform_int_distribution<int>(0, 10)(rng), 2);
    }
    auto a = first_price_clear(instance, bids);
    EXPECT_EQ(a, first_price_clear(instance, bids));
    for (auto const &ad : instance.ads())
    {
      EXPECT_GE(total_bid(instance, bids, a.winner), total_bid(instance, bids, ad.id));
    }
    EXPECT_EQ(a.revenue, total_bid(instance, bids, a.winner));
  }
}
