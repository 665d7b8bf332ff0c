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

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coop {

/// sum of b_i over `bidders` >= threshold. `bidders` are the winning-ad
/// members outside the competing ad, `threshold` the total value of the
/// competing ad's members outside the winning ad.
struct CefConstraint
{
  AdId                      competitor{};
  std::vector<AdvertiserId> bidders;
  Scalar                    threshold;
};

/**
 * The set of winning-ad bid vectors that are cooperatively envy-free and
 * individually rational:
 *
 *   sum_{i in T \ S_j} b_i >= sum_{i in S_j \ T} v_i    for every other ad S_j
 *   0 <= b_i <= v_i                                     for every i in T
 *
 * T is the efficient ad. Advertisers outside T are held at their values (the
 * strongest bid they could credibly make), which is what makes the CEF
 * inequalities and the tight-ad equilibrium condition agree. Constraints
 * whose left side is empty are vacuous and omitted.
 */
class CefPolytope
{
public:
  explicit CefPolytope(AuctionInstance instance);

  AuctionInstance const &instance() const noexcept
  {
    return instance_;
  }

  AdId winner() const noexcept
  {
    return winner_;
  }

  /// Members of the winning ad, in id order. Coordinates of the polytope.
  std::span<AdvertiserId const> members() const noexcept
  {
    return members_;
  }

  std::span<CefConstraint const> constraints() const noexcept
  {
    return constraints_;
  }

  /// Full-length profile: `member_bids` for T (in members() order), values
  /// for everybody else.
  BidProfile expand(std::span<Scalar const> member_bids) const;

private:
  AuctionInstance            instance_;
  AdId                       winner_{};
  std::vector<AdvertiserId>  members_;
  std::vector<CefConstraint> constraints_;
};

CefPolytope build_polytope(AuctionInstance const &instance);

bool is_cef(CefPolytope const &polytope, BidProfile const &bids);

/// The first CEF constraint `bids` violate, if any.
std::optional<CefConstraint> first_cef_violation(CefPolytope const &polytope, BidProfile const &bids);

bool is_ir(AuctionInstance const &instance, BidProfile const &bids);

/// The first advertiser whose bid is outside [0, v_i], if any.
std::optional<AdvertiserId> first_ir_violation(AuctionInstance const &instance, BidProfile const &bids);

/// Why a winning-ad member keeps its bid: it bids zero (tight_ad empty) or
/// lowering it would let `tight_ad`, an ad it is not part of, win.
struct Witness
{
  AdvertiserId        bidder{};
  std::optional<AdId> tight_ad;

  friend bool operator==(Witness const &, Witness const &) = default;
};

using EquilibriumCertificate = std::vector<Witness>;

struct EquilibriumCheck
{
  bool                                  holds = false;
  std::optional<EquilibriumCertificate> certificate;
  std::string                           reason;  // set when !holds
};

/**
 * Checks the tight-ad characterization of equilibrium: bids are IR and CEF,
 * and every member k of T with b_k > 0 has an ad S_j not containing k whose
 * total bid equals T's. Bids of advertisers outside T are read as their
 * values regardless of what `bids` holds for them. On success the
 * certificate names the lowest-id witness for each member.
 */
EquilibriumCheck is_equilibrium(CefPolytope const &polytope, BidProfile const &bids);

/// Minimizes sum w_i b_i over the polytope with exact simplex. Weights are
/// per member of T and must be strictly positive; the result is a
/// Pareto-minimal vertex and therefore an equilibrium.
BidProfile sample_pareto_equilibrium(CefPolytope const &polytope, std::span<Scalar const> weights);

/// All vertices of the polytope, as member-bid vectors in members() order,
/// sorted lexicographically and deduplicated. Throws Error when the member
/// count exceeds `max_members`.
std::vector<std::vector<Scalar>> enumerate_vertices(CefPolytope const &polytope,
                                                    std::size_t        max_members = 14);

struct RevenueRange
{
  Scalar min;
  Scalar max;

  friend bool operator==(RevenueRange const &, RevenueRange const &) = default;
};

/// Smallest and largest total bid of T over all equilibria. The minimum
/// comes from the unit-weight LP; the maximum from the equilibrium vertices.
RevenueRange revenue_range(CefPolytope const &polytope);

}  // namespace coop
