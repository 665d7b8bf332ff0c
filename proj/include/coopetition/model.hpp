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

#include "coopetition/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coop {

enum class AdvertiserId : std::size_t
{
};

enum class AdId : std::size_t
{
};

constexpr std::size_t index(AdvertiserId id)
{
  return static_cast<std::size_t>(id);
}

constexpr std::size_t index(AdId id)
{
  return static_cast<std::size_t>(id);
}

/// Base of every error the library reports to callers.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// An instance failed validation. `where` locates the offending element, e.g.
/// "ads[2][0]".
class InstanceError : public Error
{
public:
  InstanceError(std::string where, std::string const &what)
    : Error(where + ": " + what)
    , where_(std::move(where))
  {}

  std::string const &where() const noexcept
  {
    return where_;
  }

private:
  std::string where_;
};

class DimensionError : public Error
{
public:
  using Error::Error;
};

/// An ad is the set of advertisers who derive value from a click on it.
/// Members are kept sorted by advertiser id.
struct Ad
{
  AdId                      id{};
  std::vector<AdvertiserId> members;

  friend bool operator==(Ad const &, Ad const &) = default;
};

/**
 * Single-slot coopetitive auction: advertisers with per-click values and a
 * collection of ads, each a set of advertisers.
 *
 * Construction validates that values are non-negative, ads are non-empty and
 * pairwise distinct, and every advertiser belongs to at least one ad.
 * Advertisers are indexed in the order given; ads likewise.
 */
class AuctionInstance
{
public:
  AuctionInstance(std::vector<std::string> names, std::vector<Scalar> values,
                  std::vector<std::vector<AdvertiserId>> ads);

  /// Unnamed advertisers get "A", "B", ... , "Z", "A1", ...
  static AuctionInstance from_values(std::vector<Scalar> values,
                                     std::vector<std::vector<AdvertiserId>> ads);

  std::size_t num_advertisers() const noexcept
  {
    return values_.size();
  }

  std::size_t num_ads() const noexcept
  {
    return ads_.size();
  }

  Scalar const &value(AdvertiserId i) const
  {
    return values_.at(index(i));
  }

  std::span<Scalar const> values() const noexcept
  {
    return values_;
  }

  std::string const &name(AdvertiserId i) const
  {
    return names_.at(index(i));
  }

  std::span<std::string const> names() const noexcept
  {
    return names_;
  }

  Ad const &ad(AdId j) const;

  std::span<Ad const> ads() const noexcept
  {
    return ads_;
  }

  bool contains(AdId j, AdvertiserId i) const;

  std::optional<AdvertiserId> find(std::string_view name) const;

  /// Members of `a` that are not members of `b`.
  std::vector<AdvertiserId> difference(AdId a, AdId b) const;

  friend bool operator==(AuctionInstance const &, AuctionInstance const &) = default;

private:
  std::vector<std::string>       names_;
  std::vector<Scalar>            values_;
  std::vector<Ad>                ads_;
  std::vector<std::vector<bool>> membership_;  // [ad][advertiser]
};

/// One per-click bid per advertiser, indexed by AdvertiserId.
struct BidProfile
{
  std::vector<Scalar> bids;

  Scalar const &operator[](AdvertiserId i) const
  {
    return bids.at(index(i));
  }

  Scalar &operator[](AdvertiserId i)
  {
    return bids.at(index(i));
  }

  friend bool operator==(BidProfile const &, BidProfile const &) = default;
};

/// Result of running a single-slot mechanism. Surplus of a member of the
/// winning ad is v_i - p_i; everybody else gets (and pays) nothing.
struct Outcome
{
  AdId                winner{};
  std::vector<Scalar> payments;
  Scalar              revenue;
  std::vector<Scalar> surpluses;

  friend bool operator==(Outcome const &, Outcome const &) = default;
};

Scalar total_value(AuctionInstance const &instance, AdId ad);

Scalar total_bid(AuctionInstance const &instance, BidProfile const &bids, AdId ad);

/// Throws DimensionError unless `bids` has one entry per advertiser.
void check_dimension(AuctionInstance const &instance, BidProfile const &bids);

/// Builds the outcome where `winner` is shown and its members pay `payments`.
Outcome make_outcome(AuctionInstance const &instance, AdId winner, std::vector<Scalar> payments);

/// The bid profile where everybody bids their value.
BidProfile truthful_bids(AuctionInstance const &instance);

}  // namespace coop
