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

#include <string>
#include <string_view>

namespace coop {

/**
 * Instance documents are JSON:
 *
 *   {
 *     "advertisers": [{"name": "A", "value": "2"}, {"name": "B", "value": "1.5"}],
 *     "ads": [["A", "B"], ["B"]]
 *   }
 *
 * Values are decimal (or "p/q") strings so they stay exact; integer JSON
 * numbers are tolerated, fractional ones are rejected. All errors are
 * InstanceError with a location such as "ads[2][0]".
 */
AuctionInstance parse_instance(std::string_view text);

/// Emits the same shape parse_instance reads, values as exact strings.
std::string serialize_instance(AuctionInstance const &instance);

/**
 * Bid documents map advertiser names to bids:
 *
 *   {"bids": {"A": "1", "B": "0.5"}}
 *
 * Advertisers left out bid their value. Negative bids are accepted here so
 * that IR checks can reject them.
 */
BidProfile parse_bids(AuctionInstance const &instance, std::string_view text);

std::string serialize_bids(AuctionInstance const &instance, BidProfile const &bids);

/// Reads a whole file, or stdin when `path` is "-". Throws Error on failure.
std::string read_text(std::string const &path);

}  // namespace coop
