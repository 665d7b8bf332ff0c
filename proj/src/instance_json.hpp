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

#include "json.hpp"

#include <string>

namespace coop::detail {

using Json = nlohmann::json;

Json parse_json(std::string_view text);

/// Reads a Scalar from a string or integer JSON value.
Scalar scalar_from_json(Json const &value, std::string const &where);

AuctionInstance instance_from_json(Json const &document);

Json instance_to_json(AuctionInstance const &instance);

}  // namespace coop::detail
