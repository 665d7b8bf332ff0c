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

#include "coopetition/instance_io.hpp"

#include "instance_json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace coop {
namespace detail {

Json parse_json(std::string_view text)
{
  try
  {
    return Json::parse(text);
  }
  catch (Json::parse_error const &e)
  {
    throw InstanceError("byte " + std::to_string(e.byte), "malformed JSON document");
  }
}

Scalar scalar_from_json(Json const &value, std::string const &where)
{
  if (value.is_string())
  {
    try
    {
      return parse_scalar(value.get<std::string>());
    }
    catch (ScalarFormatError const &e)
    {
      throw InstanceError(where, e.what());
    }
  }
  if (value.is_number_integer())
  {
    return Scalar(value.get<std::int64_t>());
  }
  if (value.is_number())
  {
    throw InstanceError(where, "fractional JSON number; write it as a decimal string");
  }
  throw InstanceError(where, "expected a number");
}

AuctionInstance instance_from_json(Json const &document)
{
  if (!document.is_object())
  {
    throw InstanceError("$", "expected a JSON object");
  }
  if (!document.contains("advertisers") || !document["advertisers"].is_array())
  {
    throw InstanceError("advertisers", "missing or not an array");
  }
  if (!document.contains("ads") || !document["ads"].is_array())
  {
    throw InstanceError("ads", "missing or not an array");
  }

  std::vector<std::string> names;
  std::vector<Scalar>      values;
  auto const              &advertisers = document["advertisers"];
  for (std::size_t i = 0; i < advertisers.size(); ++i)
  {
    auto where = "advertisers[" + std::to_string(i) + "]";
    auto const &entry = advertisers[i];
    if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string())
    {
      throw InstanceError(where, "expected {\"name\": str, \"value\": str}");
    }
    if (!entry.contains("value"))
    {
      throw InstanceError(where, "missing value");
    }
    names.push_back(entry["name"].get<std::string>());
    values.push_back(scalar_from_json(entry["value"], where + ".value"));
  }

  std::vector<std::vector<AdvertiserId>> ads;
  auto const                            &ad_list = document["ads"];
  for (std::size_t j = 0; j < ad_list.size(); ++j)
  {
    auto where = "ads[" + std::to_string(j) + "]";
    if (!ad_list[j].is_array())
    {
      throw InstanceError(where, "expected an array of advertiser names");
    }
    std::vector<AdvertiserId> members;
    for (std::size_t k = 0; k < ad_list[j].size(); ++k)
    {
      auto const &member = ad_list[j][k];
      auto        at     = where + "[" + std::to_string(k) + "]";
      if (!member.is_string())
      {
        throw InstanceError(at, "expected an advertiser name");
      }
      auto name = member.get<std::string>();
      auto it   = std::find(names.begin(), names.end(), name);
      if (it == names.end())
      {
        throw InstanceError(at, "unknown advertiser \"" + name + "\"");
      }
      members.push_back(AdvertiserId{static_cast<std::size_t>(it - names.begin())});
    }
    ads.push_back(std::move(members));
  }

  return AuctionInstance(std::move(names), std::move(values), std::move(ads));
}

Json instance_to_json(AuctionInstance const &instance)
{
  Json advertisers = Json::array();
  for (std::size_t i = 0; i < instance.num_advertisers(); ++i)
  {
    AdvertiserId id{i};
    advertisers.push_back({{"name", instance.name(id)}, {"value", to_exact_string(instance.value(id))}});
  }
  Json ads = Json::array();
  for (auto const &ad : instance.ads())
  {
    Json members = Json::array();
    for (auto i : ad.members)
    {
      members.push_back(instance.name(i));
    }
    ads.push_back(std::move(members));
  }
  return Json{{"advertisers", std::move(advertisers)}, {"ads", std::move(ads)}};
}

}  // namespace detail

AuctionInstance parse_instance(std::string_view text)
{
  return detail::instance_from_json(detail::parse_json(text));
}

std::string serialize_instance(AuctionInstance const &instance)
{
  return detail::instance_to_json(instance).dump(2) + "\n";
}

BidProfile parse_bids(AuctionInstance const &instance, std::string_view text)
{
  auto document = detail::parse_json(text);
  if (!document.is_object() || !document.contains("bids") || !document["bids"].is_object())
  {
    throw InstanceError("bids", "expected {\"bids\": {name: str, ...}}");
  }
  BidProfile bids = truthful_bids(instance);
  for (auto const &[name, value] : document["bids"].items())
  {
    auto where = "bids." + name;
    auto id    = instance.find(name);
    if (!id)
    {
      throw InstanceError(where, "unknown advertiser \"" + name + "\"");
    }
    bids[*id] = detail::scalar_from_json(value, where);
  }
  return bids;
}

std::string serialize_bids(AuctionInstance const &instance, BidProfile const &bids)
{
  check_dimension(instance, bids);
  // ordered_json keeps advertisers in instance order.
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < instance.num_advertisers(); ++i)
  {
    entries[instance.name(AdvertiserId{i})] = to_exact_string(bids.bids[i]);
  }
  nlohmann::ordered_json document;
  document["bids"] = std::move(entries);
  return document.dump(2) + "\n";
}

std::string read_text(std::string const &path)
{
  std::ostringstream buffer;
  if (path == "-")
  {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in)
  {
    throw Error("cannot open " + path);
  }
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace coop
