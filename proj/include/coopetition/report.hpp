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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace coop {

enum class ReportFormat
{
  kTable,
  kCsv,
  kJson,
};

/// "table", "csv" or "json"; throws Error otherwise.
ReportFormat parse_report_format(std::string_view name);

/// One mechanism run. Payments and surpluses are per advertiser, in the
/// report's advertiser order; either may be left empty.
struct MechanismRow
{
  std::string               mechanism;
  std::optional<AdId>       winner;
  std::vector<std::string>  winner_members;
  std::vector<Scalar>       bids;
  std::vector<Scalar>       payments;
  std::optional<Scalar>     revenue;
  std::vector<Scalar>       surpluses;
};

using FactValue = std::variant<bool, Scalar, std::string>;

struct Fact
{
  std::string key;
  FactValue   value;
};

struct Report
{
  std::string                 command;
  std::vector<std::string>    advertisers;
  std::vector<MechanismRow>   rows;
  std::vector<Fact>           facts;
  std::optional<Scalar>       range_min;
  std::optional<Scalar>       range_max;
  std::optional<std::string>  trace;
  std::vector<std::string>    notes;
  std::optional<std::string>  error;

  void add(std::string key, FactValue value)
  {
    facts.push_back(Fact{std::move(key), std::move(value)});
  }
};

/// Row for an outcome of `instance`, winner members spelled by name.
MechanismRow outcome_row(std::string mechanism, AuctionInstance const &instance, Outcome const &outcome,
                         BidProfile const *bids = nullptr);

/**
 * Renders a report. JSON and CSV carry every number as an exact string that
 * parse_scalar reads back to the same value; the table shows non-terminating
 * values with a rounded decimal next to the fraction.
 *
 * CSV is long-form with columns record,key,value.
 */
std::string render(Report const &report, ReportFormat format);

}  // namespace coop
