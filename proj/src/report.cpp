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

#include "coopetition/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace coop {
namespace {

using OrderedJson = nlohmann::ordered_json;

std::string fact_text(FactValue const &value, bool exact)
{
  if (auto const *b = std::get_if<bool>(&value))
  {
    return *b ? "true" : "false";
  }
  if (auto const *s = std::get_if<Scalar>(&value))
  {
    return exact ? to_exact_string(*s) : to_display_string(*s);
  }
  return std::get<std::string>(value);
}

std::string csv_field(std::string const &text)
{
  if (text.find_first_of(",\"\n") == std::string::npos)
  {
    return text;
  }
  std::string quoted = "\"";
  for (char c : text)
  {
    if (c == '"')
    {
      quoted += '"';
    }
    quoted += c;
  }
  return quoted + "\"";
}

std::vector<std::string> split_lines(std::string const &text)
{
  std::vector<std::string> lines;
  std::istringstream       is(text);
  for (std::string line; std::getline(is, line);)
  {
    lines.push_back(line);
  }
  return lines;
}

OrderedJson per_advertiser(Report const &report, std::vector<Scalar> const &values)
{
  auto obj = OrderedJson::object();
  for (std::size_t i = 0; i < values.size(); ++i)
  {
    obj[report.advertisers.at(i)] = to_exact_string(values[i]);
  }
  return obj;
}

std::string render_json(Report const &report)
{
  OrderedJson doc;
  doc["command"] = report.command;
  if (report.error)
  {
    doc["error"] = *report.error;
    return doc.dump(2) + "\n";
  }
  doc["advertisers"] = report.advertisers;

  auto rows = OrderedJson::array();
  for (auto const &row : report.rows)
  {
    OrderedJson r;
    r["mechanism"] = row.mechanism;
    if (row.winner)
    {
      r["winner"]         = index(*row.winner);
      r["winner_members"] = row.winner_members;
    }
    if (!row.bids.empty())
    {
      r["bids"] = per_advertiser(report, row.bids);
    }
    if (!row.payments.empty())
    {
      r["payments"] = per_advertiser(report, row.payments);
    }
    if (row.revenue)
    {
      r["revenue"] = to_exact_string(*row.revenue);
    }
    if (!row.surpluses.empty())
    {
      r["surpluses"] = per_advertiser(report, row.surpluses);
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);

  if (report.range_min && report.range_max)
  {
    doc["revenue_range"] = {{"min", to_exact_string(*report.range_min)},
                            {"max", to_exact_string(*report.range_max)}};
  }

  auto facts = OrderedJson::object();
  for (auto const &f : report.facts)
  {
    if (auto const *b = std::get_if<bool>(&f.value))
    {
      facts[f.key] = *b;
    }
    else
    {
      facts[f.key] = fact_text(f.value, true);
    }
  }
  doc["facts"] = std::move(facts);

  if (report.trace)
  {
    doc["trace"] = split_lines(*report.trace);
  }
  if (!report.notes.empty())
  {
    doc["notes"] = report.notes;
  }
  return doc.dump(2) + "\n";
}

std::string render_csv(Report const &report)
{
  std::ostringstream os;
  auto line = [&](std::string const &record, std::string const &key, std::string const &value) {
    os << csv_field(record) << "," << csv_field(key) << "," << csv_field(value) << "\n";
  };
  line("record", "key", "value");
  line("meta", "command", report.command);
  if (report.error)
  {
    line("error", "message", *report.error);
    return os.str();
  }

  for (auto const &row : report.rows)
  {
    auto const prefix = row.mechanism + ".";
    if (row.winner)
    {
      line("row", prefix + "winner", std::to_string(index(*row.winner)));
    }
    auto vector = [&](std::string const &what, std::vector<Scalar> const &values) {
      for (std::size_t i = 0; i < values.size(); ++i)
      {
        line("row", prefix + what + "." + report.advertisers.at(i), to_exact_string(values[i]));
      }
    };
    vector("bid", row.bids);
    vector("payment", row.payments);
    if (row.revenue)
    {
      line("row", prefix + "revenue", to_exact_string(*row.revenue));
    }
    vector("surplus", row.surpluses);
  }
  if (report.range_min && report.range_max)
  {
    line("range", "min", to_exact_string(*report.range_min));
    line("range", "max", to_exact_string(*report.range_max));
  }
  for (auto const &f : report.facts)
  {
    line("fact", f.key, fact_text(f.value, true));
  }
  if (report.trace)
  {
    auto lines = split_lines(*report.trace);
    for (std::size_t k = 0; k < lines.size(); ++k)
    {
      line("trace", std::to_string(k + 1), lines[k]);
    }
  }
  for (std::size_t k = 0; k < report.notes.size(); ++k)
  {
    line("note", std::to_string(k + 1), report.notes[k]);
  }
  return os.str();
}

std::string pad(std::string text, std::size_t width)
{
  if (text.size() < width)
  {
    text.append(width - text.size(), ' ');
  }
  return text;
}

std::string render_table(Report const &report)
{
  std::ostringstream os;
  if (report.error)
  {
    os << "error: " << *report.error << "\n";
    return os.str();
  }

  for (auto const &row : report.rows)
  {
    os << "== " << row.mechanism << "\n";
    if (row.winner)
    {
      os << "winner: ad " << index(*row.winner) << " (";
      for (std::size_t k = 0; k < row.winner_members.size(); ++k)
      {
        os << (k ? ", " : "") << row.winner_members[k];
      }
      os << ")\n";
    }
    if (row.revenue)
    {
      os << "revenue: " << to_display_string(*row.revenue) << "\n";
    }

    std::vector<std::pair<std::string, std::vector<Scalar> const *>> columns;
    if (!row.bids.empty())
    {
      columns.emplace_back("bid", &row.bids);
    }
    if (!row.payments.empty())
    {
      columns.emplace_back("payment", &row.payments);
    }
    if (!row.surpluses.empty())
    {
      columns.emplace_back(row.payments.empty() && row.bids.empty() ? "utility" : "surplus", &row.surpluses);
    }
    if (columns.empty())
    {
      continue;
    }

    std::vector<std::vector<std::string>> cells;
    cells.push_back({"advertiser"});
    for (auto const &c : columns)
    {
      cells.back().push_back(c.first);
    }
    for (std::size_t i = 0; i < report.advertisers.size(); ++i)
    {
      cells.push_back({report.advertisers[i]});
      for (auto const &c : columns)
      {
        cells.back().push_back(to_display_string(c.second->at(i)));
      }
    }
    std::vector<std::size_t> widths(cells.front().size(), 0);
    for (auto const &r : cells)
    {
      for (std::size_t k = 0; k < r.size(); ++k)
      {
        widths[k] = std::max(widths[k], r[k].size());
      }
    }
    for (auto const &r : cells)
    {
      std::string text;
      for (std::size_t k = 0; k < r.size(); ++k)
      {
        text += pad(r[k], widths[k] + 2);
      }
      text.erase(text.find_last_not_of(' ') + 1);
      os << text << "\n";
    }
  }

  if (report.range_min && report.range_max)
  {
    os << "revenue range: [" << to_display_string(*report.range_min) << ", "
       << to_display_string(*report.range_max) << "]\n";
  }
  std::size_t key_width = 0;
  for (auto const &f : report.facts)
  {
    key_width = std::max(key_width, f.key.size());
  }
  for (auto const &f : report.facts)
  {
    os << pad(f.key + ":", key_width + 2) << fact_text(f.value, false) << "\n";
  }
  if (report.trace)
  {
    os << "trace:\n" << *report.trace;
  }
  for (auto const &note : report.notes)
  {
    os << "note: " << note << "\n";
  }
  return os.str();
}

}  // namespace

ReportFormat parse_report_format(std::string_view name)
{
  if (name == "table")
  {
    return ReportFormat::kTable;
  }
  if (name == "csv")
  {
    return ReportFormat::kCsv;
  }
  if (name == "json")
  {
    return ReportFormat::kJson;
  }
  throw Error("unknown format \"" + std::string(name) + "\" (expected table, csv or json)");
}

MechanismRow outcome_row(std::string mechanism, AuctionInstance const &instance, Outcome const &outcome,
                         BidProfile const *bids)
{
  MechanismRow row;
  row.mechanism = std::move(mechanism);
  row.winner    = outcome.winner;
  for (auto i : instance.ad(outcome.winner).members)
  {
    row.winner_members.push_back(instance.name(i));
  }
  if (bids != nullptr)
  {
    row.bids = bids->bids;
  }
  row.payments  = outcome.payments;
  row.revenue   = outcome.revenue;
  row.surpluses = outcome.surpluses;
  return row;
}

std::string render(Report const &report, ReportFormat format)
{
  switch (format)
  {
  case ReportFormat::kCsv:
    return render_csv(report);
  case ReportFormat::kJson:
    return render_json(report);
  case ReportFormat::kTable:
    break;
  }
  return render_table(report);
}

}  // namespace coop
