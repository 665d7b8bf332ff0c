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

#include "coopetition/cli.hpp"

#include "coopetition/cef_polytope.hpp"
#include "coopetition/egalitarian.hpp"
#include "coopetition/external_contracts.hpp"
#include "coopetition/instance_io.hpp"
#include "coopetition/mechanisms.hpp"
#include "coopetition/oracle.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace coop {
namespace {

Report start(std::string command, AuctionInstance const &instance)
{
  Report report;
  report.command = std::move(command);
  report.advertisers.assign(instance.names().begin(), instance.names().end());
  return report;
}

MechanismRow vcg_row(AuctionInstance const &instance)
{
  auto result = vcg(instance);
  return outcome_row("vcg", instance, make_outcome(instance, result.winner, result.payments));
}

void note_ties(Report &report, AuctionInstance const &instance)
{
  auto tied = welfare_maximizing_ads(instance);
  if (tied.size() < 2)
  {
    return;
  }
  std::string list;
  for (auto j : tied)
  {
    list += (list.empty() ? "" : ", ") + std::to_string(index(j));
  }
  report.notes.push_back("ads " + list + " tie on total value; the lowest id wins");
}

std::string members_text(AuctionInstance const &instance, std::vector<AdvertiserId> const &ids)
{
  std::string text;
  for (auto i : ids)
  {
    text += (text.empty() ? "" : " + ") + instance.name(i);
  }
  return text;
}

std::string point_text(CefPolytope const &polytope, std::vector<Scalar> const &point)
{
  std::string text;
  for (std::size_t k = 0; k < point.size(); ++k)
  {
    text += (k ? " " : "") + polytope.instance().name(polytope.members()[k]) + "=" + to_exact_string(point[k]);
  }
  return text;
}

void add_range(Report &report, CefPolytope const &polytope)
{
  auto range       = revenue_range(polytope);
  report.range_min = range.min;
  report.range_max = range.max;
}

std::vector<Scalar> parse_list(std::string const &text)
{
  std::vector<Scalar> out;
  std::stringstream   is(text);
  for (std::string item; std::getline(is, item, ',');)
  {
    out.push_back(parse_scalar(item));
  }
  return out;
}

}  // namespace

Report cmd_solve(std::string const &path, std::string const &mechanism, bool trace)
{
  auto const instance = parse_instance(read_text(path));
  auto       report   = start("solve", instance);
  if (mechanism == "vcg")
  {
    report.rows.push_back(vcg_row(instance));
    note_ties(report, instance);
  }
  else if (mechanism == "egalitarian")
  {
    auto result = egalitarian_solve(instance);
    report.rows.push_back(outcome_row("egalitarian", instance, result.outcome, &result.bids));
    report.add("rounds", Scalar(static_cast<long long>(result.trace.rounds.size())));
    if (trace)
    {
      report.trace = result.trace.to_string(instance);
    }
  }
  else if (mechanism == "bounds")
  {
    CefPolytope const polytope(instance);
    report.add("lower_bound", revenue_lower_bound(instance));
    add_range(report, polytope);
  }
  else
  {
    throw Error("unknown mechanism \"" + mechanism + "\" (expected egalitarian, vcg or bounds)");
  }
  return report;
}

Report cmd_verify(std::string const &path, std::string const &bids_path)
{
  auto const instance = parse_instance(read_text(path));
  auto const bids     = parse_bids(instance, read_text(bids_path));
  auto       report   = start("verify", instance);
  CefPolytope const polytope(instance);

  report.rows.push_back(outcome_row("first-price", instance, first_price_clear(instance, bids), &bids));

  report.add("is_ir", is_ir(instance, bids));
  if (auto who = first_ir_violation(instance, bids))
  {
    report.add("ir_violation", instance.name(*who) + " bids " + to_exact_string(bids[*who]) +
                                   " outside [0, " + to_exact_string(instance.value(*who)) + "]");
  }

  report.add("is_cef", is_cef(polytope, bids));
  if (auto c = first_cef_violation(polytope, bids))
  {
    Scalar sum = 0;
    for (auto i : c->bidders)
    {
      sum += bids[i];
    }
    report.add("cef_violation", "against ad " + std::to_string(index(c->competitor)) + ": " +
                                    members_text(instance, c->bidders) + " bid " + to_exact_string(sum) +
                                    ", need " + to_exact_string(c->threshold));
  }

  auto check = is_equilibrium(polytope, bids);
  report.add("is_equilibrium", check.holds);
  if (check.certificate)
  {
    for (auto const &w : *check.certificate)
    {
      report.add("witness." + instance.name(w.bidder),
                 w.tight_ad ? "ad " + std::to_string(index(*w.tight_ad)) + " ties the winner"
                            : std::string("bids zero"));
    }
  }
  else
  {
    report.add("reason", check.reason);
  }

  for (std::size_t i = 0; i < instance.num_advertisers(); ++i)
  {
    AdvertiserId id{i};
    if (!instance.contains(polytope.winner(), id) && bids[id] != instance.value(id))
    {
      report.notes.push_back("the equilibrium check reads losing bids as values; " + instance.name(id) +
                             "'s bid was ignored");
    }
  }
  return report;
}

Report cmd_compare(std::string const &path, bool trace)
{
  auto const instance = parse_instance(read_text(path));
  auto       report   = start("compare", instance);
  CefPolytope const polytope(instance);

  auto const vcg_result = vcg(instance);
  auto const egal       = egalitarian_solve(instance);
  auto const lower      = revenue_lower_bound(instance);
  auto const range      = revenue_range(polytope);

  report.rows.push_back(outcome_row("vcg", instance, make_outcome(instance, vcg_result.winner, vcg_result.payments)));
  report.rows.push_back(outcome_row("egalitarian", instance, egal.outcome, &egal.bids));
  report.range_min = range.min;
  report.range_max = range.max;

  bool dominates = true;
  for (auto i : polytope.members())
  {
    dominates = dominates && egal.bids[i] >= vcg_result.payments[index(i)];
  }
  report.add("vcg_revenue", vcg_result.revenue);
  report.add("egalitarian_revenue", egal.outcome.revenue);
  report.add("lower_bound", lower);
  report.add("egalitarian_bids_dominate_vcg_payments", dominates);
  report.add("egalitarian_revenue_at_least_vcg", egal.outcome.revenue >= vcg_result.revenue);
  report.add("egalitarian_revenue_at_least_lower_bound", egal.outcome.revenue >= lower);
  report.add("range_contains_egalitarian", range.min <= egal.outcome.revenue && egal.outcome.revenue <= range.max);
  note_ties(report, instance);
  if (trace)
  {
    report.trace = egal.trace.to_string(instance);
  }
  return report;
}

Report cmd_polytope(std::string const &path, std::string const &weights)
{
  auto const instance = parse_instance(read_text(path));
  auto       report   = start("polytope", instance);
  CefPolytope const polytope(instance);

  auto w = weights.empty() ? std::vector<Scalar>(polytope.members().size(), Scalar(1)) : parse_list(weights);
  auto bids = sample_pareto_equilibrium(polytope, w);
  report.rows.push_back(outcome_row("pareto-sample", instance, first_price_clear(instance, bids), &bids));
  report.rows.back().winner = polytope.winner();

  auto const payments = vcg(instance).payments;
  bool       dominates = true;
  for (auto i : polytope.members())
  {
    dominates = dominates && bids[i] >= payments[index(i)];
  }
  report.add("is_equilibrium", is_equilibrium(polytope, bids).holds);
  report.add("dominates_vcg_payments", dominates);
  add_range(report, polytope);

  auto vertices = enumerate_vertices(polytope);
  report.add("vertices", Scalar(static_cast<long long>(vertices.size())));
  for (std::size_t k = 0; k < vertices.size(); ++k)
  {
    auto expanded = polytope.expand(vertices[k]);
    report.add("vertex." + std::to_string(k + 1),
               point_text(polytope, vertices[k]) +
                   (is_equilibrium(polytope, expanded).holds ? " (equilibrium)" : ""));
  }
  return report;
}

Report cmd_oracle(std::string const &path, Scalar const &epsilon, std::uint64_t budget)
{
  auto const instance = parse_instance(read_text(path));
  auto       report   = start("oracle", instance);
  GridSpec const grid{epsilon, budget};

  auto const equilibria = enumerate_equilibria_grid(instance, grid);
  auto const lexmax     = lexmax_surplus_grid(instance, grid);
  auto const egal       = egalitarian_solve(instance);

  report.rows.push_back(outcome_row("egalitarian", instance, egal.outcome, &egal.bids));
  report.rows.push_back(outcome_row("grid-lexmax", instance,
                                    make_outcome(instance, egal.outcome.winner, lexmax.bids), &lexmax));

  bool within = true;
  for (std::size_t i = 0; i < instance.num_advertisers(); ++i)
  {
    Scalar diff = egal.bids.bids[i] - lexmax.bids[i];
    within      = within && (diff < 0 ? Scalar(-diff) : diff) <= epsilon;
  }
  auto const exact = vcg(instance);
  auto const brute = vcg_bruteforce(instance);

  report.add("epsilon", epsilon);
  report.add("grid_points", Scalar(static_cast<long long>(grid_size(instance, grid))));
  report.add("grid_equilibria", Scalar(static_cast<long long>(equilibria.size())));
  report.add("egalitarian_within_epsilon", within);
  report.add("egalitarian_lexmax_on_grid", verify_egalitarian(instance, egal.bids, grid));
  report.add("vcg_bruteforce_matches", brute == exact);
  return report;
}

Report cmd_contracts(std::string const &path, std::optional<std::string> const &subsidy_grid,
                     std::optional<std::string> const &responder)
{
  auto const  doc      = parse_owned_auction(read_text(path));
  auto const &owned    = doc.auction;
  auto const &instance = owned.instance();
  auto        report   = start("contracts", instance);

  auto const out = evaluate_contracts(owned, doc.contracts);
  MechanismRow row;
  row.mechanism = "position-vcg";
  row.surpluses = out.utilities;
  report.rows.push_back(std::move(row));

  for (auto const &a : out.assignment)
  {
    report.add("slot." + std::to_string(a.slot + 1),
               "ad " + std::to_string(index(a.ad)) + " (owner " + instance.name(owned.owner(a.ad)) +
                   ") price " + to_exact_string(a.price) + " ctr " + to_exact_string(owned.slots()[a.slot]));
  }
  for (std::size_t j = 0; j < out.effective_bids.size(); ++j)
  {
    report.add("effective_bid.ad" + std::to_string(j), out.effective_bids[j]);
  }
  for (std::size_t k = 0; k < out.transfers.size(); ++k)
  {
    report.add("transfer." + std::to_string(k + 1), out.transfers[k]);
  }

  if (responder && !subsidy_grid)
  {
    throw Error("--responder needs --subsidy-grid");
  }
  if (!subsidy_grid)
  {
    return report;
  }

  auto colon = subsidy_grid->find(':');
  if (colon == std::string::npos)
  {
    throw Error("--subsidy-grid expects STEP:MAX, got \"" + *subsidy_grid + "\"");
  }
  SubsidyGrid const grid{parse_scalar(subsidy_grid->substr(0, colon)), parse_scalar(subsidy_grid->substr(colon + 1))};

  std::vector<AdvertiserId> responders;
  if (responder)
  {
    auto id = instance.find(*responder);
    if (!id)
    {
      throw Error("unknown advertiser \"" + *responder + "\"");
    }
    responders.push_back(*id);
  }
  else
  {
    for (std::size_t i = 0; i < instance.num_advertisers(); ++i)
    {
      if (!supported_ads(owned, AdvertiserId{i}).empty())
      {
        responders.push_back(AdvertiserId{i});
      }
    }
  }

  for (auto r : responders)
  {
    auto const &name = instance.name(r);
    auto        br   = best_response_contract(owned, r, doc.contracts, grid);
    report.add(name + ".zero_subsidy_utility", br.zero_subsidy_utility);
    report.add(name + ".best_utility", br.utility);
    for (auto j : supported_ads(owned, r))
    {
      Scalar s = 0;
      for (auto const &c : br.contracts.contracts)
      {
        if (c.ad == j)
        {
          s = c.subsidy;
        }
      }
      report.add(name + ".best_subsidy.ad" + std::to_string(index(j)), s);
    }
    report.add(name + ".subsidy_helps", br.utility > br.zero_subsidy_utility);
  }
  return report;
}

int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Coopetitive ad auction laboratory", "coop"};
  std::string format = "table";
  bool        trace  = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_flag("--trace", trace, "Include the egalitarian lowering log");
  app.require_subcommand(1);

  std::string path;
  auto       *solve = app.add_subcommand("solve", "Run one mechanism")->fallthrough();
  std::string mechanism = "egalitarian";
  solve->add_option("file", path, "Instance file, - for stdin")->required();
  solve->add_option("--mechanism", mechanism, "egalitarian, vcg or bounds")
      ->check(CLI::IsMember({"egalitarian", "vcg", "bounds"}));

  auto       *verify = app.add_subcommand("verify", "Check a bid profile")->fallthrough();
  std::string bids_path;
  verify->add_option("file", path, "Instance file")->required();
  verify->add_option("bids", bids_path, "Bid file")->required();

  auto *compare = app.add_subcommand("compare", "Compare mechanisms and bounds")->fallthrough();
  compare->add_option("file", path, "Instance file")->required();

  auto       *polytope = app.add_subcommand("polytope", "Sample the equilibrium frontier")->fallthrough();
  std::string weights;
  polytope->add_option("file", path, "Instance file")->required();
  polytope->add_option("--weights", weights, "Comma separated positive weights, one per winning member");

  auto         *oracle = app.add_subcommand("oracle", "Grid cross-check")->fallthrough();
  std::string   epsilon_text = "1";
  std::uint64_t budget       = GridSpec{}.budget;
  oracle->add_option("file", path, "Instance file")->required();
  oracle->add_option("--epsilon", epsilon_text, "Grid resolution");
  oracle->add_option("--budget", budget, "Maximum number of grid points");

  auto       *contracts = app.add_subcommand("contracts", "External contracts baseline")->fallthrough();
  std::string grid_text;
  std::string responder;
  contracts->add_option("file", path, "Owned-auction file")->required();
  contracts->add_option("--subsidy-grid", grid_text, "STEP:MAX");
  contracts->add_option("--responder", responder, "Advertiser to best-respond");

  Report report;
  try
  {
    std::reverse(args.begin(), args.end());
    app.parse(args);

    if (solve->parsed())
    {
      report = cmd_solve(path, mechanism, trace);
    }
    else if (verify->parsed())
    {
      report = cmd_verify(path, bids_path);
    }
    else if (compare->parsed())
    {
      report = cmd_compare(path, trace);
    }
    else if (polytope->parsed())
    {
      report = cmd_polytope(path, weights);
    }
    else if (oracle->parsed())
    {
      report = cmd_oracle(path, parse_scalar(epsilon_text), budget);
    }
    else
    {
      report = cmd_contracts(path, grid_text.empty() ? std::nullopt : std::optional(grid_text),
                             responder.empty() ? std::nullopt : std::optional(responder));
    }
  }
  catch (CLI::CallForHelp const &e)
  {
    return app.exit(e, out, err);
  }
  catch (CLI::CallForAllHelp const &e)
  {
    return app.exit(e, out, err);
  }
  catch (CLI::ParseError const &e)
  {
    report       = Report{};
    report.error = e.what();
  }
  catch (std::exception const &e)
  {
    report       = Report{};
    report.error = e.what();
  }

  for (auto *sub : app.get_subcommands())
  {
    report.command = sub->get_name();
  }
  auto const chosen = format == "csv" ? ReportFormat::kCsv : format == "json" ? ReportFormat::kJson : ReportFormat::kTable;
  out << render(report, chosen);
  return report.error ? 1 : 0;
}

}  // namespace coop
