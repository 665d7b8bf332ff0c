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

#include "coopetition/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coop {

/// Paths may be "-" for stdin. Every command throws on bad input; run_cli
/// turns that into an error report.

/// `mechanism` is "egalitarian", "vcg" or "bounds".
Report cmd_solve(std::string const &path, std::string const &mechanism, bool trace = false);

Report cmd_verify(std::string const &path, std::string const &bids_path);

Report cmd_compare(std::string const &path, bool trace = false);

/// `weights` is a comma separated list, one per winning-ad member in id
/// order; empty means all ones.
Report cmd_polytope(std::string const &path, std::string const &weights);

Report cmd_oracle(std::string const &path, Scalar const &epsilon, std::uint64_t budget);

/// `subsidy_grid` is "STEP:MAX". Without it only the contracts in the file
/// are evaluated. Without `responder` every advertiser that supports some
/// ad gets a best response.
Report cmd_contracts(std::string const &path, std::optional<std::string> const &subsidy_grid,
                     std::optional<std::string> const &responder);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns nonzero exactly when an error report was written.
int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err);

}  // namespace coop
