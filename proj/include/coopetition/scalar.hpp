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

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coop {

/// Exact rational number. Every money amount, bid, CTR and fraction in the
/// library is a Scalar; nothing is ever rounded. Expression templates are off
/// so `auto` always holds a value.
using Scalar = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

class ScalarFormatError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Parses an exact number. Accepted forms:
 *
 *   "3", "-2", "2.9", ".5", "1/3", "-7/4"
 *
 * Decimal literals are read exactly ("2.9" is 29/10). Throws
 * ScalarFormatError on anything else, including a zero denominator.
 */
Scalar parse_scalar(std::string_view text);

/// "29/10", "3", "-1/3".
std::string to_fraction_string(Scalar const &value);

/// The terminating decimal expansion ("2.9", "-0.125"), or nullopt when the
/// reduced denominator has a prime factor other than 2 or 5.
std::optional<std::string> to_decimal_string(Scalar const &value);

/// Decimal when it terminates, fraction otherwise. Always re-parseable by
/// parse_scalar to the same value.
std::string to_exact_string(Scalar const &value);

/// Human oriented: like to_exact_string but non-terminating values also carry
/// a rounded decimal, e.g. "1/3 (~0.333333)".
std::string to_display_string(Scalar const &value);

}  // namespace coop
