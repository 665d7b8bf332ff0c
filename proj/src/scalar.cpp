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

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

namespace coop {
namespace {


bool all_digits(std::string_view s)
{
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

[[noreturn]] void fail(std::string_view text, std::string_view why)
{
  throw ScalarFormatError("invalid number \"" + std::string(text) + "\": " + std::string(why));
}

// Leading zeros are stripped: the string constructor reads "0625" as octal.
Integer parse_integer(std::string_view digits)
{
  auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos)
  {
    return Integer(0);
  }
  return Integer(std::string(digits.substr(first)));
}

Integer pow10(std::size_t exponent)
{
  Integer r = 1;
  for (std::size_t i = 0; i < exponent; ++i)
  {
    r *= 10;
  }
  return r;
}

}  // namespace

Scalar parse_scalar(std::string_view text)
{
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())))
  {
    body.remove_prefix(1);
  }
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
  {
    body.remove_suffix(1);
  }

  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
  {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty())
  {
    fail(text, "empty");
  }

  Scalar result;
  if (auto slash = body.find('/'); slash != std::string_view::npos)
  {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den))
    {
      fail(text, "expected <digits>/<digits>");
    }
    Integer d = parse_integer(den);
    if (d == 0)
    {
      fail(text, "zero denominator");
    }
    result = Scalar(parse_integer(num), d);
  }
  else
  {
    auto dot      = body.find('.');
    auto whole    = body.substr(0, dot);
    auto fraction = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if ((whole.empty() && fraction.empty()) || !all_digits(whole) || !all_digits(fraction))
    {
      fail(text, "expected a decimal literal");
    }
    Integer numerator = whole.empty() ? Integer(0) : parse_integer(whole);
    numerator *= pow10(fraction.size());
    if (!fraction.empty())
    {
      numerator += parse_integer(fraction);
    }
    result = Scalar(numerator, pow10(fraction.size()));
  }
  return negative ? Scalar(-result) : result;
}

std::string to_fraction_string(Scalar const &value)
{
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1)
  {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

std::optional<std::string> to_decimal_string(Scalar const &value)
{
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);

  // den = 2^a 5^b is required for a finite expansion; the number of digits
  // needed is max(a, b).
  Integer     rest   = den;
  std::size_t twos   = 0;
  std::size_t fives  = 0;
  while (rest % 2 == 0)
  {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0)
  {
    rest /= 5;
    ++fives;
  }
  if (rest != 1)
  {
    return std::nullopt;
  }

  std::size_t const digits = std::max(twos, fives);
  bool const        negative = num < 0;
  Integer           scaled   = (negative ? Integer(-num) : num) * pow10(digits) / den;

  std::string s = scaled.str();
  if (digits > 0)
  {
    if (s.size() <= digits)
    {
      s.insert(0, digits + 1 - s.size(), '0');
    }
    s.insert(s.size() - digits, ".");
  }
  if (negative)
  {
    s.insert(0, "-");
  }
  return s;
}

std::string to_exact_string(Scalar const &value)
{
  if (auto d = to_decimal_string(value))
  {
    return *d;
  }
  return to_fraction_string(value);
}

std::string to_display_string(Scalar const &value)
{
  if (auto d = to_decimal_string(value))
  {
    return *d;
  }
  std::ostringstream os;
  os << to_fraction_string(value) << " (~" << std::fixed << std::setprecision(6)
     << value.convert_to<double>() << ")";
  return os.str();
}

}  // namespace coop
