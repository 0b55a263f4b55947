// Copyright 2026 The liechord Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIECHORD_RATIONAL_HPP
#define LIECHORD_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "liechord/error.hpp"

namespace liechord {

// Exact arithmetic scalars. GMP keeps rationals canonical: lowest terms,
// positive denominator, zero as 0/1.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Construct num/den with den == 0 rejected up front (GMP would raise SIGFPE).
// Always build rationals from possibly-signed denominators through here: the
// mpq (long, long) constructor silently misreads negative denominators.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw Error(ErrorCode::MalformedInput, "zero denominator");
  return Rational(std::move(num), std::move(den));
}

// Canonical text form: "p/q" in lowest terms with q > 0, or just "p" when
// q == 1; the sign sits on the numerator.
inline std::string format_rational(const Rational& r) { return r.str(); }

// Accepts exactly the canonical grammar: [-]digits[/digits], denominator > 0.
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw Error(ErrorCode::MalformedInput,
                "bad rational '" + std::string(text) + "'");
  };
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  const auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num_digits = num;
  if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
  if (!all_digits(num_digits) || !all_digits(den)) return fail();
  BigInt d{std::string(den)};
  if (d == 0) return fail();
  return Rational(BigInt{std::string(num)}, std::move(d));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace liechord

#endif  // LIECHORD_RATIONAL_HPP
