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

#include <doctest.h>

#include <random>

#include "liechord/rational.hpp"
#include "testutil.hpp"

using namespace liechord;

TEST_CASE("rationals stay canonical: lowest terms, positive denominator") {
  CHECK(format_rational(make_rational(-6, 8)) == "-3/4");
  CHECK(format_rational(make_rational(5, -10)) == "-1/2");
  CHECK(format_rational(Rational(9)) == "9");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(numerator(make_rational(-6, 8)) == -3);
  CHECK(denominator(make_rational(-6, 8)) == 4);
  CHECK(gcd(numerator(make_rational(84, 126)), denominator(make_rational(84, 126))) == 1);
}

TEST_CASE("parse accepts the canonical grammar and round-trips") {
  CHECK(parse_rational("3/4") == make_rational(3, 4));
  CHECK(parse_rational("-3/4") == make_rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("22/4") == make_rational(11, 2));
  for (const char* s : {"", "1/0", "1/-2", "x", "1.5", " 1", "1 ", "+3", "3/"})
    CHECK(testutil::thrown_code([&] { parse_rational(s); }) == ErrorCode::MalformedInput);
  CHECK(testutil::thrown_code([] { make_rational(1, 0); }) == ErrorCode::MalformedInput);
}

TEST_CASE("exact arithmetic identities hold on random values") {
  std::mt19937_64 rng(7);
  const auto pick = [&]() {
    const long num = static_cast<long>(rng() % 2001) - 1000;
    const long den = static_cast<long>(rng() % 999) + 1;
    return make_rational(num, den);
  };
  for (int round = 0; round < 200; ++round) {
    const Rational a = pick(), b = pick(), c = pick();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (c != 0) CHECK(a / c * c == a);
  }
  CHECK(make_rational(1, 3) * 3 == 1);
}
