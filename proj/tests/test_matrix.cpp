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

#include "liechord/structure_constants.hpp"
#include "testutil.hpp"

using namespace liechord;

namespace {

RationalMatrix mat2(int a, int b, int c, int d) {
  RationalMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

// Cofactor-expansion determinant, the independent small-matrix oracle.
Rational det_cofactor(const RationalMatrix& m) {
  const int n = m.rows();
  if (n == 1) return m(0, 0);
  Rational det = 0;
  int sign = 1;
  for (int c = 0; c < n; ++c) {
    RationalMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = 0, jj = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    det += sign * m(0, c) * det_cofactor(minor);
    sign = -sign;
  }
  return det;
}

RationalMatrix random_int_matrix(int n, std::mt19937_64& rng) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<int>(rng() % 11) - 5;
  return m;
}

}  // namespace

TEST_CASE("determinant examples") {
  CHECK(det_exact(RationalMatrix::identity(3)) == 1);
  const RationalMatrix anti = mat2(0, 4, 4, 0);
  CHECK(det_exact(anti) == det_cofactor(anti));
  CHECK(det_exact(anti) == -16);
  CHECK(det_exact(mat2(1, 2, 2, 4)) == 0);
  RationalMatrix rect(2, 3);
  CHECK(testutil::thrown_code([&] { det_exact(rect); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("inverse examples") {
  CHECK(invert_exact(RationalMatrix::identity(4)) == RationalMatrix::identity(4));
  const RationalMatrix anti = mat2(0, 4, 4, 0);
  const RationalMatrix inv = invert_exact(anti);
  // 2x2 cofactor formula: inverse = adj / det.
  const Rational det = det_cofactor(anti);
  RationalMatrix expect(2, 2);
  expect(0, 0) = anti(1, 1) / det;
  expect(0, 1) = -anti(0, 1) / det;
  expect(1, 0) = -anti(1, 0) / det;
  expect(1, 1) = anti(0, 0) / det;
  CHECK(inv == expect);
  CHECK(inv(0, 1) == make_rational(1, 4));
  CHECK(testutil::thrown_code([&] { invert_exact(mat2(1, 2, 2, 4)); }) ==
        ErrorCode::SingularMatrix);
  RationalMatrix rect(3, 2);
  CHECK(testutil::thrown_code([&] { invert_exact(rect); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("Bareiss elimination agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const RationalMatrix m = random_int_matrix(n, rng);
    CHECK(det_exact(m) == det_cofactor(m));
  }
}

TEST_CASE("exact inverse times the matrix is the identity, no tolerance") {
  std::mt19937_64 rng(13);
  int tested = 0;
  while (tested < 25) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const RationalMatrix m = random_int_matrix(n, rng);
    if (det_exact(m) == 0) continue;
    ++tested;
    CHECK(invert_exact(m) * m == RationalMatrix::identity(n));
    CHECK(m * invert_exact(m) == RationalMatrix::identity(n));
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 30; ++round) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const RationalMatrix a = random_int_matrix(n, rng);
    const RationalMatrix b = random_int_matrix(n, rng);
    CHECK(det_exact(a * b) == det_exact(a) * det_exact(b));
  }
}
