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

#include "liechord/killing.hpp"
#include "testutil.hpp"

using namespace liechord;

namespace {

// Direct double-contraction loop, independent of killing_matrix's sparse
// iteration order.
RationalMatrix killing_oracle(const StructureConstants& sc) {
  const int n = sc.dim();
  RationalMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) b(i, j) += sc.mu(i, a, c) * sc.mu(j, c, a);
  return b;
}

}  // namespace

TEST_CASE("sl(2) trace form in the (h, e, f) basis") {
  const auto sc = testutil::sl2_explicit();
  const RationalMatrix b = killing_matrix(sc);
  CHECK(b == killing_oracle(sc));
  CHECK(b(0, 0) == 8);
  CHECK(b(1, 2) == 4);
  CHECK(b(2, 1) == 4);
  CHECK(b(0, 1) == 0);
  CHECK(b(0, 2) == 0);
  CHECK(b(1, 1) == 0);
  CHECK(b(2, 2) == 0);
  CHECK(det_exact(b) == -128);

  const KillingData kd = casimir_theta(sc);
  CHECK(kd.theta(0, 0) == make_rational(1, 8));
  CHECK(kd.theta(1, 2) == make_rational(1, 4));
  CHECK(kd.theta(2, 1) == make_rational(1, 4));
  CHECK(kd.theta(0, 1) == 0);
  CHECK(kd.B * kd.theta == RationalMatrix::identity(3));
  CHECK(kd.theta * kd.B == RationalMatrix::identity(3));
}

TEST_CASE("invalid structure constants are rejected up front") {
  const auto bad = StructureConstants::from_raw(
      2, {{0, 1, 0, Rational(1)}, {1, 0, 0, Rational(1)}});
  CHECK(testutil::thrown_code([&] { killing_matrix(bad); }) ==
        ErrorCode::MalformedInput);
  CHECK(testutil::thrown_code([&] { direct_sum(bad, testutil::sl2_explicit()); }) ==
        ErrorCode::MalformedInput);
  CHECK(testutil::thrown_code([&] { direct_sum(testutil::sl2_explicit(), bad); }) ==
        ErrorCode::MalformedInput);
}

TEST_CASE("degenerate cases are rejected as not semisimple") {
  CHECK(killing_matrix(testutil::abelian(3)).is_zero());
  CHECK(!is_semisimple(testutil::abelian(3)));
  CHECK(testutil::thrown_code([] { casimir_theta(testutil::abelian(3)); }) ==
        ErrorCode::NotSemisimple);

  const RationalMatrix b = killing_matrix(testutil::solvable2());
  CHECK(b(0, 0) == 1);
  CHECK(b(0, 1) == 0);
  CHECK(b(1, 0) == 0);
  CHECK(b(1, 1) == 0);
  CHECK(!is_semisimple(testutil::solvable2()));
}

TEST_CASE("trace form over the classical corpus: symmetric, invertible, exact") {
  for (const auto& sc :
       {build_classical(Family::special_linear, 2),
        build_classical(Family::special_linear, 3),
        build_classical(Family::orthogonal, 4),
        build_classical(Family::orthogonal, 5),
        build_classical(Family::symplectic, 4)}) {
    const KillingData kd = casimir_theta(sc);
    CHECK(kd.B == killing_oracle(sc));
    CHECK(kd.B.is_symmetric());
    CHECK(kd.theta.is_symmetric());
    CHECK(kd.B * kd.theta == RationalMatrix::identity(sc.dim()));
    CHECK(is_semisimple(sc));
  }
}

TEST_CASE("the trace form is ad-invariant") {
  const auto sc = build_classical(Family::special_linear, 3);
  const RationalMatrix b = killing_matrix(sc);
  const int n = sc.dim();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational sum = 0;
        for (int x = 0; x < n; ++x)
          sum += sc.mu(k, i, x) * b(x, j) + sc.mu(k, j, x) * b(i, x);
        CHECK(sum == 0);
      }
}

TEST_CASE("basis change acts on the trace form by congruence") {
  for (const auto& sc : {testutil::sl2_explicit(),
                         build_classical(Family::orthogonal, 4)}) {
    for (std::uint64_t seed : {5u, 6u}) {
      const BasisChange g = random_invertible(sc.dim(), seed);
      const RationalMatrix lhs = killing_matrix(change_basis(sc, g));
      const RationalMatrix rhs = g.T.transposed() * killing_matrix(sc) * g.T;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("direct sums have block-diagonal trace forms") {
  const auto a = testutil::sl2_explicit();
  const auto sum = direct_sum(a, a);
  const RationalMatrix b = killing_matrix(sum);
  const RationalMatrix ba = killing_matrix(a);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const bool same_block = (i < 3) == (j < 3);
      CHECK(b(i, j) == (same_block ? ba(i % 3, j % 3) : Rational(0)));
    }
  CHECK(is_semisimple(sum));
}
