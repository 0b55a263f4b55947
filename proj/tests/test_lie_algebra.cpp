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

#include <sstream>

#include "liechord/killing.hpp"
#include "testutil.hpp"

using namespace liechord;
using testutil::thrown_code;

TEST_CASE("validate_structure accepts the defining relations exactly") {
  CHECK(validate_structure(testutil::sl2_explicit()).empty());
  CHECK(validate_structure(testutil::abelian(4)).empty());
  CHECK(validate_structure(testutil::solvable2()).empty());
}

TEST_CASE("validate_structure reports violated triples and quadruples") {
  // mu[1][2][1] = mu[2][1][1] = 1 breaks antisymmetry at (1,2,1).
  const auto bad = StructureConstants::from_raw(
      2, {{0, 1, 0, Rational(1)}, {1, 0, 0, Rational(1)}});
  const ValidationReport report = validate_structure(bad);
  REQUIRE(report.antisymmetry.size() == 1);
  CHECK(report.antisymmetry[0] == std::array<int, 3>{1, 2, 1});

  // Antisymmetric but Jacobi fails: [x,y] = y, [y,z] = z leaves
  // [[x,y],z] + [[y,z],x] + [[z,x],y] = z.
  StructureConstants nj(3);
  nj.set_bracket(0, 1, 1, 1);
  nj.set_bracket(1, 2, 2, 1);
  const ValidationReport njr = validate_structure(nj);
  CHECK(njr.antisymmetry.empty());
  REQUIRE(njr.jacobi.size() == 1);
  CHECK(njr.jacobi[0] == std::array<int, 4>{1, 2, 3, 3});
}

TEST_CASE("raw constructors reject malformed input") {
  CHECK(thrown_code([] {
          StructureConstants::from_raw(2, {{0, 1, 5, Rational(1)}});
        }) == ErrorCode::MalformedInput);
  CHECK(thrown_code([] {
          StructureConstants::from_raw(
              2, {{0, 1, 0, Rational(1)}, {0, 1, 0, Rational(2)}});
        }) == ErrorCode::MalformedInput);
  CHECK(thrown_code([] { StructureConstants(0); }) == ErrorCode::MalformedInput);
  CHECK(thrown_code([] {
          StructureConstants sc(2);
          sc.set_bracket(0, 0, 1, 1);
        }) == ErrorCode::MalformedInput);
}

TEST_CASE("classical families: dimensions, validity, degenerate parameters") {
  CHECK(build_classical(Family::special_linear, 2).dim() == 3);
  CHECK(build_classical(Family::orthogonal, 4).dim() == 6);
  CHECK(build_classical(Family::symplectic, 4).dim() == 10);
  CHECK(build_classical(Family::special_linear, 4).dim() == 15);
  CHECK(build_classical(Family::orthogonal, 3).dim() == 3);

  for (const auto& sc :
       {build_classical(Family::special_linear, 2),
        build_classical(Family::special_linear, 3),
        build_classical(Family::orthogonal, 3),
        build_classical(Family::orthogonal, 4),
        build_classical(Family::orthogonal, 5),
        build_classical(Family::symplectic, 4)})
    CHECK(validate_structure(sc).empty());

  CHECK(thrown_code([] { build_classical(Family::orthogonal, 2); }) ==
        ErrorCode::NotSemisimpleFamily);
  CHECK(thrown_code([] { build_classical(Family::special_linear, 1); }) ==
        ErrorCode::NotSemisimpleFamily);
  CHECK(thrown_code([] { build_classical(Family::symplectic, 3); }) ==
        ErrorCode::NotSemisimpleFamily);
  CHECK(parse_family("sl") == Family::special_linear);
  CHECK(thrown_code([] { parse_family("su"); }) == ErrorCode::MalformedInput);
}

TEST_CASE("sl(2) comes out in the (h, e, f) basis") {
  CHECK(build_classical(Family::special_linear, 2) == testutil::sl2_explicit());
}

TEST_CASE("direct sums are block constructions") {
  const auto a = build_classical(Family::special_linear, 2);
  const auto b = build_classical(Family::special_linear, 3);
  const auto sum = direct_sum(a, b);
  CHECK(sum.dim() == a.dim() + b.dim());
  CHECK(validate_structure(sum).empty());
  for (const auto& [key, v] : sum.entries())
    CHECK(((key.i < a.dim()) == (key.j < a.dim())));  // no cross brackets

  const RationalMatrix ba = killing_matrix(a), bb = killing_matrix(b);
  const RationalMatrix bs = killing_matrix(sum);
  for (int i = 0; i < sum.dim(); ++i)
    for (int j = 0; j < sum.dim(); ++j) {
      if (i < a.dim() && j < a.dim())
        CHECK(bs(i, j) == ba(i, j));
      else if (i >= a.dim() && j >= a.dim())
        CHECK(bs(i, j) == bb(i - a.dim(), j - a.dim()));
      else
        CHECK(bs(i, j) == 0);
    }
}

TEST_CASE("basis change: identity, scaling, inverse, composition") {
  const auto sc = testutil::sl2_explicit();
  const int n = sc.dim();

  CHECK(change_basis(sc, BasisChange{RationalMatrix::identity(n)}) == sc);

  // T = c * identity multiplies every mu entry by c.
  RationalMatrix scaled = RationalMatrix::identity(n);
  for (int i = 0; i < n; ++i) scaled(i, i) = 3;
  const auto sc3 = change_basis(sc, BasisChange{scaled});
  for (const auto& [key, v] : sc.entries())
    CHECK(sc3.mu(key.i, key.j, key.k) == 3 * v);

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const BasisChange g = random_invertible(n, seed);
    const BasisChange ginv{invert_exact(g.T)};
    CHECK(change_basis(change_basis(sc, g), ginv) == sc);

    const BasisChange h = random_invertible(n, seed + 100);
    const BasisChange gh{g.T * h.T};
    CHECK(change_basis(sc, gh) == change_basis(change_basis(sc, g), h));
  }

  CHECK(thrown_code([&] { change_basis(sc, BasisChange{RationalMatrix(n, n)}); }) ==
        ErrorCode::SingularMatrix);
  CHECK(thrown_code([&] { change_basis(sc, BasisChange{RationalMatrix::identity(2)}); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("random_invertible is deterministic with unit determinant") {
  const BasisChange a = random_invertible(5, 42);
  const BasisChange b = random_invertible(5, 42);
  CHECK(a.T == b.T);
  CHECK(random_invertible(5, 43).T == random_invertible(5, 43).T);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Rational det = det_exact(random_invertible(3, seed).T);
    CHECK((det == 1 || det == -1));
  }
}

TEST_CASE("algebra JSON round-trips and the loader rejects bad files") {
  const auto sc = build_classical(Family::orthogonal, 4);
  std::istringstream in(algebra_to_json(sc));
  CHECK(load_algebra(in) == sc);

  const auto expect_reject = [](const std::string& text) {
    std::istringstream bad(text);
    CHECK(testutil::thrown_code([&] { load_algebra(bad); }) ==
          ErrorCode::MalformedInput);
  };
  expect_reject("{\"n\": 2, \"mu\": [[2, 1, 1, \"1\"]]}");   // i >= j
  expect_reject("{\"n\": 2, \"mu\": [[1, 1, 1, \"1\"]]}");   // i == j
  expect_reject("{\"n\": 2, \"mu\": [[1, 2, 3, \"1\"]]}");   // out of range
  expect_reject("{\"n\": 2, \"mu\": [[1, 2, 1, \"1\"], [1, 2, 1, \"2\"]]}");
  expect_reject("{\"n\": 2, \"mu\": [[1, 2, 1, \"1/0\"]]}");
  expect_reject("{\"n\": 2}");
  expect_reject("not json");
}
