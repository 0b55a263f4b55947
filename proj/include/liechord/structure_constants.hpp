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

#ifndef LIECHORD_STRUCTURE_CONSTANTS_HPP
#define LIECHORD_STRUCTURE_CONSTANTS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "liechord/rational_matrix.hpp"

namespace liechord {

// Index triple of one tensor entry mu[i][j][k], 0-based. Lexicographic order
// gives every iteration over the tensor a fixed, reproducible order.
struct MuKey {
  int i, j, k;
  auto operator<=>(const MuKey&) const = default;
};

// The bracket tensor of an n-dimensional algebra: [v_i, v_j] = sum_k
// mu[i][j][k] v_k, stored sparsely. set_bracket writes both orientations
// (i,j,k) and (j,i,k) so antisymmetry is structural for algebras built
// through it, and so consumers can iterate all nonzero entries directly.
// from_raw bypasses that pairing; it exists so validate_structure can be run
// against inputs that genuinely violate the relations.
class StructureConstants {
 public:
  explicit StructureConstants(int n);

  static StructureConstants from_raw(
      int n, const std::vector<std::tuple<int, int, int, Rational>>& entries);

  int dim() const { return n_; }

  // Sets [v_i, v_j] component k to v (and the (j,i,k) component to -v).
  // Requires i != j unless v == 0; indices 0-based.
  void set_bracket(int i, int j, int k, const Rational& v);

  // mu[i][j][k]; zero when absent.
  const Rational& mu(int i, int j, int k) const;

  // All stored nonzero entries in lexicographic key order.
  const std::map<MuKey, Rational>& entries() const { return mu_; }

  bool operator==(const StructureConstants&) const = default;

 private:
  void check_index(int v) const;

  int n_;
  std::map<MuKey, Rational> mu_;
};

struct ValidationReport {
  // 1-based index triples (i,j,k) where mu[i][j][k] != -mu[j][i][k].
  std::vector<std::array<int, 3>> antisymmetry;
  // 1-based quadruples (i,j,k,b) where the Jacobi contraction is nonzero.
  std::vector<std::array<int, 4>> jacobi;

  bool empty() const { return antisymmetry.empty() && jacobi.empty(); }
};

// Checks the two defining tensor relations exactly: antisymmetry
// mu[i][j][k] = -mu[j][i][k] and the Jacobi contraction
// mu[i][j][a] mu[a][k][b] + mu[j][k][a] mu[a][i][b] + mu[k][i][a] mu[a][j][b] = 0.
ValidationReport validate_structure(const StructureConstants& sc);

// Block sum: basis of b shifted past basis of a, no cross-block brackets.
StructureConstants direct_sum(const StructureConstants& a,
                              const StructureConstants& b);

// An invertible change of basis, new basis w_j = sum_i T(i,j) v_i.
struct BasisChange {
  RationalMatrix T;
  int dim() const { return T.rows(); }
};

// mu'[i][j][k] = sum_{a,b,c} T(a,i) T(b,j) mu[a][b][c] Tinv(k,c).
// Throws SingularMatrix when T is not invertible.
StructureConstants change_basis(const StructureConstants& sc,
                                const BasisChange& g);

// Deterministic in seed; T is a product of a unit-lower and a unit-upper
// triangular integer matrix with entries in [-2, 2], so det T = 1.
BasisChange random_invertible(int n, std::uint64_t seed);

// Algebra file format: {"n": int, "mu": [[i, j, k, "p/q"], ...]} with 1-based
// indices and only i < j entries listed. The loader rejects i >= j entries,
// duplicate triples, out-of-range indices and malformed rationals.
StructureConstants load_algebra(std::istream& in);
StructureConstants load_algebra_file(const std::string& path);
std::string algebra_to_json(const StructureConstants& sc);

}  // namespace liechord

#endif  // LIECHORD_STRUCTURE_CONSTANTS_HPP
