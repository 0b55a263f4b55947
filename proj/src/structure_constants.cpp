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

#include "liechord/structure_constants.hpp"

#include <json.hpp>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace liechord {

namespace {
const Rational kZero = 0;
}

StructureConstants::StructureConstants(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::MalformedInput, "dimension must be >= 1");
}

void StructureConstants::check_index(int v) const {
  if (v < 0 || v >= n_)
    throw Error(ErrorCode::MalformedInput,
                "index " + std::to_string(v + 1) + " out of range 1.." +
                    std::to_string(n_));
}

void StructureConstants::set_bracket(int i, int j, int k, const Rational& v) {
  check_index(i);
  check_index(j);
  check_index(k);
  if (i == j) {
    if (v != 0)
      throw Error(ErrorCode::MalformedInput, "nonzero diagonal bracket");
    return;
  }
  if (v == 0) {
    mu_.erase(MuKey{i, j, k});
    mu_.erase(MuKey{j, i, k});
    return;
  }
  mu_[MuKey{i, j, k}] = v;
  mu_[MuKey{j, i, k}] = -v;
}

StructureConstants StructureConstants::from_raw(
    int n, const std::vector<std::tuple<int, int, int, Rational>>& entries) {
  StructureConstants sc(n);
  for (const auto& [i, j, k, v] : entries) {
    sc.check_index(i);
    sc.check_index(j);
    sc.check_index(k);
    if (sc.mu_.count(MuKey{i, j, k}))
      throw Error(ErrorCode::MalformedInput, "duplicate entry");
    if (v != 0) sc.mu_[MuKey{i, j, k}] = v;
  }
  return sc;
}

const Rational& StructureConstants::mu(int i, int j, int k) const {
  auto it = mu_.find(MuKey{i, j, k});
  return it == mu_.end() ? kZero : it->second;
}

ValidationReport validate_structure(const StructureConstants& sc) {
  ValidationReport report;
  const int n = sc.dim();

  // Antisymmetry, each unordered pair once.
  for (const auto& [key, v] : sc.entries()) {
    if (key.i > key.j) continue;
    if (key.i == key.j) {
      report.antisymmetry.push_back({key.i + 1, key.j + 1, key.k + 1});
      continue;
    }
    if (v != -sc.mu(key.j, key.i, key.k))
      report.antisymmetry.push_back({key.i + 1, key.j + 1, key.k + 1});
  }
  for (const auto& [key, v] : sc.entries()) {
    if (key.i <= key.j) continue;
    // Mirror entry missing entirely, so the i < j scan above never saw it.
    if (sc.mu(key.j, key.i, key.k) == 0)
      report.antisymmetry.push_back({key.j + 1, key.i + 1, key.k + 1});
  }

  // Adjacency by bracket pair for the Jacobi contraction.
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> adj;
  for (const auto& [key, v] : sc.entries())
    adj[{key.i, key.j}].emplace_back(key.k, v);
  const auto contract = [&](int i, int j, int k, std::vector<Rational>& acc) {
    auto it = adj.find({i, j});
    if (it == adj.end()) return;
    for (const auto& [a, v] : it->second) {
      auto jt = adj.find({a, k});
      if (jt == adj.end()) continue;
      for (const auto& [b, w] : jt->second) acc[b] += v * w;
    }
  };

  // With clean antisymmetry the Jacobi expression is alternating in (i,j,k),
  // so i < j < k covers everything; otherwise check all ordered triples.
  const bool clean = report.antisymmetry.empty();
  std::vector<Rational> acc(n);
  for (int i = 0; i < n; ++i)
    for (int j = clean ? i + 1 : 0; j < n; ++j)
      for (int k = clean ? j + 1 : 0; k < n; ++k) {
        for (Rational& r : acc) r = 0;
        contract(i, j, k, acc);
        contract(j, k, i, acc);
        contract(k, i, j, acc);
        for (int b = 0; b < n; ++b)
          if (acc[b] != 0) report.jacobi.push_back({i + 1, j + 1, k + 1, b + 1});
      }
  return report;
}

StructureConstants direct_sum(const StructureConstants& a,
                              const StructureConstants& b) {
  if (!validate_structure(a).empty() || !validate_structure(b).empty())
    throw Error(ErrorCode::MalformedInput,
                "direct summands must satisfy the bracket relations");
  StructureConstants sum(a.dim() + b.dim());
  for (const auto& [key, v] : a.entries())
    if (key.i < key.j) sum.set_bracket(key.i, key.j, key.k, v);
  const int off = a.dim();
  for (const auto& [key, v] : b.entries())
    if (key.i < key.j) sum.set_bracket(key.i + off, key.j + off, key.k + off, v);
  return sum;
}

StructureConstants change_basis(const StructureConstants& sc,
                                const BasisChange& g) {
  const int n = sc.dim();
  if (g.dim() != n || g.T.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "basis change size mismatch");
  const RationalMatrix inv = invert_exact(g.T);  // throws SingularMatrix

  std::map<MuKey, Rational> acc;
  for (const auto& [key, v] : sc.entries()) {
    for (int i = 0; i < n; ++i) {
      const Rational& ta = g.T(key.i, i);
      if (ta == 0) continue;
      const Rational va = ta * v;
      for (int j = 0; j < n; ++j) {
        const Rational& tb = g.T(key.j, j);
        if (tb == 0) continue;
        const Rational vab = va * tb;
        for (int k = 0; k < n; ++k) {
          if (inv(k, key.k) == 0) continue;
          acc[MuKey{i, j, k}] += vab * inv(k, key.k);
        }
      }
    }
  }
  StructureConstants out(n);
  for (const auto& [key, v] : acc)
    if (key.i < key.j && v != 0) out.set_bracket(key.i, key.j, key.k, v);
  return out;
}

BasisChange random_invertible(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::MalformedInput, "dimension must be >= 1");
  std::mt19937_64 rng(seed);
  const auto small = [&]() -> int {
    return static_cast<int>(rng() % 5) - 2;  // in [-2, 2]
  };
  RationalMatrix lower = RationalMatrix::identity(n);
  RationalMatrix upper = RationalMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      lower(i, j) = small();
      upper(j, i) = small();
    }
  return BasisChange{lower * upper};
}

StructureConstants load_algebra(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("mu") ||
      !doc["n"].is_number_integer() || !doc["mu"].is_array())
    throw Error(ErrorCode::MalformedInput,
                "algebra file must be {\"n\": int, \"mu\": [[i,j,k,\"p/q\"],...]}");
  const int n = doc["n"].get<int>();
  StructureConstants sc(n);
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& entry : doc["mu"]) {
    if (!entry.is_array() || entry.size() != 4 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer() ||
        !entry[2].is_number_integer() || !entry[3].is_string())
      throw Error(ErrorCode::MalformedInput, "mu entry must be [i, j, k, \"p/q\"]");
    const int i = entry[0].get<int>(), j = entry[1].get<int>(),
              k = entry[2].get<int>();
    if (i < 1 || i > n || j < 1 || j > n || k < 1 || k > n)
      throw Error(ErrorCode::MalformedInput, "mu index out of range 1..n");
    if (i >= j)
      throw Error(ErrorCode::MalformedInput,
                  "mu entries must have i < j (the i > j half is implied)");
    if (!seen.insert({i, j, k}).second)
      throw Error(ErrorCode::MalformedInput, "duplicate mu entry");
    sc.set_bracket(i - 1, j - 1, k - 1, parse_rational(entry[3].get<std::string>()));
  }
  return sc;
}

StructureConstants load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  return load_algebra(in);
}

std::string algebra_to_json(const StructureConstants& sc) {
  nlohmann::ordered_json doc;
  doc["n"] = sc.dim();
  doc["mu"] = nlohmann::json::array();
  for (const auto& [key, v] : sc.entries()) {
    if (key.i >= key.j) continue;
    doc["mu"].push_back(
        {key.i + 1, key.j + 1, key.k + 1, format_rational(v)});
  }
  return doc.dump();
}

}  // namespace liechord
