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

#include "liechord/classical.hpp"

namespace liechord {

namespace {

RationalMatrix unit(int d, int p, int q) {
  RationalMatrix e(d, d);
  e(p, q) = 1;
  return e;
}

RationalMatrix bracket(const RationalMatrix& a, const RationalMatrix& b) {
  return a * b - b * a;
}

// Expresses brackets of the given matrices back in that basis. The basis is
// validated once: n independent flat coordinates are selected by elimination
// and every solved bracket is re-checked against all d^2 coordinates, so a
// wrong basis cannot produce silently wrong constants.
StructureConstants from_matrix_basis(const std::vector<RationalMatrix>& basis) {
  const int n = static_cast<int>(basis.size());
  const int d = basis[0].rows();
  const int flat = d * d;

  // Row-select n independent coordinates of the flattened basis.
  RationalMatrix elim(flat, n);
  for (int r = 0; r < flat; ++r)
    for (int c = 0; c < n; ++c) elim(r, c) = basis[c](r / d, r % d);
  std::vector<int> selected;
  {
    RationalMatrix w = elim;
    int row = 0;
    for (int r = 0; r < flat && row < n; ++r) {
      int lead = -1;
      for (int c = row; c < n; ++c)
        if (w(r, c) != 0) {
          lead = c;
          break;
        }
      if (lead < 0) continue;
      if (lead != row)
        for (int rr = 0; rr < flat; ++rr) std::swap(w(rr, row), w(rr, lead));
      for (int c = row + 1; c < n; ++c) {
        if (w(r, c) == 0) continue;
        const Rational f = w(r, c) / w(r, row);
        for (int rr = 0; rr < flat; ++rr) w(rr, c) -= f * w(rr, row);
      }
      selected.push_back(r);
      ++row;
    }
    if (static_cast<int>(selected.size()) != n)
      throw Error(ErrorCode::InvariantViolated, "basis matrices are dependent");
  }
  RationalMatrix square(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) square(r, c) = elim(selected[r], c);
  const RationalMatrix solve = invert_exact(square);

  StructureConstants sc(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const RationalMatrix br = bracket(basis[i], basis[j]);
      RationalMatrix rhs(n, 1);
      for (int r = 0; r < n; ++r) rhs(r, 0) = br(selected[r] / d, selected[r] % d);
      const RationalMatrix coeff = solve * rhs;
      RationalMatrix recon(d, d);
      for (int c = 0; c < n; ++c) {
        if (coeff(c, 0) == 0) continue;
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q) recon(p, q) += coeff(c, 0) * basis[c](p, q);
      }
      if (!(recon == br))
        throw Error(ErrorCode::InvariantViolated,
                    "bracket does not lie in the span of the basis");
      for (int k = 0; k < n; ++k)
        if (coeff(k, 0) != 0) sc.set_bracket(i, j, k, coeff(k, 0));
    }
  return sc;
}

std::vector<RationalMatrix> sl_basis(int m) {
  std::vector<RationalMatrix> basis;
  for (int p = 0; p + 1 < m; ++p)
    basis.push_back(unit(m, p, p) - unit(m, p + 1, p + 1));
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      if (p != q) basis.push_back(unit(m, p, q));
  return basis;
}

std::vector<RationalMatrix> so_basis(int m) {
  std::vector<RationalMatrix> basis;
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) basis.push_back(unit(m, p, q) - unit(m, q, p));
  return basis;
}

std::vector<RationalMatrix> sp_basis(int r) {
  const int d = 2 * r;
  std::vector<RationalMatrix> basis;
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q)
      basis.push_back(unit(d, p, q) - unit(d, r + q, r + p));
  for (int p = 0; p < r; ++p)
    for (int q = p; q < r; ++q) {
      RationalMatrix b = unit(d, p, r + q);
      if (p != q) b = b + unit(d, q, r + p);
      basis.push_back(b);
    }
  for (int p = 0; p < r; ++p)
    for (int q = p; q < r; ++q) {
      RationalMatrix c = unit(d, r + p, q);
      if (p != q) c = c + unit(d, r + q, p);
      basis.push_back(c);
    }
  return basis;
}

}  // namespace

Family parse_family(const std::string& name) {
  if (name == "sl") return Family::special_linear;
  if (name == "so") return Family::orthogonal;
  if (name == "sp") return Family::symplectic;
  throw Error(ErrorCode::MalformedInput, "unknown family '" + name + "'");
}

StructureConstants build_classical(Family family, int m) {
  switch (family) {
    case Family::special_linear:
      if (m < 2)
        throw Error(ErrorCode::NotSemisimpleFamily,
                    "special_linear requires m >= 2");
      return from_matrix_basis(sl_basis(m));
    case Family::orthogonal:
      if (m < 3)
        throw Error(ErrorCode::NotSemisimpleFamily,
                    "orthogonal requires m >= 3");
      return from_matrix_basis(so_basis(m));
    case Family::symplectic:
      if (m < 2 || m % 2 != 0)
        throw Error(ErrorCode::NotSemisimpleFamily,
                    "symplectic requires an even parameter >= 2");
      return from_matrix_basis(sp_basis(m / 2));
  }
  throw Error(ErrorCode::MalformedInput, "unreachable family");
}

}  // namespace liechord
