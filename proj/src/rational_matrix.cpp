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

#include "liechord/rational_matrix.hpp"

namespace liechord {

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b(k, j) == 0) continue;
        c(i, j) += aik * b(k, j);
      }
    }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  RationalMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  RationalMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

namespace {

// Bareiss forward elimination on an n x cols working matrix whose left n x n
// block is the matrix of interest. Returns the permutation sign, or 0 when
// the left block is singular. On success the left block is upper triangular
// with w(k,k) holding the k-th leading principal minor (up to sign).
int bareiss_forward(RationalMatrix& w, int n) {
  int sign = 1;
  Rational prev = 1;
  for (int k = 0; k < n; ++k) {
    int pivot_row = -1;
    for (int r = k; r < n; ++r)
      if (w(r, k) != 0) {
        pivot_row = r;
        break;
      }
    if (pivot_row < 0) return 0;
    if (pivot_row != k) {
      for (int j = 0; j < w.cols(); ++j) std::swap(w(k, j), w(pivot_row, j));
      sign = -sign;
    }
    const Rational pivot = w(k, k);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < w.cols(); ++j)
        w(i, j) = (pivot * w(i, j) - w(i, k) * w(k, j)) / prev;
      w(i, k) = 0;
    }
    prev = pivot;
  }
  return sign;
}

}  // namespace

Rational det_exact(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  RationalMatrix w = m;
  int sign = bareiss_forward(w, n);
  if (sign == 0) return 0;
  return sign > 0 ? w(n - 1, n - 1) : Rational(-w(n - 1, n - 1));
}

RationalMatrix invert_exact(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const int n = m.rows();
  RationalMatrix w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = m(i, j);
    w(i, n + i) = 1;
  }
  if (bareiss_forward(w, n) == 0)
    throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  RationalMatrix inv(n, n);
  for (int c = 0; c < n; ++c) {
    for (int i = n - 1; i >= 0; --i) {
      Rational sum = w(i, n + c);
      for (int j = i + 1; j < n; ++j) sum -= w(i, j) * inv(j, c);
      inv(i, c) = sum / w(i, i);
    }
  }
  return inv;
}

}  // namespace liechord
