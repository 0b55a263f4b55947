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

#ifndef LIECHORD_RATIONAL_MATRIX_HPP
#define LIECHORD_RATIONAL_MATRIX_HPP

#include <vector>

#include "liechord/rational.hpp"

namespace liechord {

// Dense matrix of exact rationals. Sizes stay small (Killing matrices of the
// desk-scale algebras, basis changes), so dense storage is fine.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0)
      throw Error(ErrorCode::MalformedInput, "negative matrix size");
  }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }
  const Rational& operator()(int i, int j) const {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }

  RationalMatrix transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    for (const Rational& e : entries_)
      if (e != 0) return false;
    return true;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination; the single-step
// update (p*M[i][j] - M[i][k]*M[k][j]) / prev keeps intermediate entries the
// size of minors instead of products of pivots.
Rational det_exact(const RationalMatrix& m);

// Exact inverse via Bareiss forward elimination on [M | I] plus back
// substitution. Throws SingularMatrix when det_exact(m) == 0.
RationalMatrix invert_exact(const RationalMatrix& m);

}  // namespace liechord

#endif  // LIECHORD_RATIONAL_MATRIX_HPP
