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

#ifndef LIECHORD_KILLING_HPP
#define LIECHORD_KILLING_HPP

#include "liechord/structure_constants.hpp"

namespace liechord {

// The trace form B and its exact inverse tensor theta, B * theta = I.
// Both are symmetric; theta exists only for semisimple algebras.
struct KillingData {
  RationalMatrix B;
  RationalMatrix theta;
  int dim() const { return B.rows(); }
};

// B(i,j) = sum_{a,b} mu[i][a][b] mu[j][b][a], the trace of ad v_i ad v_j.
RationalMatrix killing_matrix(const StructureConstants& sc);

// Inverts B exactly. Throws NotSemisimple when det B == 0.
KillingData casimir_theta(const StructureConstants& sc);

// Cartan's criterion: non-degeneracy of B, decided by exact determinant.
bool is_semisimple(const StructureConstants& sc);

}  // namespace liechord

#endif  // LIECHORD_KILLING_HPP
