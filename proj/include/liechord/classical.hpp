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

#ifndef LIECHORD_CLASSICAL_HPP
#define LIECHORD_CLASSICAL_HPP

#include <string>

#include "liechord/structure_constants.hpp"

namespace liechord {

enum class Family { special_linear, orthogonal, symplectic };

Family parse_family(const std::string& name);  // "sl", "so", "sp"

// Structure constants of a classical semisimple algebra in a fixed integer
// basis, computed from the defining matrix realization:
//
//   special_linear(m), m >= 2: basis H_1..H_{m-1} (H_p = E_pp - E_{p+1,p+1})
//     followed by E_pq, p != q, in lexicographic order; dimension m^2 - 1.
//     For m = 2 this is the familiar (h, e, f) with [h,e] = 2e, [h,f] = -2f,
//     [e,f] = h.
//   orthogonal(m), m >= 3: basis A_pq = E_pq - E_qp, p < q, lexicographic;
//     dimension m(m-1)/2.
//   symplectic(2r), even parameter >= 2: block basis {diag(E_pq, -E_qp)},
//     {upper E_pq + E_qp, p <= q}, {lower E_pq + E_qp, p <= q} for the
//     standard skew form; dimension r(2r + 1).
//
// Degenerate parameters raise NotSemisimpleFamily.
StructureConstants build_classical(Family family, int m);

}  // namespace liechord

#endif  // LIECHORD_CLASSICAL_HPP
