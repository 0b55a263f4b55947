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

#include "liechord/killing.hpp"

namespace liechord {

RationalMatrix killing_matrix(const StructureConstants& sc) {
  if (!validate_structure(sc).empty())
    throw Error(ErrorCode::MalformedInput,
                "structure constants violate the bracket relations");
  const int n = sc.dim();
  RationalMatrix b(n, n);
  for (const auto& [key, v] : sc.entries()) {
    // key = (i, a, c): pair against mu[j][c][a] for all j.
    for (int j = 0; j < n; ++j) {
      const Rational& w = sc.mu(j, key.k, key.j);
      if (w != 0) b(key.i, j) += v * w;
    }
  }
  return b;
}

KillingData casimir_theta(const StructureConstants& sc) {
  RationalMatrix b = killing_matrix(sc);
  if (det_exact(b) == 0)
    throw Error(ErrorCode::NotSemisimple, "Killing form is degenerate");
  RationalMatrix theta = invert_exact(b);
  return KillingData{std::move(b), std::move(theta)};
}

bool is_semisimple(const StructureConstants& sc) {
  return det_exact(killing_matrix(sc)) != 0;
}

}  // namespace liechord
