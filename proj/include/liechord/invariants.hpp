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

#ifndef LIECHORD_INVARIANTS_HPP
#define LIECHORD_INVARIANTS_HPP

#include <optional>
#include <string>

#include "liechord/rewrite.hpp"

namespace liechord {

// Exact values of every rotation-canonical diagram with 1..max_chords
// chords, in (chord count, canonical form) order.
struct InvariantVector {
  std::string label;
  int max_chords = 0;
  std::vector<std::pair<ChordDiagram, Rational>> values;
};

// Throws NotSemisimple when the Killing form is degenerate. jobs > 1 spreads
// the per-diagram evaluations over that many threads; the output order is
// canonical either way.
InvariantVector invariant_vector(const StructureConstants& sc, int max_chords,
                                 int jobs = 1, const std::string& label = "");

// Double-precision scan over the same diagrams, for exploration only.
std::vector<std::pair<ChordDiagram, double>> float_invariant_scan(
    const StructureConstants& sc, int max_chords, int jobs = 1);

struct Verdict {
  enum class Kind { distinct, equal_up_to, isomorphy_certified };
  Kind kind;
  int max_chords = 0;                  // the examined bound
  std::optional<ChordDiagram> witness; // distinct only
  Rational value_a, value_b;           // witness values
};

struct CompareOptions {
  // Scan each chord count in floating point first and confirm only the
  // flagged diagrams exactly; when nothing is flagged the whole level is
  // still verified exactly before moving on, so equal-up-to stays a proof.
  bool float_prescreen = false;
  int jobs = 1;
};

// Walks m = 1, 2, ..., max_chords comparing exact invariant values in
// canonical order; the first difference is a sound non-isomorphism witness.
// Different dimensions short-circuit via the one-chord diagram. All values
// equal means equal_up_to, or isomorphy_certified once max_chords reaches
// floor of the certification bound for that dimension.
Verdict compare_algebras(const StructureConstants& a,
                         const StructureConstants& b, int max_chords,
                         const CompareOptions& options = {});

// The chord-count certification bound
//   k(n) = (1/8) (n^3 + n^2) (n + 1)^2 (2n + 1)^{2 n^2},
// exact, with its floor (the bound need not be an integer).
struct TheoremBound {
  Rational value;
  BigInt floor;
};
TheoremBound theorem_bound(int n);

}  // namespace liechord

#endif  // LIECHORD_INVARIANTS_HPP
