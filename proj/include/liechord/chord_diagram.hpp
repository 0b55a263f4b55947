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

#ifndef LIECHORD_CHORD_DIAGRAM_HPP
#define LIECHORD_CHORD_DIAGRAM_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "liechord/error.hpp"

namespace liechord {

// A perfect matching of 2m points in cyclic order, kept as the partner
// sequence partner(p). Points are 0-based internally and 1-based in the
// "a-b,c-d" text form. A diagram is canonical when its partner sequence is
// the lexicographically least among all 2m rotations; functions that need a
// canonical representative say so, everything else accepts any matching.
class ChordDiagram {
 public:
  // Validates that `partner` is a fixed-point-free involution of 0..2m-1.
  explicit ChordDiagram(std::vector<int> partner);

  static ChordDiagram from_pairs(int m, const std::vector<std::pair<int, int>>& pairs);

  int chords() const { return static_cast<int>(partner_.size()) / 2; }
  int points() const { return static_cast<int>(partner_.size()); }
  const std::vector<int>& partner() const { return partner_; }

  // Relabels p -> (p + r) mod 2m.
  ChordDiagram rotated(int r) const;
  // Relabels p -> 2m - 1 - p.
  ChordDiagram reflected() const;

  bool is_canonical() const;

  auto operator<=>(const ChordDiagram& o) const { return partner_ <=> o.partner_; }
  bool operator==(const ChordDiagram& o) const = default;

 private:
  std::vector<int> partner_;
};

// Lexicographically least rotation; idempotent.
ChordDiagram canonicalize(const ChordDiagram& d);

// Least canonical form over the dihedral orbit (all rotations and
// reflections); the result is itself canonical.
ChordDiagram dihedral_canonicalize(const ChordDiagram& d);

// Text form "a-b,c-d,..." with 1-based points. parse_diagram canonicalizes,
// so format_diagram(parse_diagram(s)) is the canonical form of s.
ChordDiagram parse_diagram(std::string_view text);
std::string format_diagram(const ChordDiagram& d);

enum class Symmetry { none, rotation, dihedral };

// All matchings of 2m points (symmetry = none, (2m-1)!! of them) or one
// canonical representative per rotation / dihedral orbit, in increasing
// partner-sequence order. The orbit filters reject a matching as soon as a
// smaller rotation exists, so nothing but the output is ever stored.
std::vector<ChordDiagram> enumerate_diagrams(int m, Symmetry symmetry);

}  // namespace liechord

#endif  // LIECHORD_CHORD_DIAGRAM_HPP
