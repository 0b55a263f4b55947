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

#ifndef LIECHORD_REWRITE_HPP
#define LIECHORD_REWRITE_HPP

#include <map>

#include "liechord/tensor_eval.hpp"

namespace liechord {

// A formal rational combination of products of chord diagrams. Factors are
// kept canonical and sorted, terms keyed by the factor multiset, zero
// coefficients dropped.
class DiagramCombination {
 public:
  using Key = std::vector<ChordDiagram>;

  static DiagramCombination one() {
    DiagramCombination c;
    c.terms_[{}] = 1;
    return c;
  }

  void add(const Rational& coeff, std::vector<ChordDiagram> factors);
  DiagramCombination product(const DiagramCombination& other) const;

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const DiagramCombination&) const = default;

 private:
  std::map<Key, Rational> terms_;
};

// Exact value of an arbitrary closed picture, contracted directly by the
// generic network contractor. Throws MalformedInput on invalid pictures.
Rational evaluate_picture(const ClosedPicture& p, const StructureConstants& sc,
                          const KillingData& kd);

// Rewrites a valid, connected picture into one of equal value whose mu-graph
// (theta-nodes deleted) is connected; the theta count never changes. Each
// step moves one theta across a mu-node using the rotation identity that the
// invariance of the trace form gives,
//   sum_i theta(a,i) mu[i][b][d] = sum_c mu[b][c][a] theta(c,d),
// applied at a theta whose removal currently disconnects the mu-graph.
ClosedPicture connect_components(const ClosedPicture& p);

// The unique directed cycle of the mu-subgraph (every mu-node has out-degree
// one, so a connected mu-graph carries exactly one). Returns the cycle's
// mu-node ids in successor order starting from the smallest. Throws
// InvariantViolated when the mu-graph is disconnected (several cycles) or
// empty (none).
std::vector<int> find_unique_cycle(const ClosedPicture& p);

// Full reduction of a valid closed picture to a combination of products of
// chord diagrams, one factor per connected component: make each component's
// mu-graph connected, orient the unique cycle into every second input
// (antisymmetry, sign per swap), then flatten the trees hanging inside the
// cycle with Jacobi splits until every chord leg sits directly on the
// circle. For every semisimple algebra, evaluate_picture(p) equals the
// evaluation of the result.
DiagramCombination reduce_picture(const ClosedPicture& p);

// sum over terms of coeff * prod of factor values, sharing one evaluator.
Rational evaluate_combination(const DiagramCombination& c,
                              const StructureConstants& sc,
                              const KillingData& kd);

// Term lines "coeff" or "coeff * d1 * d2 ..." in key order; "0" when empty.
std::string format_combination(const DiagramCombination& c);

}  // namespace liechord

#endif  // LIECHORD_REWRITE_HPP
