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

#ifndef LIECHORD_TENSOR_EVAL_HPP
#define LIECHORD_TENSOR_EVAL_HPP

#include <memory>

#include "liechord/chord_diagram.hpp"
#include "liechord/killing.hpp"
#include "liechord/picture.hpp"

namespace liechord {

// A closed (mu, theta) graph together with the index dimension its edges
// carry. For a diagram with m chords the graph has 2m mu-nodes, m
// theta-nodes and 4m edges.
struct TensorNetwork {
  ClosedPicture graph;
  int dimension;
};

TensorNetwork build_network(const ChordDiagram& d, int dimension);

struct SweepStep {
  int position;     // index into the sweep order
  bool opens;       // true: chord opens here (partner comes later)
  int close_slot;   // for closes: position in the currently-open list
  int open_after;   // open chords after absorbing this node
};

struct MergeStep {
  int lhs, rhs;      // working-list tensor ids; the result is appended
  int result_width;
  int cost_width;    // axes of the union, exponent of the dense step cost
};

// How to contract a network down to a scalar, chosen statically.
//
// Diagram circles get the transfer-matrix sweep: absorb mu-nodes in cyclic
// order, open a chord index at its first endpoint (with theta folded in) and
// close it at the second. Peak width is 2 + the largest number of chords
// simultaneously open across the sweep, and the cut is chosen to minimize
// that. Anything else gets deterministic greedy pairwise merging.
struct ContractionPlan {
  enum class Strategy { circle_sweep, greedy_pairwise };
  Strategy strategy;
  int dimension = 0;

  // circle_sweep
  std::vector<int> mu_order;       // mu-node ids in sweep order (cut applied)
  std::vector<int> sweep_partner;  // partner position, in sweep coordinates
  std::vector<SweepStep> steps;
  int cut = 0;

  // greedy_pairwise
  std::vector<MergeStep> merges;

  int peak_width = 0;
  BigInt peak_entries;    // dimension^peak_width
  BigInt predicted_cost;  // dense cost model: sum over steps of n^cost_width
};

ContractionPlan plan_contraction(const TensorNetwork& net);

// Dense full-loop cost of the defining formula, for comparison against
// ContractionPlan::predicted_cost: 3m scalar multiplies for each of the
// n^{4m} index assignments.
BigInt naive_cost(int dimension, int chords);

// Shared per-algebra tables (sparse mu adjacency, theta, theta-folded mu) so
// a batch of diagrams is evaluated without rebuilding them. Thread-safe for
// concurrent use once constructed.
class DiagramEvaluator {
 public:
  DiagramEvaluator(const StructureConstants& sc, const KillingData& kd);
  ~DiagramEvaluator();
  DiagramEvaluator(DiagramEvaluator&&) noexcept;

  int dim() const { return n_; }
  Rational exact(const ChordDiagram& d) const;
  double approx(const ChordDiagram& d) const;

 private:
  struct Impl;
  int n_;
  std::unique_ptr<const Impl> impl_;
};

// Exact value of the diagram's network,
//   W(D) = sum over circle indices c and chord-leg indices a of
//          prod_p mu[a_p][c_p][c_{p+1}] * prod_{chords {p,q}} theta(a_p, a_q),
// contracted along the planned sweep. Accepts any matching, canonical or not.
Rational evaluate_diagram(const ChordDiagram& d, const StructureConstants& sc,
                          const KillingData& kd);

// Same plan executed in double precision.
double evaluate_float(const ChordDiagram& d, const StructureConstants& sc,
                      const KillingData& kd);

inline const BigInt kDefaultNaiveBudget = BigInt(1000000000);

// Independent oracle: the defining sum evaluated by direct recursion over
// the 4m indices (assignments with a vanishing mu factor are skipped, which
// drops only zero terms). Throws BudgetExceeded when n^{4m} exceeds budget.
Rational evaluate_naive(const ChordDiagram& d, const StructureConstants& sc,
                        const KillingData& kd,
                        const BigInt& budget = kDefaultNaiveBudget);

// Exact contraction of an arbitrary closed network by the greedy pairwise
// plan. This is the generic path; it never uses the circle sweep.
Rational contract_network_exact(const TensorNetwork& net,
                                const StructureConstants& sc,
                                const KillingData& kd);

}  // namespace liechord

#endif  // LIECHORD_TENSOR_EVAL_HPP
