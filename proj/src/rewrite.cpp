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

#include "liechord/rewrite.hpp"

#include <algorithm>
#include <numeric>

namespace liechord {

void DiagramCombination::add(const Rational& coeff,
                             std::vector<ChordDiagram> factors) {
  for (ChordDiagram& d : factors) d = canonicalize(d);
  std::sort(factors.begin(), factors.end());
  auto [it, inserted] = terms_.emplace(std::move(factors), coeff);
  if (!inserted) it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

DiagramCombination DiagramCombination::product(
    const DiagramCombination& other) const {
  DiagramCombination out;
  for (const auto& [fa, ca] : terms_)
    for (const auto& [fb, cb] : other.terms_) {
      Key merged = fa;
      merged.insert(merged.end(), fb.begin(), fb.end());
      out.add(ca * cb, std::move(merged));
    }
  return out;
}

std::string format_combination(const DiagramCombination& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [factors, coeff] : c.terms()) {
    if (!out.empty()) out += '\n';
    out += format_rational(coeff);
    for (const ChordDiagram& d : factors) out += " * " + format_diagram(d);
  }
  return out;
}

Rational evaluate_picture(const ClosedPicture& p, const StructureConstants& sc,
                          const KillingData& kd) {
  return contract_network_exact(TensorNetwork{p, sc.dim()}, sc, kd);
}

Rational evaluate_combination(const DiagramCombination& c,
                              const StructureConstants& sc,
                              const KillingData& kd) {
  DiagramEvaluator eval(sc, kd);
  std::map<ChordDiagram, Rational> cache;
  Rational total = 0;
  for (const auto& [factors, coeff] : c.terms()) {
    Rational term = coeff;
    for (const ChordDiagram& d : factors) {
      auto it = cache.find(d);
      if (it == cache.end()) it = cache.emplace(d, eval.exact(d)).first;
      term *= it->second;
    }
    total += term;
  }
  return total;
}

namespace {

// The mu-subgraph as a functional graph: every mu-node has exactly one out
// edge and it lands on a mu input, so each weak component carries exactly
// one directed cycle with trees hanging off it.
struct MuGraph {
  std::vector<int> succ;
  std::vector<int> comp;
  int comp_count = 0;
  std::vector<char> on_cycle;
  std::vector<int> dist;          // steps along succ to reach the cycle
  std::vector<int> cycle_of;      // smallest on-cycle node per component
};

MuGraph analyze_mu(const ClosedPicture& p) {
  const int count = p.mu_count();
  MuGraph g;
  g.succ.assign(count, -1);
  for (int v = 0; v < count; ++v) {
    const int e = p.edge_index_from(PortRef{NodeKind::mu, v, 2});
    if (e < 0)
      throw Error(ErrorCode::MalformedInput, "mu-node with unconnected output");
    g.succ[v] = p.edges()[e].dst.node;
  }
  // Weak components.
  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int v = 0; v < count; ++v) parent[find(v)] = find(g.succ[v]);
  g.comp.assign(count, -1);
  std::map<int, int> roots;
  for (int v = 0; v < count; ++v)
    g.comp[v] = roots.emplace(find(v), static_cast<int>(roots.size())).first->second;
  g.comp_count = static_cast<int>(roots.size());

  // Cycle detection: walk succ with per-walk stamps.
  g.on_cycle.assign(count, 0);
  std::vector<int> state(count, 0);  // 0 fresh, 1 current walk, 2 settled
  for (int start = 0; start < count; ++start) {
    if (state[start] != 0) continue;
    int v = start;
    while (state[v] == 0) {
      state[v] = 1;
      v = g.succ[v];
    }
    if (state[v] == 1) {
      // Found a new cycle: everything from v onwards around succ is on it.
      int w = v;
      do {
        g.on_cycle[w] = 1;
        w = g.succ[w];
      } while (w != v);
    }
    v = start;
    while (state[v] == 1) {
      state[v] = 2;
      v = g.succ[v];
    }
  }
  g.dist.assign(count, -1);
  for (int v = 0; v < count; ++v) {
    int w = v, steps = 0;
    while (!g.on_cycle[w]) {
      w = g.succ[w];
      ++steps;
    }
    g.dist[v] = steps;
  }
  g.cycle_of.assign(g.comp_count, count);
  for (int v = 0; v < count; ++v)
    if (g.on_cycle[v]) g.cycle_of[g.comp[v]] = std::min(g.cycle_of[g.comp[v]], v);
  return g;
}

std::vector<int> cycle_from(const MuGraph& g, int start) {
  std::vector<int> cycle;
  int v = start;
  do {
    cycle.push_back(v);
    v = g.succ[v];
  } while (v != start);
  return cycle;
}

// One rotation step at theta node t: its `side` port feeds mu-node x. The
// theta moves to x's other input, the displaced input source moves across,
// x's output is redirected to where the theta's far port pointed, and the
// far port takes over x's old output edge. Value preserving, no sign.
void rotate_theta(ClosedPicture& p, int t, int side) {
  const PortRef pa{NodeKind::theta, t, side};
  const PortRef pb{NodeKind::theta, t, 1 - side};
  const int e_pat = p.edge_index_from(pa);
  const int e_far = p.edge_index_from(pb);
  const PortRef target = p.edges()[e_pat].dst;
  const int x = target.node;
  const int alpha = target.port;  // 0 or 1
  const int e_other = p.edge_index_into(PortRef{NodeKind::mu, x, 1 - alpha});
  const int e_out = p.edge_index_from(PortRef{NodeKind::mu, x, 2});

  auto& edges = p.edges_mutable();
  edges[e_other].dst = PortRef{NodeKind::mu, x, alpha};
  edges[e_out].src = pb;
  edges[e_far].src = PortRef{NodeKind::mu, x, 2};
  edges[e_pat].dst = PortRef{NodeKind::mu, x, 1 - alpha};
}

// Applies rotations until the mu-graph is connected. Progress: rotating at a
// mu-node on its component's cycle merges two components; otherwise the
// moved theta reappears one step closer to the cycle, so picking the
// least-distance bridging port terminates.
void connect_mu_graph(ClosedPicture& p) {
  for (;;) {
    const MuGraph g = analyze_mu(p);
    if (g.comp_count <= 1) return;
    int best_t = -1, best_side = -1, best_dist = 0;
    for (int t = 0; t < p.theta_count(); ++t) {
      const int e0 = p.edge_index_from(PortRef{NodeKind::theta, t, 0});
      const int e1 = p.edge_index_from(PortRef{NodeKind::theta, t, 1});
      const int x0 = p.edges()[e0].dst.node;
      const int x1 = p.edges()[e1].dst.node;
      if (g.comp[x0] == g.comp[x1]) continue;
      for (int side = 0; side < 2; ++side) {
        const int d = g.dist[side == 0 ? x0 : x1];
        if (best_t < 0 || d < best_dist) {
          best_t = t;
          best_side = side;
          best_dist = d;
        }
      }
    }
    if (best_t < 0)
      throw Error(ErrorCode::MalformedInput,
                  "picture is disconnected: no theta links the mu components");
    rotate_theta(p, best_t, best_side);
  }
}

// Reorients every cycle edge into the second input of its target, swapping
// inputs (one sign each) where it arrives at the first.
void orient_cycle(ClosedPicture& p, const std::vector<int>& cycle,
                  Rational& coeff) {
  for (int v : cycle) {
    const int e = p.edge_index_from(PortRef{NodeKind::mu, v, 2});
    const PortRef dst = p.edges()[e].dst;
    if (dst.port == 1) continue;
    const int other = p.edge_index_into(PortRef{NodeKind::mu, dst.node, 1});
    auto& edges = p.edges_mutable();
    edges[e].dst = PortRef{NodeKind::mu, dst.node, 1};
    edges[other].dst = PortRef{NodeKind::mu, dst.node, 0};
    coeff = -coeff;
  }
}

struct Term {
  Rational coeff;
  ClosedPicture pic;
};

// [[u,w],c] = [u,[w,c]] - [w,[u,c]] at cycle node x fed by tree node y:
// y slides into the cycle just before x, and the two subtrees u, w land on
// the two first inputs, in both orders with opposite signs.
std::pair<Term, Term> jacobi_split(const Term& term, int x, int y) {
  const ClosedPicture& p = term.pic;
  const int e_yx = p.edge_index_into(PortRef{NodeKind::mu, x, 0});
  const int e_u = p.edge_index_into(PortRef{NodeKind::mu, y, 0});
  const int e_w = p.edge_index_into(PortRef{NodeKind::mu, y, 1});
  const int e_cyc = p.edge_index_into(PortRef{NodeKind::mu, x, 1});

  Term plus{term.coeff, p};
  {
    auto& e = plus.pic.edges_mutable();
    e[e_u].dst = PortRef{NodeKind::mu, x, 0};
    e[e_w].dst = PortRef{NodeKind::mu, y, 0};
    e[e_cyc].dst = PortRef{NodeKind::mu, y, 1};
    e[e_yx].dst = PortRef{NodeKind::mu, x, 1};
  }
  Term minus{-term.coeff, p};
  {
    auto& e = minus.pic.edges_mutable();
    e[e_w].dst = PortRef{NodeKind::mu, x, 0};
    e[e_cyc].dst = PortRef{NodeKind::mu, y, 1};
    e[e_yx].dst = PortRef{NodeKind::mu, x, 1};
  }
  return {std::move(plus), std::move(minus)};
}

// Reduction of one connected component.
DiagramCombination reduce_connected(const ClosedPicture& comp) {
  DiagramCombination out;
  if (comp.mu_count() == 0) return DiagramCombination::one();
  std::vector<Term> work{Term{1, comp}};
  while (!work.empty()) {
    Term term = std::move(work.back());
    work.pop_back();
    connect_mu_graph(term.pic);
    const MuGraph g = analyze_mu(term.pic);
    std::vector<int> cycle = cycle_from(g, g.cycle_of[0]);
    orient_cycle(term.pic, cycle, term.coeff);

    int site_x = -1, site_y = -1;
    for (int v : cycle) {
      const int e = term.pic.edge_index_into(PortRef{NodeKind::mu, v, 0});
      const PortRef src = term.pic.edges()[e].src;
      if (src.kind == NodeKind::mu) {
        site_x = v;
        site_y = src.node;
        break;
      }
    }
    if (site_x >= 0) {
      auto [plus, minus] = jacobi_split(term, site_x, site_y);
      work.push_back(std::move(plus));
      work.push_back(std::move(minus));
      continue;
    }

    // Normal form: every mu-node sits on the cycle with a chord leg at its
    // first input. Read off the matching.
    std::vector<std::vector<int>> positions(comp.theta_count());
    for (int pos = 0; pos < static_cast<int>(cycle.size()); ++pos) {
      const int e =
          term.pic.edge_index_into(PortRef{NodeKind::mu, cycle[pos], 0});
      positions[term.pic.edges()[e].src.node].push_back(pos);
    }
    std::vector<std::pair<int, int>> pairs;
    for (const auto& pp : positions) {
      if (pp.size() != 2)
        throw Error(ErrorCode::InvariantViolated,
                    "normal form lost a chord pairing");
      pairs.emplace_back(pp[0], pp[1]);
    }
    out.add(term.coeff,
            {ChordDiagram::from_pairs(comp.theta_count(), pairs)});
  }
  return out;
}

}  // namespace

ClosedPicture connect_components(const ClosedPicture& p) {
  const PictureReport report = validate_picture(p);
  if (!report.ok())
    throw Error(ErrorCode::MalformedInput,
                "invalid picture: " + report.violations.front());
  ClosedPicture out = p;
  connect_mu_graph(out);
  return out;
}

std::vector<int> find_unique_cycle(const ClosedPicture& p) {
  if (p.mu_count() == 0)
    throw Error(ErrorCode::InvariantViolated, "mu-subgraph has no directed cycle");
  const MuGraph g = analyze_mu(p);
  if (g.comp_count != 1)
    throw Error(ErrorCode::InvariantViolated,
                "mu-subgraph has " + std::to_string(g.comp_count) +
                    " components, hence that many directed cycles");
  return cycle_from(g, g.cycle_of[0]);
}

DiagramCombination reduce_picture(const ClosedPicture& p) {
  const PictureReport report = validate_picture(p);
  if (!report.ok())
    throw Error(ErrorCode::MalformedInput,
                "invalid picture: " + report.violations.front());
  DiagramCombination result = DiagramCombination::one();
  for (const ClosedPicture& comp : split_components(p))
    result = result.product(reduce_connected(comp));
  return result;
}

}  // namespace liechord
