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

#include "liechord/tensor_eval.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

namespace liechord {

namespace {

template <class S>
S to_scalar(const Rational& r);
template <>
Rational to_scalar<Rational>(const Rational& r) { return r; }
template <>
double to_scalar<double>(const Rational& r) { return to_double(r); }

template <class S>
constexpr size_t state_entry_limit() {
  return std::is_same_v<S, Rational> ? size_t{2000000} : size_t{50000000};
}

// Per-algebra lookup tables. open_by_j folds theta into mu once:
// open[a][j][k] = sum_i theta(a, i) mu[i][j][k], the tensor absorbed when a
// chord opens; the bare mu entries close it again.
template <class S>
struct EvalTables {
  int n = 0;
  std::vector<S> theta;                                        // n * n
  std::vector<std::vector<std::tuple<int, int, S>>> open_by_j;  // (a, k, v)
  std::vector<std::vector<std::pair<int, S>>> mu_by_ij;         // [(i*n+j)] -> (k, v)
};

template <class S>
EvalTables<S> build_tables(const StructureConstants& sc, const KillingData& kd) {
  const int n = sc.dim();
  EvalTables<S> t;
  t.n = n;
  t.theta.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.theta[static_cast<size_t>(i) * n + j] = to_scalar<S>(kd.theta(i, j));

  t.mu_by_ij.resize(static_cast<size_t>(n) * n);
  for (const auto& [key, v] : sc.entries())
    t.mu_by_ij[static_cast<size_t>(key.i) * n + key.j].emplace_back(
        key.k, to_scalar<S>(v));

  std::vector<Rational> open(static_cast<size_t>(n) * n * n);
  for (const auto& [key, v] : sc.entries())
    for (int a = 0; a < n; ++a) {
      const Rational& th = kd.theta(a, key.i);
      if (th == 0) continue;
      open[(static_cast<size_t>(a) * n + key.j) * n + key.k] += th * v;
    }
  t.open_by_j.resize(n);
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < n; ++a)
      for (int k = 0; k < n; ++k) {
        const Rational& v = open[(static_cast<size_t>(a) * n + j) * n + k];
        if (v != 0) t.open_by_j[j].emplace_back(a, k, to_scalar<S>(v));
      }
  return t;
}

// ---------------------------------------------------------------------------
// Circle recognition and sweep planning.

struct CircleForm {
  std::vector<int> order;    // mu-node ids around the directed cycle
  std::vector<int> partner;  // chord partner, in position space
};

std::optional<CircleForm> recognize_circle(const ClosedPicture& g) {
  const int count = g.mu_count();
  if (count == 0 || count % 2 != 0 || g.theta_count() * 2 != count)
    return std::nullopt;
  std::vector<int> succ(count, -1), chord_of(count, -1);
  for (int v = 0; v < count; ++v) {
    const int out = g.edge_index_from(PortRef{NodeKind::mu, v, 2});
    const int in1 = g.edge_index_into(PortRef{NodeKind::mu, v, 0});
    if (out < 0 || in1 < 0) return std::nullopt;
    const Edge& oe = g.edges()[out];
    const Edge& ie = g.edges()[in1];
    if (oe.dst.kind != NodeKind::mu || oe.dst.port != 1) return std::nullopt;
    if (ie.src.kind != NodeKind::theta) return std::nullopt;
    succ[v] = oe.dst.node;
    chord_of[v] = ie.src.node;
  }
  CircleForm form;
  form.order.reserve(count);
  int v = 0;
  do {
    form.order.push_back(v);
    v = succ[v];
  } while (v != 0 && static_cast<int>(form.order.size()) <= count);
  if (static_cast<int>(form.order.size()) != count || v != 0) return std::nullopt;

  std::map<int, std::vector<int>> chord_positions;
  for (int pos = 0; pos < count; ++pos)
    chord_positions[chord_of[form.order[pos]]].push_back(pos);
  form.partner.assign(count, -1);
  for (const auto& [chord, positions] : chord_positions) {
    if (positions.size() != 2) return std::nullopt;
    form.partner[positions[0]] = positions[1];
    form.partner[positions[1]] = positions[0];
  }
  return form;
}

BigInt int_pow(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

ContractionPlan plan_sweep(const CircleForm& form, int dimension) {
  const int count = static_cast<int>(form.order.size());
  const auto sweep_partner_for = [&](int cut) {
    std::vector<int> sp(count);
    for (int s = 0; s < count; ++s)
      sp[s] = (form.partner[(s + cut) % count] - cut + count) % count;
    return sp;
  };
  const auto peak_for = [&](const std::vector<int>& sp) {
    int open = 0, peak = 2;
    for (int s = 0; s < count; ++s) {
      open += sp[s] > s ? 1 : -1;
      peak = std::max(peak, 2 + open);
    }
    return peak;
  };

  int best_cut = 0;
  int best_peak = peak_for(sweep_partner_for(0));
  for (int cut = 1; cut < count; ++cut) {
    const int peak = peak_for(sweep_partner_for(cut));
    if (peak < best_peak) {
      best_peak = peak;
      best_cut = cut;
    }
  }

  ContractionPlan plan;
  plan.strategy = ContractionPlan::Strategy::circle_sweep;
  plan.dimension = dimension;
  plan.cut = best_cut;
  plan.sweep_partner = sweep_partner_for(best_cut);
  plan.mu_order.resize(count);
  for (int s = 0; s < count; ++s)
    plan.mu_order[s] = form.order[(s + best_cut) % count];
  plan.peak_width = best_peak;
  plan.peak_entries = int_pow(dimension, best_peak);
  plan.predicted_cost = BigInt(dimension) * dimension;  // the closing trace

  std::vector<int> open_positions;  // opening sweep index per open chord
  for (int s = 0; s < count; ++s) {
    SweepStep step;
    step.position = s;
    step.opens = plan.sweep_partner[s] > s;
    if (step.opens) {
      open_positions.push_back(s);
      step.close_slot = -1;
    } else {
      const auto it = std::find(open_positions.begin(), open_positions.end(),
                                plan.sweep_partner[s]);
      step.close_slot = static_cast<int>(it - open_positions.begin());
      open_positions.erase(it);
    }
    step.open_after = static_cast<int>(open_positions.size());
    plan.steps.push_back(step);
    // Dense cost model: output width 2 + open_after, one contracted index
    // when opening, two (circle + chord leg) when closing.
    plan.predicted_cost +=
        int_pow(dimension, 2 + step.open_after + (step.opens ? 1 : 2));
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Greedy pairwise planning for arbitrary closed networks.

std::vector<int> node_axes(const ClosedPicture& g, NodeKind kind, int node) {
  const int ports = kind == NodeKind::mu ? 3 : 2;
  std::vector<int> axes;
  for (int port = 0; port < ports; ++port) {
    const PortRef ref{kind, node, port};
    for (size_t e = 0; e < g.edges().size(); ++e)
      if (g.edges()[e].src == ref || g.edges()[e].dst == ref)
        axes.push_back(static_cast<int>(e));
  }
  // Self-edges are traced away at materialization.
  std::vector<int> out;
  for (int a : axes)
    if (std::count(axes.begin(), axes.end(), a) == 1) out.push_back(a);
  return out;
}

ContractionPlan plan_greedy(const ClosedPicture& g, int dimension) {
  ContractionPlan plan;
  plan.strategy = ContractionPlan::Strategy::greedy_pairwise;
  plan.dimension = dimension;
  plan.predicted_cost = 0;

  std::vector<std::optional<std::vector<int>>> alive;
  for (int v = 0; v < g.mu_count(); ++v) {
    auto axes = node_axes(g, NodeKind::mu, v);
    std::sort(axes.begin(), axes.end());
    alive.emplace_back(std::move(axes));
  }
  for (int t = 0; t < g.theta_count(); ++t) {
    auto axes = node_axes(g, NodeKind::theta, t);
    std::sort(axes.begin(), axes.end());
    alive.emplace_back(std::move(axes));
  }
  int remaining = static_cast<int>(alive.size());
  for (const auto& a : alive)
    plan.peak_width = std::max(plan.peak_width, static_cast<int>(a->size()));

  while (remaining > 1) {
    int best_i = -1, best_j = -1, best_result = 0, best_cost = 0;
    bool found = false;
    for (size_t i = 0; i < alive.size(); ++i) {
      if (!alive[i]) continue;
      for (size_t j = i + 1; j < alive.size(); ++j) {
        if (!alive[j]) continue;
        std::vector<int> shared;
        std::set_intersection(alive[i]->begin(), alive[i]->end(),
                              alive[j]->begin(), alive[j]->end(),
                              std::back_inserter(shared));
        if (shared.empty()) continue;
        const int result_w = static_cast<int>(alive[i]->size() + alive[j]->size() -
                                              2 * shared.size());
        const int cost_w = static_cast<int>(alive[i]->size() + alive[j]->size() -
                                            shared.size());
        if (!found || std::tie(result_w, cost_w, i, j) <
                          std::tie(best_result, best_cost, best_i, best_j)) {
          found = true;
          best_i = static_cast<int>(i);
          best_j = static_cast<int>(j);
          best_result = result_w;
          best_cost = cost_w;
        }
      }
    }
    if (!found) {
      // Only rank-0 remnants of distinct components are left; multiply them.
      int first = -1, second = -1;
      for (size_t i = 0; i < alive.size() && second < 0; ++i)
        if (alive[i]) (first < 0 ? first : second) = static_cast<int>(i);
      best_i = first;
      best_j = second;
      best_result = static_cast<int>(alive[first]->size() + alive[second]->size());
      best_cost = best_result;
    }
    std::vector<int> merged;
    std::set_symmetric_difference(alive[best_i]->begin(), alive[best_i]->end(),
                                  alive[best_j]->begin(), alive[best_j]->end(),
                                  std::back_inserter(merged));
    plan.merges.push_back(MergeStep{best_i, best_j, best_result, best_cost});
    plan.predicted_cost += int_pow(dimension, best_cost);
    plan.peak_width = std::max(plan.peak_width, best_result);
    alive[best_i].reset();
    alive[best_j].reset();
    alive.emplace_back(std::move(merged));
    --remaining;
  }
  plan.peak_entries = int_pow(dimension, plan.peak_width);
  return plan;
}

// ---------------------------------------------------------------------------
// Sweep execution.

size_t size_pow(int n, int w) {
  size_t r = 1;
  for (int i = 0; i < w; ++i) r *= static_cast<size_t>(n);
  return r;
}

// One pass around the circle. In full mode the state starts as the identity
// matrix on [cut, current]; in outer mode the cut index is fixed to c1 and
// the state starts as the basis vector e_{c1}.
template <class S>
S sweep_pass(const ContractionPlan& plan, const EvalTables<S>& t, bool outer,
             int c1) {
  const int n = t.n;
  std::vector<S> state;
  int width;
  if (outer) {
    state.assign(n, S(0));
    state[c1] = S(1);
    width = 1;
  } else {
    state.assign(size_pow(n, 2), S(0));
    for (int c = 0; c < n; ++c) state[static_cast<size_t>(c) * n + c] = S(1);
    width = 2;
  }
  std::vector<S> next;
  for (const SweepStep& step : plan.steps) {
    if (step.opens) {
      next.assign(state.size() * n, S(0));
      for (size_t idx = 0; idx < state.size(); ++idx) {
        const S& s = state[idx];
        if (s == S(0)) continue;
        const size_t prefix = idx / n;
        const int j = static_cast<int>(idx % n);
        for (const auto& [a, k, v] : t.open_by_j[j])
          next[(prefix * n + a) * n + k] += v * s;
      }
      ++width;
    } else {
      const int axis = (outer ? 0 : 1) + step.close_slot;
      const size_t stride = size_pow(n, width - 1 - axis);
      next.assign(state.size() / n, S(0));
      for (size_t idx = 0; idx < state.size(); ++idx) {
        const S& s = state[idx];
        if (s == S(0)) continue;
        const int j = static_cast<int>(idx % n);
        const int a = static_cast<int>((idx / stride) % n);
        const size_t combined = (idx / (stride * n)) * stride + idx % stride;
        const size_t base = combined - static_cast<size_t>(j);
        for (const auto& [k, v] : t.mu_by_ij[static_cast<size_t>(a) * n + j])
          next[base + k] += v * s;
      }
      --width;
    }
    state.swap(next);
  }
  if (outer) return state[c1];
  S result(0);
  for (int c = 0; c < n; ++c) result += state[static_cast<size_t>(c) * n + c];
  return result;
}

template <class S>
S run_sweep(const ContractionPlan& plan, const EvalTables<S>& t) {
  const bool outer = plan.peak_entries > BigInt(state_entry_limit<S>());
  if (!outer) return sweep_pass(plan, t, false, 0);
  S result(0);
  for (int c1 = 0; c1 < t.n; ++c1) result += sweep_pass(plan, t, true, c1);
  return result;
}

// ---------------------------------------------------------------------------
// Dense pairwise contraction for arbitrary networks.

template <class S>
struct DenseTensor {
  std::vector<int> axes;  // edge ids, every dimension n
  std::vector<S> data;
};

template <class S>
DenseTensor<S> trace_duplicates(DenseTensor<S> t, int n) {
  for (;;) {
    int first = -1, second = -1;
    for (size_t i = 0; i < t.axes.size() && second < 0; ++i)
      for (size_t j = i + 1; j < t.axes.size(); ++j)
        if (t.axes[i] == t.axes[j]) {
          first = static_cast<int>(i);
          second = static_cast<int>(j);
          break;
        }
    if (second < 0) return t;
    DenseTensor<S> out;
    for (size_t i = 0; i < t.axes.size(); ++i)
      if (static_cast<int>(i) != first && static_cast<int>(i) != second)
        out.axes.push_back(t.axes[i]);
    out.data.assign(size_pow(n, static_cast<int>(out.axes.size())), S(0));
    std::vector<size_t> stride(t.axes.size());
    for (size_t i = 0; i < t.axes.size(); ++i)
      stride[i] = size_pow(n, static_cast<int>(t.axes.size() - 1 - i));
    for (size_t idx = 0; idx < t.data.size(); ++idx) {
      if (t.data[idx] == S(0)) continue;
      if ((idx / stride[first]) % n != (idx / stride[second]) % n) continue;
      size_t out_idx = 0;
      for (size_t i = 0; i < t.axes.size(); ++i) {
        if (static_cast<int>(i) == first || static_cast<int>(i) == second) continue;
        out_idx = out_idx * n + (idx / stride[i]) % n;
      }
      out.data[out_idx] += t.data[idx];
    }
    t = std::move(out);
  }
}

template <class S>
DenseTensor<S> contract_pair(const DenseTensor<S>& a, const DenseTensor<S>& b,
                             int n) {
  std::vector<int> shared;
  for (int ax : a.axes)
    if (std::find(b.axes.begin(), b.axes.end(), ax) != b.axes.end())
      shared.push_back(ax);

  const auto rest_of = [&](const std::vector<int>& axes) {
    std::vector<int> rest;
    for (int ax : axes)
      if (std::find(shared.begin(), shared.end(), ax) == shared.end())
        rest.push_back(ax);
    return rest;
  };
  const std::vector<int> rest_a = rest_of(a.axes), rest_b = rest_of(b.axes);

  DenseTensor<S> out;
  out.axes = rest_a;
  out.axes.insert(out.axes.end(), rest_b.begin(), rest_b.end());
  out.data.assign(size_pow(n, static_cast<int>(out.axes.size())), S(0));

  const auto strides = [&](const std::vector<int>& axes) {
    std::vector<size_t> s(axes.size());
    for (size_t i = 0; i < axes.size(); ++i)
      s[i] = size_pow(n, static_cast<int>(axes.size() - 1 - i));
    return s;
  };
  const auto digit_positions = [&](const std::vector<int>& axes,
                                   const std::vector<int>& wanted) {
    std::vector<size_t> pos;
    for (int w : wanted)
      pos.push_back(std::find(axes.begin(), axes.end(), w) - axes.begin());
    return pos;
  };
  const std::vector<size_t> stride_a = strides(a.axes), stride_b = strides(b.axes);
  const std::vector<size_t> shared_in_a = digit_positions(a.axes, shared);
  const std::vector<size_t> shared_in_b = digit_positions(b.axes, shared);
  const std::vector<size_t> rest_in_a = digit_positions(a.axes, rest_a);
  const std::vector<size_t> rest_in_b = digit_positions(b.axes, rest_b);

  const auto key_of = [&](size_t idx, const std::vector<size_t>& pos,
                          const std::vector<size_t>& stride) {
    size_t key = 0;
    for (size_t p : pos) key = key * n + (idx / stride[p]) % n;
    return key;
  };

  std::map<size_t, std::vector<size_t>> buckets;
  for (size_t ib = 0; ib < b.data.size(); ++ib)
    if (!(b.data[ib] == S(0)))
      buckets[key_of(ib, shared_in_b, stride_b)].push_back(ib);

  for (size_t ia = 0; ia < a.data.size(); ++ia) {
    if (a.data[ia] == S(0)) continue;
    const auto it = buckets.find(key_of(ia, shared_in_a, stride_a));
    if (it == buckets.end()) continue;
    size_t base = 0;
    for (size_t p : rest_in_a) base = base * n + (ia / stride_a[p]) % n;
    for (size_t ib : it->second) {
      size_t out_idx = base;
      for (size_t p : rest_in_b) out_idx = out_idx * n + (ib / stride_b[p]) % n;
      out.data[out_idx] += a.data[ia] * b.data[ib];
    }
  }
  return out;
}

template <class S>
DenseTensor<S> materialize_node(const ClosedPicture& g, NodeKind kind, int node,
                                const EvalTables<S>& t) {
  const int n = t.n;
  const int ports = kind == NodeKind::mu ? 3 : 2;
  DenseTensor<S> out;
  for (int port = 0; port < ports; ++port) {
    const PortRef ref{kind, node, port};
    const int e = ref.is_source() ? g.edge_index_from(ref) : g.edge_index_into(ref);
    out.axes.push_back(e);
  }
  out.data.assign(size_pow(n, ports), S(0));
  if (kind == NodeKind::theta) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out.data[static_cast<size_t>(i) * n + j] = t.theta[static_cast<size_t>(i) * n + j];
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (const auto& [k, v] : t.mu_by_ij[static_cast<size_t>(i) * n + j])
          out.data[(static_cast<size_t>(i) * n + j) * n + k] = v;
  }
  return trace_duplicates(std::move(out), n);
}

template <class S>
S run_greedy(const ClosedPicture& g, const ContractionPlan& plan,
             const EvalTables<S>& t) {
  std::vector<std::optional<DenseTensor<S>>> work;
  for (int v = 0; v < g.mu_count(); ++v)
    work.emplace_back(materialize_node(g, NodeKind::mu, v, t));
  for (int th = 0; th < g.theta_count(); ++th)
    work.emplace_back(materialize_node(g, NodeKind::theta, th, t));
  if (work.empty()) return S(1);
  for (const MergeStep& m : plan.merges) {
    DenseTensor<S> merged = contract_pair(*work[m.lhs], *work[m.rhs], t.n);
    work[m.lhs].reset();
    work[m.rhs].reset();
    work.emplace_back(std::move(merged));
  }
  const DenseTensor<S>& last = *work.back();
  if (!last.axes.empty())
    throw Error(ErrorCode::InvariantViolated, "contraction left open indices");
  return last.data[0];
}

}  // namespace

// ---------------------------------------------------------------------------

TensorNetwork build_network(const ChordDiagram& d, int dimension) {
  if (dimension < 1)
    throw Error(ErrorCode::MalformedInput, "dimension must be >= 1");
  return TensorNetwork{picture_from_diagram(d), dimension};
}

ContractionPlan plan_contraction(const TensorNetwork& net) {
  const PictureReport report = validate_picture(net.graph);
  if (!report.ok())
    throw Error(ErrorCode::MalformedInput,
                "network is not closed: " + report.violations.front());
  if (const auto form = recognize_circle(net.graph))
    return plan_sweep(*form, net.dimension);
  return plan_greedy(net.graph, net.dimension);
}

BigInt naive_cost(int dimension, int chords) {
  return BigInt(3) * chords * int_pow(dimension, 4 * chords);
}

struct DiagramEvaluator::Impl {
  EvalTables<Rational> exact;
  EvalTables<double> approx;
};

DiagramEvaluator::DiagramEvaluator(const StructureConstants& sc,
                                   const KillingData& kd)
    : n_(sc.dim()) {
  if (kd.dim() != sc.dim())
    throw Error(ErrorCode::MalformedInput,
                "Killing data does not match the algebra dimension");
  auto impl = std::make_unique<Impl>();
  impl->exact = build_tables<Rational>(sc, kd);
  impl->approx = build_tables<double>(sc, kd);
  impl_ = std::move(impl);
}

DiagramEvaluator::~DiagramEvaluator() = default;
DiagramEvaluator::DiagramEvaluator(DiagramEvaluator&&) noexcept = default;

Rational DiagramEvaluator::exact(const ChordDiagram& d) const {
  return run_sweep(plan_contraction(build_network(d, n_)), impl_->exact);
}

double DiagramEvaluator::approx(const ChordDiagram& d) const {
  return run_sweep(plan_contraction(build_network(d, n_)), impl_->approx);
}

Rational evaluate_diagram(const ChordDiagram& d, const StructureConstants& sc,
                          const KillingData& kd) {
  return DiagramEvaluator(sc, kd).exact(d);
}

double evaluate_float(const ChordDiagram& d, const StructureConstants& sc,
                      const KillingData& kd) {
  return DiagramEvaluator(sc, kd).approx(d);
}

Rational evaluate_naive(const ChordDiagram& d, const StructureConstants& sc,
                        const KillingData& kd, const BigInt& budget) {
  const int n = sc.dim();
  if (kd.dim() != n)
    throw Error(ErrorCode::MalformedInput,
                "Killing data does not match the algebra dimension");
  const int points = d.points();
  if (int_pow(n, 2 * points) > budget)
    throw Error(ErrorCode::BudgetExceeded,
                "naive evaluation would need " + int_pow(n, 2 * points).str() +
                    " iterations (budget " + budget.str() + ")");

  std::vector<std::vector<std::tuple<int, int, Rational>>> by_j(n);
  for (const auto& [key, v] : sc.entries())
    by_j[key.j].emplace_back(key.i, key.k, v);

  std::vector<int> leg(points, 0);
  Rational total = 0;
  // rec(p, c): sum over assignments of positions p..2m-1 given c_p = c.
  const auto rec = [&](auto&& self, int p, int c0, int c, const Rational& prod) -> void {
    if (p == points) {
      if (c != c0) return;
      Rational term = prod;
      for (int x = 0; x < points; ++x) {
        const int y = d.partner()[x];
        if (y > x) term *= kd.theta(leg[x], leg[y]);
      }
      total += term;
      return;
    }
    for (const auto& [i, k, v] : by_j[c]) {
      leg[p] = i;
      self(self, p + 1, c0, k, Rational(prod * v));
    }
  };
  for (int c0 = 0; c0 < n; ++c0) rec(rec, 0, c0, c0, Rational(1));
  return total;
}

Rational contract_network_exact(const TensorNetwork& net,
                                const StructureConstants& sc,
                                const KillingData& kd) {
  if (net.dimension != sc.dim() || kd.dim() != sc.dim())
    throw Error(ErrorCode::MalformedInput,
                "network dimension does not match the algebra");
  const PictureReport report = validate_picture(net.graph);
  if (!report.ok())
    throw Error(ErrorCode::MalformedInput,
                "network is not closed: " + report.violations.front());
  if (net.graph.mu_count() == 0 && net.graph.theta_count() == 0) return 1;
  const ContractionPlan plan = plan_greedy(net.graph, net.dimension);
  const EvalTables<Rational> tables = build_tables<Rational>(sc, kd);
  return run_greedy(net.graph, plan, tables);
}

}  // namespace liechord
