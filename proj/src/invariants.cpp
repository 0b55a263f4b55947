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

#include "liechord/invariants.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace liechord {

namespace {

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Results land by
// index, so callers see canonical order regardless of scheduling.
template <class Fn>
void parallel_for(int count, int jobs, const Fn& fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&]() {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<ChordDiagram> diagrams_up_to(int max_chords) {
  if (max_chords < 1)
    throw Error(ErrorCode::MalformedInput, "max chords must be >= 1");
  std::vector<ChordDiagram> all;
  for (int m = 1; m <= max_chords; ++m) {
    auto level = enumerate_diagrams(m, Symmetry::rotation);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

}  // namespace

InvariantVector invariant_vector(const StructureConstants& sc, int max_chords,
                                 int jobs, const std::string& label) {
  const KillingData kd = casimir_theta(sc);  // throws NotSemisimple
  const DiagramEvaluator eval(sc, kd);
  const std::vector<ChordDiagram> diagrams = diagrams_up_to(max_chords);
  std::vector<Rational> values(diagrams.size());
  parallel_for(static_cast<int>(diagrams.size()), jobs,
               [&](int i) { values[i] = eval.exact(diagrams[i]); });
  InvariantVector out;
  out.label = label;
  out.max_chords = max_chords;
  for (size_t i = 0; i < diagrams.size(); ++i)
    out.values.emplace_back(diagrams[i], std::move(values[i]));
  return out;
}

std::vector<std::pair<ChordDiagram, double>> float_invariant_scan(
    const StructureConstants& sc, int max_chords, int jobs) {
  const KillingData kd = casimir_theta(sc);
  const DiagramEvaluator eval(sc, kd);
  const std::vector<ChordDiagram> diagrams = diagrams_up_to(max_chords);
  std::vector<double> values(diagrams.size());
  parallel_for(static_cast<int>(diagrams.size()), jobs,
               [&](int i) { values[i] = eval.approx(diagrams[i]); });
  std::vector<std::pair<ChordDiagram, double>> out;
  for (size_t i = 0; i < diagrams.size(); ++i)
    out.emplace_back(diagrams[i], values[i]);
  return out;
}

Verdict compare_algebras(const StructureConstants& a,
                         const StructureConstants& b, int max_chords,
                         const CompareOptions& options) {
  const KillingData kda = casimir_theta(a);
  const KillingData kdb = casimir_theta(b);
  const DiagramEvaluator ea(a, kda), eb(b, kdb);
  const ChordDiagram one_chord({1, 0});

  if (a.dim() != b.dim())
    return Verdict{Verdict::Kind::distinct, 1, one_chord, ea.exact(one_chord),
                   eb.exact(one_chord)};

  const auto float_differs = [](double x, double y) {
    return std::abs(x - y) > 1e-6 * (1.0 + std::max(std::abs(x), std::abs(y)));
  };

  for (int m = 1; m <= max_chords; ++m) {
    const std::vector<ChordDiagram> diagrams =
        enumerate_diagrams(m, Symmetry::rotation);
    const int count = static_cast<int>(diagrams.size());

    std::vector<char> needs_exact(diagrams.size(), 1);
    if (options.float_prescreen) {
      std::vector<double> fa(count), fb(count);
      parallel_for(count, options.jobs, [&](int i) {
        fa[i] = ea.approx(diagrams[i]);
        fb[i] = eb.approx(diagrams[i]);
      });
      // Confirm the flagged diagrams exactly, in canonical order.
      for (int i = 0; i < count; ++i) {
        if (!float_differs(fa[i], fb[i])) continue;
        const Rational va = ea.exact(diagrams[i]);
        const Rational vb = eb.exact(diagrams[i]);
        needs_exact[i] = 0;
        if (va != vb)
          return Verdict{Verdict::Kind::distinct, m, diagrams[i], va, vb};
      }
    }
    // Exact verification of everything not already confirmed.
    std::vector<std::optional<std::pair<Rational, Rational>>> exact(count);
    parallel_for(count, options.jobs, [&](int i) {
      if (needs_exact[i])
        exact[i] = std::make_pair(ea.exact(diagrams[i]), eb.exact(diagrams[i]));
    });
    for (int i = 0; i < count; ++i)
      if (exact[i] && exact[i]->first != exact[i]->second)
        return Verdict{Verdict::Kind::distinct, m, diagrams[i], exact[i]->first,
                       exact[i]->second};
  }

  Verdict verdict;
  verdict.max_chords = max_chords;
  verdict.kind = BigInt(max_chords) >= theorem_bound(a.dim()).floor
                     ? Verdict::Kind::isomorphy_certified
                     : Verdict::Kind::equal_up_to;
  return verdict;
}

TheoremBound theorem_bound(int n) {
  if (n < 1) throw Error(ErrorCode::MalformedInput, "dimension must be >= 1");
  const BigInt nn(n);
  const BigInt cubic = nn * nn * nn + nn * nn;
  const BigInt square = (nn + 1) * (nn + 1);
  const BigInt power = pow(BigInt(2 * n + 1), 2 * n * n);
  TheoremBound out;
  out.value = make_rational(cubic * square * power, 8);
  out.floor = numerator(out.value) / denominator(out.value);
  return out;
}

}  // namespace liechord
