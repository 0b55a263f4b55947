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

#include "liechord/chord_diagram.hpp"

#include <algorithm>
#include <charconv>

namespace liechord {

ChordDiagram::ChordDiagram(std::vector<int> partner) : partner_(std::move(partner)) {
  const int n = static_cast<int>(partner_.size());
  if (n == 0 || n % 2 != 0)
    throw Error(ErrorCode::MalformedInput, "matching needs an even, positive point count");
  for (int p = 0; p < n; ++p) {
    const int q = partner_[p];
    if (q < 0 || q >= n || q == p || partner_[q] != p)
      throw Error(ErrorCode::MalformedInput, "not a perfect matching");
  }
}

ChordDiagram ChordDiagram::from_pairs(int m,
                                      const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> partner(2 * m, -1);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= 2 * m || b >= 2 * m || a == b ||
        partner[a] != -1 || partner[b] != -1)
      throw Error(ErrorCode::MalformedInput, "not a perfect matching");
    partner[a] = b;
    partner[b] = a;
  }
  return ChordDiagram(std::move(partner));
}

ChordDiagram ChordDiagram::rotated(int r) const {
  const int n = points();
  r = ((r % n) + n) % n;
  std::vector<int> out(n);
  for (int p = 0; p < n; ++p) out[(p + r) % n] = (partner_[p] + r) % n;
  return ChordDiagram(std::move(out));
}

ChordDiagram ChordDiagram::reflected() const {
  const int n = points();
  std::vector<int> out(n);
  for (int p = 0; p < n; ++p) out[n - 1 - p] = n - 1 - partner_[p];
  return ChordDiagram(std::move(out));
}

bool ChordDiagram::is_canonical() const {
  return *this == canonicalize(*this);
}

ChordDiagram canonicalize(const ChordDiagram& d) {
  ChordDiagram best = d;
  for (int r = 1; r < d.points(); ++r) {
    ChordDiagram cand = d.rotated(r);
    if (cand < best) best = cand;
  }
  return best;
}

ChordDiagram dihedral_canonicalize(const ChordDiagram& d) {
  return std::min(canonicalize(d), canonicalize(d.reflected()));
}

ChordDiagram parse_diagram(std::string_view text) {
  const auto fail = [&]() -> ChordDiagram {
    throw Error(ErrorCode::MalformedInput,
                "bad diagram '" + std::string(text) + "' (want \"a-b,c-d,...\")");
  };
  const auto parse_point = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) fail();
    return v - 1;
  };
  std::vector<std::pair<int, int>> pairs;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view item =
        text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    size_t dash = item.find('-');
    if (dash == std::string_view::npos || dash == 0 || dash + 1 == item.size()) fail();
    pairs.emplace_back(parse_point(item.substr(0, dash)),
                       parse_point(item.substr(dash + 1)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  const int m = static_cast<int>(pairs.size());
  for (const auto& [a, b] : pairs)
    if (a >= 2 * m || b >= 2 * m) fail();
  try {
    return canonicalize(ChordDiagram::from_pairs(m, pairs));
  } catch (const Error&) {
    return fail();
  }
}

std::string format_diagram(const ChordDiagram& d) {
  std::string out;
  for (int p = 0; p < d.points(); ++p) {
    if (d.partner()[p] < p) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(p + 1) + "-" + std::to_string(d.partner()[p] + 1);
  }
  return out;
}

namespace {

void enumerate_rec(std::vector<int>& partner, int n, Symmetry symmetry,
                   std::vector<ChordDiagram>& out) {
  int p = 0;
  while (p < n && partner[p] != -1) ++p;
  if (p == n) {
    ChordDiagram d{partner};
    if (symmetry == Symmetry::rotation && !d.is_canonical()) return;
    if (symmetry == Symmetry::dihedral && !(d == dihedral_canonicalize(d))) return;
    out.push_back(std::move(d));
    return;
  }
  for (int q = p + 1; q < n; ++q) {
    if (partner[q] != -1) continue;
    partner[p] = q;
    partner[q] = p;
    enumerate_rec(partner, n, symmetry, out);
    partner[p] = -1;
    partner[q] = -1;
  }
}

}  // namespace

std::vector<ChordDiagram> enumerate_diagrams(int m, Symmetry symmetry) {
  if (m < 1) throw Error(ErrorCode::MalformedInput, "chord count must be >= 1");
  std::vector<int> partner(2 * m, -1);
  std::vector<ChordDiagram> out;
  enumerate_rec(partner, 2 * m, symmetry, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace liechord
