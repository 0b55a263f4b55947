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

#ifndef LIECHORD_PICTURE_HPP
#define LIECHORD_PICTURE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "liechord/chord_diagram.hpp"

namespace liechord {

enum class NodeKind { mu, theta };

// One port of a node. mu ports: 0 = in1, 1 = in2, 2 = out. theta ports: 0, 1
// (interchangeable, both produce an index). mu inputs consume indices; mu out
// and theta ports produce them, so every edge runs source -> sink.
struct PortRef {
  NodeKind kind;
  int node;
  int port;

  bool is_source() const {
    return kind == NodeKind::theta || port == 2;
  }
  bool is_sink() const { return !is_source(); }

  auto operator<=>(const PortRef&) const = default;
};

struct Edge {
  PortRef src, dst;
  auto operator<=>(const Edge&) const = default;
};

// A directed multigraph of mu- and theta-nodes joined port-to-port. "Closed"
// means every port lies on exactly one edge; that is what validate_picture
// checks, the type itself only guarantees per-edge sanity.
class ClosedPicture {
 public:
  ClosedPicture(int mu_count, int theta_count);

  int mu_count() const { return mu_count_; }
  int theta_count() const { return theta_count_; }

  // Accepts the two ports in either order and stores source -> sink.
  // Throws MalformedInput unless exactly one end is a source.
  void add_edge(PortRef a, PortRef b);

  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<Edge>& edges_mutable() { return edges_; }

  // Linear lookups; pictures stay small. Return -1 when absent.
  int edge_index_from(const PortRef& source) const;
  int edge_index_into(const PortRef& sink) const;

  void sort_edges();
  bool operator==(const ClosedPicture&) const = default;

 private:
  void check_port(const PortRef& p) const;

  int mu_count_, theta_count_;
  std::vector<Edge> edges_;
};

struct PictureReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Empty report iff every port is used exactly once and #mu == 2 * #theta.
PictureReport validate_picture(const ClosedPicture& p);

// The tensor network of a chord diagram: one mu-node per circle position,
// one theta-node per chord; the circle enters each mu at its second input,
// the chord leg at the first.
ClosedPicture picture_from_diagram(const ChordDiagram& d);

// Uniformly random pairing of the 4k sources with the 4k sinks,
// deterministic in seed. Always structurally valid, usually wildly tangled.
ClosedPicture random_picture(int theta_count, std::uint64_t seed);

// Weakly connected components (over mu- and theta-nodes together), each with
// nodes renumbered in increasing original order.
std::vector<ClosedPicture> split_components(const ClosedPicture& p);

// Swaps the two input sources of one mu-node. The picture's value changes
// sign; callers keep the -1 on their own coefficient.
ClosedPicture swap_mu_inputs(const ClosedPicture& p, int mu_node);

// The three cyclic bracketings [[a,b],c], [[b,c],a], [[c,a],b] closed off by
// the same wiring (output into slot a, one theta across slots b and c).
// Their values sum to zero on any Lie algebra.
std::array<ClosedPicture, 3> jacobi_cyclic_triple();

// Picture file format: {"mu_nodes": N, "theta_nodes": K,
// "edges": [[node, port, node, port], ...]} with 1-based node ids and port
// names "in1" / "in2" / "out" (mu), "p1" / "p2" (theta).
ClosedPicture load_picture(std::istream& in);
ClosedPicture load_picture_file(const std::string& path);
std::string picture_to_json(const ClosedPicture& p);

}  // namespace liechord

#endif  // LIECHORD_PICTURE_HPP
