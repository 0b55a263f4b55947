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

#include "liechord/picture.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>

namespace liechord {

namespace {

std::string port_name(const PortRef& p) {
  if (p.kind == NodeKind::mu) {
    static const char* names[] = {"in1", "in2", "out"};
    return names[p.port];
  }
  return p.port == 0 ? "p1" : "p2";
}

std::string describe(const PortRef& p) {
  return std::string(p.kind == NodeKind::mu ? "mu" : "theta") +
         std::to_string(p.node + 1) + "." + port_name(p);
}

}  // namespace

ClosedPicture::ClosedPicture(int mu_count, int theta_count)
    : mu_count_(mu_count), theta_count_(theta_count) {
  if (mu_count < 0 || theta_count < 0)
    throw Error(ErrorCode::MalformedInput, "negative node count");
}

void ClosedPicture::check_port(const PortRef& p) const {
  const int limit = p.kind == NodeKind::mu ? mu_count_ : theta_count_;
  const int ports = p.kind == NodeKind::mu ? 3 : 2;
  if (p.node < 0 || p.node >= limit || p.port < 0 || p.port >= ports)
    throw Error(ErrorCode::MalformedInput, "port out of range: " + describe(p));
}

void ClosedPicture::add_edge(PortRef a, PortRef b) {
  check_port(a);
  check_port(b);
  if (a.is_sink() && b.is_source()) std::swap(a, b);
  if (!a.is_source() || !b.is_sink())
    throw Error(ErrorCode::MalformedInput,
                "edge must join a producing port to a mu input: " + describe(a) +
                    " -- " + describe(b));
  edges_.push_back(Edge{a, b});
}

int ClosedPicture::edge_index_from(const PortRef& source) const {
  for (size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].src == source) return static_cast<int>(e);
  return -1;
}

int ClosedPicture::edge_index_into(const PortRef& sink) const {
  for (size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].dst == sink) return static_cast<int>(e);
  return -1;
}

void ClosedPicture::sort_edges() { std::sort(edges_.begin(), edges_.end()); }

PictureReport validate_picture(const ClosedPicture& p) {
  PictureReport report;
  if (p.mu_count() != 2 * p.theta_count())
    report.violations.push_back(
        "node ratio: " + std::to_string(p.mu_count()) + " mu-nodes vs " +
        std::to_string(p.theta_count()) + " theta-nodes (want 2:1)");

  std::map<PortRef, int> uses;
  for (const Edge& e : p.edges()) {
    ++uses[e.src];
    ++uses[e.dst];
  }
  const auto check = [&](PortRef port) {
    const int c = uses.count(port) ? uses[port] : 0;
    if (c == 0)
      report.violations.push_back("open port: " + describe(port));
    else if (c > 1)
      report.violations.push_back("port used " + std::to_string(c) +
                                  " times: " + describe(port));
  };
  for (int v = 0; v < p.mu_count(); ++v)
    for (int port = 0; port < 3; ++port) check(PortRef{NodeKind::mu, v, port});
  for (int t = 0; t < p.theta_count(); ++t)
    for (int port = 0; port < 2; ++port) check(PortRef{NodeKind::theta, t, port});
  return report;
}

ClosedPicture picture_from_diagram(const ChordDiagram& d) {
  const int n = d.points();
  ClosedPicture p(n, d.chords());
  for (int v = 0; v < n; ++v)
    p.add_edge(PortRef{NodeKind::mu, v, 2}, PortRef{NodeKind::mu, (v + 1) % n, 1});
  int chord = 0;
  for (int v = 0; v < n; ++v) {
    if (d.partner()[v] < v) continue;
    p.add_edge(PortRef{NodeKind::theta, chord, 0}, PortRef{NodeKind::mu, v, 0});
    p.add_edge(PortRef{NodeKind::theta, chord, 1},
               PortRef{NodeKind::mu, d.partner()[v], 0});
    ++chord;
  }
  return p;
}

ClosedPicture random_picture(int theta_count, std::uint64_t seed) {
  if (theta_count < 0)
    throw Error(ErrorCode::MalformedInput, "negative theta count");
  const int k = theta_count;
  ClosedPicture p(2 * k, k);
  std::vector<PortRef> sources, sinks;
  for (int v = 0; v < 2 * k; ++v) {
    sources.push_back(PortRef{NodeKind::mu, v, 2});
    sinks.push_back(PortRef{NodeKind::mu, v, 0});
    sinks.push_back(PortRef{NodeKind::mu, v, 1});
  }
  for (int t = 0; t < k; ++t) {
    sources.push_back(PortRef{NodeKind::theta, t, 0});
    sources.push_back(PortRef{NodeKind::theta, t, 1});
  }
  std::mt19937_64 rng(seed);
  for (size_t i = sinks.size(); i > 1; --i)
    std::swap(sinks[i - 1], sinks[rng() % i]);
  for (size_t i = 0; i < sources.size(); ++i) p.add_edge(sources[i], sinks[i]);
  p.sort_edges();
  return p;
}

std::vector<ClosedPicture> split_components(const ClosedPicture& p) {
  const int total = p.mu_count() + p.theta_count();
  const auto flat = [&](const PortRef& port) {
    return port.kind == NodeKind::mu ? port.node : p.mu_count() + port.node;
  };
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : p.edges()) parent[find(flat(e.src))] = find(flat(e.dst));

  // Component ids in order of least member.
  std::map<int, int> comp_of_root;
  for (int v = 0; v < total; ++v) {
    const int r = find(v);
    if (!comp_of_root.count(r)) comp_of_root[r] = static_cast<int>(comp_of_root.size());
  }
  const int count = static_cast<int>(comp_of_root.size());

  std::vector<std::map<int, int>> mu_map(count), theta_map(count);
  for (int v = 0; v < p.mu_count(); ++v) {
    auto& m = mu_map[comp_of_root[find(v)]];
    m.emplace(v, static_cast<int>(m.size()));
  }
  for (int t = 0; t < p.theta_count(); ++t) {
    auto& m = theta_map[comp_of_root[find(p.mu_count() + t)]];
    m.emplace(t, static_cast<int>(m.size()));
  }
  std::vector<ClosedPicture> out;
  for (int c = 0; c < count; ++c)
    out.emplace_back(static_cast<int>(mu_map[c].size()),
                     static_cast<int>(theta_map[c].size()));
  for (const Edge& e : p.edges()) {
    const int c = comp_of_root[find(flat(e.src))];
    const auto remap = [&](PortRef port) {
      port.node = port.kind == NodeKind::mu ? mu_map[c].at(port.node)
                                            : theta_map[c].at(port.node);
      return port;
    };
    out[c].add_edge(remap(e.src), remap(e.dst));
  }
  for (ClosedPicture& q : out) q.sort_edges();
  return out;
}

ClosedPicture swap_mu_inputs(const ClosedPicture& p, int mu_node) {
  ClosedPicture out = p;
  const PortRef in1{NodeKind::mu, mu_node, 0}, in2{NodeKind::mu, mu_node, 1};
  for (Edge& e : out.edges_mutable()) {
    if (e.dst == in1)
      e.dst = in2;
    else if (e.dst == in2)
      e.dst = in1;
  }
  return out;
}

std::array<ClosedPicture, 3> jacobi_cyclic_triple() {
  const PortRef y_in1{NodeKind::mu, 0, 0}, y_in2{NodeKind::mu, 0, 1},
      y_out{NodeKind::mu, 0, 2};
  const PortRef z_in1{NodeKind::mu, 1, 0}, z_in2{NodeKind::mu, 1, 1},
      z_out{NodeKind::mu, 1, 2};
  const PortRef t1{NodeKind::theta, 0, 0}, t2{NodeKind::theta, 0, 1};

  // In each picture y computes the inner bracket and z the outer one; the
  // closure feeds z's output into slot a and the theta across slots b and c.
  ClosedPicture p1(2, 1);  // [[a,b],c]: y = mu(a,b), z = mu(y,c), a = y.in1
  p1.add_edge(z_out, y_in1);
  p1.add_edge(t1, y_in2);
  p1.add_edge(y_out, z_in1);
  p1.add_edge(t2, z_in2);

  ClosedPicture p2(2, 1);  // [[b,c],a]: y = mu(b,c), z = mu(y,a), a = z.in2
  p2.add_edge(t1, y_in1);
  p2.add_edge(t2, y_in2);
  p2.add_edge(y_out, z_in1);
  p2.add_edge(z_out, z_in2);

  ClosedPicture p3(2, 1);  // [[c,a],b]: y = mu(c,a), z = mu(y,b), a = y.in2
  p3.add_edge(t2, y_in1);
  p3.add_edge(z_out, y_in2);
  p3.add_edge(y_out, z_in1);
  p3.add_edge(t1, z_in2);

  for (ClosedPicture* p : {&p1, &p2, &p3}) p->sort_edges();
  return {p1, p2, p3};
}

namespace {

PortRef parse_port(const nlohmann::json& node, const nlohmann::json& port) {
  if (!node.is_number_integer() || !port.is_string())
    throw Error(ErrorCode::MalformedInput, "edge entries must be [int, str, int, str]");
  const std::string name = port.get<std::string>();
  NodeKind kind;
  int slot;
  if (name == "in1") kind = NodeKind::mu, slot = 0;
  else if (name == "in2") kind = NodeKind::mu, slot = 1;
  else if (name == "out") kind = NodeKind::mu, slot = 2;
  else if (name == "p1") kind = NodeKind::theta, slot = 0;
  else if (name == "p2") kind = NodeKind::theta, slot = 1;
  else throw Error(ErrorCode::MalformedInput, "unknown port name '" + name + "'");
  return PortRef{kind, node.get<int>() - 1, slot};
}

}  // namespace

ClosedPicture load_picture(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("mu_nodes") || !doc.contains("theta_nodes") ||
      !doc.contains("edges") || !doc["mu_nodes"].is_number_integer() ||
      !doc["theta_nodes"].is_number_integer() || !doc["edges"].is_array())
    throw Error(ErrorCode::MalformedInput,
                "picture file must be {\"mu_nodes\": N, \"theta_nodes\": K, "
                "\"edges\": [[node, port, node, port], ...]}");
  ClosedPicture p(doc["mu_nodes"].get<int>(), doc["theta_nodes"].get<int>());
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 4)
      throw Error(ErrorCode::MalformedInput, "edge entries must be [int, str, int, str]");
    p.add_edge(parse_port(e[0], e[1]), parse_port(e[2], e[3]));
  }
  p.sort_edges();
  return p;
}

ClosedPicture load_picture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  return load_picture(in);
}

std::string picture_to_json(const ClosedPicture& p) {
  ClosedPicture sorted = p;
  sorted.sort_edges();
  nlohmann::ordered_json doc;
  doc["mu_nodes"] = p.mu_count();
  doc["theta_nodes"] = p.theta_count();
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : sorted.edges())
    doc["edges"].push_back(
        {e.src.node + 1, port_name(e.src), e.dst.node + 1, port_name(e.dst)});
  return doc.dump();
}

}  // namespace liechord
