// Copyright 2026 The fsgraph Authors.
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

#include "fsgraph/graph_core.h"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace fsgraph {

char role_char(Role r) {
  switch (r) {
    case Role::kT:
      return 't';
    case Role::kX:
      return 'x';
    case Role::kY:
      return 'y';
    case Role::kZ:
      return 'z';
  }
  return '?';
}

int MultiGraph::add_vertex(std::string name) {
  names_.push_back(std::move(name));
  incidence_.emplace_back();
  return vertex_count() - 1;
}

int MultiGraph::add_edge(int u, int v, EdgeTag tag) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw std::invalid_argument("add_edge: endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("add_edge: self-loops not allowed");
  const int serial = edge_count();
  edges_.push_back(Edge{serial, u, v, tag});
  incidence_[u].push_back(serial);
  incidence_[v].push_back(serial);
  return serial;
}

std::optional<int> MultiGraph::find_vertex(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

bool MultiGraph::is_cubic() const {
  return std::all_of(incidence_.begin(), incidence_.end(),
                     [](const auto& inc) { return inc.size() == 3; });
}

bool MultiGraph::has_parallel_edges() const {
  for (int v = 0; v < vertex_count(); ++v) {
    const auto& inc = incidence_[v];
    for (size_t a = 0; a < inc.size(); ++a) {
      for (size_t b = a + 1; b < inc.size(); ++b) {
        if (edges_[inc[a]].other(v) == edges_[inc[b]].other(v)) return true;
      }
    }
  }
  return false;
}

bool MultiGraph::incidence_consistent() const {
  std::vector<std::vector<int>> rebuilt(names_.size());
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count() || e.v >= vertex_count()) {
      return false;
    }
    rebuilt[e.u].push_back(e.serial);
    rebuilt[e.v].push_back(e.serial);
  }
  for (size_t s = 0; s < edges_.size(); ++s) {
    if (edges_[s].serial != static_cast<int>(s)) return false;
  }
  return rebuilt == incidence_;
}

namespace {

// For each vertex, the (at most two) member edges incident to it.
struct SetIncidence {
  std::vector<std::array<int, 2>> ends;
  std::vector<int> count;
};

SetIncidence index_edge_set(const MultiGraph& g, std::span<const int> edges) {
  SetIncidence si;
  si.ends.assign(g.vertex_count(), {-1, -1});
  si.count.assign(g.vertex_count(), 0);
  std::vector<char> seen(g.edge_count(), 0);
  for (int s : edges) {
    if (s < 0 || s >= g.edge_count()) {
      throw std::invalid_argument("cycle_decomposition: serial out of range");
    }
    if (seen[s]) {
      throw std::invalid_argument("cycle_decomposition: repeated serial");
    }
    seen[s] = 1;
    const Edge& e = g.edge(s);
    for (int w : {e.u, e.v}) {
      if (si.count[w] >= 2) {
        throw std::invalid_argument(
            "cycle_decomposition: vertex " + g.name(w) +
            " has more than two incident edges in the set");
      }
      si.ends[w][si.count[w]++] = s;
    }
  }
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (si.count[w] == 1) {
      throw std::invalid_argument("cycle_decomposition: vertex " + g.name(w) +
                                  " has odd incidence in the set");
    }
  }
  return si;
}

}  // namespace

std::vector<Cycle> cycle_decomposition(const MultiGraph& g,
                                       std::span<const int> edges) {
  const SetIncidence si = index_edge_set(g, edges);
  std::vector<int> order(edges.begin(), edges.end());
  std::sort(order.begin(), order.end());

  auto next_at = [&](int w, int from) {
    const auto& pair = si.ends[w];
    return pair[0] == from ? pair[1] : pair[0];
  };

  std::vector<char> visited(g.edge_count(), 0);
  std::vector<Cycle> cycles;
  for (int start : order) {
    if (visited[start]) continue;
    const Edge& e0 = g.edge(start);
    // Leave e0 through the endpoint whose other member edge has the lower
    // serial; for a parallel pair both choices coincide.
    int head = e0.u;
    int tail = e0.v;
    if (next_at(e0.v, start) < next_at(e0.u, start)) std::swap(head, tail);

    Cycle c;
    int current = start;
    int at = tail;
    do {
      visited[current] = 1;
      c.edges.push_back(current);
      c.vertices.push_back(at);
      at = g.edge(current).other(at);
      current = next_at(at, current);
    } while (current != start);
    cycles.push_back(std::move(c));
  }
  return cycles;
}

int induced_cycle_count(const MultiGraph& g, std::span<const int> verts) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : verts) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("induced_cycle_count: vertex out of range");
    }
    in[v] = 1;
  }
  EdgeSet induced;
  std::vector<int> degree(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) {
      induced.push_back(e.serial);
      ++degree[e.u];
      ++degree[e.v];
    }
  }
  for (int v : verts) {
    if (degree[v] != 2) {
      throw std::invalid_argument("induced_cycle_count: induced subgraph is "
                                  "not 2-regular at " + g.name(v));
    }
  }
  return static_cast<int>(cycle_decomposition(g, induced).size());
}

EdgeSet complement_edges(const MultiGraph& g, std::span<const int> edges) {
  std::vector<char> in(g.edge_count(), 0);
  for (int s : edges) in.at(s) = 1;
  EdgeSet out;
  out.reserve(g.edge_count() - edges.size());
  for (int s = 0; s < g.edge_count(); ++s) {
    if (!in[s]) out.push_back(s);
  }
  return out;
}

bool is_matching(const MultiGraph& g, std::span<const int> edges) {
  std::vector<char> covered(g.vertex_count(), 0);
  std::vector<char> seen(g.edge_count(), 0);
  for (int s : edges) {
    if (s < 0 || s >= g.edge_count() || seen[s]) return false;
    seen[s] = 1;
    const Edge& e = g.edge(s);
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = 1;
  }
  return true;
}

bool is_perfect_matching(const MultiGraph& g, std::span<const int> edges) {
  return 2 * static_cast<int>(edges.size()) == g.vertex_count() &&
         is_matching(g, edges);
}

MultiGraph inflate_vertex(const MultiGraph& g, int v) {
  if (!g.is_cubic()) {
    throw std::invalid_argument("inflate_vertex: host graph is not cubic");
  }
  if (v < 0 || v >= g.vertex_count()) {
    throw std::invalid_argument("inflate_vertex: vertex out of range");
  }
  const auto inc = g.incident(v);
  std::array<int, 3> nbr{};
  for (int i = 0; i < 3; ++i) nbr[i] = g.edge(inc[i]).other(v);
  if (nbr[0] == nbr[1] || nbr[0] == nbr[2] || nbr[1] == nbr[2]) {
    throw std::invalid_argument(
        "inflate_vertex: vertex has an incident parallel pair");
  }

  MultiGraph out;
  for (int w = 0; w < g.vertex_count(); ++w) {
    out.add_vertex(w == v ? g.name(v) + "_0" : g.name(w));
  }
  const std::array<int, 3> tri = {v, out.add_vertex(g.name(v) + "_1"),
                                  out.add_vertex(g.name(v) + "_2")};
  for (const Edge& e : g.edges()) {
    if (!e.touches(v)) {
      out.add_edge(e.u, e.v, e.tag);
      continue;
    }
    const int slot = static_cast<int>(
        std::find(inc.begin(), inc.end(), e.serial) - inc.begin());
    out.add_edge(tri[slot], e.other(v), e.tag);
  }
  out.add_edge(tri[0], tri[1]);
  out.add_edge(tri[1], tri[2]);
  out.add_edge(tri[0], tri[2]);
  return out;
}

}  // namespace fsgraph
