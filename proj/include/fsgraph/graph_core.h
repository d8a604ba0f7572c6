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

#ifndef FSGRAPH_GRAPH_CORE_H_
#define FSGRAPH_GRAPH_CORE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fsgraph {

// Role of a vertex inside a claw: the center t_i or one of the three
// external vertices x_i, y_i, z_i.
enum class Role : std::uint8_t { kT = 0, kX = 1, kY = 2, kZ = 3 };

inline constexpr Role kExternalRoles[3] = {Role::kX, Role::kY, Role::kZ};

char role_char(Role r);  // 't', 'x', 'y', 'z'
// Index of an external role in {X, Y, Z}; undefined for kT.
inline int external_index(Role r) { return static_cast<int>(r) - 1; }
inline Role external_role(int index) { return static_cast<Role>(index + 1); }

// Claw-based vertex label. `claw` is always stored reduced mod k.
struct VertexId {
  int claw = 0;
  Role role = Role::kT;

  friend bool operator==(const VertexId&, const VertexId&) = default;
};

enum class EdgeKind : std::uint8_t {
  kStar,   // t_i to an external vertex of C_i
  kPath,   // external-external between C_g and C_{g+1}, g < k-1
  kSeam,   // external-external between C_{k-1} and C_0
  kPlain,  // graphs that are not built from claws
};

struct EdgeTag {
  EdgeKind kind = EdgeKind::kPlain;
  int gap = -1;  // meaningful for kPath (g) and kSeam (k-1)

  friend bool operator==(const EdgeTag&, const EdgeTag&) = default;
};

struct Edge {
  int serial = 0;
  int u = 0;
  int v = 0;
  EdgeTag tag;

  int other(int w) const { return w == u ? v : u; }
  bool touches(int w) const { return u == w || v == w; }
};

// Sorted list of edge serials.
using EdgeSet = std::vector<int>;

// A cycle as a cyclic sequence: edges[i] joins vertices[i] and
// vertices[(i + 1) % length].
struct Cycle {
  std::vector<int> edges;
  std::vector<int> vertices;

  int length() const { return static_cast<int>(edges.size()); }
};

// Undirected multigraph with dense vertex indices and dense edge serials.
// Parallel edges are distinct Edge values; all algorithms address edges by
// serial, never by endpoint pair. Self-loops are rejected.
class MultiGraph {
 public:
  MultiGraph() = default;

  int add_vertex(std::string name);
  int add_edge(int u, int v, EdgeTag tag = {});

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(int serial) const { return edges_.at(serial); }
  std::span<const Edge> edges() const { return edges_; }
  // Incident edge serials of `v` in ascending order.
  std::span<const int> incident(int v) const { return incidence_.at(v); }
  int degree(int v) const { return static_cast<int>(incidence_.at(v).size()); }

  const std::string& name(int v) const { return names_.at(v); }
  std::optional<int> find_vertex(std::string_view name) const;

  bool is_cubic() const;
  bool has_parallel_edges() const;
  // Full rescan of the incidence map against the edge list.
  bool incidence_consistent() const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

// Decomposes an edge set in which every touched vertex has exactly two
// incident edges into vertex-disjoint cycles. Cycles are ordered by their
// minimum serial; each starts at that edge and continues toward the
// lower-serial of its two neighbouring edges.
// Throws std::invalid_argument on out-of-range or repeated serials, or when
// some vertex has 1 or more than 2 incident edges in the set.
std::vector<Cycle> cycle_decomposition(const MultiGraph& g,
                                       std::span<const int> edges);

// Number of cycles of the subgraph induced on `verts`.
// Throws std::invalid_argument if that induced subgraph is not 2-regular.
int induced_cycle_count(const MultiGraph& g, std::span<const int> verts);

// Serials of edges of `g` not in `edges`, ascending.
EdgeSet complement_edges(const MultiGraph& g, std::span<const int> edges);

bool is_matching(const MultiGraph& g, std::span<const int> edges);
bool is_perfect_matching(const MultiGraph& g, std::span<const int> edges);

// Replaces `v` by a triangle. The first triangle vertex reuses index `v`,
// the other two are appended; the i-th incident edge of `v` is reattached to
// the i-th triangle vertex, and the three triangle edges are appended.
// Throws std::invalid_argument unless `g` is cubic and `v` has three
// distinct neighbours.
MultiGraph inflate_vertex(const MultiGraph& g, int v);

}  // namespace fsgraph

#endif  // FSGRAPH_GRAPH_CORE_H_
