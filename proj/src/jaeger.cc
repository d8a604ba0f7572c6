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

#include "fsgraph/jaeger.h"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "fsgraph/parallel.h"

namespace fsgraph {

namespace {

// For each vertex, the index (into `s`) of the matching edge covering it.
std::vector<int> cover_index(const MultiGraph& g, std::span<const int> s) {
  std::vector<int> cover(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    const Edge& e = g.edge(s[i]);
    cover[e.u] = cover[e.v] = i;
  }
  return cover;
}

// Adjacency between matching edges, indices into `s`.
std::vector<std::vector<int>> conflict_graph(const MultiGraph& g,
                                             std::span<const int> s) {
  const std::vector<int> cover = cover_index(g, s);
  std::vector<std::vector<int>> adj(s.size());
  for (const Edge& e : g.edges()) {
    const int a = cover[e.u];
    const int b = cover[e.v];
    if (a < 0 || b < 0 || a == b) continue;
    if (std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end()) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

}  // namespace

bool is_strong_matching(const MultiGraph& g, std::span<const int> s) {
  if (!is_matching(g, s)) {
    throw std::invalid_argument("is_strong_matching: edge set is not a matching");
  }
  const std::vector<int> cover = cover_index(g, s);
  for (const Edge& e : g.edges()) {
    const int a = cover[e.u];
    const int b = cover[e.v];
    if (a >= 0 && b >= 0 && a != b) return false;
  }
  return true;
}

bool is_strong_matching(const FSGraph& g, std::span<const int> s) {
  return is_strong_matching(g.graph(), s);
}

std::optional<JaegerDecomposition> jaeger_decompose(const Matching& m) {
  const MultiGraph& g = m.host().graph();
  const EdgeSet& s = m.edges();  // sorted, so index order is serial order
  const auto adj = conflict_graph(g, s);
  std::vector<int> side(s.size(), -1);
  JaegerDecomposition d;
  for (int root = 0; root < static_cast<int>(s.size()); ++root) {
    if (side[root] >= 0) continue;
    ++d.component_count;
    side[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int a = q.front();
      q.pop();
      for (int b : adj[a]) {
        if (side[b] < 0) {
          side[b] = 1 - side[a];
          q.push(b);
        } else if (side[b] == side[a]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    (side[i] == 0 ? d.blue : d.red).push_back(s[i]);
  }
  return d;
}

std::vector<JaegerMatching> enumerate_jaeger_matchings(const FSGraph& g) {
  const std::vector<Matching> all = enumerate_perfect_matchings(g);
  std::vector<std::optional<JaegerDecomposition>> found(all.size());
  parallel_for(all.size(), default_thread_count(),
               [&](std::size_t i) { found[i] = jaeger_decompose(all[i]); });
  std::vector<JaegerMatching> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (found[i]) out.push_back({all[i], *found[i]});
  }
  return out;
}

bool is_jaeger_graph(const FSGraph& g) {
  return !enumerate_jaeger_matchings(g).empty();
}

bool berge_fulkerson_check(std::span<const Matching> ms) {
  if (ms.size() != 6) {
    throw std::invalid_argument("berge_fulkerson_check: expected exactly 6 matchings");
  }
  const FSGraph& host = ms.front().host();
  std::vector<int> hits(host.graph().edge_count(), 0);
  for (const Matching& m : ms) {
    if (&m.host() != &host) {
      throw std::invalid_argument("berge_fulkerson_check: matchings of different hosts");
    }
    for (int s : m.edges()) ++hits[s];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 2; });
}

}  // namespace fsgraph
