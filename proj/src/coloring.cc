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

#include "fsgraph/coloring.h"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "fsgraph/matchings.h"

namespace fsgraph {

std::array<EdgeSet, 3> EdgeColoring::classes() const {
  std::array<EdgeSet, 3> out;
  for (int s = 0; s < static_cast<int>(color.size()); ++s) out.at(color[s]).push_back(s);
  return out;
}

bool is_proper_3_edge_coloring(const MultiGraph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.color.size()) != g.edge_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    unsigned seen = 0;
    for (int s : g.incident(v)) {
      const int col = c.color[s];
      if (col < 0 || col > 2 || (seen >> col & 1u)) return false;
      seen |= 1u << col;
    }
  }
  return true;
}

namespace {

class ColoringSearch {
 public:
  explicit ColoringSearch(const MultiGraph& g)
      : g_(g), color_(g.edge_count(), -1), used_(g.vertex_count(), 0) {}

  std::optional<EdgeColoring> run() {
    if (g_.vertex_count() == 0) return EdgeColoring{};
    const auto first = g_.incident(0);
    for (int c = 0; c < 3; ++c) {
      if (!assign(first[c], c)) return std::nullopt;
    }
    if (!propagate(0) || !solve()) return std::nullopt;
    return EdgeColoring{color_};
  }

 private:
  bool assign(int e, int c) {
    const Edge& edge = g_.edge(e);
    const std::uint8_t bit = static_cast<std::uint8_t>(1u << c);
    if ((used_[edge.u] | used_[edge.v]) & bit) return false;
    color_[e] = c;
    used_[edge.u] |= bit;
    used_[edge.v] |= bit;
    trail_.push_back(e);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const int e = trail_.back();
      trail_.pop_back();
      const Edge& edge = g_.edge(e);
      const std::uint8_t bit = static_cast<std::uint8_t>(1u << color_[e]);
      used_[edge.u] &= static_cast<std::uint8_t>(~bit);
      used_[edge.v] &= static_cast<std::uint8_t>(~bit);
      color_[e] = -1;
    }
  }

  // A vertex with two coloured edges forces its third.
  bool propagate(std::size_t from) {
    for (std::size_t i = from; i < trail_.size(); ++i) {
      const Edge& edge = g_.edge(trail_[i]);
      for (int w : {edge.u, edge.v}) {
        if (std::popcount(used_[w]) != 2) continue;
        for (int f : g_.incident(w)) {
          if (color_[f] >= 0) continue;
          const int missing = std::countr_zero(static_cast<unsigned>(~used_[w] & 7u));
          if (!assign(f, missing)) return false;
        }
      }
    }
    return true;
  }

  bool solve() {
    int best = -1;
    int best_free = 4;
    for (int e = 0; e < g_.edge_count(); ++e) {
      if (color_[e] >= 0) continue;
      const Edge& edge = g_.edge(e);
      const int free = 3 - std::popcount(static_cast<unsigned>(used_[edge.u] | used_[edge.v]));
      if (free < best_free) {
        best = e;
        best_free = free;
        if (free <= 1) break;
      }
    }
    if (best < 0) return true;
    if (best_free == 0) return false;
    const Edge& edge = g_.edge(best);
    const unsigned taken = used_[edge.u] | used_[edge.v];
    for (int c = 0; c < 3; ++c) {
      if (taken >> c & 1u) continue;
      const std::size_t mark = trail_.size();
      if (assign(best, c) && propagate(mark) && solve()) return true;
      undo_to(mark);
    }
    return false;
  }

  const MultiGraph& g_;
  std::vector<int> color_;
  std::vector<std::uint8_t> used_;
  std::vector<int> trail_;
};

}  // namespace

std::optional<EdgeColoring> find_3_edge_coloring(const MultiGraph& g) {
  if (!g.is_cubic()) {
    throw std::invalid_argument("find_3_edge_coloring: graph is not cubic");
  }
  return ColoringSearch(g).run();
}

std::optional<EdgeColoring> find_3_edge_coloring(const FSGraph& g) {
  return find_3_edge_coloring(g.graph());
}

int chromatic_index(const FSGraph& g) {
  return find_3_edge_coloring(g).has_value() ? 3 : 4;
}

bool even_2_factor_exists(const MultiGraph& g) {
  bool found = false;
  for_each_perfect_matching(g, [&](const EdgeSet& m) {
    if (found) return;
    const auto cycles = cycle_decomposition(g, complement_edges(g, m));
    bool all_even = true;
    for (const Cycle& c : cycles) all_even = all_even && c.length() % 2 == 0;
    found = all_even;
  });
  return found;
}

bool even_2_factor_exists(const FSGraph& g) { return even_2_factor_exists(g.graph()); }

}  // namespace fsgraph
