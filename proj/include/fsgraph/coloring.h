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

#ifndef FSGRAPH_COLORING_H_
#define FSGRAPH_COLORING_H_

#include <array>
#include <optional>
#include <vector>

#include "fsgraph/fs_family.h"
#include "fsgraph/graph_core.h"

namespace fsgraph {

struct EdgeColoring {
  std::vector<int> color;  // indexed by serial, values in {0, 1, 2}

  // Serials of each colour, ascending.
  std::array<EdgeSet, 3> classes() const;
};

bool is_proper_3_edge_coloring(const MultiGraph& g, const EdgeColoring& c);

// Exact search for a proper 3-edge-colouring of a cubic multigraph. The
// three edges at vertex 0 are fixed to colours 0, 1, 2; forced colours are
// propagated and the search branches on the uncoloured edge with the fewest
// free colours (lowest serial on ties), colours ascending.
// Throws std::invalid_argument for non-cubic graphs.
std::optional<EdgeColoring> find_3_edge_coloring(const MultiGraph& g);
std::optional<EdgeColoring> find_3_edge_coloring(const FSGraph& g);

// 3 or 4.
int chromatic_index(const FSGraph& g);

// True iff some perfect matching has a complement whose cycles are all even.
bool even_2_factor_exists(const MultiGraph& g);
bool even_2_factor_exists(const FSGraph& g);

}  // namespace fsgraph

#endif  // FSGRAPH_COLORING_H_
