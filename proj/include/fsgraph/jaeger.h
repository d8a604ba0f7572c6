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

#ifndef FSGRAPH_JAEGER_H_
#define FSGRAPH_JAEGER_H_

#include <optional>
#include <span>
#include <vector>

#include "fsgraph/fs_family.h"
#include "fsgraph/graph_core.h"
#include "fsgraph/matchings.h"

namespace fsgraph {

// A perfect matching split into two strong matchings.
struct JaegerDecomposition {
  EdgeSet blue;
  EdgeSet red;
  int component_count = 0;  // components of the conflict graph
};

// True iff no edge of `g` joins two distinct edges of `s`.
// Throws std::invalid_argument if `s` is not a matching.
bool is_strong_matching(const MultiGraph& g, std::span<const int> s);
bool is_strong_matching(const FSGraph& g, std::span<const int> s);

// Two-colours the conflict graph of `m` (matching edges adjacent iff some
// host edge joins them) breadth-first, components in order of their minimum
// serial, the minimum edge of each component blue. Empty if the conflict
// graph is not bipartite.
std::optional<JaegerDecomposition> jaeger_decompose(const Matching& m);

struct JaegerMatching {
  Matching matching;
  JaegerDecomposition decomposition;
};

// Decomposable perfect matchings in enumeration order.
std::vector<JaegerMatching> enumerate_jaeger_matchings(const FSGraph& g);
std::vector<JaegerMatching> enumerate_jaeger_matchings(FSGraph&& g) = delete;

bool is_jaeger_graph(const FSGraph& g);

// True iff every edge of the host lies in exactly two of the six matchings.
// Throws std::invalid_argument unless there are exactly six matchings of a
// common host.
bool berge_fulkerson_check(std::span<const Matching> ms);

}  // namespace fsgraph

#endif  // FSGRAPH_JAEGER_H_
