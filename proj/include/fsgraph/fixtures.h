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

#ifndef FSGRAPH_FIXTURES_H_
#define FSGRAPH_FIXTURES_H_

#include <vector>

#include "fsgraph/graph_core.h"

namespace fsgraph {

// Small named cubic graphs used as reference hosts.

// Outer 5-cycle o0..o4, spokes o_i i_i, inner pentagram i_i i_{i+2}.
MultiGraph petersen_graph();
// Vertices a0 a1 a2 b0 b1 b2; every a_i adjacent to every b_j.
MultiGraph k33_graph();
// One colour class {a0, a1, a2} of k33_graph().
std::vector<int> k33_color_class();
// 3-cube on bit strings 000..111.
MultiGraph cube_graph();

}  // namespace fsgraph

#endif  // FSGRAPH_FIXTURES_H_
