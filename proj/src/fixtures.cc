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

#include "fsgraph/fixtures.h"

#include <string>

namespace fsgraph {

MultiGraph petersen_graph() {
  MultiGraph g;
  for (int i = 0; i < 5; ++i) g.add_vertex("o" + std::to_string(i));
  for (int i = 0; i < 5; ++i) g.add_vertex("i" + std::to_string(i));
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) g.add_edge(i, i + 5);
  for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
  return g;
}

MultiGraph k33_graph() {
  MultiGraph g;
  for (int i = 0; i < 3; ++i) g.add_vertex("a" + std::to_string(i));
  for (int i = 0; i < 3; ++i) g.add_vertex("b" + std::to_string(i));
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) g.add_edge(a, 3 + b);
  }
  return g;
}

std::vector<int> k33_color_class() { return {0, 1, 2}; }

MultiGraph cube_graph() {
  MultiGraph g;
  for (int v = 0; v < 8; ++v) {
    std::string name;
    for (int bit = 2; bit >= 0; --bit) name += ((v >> bit) & 1) ? '1' : '0';
    g.add_vertex(name);
  }
  for (int v = 0; v < 8; ++v) {
    for (int bit = 0; bit < 3; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) g.add_edge(v, w);
    }
  }
  return g;
}

}  // namespace fsgraph
