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

#ifndef FSGRAPH_IO_H_
#define FSGRAPH_IO_H_

#include <string>
#include <string_view>

#include <json.hpp>

#include "fsgraph/fs_family.h"
#include "fsgraph/graph_core.h"

namespace fsgraph {

// One line per edge in serial order: "<name(u)> <name(v)> #<serial>".
std::string to_edge_list(const MultiGraph& g);

// Inverse of to_edge_list. Vertices are created in order of first
// appearance; edges are placed by their serial, which must be dense.
// Throws std::invalid_argument on malformed input.
MultiGraph parse_edge_list(std::string_view text);

std::string tag_name(const EdgeTag& tag);  // "star", "path", "seam", "plain"

// {"vertices": [...], "edges": [{"serial", "endpoints", "tag", "gap"?}]}
nlohmann::json to_json(const MultiGraph& g);
// Adds "j" and "k" to the multigraph export.
nlohmann::json to_json(const FSGraph& g);

// A matching file is a JSON array of edge serials.
EdgeSet parse_edge_set_json(std::string_view text);
std::string edge_set_json(const EdgeSet& edges);

}  // namespace fsgraph

#endif  // FSGRAPH_IO_H_
