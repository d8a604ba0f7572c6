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

#include "fsgraph/io.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fsgraph {

std::string to_edge_list(const MultiGraph& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) {
    out << g.name(e.u) << ' ' << g.name(e.v) << " #" << e.serial << '\n';
  }
  return out.str();
}

MultiGraph parse_edge_list(std::string_view text) {
  struct Line {
    std::string u, v;
    int serial;
  };
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(raw);
    Line line;
    std::string tag;
    std::string extra;
    if (!(fields >> line.u >> line.v >> tag) || (fields >> extra) || tag.size() < 2 ||
        tag[0] != '#') {
      throw std::invalid_argument("parse_edge_list: malformed line " +
                                  std::to_string(line_no));
    }
    try {
      std::size_t used = 0;
      line.serial = std::stoi(tag.substr(1), &used);
      if (used != tag.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_edge_list: bad serial on line " +
                                  std::to_string(line_no));
    }
    lines.push_back(std::move(line));
  }

  MultiGraph g;
  std::unordered_map<std::string, int> index;
  auto vertex = [&](const std::string& name) {
    auto [it, inserted] = index.try_emplace(name, g.vertex_count());
    if (inserted) g.add_vertex(name);
    return it->second;
  };
  for (const Line& line : lines) {
    vertex(line.u);
    vertex(line.v);
  }
  std::vector<const Line*> by_serial(lines.size(), nullptr);
  for (const Line& line : lines) {
    if (line.serial < 0 || line.serial >= static_cast<int>(lines.size()) ||
        by_serial[line.serial] != nullptr) {
      throw std::invalid_argument("parse_edge_list: serials must be dense and unique");
    }
    by_serial[line.serial] = &line;
  }
  for (const Line* line : by_serial) g.add_edge(index[line->u], index[line->v]);
  return g;
}

std::string tag_name(const EdgeTag& tag) {
  switch (tag.kind) {
    case EdgeKind::kStar:
      return "star";
    case EdgeKind::kPath:
      return "path";
    case EdgeKind::kSeam:
      return "seam";
    case EdgeKind::kPlain:
      return "plain";
  }
  return "plain";
}

nlohmann::json to_json(const MultiGraph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.name(v));
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    nlohmann::json edge = {{"serial", e.serial},
                           {"endpoints", {g.name(e.u), g.name(e.v)}},
                           {"tag", tag_name(e.tag)}};
    if (e.tag.gap >= 0) edge["gap"] = e.tag.gap;
    j["edges"].push_back(std::move(edge));
  }
  return j;
}

nlohmann::json to_json(const FSGraph& g) {
  nlohmann::json j = to_json(g.graph());
  j["j"] = g.j();
  j["k"] = g.k();
  return j;
}

EdgeSet parse_edge_set_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("matching file: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("matching file: expected a JSON array");
  EdgeSet out;
  for (const auto& item : j) {
    if (!item.is_number_integer()) {
      throw std::invalid_argument("matching file: serials must be integers");
    }
    out.push_back(item.get<int>());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string edge_set_json(const EdgeSet& edges) { return nlohmann::json(edges).dump(); }

}  // namespace fsgraph
