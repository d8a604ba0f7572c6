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

#include "fsgraph/fs_family.h"

#include <algorithm>
#include <stdexcept>

namespace fsgraph {

Role SeamPermutation::inverse(Role r) const {
  for (Role s : kExternalRoles) {
    if ((*this)(s) == r) return s;
  }
  throw std::invalid_argument("SeamPermutation::inverse: not an external role");
}

SeamPermutation seam_permutation(int j) {
  switch (j) {
    case 1:
      return {{Role::kZ, Role::kX, Role::kY}};
    case 2:
      return {{Role::kX, Role::kZ, Role::kY}};
    case 3:
      return {{Role::kX, Role::kY, Role::kZ}};
  }
  throw std::invalid_argument("seam_permutation: j must be 1, 2 or 3");
}

int FSGraph::path_edge(int gap, Role r) const {
  if (gap < 0 || gap >= k_ - 1) {
    throw std::out_of_range("FSGraph::path_edge: gap out of range");
  }
  return 3 * k_ + 3 * gap + external_index(r);
}

int FSGraph::right_edge(int claw, Role r) const {
  const int c = claw_mod(claw);
  return c < k_ - 1 ? path_edge(c, r) : seam_edge(r);
}

int FSGraph::left_edge(int claw, Role r) const {
  const int c = claw_mod(claw);
  return c > 0 ? path_edge(c - 1, r) : seam_edge(seam_.inverse(r));
}

std::vector<int> FSGraph::external_vertices() const {
  std::vector<int> out;
  out.reserve(3 * k_);
  for (int i = 0; i < k_; ++i) {
    for (Role r : kExternalRoles) out.push_back(vertex(i, r));
  }
  return out;
}

std::vector<int> FSGraph::claw_vertices(int claw) const {
  const int base = 4 * claw_mod(claw);
  return {base, base + 1, base + 2, base + 3};
}

FSGraph build_fs(int j, int k) {
  if (j < 1 || j > 3) throw std::invalid_argument("build_fs: j must be 1, 2 or 3");
  if (k < 2) throw std::invalid_argument("build_fs: k must be at least 2");

  FSGraph fs(j, k);
  MultiGraph& g = fs.graph_;
  for (int i = 0; i < k; ++i) {
    for (Role r : {Role::kT, Role::kX, Role::kY, Role::kZ}) {
      g.add_vertex(std::string(1, role_char(r)) + std::to_string(i));
    }
  }
  for (int i = 0; i < k; ++i) {
    for (Role r : kExternalRoles) {
      g.add_edge(fs.vertex(i, Role::kT), fs.vertex(i, r),
                 EdgeTag{EdgeKind::kStar, -1});
    }
  }
  for (int gap = 0; gap + 1 < k; ++gap) {
    for (Role r : kExternalRoles) {
      g.add_edge(fs.vertex(gap, r), fs.vertex(gap + 1, r),
                 EdgeTag{EdgeKind::kPath, gap});
    }
  }
  for (Role r : kExternalRoles) {
    g.add_edge(fs.vertex(k - 1, r), fs.vertex(0, fs.seam_(r)),
               EdgeTag{EdgeKind::kSeam, k - 1});
  }
  return fs;
}

bool ConstructionReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ConstructionCheck& c) { return c.passed; });
}

const ConstructionCheck* ConstructionReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ConstructionReport verify_construction(int j, int k, const MultiGraph& g) {
  ConstructionReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  add("vertex_count", g.vertex_count() == 4 * k,
      std::to_string(g.vertex_count()) + " vertices, expected " +
          std::to_string(4 * k));
  add("edge_count", g.edge_count() == 6 * k,
      std::to_string(g.edge_count()) + " edges, expected " +
          std::to_string(6 * k));
  add("incidence", g.incidence_consistent(), "incidence map rescan");
  add("cubic", g.is_cubic(), "every vertex has degree 3");
  if (g.vertex_count() != 4 * k) return report;

  auto vertex = [](int claw, Role r) { return 4 * claw + static_cast<int>(r); };

  // Same-role edges join cyclically consecutive claws, and each role has an
  // edge r_g r_{g+1} across every gap g < k-1. Edge tags are not consulted.
  bool paths_ok = true;
  std::string path_detail = "role paths r_0 r_1 ... r_{k-1}";
  for (const Edge& e : g.edges()) {
    if (e.u % 4 == 0 || e.u % 4 != e.v % 4) continue;
    const int a = std::min(e.u, e.v) / 4;
    const int b = std::max(e.u, e.v) / 4;
    if (b != a + 1 && !(a == 0 && b == k - 1)) paths_ok = false;
  }
  for (Role r : kExternalRoles) {
    for (int gap = 0; gap + 1 < k; ++gap) {
      bool found = false;
      for (int s : g.incident(vertex(gap, r))) {
        found = found || g.edge(s).other(vertex(gap, r)) == vertex(gap + 1, r);
      }
      if (!found) paths_ok = false;
    }
  }
  add("role_paths", paths_ok, path_detail);

  std::vector<int> externals;
  for (int i = 0; i < k; ++i) {
    for (Role r : kExternalRoles) externals.push_back(vertex(i, r));
  }
  try {
    const int cycles = induced_cycle_count(g, externals);
    add("induced_cycles", cycles == j,
        std::to_string(cycles) + " cycles on external vertices, expected " +
            std::to_string(j));
  } catch (const std::invalid_argument& e) {
    add("induced_cycles", false, e.what());
  }

  const bool expect_multi = k == 2 && j != 1;
  add("multigraph", g.has_parallel_edges() == expect_multi,
      expect_multi ? "parallel edges expected" : "simple graph expected");
  return report;
}

ConstructionReport verify_construction(const FSGraph& g) {
  return verify_construction(g.j(), g.k(), g.graph());
}

}  // namespace fsgraph
