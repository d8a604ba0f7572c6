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

#ifndef FSGRAPH_FS_FAMILY_H_
#define FSGRAPH_FS_FAMILY_H_

#include <array>
#include <string>
#include <vector>

#include "fsgraph/graph_core.h"

namespace fsgraph {

// Maps the role of an external vertex of C_{k-1} to the role of its seam
// neighbour in C_0.
struct SeamPermutation {
  std::array<Role, 3> image;  // indexed by external_index

  Role operator()(Role r) const { return image[external_index(r)]; }
  Role inverse(Role r) const;
};

// j = 3: identity; j = 2: x->x, y->z, z->y; j = 1: x->z, y->x, z->y.
SeamPermutation seam_permutation(int j);

// The cubic graph FS(j, k) with its canonical labelling.
//
// Vertex index of (claw i, role r) is 4 * i + r, giving the order
// t0 x0 y0 z0 t1 x1 ...; edge serials are
//   3 * i + e               star edge t_i r_i            (e = external index)
//   3 * k + 3 * g + e       path edge r_g r_{g+1}, g < k-1
//   3 * k + 3 * (k-1) + e   seam edge r_{k-1} sigma(r)_0
// For k = 2 the path class and the seam class are the two parallel classes
// between C_0 and C_1.
class FSGraph {
 public:
  int j() const { return j_; }
  int k() const { return k_; }
  const MultiGraph& graph() const { return graph_; }
  const SeamPermutation& seam() const { return seam_; }

  int claw_mod(int claw) const { return ((claw % k_) + k_) % k_; }
  int vertex(int claw, Role r) const {
    return 4 * claw_mod(claw) + static_cast<int>(r);
  }
  VertexId label(int v) const {
    return VertexId{v / 4, static_cast<Role>(v % 4)};
  }

  int star_edge(int claw, Role r) const {
    return 3 * claw_mod(claw) + external_index(r);
  }
  // Edge r_g r_{g+1}; throws std::out_of_range unless 0 <= g < k-1.
  int path_edge(int gap, Role r) const;
  // Seam edge leaving the role-r vertex of C_{k-1}.
  int seam_edge(Role r_last) const { return 6 * k_ - 3 + external_index(r_last); }

  // Edge from the role-r external vertex of C_claw to C_{claw+1}
  // (respectively C_{claw-1}).
  int right_edge(int claw, Role r) const;
  int left_edge(int claw, Role r) const;

  // Gap index g in [0, k) of an inter-claw edge (path g or seam k-1);
  // -1 for star edges.
  int gap_of(int serial) const { return graph_.edge(serial).tag.gap; }

  std::vector<int> external_vertices() const;
  std::vector<int> claw_vertices(int claw) const;

 private:
  friend FSGraph build_fs(int j, int k);
  FSGraph(int j, int k) : j_(j), k_(k), seam_(seam_permutation(j)) {}

  int j_;
  int k_;
  SeamPermutation seam_;
  MultiGraph graph_;
};

// Throws std::invalid_argument unless j in {1,2,3} and k >= 2.
FSGraph build_fs(int j, int k);

struct ConstructionCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ConstructionReport {
  std::vector<ConstructionCheck> checks;

  bool all_passed() const;
  const ConstructionCheck* find(const std::string& name) const;
};

// Re-checks every defining invariant of FS(j, k) on an arbitrary multigraph
// whose vertices follow the canonical FS labelling (vertex 4i + r).
ConstructionReport verify_construction(int j, int k, const MultiGraph& g);
ConstructionReport verify_construction(const FSGraph& g);

}  // namespace fsgraph

#endif  // FSGRAPH_FS_FAMILY_H_
