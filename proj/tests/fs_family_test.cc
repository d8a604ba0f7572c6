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

#include <gtest/gtest.h>

#include "fsgraph/coloring.h"
#include "fsgraph/fixtures.h"
#include "oracles.h"

namespace fsgraph {
namespace {

TEST(SeamPermutation, MatchesDefinition) {
  const SeamPermutation s3 = seam_permutation(3);
  const SeamPermutation s2 = seam_permutation(2);
  const SeamPermutation s1 = seam_permutation(1);
  for (Role r : kExternalRoles) EXPECT_EQ(s3(r), r);
  EXPECT_EQ(s2(Role::kX), Role::kX);
  EXPECT_EQ(s2(Role::kY), Role::kZ);
  EXPECT_EQ(s2(Role::kZ), Role::kY);
  EXPECT_EQ(s1(Role::kX), Role::kZ);
  EXPECT_EQ(s1(Role::kY), Role::kX);
  EXPECT_EQ(s1(Role::kZ), Role::kY);
  for (int j = 1; j <= 3; ++j) {
    const SeamPermutation s = seam_permutation(j);
    for (Role r : kExternalRoles) EXPECT_EQ(s.inverse(s(r)), r);
  }
  EXPECT_THROW(seam_permutation(0), std::invalid_argument);
}

TEST(BuildFS, RejectsBadParameters) {
  EXPECT_THROW(build_fs(0, 3), std::invalid_argument);
  EXPECT_THROW(build_fs(4, 3), std::invalid_argument);
  EXPECT_THROW(build_fs(1, 1), std::invalid_argument);
}

TEST(BuildFS, SizesAndAllChecksAcrossRange) {
  for (int j = 1; j <= 3; ++j) {
    for (int k = 2; k <= 16; ++k) {
      const FSGraph g = build_fs(j, k);
      EXPECT_EQ(g.graph().vertex_count(), 4 * k);
      EXPECT_EQ(g.graph().edge_count(), 6 * k);
      EXPECT_TRUE(g.graph().is_cubic());
      const ConstructionReport r = verify_construction(g);
      EXPECT_TRUE(r.all_passed()) << "FS(" << j << "," << k << ")";
      EXPECT_EQ(induced_cycle_count(g.graph(), g.external_vertices()), j);
      EXPECT_EQ(g.graph().has_parallel_edges(), k == 2 && j != 1);
    }
  }
}

TEST(BuildFS, LabellingAndSerialLayout) {
  const FSGraph g = build_fs(1, 4);
  EXPECT_EQ(g.vertex(2, Role::kY), 10);
  EXPECT_EQ(g.vertex(-1, Role::kT), 12);
  EXPECT_EQ(g.label(13), (VertexId{3, Role::kX}));
  EXPECT_EQ(g.star_edge(1, Role::kZ), 5);
  EXPECT_EQ(g.path_edge(0, Role::kX), 12);
  EXPECT_EQ(g.path_edge(2, Role::kZ), 20);
  EXPECT_EQ(g.seam_edge(Role::kX), 21);
  EXPECT_THROW(g.path_edge(3, Role::kX), std::out_of_range);

  const Edge& seam = g.graph().edge(g.seam_edge(Role::kY));
  EXPECT_TRUE(seam.touches(g.vertex(3, Role::kY)));
  EXPECT_TRUE(seam.touches(g.vertex(0, Role::kX)));
  EXPECT_EQ(seam.tag.kind, EdgeKind::kSeam);
  EXPECT_EQ(g.gap_of(g.seam_edge(Role::kY)), 3);
  EXPECT_EQ(g.gap_of(g.path_edge(1, Role::kY)), 1);
  EXPECT_EQ(g.gap_of(g.star_edge(0, Role::kY)), -1);

  EXPECT_EQ(g.right_edge(3, Role::kZ), g.seam_edge(Role::kZ));
  EXPECT_EQ(g.left_edge(0, Role::kZ), g.seam_edge(Role::kX));
  EXPECT_EQ(g.left_edge(2, Role::kY), g.path_edge(1, Role::kY));
  EXPECT_EQ(g.graph().name(g.vertex(3, Role::kZ)), "z3");
}

TEST(BuildFS, FS12IsTheCube) {
  const FSGraph g = build_fs(1, 2);
  EXPECT_TRUE(testing::isomorphic(g.graph(), cube_graph()));
  const ConstructionReport r = verify_construction(g);
  EXPECT_TRUE(r.all_passed());
  ASSERT_NE(r.find("multigraph"), nullptr);
  EXPECT_TRUE(r.find("multigraph")->passed);
  EXPECT_FALSE(g.graph().has_parallel_edges());
}

TEST(BuildFS, FS25IsASnark) {
  const FSGraph g = build_fs(2, 5);
  EXPECT_EQ(g.graph().vertex_count(), 20);
  EXPECT_EQ(chromatic_index(g), 4);
}

TEST(BuildFS, FS34RolePathsCloseIntoFourCycles) {
  const FSGraph g = build_fs(3, 4);
  const auto cycles = cycle_decomposition(
      g.graph(), [&] {
        EdgeSet s;
        for (const Edge& e : g.graph().edges()) {
          if (e.tag.kind != EdgeKind::kStar) s.push_back(e.serial);
        }
        return s;
      }());
  ASSERT_EQ(cycles.size(), 3u);
  for (const Cycle& c : cycles) EXPECT_EQ(c.length(), 4);
}

TEST(BuildFS, DeterministicAcrossBuilds) {
  for (int j = 1; j <= 3; ++j) {
    const FSGraph a = build_fs(j, 7);
    const FSGraph b = build_fs(j, 7);
    for (int s = 0; s < a.graph().edge_count(); ++s) {
      EXPECT_EQ(a.graph().edge(s).u, b.graph().edge(s).u);
      EXPECT_EQ(a.graph().edge(s).v, b.graph().edge(s).v);
      EXPECT_EQ(a.graph().edge(s).tag, b.graph().edge(s).tag);
    }
  }
}

// Copy of g with the C_0 ends of the x and y seam edges exchanged.
MultiGraph swap_seam_ends(const FSGraph& g) {
  MultiGraph out;
  for (int v = 0; v < g.graph().vertex_count(); ++v) out.add_vertex(g.graph().name(v));
  const int sx = g.seam_edge(Role::kX);
  const int sy = g.seam_edge(Role::kY);
  const int end_x = g.vertex(0, g.seam()(Role::kX));
  const int end_y = g.vertex(0, g.seam()(Role::kY));
  for (const Edge& e : g.graph().edges()) {
    if (e.serial == sx) {
      out.add_edge(g.vertex(g.k() - 1, Role::kX), end_y, e.tag);
    } else if (e.serial == sy) {
      out.add_edge(g.vertex(g.k() - 1, Role::kY), end_x, e.tag);
    } else {
      out.add_edge(e.u, e.v, e.tag);
    }
  }
  return out;
}

TEST(VerifyConstruction, CatchesRewiredSeam) {
  const FSGraph g = build_fs(3, 5);
  const MultiGraph bad = swap_seam_ends(g);
  EXPECT_TRUE(bad.is_cubic());
  EXPECT_NE(induced_cycle_count(bad, g.external_vertices()), 3);
  const ConstructionReport r = verify_construction(3, 5, bad);
  EXPECT_FALSE(r.all_passed());
  ASSERT_NE(r.find("induced_cycles"), nullptr);
  EXPECT_FALSE(r.find("induced_cycles")->passed);
  EXPECT_TRUE(r.find("cubic")->passed);
}

TEST(VerifyConstruction, CatchesWrongSize) {
  const FSGraph g = build_fs(2, 3);
  EXPECT_TRUE(verify_construction(g).all_passed());
  const ConstructionReport r = verify_construction(2, 4, g.graph());
  EXPECT_FALSE(r.all_passed());
  EXPECT_FALSE(r.find("vertex_count")->passed);
}

TEST(VerifyConstruction, CatchesNonCubic) {
  const FSGraph g = build_fs(2, 3);
  MultiGraph bad;
  for (int v = 0; v < g.graph().vertex_count(); ++v) bad.add_vertex(g.graph().name(v));
  for (const Edge& e : g.graph().edges()) {
    if (e.serial != 0) bad.add_edge(e.u, e.v, e.tag);
  }
  const ConstructionReport r = verify_construction(2, 3, bad);
  EXPECT_FALSE(r.find("cubic")->passed);
  EXPECT_FALSE(r.find("edge_count")->passed);
}

}  // namespace
}  // namespace fsgraph
