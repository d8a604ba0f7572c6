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

#ifndef FSGRAPH_TWO_FACTOR_H_
#define FSGRAPH_TWO_FACTOR_H_

#include <vector>

#include "fsgraph/graph_core.h"
#include "fsgraph/matchings.h"

namespace fsgraph {

// The 2-factor G \ M as canonically ordered cycles.
struct TwoFactor {
  std::vector<Cycle> cycles;
  std::vector<int> lengths;

  int cycle_count() const { return static_cast<int>(cycles.size()); }
};

TwoFactor complement_two_factor(const Matching& m);

bool is_hamiltonian(const TwoFactor& tf);

// Claw ownership in a two-cycle 2-factor of a type-1 matching. Cycle 0
// (gamma 1) is the cycle holding the lowest-serial complement edge.
struct MajorProfile {
  std::vector<int> owner;  // per claw: 0 if gamma1-major, 1 if gamma2-major
  int k1 = 0;
  int k2 = 0;
  int length1 = 0;
  int length2 = 0;
};

// Throws std::invalid_argument unless `m` is type 1 and `tf` has exactly two
// cycles; std::logic_error if some claw is not split 3 + 1 between them.
MajorProfile major_profile(const Matching& m, const TwoFactor& tf);

// Result of a local transformation. All "anchored" quantities use the
// anchored labelling: gamma1 is the cycle that is major at the anchor claw
// before the move, and the cycle through the unchanged left edge of the
// anchor's pivot vertex afterwards.
struct LocalTransformResult {
  Matching matching;
  int variant = 0;
  int anchor = 0;
  EdgeSet removed{};
  EdgeSet added{};
  int gamma1_before = 0;
  int gamma2_before = 0;
  int gamma1_after = 0;
  int gamma2_after = 0;
  int cycle_count_after = 0;
  std::vector<int> owner_before{};  // 0 = gamma1-major, 1 = gamma2-major
  std::vector<int> owner_after{};   // empty unless two cycles remain
};

// Variant 1: C_j, C_{j+1} gamma1-major, j != k-1; gamma1 loses 4.
// Variant 2: C_j, C_{j+2} gamma1-major, C_{j+1} gamma2-major, j <= k-3;
//   gamma1 loses 2.
// Variant 3: C_j gamma1-major, C_{j+1}, C_{j+2} gamma2-major, j <= k-3;
//   lengths unchanged.
// Throws std::invalid_argument naming the failed precondition clause.
LocalTransformResult local_transform(const Matching& m, int variant, int anchor);

// Type-2 complement: one long cycle plus six-cycles.
struct Type2Structure {
  int long_cycle_length = 0;
  int six_cycle_count = 0;
  int long_cycle_index = -1;
  // Indices of cycles that are neither the long cycle nor a six-cycle
  // spanning two consecutive claws, plus the long cycle itself if it is odd,
  // misses some forced edge, or breaks l + 6p = 4k. Empty on a valid host.
  std::vector<int> anomalous_cycles;
};

// Throws std::invalid_argument for type-1 matchings.
Type2Structure type2_structure(const Matching& m, const TwoFactor& tf);

}  // namespace fsgraph

#endif  // FSGRAPH_TWO_FACTOR_H_
