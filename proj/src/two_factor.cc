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

#include "fsgraph/two_factor.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace fsgraph {

namespace {

std::vector<int> cycle_of_vertex(const TwoFactor& tf, int vertex_count) {
  std::vector<int> owner(vertex_count, -1);
  for (int c = 0; c < tf.cycle_count(); ++c) {
    for (int v : tf.cycles[c].vertices) owner[v] = c;
  }
  return owner;
}

int cycle_of_edge(const TwoFactor& tf, int serial) {
  for (int c = 0; c < tf.cycle_count(); ++c) {
    const auto& e = tf.cycles[c].edges;
    if (std::find(e.begin(), e.end(), serial) != e.end()) return c;
  }
  return -1;
}

// Per claw, the index of the cycle holding three of its four vertices.
std::vector<int> claw_owners(const FSGraph& g, const TwoFactor& tf) {
  const std::vector<int> by_vertex = cycle_of_vertex(tf, g.graph().vertex_count());
  std::vector<int> owner(g.k(), -1);
  for (int i = 0; i < g.k(); ++i) {
    int in_first = 0;
    for (int v : g.claw_vertices(i)) in_first += by_vertex[v] == 0 ? 1 : 0;
    if (in_first == 3) {
      owner[i] = 0;
    } else if (in_first == 1) {
      owner[i] = 1;
    } else {
      throw std::logic_error("major_profile: claw " + std::to_string(i) +
                             " is not split 3 + 1 between the two cycles");
    }
  }
  return owner;
}

}  // namespace

TwoFactor complement_two_factor(const Matching& m) {
  const MultiGraph& g = m.host().graph();
  TwoFactor tf;
  tf.cycles = cycle_decomposition(g, complement_edges(g, m.edges()));
  for (const Cycle& c : tf.cycles) tf.lengths.push_back(c.length());
  return tf;
}

bool is_hamiltonian(const TwoFactor& tf) { return tf.cycle_count() == 1; }

MajorProfile major_profile(const Matching& m, const TwoFactor& tf) {
  if (classify(m).type != MatchingType::kType1) {
    throw std::invalid_argument("major_profile: matching is not of type 1");
  }
  if (tf.cycle_count() != 2) {
    throw std::invalid_argument("major_profile: 2-factor does not have two cycles");
  }
  MajorProfile p;
  p.owner = claw_owners(m.host(), tf);
  p.k1 = static_cast<int>(std::count(p.owner.begin(), p.owner.end(), 0));
  p.k2 = m.host().k() - p.k1;
  p.length1 = tf.lengths[0];
  p.length2 = tf.lengths[1];
  return p;
}

LocalTransformResult local_transform(const Matching& m, int variant, int anchor) {
  const FSGraph& g = m.host();
  const int k = g.k();
  if (variant < 1 || variant > 3) {
    throw std::invalid_argument("local_transform: variant must be 1, 2 or 3");
  }
  if (anchor < 0 || anchor >= k) {
    throw std::invalid_argument("local_transform: anchor claw out of range");
  }
  if (classify(m).type != MatchingType::kType1) {
    throw std::invalid_argument("local_transform: matching is not of type 1");
  }
  const TwoFactor before = complement_two_factor(m);
  if (before.cycle_count() != 2) {
    throw std::invalid_argument(
        "local_transform: complementary 2-factor does not have two cycles");
  }
  const int window = variant == 1 ? 2 : 3;
  if (anchor + window > k) {
    throw std::invalid_argument(
        "local_transform: anchor " + std::to_string(anchor) + " leaves no room for " +
        std::to_string(window) + " claws before the seam (need j <= " +
        std::to_string(k - window) + ")");
  }

  const MajorProfile profile = major_profile(m, before);
  const int j = anchor;
  std::vector<int> rel(k);
  for (int i = 0; i < k; ++i) rel[i] = profile.owner[i] == profile.owner[j] ? 0 : 1;

  auto require = [&](int claw, int want, const char* clause) {
    if (rel[claw] != want) {
      throw std::invalid_argument(
          std::string("local_transform: variant ") + std::to_string(variant) +
          " requires " + clause + " (claw " + std::to_string(claw) + " is gamma" +
          std::to_string(rel[claw] + 1) + "-major)");
    }
  };
  switch (variant) {
    case 1:
      require(j + 1, 0, "C_{j+1} gamma1-major");
      break;
    case 2:
      require(j + 1, 1, "C_{j+1} gamma2-major");
      require(j + 2, 0, "C_{j+2} gamma1-major");
      break;
    case 3:
      require(j + 1, 1, "C_{j+1} gamma2-major");
      require(j + 2, 1, "C_{j+2} gamma2-major");
      break;
  }

  // Local role names: `z` is the star role at C_j, `x` the role whose edge
  // to C_{j+1} is matched, `y` the remaining one.
  const Role z = m.star_role(j);
  Role x = Role::kT;
  for (Role r : kExternalRoles) {
    if (r != z && m.contains(g.path_edge(j, r))) x = r;
  }
  if (x == Role::kT) {
    throw std::logic_error("local_transform: no matched edge leaves the anchor claw");
  }
  Role y = Role::kT;
  for (Role r : kExternalRoles) {
    if (r != z && r != x) y = r;
  }

  EdgeSet removed;
  EdgeSet added;
  switch (variant) {
    case 1:
      removed = {g.path_edge(j, x), g.star_edge(j, z), g.star_edge(j + 1, z)};
      added = {g.path_edge(j, z), g.star_edge(j, x), g.star_edge(j + 1, x)};
      break;
    case 2:
      removed = {g.star_edge(j, z), g.path_edge(j, x), g.path_edge(j + 1, z),
                 g.star_edge(j + 2, x)};
      added = {g.star_edge(j, x), g.path_edge(j, z), g.path_edge(j + 1, x),
               g.star_edge(j + 2, z)};
      break;
    case 3:
      removed = {g.star_edge(j, z), g.path_edge(j, x), g.star_edge(j + 1, y),
                 g.path_edge(j + 1, z), g.star_edge(j + 2, y)};
      added = {g.star_edge(j, x), g.path_edge(j, z), g.star_edge(j + 1, x),
               g.path_edge(j + 1, y), g.star_edge(j + 2, z)};
      break;
  }
  for (int s : removed) {
    if (!m.contains(s)) {
      throw std::logic_error("local_transform: local configuration at claw " +
                             std::to_string(j) + " does not match the major pattern");
    }
  }
  std::sort(removed.begin(), removed.end());
  std::sort(added.begin(), added.end());

  EdgeSet next;
  std::set_difference(m.edges().begin(), m.edges().end(), removed.begin(),
                      removed.end(), std::back_inserter(next));
  next.insert(next.end(), added.begin(), added.end());

  LocalTransformResult result{.matching = Matching(g, std::move(next)),
                              .variant = variant,
                              .anchor = anchor,
                              .removed = removed,
                              .added = added};
  result.owner_before = rel;
  result.gamma1_before = before.lengths[profile.owner[j]];
  result.gamma2_before = before.lengths[1 - profile.owner[j]];

  // The left edge of x_j is unmatched before and after, and lies on gamma1.
  const int pivot = g.left_edge(j, x);
  if (cycle_of_edge(before, pivot) != profile.owner[j]) {
    throw std::logic_error("local_transform: pivot edge is not on the anchored cycle");
  }
  const TwoFactor after = complement_two_factor(result.matching);
  result.cycle_count_after = after.cycle_count();
  const int pivot_cycle = cycle_of_edge(after, pivot);
  result.gamma1_after = after.lengths[pivot_cycle];
  if (after.cycle_count() == 2) {
    result.gamma2_after = after.lengths[1 - pivot_cycle];
    const std::vector<int> owners = claw_owners(g, after);
    result.owner_after.resize(k);
    for (int i = 0; i < k; ++i) result.owner_after[i] = owners[i] == pivot_cycle ? 0 : 1;
  }
  return result;
}

Type2Structure type2_structure(const Matching& m, const TwoFactor& tf) {
  const Classification c = classify(m);
  if (!is_type2(c.type)) {
    throw std::invalid_argument("type2_structure: matching is of type 1");
  }
  const FSGraph& g = m.host();
  const int k = g.k();
  const std::vector<int> by_vertex = cycle_of_vertex(tf, g.graph().vertex_count());
  auto cycle_of = [&](int serial) { return by_vertex[g.graph().edge(serial).u]; };

  // The unmatched edge of every doubly matched gap lies on the long cycle.
  std::vector<int> forced;
  for (int gap = 0; gap < k; ++gap) {
    if (c.profile.counts[gap] != 2) continue;
    for (Role r : kExternalRoles) {
      const int s = g.right_edge(gap, r);
      if (!m.contains(s)) forced.push_back(s);
    }
  }

  Type2Structure out;
  out.long_cycle_index = cycle_of(forced.front());
  bool long_ok = true;
  for (int s : forced) {
    if (cycle_of(s) != out.long_cycle_index) long_ok = false;
  }
  for (int ci = 0; ci < tf.cycle_count(); ++ci) {
    if (ci == out.long_cycle_index) continue;
    std::set<int> claws;
    for (int v : tf.cycles[ci].vertices) claws.insert(g.label(v).claw);
    bool consecutive = false;
    if (claws.size() == 2) {
      const int a = *claws.begin();
      const int b = *claws.rbegin();
      consecutive = g.claw_mod(a + 1) == b || g.claw_mod(b + 1) == a;
    }
    if (tf.lengths[ci] == 6 && consecutive) {
      ++out.six_cycle_count;
    } else {
      out.anomalous_cycles.push_back(ci);
    }
  }
  out.long_cycle_length = tf.lengths[out.long_cycle_index];
  if (!long_ok || out.long_cycle_length % 2 != 0 ||
      out.long_cycle_length + 6 * out.six_cycle_count != 4 * k) {
    out.anomalous_cycles.push_back(out.long_cycle_index);
  }
  std::sort(out.anomalous_cycles.begin(), out.anomalous_cycles.end());
  return out;
}

}  // namespace fsgraph
