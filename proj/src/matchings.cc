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

#include "fsgraph/matchings.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fsgraph/parallel.h"

namespace fsgraph {

std::string_view to_string(MatchingType t) {
  switch (t) {
    case MatchingType::kType1:
      return "1";
    case MatchingType::kType2_0:
      return "2.0";
    case MatchingType::kType2_1:
      return "2.1";
  }
  return "?";
}

MatchingType parse_matching_type(std::string_view s) {
  if (s == "1") return MatchingType::kType1;
  if (s == "2.0") return MatchingType::kType2_0;
  if (s == "2.1") return MatchingType::kType2_1;
  throw std::invalid_argument("unknown matching type '" + std::string(s) +
                              "' (expected 1, 2.0 or 2.1)");
}

Matching::Matching(const FSGraph& host, EdgeSet edges)
    : host_(&host), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  if (!is_perfect_matching(host.graph(), edges_)) {
    throw std::invalid_argument("Matching: edge set is not a perfect matching");
  }
  mask_.assign(host.graph().edge_count(), 0);
  for (int s : edges_) mask_[s] = 1;
}

Role Matching::star_role(int claw) const {
  for (Role r : kExternalRoles) {
    if (contains(host_->star_edge(claw, r))) return r;
  }
  throw std::logic_error("Matching::star_role: claw center is uncovered");
}

Classification classify(const FSGraph& g, std::span<const int> edges) {
  if (!is_perfect_matching(g.graph(), edges)) {
    throw std::invalid_argument("classify: not a perfect matching");
  }
  const int k = g.k();
  Classification c{MatchingType::kType1, GapProfile{std::vector<int>(k, 0)}};
  for (int s : edges) {
    const int gap = g.gap_of(s);
    if (gap >= 0) ++c.profile.counts[gap];
  }
  const auto& counts = c.profile.counts;
  auto all = [&](auto pred) {
    for (int gap = 0; gap < k; ++gap) {
      if (!pred(gap, counts[gap])) return false;
    }
    return true;
  };
  if (all([](int, int n) { return n == 1; })) return c;
  if (k % 2 == 0) {
    if (all([](int gap, int n) { return n == (gap % 2 == 0 ? 2 : 0); })) {
      c.type = MatchingType::kType2_0;
      return c;
    }
    if (all([](int gap, int n) { return n == (gap % 2 == 1 ? 2 : 0); })) {
      c.type = MatchingType::kType2_1;
      return c;
    }
  }
  throw std::logic_error("classify: gap profile matches no matching type");
}

Classification classify(const Matching& m) {
  return classify(m.host(), m.edges());
}

namespace {

// Backtracking state shared by the sequential and prefix-split searches.
class MatchingSearch {
 public:
  explicit MatchingSearch(const MultiGraph& g)
      : g_(g), covered_(g.vertex_count(), 0) {}

  // Places `prefix` (which must be a matching) before searching.
  void seed(std::span<const int> prefix) {
    for (int s : prefix) {
      const Edge& e = g_.edge(s);
      covered_[e.u] = covered_[e.v] = 1;
      chosen_.push_back(s);
    }
  }

  // Calls `visit` on every completion. With depth_limit >= 0, stops at that
  // many chosen edges and reports the branch (unsorted) to `visit` instead.
  template <typename Visit>
  void run(int depth_limit, const Visit& visit) {
    extend(0, depth_limit, visit);
  }

 private:
  template <typename Visit>
  void extend(int from, int depth_limit, const Visit& visit) {
    int v = from;
    const int n = g_.vertex_count();
    while (v < n && covered_[v]) ++v;
    if (v == n || static_cast<int>(chosen_.size()) == depth_limit) {
      visit(chosen_, v == n);
      return;
    }
    covered_[v] = 1;
    for (int s : g_.incident(v)) {
      const int w = g_.edge(s).other(v);
      if (covered_[w]) continue;
      covered_[w] = 1;
      chosen_.push_back(s);
      extend(v + 1, depth_limit, visit);
      chosen_.pop_back();
      covered_[w] = 0;
    }
    covered_[v] = 0;
  }

  const MultiGraph& g_;
  std::vector<char> covered_;
  EdgeSet chosen_;
};

EdgeSet sorted_copy(const EdgeSet& e) {
  EdgeSet out = e;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void for_each_perfect_matching(const MultiGraph& g, const MatchingVisitor& visit) {
  MatchingSearch search(g);
  search.run(-1, [&](const EdgeSet& chosen, bool) { visit(sorted_copy(chosen)); });
}

std::vector<EdgeSet> enumerate_perfect_matchings(const MultiGraph& g) {
  std::vector<EdgeSet> out;
  for_each_perfect_matching(g, [&](const EdgeSet& m) { out.push_back(m); });
  return out;
}

std::uint64_t count_perfect_matchings(const MultiGraph& g) {
  std::uint64_t n = 0;
  MatchingSearch search(g);
  search.run(-1, [&](const EdgeSet&, bool) { ++n; });
  return n;
}

std::vector<EdgeSet> enumerate_perfect_matchings(const MultiGraph& g,
                                                 int threads) {
  if (threads <= 1) return enumerate_perfect_matchings(g);

  constexpr int kPrefixDepth = 6;
  const int depth = std::min(kPrefixDepth, g.vertex_count() / 2);
  std::vector<EdgeSet> prefixes;
  {
    MatchingSearch search(g);
    search.run(depth, [&](const EdgeSet& chosen, bool) { prefixes.push_back(chosen); });
  }
  std::vector<std::vector<EdgeSet>> parts(prefixes.size());
  parallel_for(prefixes.size(), threads, [&](std::size_t i) {
    MatchingSearch search(g);
    search.seed(prefixes[i]);
    search.run(-1, [&](const EdgeSet& chosen, bool) {
      parts[i].push_back(sorted_copy(chosen));
    });
  });
  std::vector<EdgeSet> out;
  for (auto& part : parts) {
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<Matching> enumerate_perfect_matchings(const FSGraph& g, int threads) {
  std::vector<Matching> out;
  for (EdgeSet& m : enumerate_perfect_matchings(g.graph(), threads)) {
    out.emplace_back(g, std::move(m));
  }
  return out;
}

std::vector<Matching> enumerate_perfect_matchings(const FSGraph& g) {
  return enumerate_perfect_matchings(g, default_thread_count());
}

TypeCounts count_by_type(std::span<const Matching> matchings) {
  TypeCounts t;
  for (const Matching& m : matchings) {
    ++t.mu;
    switch (classify(m).type) {
      case MatchingType::kType1:
        ++t.mu1;
        break;
      case MatchingType::kType2_0:
        ++t.mu2_0;
        break;
      case MatchingType::kType2_1:
        ++t.mu2_1;
        break;
    }
  }
  return t;
}

TypeCounts count_by_type(const FSGraph& g) {
  const auto all = enumerate_perfect_matchings(g);
  return count_by_type(all);
}

}  // namespace fsgraph
