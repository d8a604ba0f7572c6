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

#ifndef FSGRAPH_MATCHINGS_H_
#define FSGRAPH_MATCHINGS_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "fsgraph/fs_family.h"
#include "fsgraph/graph_core.h"

namespace fsgraph {

enum class MatchingType { kType1, kType2_0, kType2_1 };

std::string_view to_string(MatchingType t);  // "1", "2.0", "2.1"
// Throws std::invalid_argument for anything else.
MatchingType parse_matching_type(std::string_view s);

inline bool is_type2(MatchingType t) { return t != MatchingType::kType1; }

// A perfect matching of an FSGraph. Holds a non-owning pointer to its host,
// which must outlive it.
class Matching {
 public:
  // Throws std::invalid_argument unless `edges` is a perfect matching of
  // `host`. The serials are stored sorted.
  Matching(const FSGraph& host, EdgeSet edges);
  Matching(FSGraph&& host, EdgeSet edges) = delete;

  const FSGraph& host() const { return *host_; }
  const EdgeSet& edges() const { return edges_; }
  bool contains(int serial) const { return mask_.at(serial) != 0; }
  // Role r such that t_i r_i is in the matching.
  Role star_role(int claw) const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.host_ == b.host_ && a.edges_ == b.edges_;
  }

 private:
  const FSGraph* host_;
  EdgeSet edges_;
  std::vector<char> mask_;
};

// Number of matching edges crossing each gap g in [0, k): g < k-1 is the
// path class between C_g and C_{g+1}, g = k-1 is the seam.
struct GapProfile {
  std::vector<int> counts;
};

struct Classification {
  MatchingType type;
  GapProfile profile;
};

// Throws std::invalid_argument if `edges` is not a perfect matching, and
// std::logic_error if the gap profile fits none of the three types.
Classification classify(const FSGraph& g, std::span<const int> edges);
Classification classify(const Matching& m);

using MatchingVisitor = std::function<void(const EdgeSet&)>;

// Depth-first enumeration of all perfect matchings: branch on the
// lowest-index uncovered vertex, trying its edges by ascending serial.
void for_each_perfect_matching(const MultiGraph& g, const MatchingVisitor& visit);
std::vector<EdgeSet> enumerate_perfect_matchings(const MultiGraph& g);
std::uint64_t count_perfect_matchings(const MultiGraph& g);

// Same order as the single-threaded enumeration for every thread count; the
// search is split by branch prefix and the pieces are concatenated in order.
std::vector<EdgeSet> enumerate_perfect_matchings(const MultiGraph& g, int threads);
std::vector<Matching> enumerate_perfect_matchings(const FSGraph& g);
std::vector<Matching> enumerate_perfect_matchings(const FSGraph& g, int threads);
// Matchings point at their host, so a temporary host is rejected.
std::vector<Matching> enumerate_perfect_matchings(FSGraph&& g) = delete;
std::vector<Matching> enumerate_perfect_matchings(FSGraph&& g, int threads) = delete;

struct TypeCounts {
  std::uint64_t mu = 0;
  std::uint64_t mu1 = 0;
  std::uint64_t mu2_0 = 0;
  std::uint64_t mu2_1 = 0;

  std::uint64_t mu2() const { return mu2_0 + mu2_1; }
};

TypeCounts count_by_type(const FSGraph& g);
TypeCounts count_by_type(std::span<const Matching> matchings);

}  // namespace fsgraph

#endif  // FSGRAPH_MATCHINGS_H_
