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

#ifndef FSGRAPH_WORDS_H_
#define FSGRAPH_WORDS_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fsgraph/fs_family.h"
#include "fsgraph/matchings.h"

namespace fsgraph {

// A type-2 matching of FS(j, 2p) as p block letters over {X, Y, Z}.
//
// Subtype 2.0: block i is (C_{2i}, C_{2i+1}), its letter the star role of
// both claws. Subtype 2.1: block i is (C_{2i+1}, C_{2i+2}); the last block
// wraps to (C_{k-1}, C_0) and takes the star role at C_{k-1}.
struct BlockWord {
  std::vector<Role> letters;  // kX, kY or kZ
  MatchingType subtype = MatchingType::kType2_0;

  int length() const { return static_cast<int>(letters.size()); }
  // "XYZ@2.0"
  std::string to_string() const;
  // Accepts "XYZ@2.0" / "XYZ@2.1", or bare "XYZ" meaning 2.0.
  static BlockWord parse(std::string_view text);

  friend bool operator==(const BlockWord&, const BlockWord&) = default;
};

// Ordered (initial letter, terminal letter) pairs whose extremal blocks
// close a six-cycle across the seam.
std::array<std::pair<Role, Role>, 3> forbidden_pairs(int j);

// Throws std::invalid_argument for type-1 matchings or odd k.
BlockWord encode_word(const Matching& m);
// Throws std::invalid_argument when the word length is not k / 2.
Matching decode_word(const FSGraph& g, const BlockWord& w);
Matching decode_word(FSGraph&& g, const BlockWord& w) = delete;

// No two equal adjacent letters and (first, last) not forbidden for `j`.
bool word_predicts_hamiltonian(int j, const BlockWord& w);

// All 3^p words of one subtype, lexicographic in X < Y < Z.
std::vector<BlockWord> all_words(int p, MatchingType subtype);

// Type-2 matchings with hamiltonian complement, counted by the word
// criterion over both subtypes. Throws std::invalid_argument unless k is
// even and at least 4.
std::uint64_t hamiltonian_type2_count(const FSGraph& g);

}  // namespace fsgraph

#endif  // FSGRAPH_WORDS_H_
