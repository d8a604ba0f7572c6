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


#include "fsgraph/words.h"

#include <gtest/gtest.h>

#include <set>

#include "fsgraph/formulas.h"
#include "fsgraph/two_factor.h"

namespace fsgraph {
namespace {

using P = std::pair<Role, Role>;
constexpr Role X = Role::kX;
constexpr Role Y = Role::kY;
constexpr Role Z = Role::kZ;

bool complement_hamiltonian(const Matching& m) {
  return is_hamiltonian(complement_two_factor(m));
}

TEST(ForbiddenPairs, Tables) {
  EXPECT_EQ(forbidden_pairs(1), (std::array<P, 3>{P{X, Y}, P{Y, Z}, P{Z, X}}));
  EXPECT_EQ(forbidden_pairs(2), (std::array<P, 3>{P{X, X}, P{Y, Z}, P{Z, Y}}));
  EXPECT_EQ(forbidden_pairs(3), (std::array<P, 3>{P{X, X}, P{Y, Y}, P{Z, Z}}));
  EXPECT_THROW(forbidden_pairs(4), std::invalid_argument);
}

TEST(BlockWord, ParseAndPrint) {
  EXPECT_EQ(BlockWord::parse("XYZ@2.1").to_string(), "XYZ@2.1");
  const BlockWord bare = BlockWord::parse("ZX");
  EXPECT_EQ(bare.subtype, MatchingType::kType2_0);
  EXPECT_EQ(bare.letters, (std::vector<Role>{Z, X}));
  EXPECT_THROW(BlockWord::parse("XQ"), std::invalid_argument);
  EXPECT_THROW(BlockWord::parse("XY@1"), std::invalid_argument);
  EXPECT_THROW(BlockWord::parse("@2.0"), std::invalid_argument);
}

TEST(AllWords, CountAndOrder) {
  for (int p = 1; p <= 6; ++p) {
    const auto ws = all_words(p, MatchingType::kType2_1);
    std::size_t expect = 1;
    for (int i = 0; i < p; ++i) expect *= 3;
    ASSERT_EQ(ws.size(), expect);
    for (std::size_t i = 1; i < ws.size(); ++i) {
      EXPECT_LT(ws[i - 1].to_string(), ws[i].to_string());
    }
    EXPECT_EQ(ws.front().subtype, MatchingType::kType2_1);
  }
}

TEST(EncodeWord, AllXOfFS34) {
  const FSGraph g = build_fs(3, 4);
  EdgeSet s;
  for (int i = 0; i < 4; ++i) s.push_back(g.star_edge(i, X));
  for (int gap : {0, 2}) {
    s.push_back(g.path_edge(gap, Y));
    s.push_back(g.path_edge(gap, Z));
  }
  EXPECT_EQ(encode_word(Matching(g, s)).to_string(), "XX@2.0");
}

TEST(EncodeWord, RejectsType1AndOddOrTinyK) {
  const FSGraph g24 = build_fs(2, 4);
  for (const Matching& m : enumerate_perfect_matchings(g24)) {
    if (!is_type2(classify(m).type)) {
      EXPECT_THROW(encode_word(m), std::invalid_argument);
      break;
    }
  }
  const FSGraph g22 = build_fs(2, 2);
  for (const Matching& m : enumerate_perfect_matchings(g22)) {
    if (is_type2(classify(m).type)) {
      EXPECT_THROW(encode_word(m), std::invalid_argument);
    }
  }
  EXPECT_THROW(hamiltonian_type2_count(build_fs(1, 5)), std::invalid_argument);
  EXPECT_THROW(hamiltonian_type2_count(g22), std::invalid_argument);
}

TEST(DecodeWord, OracleWords) {
  const FSGraph g24 = build_fs(2, 4);
  EXPECT_TRUE(complement_hamiltonian(decode_word(g24, BlockWord::parse("XY@2.0"))));
  EXPECT_FALSE(complement_hamiltonian(decode_word(g24, BlockWord::parse("XX@2.0"))));
  const FSGraph g14 = build_fs(1, 4);
  EXPECT_TRUE(complement_hamiltonian(decode_word(g14, BlockWord::parse("XZ"))));
  EXPECT_THROW(decode_word(g24, BlockWord::parse("XYZ")), std::invalid_argument);
}

TEST(DecodeWord, BijectionWithType2Matchings) {
  for (int j = 1; j <= 3; ++j) {
    for (int p = 2; p <= 4; ++p) {
      const FSGraph g = build_fs(j, 2 * p);
      std::set<EdgeSet> type2;
      for (const Matching& m : enumerate_perfect_matchings(g)) {
        if (is_type2(classify(m).type)) type2.insert(m.edges());
      }
      std::set<EdgeSet> decoded;
      for (MatchingType st : {MatchingType::kType2_0, MatchingType::kType2_1}) {
        for (const BlockWord& w : all_words(p, st)) {
          const Matching m = decode_word(g, w);
          EXPECT_EQ(classify(m).type, st);
          EXPECT_EQ(encode_word(m), w);
          decoded.insert(m.edges());
        }
      }
      EXPECT_EQ(decoded, type2);
    }
  }
}

TEST(WordCriterion, PredictsHamiltonicity) {
  for (int j = 1; j <= 3; ++j) {
    for (int p = 2; p <= 4; ++p) {
      const FSGraph g = build_fs(j, 2 * p);
      for (MatchingType st : {MatchingType::kType2_0, MatchingType::kType2_1}) {
        for (const BlockWord& w : all_words(p, st)) {
          EXPECT_EQ(word_predicts_hamiltonian(j, w),
                    complement_hamiltonian(decode_word(g, w)))
              << "FS(" << j << "," << 2 * p << ") " << w.to_string();
        }
      }
    }
  }
}

TEST(HamiltonianType2Count, OracleValuesAndClosedForm) {
  EXPECT_EQ(hamiltonian_type2_count(build_fs(1, 4)), 6u);
  EXPECT_EQ(hamiltonian_type2_count(build_fs(2, 4)), 8u);
  EXPECT_EQ(hamiltonian_type2_count(build_fs(3, 4)), 12u);
  for (int j = 1; j <= 3; ++j) {
    for (int p = 2; p <= 6; ++p) {
      EXPECT_EQ(hamiltonian_type2_count(build_fs(j, 2 * p)), mu2prime_closed(j, p));
    }
  }
}

}  // namespace
}  // namespace fsgraph
