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

#include <stdexcept>

namespace fsgraph {

namespace {

char letter_char(Role r) { return static_cast<char>(role_char(r) - 'a' + 'A'); }

void require_word_host(int k, const char* who) {
  if (k % 2 != 0 || k < 4) {
    throw std::invalid_argument(std::string(who) +
                                ": block words need an even k >= 4");
  }
}

}  // namespace

std::string BlockWord::to_string() const {
  std::string out;
  for (Role r : letters) out += letter_char(r);
  out += '@';
  out += fsgraph::to_string(subtype);
  return out;
}

BlockWord BlockWord::parse(std::string_view text) {
  BlockWord w;
  const auto at = text.find('@');
  const std::string_view body = text.substr(0, at);
  if (at != std::string_view::npos) {
    w.subtype = parse_matching_type(text.substr(at + 1));
    if (!is_type2(w.subtype)) {
      throw std::invalid_argument("BlockWord::parse: subtype must be 2.0 or 2.1");
    }
  }
  if (body.empty()) throw std::invalid_argument("BlockWord::parse: empty word");
  for (char ch : body) {
    switch (ch) {
      case 'X':
        w.letters.push_back(Role::kX);
        break;
      case 'Y':
        w.letters.push_back(Role::kY);
        break;
      case 'Z':
        w.letters.push_back(Role::kZ);
        break;
      default:
        throw std::invalid_argument("BlockWord::parse: letters must be X, Y or Z");
    }
  }
  return w;
}

std::array<std::pair<Role, Role>, 3> forbidden_pairs(int j) {
  using enum Role;
  switch (j) {
    case 1:
      return {{{kX, kY}, {kY, kZ}, {kZ, kX}}};
    case 2:
      return {{{kX, kX}, {kY, kZ}, {kZ, kY}}};
    case 3:
      return {{{kX, kX}, {kY, kY}, {kZ, kZ}}};
  }
  throw std::invalid_argument("forbidden_pairs: j must be 1, 2 or 3");
}

BlockWord encode_word(const Matching& m) {
  const FSGraph& g = m.host();
  require_word_host(g.k(), "encode_word");
  const MatchingType type = classify(m).type;
  if (!is_type2(type)) {
    throw std::invalid_argument("encode_word: matching is of type 1");
  }
  BlockWord w;
  w.subtype = type;
  const int shift = type == MatchingType::kType2_0 ? 0 : 1;
  for (int i = 0; i < g.k() / 2; ++i) w.letters.push_back(m.star_role(2 * i + shift));
  return w;
}

Matching decode_word(const FSGraph& g, const BlockWord& w) {
  require_word_host(g.k(), "decode_word");
  const int p = g.k() / 2;
  if (w.length() != p) {
    throw std::invalid_argument("decode_word: word length " + std::to_string(w.length()) +
                                " does not match k / 2 = " + std::to_string(p));
  }
  if (!is_type2(w.subtype)) {
    throw std::invalid_argument("decode_word: subtype must be 2.0 or 2.1");
  }
  const int shift = w.subtype == MatchingType::kType2_0 ? 0 : 1;
  EdgeSet edges;
  for (int i = 0; i < p; ++i) {
    const Role a = w.letters[i];
    const int left = 2 * i + shift;
    const int right = g.claw_mod(left + 1);
    edges.push_back(g.star_edge(left, a));
    // Crossing the seam renames the star role on the C_0 side.
    edges.push_back(g.star_edge(right, right == 0 ? g.seam()(a) : a));
    for (Role r : kExternalRoles) {
      if (r != a) edges.push_back(g.right_edge(left, r));
    }
  }
  Matching m(g, std::move(edges));
  if (classify(m).type != w.subtype) {
    throw std::logic_error("decode_word: decoded matching has the wrong subtype");
  }
  return m;
}

bool word_predicts_hamiltonian(int j, const BlockWord& w) {
  for (int i = 0; i + 1 < w.length(); ++i) {
    if (w.letters[i] == w.letters[i + 1]) return false;
  }
  const std::pair<Role, Role> ends{w.letters.front(), w.letters.back()};
  for (const auto& pair : forbidden_pairs(j)) {
    if (pair == ends) return false;
  }
  return true;
}

std::vector<BlockWord> all_words(int p, MatchingType subtype) {
  if (p < 1) throw std::invalid_argument("all_words: p must be positive");
  std::vector<BlockWord> out;
  std::vector<int> digits(p, 0);
  while (true) {
    BlockWord w;
    w.subtype = subtype;
    for (int d : digits) w.letters.push_back(external_role(d));
    out.push_back(std::move(w));
    int pos = p - 1;
    while (pos >= 0 && digits[pos] == 2) digits[pos--] = 0;
    if (pos < 0) break;
    ++digits[pos];
  }
  return out;
}

std::uint64_t hamiltonian_type2_count(const FSGraph& g) {
  require_word_host(g.k(), "hamiltonian_type2_count");
  std::uint64_t n = 0;
  for (MatchingType t : {MatchingType::kType2_0, MatchingType::kType2_1}) {
    for (const BlockWord& w : all_words(g.k() / 2, t)) {
      if (word_predicts_hamiltonian(g.j(), w)) ++n;
    }
  }
  return n;
}

}  // namespace fsgraph
