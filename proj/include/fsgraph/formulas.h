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

#ifndef FSGRAPH_FORMULAS_H_
#define FSGRAPH_FORMULAS_H_

#include <array>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fsgraph {

using Count = boost::multiprecision::cpp_int;

// Closed forms. All throw std::invalid_argument outside j in {1,2,3}, k >= 2.

// Perfect matchings of FS(j, k).
Count mu_closed(int j, int k);
// Type-1 perfect matchings.
Count mu1_closed(int j, int k);
// Type-2 perfect matchings: 2 * 3^(k/2) for even k, 0 for odd k.
Count mu2_closed(int j, int k);
// Type-2 matchings with hamiltonian complement in FS(j, 2p), p >= 2.
Count mu2prime_closed(int j, int p);

// Words over {X,Y,Z} without equal neighbours that start with a given letter
// and end with a letter other than the start (u, start letter = excluded
// letter) or other than a different fixed letter (v). p >= 2.
Count u_recurrence(int p);
Count v_recurrence(int p);
Count u_closed(int p);
Count v_closed(int p);

// j of the three FS(., k-2) graphs obtained by deleting two adjacent claws
// and reconnecting straight, shifted by one, or shifted by two.
std::array<int, 3> reduction_triple(int j);

bool jaeger_predicate(int j, int k);
// 3 for FS(1,2), 6 for the other Jaeger graphs, 0 otherwise.
Count jaeger_count_closed(int j, int k);

struct QuantityCheck {
  std::string quantity;
  Count enumerated;
  Count closed_form;

  bool pass() const { return enumerated == closed_form; }
};

struct CountRow {
  int j = 0;
  int k = 0;
  std::vector<QuantityCheck> checks;

  bool pass() const;
  const QuantityCheck* find(const std::string& quantity) const;
};

struct CountReport {
  std::vector<CountRow> rows;  // ordered by (j, k)

  bool all_pass() const;
  // Header j,k,quantity,enumerated,closed_form,pass.
  std::string to_csv() const;
  std::string to_table() const;
};

// Enumerates every FS(j, k), j in {1,2,3}, 2 <= k <= k_max, and compares mu,
// mu1, mu2.0, mu2.1, mu2' (even k >= 4) and the Jaeger count against their
// closed forms. Cells run on up to `threads` workers.
CountReport verify_all(int k_max, int threads);
CountReport verify_all(int k_max);

CountRow verify_cell(int j, int k);

}  // namespace fsgraph

#endif  // FSGRAPH_FORMULAS_H_
