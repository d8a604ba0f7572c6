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

#include "fsgraph/formulas.h"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "fsgraph/fs_family.h"
#include "fsgraph/jaeger.h"
#include "fsgraph/matchings.h"
#include "fsgraph/parallel.h"
#include "fsgraph/two_factor.h"

namespace fsgraph {

namespace {

void check_domain(int j, int k, const char* who) {
  if (j < 1 || j > 3 || k < 2) {
    throw std::invalid_argument(std::string(who) + ": need j in {1,2,3} and k >= 2");
  }
}

Count pow_int(int base, int exp) {
  Count r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int sign(int exp) { return exp % 2 == 0 ? 1 : -1; }  // (-1)^exp

void check_p(int p, const char* who) {
  if (p < 2) throw std::invalid_argument(std::string(who) + ": need p >= 2");
}

}  // namespace

Count mu1_closed(int j, int k) {
  check_domain(j, k, "mu1_closed");
  const Count two_k = pow_int(2, k);
  switch (j) {
    case 1:
      return two_k - sign(k);
    case 2:
      return two_k;
    default:
      return two_k + 2 * sign(k);
  }
}

Count mu2_closed(int j, int k) {
  check_domain(j, k, "mu2_closed");
  if (k % 2 != 0) return 0;
  return 2 * pow_int(3, k / 2);
}

Count mu_closed(int j, int k) {
  check_domain(j, k, "mu_closed");
  const Count two_k = pow_int(2, k);
  Count base = two_k;
  if (k % 2 == 0) base += 2 * pow_int(3, k / 2);
  static constexpr int kOddShift[] = {1, 0, -2};
  static constexpr int kEvenShift[] = {-1, 0, 2};
  return base + (k % 2 != 0 ? kOddShift : kEvenShift)[j - 1];
}

Count mu2prime_closed(int j, int p) {
  if (j < 1 || j > 3) throw std::invalid_argument("mu2prime_closed: j must be 1, 2 or 3");
  check_p(p, "mu2prime_closed");
  const Count lead = pow_int(2, p + 1);
  switch (j) {
    case 1:
      return lead + 2 * sign(p + 1);
    case 2:
      return lead;
    default:
      return lead + 4 * sign(p);
  }
}

Count u_recurrence(int p) {
  check_p(p, "u_recurrence");
  Count u = 2;
  for (int q = 3; q <= p; ++q) u = pow_int(2, q - 1) - u;
  return u;
}

Count v_recurrence(int p) {
  check_p(p, "v_recurrence");
  Count v = 1;
  for (int q = 3; q <= p; ++q) v = pow_int(2, q - 1) - v;
  return v;
}

Count u_closed(int p) {
  check_p(p, "u_closed");
  const Count num = 2 * (pow_int(2, p - 1) + sign(p));
  if (num % 3 != 0) throw std::logic_error("u_closed: non-integral value");
  return num / 3;
}

Count v_closed(int p) {
  check_p(p, "v_closed");
  const Count num = pow_int(2, p) + sign(p + 1);
  if (num % 3 != 0) throw std::logic_error("v_closed: non-integral value");
  return num / 3;
}

std::array<int, 3> reduction_triple(int j) {
  switch (j) {
    case 1:
      return {1, 1, 3};
    case 2:
      return {2, 2, 2};
    case 3:
      return {3, 1, 1};
  }
  throw std::invalid_argument("reduction_triple: j must be 1, 2 or 3");
}

bool jaeger_predicate(int j, int k) {
  check_domain(j, k, "jaeger_predicate");
  return (j == 1 && k % 3 != 0) || (j == 3 && k % 3 == 0);
}

Count jaeger_count_closed(int j, int k) {
  if (!jaeger_predicate(j, k)) return 0;
  return k == 2 ? 3 : 6;
}

bool CountRow::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const QuantityCheck& c) { return c.pass(); });
}

const QuantityCheck* CountRow::find(const std::string& quantity) const {
  for (const auto& c : checks) {
    if (c.quantity == quantity) return &c;
  }
  return nullptr;
}

bool CountReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const CountRow& r) { return r.pass(); });
}

std::string CountReport::to_csv() const {
  std::ostringstream out;
  out << "j,k,quantity,enumerated,closed_form,pass\n";
  for (const CountRow& row : rows) {
    for (const QuantityCheck& c : row.checks) {
      out << row.j << ',' << row.k << ',' << c.quantity << ',' << c.enumerated << ','
          << c.closed_form << ',' << (c.pass() ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

std::string CountReport::to_table() const {
  std::ostringstream out;
  out << std::left << std::setw(4) << "j" << std::setw(5) << "k" << std::setw(10)
      << "quantity" << std::right << std::setw(14) << "enumerated" << std::setw(14)
      << "closed_form" << "  pass\n";
  for (const CountRow& row : rows) {
    for (const QuantityCheck& c : row.checks) {
      out << std::left << std::setw(4) << row.j << std::setw(5) << row.k
          << std::setw(10) << c.quantity << std::right << std::setw(14)
          << c.enumerated.str() << std::setw(14) << c.closed_form.str() << "  "
          << (c.pass() ? "ok" : "FAIL") << '\n';
    }
  }
  const auto failed = std::count_if(rows.begin(), rows.end(),
                                    [](const CountRow& r) { return !r.pass(); });
  out << rows.size() << " rows, " << failed << " failing\n";
  return out.str();
}

CountRow verify_cell(int j, int k) {
  const FSGraph g = build_fs(j, k);
  const std::vector<Matching> all = enumerate_perfect_matchings(g, 1);
  const TypeCounts t = count_by_type(all);

  CountRow row{j, k, {}};
  auto add = [&](std::string name, std::uint64_t enumerated, Count closed) {
    row.checks.push_back({std::move(name), Count(enumerated), std::move(closed)});
  };
  add("mu", t.mu, mu_closed(j, k));
  add("mu1", t.mu1, mu1_closed(j, k));
  add("mu2.0", t.mu2_0, mu2_closed(j, k) / 2);
  add("mu2.1", t.mu2_1, mu2_closed(j, k) / 2);
  if (k % 2 == 0 && k >= 4) {
    std::uint64_t hamiltonian = 0;
    for (const Matching& m : all) {
      if (is_type2(classify(m).type) && is_hamiltonian(complement_two_factor(m))) {
        ++hamiltonian;
      }
    }
    add("mu2'", hamiltonian, mu2prime_closed(j, k / 2));
  }
  std::uint64_t jaeger = 0;
  for (const Matching& m : all) {
    if (jaeger_decompose(m)) ++jaeger;
  }
  add("jaeger", jaeger, jaeger_count_closed(j, k));
  return row;
}

CountReport verify_all(int k_max, int threads) {
  if (k_max < 2) throw std::invalid_argument("verify_all: k_max must be at least 2");
  std::vector<std::pair<int, int>> cells;
  for (int j = 1; j <= 3; ++j) {
    for (int k = 2; k <= k_max; ++k) cells.emplace_back(j, k);
  }
  CountReport report;
  report.rows.resize(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t i) {
    report.rows[i] = verify_cell(cells[i].first, cells[i].second);
  });
  return report;
}

CountReport verify_all(int k_max) { return verify_all(k_max, default_thread_count()); }

}  // namespace fsgraph
