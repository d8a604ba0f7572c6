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


#include "cli.h"

#include <CLI11.hpp>

#include <cctype>
#include <climits>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "fsgraph/coloring.h"
#include "fsgraph/formulas.h"
#include "fsgraph/fs_family.h"
#include "fsgraph/io.h"
#include "fsgraph/jaeger.h"
#include "fsgraph/matchings.h"
#include "fsgraph/parallel.h"
#include "fsgraph/two_factor.h"
#include "fsgraph/words.h"

namespace fsgraph::cli {
namespace {

// Domain input rejected after parsing (bad matching file, unmet
// precondition). Reported like a usage error.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HostFlags {
  int j = 0;
  int k = 0;
};

void add_host_flags(CLI::App* sub, HostFlags& h) {
  sub->add_option("--j", h.j, "seam index")->required()->check(CLI::Range(1, 3));
  sub->add_option("--k", h.k, "number of claws")
      ->required()
      ->check(CLI::Range(2, INT_MAX));
}

std::string join(const std::vector<int>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

// A matching given as a JSON file or as an index into enumeration order.
Matching resolve_matching(const FSGraph& g, const std::string& source) {
  if (all_digits(source) && !std::ifstream(source)) {
    const auto all = enumerate_perfect_matchings(g, default_thread_count());
    const auto index = std::stoull(source);
    if (index >= all.size()) {
      throw InputError("matching index " + source + " out of range (" +
                       std::to_string(all.size()) + " matchings)");
    }
    return all[index];
  }
  return Matching(g, parse_edge_set_json(read_file(source)));
}

int cmd_build(const HostFlags& h, const std::string& format,
              const std::string& out_path, std::ostream& out) {
  const FSGraph g = build_fs(h.j, h.k);
  const std::string text =
      format == "json" ? to_json(g).dump(2) + "\n" : to_edge_list(g.graph());
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
  return kExitOk;
}

int cmd_count(const HostFlags& h, bool by_type, bool json, std::ostream& out) {
  const FSGraph g = build_fs(h.j, h.k);
  const TypeCounts t =
      count_by_type(enumerate_perfect_matchings(g, default_thread_count()));
  if (json) {
    nlohmann::ordered_json doc = {{"j", h.j}, {"k", h.k}, {"mu", t.mu}};
    if (by_type) {
      doc["mu1"] = t.mu1;
      doc["mu2.0"] = t.mu2_0;
      doc["mu2.1"] = t.mu2_1;
    }
    out << doc.dump() << '\n';
  } else if (by_type) {
    out << "mu " << t.mu << "\nmu1 " << t.mu1 << "\nmu2.0 " << t.mu2_0
        << "\nmu2.1 " << t.mu2_1 << '\n';
  } else {
    out << t.mu << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const HostFlags& h, const std::string& type,
                  std::optional<long long> limit, std::ostream& out) {
  std::optional<MatchingType> want;
  if (!type.empty()) want = parse_matching_type(type);
  const FSGraph g = build_fs(h.j, h.k);
  long long printed = 0;
  for (const Matching& m : enumerate_perfect_matchings(g, default_thread_count())) {
    if (limit && printed >= *limit) break;
    if (want && classify(m).type != *want) continue;
    out << edge_set_json(m.edges()) << '\n';
    ++printed;
  }
  return kExitOk;
}

int cmd_two_factor(const HostFlags& h, const std::string& source, std::ostream& out) {
  const FSGraph g = build_fs(h.j, h.k);
  const Matching m = resolve_matching(g, source);
  const Classification c = classify(m);
  const TwoFactor tf = complement_two_factor(m);
  out << "matching " << edge_set_json(m.edges()) << '\n'
      << "type " << to_string(c.type) << '\n'
      << "cycles " << tf.cycle_count() << '\n'
      << "lengths " << join(tf.lengths) << '\n'
      << "hamiltonian " << (is_hamiltonian(tf) ? "yes" : "no") << '\n';
  if (c.type == MatchingType::kType1 && tf.cycle_count() == 2) {
    const MajorProfile p = major_profile(m, tf);
    out << "owner " << join(p.owner) << '\n'
        << "k1 " << p.k1 << "\nk2 " << p.k2 << '\n';
  } else if (is_type2(c.type)) {
    const Type2Structure s = type2_structure(m, tf);
    out << "long_cycle " << s.long_cycle_length << '\n'
        << "six_cycles " << s.six_cycle_count << '\n';
    if (!s.anomalous_cycles.empty()) {
      out << "anomalous " << join(s.anomalous_cycles) << '\n';
    }
  }
  return kExitOk;
}

int cmd_transform(const HostFlags& h, int variant, int anchor,
                  const std::string& source, std::ostream& out) {
  const FSGraph g = build_fs(h.j, h.k);
  const Matching m = resolve_matching(g, source);
  const LocalTransformResult r = local_transform(m, variant, anchor);
  out << "variant " << r.variant << "\nanchor " << r.anchor << '\n'
      << "removed " << edge_set_json(r.removed) << '\n'
      << "added " << edge_set_json(r.added) << '\n'
      << "gamma1 " << r.gamma1_before << " -> " << r.gamma1_after << '\n'
      << "gamma2 " << r.gamma2_before << " -> " << r.gamma2_after << '\n'
      << "cycles_after " << r.cycle_count_after << '\n'
      << "owner_before " << join(r.owner_before) << '\n';
  if (!r.owner_after.empty()) out << "owner_after " << join(r.owner_after) << '\n';
  out << "matching " << edge_set_json(r.matching.edges()) << '\n';
  return kExitOk;
}

int cmd_chromatic(const HostFlags& h, std::ostream& out) {
  const FSGraph g = build_fs(h.j, h.k);
  const auto coloring = find_3_edge_coloring(g);
  if (!coloring) {
    out << "4\n";
    return kExitOk;
  }
  out << "3\n";
  for (const EdgeSet& cls : coloring->classes()) out << edge_set_json(cls) << '\n';
  return kExitOk;
}

int cmd_jaeger(const HostFlags& h, bool enumerate, bool bf_check, std::ostream& out) {
  const FSGraph g = build_fs(h.j, h.k);
  const auto found = enumerate_jaeger_matchings(g);
  out << "jaeger_matchings " << found.size() << '\n'
      << "closed_form " << jaeger_count_closed(h.j, h.k) << '\n';
  if (enumerate) {
    for (const JaegerMatching& jm : found) {
      out << "matching " << edge_set_json(jm.matching.edges()) << " blue "
          << edge_set_json(jm.decomposition.blue) << " red "
          << edge_set_json(jm.decomposition.red) << '\n';
    }
  }
  if (!bf_check) return kExitOk;
  if (found.size() != 6) {
    out << "bf_check fail: " << found.size() << " Jaeger matchings, 6 required\n";
    return kExitVerificationFailed;
  }
  std::vector<Matching> ms;
  for (const JaegerMatching& jm : found) ms.push_back(jm.matching);
  const bool ok = berge_fulkerson_check(ms);
  out << "bf_check " << (ok ? "pass" : "fail: some edge not covered exactly twice")
      << '\n';
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_words(const HostFlags& h, bool list, std::ostream& out) {
  if (h.k % 2 != 0 || h.k < 4) {
    throw InputError("words: --k must be even and at least 4");
  }
  const FSGraph g = build_fs(h.j, h.k);
  const int p = h.k / 2;
  std::uint64_t total = 0;
  for (MatchingType st : {MatchingType::kType2_0, MatchingType::kType2_1}) {
    for (const BlockWord& w : all_words(p, st)) {
      ++total;
      if (list && word_predicts_hamiltonian(h.j, w)) out << w.to_string() << '\n';
    }
  }
  out << "words " << total << '\n'
      << "hamiltonian_type2 " << hamiltonian_type2_count(g) << '\n'
      << "closed_form " << mu2prime_closed(h.j, p) << '\n';
  return kExitOk;
}

int cmd_verify(int k_max, const std::string& csv_path, std::ostream& out) {
  const CountReport report = verify_all(k_max, default_thread_count());
  if (!csv_path.empty()) write_file(csv_path, report.to_csv());
  out << report.to_table();
  return report.all_pass() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructs FS(j,k) graphs and checks their matching structure.", "fs"};
  app.require_subcommand(1);

  HostFlags h;
  std::function<int()> action;

  std::string format = "edgelist";
  std::string out_path;
  auto* build = app.add_subcommand("build", "emit FS(j,k) as an edge list or JSON");
  add_host_flags(build, h);
  build->add_option("--format", format)->check(CLI::IsMember({"edgelist", "json"}));
  build->add_option("--out", out_path, "output path (default stdout)");
  build->callback([&] { action = [&] { return cmd_build(h, format, out_path, out); }; });

  bool by_type = false;
  bool json = false;
  auto* count = app.add_subcommand("count", "count perfect matchings");
  add_host_flags(count, h);
  count->add_flag("--by-type", by_type, "split by matching type");
  count->add_flag("--json", json, "machine-readable output");
  count->callback([&] { action = [&] { return cmd_count(h, by_type, json, out); }; });

  std::string type;
  std::optional<long long> limit;
  auto* enumerate = app.add_subcommand("enumerate", "list perfect matchings");
  add_host_flags(enumerate, h);
  enumerate->add_option("--type", type)->check(CLI::IsMember({"1", "2.0", "2.1"}));
  enumerate->add_option("--limit", limit)->check(CLI::NonNegativeNumber);
  enumerate->callback(
      [&] { action = [&] { return cmd_enumerate(h, type, limit, out); }; });

  std::string matching;
  auto* two_factor = app.add_subcommand("two-factor", "analyse G - M for one matching");
  add_host_flags(two_factor, h);
  two_factor->add_option("--matching", matching, "JSON file or enumeration index")
      ->required();
  two_factor->callback(
      [&] { action = [&] { return cmd_two_factor(h, matching, out); }; });

  int variant = 0;
  int anchor = 0;
  auto* transform = app.add_subcommand("transform", "apply a local transformation");
  add_host_flags(transform, h);
  transform->add_option("--variant", variant)->required()->check(CLI::Range(1, 3));
  transform->add_option("--anchor", anchor)->required()->check(CLI::NonNegativeNumber);
  transform->add_option("--matching", matching, "JSON file or enumeration index")
      ->required();
  transform->callback([&] {
    action = [&] { return cmd_transform(h, variant, anchor, matching, out); };
  });

  auto* chromatic = app.add_subcommand("chromatic", "chromatic index and a colouring");
  add_host_flags(chromatic, h);
  chromatic->callback([&] { action = [&] { return cmd_chromatic(h, out); }; });

  bool list_jaeger = false;
  bool bf_check = false;
  auto* jaeger = app.add_subcommand("jaeger", "Jaeger matchings");
  add_host_flags(jaeger, h);
  jaeger->add_flag("--enumerate", list_jaeger, "list matchings with blue/red split");
  jaeger->add_flag("--bf-check", bf_check, "check that six matchings double-cover");
  jaeger->callback(
      [&] { action = [&] { return cmd_jaeger(h, list_jaeger, bf_check, out); }; });

  bool list_words = false;
  auto* words = app.add_subcommand("words", "block words of type-2 matchings");
  add_host_flags(words, h);
  words->add_flag("--list-hamiltonian", list_words, "print predicted hamiltonian words");
  words->callback([&] { action = [&] { return cmd_words(h, list_words, out); }; });

  int k_max = 0;
  std::string csv_path;
  auto* verify = app.add_subcommand("verify", "compare closed forms with enumeration");
  verify->add_option("--kmax", k_max)->required()->check(CLI::Range(2, INT_MAX));
  verify->add_option("--csv", csv_path, "also write the report as CSV");
  verify->callback([&] { action = [&] { return cmd_verify(k_max, csv_path, out); }; });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "fs: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "fs: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "fs: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "fs: internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace fsgraph::cli
