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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fsgraph/fs_family.h"
#include "fsgraph/io.h"
#include "fsgraph/matchings.h"

namespace fsgraph::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result fs(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("fs_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, CountOracle) {
  const Result r = fs({"count", "--j", "2", "--k", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "32\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, CountByTypeAndJson) {
  EXPECT_EQ(fs({"count", "--j", "1", "--k", "4", "--by-type"}).out,
            "mu 33\nmu1 15\nmu2.0 9\nmu2.1 9\n");
  const auto doc = nlohmann::json::parse(
      fs({"count", "--j", "1", "--k", "4", "--by-type", "--json"}).out);
  EXPECT_EQ(doc["mu"], 33);
  EXPECT_EQ(doc["mu2.1"], 9);
  EXPECT_EQ(nlohmann::json::parse(fs({"count", "--j", "3", "--k", "2", "--json"}).out)["mu"],
            12);
}

TEST(Cli, ChromaticOracle) {
  EXPECT_EQ(fs({"chromatic", "--j", "2", "--k", "5"}).out, "4\n");
  const Result r = fs({"chromatic", "--j", "1", "--k", "4"});
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0], "3");
  const FSGraph g = build_fs(1, 4);
  for (int c = 1; c <= 3; ++c) {
    EXPECT_TRUE(is_perfect_matching(g.graph(), parse_edge_set_json(ls[c])));
  }
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"nope"},
           {"count", "--j", "4", "--k", "3"},
           {"count", "--j", "1", "--k", "1"},
           {"count", "--j", "1"},
           {"count", "--j", "1", "--k", "3", "--bogus"},
           {"count", "--j", "x", "--k", "3"},
           {"build", "--j", "1", "--k", "3", "--format", "xml"},
           {"enumerate", "--j", "1", "--k", "3", "--type", "3"},
           {"transform", "--j", "2", "--k", "5", "--variant", "4", "--anchor", "0",
            "--matching", "0"},
           {"verify"},
           {"words", "--j", "1", "--k", "5"},
           {"two-factor", "--j", "1", "--k", "3", "--matching", "/nonexistent/m.json"},
           {"two-factor", "--j", "1", "--k", "3", "--matching", "9"},
       }) {
    const Result r = fs(args);
    EXPECT_EQ(r.code, 2) << ::testing::PrintToString(args);
    EXPECT_TRUE(r.out.empty()) << ::testing::PrintToString(args);
    EXPECT_EQ(lines(r.err).size(), 1u) << r.err;
  }
}

TEST(Cli, HelpExitsZero) {
  const Result r = fs({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
  EXPECT_EQ(fs({"count", "--help"}).code, 0);
}

TEST(Cli, BuildEdgeListAndJson) {
  const Result r = fs({"build", "--j", "3", "--k", "4"});
  EXPECT_EQ(r.code, 0);
  const MultiGraph g = parse_edge_list(r.out);
  EXPECT_TRUE(verify_construction(3, 4, g).all_passed());

  TempDir dir;
  const std::string path = dir.file("g.json");
  const Result j = fs({"build", "--j", "2", "--k", "3", "--format", "json", "--out", path});
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(j.out.empty());
  const auto doc = nlohmann::json::parse(read(path));
  EXPECT_EQ(doc["k"], 3);
  EXPECT_EQ(doc["edges"].size(), 18u);
}

TEST(Cli, EnumerateFiltersAndLimits) {
  const auto all = lines(fs({"enumerate", "--j", "1", "--k", "4"}).out);
  EXPECT_EQ(all.size(), 33u);
  const auto t20 = lines(fs({"enumerate", "--j", "1", "--k", "4", "--type", "2.0"}).out);
  EXPECT_EQ(t20.size(), 9u);
  const FSGraph g = build_fs(1, 4);
  for (const auto& l : t20) {
    EXPECT_EQ(classify(g, parse_edge_set_json(l)).type, MatchingType::kType2_0);
  }
  const auto few = lines(fs({"enumerate", "--j", "1", "--k", "4", "--limit", "5"}).out);
  EXPECT_EQ(few, std::vector<std::string>(all.begin(), all.begin() + 5));
  EXPECT_TRUE(fs({"enumerate", "--j", "1", "--k", "4", "--limit", "0"}).out.empty());
}

TEST(Cli, TwoFactorFromIndexAndFile) {
  const auto all = lines(fs({"enumerate", "--j", "2", "--k", "3"}).out);
  TempDir dir;
  const std::string path = dir.file("m.json");
  write(path, all[3]);
  const Result by_file = fs({"two-factor", "--j", "2", "--k", "3", "--matching", path});
  const Result by_index = fs({"two-factor", "--j", "2", "--k", "3", "--matching", "3"});
  EXPECT_EQ(by_file.code, 0);
  EXPECT_EQ(by_file.out, by_index.out);
  EXPECT_NE(by_file.out.find("type 1\ncycles 2\n"), std::string::npos);
  EXPECT_NE(by_file.out.find("\nk1 "), std::string::npos);

  const FSGraph g24 = build_fs(2, 4);
  const auto m24 = enumerate_perfect_matchings(g24);
  std::size_t index = 0;
  while (classify(m24[index]).type != MatchingType::kType2_1) ++index;
  const Result t2 = fs({"two-factor", "--j", "2", "--k", "4", "--matching",
                        std::to_string(index)});
  EXPECT_EQ(t2.code, 0);
  EXPECT_NE(t2.out.find("type 2.1\n"), std::string::npos);
  EXPECT_NE(t2.out.find("long_cycle "), std::string::npos);

  write(path, "[0, 1]");
  const Result bad = fs({"two-factor", "--j", "2", "--k", "3", "--matching", path});
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, TransformReportsDeltasOrClause) {
  const FSGraph g = build_fs(2, 7);
  const auto all = lines(fs({"enumerate", "--j", "2", "--k", "7"}).out);
  TempDir dir;
  const std::string path = dir.file("m.json");
  bool applied = false;
  bool rejected = false;
  for (const auto& l : all) {
    write(path, l);
    const Result r = fs({"transform", "--j", "2", "--k", "7", "--variant", "1", "--anchor",
                         "0", "--matching", path});
    if (r.code == 0) {
      applied = true;
      const auto ls = lines(r.out);
      ASSERT_FALSE(ls.empty());
      const std::string last = ls.back();
      ASSERT_EQ(last.rfind("matching ", 0), 0u);
      EXPECT_EQ(classify(g, parse_edge_set_json(last.substr(9))).type, MatchingType::kType1);
      std::istringstream gamma(ls[4]);
      std::string name, arrow;
      int before = 0, after = 0;
      gamma >> name >> before >> arrow >> after;
      EXPECT_EQ(name, "gamma1");
      EXPECT_EQ(after, before - 4);
    } else {
      rejected = true;
      EXPECT_EQ(r.code, 2);
      EXPECT_NE(r.err.find("local_transform"), std::string::npos);
    }
  }
  EXPECT_TRUE(applied);
  EXPECT_TRUE(rejected);
}

TEST(Cli, JaegerListingAndDoubleCover) {
  const Result r = fs({"jaeger", "--j", "3", "--k", "3", "--enumerate", "--bf-check"});
  EXPECT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 9u);
  EXPECT_EQ(ls[0], "jaeger_matchings 6");
  EXPECT_EQ(ls[2].rfind("matching [", 0), 0u);
  EXPECT_NE(ls[2].find(" blue ["), std::string::npos);
  EXPECT_NE(ls[2].find(" red ["), std::string::npos);
  EXPECT_EQ(ls.back(), "bf_check pass");

  const Result j1 = fs({"jaeger", "--j", "1", "--k", "4", "--bf-check"});
  EXPECT_EQ(j1.code, 1);
  EXPECT_NE(j1.out.find("jaeger_matchings 3\n"), std::string::npos);
  EXPECT_EQ(fs({"jaeger", "--j", "2", "--k", "5"}).out,
            "jaeger_matchings 0\nclosed_form 0\n");
}

TEST(Cli, Words) {
  const Result r = fs({"words", "--j", "2", "--k", "4", "--list-hamiltonian"});
  EXPECT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 11u);
  EXPECT_EQ(ls[0], "XY@2.0");
  EXPECT_EQ(ls[8], "words 18");
  EXPECT_EQ(ls[9], "hamiltonian_type2 8");
  EXPECT_EQ(ls[10], "closed_form 8");
  EXPECT_EQ(fs({"words", "--j", "3", "--k", "6"}).out,
            "words 54\nhamiltonian_type2 12\nclosed_form 12\n");
}

TEST(Cli, VerifyExitReflectsRows) {
  TempDir dir;
  const std::string csv = dir.file("report.csv");
  const Result ok = fs({"verify", "--kmax", "3", "--csv", csv});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("6 rows, 0 failing"), std::string::npos);
  EXPECT_EQ(read(csv).substr(0, 39), "j,k,quantity,enumerated,closed_form,pas");

  const Result bad = fs({"verify", "--kmax", "4"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("9 rows, 1 failing"), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"enumerate", "--j", "3", "--k", "6"},
           {"chromatic", "--j", "3", "--k", "7"},
           {"jaeger", "--j", "1", "--k", "5", "--enumerate"},
           {"verify", "--kmax", "5"},
       }) {
    EXPECT_EQ(fs(args).out, fs(args).out);
  }
}

}  // namespace
}  // namespace fsgraph::cli
