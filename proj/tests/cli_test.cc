// Copyright 2026 The linsecagg Authors
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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"
#include "linsecagg/cli.h"

namespace linsecagg {
namespace {

using nlohmann::json;

struct CliResult {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

CliResult RunCommand(std::vector<std::string> args) {
  args.insert(args.begin(), "linsecagg");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("linsecagg_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
    example1_ = Write("example1.json", R"({"q": 3, "F": [[1, 1, 1]], "G": [[1, 0, 1]]})");
    example2_raw_ = Write("example2_raw.json", R"({"q": 7,
      "F": [[1, 0, 5, 5, 3, 5], [0, 1, 5, 6, 0, 3]],
      "G": [[3, 0, 1, 4, 2, 4], [2, 2, 1, 3, 5, 3], [1, 1, 3, 4, 3, 1]]})");
    encoder36_ = Write("p.json", R"({"P": [[2, 2], [2, 1], [1, 0], [0, 1], [0, 0], [0, 0]]})");
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const std::filesystem::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
  std::string example1_, example2_raw_, encoder36_;
};

TEST_F(CliTest, ValidateExitCodes) {
  const CliResult ok = RunCommand({"validate", example1_});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_EQ(ok.report()["summary"], "q=3 K=3 M=1 N=1");
  EXPECT_TRUE(ok.err.empty());

  const CliResult bad = RunCommand({"validate", example2_raw_});
  EXPECT_EQ(bad.code, kExitFalse);
  EXPECT_EQ(bad.report()["violations"][0]["kind"], "StackRankDeficient");

  const CliResult truncated = RunCommand({"validate", Write("t.json", R"({"q": 3, "F": [[1, 1)")});
  EXPECT_EQ(truncated.code, kExitInputError);
  EXPECT_EQ(truncated.report()["error"], "ParseError");
  EXPECT_NE(truncated.err.find("byte"), std::string::npos);

  EXPECT_EQ(RunCommand({"validate", (dir_ / "missing.json").string()}).code, kExitInputError);
  EXPECT_EQ(RunCommand({"validate", Write("s.json", R"({"q": 3, "F": [[1]]})")}).code,
            kExitInputError);
  EXPECT_EQ(RunCommand({"frobnicate"}).code, kExitInputError);
}

TEST_F(CliTest, ValidateReportsNonPrimeFields) {
  const CliResult r = RunCommand({"validate", Write("q9.json", R"({"q": 9, "F": [[1, 1]], "G": [[1, 0]]})")});
  EXPECT_EQ(r.code, kExitFalse);
  EXPECT_EQ(r.report()["violations"][0]["kind"], "NotPrime");
}

TEST_F(CliTest, ReduceOutputIsAnInstanceFile) {
  const CliResult r = RunCommand({"reduce", example2_raw_});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.report()["dropped_row_count"], 1);
  EXPECT_EQ(r.report()["G"], json::parse("[[0,0,1,0,3,3],[0,0,0,1,0,1]]"));
  const std::string reduced = Write("reduced.json", r.out);
  EXPECT_EQ(RunCommand({"validate", reduced}).code, kExitOk);
  const CliResult sets = RunCommand({"minimal-sets", reduced});
  EXPECT_EQ(sets.code, kExitOk);
  EXPECT_EQ(sets.report()["count"], 14);
}

TEST_F(CliTest, MinimalSetsAndEncoder) {
  const CliResult sets = RunCommand({"minimal-sets", example1_});
  EXPECT_EQ(sets.code, kExitOk);
  EXPECT_EQ(sets.report()["minimal_sets"], json::parse("[[1,2],[2,3]]"));
  EXPECT_EQ(RunCommand({"minimal_sets", example1_}).code, kExitOk);

  const CliResult enc = RunCommand({"encoder", example1_, "--set", "1,2"});
  EXPECT_EQ(enc.code, kExitOk);
  EXPECT_EQ(enc.report()["P"], json::parse("[[2],[1],[0]]"));
  const std::string p_file = Write("enc.json", enc.out);
  EXPECT_EQ(RunCommand({"verify", example1_, "--encoder", p_file}).code, kExitOk);

  EXPECT_EQ(RunCommand({"encoder", example1_, "--set", "1,3"}).code, kExitFalse);
  EXPECT_EQ(RunCommand({"encoder", example1_, "--set", "1,9"}).code, kExitInputError);
}

TEST_F(CliTest, VerifyRejectsBadEncoder) {
  const std::string bad = Write("bad.json", R"({"P": [[1], [0], [0]]})");
  const CliResult r = RunCommand({"verify", example1_, "--encoder", bad});
  EXPECT_EQ(r.code, kExitFalse);
  EXPECT_FALSE(r.report()["condition1"].get<bool>());
  const std::string wrong_shape = Write("shape.json", R"({"P": [[1], [0]]})");
  EXPECT_EQ(RunCommand({"verify", example1_, "--encoder", wrong_shape}).code, kExitInputError);
  const std::string out_of_field = Write("range.json", R"({"P": [[3], [0], [0]]})");
  EXPECT_EQ(RunCommand({"verify", example1_, "--encoder", out_of_field}).code, kExitInputError);
}

TEST_F(CliTest, SecurityAutoReducesWithNotice) {
  const CliResult r =
      RunCommand({"--pretty", "security", example2_raw_, "--encoder", encoder36_});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.report()["summary"], "secure, 5764801 tuples enumerated");
  EXPECT_EQ(r.report()["notices"].size(), 1u);
  EXPECT_NE(r.err.find("secure, 5764801 tuples enumerated"), std::string::npos);
}

TEST_F(CliTest, SecurityOutcomes) {
  const std::string zero = Write("zero.json", R"({"P": [[0], [0], [0]]})");
  const CliResult insecure = RunCommand({"security", example1_, "--encoder", zero});
  EXPECT_EQ(insecure.code, kExitFalse);
  EXPECT_FALSE(insecure.report()["secure"].get<bool>());
  EXPECT_TRUE(insecure.report().contains("counterexample"));

  const CliResult budget =
      RunCommand({"security", example1_, "--encoder", zero, "--budget", "10"});
  EXPECT_EQ(budget.code, kExitBudget);
  EXPECT_EQ(budget.report()["error"], "BudgetExceeded");
  EXPECT_EQ(budget.report()["required"], 81);

  const CliResult schedule = RunCommand({"security", example1_, "--rate", "1/2,1,1/2"});
  EXPECT_EQ(schedule.code, kExitOk);
  EXPECT_EQ(schedule.report()["tuples"], 6561);
  EXPECT_EQ(RunCommand({"security", example1_}).code, kExitInputError);
}

TEST_F(CliTest, MembershipAndSchedule) {
  const CliResult in = RunCommand({"membership", example1_, "--rate", "1/2,1,1/2"});
  EXPECT_EQ(in.code, kExitOk);
  EXPECT_EQ(in.report()["weights"][0]["weight"], "1/2");

  const CliResult out = RunCommand({"membership", example1_, "--rate", "1,9/10,1"});
  EXPECT_EQ(out.code, kExitFalse);
  EXPECT_EQ(out.report()["violated_inequality"]["text"], "R2 >= 1");

  EXPECT_EQ(RunCommand({"membership", example1_, "--rate", "1,x,1"}).code, kExitInputError);
  EXPECT_EQ(RunCommand({"membership", example1_, "--rate", "1,1"}).code, kExitInputError);
  EXPECT_EQ(RunCommand({"membership", example1_, "--rate", "1,-1,1"}).code, kExitInputError);

  const CliResult s = RunCommand({"schedule", example1_, "--rate", "3/4,1,1/4"});
  EXPECT_EQ(s.code, kExitOk);
  EXPECT_EQ(s.report()["total_length"], 4);
  EXPECT_EQ(s.report()["key_usage"], json::parse("[3,4,1]"));
  EXPECT_EQ(RunCommand({"schedule", example1_, "--rate", "1,1/2,1"}).code, kExitFalse);
}

TEST_F(CliTest, SimulateIsReproducible) {
  const std::vector<std::string> args = {"simulate", example2_raw_, "--encoder", encoder36_,
                                         "--blocks", "5", "--seed", "42"};
  // The raw instance is rejected: only the security command reduces.
  EXPECT_EQ(RunCommand(args).code, kExitInputError);
  const std::string reduced = Write("r.json", RunCommand({"reduce", example2_raw_}).out);
  std::vector<std::string> ok_args = args;
  ok_args[1] = reduced;
  const CliResult a = RunCommand(ok_args);
  const CliResult b = RunCommand(ok_args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.report()["rounds"].size(), 5u);
  EXPECT_TRUE(a.report()["all_correct"].get<bool>());
  ok_args.back() = "43";
  EXPECT_NE(RunCommand(ok_args).out, a.out);
}

TEST_F(CliTest, SweepReport) {
  const CliResult r = RunCommand({"sweep", example1_});
  EXPECT_EQ(r.code, kExitOk);
  const json j = r.report();
  EXPECT_EQ(j["passing_count"], 6);
  EXPECT_EQ(j["support_sets"], json::parse("[[1,2],[1,2,3],[2,3]]"));
  EXPECT_TRUE(j["theorem3_violations"].empty());
  EXPECT_FALSE(j["limitation"].get<std::string>().empty());
  EXPECT_EQ(RunCommand({"sweep", example1_, "--budget", "100"}).code, kExitBudget);
}

TEST_F(CliTest, EveryReportReparses) {
  const std::vector<std::vector<std::string>> commands = {
      {"validate", example1_},
      {"reduce", example1_},
      {"minimal-sets", example1_},
      {"encoder", example1_, "--set", "2,3"},
      {"membership", example1_, "--rate", "1,1,0"},
      {"schedule", example1_, "--rate", "1/2,1,1/2"},
      {"sweep", example1_},
      {"validate", example2_raw_},
      {"minimal-sets", example2_raw_}};
  for (const auto& c : commands) {
    const CliResult r = RunCommand(c);
    EXPECT_NO_THROW(json::parse(r.out)) << c[0];
    EXPECT_TRUE(json::parse(r.out).is_object());
  }
}

}  // namespace
}  // namespace linsecagg
