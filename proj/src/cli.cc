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

#include "linsecagg/cli.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linsecagg/error.h"
#include "linsecagg/index_set.h"
#include "linsecagg/instance.h"
#include "linsecagg/json_io.h"
#include "linsecagg/oracle.h"
#include "linsecagg/rational.h"
#include "linsecagg/region.h"
#include "linsecagg/scheme.h"

namespace linsecagg {
namespace {

using nlohmann::json;

struct Settings {
  bool pretty = false;
  std::string instance_path;
  std::string encoder_path;
  std::string set_text;
  std::string rate_text;
  std::size_t max_size = 0;
  bool allow_large = false;
  std::size_t user_limit = 20;
  std::uint64_t budget = OracleOptions{}.budget;
  unsigned workers = 1;
  std::size_t blocks = 1;
  std::uint64_t seed = 0;
};

// Uniform field element from a 64-bit Mersenne Twister, by rejection of the
// top partial interval. std::mt19937_64's output sequence is fixed by the
// standard, so this is reproducible everywhere.
class FieldSampler {
 public:
  FieldSampler(std::uint64_t seed, std::uint32_t q)
      : engine_(seed), q_(q), limit_(UINT64_MAX - UINT64_MAX % q) {}

  Element Next() {
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit_);
    return static_cast<Element>(v % q_);
  }

 private:
  std::mt19937_64 engine_;
  std::uint32_t q_;
  std::uint64_t limit_;
};

class Command {
 public:
  Command(const Settings& settings, std::ostream& out, std::ostream& err)
      : s_(settings), out_(out), err_(err) {}

  int Emit(const json& report, int code, const std::string& summary) {
    out_ << report.dump(2) << "\n";
    if (s_.pretty && !summary.empty()) err_ << summary << "\n";
    return code;
  }

  int Validate() {
    const RawInstance raw = InstanceFromJson(ReadJsonFile(s_.instance_path));
    const std::vector<Violation> violations = FindViolations(raw);
    json report{{"command", "validate"}, {"valid", violations.empty()}};
    report["violations"] = ViolationsJson(violations);
    std::string summary;
    try {
      auto [f, g] = RawMatrices(raw);
      report["q"] = raw.q;
      report["k"] = f.cols();
      report["m"] = f.rows();
      report["n"] = g.rows();
      report["rank_f"] = Rank(f);
      report["rank_g"] = Rank(g);
      report["rank_stack"] = Rank(VStack(f, g));
      summary = "q=" + std::to_string(raw.q) + " K=" + std::to_string(f.cols()) +
                " M=" + std::to_string(f.rows()) + " N=" + std::to_string(g.rows());
    } catch (const Error&) {
      // Shape and field problems are already listed as violations.
    }
    report["summary"] = summary;
    for (const Violation& v : violations) {
      summary += "\n  ";
      summary += ViolationName(v.kind);
      summary += ": " + v.detail;
    }
    return Emit(report, violations.empty() ? kExitOk : kExitFalse,
                (violations.empty() ? "valid " : "invalid ") + summary);
  }

  int Reduce() {
    const RawInstance raw = InstanceFromJson(ReadJsonFile(s_.instance_path));
    auto [f, g] = RawMatrices(raw);
    const ReductionReport reduction = ReduceProtection(f, g);
    json report = InstanceToJson(f, reduction.reduced_g);
    report["command"] = "reduce";
    report["original_n"] = reduction.original_n;
    report["reduced_n"] = reduction.reduced_g.rows();
    report["dropped_row_count"] = reduction.dropped_row_count;
    const std::vector<Violation> after = FindViolations(f, reduction.reduced_g);
    report["valid_after_reduction"] = after.empty();
    report["violations_after_reduction"] = ViolationsJson(after);
    return Emit(report, kExitOk,
                "dropped " + std::to_string(reduction.dropped_row_count) + " of " +
                    std::to_string(reduction.original_n) + " rows of G; G' = " +
                    reduction.reduced_g.ToString());
  }

  int MinimalSets() {
    const AggregationInstance inst = LoadInstance();
    const RegionVertices vertices = EnumerateMinimalSets(inst, EnumOptions());
    json report{{"command", "minimal_sets"},
                {"k", inst.num_users()},
                {"n", inst.n()},
                {"count", vertices.minimal_sets.size()},
                {"minimal_sets", SetsToJson(vertices.minimal_sets)}};
    json tuples = json::array();
    for (const RateTuple& t : vertices.vertex_tuples) tuples.push_back(RatesToJson(t.rates()));
    report["vertices"] = tuples;
    std::string summary = std::to_string(vertices.minimal_sets.size()) + " minimal sets:";
    for (const IndexSet& m : vertices.minimal_sets) summary += " " + m.ToString();
    return Emit(report, kExitOk, summary);
  }

  int Encoder() {
    const AggregationInstance inst = LoadInstance();
    const IndexSet set = IndexSet::Parse(s_.set_text);
    const bool satisfied = RankIncrementCheck(inst, set);
    json report{{"command", "encoder"},
                {"set", SetToJson(set)},
                {"condition_satisfied", satisfied}};
    if (!satisfied) {
      return Emit(report, kExitFalse,
                  set.ToString() + " fails the rank-increment condition");
    }
    const Matrix p = ConstructEncoder(inst, set);
    report["P"] = MatrixToJson(p);
    report["zero_rows_in_set"] = json(ZeroRowsInSet(p, set));
    report["rate_tuple"] = RatesToJson(SupportRates(p).rate_tuple.rates());
    return Emit(report, kExitOk, "P = " + p.ToString());
  }

  int Verify() {
    const AggregationInstance inst = LoadInstance();
    const Matrix p = LoadEncoder(inst);
    const EncoderCheck check = VerifyEncoder(inst, p);
    const SchemeMetrics metrics = SupportRates(p);
    json report{{"command", "verify"},
                {"ok", check.ok()},
                {"condition1", check.condition1},
                {"condition2", check.condition2},
                {"gp_rank", check.gp_rank},
                {"violations", check.violations},
                {"rate_tuple", RatesToJson(metrics.rate_tuple.rates())},
                {"communication_rate", FormatRational(metrics.communication_rate)},
                {"total_key_rate", FormatRational(metrics.total_key_rate)}};
    std::string summary = check.ok() ? "encoder satisfies F*P = 0 and rank(G*P) = N"
                                     : "encoder rejected";
    for (const std::string& v : check.violations) summary += "\n  " + v;
    return Emit(report, check.ok() ? kExitOk : kExitFalse, summary);
  }

  int Simulate() {
    const AggregationInstance inst = LoadInstance();
    const EncodingScheme scheme(inst, LoadEncoder(inst));
    FieldSampler sampler(s_.seed, inst.modulus().value());
    json rounds = json::array();
    bool all_correct = true;
    for (std::size_t b = 0; b < s_.blocks; ++b) {
      std::vector<Element> w(inst.num_users()), key(inst.n());
      for (Element& e : w) e = sampler.Next();
      for (Element& e : key) e = sampler.Next();
      const std::vector<Element> x = SimulateRound(scheme, w, key);
      const std::vector<Element> decoded = Decode(inst, x);
      const std::vector<Element> expected = Multiply(inst.f(), w);
      const bool correct = decoded == expected;
      all_correct = all_correct && correct;
      rounds.push_back(json{{"w", w},
                            {"s", key},
                            {"x", x},
                            {"decoded", decoded},
                            {"expected", expected},
                            {"correct", correct}});
    }
    json report{{"command", "simulate"},
                {"prng", "mt19937_64 with rejection sampling"},
                {"seed", s_.seed},
                {"blocks", s_.blocks},
                {"all_correct", all_correct},
                {"rounds", rounds}};
    return Emit(report, all_correct ? kExitOk : kExitFalse,
                std::to_string(s_.blocks) + " rounds, decode " +
                    (all_correct ? "always matched F*w" : "MISMATCHED F*w"));
  }

  int Security() {
    json notices = json::array();
    const AggregationInstance inst = LoadInstanceReducing(notices);
    json report{{"command", "security"}, {"notices", notices}};
    SecurityVerdict verdict;
    if (!s_.encoder_path.empty()) {
      verdict = ExhaustiveVerdict(EncodingScheme(inst, LoadEncoder(inst)), OracleOpts());
      report["mode"] = "encoder";
    } else if (!s_.rate_text.empty()) {
      const RateTuple rate = RateTuple::Parse(s_.rate_text);
      const RegionVertices vertices = EnumerateMinimalSets(inst, EnumOptions());
      const TimeShareSchedule schedule = BuildTimeShareSchedule(inst, vertices, rate);
      verdict = ExhaustiveVerdict(schedule, OracleOpts());
      report["mode"] = "schedule";
      report["total_length"] = schedule.total_length();
    } else {
      throw Error(ErrorCode::kParse, "security needs --encoder or --rate");
    }
    const bool pass = verdict.correct && verdict.secure;
    report["correct"] = verdict.correct;
    report["secure"] = verdict.secure;
    report["mi_estimate"] = verdict.mi_estimate;
    report["tuples"] = verdict.tuples;
    if (verdict.counterexample) {
      const CounterExample& c = *verdict.counterexample;
      report["counterexample"] = json{{"f", c.triple.f},     {"g", c.triple.g},
                                      {"x", c.triple.x},     {"count_fgx", c.count_fgx},
                                      {"count_f", c.count_f}, {"count_fg", c.count_fg},
                                      {"count_fx", c.count_fx}};
    }
    std::string summary = std::string(verdict.secure ? "secure" : "insecure") +
                          (verdict.correct ? "" : ", incorrect") + ", " +
                          std::to_string(verdict.tuples) + " tuples enumerated";
    report["summary"] = summary;
    return Emit(report, pass ? kExitOk : kExitFalse, summary);
  }

  int Membership() {
    const AggregationInstance inst = LoadInstance();
    const RateTuple rate = RateTuple::Parse(s_.rate_text);
    const RegionVertices vertices = EnumerateMinimalSets(inst, EnumOptions());
    const MembershipResult result = linsecagg::Membership(rate, vertices);
    json report{{"command", "membership"},
                {"rate", RatesToJson(rate.rates())},
                {"member", result.member}};
    std::string summary;
    if (result.member) {
      json weights = json::array();
      for (std::size_t j = 0; j < result.weights.size(); ++j) {
        if (result.weights[j] == 0) continue;
        weights.push_back(json{{"set", SetToJson(vertices.minimal_sets[j])},
                               {"weight", FormatRational(result.weights[j])}});
      }
      report["weights"] = weights;
      summary = rate.ToString() + " is achievable";
    } else if (result.violated) {
      report["violated_inequality"] =
          json{{"coefficients", RatesToJson(result.violated->coefficients)},
               {"bound", FormatRational(result.violated->bound)},
               {"text", result.violated->ToString()}};
      summary = rate.ToString() + " violates " + result.violated->ToString();
    }
    return Emit(report, result.member ? kExitOk : kExitFalse, summary);
  }

  int Schedule() {
    const AggregationInstance inst = LoadInstance();
    const RateTuple rate = RateTuple::Parse(s_.rate_text);
    const RegionVertices vertices = EnumerateMinimalSets(inst, EnumOptions());
    const MembershipResult membership = linsecagg::Membership(rate, vertices);
    if (!membership.member) {
      json report{{"command", "schedule"}, {"rate", RatesToJson(rate.rates())},
                  {"achievable", false}};
      if (membership.violated) report["violated"] = membership.violated->ToString();
      return Emit(report, kExitFalse, rate.ToString() + " is not achievable");
    }
    const TimeShareSchedule schedule = BuildTimeShareSchedule(inst, vertices, rate);
    const SchemeMetrics metrics = ScheduleMetrics(schedule);
    json blocks = json::array();
    for (const TimeShareBlock& b : schedule.blocks()) {
      blocks.push_back(json{{"set", SetToJson(b.set)},
                            {"block_count", b.block_count},
                            {"P", MatrixToJson(b.encoder)}});
    }
    json report{{"command", "schedule"},
                {"rate", RatesToJson(rate.rates())},
                {"achievable", true},
                {"total_length", schedule.total_length()},
                {"blocks", blocks},
                {"key_usage", schedule.KeyUsage()},
                {"rate_tuple", RatesToJson(metrics.rate_tuple.rates())},
                {"communication_rate", FormatRational(metrics.communication_rate)},
                {"total_key_rate", FormatRational(metrics.total_key_rate)}};
    return Emit(report, kExitOk,
                "L=" + std::to_string(schedule.total_length()) + " with " +
                    std::to_string(schedule.blocks().size()) + " blocks");
  }

  int Sweep() {
    const AggregationInstance inst = LoadInstance();
    const SweepReport sweep = ConverseSweep(inst, OracleOpts());
    json passing = json::array();
    for (const Matrix& p : sweep.passing_encoders) passing.push_back(MatrixToJson(p));
    json t3 = json::array();
    for (const Matrix& p : sweep.theorem3_violations) t3.push_back(MatrixToJson(p));
    json l1 = json::array();
    for (const Matrix& p : sweep.sufficiency_violations) l1.push_back(MatrixToJson(p));
    json report{{"command", "sweep"},
                {"ok", sweep.ok()},
                {"total_encoders", sweep.total_encoders},
                {"passing_count", sweep.passing_encoders.size()},
                {"passing_encoders", passing},
                {"support_sets", SetsToJson(sweep.support_sets)},
                {"minimal_sets", SetsToJson(sweep.minimal_sets)},
                {"theorem3_violations", t3},
                {"unrealized_minimal_sets", SetsToJson(sweep.unrealized_minimal_sets)},
                {"sufficiency_violations", l1},
                {"limitation", std::string(SweepReport::kLimitation)}};
    return Emit(report, sweep.ok() ? kExitOk : kExitFalse,
                std::to_string(sweep.passing_encoders.size()) + " of " +
                    std::to_string(sweep.total_encoders) +
                    " encoders correct and secure; " +
                    (sweep.ok() ? "no violations" : "VIOLATIONS FOUND"));
  }

 private:
  static json ViolationsJson(const std::vector<Violation>& violations) {
    json out = json::array();
    for (const Violation& v : violations) {
      out.push_back(json{{"kind", std::string(ViolationName(v.kind))}, {"detail", v.detail}});
    }
    return out;
  }

  AggregationInstance LoadInstance() const {
    return ValidateInstance(InstanceFromJson(ReadJsonFile(s_.instance_path)));
  }

  // Reduces G first when the only problem is a dependency between G and F.
  AggregationInstance LoadInstanceReducing(json& notices) const {
    const RawInstance raw = InstanceFromJson(ReadJsonFile(s_.instance_path));
    const std::vector<Violation> violations = FindViolations(raw);
    const bool only_stack =
        !violations.empty() &&
        std::all_of(violations.begin(), violations.end(), [](const Violation& v) {
          return v.kind == ViolationKind::kStackRankDeficient;
        });
    if (!only_stack) return ValidateInstance(raw);
    auto [f, g] = RawMatrices(raw);
    ReductionReport reduction = ReduceProtection(f, g);
    const std::string notice = "G reduced modulo rowspan(F): dropped " +
                               std::to_string(reduction.dropped_row_count) + " of " +
                               std::to_string(reduction.original_n) + " rows, G' = " +
                               reduction.reduced_g.ToString();
    notices.push_back(notice);
    err_ << "notice: " << notice << "\n";
    return AggregationInstance::Create(std::move(f), std::move(reduction.reduced_g));
  }

  Matrix LoadEncoder(const AggregationInstance& inst) const {
    if (s_.encoder_path.empty()) throw Error(ErrorCode::kParse, "--encoder is required");
    return EncoderFromJson(ReadJsonFile(s_.encoder_path), inst.modulus());
  }

  EnumerationOptions EnumOptions() const {
    EnumerationOptions o;
    if (s_.max_size > 0) o.max_size = s_.max_size;
    o.allow_large = s_.allow_large;
    o.user_limit = s_.user_limit;
    return o;
  }

  OracleOptions OracleOpts() const { return OracleOptions{s_.budget, s_.workers}; }

  const Settings& s_;
  std::ostream& out_;
  std::ostream& err_;
};

int ErrorReport(std::ostream& out, std::ostream& err, const std::string& kind,
                const std::string& message, int code, json extra = json::object()) {
  json report{{"error", kind}, {"message", message}};
  report.update(extra);
  out << report.dump(2) << "\n";
  err << "error: " << message << "\n";
  return code;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings settings;
  CLI::App app{"Key placement, key rates and exhaustive security checks for "
               "vector linear secure aggregation"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", settings.pretty, "Human-readable summary on stderr");

  auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("instance", settings.instance_path, "Instance JSON file")->required();
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", settings.budget, "Maximum enumerated tuples");
    cmd->add_option("--workers", settings.workers, "Enumeration threads")
        ->check(CLI::Range(1u, 256u));
  };
  auto add_enum = [&](CLI::App* cmd) {
    cmd->add_option("--max-size", settings.max_size, "Largest subset size to try");
    cmd->add_flag("--allow-large", settings.allow_large, "Lift the K guard");
    cmd->add_option("--user-limit", settings.user_limit, "Largest K without --allow-large");
  };

  std::vector<std::pair<CLI::App*, std::function<int(Command&)>>> commands;
  auto add = [&](const std::string& name, const std::string& help,
                 std::function<int(Command&)> run) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_instance(cmd);
    commands.emplace_back(cmd, std::move(run));
    return cmd;
  };

  add("validate", "Check the instance assumptions", &Command::Validate);
  add("reduce", "Reduce G modulo rowspan(F)", &Command::Reduce);
  CLI::App* minimal = add("minimal-sets", "Enumerate minimal key-holder sets",
                          &Command::MinimalSets);
  minimal->alias("minimal_sets");
  add_enum(minimal);
  CLI::App* encoder = add("encoder", "Construct P for a key-holder set", &Command::Encoder);
  encoder->add_option("--set", settings.set_text, "Users, e.g. 1,2")->required();
  CLI::App* verify = add("verify", "Check F*P = 0 and rank(G*P) = N", &Command::Verify);
  verify->add_option("--encoder", settings.encoder_path, "Encoder JSON file")->required();
  CLI::App* simulate = add("simulate", "Run seeded random rounds", &Command::Simulate);
  simulate->add_option("--encoder", settings.encoder_path, "Encoder JSON file")->required();
  simulate->add_option("--blocks", settings.blocks, "Number of rounds");
  simulate->add_option("--seed", settings.seed, "PRNG seed");
  CLI::App* security = add("security", "Exhaustive correctness and security check",
                           &Command::Security);
  security->add_option("--encoder", settings.encoder_path, "Encoder JSON file");
  security->add_option("--rate", settings.rate_text, "Time-share schedule for this rate");
  add_budget(security);
  add_enum(security);
  CLI::App* membership = add("membership", "Test a rate tuple against the region",
                             &Command::Membership);
  membership->add_option("--rate", settings.rate_text, "e.g. 1/2,1,1/2")->required();
  add_enum(membership);
  CLI::App* schedule = add("schedule", "Time-share schedule realizing a rate tuple",
                           &Command::Schedule);
  schedule->add_option("--rate", settings.rate_text, "e.g. 1/2,1,1/2")->required();
  add_enum(schedule);
  CLI::App* sweep = add("sweep", "Check every linear encoder exhaustively", &Command::Sweep);
  add_budget(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitInputError;
  }

  Command command(settings, out, err);
  try {
    for (auto& [cmd, run] : commands) {
      if (cmd->parsed()) return run(command);
    }
    return kExitInputError;
  } catch (const InstanceError& e) {
    json violations = json::array();
    for (const Violation& v : e.violations()) {
      violations.push_back(json{{"kind", std::string(ViolationName(v.kind))},
                                {"detail", v.detail}});
    }
    return ErrorReport(out, err, "InvalidInstance", e.what(), kExitInputError,
                       json{{"violations", violations}});
  } catch (const BudgetExceededError& e) {
    return ErrorReport(out, err, "BudgetExceeded", e.what(), kExitBudget,
                       json{{"required", e.required()}, {"budget", e.budget()}});
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::kBudgetExceeded ? kExitBudget
                     : e.code() == ErrorCode::kNotAchievable ? kExitFalse
                                                               : kExitInputError;
    return ErrorReport(out, err, std::string(ErrorCodeName(e.code())), e.what(), code);
  } catch (const std::logic_error& e) {
    return ErrorReport(out, err, "InternalError", e.what(), kExitInternal);
  }
}

}  // namespace linsecagg
