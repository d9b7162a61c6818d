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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linsecagg/error.h"
#include "linsecagg/index_set.h"
#include "linsecagg/instance.h"
#include "linsecagg/matrix.h"
#include "linsecagg/oracle.h"
#include "linsecagg/rational.h"
#include "linsecagg/region.h"
#include "linsecagg/scheme.h"

namespace py = pybind11;

namespace linsecagg {
namespace {

using IntRows = std::vector<std::vector<std::int64_t>>;

Matrix ToMatrix(std::uint64_t q, const IntRows& rows, std::size_t cols = 0) {
  return Matrix::FromRows(FieldModulus(q), rows, cols);
}

IndexSet ToSet(const std::vector<std::size_t>& members) {
  return IndexSet::FromMembers(members);
}

std::vector<std::vector<std::size_t>> SetsToLists(const std::vector<IndexSet>& sets) {
  std::vector<std::vector<std::size_t>> out;
  for (const IndexSet& s : sets) out.push_back(s.members());
  return out;
}

std::vector<std::string> RatesToStrings(const std::vector<Rational>& rates) {
  std::vector<std::string> out;
  for (const Rational& r : rates) out.push_back(FormatRational(r));
  return out;
}

RateTuple ToRate(const std::vector<std::string>& rates) {
  std::vector<Rational> values;
  for (const std::string& r : rates) values.push_back(ParseRational(r));
  return RateTuple(std::move(values));
}

py::dict VerdictDict(const SecurityVerdict& v) {
  py::dict d;
  d["correct"] = v.correct;
  d["secure"] = v.secure;
  d["mi_estimate"] = v.mi_estimate;
  d["tuples"] = v.tuples;
  if (v.counterexample) {
    const CounterExample& c = *v.counterexample;
    py::dict ce;
    ce["f"] = c.triple.f;
    ce["g"] = c.triple.g;
    ce["x"] = c.triple.x;
    ce["count_fgx"] = c.count_fgx;
    ce["count_f"] = c.count_f;
    ce["count_fg"] = c.count_fg;
    ce["count_fx"] = c.count_fx;
    d["counterexample"] = ce;
  } else {
    d["counterexample"] = py::none();
  }
  return d;
}

std::vector<py::dict> ViolationDicts(const std::vector<Violation>& violations) {
  std::vector<py::dict> out;
  for (const Violation& v : violations) {
    py::dict d;
    d["kind"] = std::string(ViolationName(v.kind));
    d["detail"] = v.detail;
    out.push_back(d);
  }
  return out;
}

OracleOptions Options(std::uint64_t budget, unsigned workers) {
  return OracleOptions{budget, workers};
}

EnumerationOptions EnumOptions(std::optional<std::size_t> max_size, bool allow_large) {
  EnumerationOptions o;
  o.max_size = max_size;
  o.allow_large = allow_large;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Key placement and exact security checks for vector linear secure aggregation";

  // Released so the types outlive module teardown.
  static py::handle error = py::exception<Error>(m, "Error", PyExc_ValueError).release();
  static py::handle budget_error =
      py::exception<BudgetExceededError>(m, "BudgetExceeded", error.ptr()).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExceededError& e) {
      py::object exc = budget_error(e.what());
      exc.attr("required") = e.required();
      exc.attr("budget") = e.budget();
      PyErr_SetObject(budget_error.ptr(), exc.ptr());
    } catch (const InstanceError& e) {
      py::object exc = error(e.what());
      exc.attr("code") = std::string(ErrorCodeName(e.code()));
      exc.attr("violations") = ViolationDicts(e.violations());
      PyErr_SetObject(error.ptr(), exc.ptr());
    } catch (const Error& e) {
      py::object exc = error(e.what());
      exc.attr("code") = std::string(ErrorCodeName(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.attr("DEFAULT_BUDGET") = OracleOptions{}.budget;

  m.def("is_prime", &IsPrime, py::arg("n"));
  m.def(
      "rank", [](std::uint64_t q, const IntRows& a) { return Rank(ToMatrix(q, a)); },
      py::arg("q"), py::arg("a"), "Rank of a matrix over GF(q).");
  m.def(
      "rref",
      [](std::uint64_t q, const IntRows& a) {
        const RrefResult r = Rref(ToMatrix(q, a));
        return py::make_tuple(r.rref.ToRows(), r.pivot_cols, r.rank);
      },
      py::arg("q"), py::arg("a"), "Returns (rref, pivot_cols, rank); pivots are 0-based.");
  m.def(
      "nullspace",
      [](std::uint64_t q, const IntRows& a) { return NullspaceBasis(ToMatrix(q, a)).ToRows(); },
      py::arg("q"), py::arg("a"), "Canonical nullspace basis as columns.");
  m.def(
      "rank_decomposition",
      [](std::uint64_t q, const IntRows& a, const IntRows& b) {
        const RankDecomposition t = RankDecompositionTerms(ToMatrix(q, a), ToMatrix(q, b));
        return py::make_tuple(t.stack_rank, t.rank_a, t.dim_b_null_a);
      },
      py::arg("q"), py::arg("a"), py::arg("b"));
  m.def(
      "find_violations",
      [](std::uint64_t q, const IntRows& f, const IntRows& g) {
        return ViolationDicts(FindViolations(RawInstance{q, f, g}));
      },
      py::arg("q"), py::arg("f"), py::arg("g"));
  m.def(
      "reduce_protection",
      [](std::uint64_t q, const IntRows& f, const IntRows& g) {
        auto [fm, gm] = RawMatrices(RawInstance{q, f, g});
        const ReductionReport r = ReduceProtection(fm, gm);
        py::dict d;
        d["original_n"] = r.original_n;
        d["reduced_g"] = r.reduced_g.ToRows();
        d["dropped_row_count"] = r.dropped_row_count;
        return d;
      },
      py::arg("q"), py::arg("f"), py::arg("g"));

  py::class_<AggregationInstance>(m, "Instance")
      .def(py::init([](std::uint64_t q, const IntRows& f, const IntRows& g) {
             return ValidateInstance(RawInstance{q, f, g});
           }),
           py::arg("q"), py::arg("f"), py::arg("g"))
      .def_property_readonly("q", [](const AggregationInstance& i) { return i.modulus().value(); })
      .def_property_readonly("k", &AggregationInstance::num_users)
      .def_property_readonly("m", &AggregationInstance::m)
      .def_property_readonly("n", &AggregationInstance::n)
      .def_property_readonly("f", [](const AggregationInstance& i) { return i.f().ToRows(); })
      .def_property_readonly("g", [](const AggregationInstance& i) { return i.g().ToRows(); })
      .def("summary", &AggregationInstance::Summary)
      .def(
          "rank_increment",
          [](const AggregationInstance& i, const std::vector<std::size_t>& s) {
            return RankIncrementCheck(i, ToSet(s));
          },
          py::arg("set"))
      .def(
          "equivalent_condition",
          [](const AggregationInstance& i, const std::vector<std::size_t>& s) {
            return EquivalentConditionCheck(i, ToSet(s));
          },
          py::arg("set"))
      .def(
          "minimal_sets",
          [](const AggregationInstance& i, std::optional<std::size_t> max_size,
             bool allow_large) {
            return SetsToLists(EnumerateMinimalSets(i, EnumOptions(max_size, allow_large))
                                   .minimal_sets);
          },
          py::arg("max_size") = py::none(), py::arg("allow_large") = false)
      .def(
          "construct_encoder",
          [](const AggregationInstance& i, const std::vector<std::size_t>& s) {
            return ConstructEncoder(i, ToSet(s)).ToRows();
          },
          py::arg("set"))
      .def(
          "verify_encoder",
          [](const AggregationInstance& i, const IntRows& p) {
            const EncoderCheck c = VerifyEncoder(i, ToMatrix(i.modulus().value(), p, i.n()));
            py::dict d;
            d["ok"] = c.ok();
            d["condition1"] = c.condition1;
            d["condition2"] = c.condition2;
            d["gp_rank"] = c.gp_rank;
            d["violations"] = c.violations;
            return d;
          },
          py::arg("p"))
      .def(
          "simulate_round",
          [](const AggregationInstance& i, const IntRows& p, const std::vector<Element>& w,
             const std::vector<Element>& s) {
            const EncodingScheme scheme(i, ToMatrix(i.modulus().value(), p, i.n()));
            return SimulateRound(scheme, w, s);
          },
          py::arg("p"), py::arg("w"), py::arg("s"))
      .def(
          "decode",
          [](const AggregationInstance& i, const std::vector<Element>& x) { return Decode(i, x); },
          py::arg("x"))
      .def(
          "membership",
          [](const AggregationInstance& i, const std::vector<std::string>& rate) {
            const RegionVertices v = EnumerateMinimalSets(i);
            const MembershipResult r = Membership(ToRate(rate), v);
            py::dict d;
            d["member"] = r.member;
            d["weights"] = RatesToStrings(r.weights);
            d["minimal_sets"] = SetsToLists(v.minimal_sets);
            d["violated"] = r.violated ? py::cast(r.violated->ToString()) : py::none();
            return d;
          },
          py::arg("rate"), "Rates are exact rationals written as strings, e.g. '1/2'.")
      .def(
          "schedule",
          [](const AggregationInstance& i, const std::vector<std::string>& rate) {
            const TimeShareSchedule s = BuildTimeShareSchedule(i, EnumerateMinimalSets(i),
                                                               ToRate(rate));
            py::list blocks;
            for (const TimeShareBlock& b : s.blocks()) {
              py::dict d;
              d["set"] = b.set.members();
              d["block_count"] = b.block_count;
              d["p"] = b.encoder.ToRows();
              blocks.append(d);
            }
            py::dict d;
            d["total_length"] = s.total_length();
            d["blocks"] = blocks;
            d["key_usage"] = s.KeyUsage();
            d["rate_tuple"] = RatesToStrings(ScheduleMetrics(s).rate_tuple.rates());
            return d;
          },
          py::arg("rate"))
      .def(
          "security",
          [](const AggregationInstance& i, const IntRows& p, std::uint64_t budget,
             unsigned workers) {
            const EncodingScheme scheme(i, ToMatrix(i.modulus().value(), p, i.n()));
            SecurityVerdict v;
            {
              py::gil_scoped_release release;
              v = ExhaustiveVerdict(scheme, Options(budget, workers));
            }
            return VerdictDict(v);
          },
          py::arg("p"), py::arg("budget") = OracleOptions{}.budget, py::arg("workers") = 1)
      .def(
          "schedule_security",
          [](const AggregationInstance& i, const std::vector<std::string>& rate,
             std::uint64_t budget, unsigned workers) {
            const TimeShareSchedule s = BuildTimeShareSchedule(i, EnumerateMinimalSets(i),
                                                               ToRate(rate));
            SecurityVerdict v;
            {
              py::gil_scoped_release release;
              v = ExhaustiveVerdict(s, Options(budget, workers));
            }
            return VerdictDict(v);
          },
          py::arg("rate"), py::arg("budget") = OracleOptions{}.budget, py::arg("workers") = 1)
      .def(
          "sweep",
          [](const AggregationInstance& i, std::uint64_t budget, unsigned workers) {
            SweepReport r;
            {
              py::gil_scoped_release release;
              r = ConverseSweep(i, Options(budget, workers));
            }
            auto rows = [](const std::vector<Matrix>& ms) {
              std::vector<IntRows> out;
              for (const Matrix& p : ms) out.push_back(p.ToRows());
              return out;
            };
            py::dict d;
            d["ok"] = r.ok();
            d["total_encoders"] = r.total_encoders;
            d["passing_encoders"] = rows(r.passing_encoders);
            d["support_sets"] = SetsToLists(r.support_sets);
            d["minimal_sets"] = SetsToLists(r.minimal_sets);
            d["theorem3_violations"] = rows(r.theorem3_violations);
            d["unrealized_minimal_sets"] = SetsToLists(r.unrealized_minimal_sets);
            d["sufficiency_violations"] = rows(r.sufficiency_violations);
            d["limitation"] = std::string(SweepReport::kLimitation);
            return d;
          },
          py::arg("budget") = OracleOptions{}.budget, py::arg("workers") = 1)
      .def("__repr__", [](const AggregationInstance& i) { return "<Instance " + i.Summary() + ">"; });
}

}  // namespace linsecagg
