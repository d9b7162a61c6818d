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

#include <algorithm>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "linsecagg/error.h"
#include "linsecagg/instance.h"
#include "linsecagg/matrix.h"
#include "testing/brute_force.h"

namespace linsecagg {
namespace {

using ::linsecagg::testing::RandomIntMatrix;

const FieldModulus kF3(3);
const FieldModulus kF7(7);

bool HasKind(const std::vector<Violation>& v, ViolationKind kind) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.kind == kind; });
}

RawInstance SixUsersRaw() {
  return {7,
          {{1, 0, 5, 5, 3, 5}, {0, 1, 5, 6, 0, 3}},
          {{3, 0, 1, 4, 2, 4}, {2, 2, 1, 3, 5, 3}, {1, 1, 3, 4, 3, 1}}};
}

TEST(ValidateTest, ThreeUsersIsValid) {
  const AggregationInstance inst = ValidateInstance({3, {{1, 1, 1}}, {{1, 0, 1}}});
  EXPECT_EQ(inst.num_users(), 3u);
  EXPECT_EQ(inst.m(), 1u);
  EXPECT_EQ(inst.n(), 1u);
  EXPECT_EQ(inst.Summary(), "q=3 K=3 M=1 N=1");
}

TEST(ValidateTest, SixUsersRawIsStackRankDeficient) {
  const std::vector<Violation> v = FindViolations(SixUsersRaw());
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::kStackRankDeficient);
  try {
    ValidateInstance(SixUsersRaw());
    ADD_FAILURE();
  } catch (const InstanceError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInstance);
    EXPECT_EQ(e.violations().size(), 1u);
  }
}

TEST(ValidateTest, GRowInsideRowspanOfF) {
  const std::vector<Violation> v = FindViolations(RawInstance{3, {{1, 0}, {0, 1}}, {{1, 0}}});
  EXPECT_TRUE(HasKind(v, ViolationKind::kStackRankDeficient));
}

TEST(ValidateTest, ReportsEveryViolation) {
  // Dependent rows in F and G, plus a zero column in F.
  const std::vector<Violation> v =
      FindViolations(RawInstance{5, {{1, 1, 0}, {2, 2, 0}}, {{0, 1, 1}, {0, 2, 2}}});
  EXPECT_TRUE(HasKind(v, ViolationKind::kRankDeficientF));
  EXPECT_TRUE(HasKind(v, ViolationKind::kRankDeficientG));
  EXPECT_TRUE(HasKind(v, ViolationKind::kZeroColumnInF));
}

TEST(ValidateTest, FieldAndShapeProblems) {
  EXPECT_TRUE(HasKind(FindViolations(RawInstance{9, {{1, 1}}, {{1, 0}}}),
                      ViolationKind::kNotPrime));
  EXPECT_TRUE(HasKind(FindViolations(RawInstance{6, {{1, 1}}, {{1, 0}}}),
                      ViolationKind::kNotPrime));
  EXPECT_TRUE(HasKind(FindViolations(RawInstance{3, {{1, 1}}, {{1, 0, 1}}}),
                      ViolationKind::kShapeMismatch));
  EXPECT_TRUE(HasKind(FindViolations(RawInstance{3, {{1, 1}, {1}}, {{1, 0}}}),
                      ViolationKind::kShapeMismatch));
  EXPECT_TRUE(HasKind(FindViolations(RawInstance{3, {{1, 1}}, {}}), ViolationKind::kEmptyG));
}

TEST(ValidateTest, EntriesAreReducedOnLoad) {
  const AggregationInstance inst = ValidateInstance({3, {{4, -2, 7}}, {{-2, 3, 1}}});
  EXPECT_EQ(inst.f(), Matrix::FromRows(kF3, {{1, 1, 1}}));
  EXPECT_EQ(inst.g(), Matrix::FromRows(kF3, {{1, 0, 1}}));
}

TEST(ReduceTest, SixUsersMatchesWorkedReduction) {
  auto [f, g] = RawMatrices(SixUsersRaw());
  const ReductionReport report = ReduceProtection(f, g);
  EXPECT_EQ(report.original_n, 3u);
  EXPECT_EQ(report.dropped_row_count, 1u);
  // The worked example lists these rows in the opposite order.
  const Matrix expected = Matrix::FromRows(kF7, {{0, 0, 1, 0, 3, 3}, {0, 0, 0, 1, 0, 1}});
  EXPECT_EQ(report.reduced_g, expected);
  std::vector<std::vector<std::int64_t>> rows = report.reduced_g.ToRows();
  std::sort(rows.begin(), rows.end());
  std::vector<std::vector<std::int64_t>> paper = {{0, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 3, 3}};
  std::sort(paper.begin(), paper.end());
  EXPECT_EQ(rows, paper);
  EXPECT_TRUE(FindViolations(f, report.reduced_g).empty());
}

TEST(ReduceTest, EverythingInsideRowspanLeavesNothing) {
  const Matrix f = Matrix::FromRows(kF3, {{1, 1, 0}, {0, 1, 1}});
  const Matrix g = Matrix::FromRows(kF3, {{1, 2, 1}, {2, 2, 0}});
  const ReductionReport report = ReduceProtection(f, g);
  EXPECT_EQ(report.reduced_g.rows(), 0u);
  EXPECT_EQ(report.dropped_row_count, 2u);
  EXPECT_TRUE(HasKind(FindViolations(f, report.reduced_g), ViolationKind::kEmptyG));
}

TEST(ReduceTest, SecureSummationDropsOneRow) {
  const Matrix f = Matrix::FromRows(kF3, {{1, 1, 1}});
  const ReductionReport report = ReduceProtection(f, Matrix::Identity(kF3, 3));
  EXPECT_EQ(report.reduced_g.rows(), 2u);
  EXPECT_EQ(Rank(VStack(f, report.reduced_g)), 3u);
}

TEST(ReduceTest, RejectsRankDeficientF) {
  const Matrix f = Matrix::FromRows(kF3, {{1, 1}, {2, 2}});
  try {
    ReduceProtection(f, Matrix::FromRows(kF3, {{1, 0}}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankDeficientF);
  }
}

TEST(ReduceTest, RandomPropertiesHold) {
  std::mt19937_64 rng(99);
  int validated = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7}[trial % 4];
    const FieldModulus mod(p);
    const std::size_t k = 2 + rng() % 5;
    const std::size_t m = 1 + rng() % (k - 1);
    const Matrix f = Matrix::FromRows(mod, RandomIntMatrix(rng, m, k, p));
    if (Rank(f) != m) continue;
    const Matrix g = Matrix::FromRows(mod, RandomIntMatrix(rng, 1 + rng() % k, k, p));
    const ReductionReport report = ReduceProtection(f, g);
    const Matrix& gp = report.reduced_g;
    EXPECT_EQ(report.dropped_row_count, g.rows() - gp.rows());
    EXPECT_EQ(Rank(VStack(f, gp)), m + gp.rows());
    // Same row space: neither stack adds rank to the other.
    const std::size_t joint = Rank(VStack(VStack(f, g), gp));
    EXPECT_EQ(joint, Rank(VStack(f, g)));
    EXPECT_EQ(joint, Rank(VStack(f, gp)));
    // Idempotent.
    EXPECT_EQ(ReduceProtection(f, gp).reduced_g, gp);
    bool f_has_zero_column = false;
    for (std::size_t c = 0; c < k; ++c) {
      bool zero = true;
      for (std::size_t r = 0; r < m; ++r) zero = zero && f.at(r, c) == 0;
      f_has_zero_column = f_has_zero_column || zero;
    }
    if (gp.rows() > 0 && !f_has_zero_column) {
      EXPECT_NO_THROW(AggregationInstance::Create(f, gp));
      ++validated;
    }
  }
  EXPECT_GT(validated, 50);
}

}  // namespace
}  // namespace linsecagg
