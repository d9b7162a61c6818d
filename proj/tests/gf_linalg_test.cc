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
#include <cstdint>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "linsecagg/error.h"
#include "linsecagg/field.h"
#include "linsecagg/index_set.h"
#include "linsecagg/matrix.h"
#include "linsecagg/oracle.h"
#include "testing/brute_force.h"

namespace linsecagg {
namespace {

using ::linsecagg::testing::GaussRank;
using ::linsecagg::testing::IntMatrix;
using ::linsecagg::testing::RandomIntMatrix;
using ::linsecagg::testing::RowSpaceRankByCounting;

const FieldModulus kF3(3);
const FieldModulus kF7(7);

Matrix SixUsersF() {
  return Matrix::FromRows(kF7, {{1, 0, 5, 5, 3, 5}, {0, 1, 5, 6, 0, 3}});
}

TEST(FieldTest, PrimalityAndPrimePowers) {
  EXPECT_TRUE(IsPrime(2));
  EXPECT_TRUE(IsPrime(kMaxModulus));
  EXPECT_FALSE(IsPrime(1));
  EXPECT_FALSE(IsPrime(561));
  EXPECT_TRUE(IsPrimePower(9));
  EXPECT_TRUE(IsPrimePower(8));
  EXPECT_FALSE(IsPrimePower(12));
  EXPECT_FALSE(IsPrimePower(7));
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d) trial = trial && n % d != 0;
    EXPECT_EQ(IsPrime(n), trial) << n;
  }
}

TEST(FieldTest, RejectsCompositeModuli) {
  for (std::uint64_t p : std::vector<std::uint64_t>{0, 1, 4, 9, 15, kMaxModulus + 2}) {
    try {
      FieldModulus m(p);
      ADD_FAILURE() << p;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotPrime);
    }
  }
}

TEST(FieldTest, ArithmeticExamples) {
  EXPECT_EQ(kF7.Mul(5, 3), 1u);
  EXPECT_EQ(kF3.Sub(2, 2), 0u);
  EXPECT_EQ(kF3.Sub(2, kF3.Reduce(5)), 0u);
  EXPECT_EQ(kF7.Add(0, 4), 4u);
  EXPECT_EQ(kF7.Inv(3), 5u);
  EXPECT_EQ(kF3.Inv(2), 2u);
  EXPECT_EQ(kF7.Reduce(-1), 6u);
  EXPECT_THROW(kF7.Inv(0), Error);
  const FieldModulus big(kMaxModulus);
  EXPECT_EQ(big.Mul(kMaxModulus - 1, kMaxModulus - 1), 1u);
}

TEST(FieldTest, ArithmeticMatchesIntegerOracle) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    const FieldModulus m(p);
    for (Element a = 0; a < p; ++a) {
      for (Element b = 0; b < p; ++b) {
        EXPECT_EQ(m.Add(a, b), (a + b) % p);
        EXPECT_EQ(m.Sub(a, b), (a + p - b) % p);
        EXPECT_EQ(m.Mul(a, b), a * b % p);
      }
    }
  }
}

TEST(FieldTest, InversesExhaustiveUpTo101) {
  for (std::uint64_t p = 2; p <= 101; ++p) {
    if (!IsPrime(p)) continue;
    const FieldModulus m(p);
    for (Element a = 1; a < p; ++a) {
      EXPECT_EQ(m.Mul(a, m.Inv(a)), 1u);
      EXPECT_EQ(m.Inv(a), static_cast<Element>(testing::BruteInverse(a, p)));
    }
  }
}

TEST(MatrixTest, ShapeErrors) {
  EXPECT_THROW(Matrix::FromRows(kF3, {{1, 2}, {1}}), Error);
  const Matrix a(kF3, 2, 3);
  const Matrix b(kF3, 2, 3);
  EXPECT_THROW(Multiply(a, b), Error);
  EXPECT_THROW(Multiply(a, Matrix(kF7, 3, 1)), Error);
  EXPECT_THROW(VStack(a, Matrix(kF3, 1, 2)), Error);
}

TEST(MatrixTest, MultiplyExamples) {
  const Matrix p1 = Matrix::FromRows(kF7, {{2}, {2}, {1}, {0}, {0}, {0}});
  EXPECT_TRUE(Multiply(SixUsersF(), p1).IsZero());
  const Matrix p = Matrix::FromRows(kF7, {{2, 2}, {2, 1}, {1, 0}, {0, 1}, {0, 0}, {0, 0}});
  EXPECT_TRUE(Multiply(SixUsersF(), p).IsZero());
  const Matrix g_reduced = Matrix::FromRows(kF7, {{0, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 3, 3}});
  EXPECT_EQ(Multiply(g_reduced, p), Matrix::FromRows(kF7, {{0, 1}, {1, 0}}));
  const Matrix b = Matrix::FromRows(kF7, {{1, 2}, {3, 4}, {5, 6}});
  EXPECT_EQ(Multiply(Matrix::Identity(kF7, 3), b), b);
}

TEST(MatrixTest, RrefExamples) {
  const RrefResult r = Rref(Matrix::FromRows(kF3, {{1, 1}, {1, 0}}));
  EXPECT_EQ(r.rref, Matrix::Identity(kF3, 2));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(RowSpaceRankByCounting({{1, 1}, {1, 0}}, 2, 3), 2u);

  const RrefResult zero = Rref(Matrix(kF7, 3, 4));
  EXPECT_EQ(zero.rank, 0u);
  EXPECT_TRUE(zero.rref.IsZero());

  EXPECT_EQ(Rank(Matrix::FromRows(kF3, {{1, 1, 1}, {1, 0, 1}})), 2u);
}

TEST(MatrixTest, RrefIsCanonical) {
  const RrefResult r = Rref(SixUsersF());
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 1}));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7}[trial % 4];
    const FieldModulus mod(p);
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const Matrix a = Matrix::FromRows(mod, RandomIntMatrix(rng, rows, cols, p));
    const RrefResult rr = Rref(a);
    EXPECT_EQ(Rref(rr.rref).rref, rr.rref);
    EXPECT_EQ(rr.rank, rr.pivot_cols.size());
    EXPECT_LE(rr.rank, std::min(rows, cols));
    for (std::size_t i = 0; i < rr.rank; ++i) {
      EXPECT_EQ(rr.rref.at(i, rr.pivot_cols[i]), 1u);
      if (i > 0) EXPECT_LT(rr.pivot_cols[i - 1], rr.pivot_cols[i]);
      for (std::size_t r = 0; r < rows; ++r) {
        if (r != i) EXPECT_EQ(rr.rref.at(r, rr.pivot_cols[i]), 0u);
      }
    }
    EXPECT_EQ(rr.rank, GaussRank(a.ToRows(), p));
    // Row permutations leave the rank and the RREF unchanged.
    std::vector<std::size_t> order(rows);
    for (std::size_t i = 0; i < rows; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const RrefResult permuted = Rref(SelectRows(a, order));
    EXPECT_EQ(permuted.rank, rr.rank);
    EXPECT_EQ(permuted.rref, rr.rref);
  }
}

TEST(MatrixTest, NullspaceExamples) {
  EXPECT_EQ(NullspaceBasis(Matrix::FromRows(kF3, {{1, 1}})),
            Matrix::FromRows(kF3, {{2}, {1}}));
  EXPECT_EQ(NullspaceBasis(Matrix::Identity(kF7, 4)).cols(), 0u);
  EXPECT_EQ(NullspaceBasis(Matrix::Identity(kF7, 4)).rows(), 4u);

  const Matrix f1 = SubmatrixCols(SixUsersF(), IndexSet::FromMembers({1, 2, 3, 4}));
  const Matrix u = NullspaceBasis(f1);
  EXPECT_EQ(u.cols(), 2u);
  EXPECT_TRUE(Multiply(f1, u).IsZero());
  // Same column span as the top four rows of the worked-example encoder.
  const Matrix p_top = Matrix::FromRows(kF7, {{2, 2}, {2, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(Rank(HStack(u, p_top)), 2u);
  EXPECT_EQ(u, p_top);
}

TEST(MatrixTest, NullspaceProperties) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7}[trial % 4];
    const FieldModulus mod(p);
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const Matrix a = Matrix::FromRows(mod, RandomIntMatrix(rng, rows, cols, p));
    const Matrix u = NullspaceBasis(a);
    EXPECT_TRUE(Multiply(a, u).IsZero());
    EXPECT_EQ(u.cols(), cols - Rank(a));
    EXPECT_EQ(Rank(u), u.cols());
    // Unit pattern on the free columns.
    const RrefResult rr = Rref(a);
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols; ++c) {
      if (!std::binary_search(rr.pivot_cols.begin(), rr.pivot_cols.end(), c)) free.push_back(c);
    }
    for (std::size_t j = 0; j < free.size(); ++j) {
      for (std::size_t i = 0; i < free.size(); ++i) {
        EXPECT_EQ(u.at(free[i], j), i == j ? 1u : 0u);
      }
    }
  }
}

TEST(MatrixTest, SubmatrixCols) {
  const Matrix f = Matrix::FromRows(kF3, {{1, 1, 1}});
  EXPECT_EQ(SubmatrixCols(f, IndexSet::FromMembers({1, 2})), Matrix::FromRows(kF3, {{1, 1}}));
  EXPECT_EQ(SubmatrixCols(f, IndexSet::Full(3)), f);
  const Matrix g = Matrix::FromRows(kF3, {{1, 0, 1}});
  EXPECT_EQ(SubmatrixCols(g, IndexSet::FromMembers({2, 3})), Matrix::FromRows(kF3, {{0, 1}}));
  try {
    SubmatrixCols(g, IndexSet::FromMembers({4}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
}

TEST(IndexSetTest, ParseAndOrder) {
  EXPECT_EQ(IndexSet::Parse(" 3, 1 ,2").ToString(), "{1,2,3}");
  EXPECT_THROW(IndexSet::Parse("1,1"), Error);
  EXPECT_THROW(IndexSet::Parse("0"), Error);
  EXPECT_THROW(IndexSet::Parse("a"), Error);
  EXPECT_LT(IndexSet::FromMembers({1, 2}), IndexSet::FromMembers({1, 3}));
  EXPECT_TRUE(IndexSet::FromMembers({2}).IsSubsetOf(IndexSet::FromMembers({1, 2})));
  EXPECT_EQ(IndexSet::FromMembers({1, 3}).Indicator(3), (std::vector<int>{1, 0, 1}));
}

TEST(RankDecompositionTest, Examples) {
  const RankDecomposition t = RankDecompositionTerms(Matrix::FromRows(kF3, {{1, 1}}),
                                                     Matrix::FromRows(kF3, {{1, 0}}));
  EXPECT_EQ(t.stack_rank, 2u);
  EXPECT_EQ(t.rank_a, 1u);
  EXPECT_EQ(t.dim_b_null_a, 1u);
  EXPECT_EQ(RowSpaceRankByCounting({{1, 1}, {1, 0}}, 2, 3), 2u);
  EXPECT_EQ(RowSpaceRankByCounting({{1, 1}}, 2, 3), 1u);

  const Matrix a = Matrix::FromRows(kF7, {{1, 2, 3}, {2, 4, 6}});
  const RankDecomposition zero_b = RankDecompositionTerms(a, Matrix(kF7, 2, 3));
  EXPECT_EQ(zero_b.stack_rank, 1u);
  EXPECT_EQ(zero_b.rank_a, 1u);
  EXPECT_EQ(zero_b.dim_b_null_a, 0u);

  const RankDecomposition identity = RankDecompositionTerms(
      Matrix::Identity(kF7, 2), Matrix::FromRows(kF7, {{3, 5}}));
  EXPECT_EQ(identity.stack_rank, 2u);
  EXPECT_EQ(identity.rank_a, 2u);
  EXPECT_EQ(identity.dim_b_null_a, 0u);

  EXPECT_THROW(RankDecompositionTerms(Matrix(kF7, 1, 2), Matrix(kF7, 1, 3)), Error);
}

TEST(RankDecompositionTest, IdentityHoldsWithRowSpaceCrossCheck) {
  std::mt19937_64 rng(2026);
  int enumerated = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const std::int64_t p = std::vector<std::int64_t>{2, 3, 5}[trial % 3];
    const FieldModulus mod(p);
    const bool small = p <= 3 && trial % 2 == 0;
    const std::size_t cols = 1 + rng() % (small ? 4 : 6);
    const std::size_t ra = 1 + rng() % (small ? 3 : 5);
    const std::size_t rb = 1 + rng() % (small ? 3 : 5);
    const IntMatrix ai = RandomIntMatrix(rng, ra, cols, p);
    const IntMatrix bi = RandomIntMatrix(rng, rb, cols, p);
    const Matrix a = Matrix::FromRows(mod, ai);
    const Matrix b = Matrix::FromRows(mod, bi);
    const RankDecomposition t = RankDecompositionTerms(a, b);
    EXPECT_TRUE(t.Holds());
    EXPECT_TRUE(Claim1Oracle(a, b));
    IntMatrix stack = ai;
    stack.insert(stack.end(), bi.begin(), bi.end());
    EXPECT_EQ(t.stack_rank, GaussRank(stack, p));
    if (small) {
      ++enumerated;
      EXPECT_EQ(t.stack_rank, RowSpaceRankByCounting(stack, cols, p));
      EXPECT_EQ(t.rank_a, RowSpaceRankByCounting(ai, cols, p));
      EXPECT_EQ(RowSpaceRank(VStack(a, b)), t.stack_rank);
    }
  }
  EXPECT_GT(enumerated, 300);
}

}  // namespace
}  // namespace linsecagg
