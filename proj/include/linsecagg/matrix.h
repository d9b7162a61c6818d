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

// Dense matrices over a prime field and the exact elimination routines built
// on them. Every routine is deterministic: elimination always scans columns
// left to right and takes the topmost usable row as pivot, normalized to 1.

#ifndef LINSECAGG_MATRIX_H_
#define LINSECAGG_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linsecagg/field.h"
#include "linsecagg/index_set.h"

namespace linsecagg {

class Matrix {
 public:
  // Zero matrix.
  Matrix(FieldModulus modulus, std::size_t rows, std::size_t cols);

  // Reduces every entry mod p. Throws Error(kShapeMismatch) if ragged.
  // `cols` is only consulted when `rows` is empty.
  static Matrix FromRows(FieldModulus modulus,
                         const std::vector<std::vector<std::int64_t>>& rows,
                         std::size_t cols = 0);
  static Matrix Identity(FieldModulus modulus, std::size_t n);
  static Matrix ColumnVector(FieldModulus modulus,
                             std::span<const Element> values);

  const FieldModulus& modulus() const { return modulus_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Element> entries() const { return entries_; }

  Element at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Element v);

  std::span<const Element> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::vector<Element> column(std::size_t c) const;

  bool IsZero() const;
  bool RowIsZero(std::size_t r) const;

  std::vector<std::vector<std::int64_t>> ToRows() const;
  std::string ToString() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldModulus modulus_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

// Throws Error(kShapeMismatch) on dimension or modulus mismatch.
Matrix Multiply(const Matrix& a, const Matrix& b);
std::vector<Element> Multiply(const Matrix& a, std::span<const Element> x);

Matrix VStack(const Matrix& top, const Matrix& bottom);
Matrix HStack(const Matrix& left, const Matrix& right);
Matrix Transpose(const Matrix& a);

// Columns of `a` at the (1-based) members of `cols`, ascending.
// Throws Error(kIndexOutOfRange) for members beyond a.cols().
Matrix SubmatrixCols(const Matrix& a, const IndexSet& cols);
Matrix SelectRows(const Matrix& a, std::span<const std::size_t> rows);

struct RrefResult {
  Matrix rref;
  std::vector<std::size_t> pivot_cols;  // 0-based, ascending
  std::size_t rank = 0;
};

RrefResult Rref(const Matrix& a);
std::size_t Rank(const Matrix& a);

// Canonical nullspace basis: one column per non-pivot column j of the RREF,
// with a 1 at position j and 0 at every other free position. A full column
// rank input yields a cols x 0 matrix.
Matrix NullspaceBasis(const Matrix& a);

struct RankDecomposition {
  std::size_t stack_rank = 0;    // rank([A; B])
  std::size_t rank_a = 0;        // rank(A)
  std::size_t dim_b_null_a = 0;  // dim(B * null(A)) = rank(B U)

  bool Holds() const { return stack_rank == rank_a + dim_b_null_a; }
};

RankDecomposition RankDecompositionTerms(const Matrix& a, const Matrix& b);

}  // namespace linsecagg

#endif  // LINSECAGG_MATRIX_H_
