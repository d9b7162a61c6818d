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

#include "linsecagg/matrix.h"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

#include "linsecagg/error.h"

namespace linsecagg {
namespace {

void RequireSameModulus(const Matrix& a, const Matrix& b, const char* op) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorCode::kShapeMismatch,
                std::string(op) + ": operands live in different fields");
  }
}

std::string Dims(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(FieldModulus modulus, std::size_t rows, std::size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix Matrix::FromRows(FieldModulus modulus,
                        const std::vector<std::vector<std::int64_t>>& rows,
                        std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(modulus, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::kShapeMismatch,
                  "ragged matrix: row " + std::to_string(r) + " has " +
                      std::to_string(rows[r].size()) + " entries, expected " +
                      std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m.entries_[r * cols + c] = modulus.Reduce(rows[r][c]);
    }
  }
  return m;
}

Matrix Matrix::Identity(FieldModulus modulus, std::size_t n) {
  Matrix m(modulus, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

Matrix Matrix::ColumnVector(FieldModulus modulus, std::span<const Element> values) {
  Matrix m(modulus, values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, 0, values[i]);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, Element v) {
  entries_[r * cols_ + c] = v % modulus_.value();
}

std::vector<Element> Matrix::column(std::size_t c) const {
  std::vector<Element> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

bool Matrix::IsZero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Element e) { return e == 0; });
}

bool Matrix::RowIsZero(std::size_t r) const {
  auto values = row(r);
  return std::all_of(values.begin(), values.end(),
                     [](Element e) { return e == 0; });
}

std::vector<std::vector<std::int64_t>> Matrix::ToRows() const {
  std::vector<std::vector<std::int64_t>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].assign(row(r).begin(), row(r).end());
  }
  return out;
}

std::string Matrix::ToString() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r > 0) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) os << ' ';
      os << at(r, c);
    }
  }
  os << ']';
  return os.str();
}

Matrix Multiply(const Matrix& a, const Matrix& b) {
  RequireSameModulus(a, b, "multiply");
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kShapeMismatch,
                "cannot multiply " + Dims(a) + " by " + Dims(b));
  }
  const std::uint64_t p = a.modulus().value();
  Matrix out(a.modulus(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc = (acc + static_cast<std::uint64_t>(a.at(i, k)) * b.at(k, j)) % p;
      }
      out.set(i, j, static_cast<Element>(acc));
    }
  }
  return out;
}

std::vector<Element> Multiply(const Matrix& a, std::span<const Element> x) {
  if (a.cols() != x.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "cannot multiply " + Dims(a) + " by a vector of length " +
                    std::to_string(x.size()));
  }
  const std::uint64_t p = a.modulus().value();
  std::vector<Element> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      acc = (acc + static_cast<std::uint64_t>(a.at(i, k)) * (x[k] % p)) % p;
    }
    out[i] = static_cast<Element>(acc);
  }
  return out;
}

Matrix VStack(const Matrix& top, const Matrix& bottom) {
  RequireSameModulus(top, bottom, "vstack");
  if (top.cols() != bottom.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                "cannot stack " + Dims(top) + " over " + Dims(bottom));
  }
  Matrix out(top.modulus(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) {
    for (std::size_t c = 0; c < top.cols(); ++c) out.set(r, c, top.at(r, c));
  }
  for (std::size_t r = 0; r < bottom.rows(); ++r) {
    for (std::size_t c = 0; c < top.cols(); ++c) {
      out.set(top.rows() + r, c, bottom.at(r, c));
    }
  }
  return out;
}

Matrix HStack(const Matrix& left, const Matrix& right) {
  RequireSameModulus(left, right, "hstack");
  if (left.rows() != right.rows()) {
    throw Error(ErrorCode::kShapeMismatch,
                "cannot place " + Dims(left) + " beside " + Dims(right));
  }
  Matrix out(left.modulus(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) out.set(r, c, left.at(r, c));
    for (std::size_t c = 0; c < right.cols(); ++c) {
      out.set(r, left.cols() + c, right.at(r, c));
    }
  }
  return out;
}

Matrix Transpose(const Matrix& a) {
  Matrix out(a.modulus(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(c, r, a.at(r, c));
  }
  return out;
}

Matrix SubmatrixCols(const Matrix& a, const IndexSet& cols) {
  cols.CheckRange(a.cols());
  Matrix out(a.modulus(), a.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const std::size_t src = cols.members()[j] - 1;
    for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, j, a.at(r, src));
  }
  return out;
}

Matrix SelectRows(const Matrix& a, std::span<const std::size_t> rows) {
  Matrix out(a.modulus(), rows.size(), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= a.rows()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "row " + std::to_string(rows[i]) + " of " + Dims(a));
    }
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(i, c, a.at(rows[i], c));
  }
  return out;
}

RrefResult Rref(const Matrix& a) {
  const FieldModulus& f = a.modulus();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<Element> m(a.entries().begin(), a.entries().end());
  auto at = [&](std::size_t r, std::size_t c) -> Element& { return m[r * cols + c]; };

  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < cols && next_row < rows; ++c) {
    std::size_t pivot = next_row;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != next_row) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(pivot, k), at(next_row, k));
    }
    const Element inv = f.Inv(at(next_row, c));
    for (std::size_t k = c; k < cols; ++k) at(next_row, k) = f.Mul(at(next_row, k), inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next_row || at(r, c) == 0) continue;
      const Element factor = at(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        at(r, k) = f.Sub(at(r, k), f.Mul(factor, at(next_row, k)));
      }
    }
    pivots.push_back(c);
    ++next_row;
  }

  Matrix out(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, at(r, c));
  }
  const std::size_t rank = pivots.size();
  return RrefResult{std::move(out), std::move(pivots), rank};
}

std::size_t Rank(const Matrix& a) { return Rref(a).rank; }

Matrix NullspaceBasis(const Matrix& a) {
  const FieldModulus& f = a.modulus();
  RrefResult rr = Rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

  Matrix basis(f, a.cols(), a.cols() - rr.rank);
  std::size_t out_col = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(free, out_col, 1);
    // Pivot variable of row r is -rref(r, free).
    for (std::size_t r = 0; r < rr.rank; ++r) {
      basis.set(rr.pivot_cols[r], out_col, f.Neg(rr.rref.at(r, free)));
    }
    ++out_col;
  }
  return basis;
}

RankDecomposition RankDecompositionTerms(const Matrix& a, const Matrix& b) {
  RequireSameModulus(a, b, "rank decomposition");
  if (a.cols() != b.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                "rank decomposition needs equal column counts, got " + Dims(a) +
                    " and " + Dims(b));
  }
  RankDecomposition out;
  out.stack_rank = Rank(VStack(a, b));
  out.rank_a = Rank(a);
  out.dim_b_null_a = Rank(Multiply(b, NullspaceBasis(a)));
  return out;
}

}  // namespace linsecagg
