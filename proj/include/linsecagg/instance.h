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

// The (F, G) problem description and its validation. An instance asks the
// server to learn F*w for the users' inputs w while learning nothing about
// G*w beyond that.

#ifndef LINSECAGG_INSTANCE_H_
#define LINSECAGG_INSTANCE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linsecagg/error.h"
#include "linsecagg/field.h"
#include "linsecagg/matrix.h"

namespace linsecagg {

enum class ViolationKind {
  kNotPrime,
  kShapeMismatch,
  kEmptyG,
  kRankDeficientF,
  kRankDeficientG,
  kStackRankDeficient,
  kZeroColumnInF,
};

std::string_view ViolationName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

// As read from an instance file: rectangular integer arrays, not yet checked.
struct RawInstance {
  std::uint64_t q = 0;
  std::vector<std::vector<std::int64_t>> f;
  std::vector<std::vector<std::int64_t>> g;
};

class InstanceError : public Error {
 public:
  explicit InstanceError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// A validated instance: rank(F) = M, rank(G) = N >= 1, rank([F; G]) = M + N
// and no column of F is zero.
class AggregationInstance {
 public:
  // Throws InstanceError listing every violated requirement.
  static AggregationInstance Create(Matrix f, Matrix g);

  const FieldModulus& modulus() const { return f_.modulus(); }
  const Matrix& f() const { return f_; }
  const Matrix& g() const { return g_; }
  std::size_t num_users() const { return f_.cols(); }
  std::size_t m() const { return f_.rows(); }
  std::size_t n() const { return g_.rows(); }

  // "q=3 K=3 M=1 N=1"
  std::string Summary() const;

 private:
  AggregationInstance(Matrix f, Matrix g) : f_(std::move(f)), g_(std::move(g)) {}

  Matrix f_;
  Matrix g_;
};

std::vector<Violation> FindViolations(const Matrix& f, const Matrix& g);
std::vector<Violation> FindViolations(const RawInstance& raw);

// Throws InstanceError.
AggregationInstance ValidateInstance(const RawInstance& raw);

// Field matrices of a raw instance whose order is prime and whose arrays agree
// on the column count. Throws Error(kNotPrime) or Error(kShapeMismatch).
std::pair<Matrix, Matrix> RawMatrices(const RawInstance& raw);

struct ReductionReport {
  std::size_t original_n = 0;
  Matrix reduced_g;
  std::size_t dropped_row_count = 0;
};

// Removes from G everything F already reveals: each row of G is reduced
// against the RREF of F, the remainder is put in RREF and zero rows are
// dropped. rowspan([F; G]) is preserved and [F; G'] has full row rank.
// Throws Error(kRankDeficientF) if F does not have full row rank.
ReductionReport ReduceProtection(const Matrix& f, const Matrix& g);

}  // namespace linsecagg

#endif  // LINSECAGG_INSTANCE_H_
