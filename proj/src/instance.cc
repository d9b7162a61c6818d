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

#include "linsecagg/instance.h"

#include <string>
#include <utility>

namespace linsecagg {
namespace {

std::string JoinViolations(const std::vector<Violation>& violations) {
  std::string out = "invalid instance:";
  for (const Violation& v : violations) {
    out += " ";
    out += ViolationName(v.kind);
    out += " (" + v.detail + ");";
  }
  return out;
}

}  // namespace

std::string_view ViolationName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNotPrime:
      return "NotPrime";
    case ViolationKind::kShapeMismatch:
      return "ShapeMismatch";
    case ViolationKind::kEmptyG:
      return "EmptyG";
    case ViolationKind::kRankDeficientF:
      return "RankDeficientF";
    case ViolationKind::kRankDeficientG:
      return "RankDeficientG";
    case ViolationKind::kStackRankDeficient:
      return "StackRankDeficient";
    case ViolationKind::kZeroColumnInF:
      return "ZeroColumnInF";
  }
  return "Unknown";
}

InstanceError::InstanceError(std::vector<Violation> violations)
    : Error(ErrorCode::kInvalidInstance, JoinViolations(violations)),
      violations_(std::move(violations)) {}

AggregationInstance AggregationInstance::Create(Matrix f, Matrix g) {
  std::vector<Violation> violations = FindViolations(f, g);
  if (!violations.empty()) throw InstanceError(std::move(violations));
  return AggregationInstance(std::move(f), std::move(g));
}

std::string AggregationInstance::Summary() const {
  return "q=" + std::to_string(modulus().value()) + " K=" +
         std::to_string(num_users()) + " M=" + std::to_string(m()) +
         " N=" + std::to_string(n());
}

std::vector<Violation> FindViolations(const Matrix& f, const Matrix& g) {
  std::vector<Violation> out;
  if (f.modulus() != g.modulus()) {
    out.push_back({ViolationKind::kShapeMismatch, "F and G use different fields"});
    return out;
  }
  if (f.cols() != g.cols()) {
    out.push_back({ViolationKind::kShapeMismatch,
                   "F has " + std::to_string(f.cols()) + " columns but G has " +
                       std::to_string(g.cols())});
    return out;
  }
  if (f.cols() == 0) {
    out.push_back({ViolationKind::kShapeMismatch, "instance has no users"});
    return out;
  }
  if (g.rows() == 0) {
    out.push_back({ViolationKind::kEmptyG, "G has no rows, nothing to protect"});
  }
  const std::size_t rank_f = Rank(f);
  if (rank_f < f.rows()) {
    out.push_back({ViolationKind::kRankDeficientF,
                   "rank(F) = " + std::to_string(rank_f) + " < M = " +
                       std::to_string(f.rows())});
  }
  const std::size_t rank_g = Rank(g);
  if (rank_g < g.rows()) {
    out.push_back({ViolationKind::kRankDeficientG,
                   "rank(G) = " + std::to_string(rank_g) + " < N = " +
                       std::to_string(g.rows())});
  }
  const std::size_t rank_stack = Rank(VStack(f, g));
  if (rank_stack < f.rows() + g.rows()) {
    out.push_back({ViolationKind::kStackRankDeficient,
                   "rank([F;G]) = " + std::to_string(rank_stack) + " < M+N = " +
                       std::to_string(f.rows() + g.rows()) +
                       ": some combination of G rows lies in rowspan(F)"});
  }
  std::string zero_cols;
  for (std::size_t c = 0; c < f.cols(); ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < f.rows(); ++r) zero = zero && f.at(r, c) == 0;
    if (zero) {
      if (!zero_cols.empty()) zero_cols += ",";
      zero_cols += std::to_string(c + 1);
    }
  }
  if (!zero_cols.empty()) {
    out.push_back({ViolationKind::kZeroColumnInF,
                   "F has all-zero columns {" + zero_cols + "}"});
  }
  return out;
}

std::pair<Matrix, Matrix> RawMatrices(const RawInstance& raw) {
  FieldModulus modulus(raw.q);
  std::size_t cols = 0;
  if (!raw.f.empty()) {
    cols = raw.f.front().size();
  } else if (!raw.g.empty()) {
    cols = raw.g.front().size();
  }
  Matrix f = Matrix::FromRows(modulus, raw.f, cols);
  Matrix g = Matrix::FromRows(modulus, raw.g, cols);
  return {std::move(f), std::move(g)};
}

std::vector<Violation> FindViolations(const RawInstance& raw) {
  try {
    auto [f, g] = RawMatrices(raw);
    return FindViolations(f, g);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotPrime) {
      return {{ViolationKind::kNotPrime, e.what()}};
    }
    return {{ViolationKind::kShapeMismatch, e.what()}};
  }
}

AggregationInstance ValidateInstance(const RawInstance& raw) {
  std::vector<Violation> violations = FindViolations(raw);
  if (!violations.empty()) throw InstanceError(std::move(violations));
  auto [f, g] = RawMatrices(raw);
  return AggregationInstance::Create(std::move(f), std::move(g));
}

ReductionReport ReduceProtection(const Matrix& f, const Matrix& g) {
  if (f.modulus() != g.modulus() || f.cols() != g.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                "F and G must share the field and the column count");
  }
  const FieldModulus& field = f.modulus();
  RrefResult f_rref = Rref(f);
  if (f_rref.rank < f.rows()) {
    throw Error(ErrorCode::kRankDeficientF,
                "rank(F) = " + std::to_string(f_rref.rank) + " < M = " +
                    std::to_string(f.rows()));
  }

  Matrix residual = g;
  for (std::size_t r = 0; r < residual.rows(); ++r) {
    for (std::size_t i = 0; i < f_rref.rank; ++i) {
      const std::size_t pc = f_rref.pivot_cols[i];
      const Element factor = residual.at(r, pc);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < residual.cols(); ++c) {
        residual.set(r, c, field.Sub(residual.at(r, c),
                                     field.Mul(factor, f_rref.rref.at(i, c))));
      }
    }
  }

  RrefResult reduced = Rref(residual);
  Matrix kept(field, reduced.rank, g.cols());
  for (std::size_t r = 0; r < reduced.rank; ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) kept.set(r, c, reduced.rref.at(r, c));
  }
  return ReductionReport{g.rows(), std::move(kept), g.rows() - reduced.rank};
}

}  // namespace linsecagg
