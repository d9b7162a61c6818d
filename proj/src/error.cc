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

#include "linsecagg/error.h"

#include <string>

namespace linsecagg {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime:
      return "NotPrime";
    case ErrorCode::kNonInvertible:
      return "NonInvertible";
    case ErrorCode::kShapeMismatch:
      return "ShapeError";
    case ErrorCode::kIndexOutOfRange:
      return "IndexError";
    case ErrorCode::kEmptySet:
      return "EmptySetError";
    case ErrorCode::kInvalidInstance:
      return "InvalidInstance";
    case ErrorCode::kRankDeficientF:
      return "RankDeficientF";
    case ErrorCode::kConditionNotSatisfied:
      return "ConditionNotSatisfied";
    case ErrorCode::kNotAchievable:
      return "NotAchievable";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kParse:
      return "ParseError";
  }
  return "Unknown";
}

BudgetExceededError::BudgetExceededError(std::uint64_t required,
                                         std::uint64_t budget)
    : Error(ErrorCode::kBudgetExceeded,
            "enumeration requires " +
                (required == UINT64_MAX ? std::string("more than 2^64")
                                        : std::to_string(required)) +
                " tuples, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

}  // namespace linsecagg
