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

#ifndef LINSECAGG_ERROR_H_
#define LINSECAGG_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace linsecagg {

enum class ErrorCode {
  kNotPrime,
  kNonInvertible,
  kShapeMismatch,
  kIndexOutOfRange,
  kEmptySet,
  kInvalidInstance,
  kRankDeficientF,
  kConditionNotSatisfied,
  kNotAchievable,
  kBudgetExceeded,
  kParse,
};

// Stable identifier used in JSON reports, e.g. "ShapeError".
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised when an exhaustive enumeration would exceed its configured budget.
// `required` saturates at UINT64_MAX.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::uint64_t required, std::uint64_t budget);

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace linsecagg

#endif  // LINSECAGG_ERROR_H_
