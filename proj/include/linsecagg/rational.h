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

#ifndef LINSECAGG_RATIONAL_H_
#define LINSECAGG_RATIONAL_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace linsecagg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "n", "n/d" with optional leading '-'. Throws Error(kParse).
Rational ParseRational(std::string_view text);
// Lowest terms; integers print without a denominator.
std::string FormatRational(const Rational& r);

// Per-user key rates (R_1, ..., R_K); every entry is >= 0.
class RateTuple {
 public:
  RateTuple() = default;
  // Throws Error(kParse) on a negative entry.
  explicit RateTuple(std::vector<Rational> rates);

  // Comma separated rationals, e.g. "1/2,1,1/2".
  static RateTuple Parse(std::string_view text);

  const std::vector<Rational>& rates() const { return rates_; }
  std::size_t size() const { return rates_.size(); }
  const Rational& operator[](std::size_t i) const { return rates_[i]; }

  std::vector<std::string> ToStrings() const;
  std::string ToString() const;

  friend bool operator==(const RateTuple&, const RateTuple&) = default;

 private:
  std::vector<Rational> rates_;
};

}  // namespace linsecagg

#endif  // LINSECAGG_RATIONAL_H_
