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

#include "linsecagg/rational.h"

#include <string>
#include <utility>

#include "linsecagg/error.h"

namespace linsecagg {
namespace {

BigInt ParseInteger(std::string_view digits, std::string_view whole) {
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw Error(ErrorCode::kParse, "bad rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::kParse, "bad rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  text = Trim(text);
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInteger(text, text));
  BigInt num = ParseInteger(Trim(text.substr(0, slash)), text);
  BigInt den = ParseInteger(Trim(text.substr(slash + 1)), text);
  if (den == 0) {
    throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string FormatRational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

RateTuple::RateTuple(std::vector<Rational> rates) : rates_(std::move(rates)) {
  for (std::size_t i = 0; i < rates_.size(); ++i) {
    if (rates_[i] < 0) {
      throw Error(ErrorCode::kParse, "rate R_" + std::to_string(i + 1) +
                                         " = " + FormatRational(rates_[i]) +
                                         " is negative");
    }
  }
}

RateTuple RateTuple::Parse(std::string_view text) {
  std::vector<Rational> rates;
  while (true) {
    const std::size_t comma = text.find(',');
    rates.push_back(ParseRational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return RateTuple(std::move(rates));
}

std::vector<std::string> RateTuple::ToStrings() const {
  std::vector<std::string> out;
  out.reserve(rates_.size());
  for (const Rational& r : rates_) out.push_back(FormatRational(r));
  return out;
}

std::string RateTuple::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < rates_.size(); ++i) {
    if (i > 0) out += ", ";
    out += FormatRational(rates_[i]);
  }
  return out + ")";
}

}  // namespace linsecagg
