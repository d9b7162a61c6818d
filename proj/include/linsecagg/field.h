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

#ifndef LINSECAGG_FIELD_H_
#define LINSECAGG_FIELD_H_

#include <cstdint>

namespace linsecagg {

// A residue in [0, p).
using Element = std::uint32_t;

inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

// Deterministic for every 64-bit input.
bool IsPrime(std::uint64_t n);

// True when n = p^r for a prime p and r >= 2.
bool IsPrimePower(std::uint64_t n);

// The order of a prime field GF(p), 2 <= p <= 2^31 - 1. Construction rejects
// composite values, including prime powers: only prime fields are supported.
class FieldModulus {
 public:
  explicit FieldModulus(std::uint64_t p);

  std::uint32_t value() const { return p_; }

  Element Add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element Sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element Neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element Mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  // Throws Error(kNonInvertible) for a = 0.
  Element Inv(Element a) const;
  Element Pow(Element a, std::uint64_t e) const;

  // Canonical representative of an arbitrary integer.
  Element Reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }

  friend bool operator==(const FieldModulus&, const FieldModulus&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace linsecagg

#endif  // LINSECAGG_FIELD_H_
