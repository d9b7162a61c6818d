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

#include "linsecagg/field.h"

#include <string>

#include "linsecagg/error.h"

namespace linsecagg {
namespace {

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t PowMod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = MulMod(r, a, m);
    a = MulMod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool IsPrimePower(std::uint64_t n) {
  if (n < 4) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return false;
}

FieldModulus::FieldModulus(std::uint64_t p) {
  if (p > kMaxModulus || !IsPrime(p)) {
    std::string msg = "field order " + std::to_string(p) + " is not a prime";
    if (IsPrimePower(p)) {
      msg += " (extension fields GF(p^r), r > 1, are not supported)";
    } else if (p > kMaxModulus) {
      msg += " in [2, 2^31 - 1]";
    }
    throw Error(ErrorCode::kNotPrime, msg);
  }
  p_ = static_cast<std::uint32_t>(p);
}

Element FieldModulus::Pow(Element a, std::uint64_t e) const {
  return static_cast<Element>(PowMod(a, e, p_));
}

Element FieldModulus::Inv(Element a) const {
  if (a % p_ == 0) {
    throw Error(ErrorCode::kNonInvertible, "0 has no inverse in GF(" +
                                               std::to_string(p_) + ")");
  }
  return Pow(a, p_ - 2);
}

}  // namespace linsecagg
