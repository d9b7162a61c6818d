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

// Ground truth by exhaustive enumeration. Every (w, s) is visited once, the
// joint counts of (F w, G w, x) are tabulated and security is decided by the
// exact factorization
//   count(f, g, x) * count(f) == count(f, g) * count(f, x)
// over the whole table, i.e. G w and x are independent given F w.

#ifndef LINSECAGG_ORACLE_H_
#define LINSECAGG_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "linsecagg/index_set.h"
#include "linsecagg/instance.h"
#include "linsecagg/matrix.h"
#include "linsecagg/scheme.h"

namespace linsecagg {

struct OracleOptions {
  // Maximum number of enumerated (w, s) tuples; sweeps count the product
  // over all candidate encoders.
  std::uint64_t budget = 100'000'000;
  // Enumeration is split into contiguous ranges of w; results do not depend
  // on this value.
  unsigned workers = 1;
};

// Counts keyed by the packed triple (f, g, x). Each vector is written
// slot-major and read as a base-q integer; the three integers occupy
// separate bit fields, f most significant, so marginal keys are shifts.
class JointCountTable {
 public:
  JointCountTable(std::uint32_t q, std::size_t f_digits, std::size_t g_digits,
                  std::size_t x_digits,
                  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries);

  std::uint32_t q() const { return q_; }
  std::size_t f_digits() const { return f_digits_; }
  std::size_t g_digits() const { return g_digits_; }
  std::size_t x_digits() const { return x_digits_; }
  unsigned g_bits() const { return g_bits_; }
  unsigned x_bits() const { return x_bits_; }
  // Bits needed for a base-q integer of `digits` digits.
  static unsigned FieldBits(std::uint32_t q, std::size_t digits);
  // Sorted by key, counts > 0.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& entries() const {
    return entries_;
  }
  std::uint64_t total() const { return total_; }

  struct Triple {
    std::vector<Element> f, g, x;
  };
  Triple Unpack(std::uint64_t key) const;

 private:
  std::uint32_t q_;
  std::size_t f_digits_, g_digits_, x_digits_;
  unsigned g_bits_, x_bits_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries_;
  std::uint64_t total_ = 0;
};

struct CounterExample {
  JointCountTable::Triple triple;
  std::uint64_t count_fgx = 0;
  std::uint64_t count_f = 0;
  std::uint64_t count_fg = 0;
  std::uint64_t count_fx = 0;
};

struct SecurityVerdict {
  bool correct = false;  // decode(x) = F w for every tuple
  bool secure = false;   // exact factorization holds everywhere
  // I(G w; x | F w) in base-q units; floating point, diagnostic only.
  double mi_estimate = 0.0;
  std::optional<CounterExample> counterexample;
  std::uint64_t tuples = 0;
};

// Enumerates inputs and keys for one slot per encoder. `correct` is set to
// whether every decode matched. Throws BudgetExceededError.
JointCountTable CountJoint(const AggregationInstance& inst,
                           std::span<const Matrix> slot_encoders,
                           const OracleOptions& options, bool* correct);

SecurityVerdict VerdictFromTable(const JointCountTable& table, bool correct);

SecurityVerdict ExhaustiveVerdict(const EncodingScheme& scheme,
                                  const OracleOptions& options = {});
SecurityVerdict ExhaustiveVerdict(const TimeShareSchedule& schedule,
                                  const OracleOptions& options = {});

struct SweepReport {
  std::uint64_t total_encoders = 0;
  std::vector<Matrix> passing_encoders;      // correct and secure
  std::vector<IndexSet> support_sets;        // distinct, sorted
  std::vector<IndexSet> minimal_sets;
  std::vector<Matrix> theorem3_violations;   // passing, support fails the condition
  std::vector<IndexSet> unrealized_minimal_sets;
  std::vector<Matrix> sufficiency_violations;     // satisfy F P = 0 and rank(G P) = N yet fail

  bool ok() const {
    return theorem3_violations.empty() && unrealized_minimal_sets.empty() &&
           sufficiency_violations.empty();
  }

  static constexpr std::string_view kLimitation =
      "covers one-shot linear encoders x = w + P s with exactly N source keys; "
      "nonlinear and multi-letter schemes are not enumerated";
};

// Runs ExhaustiveVerdict on every P in GF(q)^{K x N}. Throws
// BudgetExceededError if q^(K N) * q^(K + N) exceeds the budget.
SweepReport ConverseSweep(const AggregationInstance& inst,
                          const OracleOptions& options = {});

// log_q of the row space size, by enumerating every combination of rows.
std::size_t RowSpaceRank(const Matrix& a);
// dim(B * null(A)) by enumerating every x with A x = 0.
std::size_t ImageOfNullspaceDim(const Matrix& a, const Matrix& b);

// rank([A; B]) = rank(A) + dim(B null(A)) with the left side from RREF of the
// stack and the right side from RankDecompositionTerms. For p in {2, 3} and
// inputs of at most 3 rows each and 4 columns, every rank is also recomputed
// by enumeration. Throws Error(kShapeMismatch).
bool Claim1Oracle(const Matrix& a, const Matrix& b);

}  // namespace linsecagg

#endif  // LINSECAGG_ORACLE_H_
