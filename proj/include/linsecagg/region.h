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

// Key-holder sets and the achievable individual key rate region.
//
// A set I of users may be the only key holders iff
//   rank([F_I; G_I]) = rank(F_I) + N,
// where F_I, G_I keep the columns in I. The sets satisfying this are upward
// closed, so the region is determined by the inclusion-wise minimal ones:
// it is the convex hull of their 0/1 indicator vectors plus the nonnegative
// orthant.

#ifndef LINSECAGG_REGION_H_
#define LINSECAGG_REGION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linsecagg/index_set.h"
#include "linsecagg/instance.h"
#include "linsecagg/rational.h"

namespace linsecagg {

// Throws Error(kEmptySet) for an empty set, Error(kIndexOutOfRange) when a
// member exceeds K.
bool RankIncrementCheck(const AggregationInstance& inst, const IndexSet& set);

// rank(G_I) = N and rowspan(F_I) meets rowspan(G_I) only in 0. The
// intersection dimension is rank(F_I) + rank(G_I) - rank([F_I; G_I]).
bool EquivalentConditionCheck(const AggregationInstance& inst, const IndexSet& set);

struct EnumerationOptions {
  std::optional<std::size_t> max_size;
  // 2^K subsets are visited in the worst case.
  std::size_t user_limit = 20;
  bool allow_large = false;
};

struct RegionVertices {
  std::size_t num_users = 0;
  std::vector<IndexSet> minimal_sets;   // lexicographic order
  std::vector<RateTuple> vertex_tuples;  // indicator of minimal_sets[j]

  // Throws Error(kIndexOutOfRange) for members beyond k.
  static RegionVertices FromSets(std::vector<IndexSet> sets, std::size_t k);
};

// Inclusion-wise minimal sets satisfying the rank-increment condition.
//
// Subsets are visited by increasing size starting at N + 1 (a minimal set
// has |I| = N + rank(F_I) and rank(F_I) >= 1). Supersets of sets already
// found are skipped, as are sets whose stacked matrix [F_I; G_I] is column
// rank deficient: a satisfying set of that kind is never minimal and so
// contains a smaller minimal set found earlier. Sizes stop at N + M.
//
// Throws BudgetExceededError if K exceeds options.user_limit without
// options.allow_large.
RegionVertices EnumerateMinimalSets(const AggregationInstance& inst,
                                    const EnumerationOptions& options = {});

// sum_i coefficients[i] * R_i >= bound, valid on the whole region.
struct SeparatingInequality {
  std::vector<Rational> coefficients;
  Rational bound;

  std::string ToString() const;  // e.g. "R2 >= 1"
};

struct MembershipResult {
  bool member = false;
  // Convex weights over vertices.minimal_sets with sum_j w_j 1(i in I_j) <= R_i.
  std::vector<Rational> weights;
  // An inequality of the region that the rate violates (when not a member).
  std::optional<SeparatingInequality> violated;
};

// Exact LP membership test. Throws Error(kShapeMismatch) if the rate length
// is not K.
MembershipResult Membership(const RateTuple& rate, const RegionVertices& vertices);

}  // namespace linsecagg

#endif  // LINSECAGG_REGION_H_
