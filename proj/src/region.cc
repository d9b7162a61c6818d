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

#include "linsecagg/region.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "linsecagg/error.h"
#include "linsecagg/matrix.h"
#include "linsecagg/simplex.h"

namespace linsecagg {
namespace {

void RequireUsableSet(const AggregationInstance& inst, const IndexSet& set) {
  if (set.empty()) {
    throw Error(ErrorCode::kEmptySet, "the key-holder set must be nonempty");
  }
  set.CheckRange(inst.num_users());
}

// Calls visit(subset) for each size-s subset of {1..k} in lexicographic order.
template <typename Visit>
void ForEachSubset(std::size_t k, std::size_t s, Visit&& visit) {
  if (s > k) return;
  std::vector<std::size_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = i + 1;
  while (true) {
    visit(idx);
    std::size_t pos = s;
    while (pos > 0 && idx[pos - 1] == k - s + pos) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
  }
}

BigInt Gcd(BigInt a, BigInt b) {
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

// Scales to coprime integers.
SeparatingInequality Normalize(SeparatingInequality ineq) {
  BigInt lcm = denominator(ineq.bound);
  for (const Rational& c : ineq.coefficients) {
    const BigInt d = denominator(c);
    lcm = lcm / Gcd(lcm, d) * d;
  }
  BigInt g = numerator(Rational(ineq.bound * lcm));
  for (const Rational& c : ineq.coefficients) {
    g = Gcd(g, numerator(Rational(c * lcm)));
  }
  if (g < 0) g = -g;
  if (g == 0) g = 1;
  const Rational scale = Rational(lcm, g);
  for (Rational& c : ineq.coefficients) c *= scale;
  ineq.bound *= scale;
  return ineq;
}

}  // namespace

bool RankIncrementCheck(const AggregationInstance& inst, const IndexSet& set) {
  RequireUsableSet(inst, set);
  const Matrix f_sub = SubmatrixCols(inst.f(), set);
  const Matrix g_sub = SubmatrixCols(inst.g(), set);
  return Rank(VStack(f_sub, g_sub)) == Rank(f_sub) + inst.n();
}

bool EquivalentConditionCheck(const AggregationInstance& inst, const IndexSet& set) {
  RequireUsableSet(inst, set);
  const Matrix f_sub = SubmatrixCols(inst.f(), set);
  const Matrix g_sub = SubmatrixCols(inst.g(), set);
  const std::size_t rank_g = Rank(g_sub);
  if (rank_g != inst.n()) return false;
  const std::size_t intersection = Rank(f_sub) + rank_g - Rank(VStack(f_sub, g_sub));
  return intersection == 0;
}

RegionVertices RegionVertices::FromSets(std::vector<IndexSet> sets, std::size_t k) {
  std::sort(sets.begin(), sets.end());
  RegionVertices out;
  out.num_users = k;
  for (const IndexSet& s : sets) {
    std::vector<Rational> rates;
    for (int bit : s.Indicator(k)) rates.emplace_back(bit);
    out.vertex_tuples.emplace_back(std::move(rates));
  }
  out.minimal_sets = std::move(sets);
  return out;
}

RegionVertices EnumerateMinimalSets(const AggregationInstance& inst,
                                    const EnumerationOptions& options) {
  const std::size_t k = inst.num_users();
  if (k > options.user_limit && !options.allow_large) {
    const std::uint64_t required =
        k >= 64 ? UINT64_MAX : (std::uint64_t{1} << k);
    const std::uint64_t budget =
        options.user_limit >= 64 ? UINT64_MAX : (std::uint64_t{1} << options.user_limit);
    throw BudgetExceededError(required, budget);
  }
  const std::size_t n = inst.n();
  std::size_t last = std::min(k, n + inst.m());
  if (options.max_size) last = std::min(last, *options.max_size);

  std::vector<IndexSet> found;
  for (std::size_t s = n + 1; s <= last; ++s) {
    std::vector<IndexSet> this_size;
    ForEachSubset(k, s, [&](const std::vector<std::size_t>& members) {
      IndexSet candidate = IndexSet::FromMembers(members);
      for (const IndexSet& m : found) {
        if (m.IsSubsetOf(candidate)) return;
      }
      const Matrix f_sub = SubmatrixCols(inst.f(), candidate);
      const Matrix g_sub = SubmatrixCols(inst.g(), candidate);
      const std::size_t stack = Rank(VStack(f_sub, g_sub));
      if (stack < s) return;
      if (stack == Rank(f_sub) + n) this_size.push_back(std::move(candidate));
    });
    found.insert(found.end(), this_size.begin(), this_size.end());
  }

  for (const IndexSet& m : found) {
    const Matrix f_sub = SubmatrixCols(inst.f(), m);
    const Matrix g_sub = SubmatrixCols(inst.g(), m);
    if (m.size() != n + Rank(f_sub) || Rank(VStack(f_sub, g_sub)) != m.size()) {
      throw std::logic_error("minimal set " + m.ToString() +
                             " violates |I| = N + rank(F_I)");
    }
  }
  return RegionVertices::FromSets(std::move(found), k);
}

std::string SeparatingInequality::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Rational& c = coefficients[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1) out += FormatRational(c) + "*";
    out += "R" + std::to_string(i + 1);
  }
  if (out.empty()) out = "0";
  return out + " >= " + FormatRational(bound);
}

MembershipResult Membership(const RateTuple& rate, const RegionVertices& vertices) {
  const std::size_t k = vertices.num_users;
  if (rate.size() != k) {
    throw Error(ErrorCode::kShapeMismatch,
                "rate tuple has " + std::to_string(rate.size()) +
                    " entries, instance has K = " + std::to_string(k));
  }
  const std::size_t v = vertices.minimal_sets.size();
  MembershipResult result;
  if (v == 0) return result;

  // Variables: weights (v) then slacks (k).
  //   sum_j w_j 1(i in I_j) + slack_i = R_i,   sum_j w_j = 1.
  std::vector<std::vector<Rational>> a(k + 1, std::vector<Rational>(v + k));
  std::vector<Rational> b(k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      if (vertices.minimal_sets[j].Contains(i + 1)) a[i][j] = 1;
    }
    a[i][v + i] = 1;
    b[i] = rate[i];
  }
  for (std::size_t j = 0; j < v; ++j) a[k][j] = 1;
  b[k] = 1;

  FeasibilityResult lp = SolveFeasibility(a, b);
  if (lp.feasible) {
    result.member = true;
    result.weights.assign(lp.solution.begin(), lp.solution.begin() + v);
    Rational total = 0;
    for (std::size_t j = 0; j < v; ++j) total += result.weights[j];
    for (std::size_t i = 0; i < k; ++i) {
      Rational used = 0;
      for (std::size_t j = 0; j < v; ++j) {
        if (vertices.minimal_sets[j].Contains(i + 1)) used += result.weights[j];
      }
      if (used > rate[i]) throw std::logic_error("membership witness over budget");
    }
    if (total != 1) throw std::logic_error("membership witness not convex");
    return result;
  }

  // With c = -y_{1..k} and z = y_{k+1}: c >= 0, c.1_{I_j} >= z for every
  // vertex and c.R < z.
  SeparatingInequality ineq;
  for (std::size_t i = 0; i < k; ++i) ineq.coefficients.push_back(-lp.certificate[i]);
  ineq.bound = lp.certificate[k];
  ineq = Normalize(std::move(ineq));
  Rational at_rate = 0;
  for (std::size_t i = 0; i < k; ++i) at_rate += ineq.coefficients[i] * rate[i];
  if (at_rate >= ineq.bound) throw std::logic_error("certificate does not separate");
  for (const IndexSet& s : vertices.minimal_sets) {
    Rational at_vertex = 0;
    for (std::size_t m : s.members()) at_vertex += ineq.coefficients[m - 1];
    if (at_vertex < ineq.bound) throw std::logic_error("certificate cuts a vertex");
  }
  result.violated = std::move(ineq);
  return result;
}

}  // namespace linsecagg
