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

#include "linsecagg/simplex.h"

#include <cstddef>
#include <optional>
#include <utility>

#include "linsecagg/error.h"

namespace linsecagg {

FeasibilityResult SolveFeasibility(const std::vector<std::vector<Rational>>& a,
                                   const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) {
    throw Error(ErrorCode::kShapeMismatch, "simplex: |b| differs from row count");
  }
  const std::size_t n = m == 0 ? 0 : a.front().size();
  const std::size_t width = n + m;  // structural columns, then artificials

  // Rows with negative rhs are negated so that the artificial basis starts
  // feasible; the certificate is mapped back at the end.
  std::vector<bool> flipped(m, false);
  std::vector<std::vector<Rational>> table(m, std::vector<Rational>(width + 1));
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) {
      throw Error(ErrorCode::kShapeMismatch, "simplex: ragged constraint matrix");
    }
    flipped[i] = b[i] < 0;
    const int sign = flipped[i] ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) table[i][j] = sign * a[i][j];
    table[i][n + i] = 1;
    table[i][width] = sign * b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs of the phase-one objective (sum of artificials); the last
  // entry holds minus the objective value.
  std::vector<Rational> cost(width + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= table[i][j];
    cost[width] -= table[i][width];
  }

  FeasibilityResult result;
  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < width; ++j) {
      if (cost[j] < 0) {
        entering = j;
        break;
      }
    }
    if (!entering) break;
    const std::size_t e = *entering;

    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (table[i][e] <= 0) continue;
      Rational ratio = table[i][width] / table[i][e];
      if (!leaving || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[*leaving])) {
        leaving = i;
        best_ratio = std::move(ratio);
      }
    }
    // The phase-one objective is bounded below by zero.
    if (!leaving) throw std::logic_error("simplex: unbounded phase-one objective");
    const std::size_t r = *leaving;

    const Rational pivot = table[r][e];
    for (Rational& v : table[r]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || table[i][e] == 0) continue;
      const Rational factor = table[i][e];
      for (std::size_t j = 0; j <= width; ++j) table[i][j] -= factor * table[r][j];
    }
    const Rational factor = cost[e];
    for (std::size_t j = 0; j <= width; ++j) cost[j] -= factor * table[r][j];
    basis[r] = e;
    ++result.pivots;
  }

  const Rational objective = -cost[width];
  if (objective == 0) {
    result.feasible = true;
    result.solution.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) result.solution[basis[i]] = table[i][width];
    }
  } else {
    result.certificate.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      Rational y = 1 - cost[n + i];
      result.certificate[i] = flipped[i] ? Rational(-y) : y;
    }
  }
  return result;
}

}  // namespace linsecagg
