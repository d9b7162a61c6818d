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

#ifndef LINSECAGG_SIMPLEX_H_
#define LINSECAGG_SIMPLEX_H_

#include <vector>

#include "linsecagg/rational.h"

namespace linsecagg {

struct FeasibilityResult {
  bool feasible = false;
  // Basic feasible solution of A x = b, x >= 0 (set when feasible).
  std::vector<Rational> solution;
  // Farkas certificate y with y^T A <= 0 and y^T b > 0 (set when infeasible).
  std::vector<Rational> certificate;
  int pivots = 0;
};

// Decides A x = b, x >= 0 exactly with a phase-one tableau simplex: one
// artificial per row, Bland's smallest-index rule for both entering and
// leaving variables. Rows of A must all have the same length.
FeasibilityResult SolveFeasibility(const std::vector<std::vector<Rational>>& a,
                                   const std::vector<Rational>& b);

}  // namespace linsecagg

#endif  // LINSECAGG_SIMPLEX_H_
