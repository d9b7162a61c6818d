# Copyright 2026 The linsecagg Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Key placement and exact security checks for vector linear secure aggregation."""

from linsecagg._core import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    Error,
    Instance,
    find_violations,
    is_prime,
    nullspace,
    rank,
    rank_decomposition,
    reduce_protection,
    rref,
)

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "Error",
    "Instance",
    "find_violations",
    "is_prime",
    "nullspace",
    "rank",
    "rank_decomposition",
    "reduce_protection",
    "rref",
]
