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


"""Smoke tests for the Python bindings."""

import pytest

import linsecagg

F2 = [[1, 0, 5, 5, 3, 5], [0, 1, 5, 6, 0, 3]]
G2_RAW = [[3, 0, 1, 4, 2, 4], [2, 2, 1, 3, 5, 3], [1, 1, 3, 4, 3, 1]]
G2 = [[0, 0, 1, 0, 3, 3], [0, 0, 0, 1, 0, 1]]
P2 = [[2, 2], [2, 1], [1, 0], [0, 1], [0, 0], [0, 0]]


@pytest.fixture
def three_users():
    return linsecagg.Instance(3, [[1, 1, 1]], [[1, 0, 1]])


def test_linear_algebra():
    assert linsecagg.is_prime(7)
    assert linsecagg.rank(5, [[1, 2], [2, 4]]) == 1
    rref, pivots, rank = linsecagg.rref(5, [[2, 4], [1, 3]])
    assert rref == [[1, 0], [0, 1]] and pivots == [0, 1] and rank == 2
    assert linsecagg.nullspace(5, [[1, 2], [2, 4]]) == [[3], [1]]


def test_minimal_sets_and_encoder(three_users):
    assert three_users.k == 3
    assert three_users.minimal_sets() == [[1, 2], [2, 3]]
    assert three_users.rank_increment([1, 2])
    assert not three_users.rank_increment([1, 3])
    p = three_users.construct_encoder([1, 2])
    assert three_users.verify_encoder(p)["ok"]
    verdict = three_users.security(p)
    assert verdict["correct"] and verdict["secure"]
    assert verdict["tuples"] == 81


def test_membership_and_schedule(three_users):
    inside = three_users.membership(["1/2", "1", "1/2"])
    assert inside["member"] and inside["weights"] == ["1/2", "1/2"]
    outside = three_users.membership(["1", "0", "1"])
    assert not outside["member"] and outside["violated"] == "R2 >= 1"
    schedule = three_users.schedule(["1/2", "1", "1/2"])
    assert schedule["total_length"] == 2
    assert schedule["key_usage"] == [1, 2, 1]
    assert three_users.schedule_security(["1/2", "1", "1/2"])["secure"]


def test_round_trip(three_users):
    p = three_users.construct_encoder([2, 3])
    x = three_users.simulate_round(p, [1, 2, 2], [1])
    assert three_users.decode(x) == [(1 + 2 + 2) % 3]


def test_sweep(three_users):
    report = three_users.sweep()
    assert report["ok"]
    assert report["support_sets"] == [[1, 2], [1, 2, 3], [2, 3]]
    assert len(report["passing_encoders"]) == 6


def test_dependent_protection_rows_are_rejected_then_reduced():
    with pytest.raises(linsecagg.Error) as info:
        linsecagg.Instance(7, F2, G2_RAW)
    assert info.value.code == "InvalidInstance"
    assert [v["kind"] for v in info.value.violations] == ["StackRankDeficient"]
    report = linsecagg.reduce_protection(7, F2, G2_RAW)
    assert report["dropped_row_count"] == 1
    assert report["reduced_g"] == G2


def test_six_user_encoder():
    inst = linsecagg.Instance(7, F2, G2)
    assert [1, 2, 3, 4] in inst.minimal_sets()
    assert inst.verify_encoder(P2)["ok"]
    verdict = inst.security(P2, workers=2)
    assert verdict["secure"] and verdict["tuples"] == 7**8


def test_budget_is_enforced():
    inst = linsecagg.Instance(7, F2, G2)
    with pytest.raises(linsecagg.BudgetExceeded) as info:
        inst.security(P2, budget=10)
    assert info.value.required == 7**8
    assert info.value.budget == 10
