# Copyright 2026 the gsuzuki authors
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

import pytest

import gsuzuki as gz


def test_point_counts():
    assert gz.point_count(3, 1, 1)["N"] == 10
    rep = gz.point_count(3, 1, 6)
    assert rep["N"] == 892
    assert rep["maximality"] == "Maximal"
    assert gz.point_count(7, 1, 1)["N"] == 50


def test_count_routes_agree():
    for p, t, n in [(3, 1, 5), (5, 1, 2), (3, 2, 1)]:
        formula = gz.point_count(p, t, n)["N"]
        assert gz.brute_force_count(p, t, n) == formula
        assert gz.decomposition_count(p, t, n) == formula


def test_l_polynomial_and_jacobian():
    assert gz.l_polynomial(3, 1) == [1, 6, 18, 36, 54, 54, 27]
    assert gz.jacobian_order(3, 1) == 196
    assert gz.jacobian_order(7, 1) == 2**9 * 911**6
    note = gz.jacobian_note(7, 1)
    assert note is not None and "1822" in note
    assert gz.jacobian_note(3, 1) is None


def test_newton_counts_roundtrip():
    coeffs = [str(c) for c in gz.l_polynomial(3, 1)]
    for n in range(1, 7):
        assert gz.newton_counts(coeffs, "3", 3, n) == gz.point_count(3, 1, n)["N"]


def test_cyclotomic():
    assert gz.scaled_mp(5) == [1, 5, 15, 25, 25]
    assert gz.verify_mp_factorization(7)
    coords = gz.gauss_sum_coords(3)
    assert coords == ["1", "2"]


def test_period_and_covers():
    assert gz.period(3, 1) == 12
    assert gz.period(5, 1) == 10
    assert gz.voloch_precondition(7, 1, 2)
    table = gz.cover_table(7, 1, 2, max_degree="8")
    assert [(r["degree"], r["genus"], r["point_bound"]) for r in table] == [
        (2, 41, 100),
        (4, 81, 200),
        (8, 161, 400),
    ]


def test_aut_audit():
    rep = gz.aut_group_audit(3, 1)
    assert rep["ok"]
    assert rep["order"] == 18


def test_verify_battery():
    rep = gz.verify(3, 1, n_max=4)
    assert rep["ok"], [c for c in rep["checks"] if not c["ok"]]


def test_errors():
    with pytest.raises(ValueError):
        gz.point_count(4, 1, 1)
    with pytest.raises(ValueError):
        gz.brute_force_count(3, 1, 40, oracle_limit="1000")
