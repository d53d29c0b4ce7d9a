import cmath
from fractions import Fraction

import pytest

import orbifold_hurwitz as oh


def test_small_values():
    assert oh.hurwitz_raw(2, 0, [3, 1]) == 3
    assert oh.hurwitz_normalized(2, 0, [3, 1]) == Fraction(3, 2)
    assert oh.hurwitz_normalized(2, 0, [2]) == Fraction(1, 2)
    assert oh.hurwitz_raw(2, 0, [1, 2]) == 0


def test_oracle_matches_recursion():
    for mu in ([2, 2], [3, 1], [4]):
        assert oh.count_connected_covers(2, 0, mu) == oh.hurwitz_raw(2, 0, mu)


def test_f11_expansion():
    f = oh.fit_F(3, 1, 1)
    assert f["schema_version"] == 1
    assert [(e["r"], e["k"]) for e in f["entries"]] == [([3], [0]), ([3], [1])]


def test_genus_zero_quasi_polynomial():
    q = oh.extract_Q(1, 0, 4)
    (cls,) = q["classes"]
    assert sorted(m["exps"] for m in cls["monomials"]) == [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]
    assert oh.check_string(2, 0, 3)["pass"]
    assert oh.check_dilaton(2, 1, 1)["pass"]


def test_numeric_recursion():
    a = 2
    (alpha, _) = oh.branch_points(a)
    assert abs(1 - a * alpha**a) < 1e-14
    zs = [0.2 + 0.1j, -0.15 + 0.2j, 0.05 - 0.3j]
    w = oh.omega_eval(a, 0, zs)
    assert cmath.isclose(w, oh.omega_exact(a, 0, zs), rel_tol=1e-12)
    assert cmath.isclose(w, oh.omega_eval(a, 0, zs, method="nested"), rel_tol=1e-12)
    assert oh.verify_theorem1(2, 1, 1)["pass"]
    assert abs(oh.residue_identity(3, "string_y", 3, 1) - 1) < 1e-8


def test_errors():
    with pytest.raises(oh.HurwitzError):
        oh.hurwitz_raw(0, 0, [1])
    with pytest.raises(oh.HurwitzError):
        oh.omega_eval(2, 0, [0.1, 0.1, 0.2])
    with pytest.raises(ValueError):
        oh.residue_identity(2, "other", 1, 1)
