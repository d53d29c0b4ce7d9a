"""Orbifold Hurwitz numbers, their quasi-polynomials and the numeric
topological recursion on the curve x = z exp(-z^a).

Exact quantities are returned as ``fractions.Fraction``; expansions and
verification reports as plain dicts in the same JSON schemas the command
line tool writes.
"""

import json
from fractions import Fraction

from . import _core
from ._core import HurwitzError, branch_points, omega_eval, omega_exact, residue_identity

__all__ = [
    "HurwitzError",
    "branch_points",
    "check_dilaton",
    "check_string",
    "count_connected_covers",
    "extract_Q",
    "fit_F",
    "hurwitz_normalized",
    "hurwitz_raw",
    "omega_eval",
    "omega_exact",
    "residue_identity",
    "verify_theorem1",
]


def hurwitz_normalized(a, g, mu):
    """H_g(mu) = H_{g;mu} |Aut mu| / m!, the coefficient of x^mu."""
    return Fraction(_core.hurwitz_normalized(a, g, list(mu)))


def hurwitz_raw(a, g, mu):
    """Weighted count H_{g;mu} of connected covers."""
    return Fraction(_core.hurwitz_raw(a, g, list(mu)))


def count_connected_covers(a, g, mu):
    """H_{g;mu} by brute-force enumeration in the symmetric group."""
    return Fraction(_core.count_connected_covers(a, g, list(mu)))


def fit_F(a, g, n):
    return json.loads(_core.fit_F(a, g, n))


def extract_Q(a, g, n):
    return json.loads(_core.extract_Q(a, g, n))


def check_string(a, g, n):
    return json.loads(_core.check_string(a, g, n))


def check_dilaton(a, g, n):
    return json.loads(_core.check_dilaton(a, g, n))


def verify_theorem1(a, g, n, samples=5, tol=1e-6, seed=7):
    return json.loads(_core.verify_theorem1(a, g, n, samples, tol, seed))
