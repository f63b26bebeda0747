"""Hyperharmonic tables, route equivalence, limits, and ratio experiments."""

import math
from fractions import Fraction

import pytest

from qharmonic.hyperharmonic import (
    HyperTable,
    QHyperTable,
    diag_ratio_classical,
    diag_ratio_classical_table,
    diag_ratio_q,
    diag_ratio_q_table,
    hyperharmonic,
    q_harmonic_direct,
    q_hyperharmonic,
    qh_recurrence_residual,
)
from qharmonic.qpoly import QPoly, QRatFn, parse_qratfn

Q = QPoly.q_power(1)
ONE = QPoly.const(1)


def test_classical_values():
    assert hyperharmonic(3, 1) == Fraction(11, 6)
    assert hyperharmonic(3, 2, "recursion") == Fraction(13, 3)
    assert hyperharmonic(3, 2, "h01") == Fraction(13, 3)
    assert hyperharmonic(3, 2, "h02") == Fraction(13, 3)
    for r in (1, 2, 5):
        for route in ("recursion", "h01", "h02"):
            assert hyperharmonic(0, r, route) == 0


def test_classical_table_invariants():
    table = HyperTable()
    assert table.get(4, 0) == Fraction(1, 4)
    for n in range(1, 9):
        assert table.get(n, 1) == sum(Fraction(1, j) for j in range(1, n + 1))
        for r in range(1, 5):
            acc = sum((table.get(ell, r - 1) for ell in range(1, n + 1)), Fraction(0))
            assert table.get(n, r) == acc


def test_classical_routes_agree():
    for n in range(11):
        for r in range(1, 6):
            a = hyperharmonic(n, r, "recursion")
            assert hyperharmonic(n, r, "h01") == a
            assert hyperharmonic(n, r, "h02") == a


def test_q_values():
    assert q_hyperharmonic(2, 1, "def") == parse_qratfn("(1 + 2*q)/(1 + q)")
    assert q_hyperharmonic(2, 2, "ph01") == parse_qratfn("(q + 2*q^2 + 2*q^3)/(1 + q)")
    assert q_hyperharmonic(3, 2, "def").limit_q1() == Fraction(13, 3)
    assert q_hyperharmonic(0, 3, "def").is_zero
    assert q_harmonic_direct(1) == QRatFn.const(1)


def test_q_seed_row():
    table = QHyperTable()
    assert table.get(3, 0) == QRatFn(ONE, Q * (ONE + Q + Q**2))
    with pytest.raises(ValueError):
        table.get(0, 0)
    # H_n^{(1)}(q) = sum q^(j-1)/[j]_q
    for n in range(1, 7):
        assert table.get(n, 1) == q_harmonic_direct(n)


@pytest.mark.parametrize("r", range(1, 4))
def test_q_routes_agree(r):
    for n in range(7):
        d = q_hyperharmonic(n, r, "def")
        assert q_hyperharmonic(n, r, "ph01") == d
        assert q_hyperharmonic(n, r, "ph02") == d


def test_ph022_q_binomial_reading_matches_def():
    for r in range(1, 5):
        for m in range(r):
            for n in range(6):
                lhs = q_hyperharmonic(n, r, "ph022", m=m, binomial="q")
                assert lhs == q_hyperharmonic(n, r, "def"), (n, r, m)


def test_ph022_classical_reading_can_differ():
    good = q_hyperharmonic(2, 3, "ph022", m=1, binomial="q")
    bad = q_hyperharmonic(2, 3, "ph022", m=1, binomial="classical")
    assert good == q_hyperharmonic(2, 3, "def")
    assert bad != good


def test_ph022_rejects_bad_order():
    with pytest.raises(ValueError):
        q_hyperharmonic(3, 2, "ph022", m=2)


def test_q_to_1_degeneration():
    for n in range(9):
        for r in range(1, 5):
            assert q_hyperharmonic(n, r, "def").limit_q1() == hyperharmonic(n, r)


def test_recurrence_residuals_vanish():
    assert qh_recurrence_residual("qh11", 0, 1).is_zero
    assert qh_recurrence_residual("qh13", 2, 1).is_zero
    for n in range(7):
        for r in range(1, 5):
            assert qh_recurrence_residual("qh11", n, r).is_zero
            assert qh_recurrence_residual("qh13", n, r).is_zero


def test_classical_recurrence_after_h02():
    table = HyperTable()
    for n in range(1, 13):
        for r in range(1, 6):
            lhs = table.get(n, r + 1)
            rhs = Fraction(n + r, r) * table.get(n, r) - Fraction(
                math.comb(n + r - 1, r), r
            )
            assert lhs == rhs


def test_numeric_table_matches_symbolic_evaluation():
    q0 = Fraction(2, 7)
    numeric = QHyperTable(q0)
    for n in range(1, 6):
        for r in range(1, 4):
            assert numeric.get(n, r) == q_hyperharmonic(n, r, "def").eval(q0)


def test_diag_ratio_classical():
    assert diag_ratio_classical(1) == Fraction(5, 2)
    r50 = diag_ratio_classical(50)
    r100 = diag_ratio_classical(100)
    r200 = diag_ratio_classical(200)
    assert r50 < r100 < r200 < 4
    assert abs(r200 - 4) < Fraction(5, 100)
    assert abs(r200 - 4) < abs(r50 - 4)
    table = diag_ratio_classical_table(50)
    assert table[0] == (1, Fraction(5, 2))
    assert table[-1] == (50, r50)


@pytest.mark.parametrize("q0", [Fraction(1, 2), Fraction(1, 3), Fraction(3, 4)])
def test_diag_ratio_q_converges(q0):
    err10 = abs(diag_ratio_q(10, q0) - q0)
    err40 = abs(diag_ratio_q(40, q0) - q0)
    assert err40 < Fraction(5, 100)
    assert err40 < err10
    table = diag_ratio_q_table(12, q0)
    assert table[9][1] == diag_ratio_q(10, q0)


def test_diag_ratio_q_domain():
    with pytest.raises(ValueError):
        diag_ratio_q(5, Fraction(3, 2))
    with pytest.raises(ValueError):
        diag_ratio_q(5, 0)
