"""Exact-arithmetic core: polynomials, rational functions, rendering."""

import random
from fractions import Fraction

import pytest

from qharmonic.qpoly import (
    PoleError,
    QPoly,
    QRatFn,
    parse_qpoly,
    parse_qratfn,
    poly_gcd,
    render_qpoly,
    render_qratfn,
)

Q = QPoly.q_power(1)
ONE = QPoly.const(1)


def euclid_gcd_oracle(a, b):
    """Plain Fraction-coefficient Euclid, independent of poly_gcd."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def test_reduction_on_construction_long_division_oracle():
    # (1-q^2)/(1-q) -> 1+q, cross-checked by explicit long division
    num = ONE - Q**2
    den = ONE - Q
    quotient, remainder = divmod(num, den)
    assert remainder.is_zero
    assert quotient == ONE + Q
    assert QRatFn(num, den) == QRatFn.from_poly(ONE + Q)


def test_telescoping_add_is_constant():
    one_minus_q = ONE - Q
    f = QRatFn(ONE, one_minus_q) + QRatFn(-Q, one_minus_q)
    assert f == QRatFn.const(1)


def test_mul_by_inverse_is_one():
    x = QRatFn(ONE + 2 * Q, ONE + Q)
    assert x * (1 / x) == QRatFn.const(1)


def test_div_by_zero_ratfn_rejected():
    x = QRatFn(ONE + Q, ONE)
    with pytest.raises(ZeroDivisionError):
        x / QRatFn.const(0)


@pytest.mark.parametrize(
    "a,b,expected",
    [
        (ONE - Q**2, ONE - Q, Q - ONE),  # monic normalization of q-1
        (ONE + Q + Q**2, ONE + Q, ONE),
    ],
)
def test_poly_gcd_matches_euclid_oracle(a, b, expected):
    g = poly_gcd(a, b)
    assert g == euclid_gcd_oracle(a, b)
    assert g == expected
    if g.degree > 0:
        assert a.exact_div(g) * g == a
        assert b.exact_div(g) * g == b


def test_poly_gcd_with_zero_is_monic_part():
    p = 3 * (ONE + Q)
    assert poly_gcd(p, QPoly()) == ONE + Q
    assert poly_gcd(QPoly(), p) == ONE + Q
    with pytest.raises(ValueError):
        poly_gcd(QPoly(), QPoly())


def test_eval_substitute_and_reduce():
    f = QRatFn(ONE + 2 * Q, ONE + Q)
    assert f.eval(1) == Fraction(3, 2)
    assert QRatFn.const(Fraction(7, 3)).eval(Fraction(5, 9)) == Fraction(7, 3)
    with pytest.raises(PoleError):
        QRatFn(ONE, ONE - Q).eval(1)


def test_limit_q1():
    qint5 = ONE + Q + Q**2 + Q**3 + Q**4
    assert QRatFn.from_poly(qint5).limit_q1() == 5
    assert QRatFn(ONE - Q**3, ONE - Q).limit_q1() == 3
    with pytest.raises(PoleError):
        QRatFn(ONE, ONE - Q).limit_q1()


def _random_poly(rng, max_deg=4):
    return QPoly(
        [
            Fraction(rng.randint(-6, 6), rng.randint(1, 5))
            for _ in range(rng.randint(0, max_deg + 1))
        ]
    )


def _random_ratfn(rng):
    num = _random_poly(rng)
    den = QPoly()
    while den.is_zero:
        den = _random_poly(rng)
    return QRatFn(num, den)


def test_eval_is_a_field_homomorphism():
    # eval(f op g, q0) == eval(f, q0) op eval(g, q0) away from poles
    rng = random.Random(20240817)
    checked = 0
    while checked < 60:
        f = _random_ratfn(rng)
        g = _random_ratfn(rng)
        q0 = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        try:
            fv, gv = f.eval(q0), g.eval(q0)
        except PoleError:
            continue
        assert (f + g).eval(q0) == fv + gv
        assert (f - g).eval(q0) == fv - gv
        assert (f * g).eval(q0) == fv * gv
        if gv != 0:
            assert (f / g).eval(q0) == fv / gv
        checked += 1


def test_reduction_idempotent_and_cross_multiplication_equality():
    rng = random.Random(91)
    for _ in range(120):
        f = _random_ratfn(rng)
        again = QRatFn(f.num, f.den)
        assert again.num == f.num and again.den == f.den
        g = _random_ratfn(rng)
        cross_equal = (f.num * g.den - g.num * f.den).is_zero
        assert cross_equal == (f == g)
        # scaling both parts must not change the reduced form
        scaled = QRatFn(f.num * (ONE + Q**2) * 3, f.den * (ONE + Q**2) * 3)
        assert scaled == f


def test_limit_equals_eval_when_denominator_regular_at_one():
    rng = random.Random(7)
    seen = 0
    while seen < 40:
        f = _random_ratfn(rng)
        if f.den.eval(1) == 0:
            continue
        assert f.limit_q1() == f.eval(1)
        seen += 1


@pytest.mark.parametrize(
    "p,text",
    [
        (QPoly(), "0"),
        (QPoly.const(Fraction(-3, 2)), "-3/2"),
        (ONE + Q + 2 * Q**2, "1 + q + 2*q^2"),
        (Q - Q**3, "q - q^3"),
        (QPoly([Fraction(1, 2), Fraction(-5, 3)]), "1/2 - 5/3*q"),
    ],
)
def test_render_qpoly_canonical(p, text):
    assert render_qpoly(p) == text
    assert parse_qpoly(text) == p


def test_render_roundtrip_random():
    rng = random.Random(555)
    for _ in range(150):
        p = _random_poly(rng, max_deg=6)
        assert parse_qpoly(render_qpoly(p)) == p
        f = _random_ratfn(rng)
        assert parse_qratfn(render_qratfn(f)) == f


def test_parser_accepts_compact_spelling():
    assert parse_qratfn("(q+2q^2+2q^3)/(1+q)") == QRatFn(
        Q + 2 * Q**2 + 2 * Q**3, ONE + Q
    )
    assert parse_qpoly("1+q+2q^2+q^3+q^4") == ONE + Q + 2 * Q**2 + Q**3 + Q**4


def test_ratfn_renders_with_parens_only_when_needed():
    assert render_qratfn(QRatFn.from_poly(ONE + Q)) == "1 + q"
    assert render_qratfn(QRatFn(ONE + 2 * Q, ONE + Q)) == "(1 + 2*q)/(1 + q)"


def test_pow_and_mixed_arithmetic():
    f = QRatFn(Q, ONE + Q)
    assert f**0 == QRatFn.const(1)
    assert f**3 == f * f * f
    assert f**-2 == 1 / (f * f)
    assert (ONE + Q) * f == QRatFn.from_poly(Q)
    assert f + 1 == QRatFn(ONE + 2 * Q, ONE + Q)
    assert Fraction(1, 2) * f == QRatFn(Q, 2 * (ONE + Q))
