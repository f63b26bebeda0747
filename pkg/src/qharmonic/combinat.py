"""q-integers, Gaussian binomials, Stirling numbers of both kinds (classical
and q), Bernoulli numbers/polynomials, and exact power-sum closed forms.

All q-objects are polynomials in q over the rationals; everything classical
is an exact rational.  Tables grow lazily and are never evicted; to share a
table between workers, pre-warm it sequentially first.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .qpoly import BigRat, QPoly

__all__ = [
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_rising",
    "q_stirling2",
    "q_stirling1u",
    "stirling2",
    "stirling1_signed",
    "StirlingTable",
    "bernoulli_number",
    "bernoulli_poly_eval",
    "sum_powers",
    "q_int_at",
    "q_factorial_at",
    "q_binomial_at",
]

_ONE = QPoly.const(1)
_ZERO = QPoly()


@lru_cache(maxsize=None)
def q_int(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("q_int wants a nonnegative integer")
    return QPoly((1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    """[n]_q! = [n]_q [n-1]_q ... [1]_q."""
    if n < 0:
        raise ValueError("q_factorial wants a nonnegative integer")
    if n == 0:
        return _ONE
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial coefficient; zero outside 0 <= k <= n.

    Built by the product formula prod_i (1 - q^(n-k+i)) / (1 - q^i) with an
    exact polynomial division at every step, which keeps intermediate degrees
    minimal (every partial product is itself a Gaussian binomial).
    """
    if n < 0:
        raise ValueError("q_binomial wants a nonnegative upper index")
    if k < 0 or k > n:
        return _ZERO
    k = min(k, n - k)
    result = _ONE
    for i in range(1, k + 1):
        factor = QPoly.q_power(n - k + i) - 1
        result = (result * factor).exact_div(QPoly.q_power(i) - 1)
    return result


def q_rising(ell: int, p: int) -> QPoly:
    """Rising q-factorial [ell]_q [ell+1]_q ... [ell+p-1]_q; empty product 1."""
    if ell < 0 or p < 0:
        raise ValueError("q_rising wants nonnegative arguments")
    result = _ONE
    for i in range(p):
        result = result * q_int(ell + i)
    return result


# -- point evaluations (used by sampled mode and the ratio experiments) -------


def q_int_at(n: int, q0: Fraction) -> Fraction:
    if q0 == 1:
        return Fraction(n)
    return (1 - q0**n) / (1 - q0)


def q_factorial_at(n: int, q0: Fraction) -> Fraction:
    value = Fraction(1)
    for i in range(1, n + 1):
        value *= q_int_at(i, q0)
    return value


def q_binomial_at(n: int, k: int, q0: Fraction) -> Fraction:
    """Gaussian binomial evaluated at a rational point, without building
    the (possibly huge) polynomial."""
    if k < 0 or k > n:
        return Fraction(0)
    k = min(k, n - k)
    if q0 == 1:
        return Fraction(math.comb(n, k))
    num = Fraction(1)
    den = Fraction(1)
    for i in range(1, k + 1):
        num *= 1 - q0 ** (n - k + i)
        den *= 1 - q0**i
    if den == 0:
        # q0 a root of unity: fall back to the exact polynomial
        return q_binomial(n, k).eval(q0)
    return num / den


# ---------------------------------------------------------------------------
# Stirling numbers
# ---------------------------------------------------------------------------


class StirlingTable:
    """Memoized triangle of Stirling-like numbers of one kind.

    kind is one of "q-second", "q-first-unsigned", "classical-second",
    "classical-first-signed"; entries are QPoly for the q kinds and int for
    the classical kinds.
    """

    KINDS = ("q-second", "q-first-unsigned", "classical-second", "classical-first-signed")

    def __init__(self, kind: str):
        if kind not in self.KINDS:
            raise ValueError(f"unknown Stirling kind {kind!r}")
        self.kind = kind
        self._entries: dict[tuple[int, int], object] = {}

    def get(self, n: int, k: int):
        if n < 0 or k < 0:
            raise ValueError("Stirling indices must be nonnegative")
        key = (n, k)
        cached = self._entries.get(key)
        if cached is not None:
            return cached
        value = self._compute(n, k)
        self._entries[key] = value
        return value

    def _compute(self, n: int, k: int):
        kind = self.kind
        if kind == "q-second":
            # S_q(n+1, m) = S_q(n, m-1) + [m]_q S_q(n, m); S_q(n,0)=S_q(0,n)=delta
            if n == 0 or k == 0:
                return _ONE if n == k else _ZERO
            if k > n:
                return _ZERO
            return self.get(n - 1, k - 1) + q_int(k) * self.get(n - 1, k)
        if kind == "q-first-unsigned":
            # coefficients of X^k in prod_{m<p} ([m]_q + q^m X), X standing
            # for [l]_q; the shift rule [l+m]_q = [m]_q + q^m [l]_q makes the
            # expansion well defined
            row = self._suq_row(n)
            return row[k] if k < len(row) else _ZERO
        if kind == "classical-second":
            if n == 0 or k == 0:
                return 1 if n == k else 0
            if k > n:
                return 0
            return self.get(n - 1, k - 1) + k * self.get(n - 1, k)
        # classical-first-signed: s(n+1, k) = s(n, k-1) - n s(n, k)
        if n == 0 or k == 0:
            return 1 if n == k else 0
        if k > n:
            return 0
        return self.get(n - 1, k - 1) - (n - 1) * self.get(n - 1, k)

    def _suq_row(self, p: int):
        row = [_ONE]  # X-polynomial coefficients, ascending
        for m in range(p):
            const, weight = q_int(m), QPoly.q_power(m)
            new = [_ZERO] * (len(row) + 1)
            for i, c in enumerate(row):
                new[i] = new[i] + c * const
                new[i + 1] = new[i + 1] + c * weight
            row = new
        return row


_Q_STIRLING2 = StirlingTable("q-second")
_Q_STIRLING1U = StirlingTable("q-first-unsigned")
_STIRLING2 = StirlingTable("classical-second")
_STIRLING1 = StirlingTable("classical-first-signed")


def q_stirling2(n: int, m: int) -> QPoly:
    """Second-kind q-Stirling number S_q(n, m)."""
    return _Q_STIRLING2.get(n, m)


def q_stirling1u(p: int, k: int) -> QPoly:
    """Unsigned first-kind q-Stirling number: the coefficient of ([l]_q)^k
    in the rising q-factorial [l]_q^(p)."""
    return _Q_STIRLING1U.get(p, k)


def stirling2(n: int, m: int) -> int:
    return _STIRLING2.get(n, m)


def stirling1_signed(p: int, m: int) -> int:
    return _STIRLING1.get(p, m)


# ---------------------------------------------------------------------------
# Bernoulli numbers and power sums
# ---------------------------------------------------------------------------

_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli_number(j: int) -> BigRat:
    """B_j from the recurrence sum_{i<=k} C(k+1, i) B_i = k + 1.

    This convention gives B_1 = +1/2 (equivalently, the coefficients of
    t / (1 - e^(-t))).
    """
    if j < 0:
        raise ValueError("bernoulli_number wants a nonnegative index")
    while len(_bernoulli_cache) <= j:
        k = len(_bernoulli_cache)
        acc = sum(
            (math.comb(k + 1, i) * _bernoulli_cache[i] for i in range(k)),
            Fraction(0),
        )
        _bernoulli_cache.append((k + 1 - acc) / (k + 1))
    return _bernoulli_cache[j]


def bernoulli_poly_eval(k: int, x) -> BigRat:
    """B_k(x) = sum_i C(k, i) b_i x^(k-i) with b_i = (-1)^i B_i.

    The b_i are the t/(e^t - 1) series coefficients; the sign relation to
    bernoulli_number is pinned by the power-sum cross-check in the tests.
    """
    if k < 0:
        raise ValueError("bernoulli_poly_eval wants a nonnegative degree")
    x = Fraction(x)
    acc = Fraction(0)
    for i in range(k + 1):
        b_i = bernoulli_number(i) if i % 2 == 0 else -bernoulli_number(i)
        acc += math.comb(k, i) * b_i * x ** (k - i)
    return acc


def sum_powers(n: int, k: int, route: str = "brute") -> BigRat:
    """1^k + 2^k + ... + n^k by one of three independent routes."""
    if n < 1 or k < 0:
        raise ValueError("sum_powers wants n >= 1 and k >= 0")
    if route == "brute":
        return Fraction(sum(ell**k for ell in range(1, n + 1)))
    if route == "ber":
        acc = sum(
            (
                math.comb(k + 1, j) * bernoulli_number(j) * n ** (k + 1 - j)
                for j in range(k + 1)
            ),
            Fraction(0),
        )
        return acc / (k + 1)
    if route == "ber1":
        return (bernoulli_poly_eval(k + 1, n + 1) - bernoulli_poly_eval(k + 1, 1)) / (
            k + 1
        )
    raise ValueError(f"unknown sum_powers route {route!r}")
