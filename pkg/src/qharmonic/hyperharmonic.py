"""Classical and q-hyperharmonic numbers by independent routes, with the
two diagonal-ratio experiments.

The memoized tables implement the defining recursions; the closed-form
routes (h01/h02 classically, ph01/ph02 and the mixed-order ph022 sum in the
q-case) deliberately bypass them so route-equivalence checks compare
genuinely independent computations.  Tables follow a warm-then-share
contract: either confine a table to one worker or pre-warm it to the
maximum index before concurrent reads.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .combinat import q_binomial, q_binomial_at, q_int, q_int_at
from .qpoly import BigRat, QPoly, QRatFn

__all__ = [
    "HyperTable",
    "QHyperTable",
    "hyperharmonic",
    "q_hyperharmonic",
    "q_harmonic_direct",
    "qh_recurrence_residual",
    "diag_ratio_classical",
    "diag_ratio_q",
    "diag_ratio_classical_table",
    "diag_ratio_q_table",
]

_R_ZERO = QRatFn.const(0)
_Q = QPoly.q_power(1)


class HyperTable:
    """Classical H_n^{(r)} table; H_n^{(0)} = 1/n, rows built by partial sums."""

    def __init__(self):
        self._rows: dict[int, list[Fraction]] = {}

    def get(self, n: int, r: int) -> BigRat:
        if n < 0 or r < 0:
            raise ValueError("indices must be nonnegative")
        if r == 0:
            if n == 0:
                raise ValueError("order-0 value undefined at n = 0")
            return Fraction(1, n)
        if n == 0:
            return Fraction(0)
        self.warm(n, r)
        return self._rows[r][n]

    def warm(self, n_max: int, r_max: int) -> None:
        for r in range(1, r_max + 1):
            row = self._rows.setdefault(r, [Fraction(0)])
            while len(row) <= n_max:
                n = len(row)
                below = Fraction(1, n) if r == 1 else self._rows[r - 1][n]
                row.append(row[-1] + below)

    def harmonic(self, n: int) -> BigRat:
        return self.get(n, 1) if n else Fraction(0)


class QHyperTable:
    """H_n^{(r)}(q) table over Q(q), or over Q at a fixed rational q0.

    Seeds H_n^{(0)}(q) = 1/(q [n]_q) for n >= 1; rows for r >= 1 are the
    q-weighted partial sums H_n^{(r)} = H_{n-1}^{(r)} + q^n H_n^{(r-1)}.
    """

    def __init__(self, q0: Fraction | None = None):
        self.q0 = q0
        self._seeds: dict[int, object] = {}
        self._rows: dict[int, list] = {}

    def _zero(self):
        return _R_ZERO if self.q0 is None else Fraction(0)

    def _seed(self, n: int):
        value = self._seeds.get(n)
        if value is None:
            if self.q0 is None:
                value = QRatFn(QPoly.const(1), _Q * q_int(n))
            else:
                value = 1 / (self.q0 * q_int_at(n, self.q0))
            self._seeds[n] = value
        return value

    def _qpow(self, e: int):
        return QPoly.q_power(e) if self.q0 is None else self.q0**e

    def get(self, n: int, r: int):
        if n < 0 or r < 0:
            raise ValueError("indices must be nonnegative")
        if r == 0:
            if n == 0:
                raise ValueError("order-0 value undefined at n = 0")
            return self._seed(n)
        if n == 0:
            return self._zero()
        row = self._rows.get(r)
        if row is None or len(row) <= n:
            self.warm(n, r)
            row = self._rows[r]
        return row[n]

    def warm(self, n_max: int, r_max: int) -> None:
        for r in range(1, r_max + 1):
            row = self._rows.setdefault(r, [self._zero()])
            while len(row) <= n_max:
                n = len(row)
                below = self._seed(n) if r == 1 else self._rows[r - 1][n]
                row.append(row[-1] + self._qpow(n) * below)


_CLASSICAL = HyperTable()
_SYMBOLIC = QHyperTable()


def default_tables() -> tuple[HyperTable, QHyperTable]:
    """The shared module-level tables (classical, symbolic q)."""
    return _CLASSICAL, _SYMBOLIC


# ---------------------------------------------------------------------------
# classical routes
# ---------------------------------------------------------------------------


def _harmonic_direct(n: int) -> Fraction:
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))


def hyperharmonic(n: int, r: int, route: str = "recursion", table: HyperTable | None = None) -> BigRat:
    """H_n^{(r)} by the table recursion or one of two closed forms."""
    if n < 0 or r < 1:
        raise ValueError("hyperharmonic wants n >= 0, r >= 1")
    if route == "recursion":
        return (table or _CLASSICAL).get(n, r)
    if route == "h01":
        if n == 0:
            return Fraction(0)
        return math.comb(n + r - 1, r - 1) * (
            _harmonic_direct(n + r - 1) - _harmonic_direct(r - 1)
        )
    if route == "h02":
        return sum(
            (
                Fraction(math.comb(n + r - j - 1, r - 1), j)
                for j in range(1, n + 1)
            ),
            Fraction(0),
        )
    raise ValueError(f"unknown hyperharmonic route {route!r}")


# ---------------------------------------------------------------------------
# q routes
# ---------------------------------------------------------------------------


def q_harmonic_direct(m: int) -> QRatFn:
    """H_m(q) = sum_j q^(j-1) / [j]_q, built without the table."""
    acc = _R_ZERO
    for j in range(1, m + 1):
        acc = acc + QRatFn(QPoly.q_power(j - 1), q_int(j))
    return acc


def q_hyperharmonic(
    n: int,
    r: int,
    route: str = "def",
    m: int = 0,
    binomial: str = "q",
    table: QHyperTable | None = None,
) -> QRatFn:
    """H_n^{(r)}(q) by the defining recursion or a closed form.

    Routes: "def" (table), "ph01", "ph02", and "ph022" which needs the
    lower order 0 <= m < r and a `binomial` reading ("q" or "classical");
    whether the ph022 sum actually equals H_n^{(r)}(q) under a given reading
    is an identity-engine verdict, not a precondition here.
    """
    if n < 0 or r < 1:
        raise ValueError("q_hyperharmonic wants n >= 0, r >= 1")
    if route == "def":
        return (table or _SYMBOLIC).get(n, r)
    if route == "ph01":
        if n == 0:
            return _R_ZERO
        binom = QRatFn.from_poly(q_binomial(n + r - 1, r - 1))
        return binom * (q_harmonic_direct(n + r - 1) - q_harmonic_direct(r - 1))
    if route == "ph02":
        acc = _R_ZERO
        for j in range(1, n + 1):
            acc = acc + QRatFn(
                q_binomial(n + r - j - 1, r - 1) * QPoly.q_power(r * j - 1),
                q_int(j),
            )
        return acc
    if route == "ph022":
        if not 0 <= m < r:
            raise ValueError("ph022 wants 0 <= m < r")
        tab = table or _SYMBOLIC
        acc = _R_ZERO
        for j in range(1, n + 1):
            if binomial == "q":
                b = q_binomial(n + r - m - j - 1, r - m - 1)
            elif binomial == "classical":
                b = QPoly.const(math.comb(n + r - m - j - 1, r - m - 1))
            else:
                raise ValueError(f"unknown binomial reading {binomial!r}")
            acc = acc + QPoly.q_power(j * (r - m)) * b * tab.get(j, m)
        return acc
    raise ValueError(f"unknown q_hyperharmonic route {route!r}")


def qh_recurrence_residual(which: str, n: int, r: int, table: QHyperTable | None = None) -> QRatFn:
    """LHS - RHS of the order-raising (qh11) or index-shift (qh13) recurrence."""
    if n < 0 or r < 1:
        raise ValueError("residual wants n >= 0, r >= 1")
    tab = table or _SYMBOLIC
    if which == "qh11":
        lhs = tab.get(n, r + 1)
        rhs = QRatFn(q_int(n + r), q_int(r)) * tab.get(n, r) - QRatFn(
            QPoly.q_power(r - 1) * q_binomial(n + r - 1, r), q_int(r)
        )
        return lhs - rhs
    if which == "qh13":
        lhs = q_int(n + r) * tab.get(n, r)
        rhs = q_int(n + 1) * tab.get(n + 1, r) - QPoly.q_power(n + r - 1) * q_binomial(
            n + r - 1, r - 1
        )
        return lhs - rhs
    raise ValueError(f"unknown recurrence {which!r}")


# ---------------------------------------------------------------------------
# diagonal-ratio experiments
# ---------------------------------------------------------------------------


def _diag_classical(n: int, harmonics: list[Fraction]) -> Fraction:
    # H_n^{(n)} via the closed form, avoiding the O(n^2) table
    return math.comb(2 * n - 1, n - 1) * (harmonics[2 * n - 1] - harmonics[n - 1])


def _harmonics_upto(m: int) -> list[Fraction]:
    out = [Fraction(0)]
    for j in range(1, m + 1):
        out.append(out[-1] + Fraction(1, j))
    return out


def diag_ratio_classical(n: int) -> BigRat:
    """H_{n+1}^{(n+1)} / H_n^{(n)}, exactly."""
    if n < 1:
        raise ValueError("diag_ratio_classical wants n >= 1")
    hs = _harmonics_upto(2 * n + 1)
    return _diag_classical(n + 1, hs) / _diag_classical(n, hs)


def diag_ratio_classical_table(n_max: int) -> list[tuple[int, Fraction]]:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    hs = _harmonics_upto(2 * n_max + 1)
    diag = [_diag_classical(n, hs) for n in range(1, n_max + 2)]
    return [(n, diag[n] / diag[n - 1]) for n in range(1, n_max + 1)]


def _q_harmonics_at(m: int, q0: Fraction) -> list[Fraction]:
    out = [Fraction(0)]
    for j in range(1, m + 1):
        out.append(out[-1] + q0 ** (j - 1) / q_int_at(j, q0))
    return out


def _diag_q(n: int, q0: Fraction, harmonics: list[Fraction]) -> Fraction:
    return q_binomial_at(2 * n - 1, n - 1, q0) * (harmonics[2 * n - 1] - harmonics[n - 1])


def diag_ratio_q(n: int, q0) -> BigRat:
    """H_{n+1}^{(n+1)}(q0) / H_n^{(n)}(q0) for a rational 0 < |q0| < 1."""
    q0 = Fraction(q0)
    if not abs(q0) < 1:
        raise ValueError("diag_ratio_q wants |q0| < 1")
    if q0 == 0:
        raise ValueError("diag_ratio_q wants a nonzero q0")
    if n < 1:
        raise ValueError("diag_ratio_q wants n >= 1")
    hs = _q_harmonics_at(2 * n + 1, q0)
    return _diag_q(n + 1, q0, hs) / _diag_q(n, q0, hs)


def diag_ratio_q_table(n_max: int, q0) -> list[tuple[int, Fraction]]:
    q0 = Fraction(q0)
    if not abs(q0) < 1:
        raise ValueError("q-diagonal ratios want |q0| < 1")
    if q0 == 0:
        raise ValueError("q-diagonal ratios want a nonzero q0")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    hs = _q_harmonics_at(2 * n_max + 1, q0)
    diag = [_diag_q(n, q0, hs) for n in range(1, n_max + 2)]
    return [(n, diag[n] / diag[n - 1]) for n in range(1, n_max + 1)]
