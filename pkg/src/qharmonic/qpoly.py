"""Exact arithmetic in Q[q] and in the rational-function field Q(q).

Scalars are arbitrary-precision rationals (`fractions.Fraction`, exported as
``BigRat``).  A polynomial is a dense tuple of coefficients in ascending
powers of q with no trailing zeros.  A rational function is kept fully
reduced (polynomial gcd 1) with a monic denominator, so structural equality
coincides with mathematical equality and values can be shared freely between
workers (everything here is immutable after construction).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

BigRat = Fraction

__all__ = [
    "BigRat",
    "PoleError",
    "QPoly",
    "QRatFn",
    "poly_gcd",
    "render_qpoly",
    "render_qratfn",
    "parse_qpoly",
    "parse_qratfn",
]


class PoleError(ArithmeticError):
    """Evaluation or limit hit a zero denominator at the requested point."""


# ---------------------------------------------------------------------------
# integer coefficient kernels
# ---------------------------------------------------------------------------

_SCHOOLBOOK_CUTOFF = 1024


def _pack(coeffs, width):
    value = 0
    for c in reversed(coeffs):
        value = (value << width) + c
    return value


def _unpack(value, width, count):
    # balanced digit extraction; valid while every true coefficient fits in
    # (-2^(width-1), 2^(width-1))
    out = []
    mask = (1 << width) - 1
    half = 1 << (width - 1)
    for _ in range(count):
        digit = value & mask
        if digit >= half:
            digit -= 1 << width
        out.append(digit)
        value = (value - digit) >> width
    return out


def _int_convolve(a, b):
    """Product of two integer coefficient lists (ascending powers)."""
    if len(a) > len(b):
        a, b = b, a
    if len(a) * len(b) <= _SCHOOLBOOK_CUTOFF:
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return out
    # Kronecker substitution: one big-integer product does the whole job
    bound = max(map(abs, a)) * max(map(abs, b)) * len(a)
    width = bound.bit_length() + 2
    return _unpack(_pack(a, width) * _pack(b, width), width, len(a) + len(b) - 1)


def _content(ints):
    g = 0
    for c in ints:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _int_prem(a, b):
    """A pseudo-remainder of a by b over the integers (b nonzero)."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db:
        lead = r[-1]
        if lead == 0:
            r.pop()
            continue
        k = len(r) - 1 - db
        r = [lb * x for x in r]
        for i in range(db + 1):
            r[i + k] -= lead * b[i]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


def _coerce_scalar(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return None


class QPoly:
    """Dense univariate polynomial in q over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c) -> "QPoly":
        return cls((c,))

    @classmethod
    def q_power(cls, e: int) -> "QPoly":
        """The monomial q**e (e >= 0)."""
        if e < 0:
            raise ValueError("q_power needs a nonnegative exponent")
        return cls((0,) * e + (1,))

    # -- basic queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        c = _coerce_scalar(other)
        if c is not None:
            return self == QPoly.const(c)
        if isinstance(other, QRatFn):
            return QRatFn.from_poly(self) == other
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self):
        return QPoly(tuple(-c for c in self.coeffs))

    def _coerce(self, other):
        if isinstance(other, QPoly):
            return other
        c = _coerce_scalar(other)
        return None if c is None else QPoly.const(c)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return _P_ZERO
        # clear denominators once and convolve integer lists
        da = math.lcm(*(c.denominator for c in self.coeffs))
        db = math.lcm(*(c.denominator for c in o.coeffs))
        a = [int(c * da) for c in self.coeffs]
        b = [int(c * db) for c in o.coeffs]
        den = da * db
        return QPoly(tuple(Fraction(c, den) for c in _int_convolve(a, b)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("QPoly power wants a nonnegative integer")
        result = _P_ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = o.degree
        lead = o.coeffs[-1]
        quot = [Fraction(0)] * max(0, len(rem) - dd)
        while len(rem) - 1 >= dd:
            c = rem[-1]
            if c == 0:
                rem.pop()
                continue
            k = len(rem) - 1 - dd
            f = c / lead
            quot[k] = f
            for i in range(dd + 1):
                rem[i + k] -= f * o.coeffs[i]
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return QPoly(quot), QPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "QPoly":
        """Quotient when the division is known exact; raises otherwise."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def __truediv__(self, other):
        if isinstance(other, QRatFn):
            return QRatFn.from_poly(self) / other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QRatFn(self, o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QRatFn(o, self)

    # -- evaluation / normal forms -------------------------------------------

    def eval(self, x) -> Fraction:
        """Horner evaluation at a rational point."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = eval

    def monic(self) -> "QPoly":
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return QPoly(tuple(c / lead for c in self.coeffs))

    def primitive_ints(self):
        """Integer coefficient list of the primitive part (content removed)."""
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = _content(ints)
        return ints if g == 1 else [c // g for c in ints]

    def __str__(self):
        return render_qpoly(self)

    def __repr__(self):
        return f"QPoly({render_qpoly(self)!r})"


_P_ZERO = QPoly()
_P_ONE = QPoly((1,))


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd by a content-extracted Euclidean remainder sequence.

    Coefficients stay integral throughout: both inputs are reduced to their
    primitive integer parts and the pseudo-remainder is divided by its
    content at every step.
    """
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    u = a.primitive_ints()
    v = b.primitive_ints()
    if len(u) < len(v):
        u, v = v, u
    while True:
        if len(v) == 1:
            return _P_ONE
        r = _int_prem(u, v)
        if not r:
            return QPoly(v).monic()
        g = _content(r)
        if g != 1:
            r = [c // g for c in r]
        u, v = v, r


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class QRatFn:
    """Reduced rational function num/den in Q(q), denominator monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_P_ONE):
        if not isinstance(num, QPoly):
            num = QPoly.const(num) if _coerce_scalar(num) is not None else num
        if not isinstance(den, QPoly):
            den = QPoly.const(den) if _coerce_scalar(den) is not None else den
        if not isinstance(num, QPoly) or not isinstance(den, QPoly):
            raise TypeError("QRatFn wants polynomial or rational parts")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            num, den = _P_ZERO, _P_ONE
        elif den.degree == 0:
            num, den = num * (1 / den.coeffs[0]), _P_ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.coeffs[-1]
            if lead != 1:
                num = num * (1 / lead)
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def _make(cls, num: QPoly, den: QPoly) -> "QRatFn":
        """Trusted constructor: parts already coprime with monic den."""
        self = object.__new__(cls)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        return self

    @classmethod
    def from_poly(cls, p: QPoly) -> "QRatFn":
        return cls._make(p, _P_ONE)

    @classmethod
    def const(cls, c) -> "QRatFn":
        return cls._make(QPoly.const(c), _P_ONE)

    # -- queries ---------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self):
        return not self.num.is_zero

    def __eq__(self, other):
        o = _as_ratfn(other)
        if o is None:
            return NotImplemented
        # canonical form makes structural equality mathematical equality
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- arithmetic (gcd shortcuts as in CPython's Fraction) -------------------

    def __add__(self, other):
        o = _as_ratfn(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, o.num, o.den
        g = poly_gcd(b, d) if not (b.degree == 0 or d.degree == 0) else _P_ONE
        if g.degree == 0:
            return QRatFn._make_monic(a * d + c * b, b * d)
        s = b.exact_div(g)
        t = d.exact_div(g)
        num = a * t + c * s
        if num.is_zero:
            return _R_ZERO
        g2 = poly_gcd(num, g)
        if g2.degree == 0:
            return QRatFn._make_monic(num, s * d)
        return QRatFn._make_monic(num.exact_div(g2), s * d.exact_div(g2))

    __radd__ = __add__

    def __neg__(self):
        return QRatFn._make(-self.num, self.den)

    def __sub__(self, other):
        o = _as_ratfn(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_ratfn(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _as_ratfn(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, o.num, o.den
        if a.is_zero or c.is_zero:
            return _R_ZERO
        if not (a.degree <= 0 or d.degree <= 0):
            g1 = poly_gcd(a, d)
            if g1.degree > 0:
                a = a.exact_div(g1)
                d = d.exact_div(g1)
        if not (c.degree <= 0 or b.degree <= 0):
            g2 = poly_gcd(c, b)
            if g2.degree > 0:
                c = c.exact_div(g2)
                b = b.exact_div(g2)
        return QRatFn._make_monic(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_ratfn(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return self * QRatFn._make_monic(o.den, o.num)

    def __rtruediv__(self, other):
        o = _as_ratfn(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise ValueError("QRatFn power wants an integer")
        if e < 0:
            if self.num.is_zero:
                raise ZeroDivisionError("zero to a negative power")
            return QRatFn._make_monic(self.den ** -e, self.num ** -e)
        return QRatFn._make(self.num ** e, self.den ** e)

    @classmethod
    def _make_monic(cls, num: QPoly, den: QPoly) -> "QRatFn":
        """Parts known coprime; only monic normalization remains."""
        if num.is_zero:
            return _R_ZERO
        if den.degree == 0:
            c = den.coeffs[0]
            return cls._make(num if c == 1 else num * (1 / c), _P_ONE)
        lead = den.coeffs[-1]
        if lead != 1:
            num = num * (1 / lead)
            den = den.monic()
        return cls._make(num, den)

    # -- evaluation -------------------------------------------------------------

    def eval(self, q0) -> Fraction:
        """Exact value at a rational point; PoleError on a zero denominator."""
        q0 = Fraction(q0)
        dv = self.den.eval(q0)
        if dv == 0:
            raise PoleError(f"pole at q = {q0}")
        return self.num.eval(q0) / dv

    __call__ = eval

    def limit_q1(self) -> Fraction:
        """Finite limit as q -> 1.

        The reduced form already carries no common (q - 1) factor, so the
        limit exists exactly when the denominator does not vanish at 1.
        """
        dv = self.den.eval(1)
        if dv == 0:
            raise PoleError("pole at q = 1; the limit does not exist finitely")
        return self.num.eval(1) / dv

    def __str__(self):
        return render_qratfn(self)

    def __repr__(self):
        return f"QRatFn({render_qratfn(self)!r})"


_R_ZERO = QRatFn._make(_P_ZERO, _P_ONE)


def _as_ratfn(x):
    if isinstance(x, QRatFn):
        return x
    if isinstance(x, QPoly):
        return QRatFn.from_poly(x)
    c = _coerce_scalar(x)
    if c is not None:
        return QRatFn.const(c)
    return None


# ---------------------------------------------------------------------------
# canonical rendering and its parser
# ---------------------------------------------------------------------------


def render_qpoly(p: QPoly) -> str:
    """Canonical text form: ascending powers, explicit rational coefficients.

    Examples: "0", "3/2", "1 + q + 2*q^2", "-1 + 5/3*q - q^4".
    """
    if p.is_zero:
        return "0"
    parts = []
    for e, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            base = "q" if e == 1 else f"q^{e}"
            body = base if mag == 1 else f"{mag}*{base}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def render_qratfn(f: QRatFn) -> str:
    """Canonical "(num)/(den)" form; a polynomial renders bare."""
    if f.den == _P_ONE:
        return render_qpoly(f.num)
    return f"({render_qpoly(f.num)})/({render_qpoly(f.den)})"


_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(q)|(\^)|(\*)|(\+)|(-)|(\()|(\))|(/))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"cannot parse {text[pos:]!r}")
        pos = m.end()
        for kind, value in enumerate(m.groups()):
            if value is not None:
                tokens.append(("num" if kind == 0 else value, value))
                break
    return tokens


class _Parser:
    """Recursive-descent parser for the canonical rendering.

    Also accepts the compact spelling without '*' (e.g. "2q^3") and a bare
    polynomial where a rational function is expected.
    """

    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, kind=None):
        if self.pos >= len(self.tokens):
            raise ValueError("unexpected end of input")
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ValueError(f"expected {kind!r}, found {tok[1]!r}")
        self.pos += 1
        return tok

    def done(self):
        return self.pos >= len(self.tokens)

    def parse_poly_expr(self) -> QPoly:
        if self.peek() == "(":
            self.take("(")
            p = self.parse_poly()
            self.take(")")
            return p
        return self.parse_poly()

    def parse_poly(self) -> QPoly:
        negate = False
        if self.peek() == "-":
            self.take()
            negate = True
        acc = self.parse_term()
        if negate:
            acc = -acc
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            term = self.parse_term()
            acc = acc + term if op == "+" else acc - term
        return acc

    def parse_term(self) -> QPoly:
        if self.peek() == "num":
            c = Fraction(self.take()[1])
            if self.peek() == "*":
                self.take()
                return self.parse_qpow() * c
            if self.peek() == "q":
                return self.parse_qpow() * c
            return QPoly.const(c)
        return self.parse_qpow()

    def parse_qpow(self) -> QPoly:
        self.take("q")
        if self.peek() == "^":
            self.take()
            text = self.take("num")[1]
            if "/" in text:
                raise ValueError("exponent must be an integer")
            return QPoly.q_power(int(text))
        return QPoly.q_power(1)


def parse_qpoly(text: str) -> QPoly:
    parser = _Parser(text)
    p = parser.parse_poly_expr()
    if not parser.done():
        raise ValueError(f"trailing input in {text!r}")
    return p


def parse_qratfn(text: str) -> QRatFn:
    parser = _Parser(text)
    num = parser.parse_poly_expr()
    if parser.peek() == "/":
        parser.take()
        den = parser.parse_poly_expr()
        if not parser.done():
            raise ValueError(f"trailing input in {text!r}")
        return QRatFn(num, den)
    if not parser.done():
        raise ValueError(f"trailing input in {text!r}")
    return QRatFn.from_poly(num)
