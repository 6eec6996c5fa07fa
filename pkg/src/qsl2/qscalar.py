"""Exact arithmetic in the rational function field Q(q), plus q-combinatorics.

Elements are stored as a reduced fraction of Laurent polynomials with integer
coefficients.  The canonical form is chosen so that structural equality is
mathematical equality:

* the denominator is an honest polynomial with nonzero constant term
  (powers of ``q`` are units and live in the numerator),
* numerator and denominator are coprime in Z[q] (content included),
* the denominator's constant term is positive.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Union

__all__ = [
    "QPoly",
    "QScalar",
    "PoleError",
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_binomial_recursive",
    "eval_at_one",
    "as_scalar",
    "ZERO",
    "ONE",
    "Q",
]


class PoleError(ArithmeticError):
    """Raised when a scalar is evaluated at a pole."""


# ---------------------------------------------------------------------------
# dense helpers: polynomials in Z[q] as coefficient lists, lowest degree first
# ---------------------------------------------------------------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _content(a: Iterable[int]) -> int:
    c = 0
    for x in a:
        c = gcd(c, x)
        if c == 1:
            break
    return c


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b (both nonzero, trimmed)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [lb * x for x in a]
        for i, y in enumerate(b):
            a[i + shift] -= la * y
        _trim(a)
    return a


def _primitive(a: list[int]) -> list[int]:
    c = _content(a)
    if a[-1] < 0:
        c = -c
    return [x // c for x in a]


def _poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """gcd in Z[q] of two nonzero polynomials, positive leading coefficient."""
    c = gcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _prem(a, b)
        if not r:
            break
        a, b = b, _primitive(r)
    if len(b) == 1:
        return [c]
    return [c * x for x in b]


def _divexact(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient a / b in Z[q]; raises if b does not divide a."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    out = [0] * max(len(a) - db, 1)
    while a:
        if len(a) - 1 < db:
            raise ArithmeticError("inexact polynomial division")
        qc, rem = divmod(a[-1], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        shift = len(a) - 1 - db
        out[shift] = qc
        for i, y in enumerate(b):
            a[i + shift] -= qc * y
        _trim(a)
    return _trim(out)


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class QPoly:
    """A Laurent polynomial in ``q`` with integer coefficients.  Immutable."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coefficients: Mapping[int, int] | None = None):
        c = {}
        if coefficients:
            for e, v in coefficients.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c
        self._hash = None

    @classmethod
    def _wrap(cls, c: dict[int, int]) -> "QPoly":
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "QPoly":
        return cls._wrap({exponent: coefficient} if coefficient else {})

    @classmethod
    def _from_dense(cls, dense: list[int], shift: int = 0) -> "QPoly":
        return cls._wrap({i + shift: v for i, v in enumerate(dense) if v})

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def _dense(self) -> tuple[list[int], int]:
        lo, hi = self.min_exp(), self.max_exp()
        d = [0] * (hi - lo + 1)
        for e, v in self._c.items():
            d[e - lo] = v
        return d, lo

    def shift(self, k: int) -> "QPoly":
        return QPoly._wrap({e + k: v for e, v in self._c.items()})

    def __add__(self, other: "QPoly") -> "QPoly":
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return QPoly._wrap(c)

    def __neg__(self) -> "QPoly":
        return QPoly._wrap({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other: "QPoly") -> "QPoly":
        if len(other._c) == 1:
            (e2, v2), = other._c.items()
            return QPoly._wrap({e + e2: v * v2 for e, v in self._c.items()})
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                k = e1 + e2
                c[k] = c.get(k, 0) + v1 * v2
        return QPoly._wrap({e: v for e, v in c.items() if v})

    def scale(self, k: int) -> "QPoly":
        if not k:
            return QPoly._wrap({})
        return QPoly._wrap({e: v * k for e, v in self._c.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QPoly) and self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def evaluate(self, x: Fraction | int) -> Fraction:
        x = Fraction(x)
        return sum((Fraction(v) * x**e for e, v in self._c.items()), Fraction(0))

    def bar(self) -> "QPoly":
        """The image under q -> q^-1."""
        return QPoly._wrap({-e: v for e, v in self._c.items()})

    def render(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if e == 0:
                body = str(a)
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                body = qpart if a == 1 else f"{a}*{qpart}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"QPoly({self.render()})"


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

_ONE_POLY = QPoly._wrap({0: 1})


class QScalar:
    """An element of Q(q) in canonical reduced form.  Immutable and hashable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: QPoly | int = 0, den: QPoly | int = 1):
        if isinstance(num, int):
            num = QPoly({0: num})
        if isinstance(den, int):
            den = QPoly({0: den})
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        n, d = _normalize(num, den)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, num: QPoly, den: QPoly) -> "QScalar":
        s = object.__new__(cls)
        s.num = num
        s.den = den
        s._hash = None
        return s

    @classmethod
    def from_int(cls, n: int) -> "QScalar":
        return cls._raw(QPoly._wrap({0: n} if n else {}), _ONE_POLY)

    @classmethod
    def q_power(cls, k: int, coefficient: int = 1) -> "QScalar":
        return cls._raw(QPoly._wrap({k: coefficient} if coefficient else {}), _ONE_POLY)

    @classmethod
    def from_laurent(cls, poly: QPoly) -> "QScalar":
        return cls._raw(poly, _ONE_POLY)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den == _ONE_POLY and self.num == _ONE_POLY

    def is_laurent(self) -> bool:
        return self.den == _ONE_POLY

    def q_exponent(self) -> int | None:
        """k if this scalar is exactly q^k, else None."""
        if self.den != _ONE_POLY or len(self.num._c) != 1:
            return None
        (k, c), = self.num._c.items()
        return k if c == 1 else None

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other) -> "QScalar":
        other = as_scalar(other)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            if self.den == _ONE_POLY:
                return QScalar._raw(self.num + other.num, _ONE_POLY)
            return _make(self.num + other.num, self.den)
        return _make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "QScalar":
        return QScalar._raw(-self.num, self.den)

    def __sub__(self, other) -> "QScalar":
        return self + (-as_scalar(other))

    def __rsub__(self, other) -> "QScalar":
        return as_scalar(other) + (-self)

    def __mul__(self, other) -> "QScalar":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            if self.den == _ONE_POLY:
                return QScalar._raw(self.num.scale(other), _ONE_POLY)
            other = QScalar.from_int(other)
        elif not isinstance(other, QScalar):
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den == _ONE_POLY and other.den == _ONE_POLY:
            return QScalar._raw(self.num * other.num, _ONE_POLY)
        return _make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "QScalar":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return _make(self.den, self.num)

    def __truediv__(self, other) -> "QScalar":
        return self * as_scalar(other).inverse()

    def __rtruediv__(self, other) -> "QScalar":
        return as_scalar(other) * self.inverse()

    def __pow__(self, k: int) -> "QScalar":
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison -------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QScalar.from_int(other)
        if not isinstance(other, QScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- misc -------------------------------------------------------------
    def bar(self) -> "QScalar":
        """Image under the involution q -> q^-1."""
        return _make(self.num.bar(), self.den.bar())

    def evaluate(self, x: Fraction | int) -> Fraction:
        d = self.den.evaluate(x)
        if d == 0:
            raise PoleError(f"{self.render()} has a pole at q = {x}")
        return self.num.evaluate(x) / d

    def render(self) -> str:
        n = self.num.render()
        if self.den == _ONE_POLY:
            return n
        d = self.den.render()
        if len(self.num._c) > 1:
            n = f"({n})"
        if len(self.den._c) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"QScalar({self.render()})"


def _normalize(num: QPoly, den: QPoly) -> tuple[QPoly, QPoly]:
    if num.is_zero():
        return num, _ONE_POLY
    ddense, dlo = den._dense()
    ndense, nlo = num._dense()
    # q^k is a unit: absorb all powers of q into the numerator
    shift = nlo - dlo
    if len(ddense) > 1:
        g = _poly_gcd(ndense, ddense)
        if len(g) > 1 or g[0] != 1:
            ndense = _divexact(ndense, g)
            ddense = _divexact(ddense, g)
    else:
        c = gcd(_content(ndense), ddense[0])
        if c != 1:
            ndense = [x // c for x in ndense]
            ddense = [ddense[0] // c]
    if ddense[0] < 0:
        ndense = [-x for x in ndense]
        ddense = [-x for x in ddense]
    if ddense == [1]:
        return QPoly._from_dense(ndense, shift), _ONE_POLY
    return QPoly._from_dense(ndense, shift), QPoly._from_dense(ddense)


def _make(num: QPoly, den: QPoly) -> QScalar:
    n, d = _normalize(num, den)
    return QScalar._raw(n, d)


def as_scalar(x: Union[QScalar, int, Fraction]) -> QScalar:
    if isinstance(x, QScalar):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return QScalar.from_int(x)
    if isinstance(x, Fraction):
        return QScalar(x.numerator, x.denominator)
    raise TypeError(f"cannot interpret {x!r} as a scalar in Q(q)")


ZERO = QScalar.from_int(0)
ONE = QScalar.from_int(1)
Q = QScalar.q_power(1)


# ---------------------------------------------------------------------------
# q-combinatorics
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def q_int(n: int, d: int = 1) -> QScalar:
    """The balanced q-integer [n] = (v^n - v^-n)/(v - v^-1) with v = q^d."""
    if d < 1:
        raise ValueError("q-integer base exponent must be positive")
    if n < 0:
        return -q_int(-n, d)
    # closed Laurent form: v^(n-1) + v^(n-3) + ... + v^(1-n)
    return QScalar.from_laurent(QPoly._wrap({d * (n - 1 - 2 * i): 1 for i in range(n)}))


@lru_cache(maxsize=None)
def q_factorial(n: int, d: int = 1) -> QScalar:
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    out = ONE
    for k in range(1, n + 1):
        out = out * q_int(k, d)
    return out


@lru_cache(maxsize=None)
def q_binomial(m: int, n: int, d: int = 1) -> QScalar:
    """Gaussian binomial in the balanced convention; a Laurent polynomial."""
    if m < 0 or n < 0:
        raise ValueError("q_binomial needs nonnegative arguments")
    if n > m:
        raise ValueError(f"q_binomial needs n <= m, got m={m}, n={n}")
    out = q_factorial(m, d) / (q_factorial(n, d) * q_factorial(m - n, d))
    assert out.is_laurent() and all(v > 0 for v in out.num._c.values()), out
    return out


def q_binomial_recursive(m: int, n: int, d: int = 1) -> QScalar:
    """Independent route via the q-Pascal rule
    [m, n] = v^n [m-1, n] + v^(n-m) [m-1, n-1]."""
    if n < 0 or n > m:
        return ZERO
    if n == 0 or n == m:
        return ONE
    v = QScalar.q_power(d)
    return v**n * q_binomial_recursive(m - 1, n, d) + v ** (n - m) * q_binomial_recursive(m - 1, n - 1, d)


def eval_at_one(s: QScalar | int) -> Fraction:
    """Exact value at q = 1; PoleError if the reduced denominator vanishes there."""
    s = as_scalar(s)
    return s.evaluate(1)
