"""U_q(sl2): PBW normal form F^a K^b E^c, Hopf structure, Serre relations.

Multiplication rules used for normal ordering::

    K F = q^-2 F K,   E K = q^-2 K E,   E F = F E + (K - K^-1)/(q - q^-1)

``E^c F^a`` is reduced by repeated single commutations and memoized; every
product of PBW monomials then only needs q-power bookkeeping for K.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, NamedTuple, Sequence

from .linear import Element, Tensor, _accumulate
from .parsing import Grammar, parse_with
from .qscalar import ONE, ZERO, Q, QScalar, q_binomial
from .report import Report

__all__ = [
    "PBW",
    "UElement",
    "E",
    "F",
    "K",
    "K_INV",
    "L",
    "CartanMatrix",
    "FreeWord",
    "coproduct",
    "counit",
    "antipode",
    "check_hopf_axioms",
    "default_pairs",
    "uprime_relations_check",
    "serre_relations",
    "parse_u",
    "degree",
]


class PBW(NamedTuple):
    """The monomial F^a K^b E^c."""

    a: int
    b: int
    c: int


_ID = PBW(0, 0, 0)
_INV_QQ = (Q - Q.inverse()).inverse()  # 1/(q - q^-1)


@lru_cache(maxsize=None)
def _e_times_f(c: int, a: int) -> tuple[tuple[PBW, QScalar], ...]:
    """Normal form of E^c F^a."""
    if c == 0 or a == 0:
        return ((PBW(a, 0, c), ONE),)
    if c == 1 and a == 1:
        return ((PBW(1, 0, 1), ONE), (PBW(0, 1, 0), _INV_QQ), (PBW(0, -1, 0), -_INV_QQ))
    acc: dict = {}
    if c == 1:
        # E F^a = (E F^(a-1)) F
        for m, coeff in _e_times_f(1, a - 1):
            for m2, c2 in _mul_mono(m, PBW(1, 0, 0)).items():
                _accumulate(acc, m2, coeff * c2)
    else:
        # E^c F^a = E (E^(c-1) F^a)
        for m, coeff in _e_times_f(c - 1, a):
            for m2, c2 in _mul_mono(PBW(0, 0, 1), m).items():
                _accumulate(acc, m2, coeff * c2)
    return tuple(acc.items())


@lru_cache(maxsize=65536)
def _mul_mono_cached(m1: PBW, m2: PBW) -> tuple[tuple[PBW, QScalar], ...]:
    a, b, c = m1
    a2, b2, c2 = m2
    acc: dict = {}
    # F^a K^b (E^c F^a2) K^b2 E^c2 with E^c F^a2 = sum F^x K^y E^z
    for (x, y, z), coeff in _e_times_f(c, a2):
        # K^b F^x = q^(-2bx) F^x K^b ;  E^z K^b2 = q^(-2 z b2) K^b2 E^z
        k = -2 * b * x - 2 * z * b2
        _accumulate(acc, PBW(a + x, b + y + b2, z + c2), coeff * QScalar.q_power(k))
    return tuple(acc.items())


def _mul_mono(m1: PBW, m2: PBW) -> dict:
    if m1 == _ID:
        return {m2: ONE}
    if m2 == _ID:
        return {m1: ONE}
    return dict(_mul_mono_cached(m1, m2))


class UElement(Element):
    """An element of U_q(sl2) in PBW normal form."""

    __slots__ = ()
    IDENTITY = _ID

    @classmethod
    def _mul_basis(cls, m1, m2):
        return _mul_mono(m1, m2)

    @classmethod
    def _sort_key(cls, m: PBW):
        return (m.a, m.c, m.b)

    @classmethod
    def _render_basis(cls, m: PBW) -> str:
        parts = []
        if m.a:
            parts.append("F" if m.a == 1 else f"F^{m.a}")
        if m.b:
            parts.append("K" if m.b == 1 else f"K^{m.b}")
        if m.c:
            parts.append("E" if m.c == 1 else f"E^{m.c}")
        return "*".join(parts) if parts else "1"

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c: int = 0, coeff=ONE) -> "UElement":
        if a < 0 or c < 0:
            raise ValueError("F and E exponents must be nonnegative")
        return cls.basis(PBW(a, b, c), coeff)

    def inverse(self) -> "UElement | None":
        """Inverse of c*K^b; None for anything else."""
        if len(self._terms) != 1:
            return None
        (m, c), = self._terms.items()
        if m.a or m.c:
            return None
        return UElement.monomial(0, -m.b, 0, c.inverse())


E = UElement.monomial(c=1)
F = UElement.monomial(a=1)
K = UElement.monomial(b=1)
K_INV = UElement.monomial(b=-1)
L = (K - K_INV).scale(_INV_QQ)


def degree(m: PBW) -> int:
    return m.a + abs(m.b) + m.c


# ---------------------------------------------------------------------------
# Hopf structure
# ---------------------------------------------------------------------------

_DE = Tensor.pure(E, UElement.one()) + Tensor.pure(K, E)
_DF = Tensor.pure(F, K_INV) + Tensor.pure(UElement.one(), F)


def _tensor_one(arity: int = 2) -> Tensor:
    return Tensor._wrap(UElement, arity, {(_ID,) * arity: ONE})


def _tensor_pow(t: Tensor, k: int) -> Tensor:
    out = _tensor_one(t.arity)
    for _ in range(k):
        out = out * t
    return out


@lru_cache(maxsize=None)
def _coproduct_mono(m: PBW) -> Tensor:
    dk = Tensor._wrap(UElement, 2, {(PBW(0, m.b, 0), PBW(0, m.b, 0)): ONE})
    return _tensor_pow(_DF, m.a) * dk * _tensor_pow(_DE, m.c)


def coproduct(x: UElement) -> Tensor:
    """Delta, extended multiplicatively from the generators."""
    acc: dict = {}
    for m, c in x._terms.items():
        for k, c2 in _coproduct_mono(m)._terms.items():
            _accumulate(acc, k, c * c2)
    return Tensor._wrap(UElement, 2, acc)


def _counit_mono(m: PBW) -> QScalar:
    return ONE if m.a == 0 and m.c == 0 else ZERO


def counit(x: UElement) -> QScalar:
    out = ZERO
    for m, c in x._terms.items():
        if m.a == 0 and m.c == 0:
            out = out + c
    return out


_S_E = -(K_INV * E)
_S_F = -(F * K)


@lru_cache(maxsize=None)
def _antipode_mono(m: PBW) -> UElement:
    # S(F^a K^b E^c) = S(E)^c S(K)^b S(F)^a
    return (_S_E ** m.c) * UElement.monomial(b=-m.b) * (_S_F ** m.a)


def antipode(x: UElement) -> UElement:
    return x.map_basis(_antipode_mono)


# ---------------------------------------------------------------------------
# axiom checks (generic over an algebra described by its structure maps)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HopfStructure:
    """Structure maps of a Hopf algebra whose elements are ``Element``s."""

    cls: type
    coproduct_mono: Callable
    counit_mono: Callable
    antipode_mono: Callable
    name: str = ""

    def coproduct(self, x) -> Tensor:
        acc: dict = {}
        for m, c in x._terms.items():
            for k, c2 in self.coproduct_mono(m)._terms.items():
                _accumulate(acc, k, c * c2)
        return Tensor._wrap(self.cls, 2, acc)

    def counit(self, x) -> QScalar:
        out = ZERO
        for m, c in x._terms.items():
            out = out + c * self.counit_mono(m)
        return out

    def antipode(self, x):
        return x.map_basis(self.antipode_mono)


U_HOPF = HopfStructure(UElement, _coproduct_mono, _counit_mono, _antipode_mono, "U_q(sl2)")


def default_pairs(samples: Sequence, full: int = 20) -> list[tuple]:
    """All ordered pairs among the first ``full`` samples, plus each sample
    paired with its successor (cyclically) and with itself."""
    head = samples[:full]
    pairs = [(x, y) for x in head for y in head]
    n = len(samples)
    if n > full:
        pairs += [(samples[i], samples[(i + 1) % n]) for i in range(n)]
        pairs += [(x, x) for x in samples[full:]]
    return pairs


def _hopf_checks(h: HopfStructure, samples: Sequence, report: Report, pairs: Sequence | None = None) -> Report:
    cls = h.cls
    one = cls.one()

    def first_failure(name, items, pred):
        for x in items:
            if not pred(x):
                report.add(name, False, witness=_witness(x))
                return
        report.add(name, True)

    def coassoc(x):
        d = h.coproduct(x)
        return d.apply_leg(0, h.coproduct_mono) == d.apply_leg(1, h.coproduct_mono)

    def counit_left(x):
        return h.coproduct(x).apply_leg(0, h.counit_mono) == _as_1tensor(x)

    def counit_right(x):
        return h.coproduct(x).apply_leg(1, h.counit_mono) == _as_1tensor(x)

    def antipode_left(x):
        return h.coproduct(x).apply_leg(0, h.antipode_mono).contract() == one.scale(h.counit(x))

    def antipode_right(x):
        return h.coproduct(x).apply_leg(1, h.antipode_mono).contract() == one.scale(h.counit(x))

    if pairs is None:
        pairs = default_pairs(samples)
    report.note(f"{len(samples)} samples, {len(pairs)} product pairs")

    first_failure("coassociativity", samples, coassoc)
    first_failure("counit (left)", samples, counit_left)
    first_failure("counit (right)", samples, counit_right)
    first_failure("antipode mu(S⊗id)Delta = eta∘eps", samples, antipode_left)
    first_failure("antipode mu(id⊗S)Delta = eta∘eps", samples, antipode_right)
    first_failure("Delta is multiplicative", pairs,
                  lambda p: h.coproduct(p[0] * p[1]) == h.coproduct(p[0]) * h.coproduct(p[1]))
    first_failure("eps is multiplicative", pairs,
                  lambda p: h.counit(p[0] * p[1]) == h.counit(p[0]) * h.counit(p[1]))
    first_failure("S is an anti-morphism", pairs,
                  lambda p: h.antipode(p[0] * p[1]) == h.antipode(p[1]) * h.antipode(p[0]))
    return report


def _as_1tensor(x) -> Tensor:
    return Tensor._wrap(type(x), 1, {(m,): c for m, c in x._terms.items()})


def _witness(x) -> str:
    if isinstance(x, tuple):
        return " ; ".join(_witness(y) for y in x)
    return x.render()


def check_hopf_axioms(samples: Iterable[UElement], pairs: Sequence | None = None) -> Report:
    """Check the Hopf algebra axioms of U_q(sl2) exactly on ``samples``.

    Product laws are checked on ``pairs`` (default: ``default_pairs``)."""
    return _hopf_checks(U_HOPF, list(samples), Report("hopf axioms: U_q(sl2)"), pairs)


def _check_hopf_axioms_with(samples: Iterable[UElement], antipode_mono: Callable) -> Report:
    """Variant with a replaced antipode on monomials (fault injection)."""
    h = HopfStructure(UElement, _coproduct_mono, _counit_mono, antipode_mono, "U_q(sl2), modified S")
    return _hopf_checks(h, list(samples), Report("hopf axioms: U_q(sl2) (modified antipode)"))


def uprime_relations_check() -> Report:
    """The presentation with L = (K - K^-1)/(q - q^-1) as an extra generator."""
    r = Report("U'_q(sl2) relations")
    qq = Q - Q.inverse()
    r.add("(q - q^-1) L = K - K^-1", L.scale(qq) == K - K_INV)
    r.add("[E,F] = L", E * F - F * E == L)
    r.add("[L,E] = q(EK + K^-1 E)", L * E - E * L == (E * K + K_INV * E).scale(Q))
    r.add("[L,F] = -q^-1(FK + K^-1 F)", L * F - F * L == (F * K + K_INV * F).scale(-Q.inverse()))
    r.add("K K^-1 = K^-1 K = 1", K * K_INV == UElement.one() and K_INV * K == UElement.one())
    r.add("K E K^-1 = q^2 E", K * E * K_INV == E.scale(Q ** 2))
    r.add("K F K^-1 = q^-2 F", K * F * K_INV == F.scale(Q ** -2))
    return r


# ---------------------------------------------------------------------------
# quantum Serre relations for a Cartan matrix
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CartanMatrix:
    """Symmetrizable generalized Cartan matrix with symmetrizers d."""

    entries: tuple[tuple[int, ...], ...]
    d: tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if n == 0 or any(len(row) != n for row in entries):
            raise ValueError("Cartan matrix must be square and nonempty")
        for i in range(n):
            if entries[i][i] != 2:
                raise ValueError(f"diagonal entry a[{i}][{i}] must be 2")
            for j in range(n):
                if i != j and entries[i][j] > 0:
                    raise ValueError(f"off-diagonal entry a[{i}][{j}] must be <= 0")
                if i != j and (entries[i][j] == 0) != (entries[j][i] == 0):
                    raise ValueError(f"a[{i}][{j}] and a[{j}][{i}] must vanish together")
        d = tuple(int(x) for x in self.d) if self.d else _find_symmetrizers(entries)
        if len(d) != n or any(x < 1 for x in d):
            raise ValueError("symmetrizers must be positive integers, one per row")
        for i in range(n):
            for j in range(n):
                if d[i] * entries[i][j] != d[j] * entries[j][i]:
                    raise ValueError("matrix is not symmetrized by the given d")
        object.__setattr__(self, "d", d)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]


def _find_symmetrizers(a: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Smallest positive integers d with d_i a_ij = d_j a_ji (per component)."""
    from fractions import Fraction
    from math import lcm

    n = len(a)
    d: list = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack, comp = [start], [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and a[i][j] != 0:
                    val = d[i] * a[i][j] / a[j][i]
                    if d[j] is None:
                        d[j] = val
                        stack.append(j)
                        comp.append(j)
                    elif d[j] != val:
                        raise ValueError("Cartan matrix is not symmetrizable")
        m = lcm(*(x.denominator for x in (d[i] for i in comp)))
        for i in comp:
            d[i] = d[i] * m
    return tuple(int(x) for x in d)


class FreeWord(tuple):
    """A word of (generator, root index, exponent) letters, e.g. (("E",0,2),("E",1,1))."""

    def render(self) -> str:
        out = []
        for g, i, e in self:
            s = f"{g}{i + 1}"
            out.append(s if e == 1 else f"{s}^{e}")
        return "*".join(out)


def _word(*letters) -> FreeWord:
    merged: list = []
    for g, i, e in letters:
        if e == 0:
            continue
        if merged and merged[-1][0] == g and merged[-1][1] == i:
            merged[-1] = (g, i, merged[-1][2] + e)
        else:
            merged.append((g, i, e))
    return FreeWord(tuple(merged))


@dataclass(frozen=True)
class SerreRelation:
    kind: str  # "E" or "F"
    alpha: int
    beta: int
    terms: tuple[tuple[FreeWord, QScalar], ...]

    def render(self) -> str:
        pieces = []
        for w, c in self.terms:
            s = c.render()
            body = w.render()
            if c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append(f"-{body}")
            elif " " in s:
                pieces.append(f"({s})*{body}")
            else:
                pieces.append(f"{s}*{body}")
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out + " = 0"


def serre_relations(cm: CartanMatrix) -> list[SerreRelation]:
    """E- and F-type quantum Serre relations for each ordered pair alpha != beta."""
    if not isinstance(cm, CartanMatrix):
        cm = CartanMatrix(cm)
    out = []
    for kind in ("E", "F"):
        for al in range(cm.rank):
            for be in range(cm.rank):
                if al == be:
                    continue
                m = 1 - cm[al, be]
                terms = []
                for k in range(m + 1):
                    coeff = q_binomial(m, k, cm.d[al])
                    if k % 2:
                        coeff = -coeff
                    terms.append((_word((kind, al, m - k), (kind, be, 1), (kind, al, k)), coeff))
                out.append(SerreRelation(kind, al, be, tuple(terms)))
    return out


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def _u_grammar() -> Grammar:
    def inv(x: UElement):
        return x.inverse()

    return Grammar(
        atoms={"E": lambda: E, "F": lambda: F, "K": lambda: K, "L": lambda: L,
               "q": lambda: UElement.scalar(Q)},
        from_int=UElement.scalar,
        invert=inv,
        name="U_q(sl2)",
    )


def parse_u(text: str) -> UElement:
    """Parse an expression in E, F, K, K^-1, L and scalars into normal form."""
    return parse_with(text, _u_grammar())
