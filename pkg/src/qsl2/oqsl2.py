"""O_q(SL2): canonical normal form and Hopf structure.

Canonical monomials are X12^b X21^c X11^a and X12^b X21^c X22^d (d > 0), so
X11 and X22 never occur together.  Reordering uses

    X11 X12 = q X12 X11     X11 X21 = q X21 X11
    X22 X12 = q^-1 X12 X22  X22 X21 = q^-1 X21 X22     X21 X12 = X12 X21
    X11 X22 = 1 + q X12 X21
    X22 X11 = 1 + q^-1 X12 X21
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple

from .linear import Element, Tensor, _accumulate
from .parsing import Grammar, parse_with
from .qscalar import ONE, ZERO, Q, QScalar
from .report import Report
from .uqsl2 import HopfStructure, _hopf_checks

__all__ = [
    "OMono",
    "OElement",
    "X11",
    "X12",
    "X21",
    "X22",
    "o_coproduct",
    "o_counit",
    "o_antipode",
    "o_check_hopf_axioms",
    "defining_relations",
    "canonical_monomials",
    "parse_o",
    "GENERATORS",
]


class OMono(NamedTuple):
    """X12^x12 X21^x21 X11^x11 X22^x22 with x11 * x22 == 0."""

    x11: int
    x12: int
    x21: int
    x22: int

    @property
    def degree(self) -> int:
        return self.x11 + self.x12 + self.x21 + self.x22

    def word(self) -> tuple[str, ...]:
        """Generator names in product order."""
        return ("X12",) * self.x12 + ("X21",) * self.x21 + ("X11",) * self.x11 + ("X22",) * self.x22


_ID = OMono(0, 0, 0, 0)


@lru_cache(maxsize=None)
def _x11_x22(a: int, d: int) -> tuple[tuple[int, QScalar], ...]:
    """X11^a X22^d = sum_k coeff (X12 X21)^k X11^(a-m) X22^(d-m), m = min(a,d).

    Returned as (k, coeff) pairs."""
    if a == 0 or d == 0:
        return ((0, ONE),)
    acc: dict = {}
    for k, c in _x11_x22(a - 1, d - 1):
        _accumulate(acc, k, c)
        _accumulate(acc, k + 1, c * QScalar.q_power(2 * a - 1))
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def _x22_x11(d: int, a: int) -> tuple[tuple[int, QScalar], ...]:
    if a == 0 or d == 0:
        return ((0, ONE),)
    acc: dict = {}
    for k, c in _x22_x11(d - 1, a - 1):
        _accumulate(acc, k, c)
        _accumulate(acc, k + 1, c * QScalar.q_power(1 - 2 * d))
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=65536)
def _mul_mono_cached(m1: OMono, m2: OMono) -> tuple[tuple[OMono, QScalar], ...]:
    # move X12^b2 X21^c2 left past X11^a1 (factor q each) or X22^d1 (q^-1 each)
    k = (m1.x11 - m1.x22) * (m2.x12 + m2.x21)
    base12 = m1.x12 + m2.x12
    base21 = m1.x21 + m2.x21
    pref = QScalar.q_power(k)
    a1, d1, a2, d2 = m1.x11, m1.x22, m2.x11, m2.x22
    if d1 == 0 and d2 == 0:
        return ((OMono(a1 + a2, base12, base21, 0), pref),)
    if a1 == 0 and a2 == 0:
        return ((OMono(0, base12, base21, d1 + d2), pref),)
    if a1 and d2:  # X11^a1 X22^d2, and d1 == 0 == a2
        terms, a, d = _x11_x22(a1, d2), a1, d2
    else:  # X22^d1 X11^a2
        terms, a, d = _x22_x11(d1, a2), a2, d1
    m = min(a, d)
    out = []
    for kk, c in terms:
        out.append((OMono(a - m, base12 + kk, base21 + kk, d - m), pref * c))
    return tuple(out)


def _mul_mono(m1: OMono, m2: OMono) -> dict:
    if m1 == _ID:
        return {m2: ONE}
    if m2 == _ID:
        return {m1: ONE}
    return dict(_mul_mono_cached(m1, m2))


class OElement(Element):
    """An element of O_q(SL2) in canonical normal form."""

    __slots__ = ()
    IDENTITY = _ID

    @classmethod
    def _mul_basis(cls, m1, m2):
        return _mul_mono(m1, m2)

    @classmethod
    def _sort_key(cls, m: OMono):
        return (m.degree, m.x12, m.x21, m.x11, m.x22)

    @classmethod
    def _render_basis(cls, m: OMono) -> str:
        parts = []
        for name, e in (("X12", m.x12), ("X21", m.x21), ("X11", m.x11), ("X22", m.x22)):
            if e:
                parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    @classmethod
    def monomial(cls, x11: int = 0, x12: int = 0, x21: int = 0, x22: int = 0, coeff=ONE) -> "OElement":
        """The product X12^x12 X21^x21 X11^x11 X22^x22, normalized."""
        if min(x11, x12, x21, x22) < 0:
            raise ValueError("exponents must be nonnegative")
        if x11 and x22:
            return cls.basis(OMono(x11, x12, x21, 0), coeff) * cls.basis(OMono(0, 0, 0, x22))
        return cls.basis(OMono(x11, x12, x21, x22), coeff)

    def degree(self) -> int:
        return max((m.degree for m in self._terms), default=0)

    def inverse(self):
        if len(self._terms) == 1 and _ID in self._terms:
            return OElement.scalar(self._terms[_ID].inverse())
        return None


X11 = OElement.basis(OMono(1, 0, 0, 0))
X12 = OElement.basis(OMono(0, 1, 0, 0))
X21 = OElement.basis(OMono(0, 0, 1, 0))
X22 = OElement.basis(OMono(0, 0, 0, 1))
GENERATORS = {"X11": X11, "X12": X12, "X21": X21, "X22": X22}


def canonical_monomials(max_degree: int) -> list[OMono]:
    """All canonical monomials of total degree <= max_degree, in sort order."""
    out = []
    for n in range(max_degree + 1):
        for b in range(n + 1):
            for c in range(n - b + 1):
                r = n - b - c
                out.append(OMono(r, b, c, 0))
                if r > 0:
                    out.append(OMono(0, b, c, r))
    return sorted(out, key=OElement._sort_key)


def defining_relations() -> dict[str, OElement]:
    """The seven defining relations as elements that must vanish (computed via
    the normal-form product, so each should be zero)."""
    q, qi = Q, Q.inverse()
    return {
        "X11 X12 = q X12 X11": X11 * X12 - (X12 * X11).scale(q),
        "X11 X21 = q X21 X11": X11 * X21 - (X21 * X11).scale(q),
        "X12 X22 = q X22 X12": X12 * X22 - (X22 * X12).scale(q),
        "X21 X22 = q X22 X21": X21 * X22 - (X22 * X21).scale(q),
        "X12 X21 = X21 X12": X12 * X21 - X21 * X12,
        "X11 X22 - X22 X11 = (q - q^-1) X12 X21": X11 * X22 - X22 * X11 - (X12 * X21).scale(q - qi),
        "X11 X22 - q X12 X21 = 1": X11 * X22 - (X12 * X21).scale(q) - OElement.one(),
    }


# ---------------------------------------------------------------------------
# Hopf structure
# ---------------------------------------------------------------------------

_MAT = {(1, 1): X11, (1, 2): X12, (2, 1): X21, (2, 2): X22}


def _delta_gen(i: int, j: int) -> Tensor:
    return Tensor.pure(_MAT[i, 1], _MAT[1, j]) + Tensor.pure(_MAT[i, 2], _MAT[2, j])


_DELTA = {ij: _delta_gen(*ij) for ij in _MAT}
_T_ONE = Tensor._wrap(OElement, 2, {(_ID, _ID): ONE})


def _tpow(t: Tensor, k: int) -> Tensor:
    out = _T_ONE
    for _ in range(k):
        out = out * t
    return out


@lru_cache(maxsize=None)
def _coproduct_mono(m: OMono) -> Tensor:
    return (_tpow(_DELTA[1, 2], m.x12) * _tpow(_DELTA[2, 1], m.x21)
            * _tpow(_DELTA[1, 1], m.x11) * _tpow(_DELTA[2, 2], m.x22))


def o_coproduct(x: OElement) -> Tensor:
    acc: dict = {}
    for m, c in x._terms.items():
        for k, c2 in _coproduct_mono(m)._terms.items():
            _accumulate(acc, k, c * c2)
    return Tensor._wrap(OElement, 2, acc)


def _counit_mono(m: OMono) -> QScalar:
    return ONE if m.x12 == 0 and m.x21 == 0 else ZERO


def o_counit(x: OElement) -> QScalar:
    out = ZERO
    for m, c in x._terms.items():
        out = out + c * _counit_mono(m)
    return out


_S = {"X11": X22, "X22": X11, "X12": X12.scale(-Q.inverse()), "X21": X21.scale(-Q)}


@lru_cache(maxsize=None)
def _antipode_mono(m: OMono) -> OElement:
    out = OElement.one()
    for g in reversed(m.word()):
        out = out * _S[g]
    return out


def o_antipode(x: OElement) -> OElement:
    return x.map_basis(_antipode_mono)


O_HOPF = HopfStructure(OElement, _coproduct_mono, _counit_mono, _antipode_mono, "O_q(SL2)")


def o_check_hopf_axioms(samples: Iterable[OElement], pairs=None) -> Report:
    return _hopf_checks(O_HOPF, list(samples), Report("hopf axioms: O_q(SL2)"), pairs)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def _o_grammar() -> Grammar:
    atoms = {name: (lambda g=g: g) for name, g in GENERATORS.items()}
    atoms["q"] = lambda: OElement.scalar(Q)
    return Grammar(atoms=atoms, from_int=OElement.scalar, invert=lambda x: x.inverse(), name="O_q(SL2)")


def parse_o(text: str) -> OElement:
    return parse_with(text, _o_grammar())
