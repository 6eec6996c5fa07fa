"""Hopf pairing between U_q(sl2) and O_q(SL2), actions, coideals, invariants.

A canonical O-monomial X_{i1 j1} ... X_{id jd} is the matrix coefficient
u -> f_{i1..id}(u v_{j1..jd}) of V(1)^(x)d, so

    (u, X_{i1 j1} ... X_{id jd}) = [u acting on V(1)^(x)d]_{(i1..id), (j1..jd)}

No recursion through the pairing axioms is used; they are checked
separately (``pairing_axioms_check``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .linalg import Echelon, nullspace
from .linear import _accumulate
from .oqsl2 import GENERATORS as O_GENERATORS
from .oqsl2 import OElement, OMono, canonical_monomials, o_antipode, o_coproduct, o_counit
from .qscalar import ONE, ZERO, Q, QScalar, as_scalar
from .repmod import v1_power
from .report import Report
from .uqsl2 import E, F, K, K_INV, PBW, UElement, antipode, coproduct, counit

__all__ = [
    "pair",
    "PairingTable",
    "pairing_table",
    "right_action",
    "left_action",
    "pairing_axioms_check",
    "pairing_rank",
    "verify_right_coideal",
    "invariants",
    "takeuchi_quotient_ideal",
    "CoidealPresentation",
    "vocke_catalog",
    "constrained_pair",
    "VOCKE_CONSTRAINT",
]

_INDEX = {"X11": (0, 0), "X12": (0, 1), "X21": (1, 0), "X22": (1, 1)}


def _coords(m: OMono) -> tuple[int, int]:
    row = col = 0
    for g in m.word():
        i, j = _INDEX[g]
        row = 2 * row + i
        col = 2 * col + j
    return row, col


@lru_cache(maxsize=None)
def _pair_mono(u: PBW, a: OMono) -> QScalar:
    row, col = _coords(a)
    return v1_power(a.degree).monomial_matrix(u)[row, col]


def pair(u: UElement, a: OElement) -> QScalar:
    out = ZERO
    for m, c in u.terms.items():
        for n, d in a.terms.items():
            v = _pair_mono(m, n)
            if not v.is_zero():
                out = out + c * d * v
    return out


U_GENERATORS = {"E": E, "F": F, "K": K, "K^-1": K_INV}


@dataclass(frozen=True)
class PairingTable:
    """(generator of U) x (generator of O) -> value."""

    values: dict

    def __getitem__(self, key: tuple[str, str]) -> QScalar:
        return self.values[key]

    def render(self) -> str:
        cols = list(O_GENERATORS)
        w = 8
        lines = [" " * 6 + "".join(c.ljust(w) for c in cols)]
        for r in U_GENERATORS:
            lines.append(r.ljust(6) + "".join(self.values[r, c].render().ljust(w) for c in cols))
        return "\n".join(lines)


def pairing_table() -> PairingTable:
    return PairingTable({(un, xn): pair(u, x) for un, u in U_GENERATORS.items()
                         for xn, x in O_GENERATORS.items()})


def right_action(a: OElement, u: UElement) -> OElement:
    """a . u = sum (u, a_(1)) a_(2)."""
    acc: dict = {}
    for (m1, m2), c in o_coproduct(a).terms.items():
        v = pair(u, OElement.basis(m1))
        if not v.is_zero():
            _accumulate(acc, m2, c * v)
    return OElement(acc)


def left_action(u: UElement, a: OElement) -> OElement:
    """u . a = sum a_(1) (u, a_(2))."""
    acc: dict = {}
    for (m1, m2), c in o_coproduct(a).terms.items():
        v = pair(u, OElement.basis(m2))
        if not v.is_zero():
            _accumulate(acc, m1, c * v)
    return OElement(acc)


def _pair_tensor(ut, ot) -> QScalar:
    """sum over legs of (u_(1), a)(u_(2), b) for a U tensor and O pair (a, b)."""
    a, b = ot
    out = ZERO
    for (m1, m2), c in ut.terms.items():
        x = pair(UElement.basis(m1), a)
        if x.is_zero():
            continue
        out = out + c * x * pair(UElement.basis(m2), b)
    return out


def pairing_axioms_check(us: Sequence[UElement], os_: Sequence[OElement]) -> Report:
    """The five Hopf-pairing identities on all pairs drawn from the samples."""
    rep = Report("hopf pairing axioms")
    fails: dict = {}

    def bad(name, w):
        fails.setdefault(name, w)

    for u in us:
        du = coproduct(u)
        if pair(u, OElement.one()) != counit(u):
            bad("(u, 1) = eps(u)", u.render())
        for a in os_:
            if pair(antipode(u), a) != pair(u, o_antipode(a)):
                bad("(S u, a) = (u, S a)", f"u={u.render()}, a={a.render()}")
            for b in os_:
                if pair(u, a * b) != _pair_tensor(du, (a, b)):
                    bad("(u, ab) = sum (u1, a)(u2, b)", f"u={u.render()}, a={a.render()}, b={b.render()}")
    for a in os_:
        if pair(UElement.one(), a) != o_counit(a):
            bad("(1, a) = eps(a)", a.render())
        da = o_coproduct(a).terms.items()
        for u in us:
            for v in us:
                rhs = ZERO
                for (m1, m2), c in da:
                    x = pair(u, OElement.basis(m1))
                    if not x.is_zero():
                        rhs = rhs + c * x * pair(v, OElement.basis(m2))
                if pair(u * v, a) != rhs:
                    bad("(uv, a) = sum (u, a1)(v, a2)", f"u={u.render()}, v={v.render()}, a={a.render()}")
    for name in ("(u, 1) = eps(u)", "(1, a) = eps(a)", "(S u, a) = (u, S a)",
                 "(u, ab) = sum (u1, a)(u2, b)", "(uv, a) = sum (u, a1)(v, a2)"):
        rep.add(name, name not in fails, fails.get(name))
    rep.note(f"{len(us)} U samples, {len(os_)} O samples")
    return rep


def pairing_rank(max_degree: int, u_basis: Iterable[PBW] | None = None) -> tuple[int, int]:
    """(rank, count): rank of the canonical monomials of degree <= max_degree
    viewed as functionals on U (rows indexed by PBW monomials)."""
    monos = canonical_monomials(max_degree)
    if u_basis is None:
        r = max_degree
        u_basis = [PBW(a, b, c) for a in range(r + 1) for c in range(r + 1) for b in range(-r, r + 1)]
    u_basis = list(u_basis)
    ech = Echelon()
    for m in monos:
        ech.add({u: _pair_mono(u, m) for u in u_basis if not _pair_mono(u, m).is_zero()})
    return ech.rank, len(monos)


# ---------------------------------------------------------------------------
# right coideal subalgebras of U_q(sl2)
# ---------------------------------------------------------------------------


def _span_words(gens: Sequence, max_len: int, one) -> tuple[list, Echelon]:
    """Echelon basis of the span of all products of at most max_len gens."""
    ech = Echelon()
    basis = []
    frontier = [one]
    if ech.add(dict(one.terms)):
        basis.append(one)
    for _ in range(max_len):
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if ech.add(dict(y.terms)):
                    basis.append(y)
                    nxt.append(y)
        if not nxt:
            break
        frontier = nxt
    return basis, ech


def verify_right_coideal(gens: Sequence[UElement], degree_bound: int = 3) -> Report:
    """Check Delta(A) in A (x) U for the subalgebra A generated by gens.

    A is truncated to products of at most ``degree_bound`` generators.  Since
    Delta is multiplicative, the left legs of Delta(x) for such a product
    again lie in that truncation when A is a right coideal, so the check is
    exact at every bound."""
    if degree_bound < 1:
        raise ValueError("degree bound must be at least 1")
    gens = list(gens)
    rep = Report("right coideal subalgebra")
    basis, ech = _span_words(gens, degree_bound, UElement.one())
    witness = None
    for x in basis:
        for right, left in coproduct(x).by_right_leg().items():
            if not ech.contains(dict(left.terms)):
                witness = (x, left, right)
                break
        if witness:
            break
    if witness is None:
        rep.add("left legs of coproducts lie in A", True)
    else:
        x, left, right = witness
        rep.add("left legs of coproducts lie in A", False,
                f"{left.render()}", f"in coproduct of {x.render()}, paired with right leg {UElement.basis(right).render()}")
    rep.note(f"A truncated to products of <= {degree_bound} generators (dim {len(basis)})")
    return rep


def invariants(I_gens: Sequence[UElement], degree_bound: int, homogeneous: bool = False) -> list[OElement]:
    """Basis of {a : deg a <= bound, a . g = eps(g) a for every generator g}.

    For generators of a right coideal subalgebra I, invariance under the
    generators gives invariance under all of I, since a.(uv) = (a.u).v and
    the action preserves degree.  With ``homogeneous`` only elements of
    degree exactly ``degree_bound`` are considered (the action preserves
    degree, so this is the degree-d part of the full answer)."""
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    monos = canonical_monomials(degree_bound)
    if homogeneous:
        monos = [m for m in monos if m.degree == degree_bound]
    cols = []
    for m in monos:
        a = OElement.basis(m)
        col: dict = {}
        for gi, g in enumerate(I_gens):
            diff = right_action(a, g) - a.scale(counit(g))
            for n, c in diff.terms.items():
                col[gi, n] = c
        cols.append(col)
    return _canonical_basis(
        [OElement({m: c for m, c in zip(monos, vec) if not c.is_zero()}) for vec in nullspace(cols)])


def _canonical_basis(elems: Iterable[OElement]) -> list[OElement]:
    ech = Echelon(order=OElement._sort_key)
    for x in elems:
        ech.add(dict(x.terms))
    return [OElement(v) for v in ech.reduced_basis()]


def takeuchi_quotient_ideal(A_gens: Sequence[OElement], degree_bound: int) -> list[OElement]:
    """Basis of the left ideal O . A^+ in degrees <= bound, A^+ = A cap ker eps.

    A is truncated to products of generators whose generator degrees sum to at
    most the bound; the ideal to elements m y with deg m + deg y <= bound."""
    gens = [(g, g.degree()) for g in A_gens if not g.is_zero()]
    a_elems: list[tuple[OElement, int]] = [(OElement.one(), 0)]
    ech = Echelon()
    ech.add(dict(OElement.one().terms))
    frontier = list(a_elems)
    while frontier:
        nxt = []
        for x, dx in frontier:
            for g, dg in gens:
                if dx + dg > degree_bound:
                    continue
                y = x * g
                if ech.add(dict(y.terms)):
                    nxt.append((y, dx + dg))
        a_elems.extend(nxt)
        frontier = nxt
    ideal = Echelon(order=OElement._sort_key)
    for x, dx in a_elems:
        y = x - OElement.scalar(o_counit(x))
        if y.is_zero():
            continue
        for m in canonical_monomials(degree_bound - dx):
            ideal.add(dict((OElement.basis(m) * y).terms))
    return [OElement(v) for v in ideal.reduced_basis()]


# ---------------------------------------------------------------------------
# the catalog of right coideal subalgebras
# ---------------------------------------------------------------------------

VOCKE_CONSTRAINT = (Q * Q) / ((ONE - Q * Q) * (Q - Q.inverse()))


@dataclass(frozen=True)
class CoidealPresentation:
    label: str
    generators: tuple
    params: dict = field(default_factory=dict)

    def check(self, degree_bound: int = 3) -> Report:
        rep = verify_right_coideal(self.generators, degree_bound)
        rep.title = f"right coideal subalgebra {self.label}"
        return rep

    def render(self) -> str:
        gens = ", ".join(g.render() for g in self.generators)
        ps = "".join(f" {k}={_render_param(v)}" for k, v in self.params.items())
        return f"{self.label}: {{{gens}}}{ps}"


def _render_param(v) -> str:
    return v.render() if isinstance(v, QScalar) else str(v)


_EK = E * K_INV


def constrained_pair(lam, lam_prime) -> CoidealPresentation:
    """{EK^-1 + lam K^-1, F + lam' K^-1}; requires lam lam' = q^2/((1-q^2)(q-q^-1))."""
    lam, lam_prime = as_scalar(lam), as_scalar(lam_prime)
    if lam * lam_prime != VOCKE_CONSTRAINT:
        raise ValueError(
            f"lambda*lambda' = {(lam * lam_prime).render()} but must equal {VOCKE_CONSTRAINT.render()}")
    return CoidealPresentation("{EK^-1 + lambda K^-1, F + lambda' K^-1}",
                               (_EK + K_INV.scale(lam), F + K_INV.scale(lam_prime)),
                               {"lambda": lam, "lambda'": lam_prime})


def vocke_catalog(j: int = 2, lam=ONE, lam_prime=ONE, c_F=ONE, c_K=ONE,
                  pair_params: tuple | None = None) -> list[CoidealPresentation]:
    """Instantiate each family of right coideal subalgebras of U_q(sl2).

    ``pair_params`` = (lambda, lambda') for the two-generator family; by
    default lambda' is solved from ``lam`` (or lambda = 1 when lam is 0)."""
    lam, lam_prime, c_F, c_K = map(as_scalar, (lam, lam_prime, c_F, c_K))
    kj = UElement.monomial(b=j)
    out = [
        CoidealPresentation("U_q(sl2)", (E, F, K, K_INV)),
        CoidealPresentation("U^0", (K, K_INV)),
        CoidealPresentation("U^>=0", (E, K, K_INV)),
        CoidealPresentation("U^<=0", (F, K, K_INV)),
        CoidealPresentation("{EK^-1, K^2, K^-2, F}", (_EK, K * K, K_INV * K_INV, F)),
        CoidealPresentation("{EK^-1, K^j}", (_EK, kj), {"j": j}),
        CoidealPresentation("{F, K^j}", (F, kj), {"j": j}),
        CoidealPresentation("{EK^-1 + lambda K^-1}", (_EK + K_INV.scale(lam),), {"lambda": lam}),
        CoidealPresentation("{F + lambda' K^-1}", (F + K_INV.scale(lam_prime),), {"lambda'": lam_prime}),
        CoidealPresentation("{EK^-1 + c_F F + c_K K^-1}", (_EK + F.scale(c_F) + K_INV.scale(c_K),),
                            {"c_F": c_F, "c_K": c_K}),
    ]
    if pair_params is None:
        l1 = lam if not lam.is_zero() else ONE
        pair_params = (l1, VOCKE_CONSTRAINT / l1)
    out.append(constrained_pair(*pair_params))
    return out
