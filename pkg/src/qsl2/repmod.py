"""Finite-dimensional type-1 modules of U_q(sl2).

V(n) has basis v_k = F^(k) u (k = 0..n, divided powers) with

    K v_k = q^(n-2k) v_k
    F v_k = [k+1] v_(k+1)
    E v_k = [n-k+1] v_(k-1)

The E coefficient follows from E F^k u = [k][n-k+1] F^(k-1) u (induction on
k with EF = FE + (K - K^-1)/(q - q^-1)); ``verify_relations`` pins it.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

from .linear import _accumulate
from .qscalar import ONE, ZERO, Q, QScalar, q_int
from .report import Report
from .uqsl2 import PBW, UElement

__all__ = [
    "Mat",
    "ModuleRep",
    "build_module",
    "tensor_module",
    "v1_power",
    "act",
    "verify_relations",
    "k_spectrum",
    "CoordinateFunction",
    "coordinate_function_pair",
    "CrystalLatticeData",
    "lattice_data",
    "crystal_from_module",
]


class Mat:
    """Sparse square matrix over Q(q); entries keyed by (row, col)."""

    __slots__ = ("dim", "_e")

    def __init__(self, dim: int, entries: Mapping[tuple[int, int], QScalar] | None = None):
        self.dim = dim
        self._e = {k: v for k, v in (entries or {}).items() if not v.is_zero()}

    @classmethod
    def identity(cls, dim: int) -> "Mat":
        return cls(dim, {(i, i): ONE for i in range(dim)})

    @classmethod
    def diag(cls, values: Sequence[QScalar]) -> "Mat":
        return cls(len(values), {(i, i): v for i, v in enumerate(values)})

    def __getitem__(self, ij: tuple[int, int]) -> QScalar:
        return self._e.get(ij, ZERO)

    def items(self):
        return self._e.items()

    def _check(self, other: "Mat"):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        acc = dict(self._e)
        for k, v in other._e.items():
            _accumulate(acc, k, v)
        return Mat(self.dim, acc)

    def __sub__(self, other: "Mat") -> "Mat":
        return self + other.scale(-ONE)

    def scale(self, c) -> "Mat":
        return Mat(self.dim, {k: v * c for k, v in self._e.items()})

    def __matmul__(self, other: "Mat") -> "Mat":
        self._check(other)
        rows: dict = {}
        for (i, j), v in other._e.items():
            rows.setdefault(i, []).append((j, v))
        acc: dict = {}
        for (i, k), a in self._e.items():
            for j, b in rows.get(k, ()):
                _accumulate(acc, (i, j), a * b)
        return Mat(self.dim, acc)

    def kron(self, other: "Mat") -> "Mat":
        n = other.dim
        out = {}
        for (i1, j1), a in self._e.items():
            for (i2, j2), b in other._e.items():
                out[i1 * n + i2, j1 * n + j2] = a * b
        return Mat(self.dim * n, out)

    def apply(self, v: Sequence[QScalar]) -> list[QScalar]:
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} for a {self.dim}-dimensional module")
        out = [ZERO] * self.dim
        for (i, j), a in self._e.items():
            out[i] = out[i] + a * v[j]
        return out

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self._e)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.dim == other.dim and self._e == other._e

    def __hash__(self):
        return hash((self.dim, len(self._e)))

    def __repr__(self):
        return f"Mat({self.dim}, {len(self._e)} nonzero)"

    def rows(self) -> list[list[QScalar]]:
        return [[self[i, j] for j in range(self.dim)] for i in range(self.dim)]


@dataclass(eq=False)
class ModuleRep:
    """A finite-dimensional U_q(sl2)-module given by its generator matrices.

    ``n`` is the highest weight for V(n); tensor products carry the tuple of
    factor highest weights instead."""

    n: object
    e: Mat
    f: Mat
    k: Mat
    k_inv: Mat
    _cache: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def dim(self) -> int:
        return self.e.dim

    def _pow(self, name: str, m: Mat, p: int) -> Mat:
        key = (name, p)
        with self._lock:
            hit = self._cache.get(key)
        if hit is not None:
            return hit
        out = Mat.identity(self.dim)
        for _ in range(p):
            out = out @ m
        with self._lock:
            self._cache.setdefault(key, out)
        return out

    def monomial_matrix(self, m: PBW) -> Mat:
        """Matrix of F^a K^b E^c."""
        key = ("mono", m)
        with self._lock:
            hit = self._cache.get(key)
        if hit is not None:
            return hit
        kb = self._pow("K", self.k, m.b) if m.b >= 0 else self._pow("Ki", self.k_inv, -m.b)
        out = self._pow("F", self.f, m.a) @ kb @ self._pow("E", self.e, m.c)
        with self._lock:
            self._cache.setdefault(key, out)
        return out

    def matrix(self, u: UElement) -> Mat:
        acc: dict = {}
        for m, c in u.terms.items():
            for ij, v in self.monomial_matrix(m).items():
                _accumulate(acc, ij, c * v)
        return Mat(self.dim, acc)


def build_module(n: int) -> ModuleRep:
    """The simple module V(n) in the divided-power basis."""
    if n < 0:
        raise ValueError("highest weight must be nonnegative")
    e = Mat(n + 1, {(k - 1, k): q_int(n - k + 1) for k in range(1, n + 1)})
    f = Mat(n + 1, {(k + 1, k): q_int(k + 1) for k in range(n)})
    kk = Mat.diag([QScalar.q_power(n - 2 * k) for k in range(n + 1)])
    ki = Mat.diag([QScalar.q_power(2 * k - n) for k in range(n + 1)])
    return ModuleRep(n, e, f, kk, ki)


def tensor_module(m1: ModuleRep, m2: ModuleRep) -> ModuleRep:
    """m1 (x) m2 with the action through the coproduct."""
    i1, i2 = Mat.identity(m1.dim), Mat.identity(m2.dim)
    e = m1.e.kron(i2) + m1.k.kron(m2.e)
    f = m1.f.kron(m2.k_inv) + i1.kron(m2.f)
    n1 = m1.n if isinstance(m1.n, tuple) else (m1.n,)
    n2 = m2.n if isinstance(m2.n, tuple) else (m2.n,)
    return ModuleRep(n1 + n2, e, f, m1.k.kron(m2.k), m1.k_inv.kron(m2.k_inv))


@lru_cache(maxsize=None)
def v1_power(d: int) -> ModuleRep:
    """V(1)^(x)d; the index of basis vector (i_1..i_d) is binary i_1...i_d."""
    if d < 0:
        raise ValueError("tensor power must be nonnegative")
    if d == 0:
        return build_module(0)
    if d == 1:
        return build_module(1)
    return tensor_module(v1_power(d - 1), build_module(1))


def act(m: ModuleRep, u: UElement, v: Sequence[QScalar]) -> list[QScalar]:
    return m.matrix(u).apply(list(v))


def verify_relations(m: ModuleRep) -> Report:
    """The defining relations of U_q(sl2) as exact matrix identities."""
    rep = Report(f"module relations: dim {m.dim}")
    ident = Mat.identity(m.dim)
    q2 = Q * Q
    inv_qq = (Q - Q.inverse()).inverse()
    checks = [
        ("K K^-1 = 1", m.k @ m.k_inv, ident),
        ("K^-1 K = 1", m.k_inv @ m.k, ident),
        ("K E K^-1 = q^2 E", m.k @ m.e @ m.k_inv, m.e.scale(q2)),
        ("K F K^-1 = q^-2 F", m.k @ m.f @ m.k_inv, m.f.scale(q2.inverse())),
        ("EF - FE = (K - K^-1)/(q - q^-1)", m.e @ m.f - m.f @ m.e, (m.k - m.k_inv).scale(inv_qq)),
    ]
    for name, lhs, rhs in checks:
        ok = lhs == rhs
        rep.add(name, ok, None if ok else repr(lhs - rhs))
    if isinstance(m.n, int):
        hw = [ZERO] * m.dim
        hw[0] = ONE
        rep.add("E u = 0", all(x.is_zero() for x in m.e.apply(hw)))
        rep.add("K u = q^n u", m.k.apply(hw)[0] == QScalar.q_power(m.n))
    return rep


def k_spectrum(m: ModuleRep) -> list[int]:
    """Exponents w with K v = q^w v on the (diagonal) K matrix, sorted."""
    if not m.k.is_diagonal():
        raise ValueError("K is not diagonal in this basis")
    out = []
    for i in range(m.dim):
        w = m.k[i, i].q_exponent()
        if w is None:
            raise ValueError(f"K eigenvalue {m.k[i, i].render()} is not a power of q")
        out.append(w)
    return sorted(out, reverse=True)


@dataclass(frozen=True)
class CoordinateFunction:
    """c_{f,v}: u -> f(u v) for basis vector v = v_col and dual vector f = f_row."""

    module: ModuleRep
    row: int
    col: int

    def __post_init__(self):
        if not (0 <= self.row < self.module.dim and 0 <= self.col < self.module.dim):
            raise ValueError("coordinate indices out of range")

    def __call__(self, u: UElement) -> QScalar:
        return coordinate_function_pair(self, u)


def coordinate_function_pair(cf: CoordinateFunction, u: UElement) -> QScalar:
    out = ZERO
    for m, c in u.terms.items():
        out = out + c * cf.module.monomial_matrix(m)[cf.row, cf.col]
    return out


# ---------------------------------------------------------------------------
# crystal limit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CrystalLatticeData:
    """E~ and F~ on the indices of the divided-power basis (None = absent)."""

    n: int
    e_map: tuple
    f_map: tuple
    weights: tuple

    def check(self) -> bool:
        for k, t in enumerate(self.f_map):
            if t is not None and self.e_map[t] != k:
                return False
        return all(w == self.n - 2 * k for k, w in enumerate(self.weights))


def lattice_data(n: int) -> CrystalLatticeData:
    """Read E~, F~ and weights off the matrices of V(n).

    In the basis F^(k) u, F~ sends index k to k+1 exactly when F has a
    nonzero (k+1, k) entry; likewise E~ with E's (k-1, k) entry."""
    m = build_module(n)
    wts = tuple(m.k[k, k].q_exponent() for k in range(m.dim))
    f_map = tuple(k + 1 if k + 1 < m.dim and not m.f[k + 1, k].is_zero() else None for k in range(m.dim))
    e_map = tuple(k - 1 if k > 0 and not m.e[k - 1, k].is_zero() else None for k in range(m.dim))
    return CrystalLatticeData(n, e_map, f_map, wts)


def crystal_from_module(n: int):
    """B(n) extracted from the module V(n) (compare ``crystal.b_n``)."""
    from .crystal import SL2, Crystal, bn_label

    d = lattice_data(n)
    vs = tuple(range(n + 1))

    def run(k, mp):
        s = 0
        while mp[k] is not None:
            k = mp[k]
            s += 1
        return s

    return Crystal(SL2, vs, {k: bn_label(k) for k in vs}, {k: (d.weights[k],) for k in vs},
                   {k: (run(k, d.e_map),) for k in vs}, {k: (run(k, d.f_map),) for k in vs},
                   {(k, 0): t for k, t in enumerate(d.f_map) if t is not None})
