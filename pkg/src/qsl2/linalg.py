"""Exact linear algebra over Q(q).

Vectors are sparse dicts ``{key: QScalar}``.  No pivot tolerances: the field
is exact, so a pivot is any nonzero entry.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Sequence

from .qscalar import ONE, QScalar

Vector = dict


def _axpy(v: Vector, c: QScalar, w: Vector) -> None:
    """v <- v - c * w (in place)."""
    for k, x in w.items():
        s = v.get(k)
        s = -(c * x) if s is None else s - c * x
        if s.is_zero():
            v.pop(k, None)
        else:
            v[k] = s


def _pivot_cost(x: QScalar) -> int:
    return len(x.num._c) + 2 * len(x.den._c)


class Echelon:
    """Incrementally maintained row-echelon basis of a subspace.

    ``order`` ranks keys; pivots are taken at the highest-ranked nonzero
    entry, which makes the reduced basis deterministic.
    """

    def __init__(self, order: Callable[[Hashable], object] | None = None):
        self.rows: list[tuple[Hashable, Vector]] = []
        self._order = order

    def _pick(self, v: Vector) -> Hashable:
        if self._order is None:
            return min(v, key=lambda k: (_pivot_cost(v[k]), repr(k)))
        return max(v, key=self._order)

    def reduce(self, v: Vector) -> Vector:
        v = dict(v)
        for p, row in self.rows:
            c = v.get(p)
            if c is not None:
                _axpy(v, c, row)
        return v

    def add(self, v: Vector) -> bool:
        """Insert v; return True if it enlarged the span."""
        v = self.reduce(v)
        if not v:
            return False
        p = self._pick(v)
        inv = v[p].inverse()
        v = {k: x * inv for k, x in v.items()}
        self.rows.append((p, v))
        return True

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduced_basis(self) -> list[Vector]:
        """Fully reduced basis (each pivot appears in exactly one vector)."""
        rows = [(p, dict(r)) for p, r in self.rows]
        for i, (p, r) in enumerate(rows):
            for j, (p2, r2) in enumerate(rows):
                if i != j and p in r2:
                    _axpy(r2, r2[p], r)
        if self._order is not None:
            rows.sort(key=lambda pr: self._order(pr[0]))
        return [r for _, r in rows]


def rank(vectors: Iterable[Vector]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def nullspace(columns: Sequence[Vector]) -> list[list[QScalar]]:
    """Basis of {x : sum_j x_j columns[j] = 0}, as dense coefficient lists."""
    n = len(columns)
    rows: dict = {}
    for j, col in enumerate(columns):
        for r, x in col.items():
            rows.setdefault(r, {})[j] = x
    # Gauss-Jordan on the row space, pivots in column order
    pivots: dict[int, Vector] = {}
    for row in rows.values():
        row = dict(row)
        for p, prow in pivots.items():
            c = row.get(p)
            if c is not None:
                _axpy(row, c, prow)
        if not row:
            continue
        p = min(row)
        inv = row[p].inverse()
        row = {k: x * inv for k, x in row.items()}
        for p2, prow in pivots.items():
            c = prow.get(p)
            if c is not None:
                _axpy(prow, c, row)
        pivots[p] = row
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        x = [QScalar.from_int(0)] * n
        x[f] = ONE
        for p, prow in pivots.items():
            c = prow.get(f)
            if c is not None:
                x[p] = -c
        basis.append(x)
    return basis
