"""Finite linear combinations over Q(q) with a pluggable basis product.

``Element`` is the shared machinery behind U_q(sl2) and O_q(SL2) elements;
``Tensor`` holds elements of an n-fold tensor power of one algebra.
"""

from __future__ import annotations

from typing import Callable, ClassVar, Hashable, Iterable, Iterator, Mapping

from .qscalar import ONE, ZERO, QScalar, as_scalar

Basis = Hashable


def _accumulate(acc: dict, key, coeff: QScalar) -> None:
    s = acc.get(key)
    s = coeff if s is None else s + coeff
    if s.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = s


class Element:
    """Immutable finite linear combination of basis monomials.

    Subclasses provide ``_mul_basis(m1, m2) -> dict[basis, QScalar]``,
    ``_sort_key`` and ``_render_basis``.
    """

    __slots__ = ("_terms", "_hash")

    IDENTITY: ClassVar[Basis]

    def __init__(self, terms: Mapping[Basis, QScalar | int] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = as_scalar(c)
                if not c.is_zero():
                    clean[m] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict):
        e = object.__new__(cls)
        e._terms = terms
        e._hash = None
        return e

    # -- subclass hooks ---------------------------------------------------
    @classmethod
    def _mul_basis(cls, m1, m2) -> Mapping[Basis, QScalar]:
        raise NotImplementedError

    @classmethod
    def _sort_key(cls, m):
        return m

    @classmethod
    def _render_basis(cls, m) -> str:
        raise NotImplementedError

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls):
        return cls._wrap({})

    @classmethod
    def one(cls):
        return cls._wrap({cls.IDENTITY: ONE})

    @classmethod
    def scalar(cls, c):
        c = as_scalar(c)
        return cls._wrap({cls.IDENTITY: c} if c else {})

    @classmethod
    def basis(cls, m, coeff=ONE):
        coeff = as_scalar(coeff)
        return cls._wrap({m: coeff} if coeff else {})

    # -- access -----------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Basis, QScalar]]:
        for m in sorted(self._terms, key=self._sort_key):
            yield m, self._terms[m]

    def coefficient(self, m) -> QScalar:
        return self._terms.get(m, ZERO)

    def support(self) -> list:
        return sorted(self._terms, key=self._sort_key)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- vector space -----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, QScalar)):
            return type(self).scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            _accumulate(acc, m, c)
        return self._wrap(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "Element":
        c = as_scalar(c)
        if c.is_zero():
            return self._wrap({})
        return self._wrap({m: v * c for m, v in self._terms.items()})

    # -- algebra ----------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, (int, QScalar)):
            return self.scale(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        acc: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                c12 = c1 * c2
                for m, c in self._mul_basis(m1, m2).items():
                    _accumulate(acc, m, c12 * c)
        return self._wrap(acc)

    def __rmul__(self, other):
        if isinstance(other, (int, QScalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined for general elements")
        out = self.one()
        for _ in range(k):
            out = out * self
        return out

    def map_basis(self, f: Callable[[Basis], "Element"]):
        """Linear extension of a map defined on basis monomials."""
        acc: dict = {}
        for m, c in self._terms.items():
            for m2, c2 in f(m)._terms.items():
                _accumulate(acc, m2, c * c2)
        return self._wrap(acc)

    # -- equality / display ----------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, QScalar)):
            other = type(self).scalar(other)
        if not isinstance(other, Element) or type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.items():
            pieces.append(_render_term(c, self._render_basis(m), m == self.IDENTITY))
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.render()})"


def _render_term(c: QScalar, mono: str, is_identity: bool) -> str:
    if is_identity:
        s = c.render()
        return f"({s})" if " " in s else s
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    s = c.render()
    simple = c.is_laurent() and len(c.num._c) == 1
    if simple:
        return f"{s}*{mono}"
    return f"({s})*{mono}"


class Tensor:
    """Element of the n-fold tensor power of an ``Element`` algebra.

    Terms are keyed by n-tuples of basis monomials.
    """

    __slots__ = ("algebra", "arity", "_terms", "_hash")

    def __init__(self, algebra: type, arity: int, terms: Mapping[tuple, QScalar] | None = None):
        self.algebra = algebra
        self.arity = arity
        clean = {}
        if terms:
            for k, c in terms.items():
                c = as_scalar(c)
                if len(k) != arity:
                    raise ValueError("tensor key has wrong arity")
                if c:
                    clean[k] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, algebra, arity, terms):
        t = object.__new__(cls)
        t.algebra = algebra
        t.arity = arity
        t._terms = terms
        t._hash = None
        return t

    @classmethod
    def pure(cls, *factors: Element) -> "Tensor":
        """x1 (x) x2 (x) ... expanded in the basis."""
        algebra = type(factors[0])
        acc: dict = {(): ONE}
        for f in factors:
            new: dict = {}
            for k, c in acc.items():
                for m, c2 in f._terms.items():
                    _accumulate(new, k + (m,), c * c2)
            acc = new
        return cls._wrap(algebra, len(factors), acc)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        key = self.algebra._sort_key
        for k in sorted(self._terms, key=lambda t: tuple(key(m) for m in t)):
            yield k, self._terms[k]

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "Tensor") -> None:
        if not isinstance(other, Tensor) or other.algebra is not self.algebra or other.arity != self.arity:
            raise TypeError("incompatible tensors")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _accumulate(acc, k, c)
        return self._wrap(self.algebra, self.arity, acc)

    def __neg__(self) -> "Tensor":
        return self._wrap(self.algebra, self.arity, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def scale(self, c) -> "Tensor":
        c = as_scalar(c)
        return self._wrap(self.algebra, self.arity, {k: v * c for k, v in self._terms.items() if c})

    def __mul__(self, other):
        if isinstance(other, (int, QScalar)):
            return self.scale(other)
        self._check(other)
        mul = self.algebra._mul_basis
        acc: dict = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                partial: dict = {(): c1 * c2}
                for m1, m2 in zip(k1, k2):
                    prod = mul(m1, m2)
                    new: dict = {}
                    for k, c in partial.items():
                        for m, c3 in prod.items():
                            _accumulate(new, k + (m,), c * c3)
                    partial = new
                for k, c in partial.items():
                    _accumulate(acc, k, c)
        return self._wrap(self.algebra, self.arity, acc)

    def apply_leg(self, i: int, f: Callable[[Basis], "Element | Tensor | QScalar"]) -> "Tensor":
        """Apply a linear map to leg ``i``; f maps a basis monomial to an
        Element (arity kept), a Tensor (leg expands) or a scalar (leg removed)."""
        acc: dict = {}
        for k, c in self._terms.items():
            img = f(k[i])
            if isinstance(img, QScalar):
                if img:
                    _accumulate(acc, k[:i] + k[i + 1:], c * img)
                continue
            if isinstance(img, Tensor):
                for k2, c2 in img._terms.items():
                    _accumulate(acc, k[:i] + k2 + k[i + 1:], c * c2)
                continue
            for m, c2 in img._terms.items():
                _accumulate(acc, k[:i] + (m,) + k[i + 1:], c * c2)
        arity = len(next(iter(acc))) if acc else None
        if arity is None:
            probe = f(self.algebra.IDENTITY)
            arity = self.arity - 1 if isinstance(probe, QScalar) else (
                self.arity - 1 + probe.arity if isinstance(probe, Tensor) else self.arity)
        if arity == 0:
            return Tensor._wrap(self.algebra, 0, acc)
        return self._wrap(self.algebra, arity, acc)

    def contract(self) -> Element:
        """Multiply all legs together (the iterated product map)."""
        out = self.algebra.zero()
        for k, c in self._terms.items():
            prod = self.algebra.one()
            for m in k:
                prod = prod * self.algebra.basis(m)
            out = out + prod.scale(c)
        return out

    def to_scalar(self) -> QScalar:
        if self.arity != 0:
            raise ValueError("tensor has legs left")
        return self._terms.get((), ZERO)

    def by_right_leg(self) -> dict:
        """Group a 2-tensor as {right basis monomial: left Element}."""
        if self.arity != 2:
            raise ValueError("expected a 2-tensor")
        groups: dict = {}
        for (l, r), c in self._terms.items():
            groups.setdefault(r, {})[l] = c
        return {r: self.algebra._wrap(d) for r, d in groups.items()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.algebra is other.algebra and self.arity == other.arity and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self._terms.items())))
        return self._hash

    def render(self) -> str:
        if not self._terms:
            return "0"
        r = self.algebra._render_basis
        pieces = []
        for k, c in self.items():
            mono = " ⊗ ".join(r(m) for m in k)
            bare = len(k) == 1 or c == 1 or c == -1
            pieces.append(_render_term(c, mono if bare else f"({mono})", False))
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"Tensor({self.render()})"


def sum_elements(xs: Iterable[Element], cls: type) -> Element:
    out = cls.zero()
    for x in xs:
        out = out + x
    return out
