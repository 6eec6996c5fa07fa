"""Seeded sample elements for the axiom suites."""

from __future__ import annotations

import random

from .oqsl2 import OElement, OMono, canonical_monomials
from .qscalar import QScalar, q_int
from .uqsl2 import PBW, UElement


def _coeff(rng: random.Random) -> QScalar:
    r = rng.random()
    if r < 0.6:
        return QScalar.q_power(rng.randint(-2, 2), rng.choice([-2, -1, 1, 1, 2, 3]))
    if r < 0.85:
        return q_int(rng.randint(1, 3)) * rng.choice([1, -1])
    return QScalar.from_int(rng.randint(1, 3)) / (QScalar.q_power(rng.randint(1, 2)) + 1)


def u_monomials(max_exp: int = 2) -> list[UElement]:
    """F^a K^b E^c with a, c in [0, max_exp] and |b| <= max_exp."""
    r = range(max_exp + 1)
    return [UElement.basis(PBW(a, b, c)) for a in r for b in range(-max_exp, max_exp + 1) for c in r]


def o_monomials(max_degree: int = 2) -> list[OElement]:
    return [OElement.basis(m) for m in canonical_monomials(max_degree)]


def random_u(rng: random.Random, max_degree: int = 3, max_terms: int = 3) -> UElement:
    """Sum of up to max_terms PBW monomials with a + |b| + c <= max_degree."""
    acc = UElement.zero()
    for _ in range(rng.randint(1, max_terms)):
        a = rng.randint(0, max_degree)
        c = rng.randint(0, max_degree - a)
        rest = max_degree - a - c
        b = rng.randint(-rest, rest)
        acc = acc + UElement.basis(PBW(a, b, c), _coeff(rng))
    return acc if not acc.is_zero() else UElement.one()


def random_o(rng: random.Random, max_degree: int = 3, max_terms: int = 3) -> OElement:
    monos = canonical_monomials(max_degree)
    acc = OElement.zero()
    for _ in range(rng.randint(1, max_terms)):
        acc = acc + OElement.basis(rng.choice(monos), _coeff(rng))
    return acc if not acc.is_zero() else OElement.one()


def u_samples(count: int, seed: int = 0, max_degree: int = 3) -> list[UElement]:
    rng = random.Random(seed)
    return [random_u(rng, max_degree) for _ in range(count)]


def o_samples(count: int, seed: int = 0, max_degree: int = 3) -> list[OElement]:
    rng = random.Random(seed)
    return [random_o(rng, max_degree) for _ in range(count)]
