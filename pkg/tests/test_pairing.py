from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given

from qsl2.oqsl2 import X11, X12, X21, X22, OElement, canonical_monomials, o_counit, parse_o
from qsl2.pairing import (
    VOCKE_CONSTRAINT,
    constrained_pair,
    invariants,
    left_action,
    pair,
    pairing_axioms_check,
    pairing_rank,
    pairing_table,
    right_action,
    takeuchi_quotient_ideal,
    verify_right_coideal,
    vocke_catalog,
)
from qsl2.qscalar import ONE, Q
from qsl2.sampling import o_monomials, u_monomials
from qsl2.uqsl2 import E, F, K, K_INV, L, PBW, UElement, coproduct, counit, parse_u

from strategies import o_elements, u_elements

qi = Q.inverse()
EK = E * K_INV
ONE_U = UElement.one()


# --- an independent numeric oracle: V(1) (x) V(1) with Fraction matrices -------


def _mm(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _kron(a, b):
    n, m = len(a), len(b)
    return [[a[i // m][j // m] * b[i % m][j % m] for j in range(n * m)] for i in range(n * m)]


def _add(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def _v1v1(x):
    one = Fraction(1)
    e = [[0, one], [0, 0]]
    f = [[0, 0], [one, 0]]
    k = [[x, 0], [0, 1 / x]]
    ki = [[1 / x, 0], [0, x]]
    i2 = [[one, 0], [0, one]]
    return {"E": _add(_kron(e, i2), _kron(k, e)), "F": _add(_kron(f, ki), _kron(i2, f)),
            "K": _kron(k, k), "k": _kron(ki, ki)}


def _word_matrix(word, gens):
    out = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    for g in word:
        out = _mm(out, gens[g])
    return out


IDX = {"X11": (0, 0), "X12": (0, 1), "X21": (1, 0), "X22": (1, 1)}


@pytest.mark.parametrize("x", [Fraction(2), Fraction(3), Fraction(-1, 2)])
def test_degree_two_pairings_match_numeric_oracle(x):
    gens = _v1v1(x)
    words = ["EF", "FE", "E", "F", "K", "k", "EE", "FF", "KE", "FKE", "EFk"]
    to_u = {"E": E, "F": F, "K": K, "k": K_INV}
    for w in words:
        u = ONE_U
        for g in w:
            u = u * to_u[g]
        mat = _word_matrix(w, gens)
        for a, b in product(IDX, repeat=2):
            (i1, j1), (i2, j2) = IDX[a], IDX[b]
            want = mat[2 * i1 + i2][2 * j1 + j2]
            assert pair(u, parse_o(f"{a}*{b}")).evaluate(x) == want, (w, a, b)


def test_pair_ef_x11x22():
    assert pair(E * F, X11 * X22) == Q
    # EF - FE = L and K, K^-1 both pair to 1 with X11 X22, so L pairs to 0
    assert pair(F * E, X11 * X22) == Q
    assert pair(L, X11 * X22) == 0


def test_pairing_table_values():
    t = pairing_table()
    assert t["E", "X12"] == 1 and t["F", "X21"] == 1
    assert t["K", "X11"] == Q and t["K", "X22"] == qi
    assert t["K^-1", "X11"] == qi and t["K^-1", "X22"] == Q
    nonzero = {k for k, v in t.values.items() if not v.is_zero()}
    assert len(nonzero) == 6
    assert "q^-1" in t.render()


def test_unit_pairs_to_counit():
    assert pair(ONE_U, X11) == 1
    assert pair(ONE_U, X12) == 0
    assert pair(E, OElement.one()) == 0


def test_pairing_axioms_exhaustive():
    rep = pairing_axioms_check(u_monomials(2), o_monomials(2))
    assert rep.passed, rep.render()


@given(u_elements, o_elements, o_elements)
def test_pairing_bilinear(u, a, b):
    assert pair(u, a + b) == pair(u, a) + pair(u, b)
    assert pair(u.scale(Q), a) == pair(u, a) * Q


def test_perfectness_degree_one():
    us = [PBW(0, 0, 0), PBW(0, 0, 1), PBW(1, 0, 0), PBW(0, 1, 0), PBW(0, -1, 0)]
    assert pairing_rank(1, us) == (5, 5)
    assert pairing_rank(2) == (14, 14)


def test_right_action_values():
    assert right_action(X11, EK) == X21.scale(Q)
    assert right_action(X12, EK) == X22.scale(Q)
    assert right_action(X22, EK).is_zero()
    assert right_action(X21, EK).is_zero()
    for a in o_monomials(2):
        assert right_action(a, ONE_U) == a


def test_left_action_values():
    assert left_action(K, X11) == X11.scale(Q)
    assert left_action(E, X21).is_zero()
    assert left_action(E, X12) == X11
    for a in o_monomials(2):
        assert left_action(ONE_U, a) == a


@given(o_elements, o_elements, u_elements)
def test_bimodule_compatibility(a, b, u):
    rhs = OElement.zero()
    lhs_left = OElement.zero()
    for (m1, m2), c in coproduct(u).terms.items():
        u1, u2 = UElement.basis(m1), UElement.basis(m2)
        rhs = rhs + (right_action(a, u1) * right_action(b, u2)).scale(c)
        lhs_left = lhs_left + (left_action(u1, a) * left_action(u2, b)).scale(c)
    assert right_action(a * b, u) == rhs
    assert left_action(u, a * b) == lhs_left


@given(o_elements, u_elements, u_elements)
def test_actions_are_actions(a, u, v):
    assert right_action(right_action(a, u), v) == right_action(a, u * v)
    assert left_action(u, left_action(v, a)) == left_action(u * v, a)
    assert left_action(u, right_action(a, v)) == right_action(left_action(u, a), v)


# --- coideals and invariants --------------------------------------------------


def test_coideal_examples():
    assert verify_right_coideal([EK], 3).passed
    assert verify_right_coideal([K * K, K_INV * K_INV], 3).passed
    assert verify_right_coideal([F], 3).passed
    rep = verify_right_coideal([E], 3)
    assert not rep.passed and rep.first_failure().witness == "K"
    assert not verify_right_coideal([E + F], 2).passed
    with pytest.raises(ValueError):
        verify_right_coideal([EK], 0)


def _span(elems):
    from qsl2.linalg import Echelon

    ech = Echelon()
    for x in elems:
        ech.add(dict(x.terms))
    return ech


def test_invariants_of_ek_degree_two():
    basis = invariants([EK], 2)
    span = _span(basis)
    assert span.rank == 6
    for x in (OElement.one(), X21, X22, X21 * X21, X21 * X22, X22 * X22):
        assert span.contains(dict(x.terms))
    # X12 X21 and X11 X22 are moved by EK^-1
    assert right_action(X12 * X21, EK) == (X22 * X21).scale(Q * Q)
    assert not span.contains(dict((X12 * X21).terms))
    assert not span.contains(dict((X11 * X22).terms))


def test_invariants_hold_on_generated_subalgebra():
    for gens in ([EK], [K * K], [F, K * K], [EK + K_INV]):
        words = [ONE_U] + list(gens)
        words += [x * y for x in gens for y in gens]
        for a in invariants(gens, 2):
            for u in words:
                assert right_action(a, u) == a.scale(counit(u))


def test_invariants_trivial_cases():
    assert len(invariants([], 1)) == 5
    assert len(invariants([ONE_U], 1)) == 5
    assert invariants([EK], 0) == [OElement.one()]
    assert len(invariants([EK], 1, homogeneous=True)) == 2


def test_takeuchi_examples():
    ideal = takeuchi_quotient_ideal([X21, X22], 1)
    assert _span(ideal).rank == 2
    assert _span(ideal).contains(dict(X21.terms))
    assert _span(ideal).contains(dict((X22 - OElement.one()).terms))
    assert takeuchi_quotient_ideal([OElement.one()], 3) == []
    borel = takeuchi_quotient_ideal([X12], 2)
    assert _span(borel).rank == 5
    for m in canonical_monomials(1):
        assert _span(borel).contains(dict((OElement.basis(m) * X12).terms))


@pytest.mark.parametrize("gens", [[X21, X22], [X12], [X11 + X12]])
def test_takeuchi_ideal_in_kernel_of_counit(gens):
    for x in takeuchi_quotient_ideal(gens, 2):
        assert o_counit(x) == 0


def test_vocke_catalog_and_constraint():
    cat = vocke_catalog(j=3, lam=0, lam_prime=0)
    assert len(cat) == 11
    assert all(p.check(2).passed for p in cat)
    f_only = [p for p in cat if p.label == "{F + lambda' K^-1}"][0]
    assert f_only.generators == (F,)
    with pytest.raises(ValueError):
        constrained_pair(1, 1)
    p = constrained_pair(Q, VOCKE_CONSTRAINT / Q)
    assert p.params["lambda"] == Q
    assert "lambda" in p.render()
    assert VOCKE_CONSTRAINT == parse_u("q^2").terms[PBW(0, 0, 0)] / ((ONE - Q * Q) * (Q - qi))
