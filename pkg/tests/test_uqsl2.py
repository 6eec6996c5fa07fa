from itertools import product

import pytest
from hypothesis import given

from qsl2.linear import Tensor
from qsl2.parsing import ParseError
from qsl2.qscalar import ONE, Q, QScalar
from qsl2.rewriting import U_SYSTEM, is_u_normal_word, u_word_to_element
from qsl2.uqsl2 import (
    E,
    F,
    K,
    K_INV,
    L,
    PBW,
    UElement,
    _antipode_mono,
    _check_hopf_axioms_with,
    antipode,
    check_hopf_axioms,
    coproduct,
    counit,
    parse_u,
    uprime_relations_check,
)

from strategies import u_elements

qi = Q.inverse()
ONE_U = UElement.one()
LETTER = {"E": E, "F": F, "K": K, "k": K_INV}


def test_defining_relations():
    assert K * K_INV == ONE_U == K_INV * K
    assert K * E * K_INV == E.scale(Q ** 2)
    assert K * F * K_INV == F.scale(Q ** -2)
    assert E * F - F * E == (K - K_INV).scale((Q - qi).inverse())


def test_commutation_of_k_and_e():
    # K E = q^2 E K, equivalently E K = q^-2 K E; K*E is itself a PBW monomial
    assert K * E == (E * K).scale(Q ** 2)
    assert E * K == (K * E).scale(Q ** -2)
    assert (K * E).render() == "K*E"
    assert (E * K).render() == "q^-2*K*E"


def test_render_of_ef():
    assert (E * F).render() == "(q/(-q^2 + 1))*K^-1 + (-q/(-q^2 + 1))*K + F*E"
    assert (K * K_INV).render() == "1"
    assert UElement.zero().render() == "0"


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rewriting_agrees_with_fast_product(n):
    for w in product("EFKk", repeat=n):
        left = U_SYSTEM.reduce(w, "left")
        right = U_SYSTEM.reduce(w, "right")
        assert all(is_u_normal_word(x) for x in left)
        expected = ONE_U
        for x in w:
            expected = expected * LETTER[x]
        assert u_word_to_element(left) == u_word_to_element(right) == expected, w


@given(u_elements, u_elements, u_elements)
def test_associativity_and_distributivity(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


def test_coproduct_values():
    one = ONE_U
    assert coproduct(E) == Tensor.pure(E, one) + Tensor.pure(K, E)
    assert coproduct(F) == Tensor.pure(F, K_INV) + Tensor.pure(one, F)
    assert coproduct(K) == Tensor.pure(K, K)
    ek = E * K_INV
    assert coproduct(ek) == Tensor.pure(ek, K_INV) + Tensor.pure(one, ek)


def test_antipode_values():
    assert antipode(E) == -(K_INV * E)
    assert antipode(F) == -(F * K)
    assert antipode(K) == K_INV
    assert antipode(F).render() == "-F*K"


def test_counit_values():
    assert counit(E) == 0 and counit(F) == 0
    assert counit(K) == 1 and counit(K_INV) == 1
    assert counit(ONE_U.scale(Q)) == Q


@given(u_elements)
def test_antipode_squared_is_conjugation_by_k(x):
    assert antipode(antipode(x)) == K_INV * x * K


@given(u_elements, u_elements)
def test_hopf_maps_respect_products(a, b):
    assert coproduct(a * b) == coproduct(a) * coproduct(b)
    assert counit(a * b) == counit(a) * counit(b)
    assert antipode(a * b) == antipode(b) * antipode(a)


def test_hopf_axioms_on_generators():
    rep = check_hopf_axioms([E, F, K, K_INV, ONE_U])
    assert rep.passed, rep.render()


def test_faulty_antipode_is_detected():
    def bad(m):
        if m == PBW(0, 0, 1):
            return -(E * K_INV)
        return _antipode_mono(m)

    rep = _check_hopf_axioms_with([E, F, K], bad)
    assert not rep.passed
    assert rep.first_failure().witness is not None


def test_uprime_relations():
    rep = uprime_relations_check()
    assert rep.passed and len(rep.checks) == 7


def test_parse_u():
    assert parse_u("E*F - F*E") == L
    assert parse_u("K K^-1") == ONE_U
    assert parse_u("K^(-2)") == K_INV * K_INV
    assert parse_u("q^2 E") == E.scale(Q ** 2)
    assert parse_u("(K - K^-1)/(q - q^-1)") == L
    assert parse_u("2") == ONE_U.scale(QScalar.from_int(2))
    with pytest.raises(ParseError) as err:
        parse_u("E*X")
    assert err.value.position == 2
    with pytest.raises(ParseError):
        parse_u("E^-1")
    with pytest.raises(ParseError):
        parse_u("K/E")
    with pytest.raises(ParseError):
        parse_u("E +")


@given(u_elements)
def test_render_parse_round_trip(x):
    assert parse_u(x.render()) == x
    assert parse_u(parse_u(x.render()).render()).render() == x.render()


def test_monomial_constructor_and_inverse():
    assert UElement.monomial(1, -2, 1) == F * K_INV * K_INV * E
    with pytest.raises(ValueError):
        UElement.monomial(-1, 0, 0)
    assert (K.scale(Q)).inverse() == K_INV.scale(qi)
    assert E.inverse() is None
    assert (E + K).inverse() is None


def test_scalar_coercion():
    assert E * 2 == E + E
    assert (E == 0) is False
    assert ONE_U == 1
    assert E - E == 0
    assert (E ** 0) == ONE_U and E ** 2 == E * E
