from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qsl2 import crystal as cr
from qsl2.qscalar import ONE, ZERO, Q, q_int
from qsl2.repmod import (
    CoordinateFunction,
    Mat,
    act,
    build_module,
    coordinate_function_pair,
    crystal_from_module,
    k_spectrum,
    lattice_data,
    tensor_module,
    v1_power,
    verify_relations,
)
from qsl2.uqsl2 import E, F, K, K_INV, L, UElement

from strategies import simple_scalars, u_elements


def test_trivial_module():
    m = build_module(0)
    assert m.dim == 1
    assert m.matrix(E) == Mat(1) and m.matrix(F) == Mat(1)
    assert m.matrix(K) == Mat.identity(1)


def test_v1():
    m = build_module(1)
    u, fu = [ONE, ZERO], [ZERO, ONE]
    assert act(m, E, fu) == u
    assert act(m, K, u) == [Q, ZERO]
    assert m.k == Mat.diag([Q, Q.inverse()])


def test_v2_weights():
    m = build_module(2)
    assert m.k == Mat.diag([Q ** 2, ONE, Q ** -2])
    assert k_spectrum(m) == [2, 0, -2]


@pytest.mark.parametrize("n", range(9))
def test_relations_and_divided_powers(n):
    m = build_module(n)
    assert verify_relations(m).passed
    # F^k u = [k]! F^(k) u
    v = [ONE] + [ZERO] * n
    fact = ONE
    for k in range(1, n + 1):
        v = act(m, F, v)
        fact = fact * q_int(k)
        assert v[k] == fact and all(x.is_zero() for i, x in enumerate(v) if i != k)
    assert all(x.is_zero() for x in act(m, F, v))


@given(st.lists(simple_scalars, min_size=3, max_size=3))
def test_commutator_acts_as_l(vec):
    m = build_module(2)
    lhs = [a - b for a, b in zip(act(m, E * F, vec), act(m, F * E, vec))]
    assert lhs == act(m, L, vec)


@given(u_elements, u_elements)
def test_action_is_multiplicative(a, b):
    m = build_module(3)
    assert m.matrix(a * b) == m.matrix(a) @ m.matrix(b)


def test_identity_acts_trivially():
    m = build_module(4)
    v = [Q ** k for k in range(5)]
    assert act(m, UElement.one(), v) == v


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        act(build_module(2), K, [ONE, ONE])
    with pytest.raises(ValueError):
        build_module(-1)


def test_tensor_modules_satisfy_relations():
    assert verify_relations(tensor_module(build_module(1), build_module(2))).passed
    assert verify_relations(v1_power(3)).passed
    assert v1_power(3).dim == 8


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (3, 2), (4, 4)])
def test_clebsch_gordan_spectrum(m, n):
    got = Counter(k_spectrum(tensor_module(build_module(m), build_module(n))))
    want = Counter()
    for h in range(abs(m - n), m + n + 1, 2):
        want.update(k_spectrum(build_module(h)))
    assert got == want


def test_coordinate_functions():
    v1 = build_module(1)
    assert coordinate_function_pair(CoordinateFunction(v1, 0, 0), K) == Q
    assert coordinate_function_pair(CoordinateFunction(v1, 0, 1), E) == 1
    assert CoordinateFunction(v1, 1, 0)(F) == 1
    for i in range(2):
        for j in range(2):
            assert CoordinateFunction(v1, i, j)(UElement.one()) == (1 if i == j else 0)
    with pytest.raises(ValueError):
        CoordinateFunction(v1, 2, 0)


@pytest.mark.parametrize("n", range(9))
def test_crystal_from_module(n):
    c = crystal_from_module(n)
    assert c == cr.b_n(n)
    assert cr.validate_crystal(c).passed
    d = lattice_data(n)
    assert d.check()
    assert d.f_map[n] is None and d.e_map[0] is None


def test_crystal_from_module_v2_data():
    c = crystal_from_module(2)
    assert [c.wt[k][0] for k in range(3)] == [2, 0, -2]
    assert [c.eps[k][0] for k in range(3)] == [0, 1, 2]
    assert [c.phi[k][0] for k in range(3)] == [2, 1, 0]
    assert c.edges() == [(0, 1, 0), (1, 2, 0)]


def test_matrix_helpers():
    a = Mat(2, {(0, 1): ONE})
    assert (a @ a) == Mat(2)
    assert a.kron(Mat.identity(2)).dim == 4
    assert a.rows() == [[ZERO, ONE], [ZERO, ZERO]]
    with pytest.raises(ValueError):
        a + Mat(3)
