"""Hypothesis strategies for scalars and algebra elements."""

from hypothesis import strategies as st

from qsl2.oqsl2 import OElement, OMono
from qsl2.qscalar import QPoly, QScalar
from qsl2.uqsl2 import PBW, UElement

small = st.integers(min_value=-4, max_value=4)

laurent = st.dictionaries(st.integers(-3, 3), small, max_size=4).map(QPoly)
nonzero_laurent = laurent.filter(lambda p: not p.is_zero())
scalars = st.builds(QScalar, laurent, nonzero_laurent)
nonzero_scalars = scalars.filter(lambda s: not s.is_zero())
simple_scalars = st.builds(lambda e, c: QScalar.q_power(e, c), st.integers(-2, 2), st.integers(-3, 3))

pbw = st.builds(PBW, st.integers(0, 2), st.integers(-2, 2), st.integers(0, 2))
u_elements = st.lists(st.tuples(pbw, simple_scalars), min_size=1, max_size=3).map(
    lambda ts: sum((UElement.basis(m, c) for m, c in ts), UElement.zero()))


def _omono(x11, x12, x21, x22, flip):
    return OMono(0, x12, x21, x22) if flip else OMono(x11, x12, x21, 0)


omono = st.builds(_omono, st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2),
                  st.booleans())
o_elements = st.lists(st.tuples(omono, simple_scalars), min_size=1, max_size=3).map(
    lambda ts: sum((OElement.basis(m, c) for m, c in ts), OElement.zero()))
