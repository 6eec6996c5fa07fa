"""Exact computations in U_q(sl2), O_q(SL2) and Kashiwara crystals."""

from .crystal import (
    NEG_INF,
    SL2,
    CartanDatum,
    Crystal,
    b_infinity_truncated,
    b_n,
    components,
    crystal_of_invariants,
    disjoint_union,
    dual,
    highest_weights,
    is_crystal_isomorphism,
    is_crystal_morphism,
    t_lambda,
    tensor,
    to_dot,
    to_json,
    from_json,
    validate_crystal,
)
from .oqsl2 import X11, X12, X21, X22, OElement, o_antipode, o_check_hopf_axioms, o_coproduct, o_counit, parse_o
from .pairing import (
    CoidealPresentation,
    invariants,
    left_action,
    pair,
    pairing_table,
    right_action,
    takeuchi_quotient_ideal,
    verify_right_coideal,
    vocke_catalog,
)
from .parsing import ParseError, parse_scalar
from .qscalar import ONE, Q, ZERO, PoleError, QPoly, QScalar, q_binomial, q_factorial, q_int
from .repmod import (
    CoordinateFunction,
    ModuleRep,
    act,
    build_module,
    coordinate_function_pair,
    crystal_from_module,
    tensor_module,
    verify_relations,
)
from .report import Report
from .uqsl2 import (
    E,
    F,
    K,
    K_INV,
    L,
    CartanMatrix,
    UElement,
    antipode,
    check_hopf_axioms,
    coproduct,
    counit,
    parse_u,
    serre_relations,
    uprime_relations_check,
)

__version__ = "0.1.0"
