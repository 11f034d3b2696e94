"""Structure of subgroups <X, T_a> of two-generator Dehn twist groups.

X is (T_aT_b)^k or (T_bT_a)^k; the classification depends only on k and
the geometric intersection number i(a,b) (plus a torus flag at i = 1).
"""

from .algebra import INFINITE, IntMat2, LaurentMat2, LaurentPoly, lattice_index
from .classify import (
    GroupClass,
    Relation,
    Verdict,
    certify,
    classify,
    conjugation_class,
    generation_witness,
    substitute_witness,
    verify_relations,
)
from .reps import (
    SurfaceContext,
    equal_in_context,
    eval_burau,
    eval_sl2,
    exponent_vector,
    order_of,
)
from .stallings import StallingsGraph, build_subgroup_graph
from .torus import CurveClass, intersection, twist_action, twist_matrix
from .words import (
    TwistWord,
    XSpec,
    concat,
    expand_xform,
    free_reduce,
    invert,
    parse_word,
    print_word,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "IntMat2",
    "LaurentMat2",
    "LaurentPoly",
    "lattice_index",
    "GroupClass",
    "Relation",
    "Verdict",
    "certify",
    "classify",
    "conjugation_class",
    "generation_witness",
    "substitute_witness",
    "verify_relations",
    "SurfaceContext",
    "equal_in_context",
    "eval_burau",
    "eval_sl2",
    "exponent_vector",
    "order_of",
    "StallingsGraph",
    "build_subgroup_graph",
    "CurveClass",
    "intersection",
    "twist_action",
    "twist_matrix",
    "TwistWord",
    "XSpec",
    "concat",
    "expand_xform",
    "free_reduce",
    "invert",
    "parse_word",
    "print_word",
]
