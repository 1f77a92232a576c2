"""Exact verification of the cyclic sieving phenomenon for non-crossing
forests on a circle: enumeration, q-analogues evaluated in cyclotomic
quotient rings, and the structural bijections behind the fixed-point
counts. Everything is exact integer arithmetic; no floats anywhere."""

__version__ = "0.1.0"

from .bijections import (
    BijectionError,
    Mark,
    TreeExtent,
    VertexClass,
    all_marks,
    classify_vertices,
    construct_diameter,
    construct_periodic,
    decompose_diameter,
    decompose_periodic,
    tree_extents,
)
from .enumeration import (
    count_forests,
    count_invariant,
    divisors,
    enumerate_forests,
    enumerate_invariant,
    invariant_counts,
)
from .forest import NonCrossingForest, chord, crosses, distance, rotate_label
from .qpoly import (
    CyclotomicResidue,
    ExactDivisionError,
    QIntRootCheck,
    QPoly,
    cyclotomic,
    eval_at_root,
    forest_count,
    forest_count_poly,
    is_symmetric,
    is_unimodal,
    q_binomial,
    q_factorial,
    q_int,
    q_int_root_check,
    q_lucas,
)
from .sieving import (
    CspReport,
    CspRow,
    check_fixed_count_identity,
    closed_form_eval,
    fixed_count_bijection,
    fixed_count_brute,
    poly_eval,
    verify_csp,
)

__all__ = [
    "BijectionError",
    "CspReport",
    "CspRow",
    "CyclotomicResidue",
    "ExactDivisionError",
    "Mark",
    "NonCrossingForest",
    "QIntRootCheck",
    "QPoly",
    "TreeExtent",
    "VertexClass",
    "all_marks",
    "check_fixed_count_identity",
    "chord",
    "classify_vertices",
    "closed_form_eval",
    "construct_diameter",
    "construct_periodic",
    "count_forests",
    "count_invariant",
    "crosses",
    "cyclotomic",
    "decompose_diameter",
    "decompose_periodic",
    "distance",
    "divisors",
    "enumerate_forests",
    "enumerate_invariant",
    "eval_at_root",
    "fixed_count_bijection",
    "fixed_count_brute",
    "forest_count",
    "forest_count_poly",
    "invariant_counts",
    "is_symmetric",
    "is_unimodal",
    "poly_eval",
    "q_binomial",
    "q_factorial",
    "q_int",
    "q_int_root_check",
    "q_lucas",
    "rotate_label",
    "tree_extents",
    "verify_csp",
]
