"""Cyclic codes over the matrix ring M2(F2) of odd length, computed exactly."""

from ._engine import BudgetExceeded
from .acode import ACyclicCode, AuditReport, TripleError, audit_claims
from .algebra import AElem, a_conj, a_mul, bachoc_weight, format_a, parse_a
from .bachoc import (
    BachocEnumerator,
    bachoc_image,
    bachoc_map,
    bachoc_weight_enumerator,
    bwe_macwilliams,
    doubled_cyclic_image,
)
from .classify import SelfDualClass, compare_with_paper, enumerate_selfdual, table_row
from .factor import (
    Factorization,
    LengthError,
    cyclotomic_cosets,
    factorize_xn_minus_1,
    selfdual_exists,
)
from .poly import PolyF4, PolyError, PolySyntaxError, parse_poly, print_poly
from .qcode import (
    LinearCodeQ,
    QCyclicCode,
    WeightEnumerator,
    macwilliams_transform,
    min_distance,
    weight_enumerator,
)

__version__ = "0.1.0"

__all__ = [
    "ACyclicCode", "AElem", "AuditReport", "BachocEnumerator", "BudgetExceeded", "Factorization",
    "LengthError", "LinearCodeQ", "PolyError", "PolyF4", "PolySyntaxError", "QCyclicCode",
    "SelfDualClass", "TripleError", "WeightEnumerator", "a_conj", "a_mul", "audit_claims",
    "bachoc_image", "bachoc_map", "bachoc_weight", "bachoc_weight_enumerator", "bwe_macwilliams",
    "compare_with_paper", "cyclotomic_cosets", "doubled_cyclic_image", "enumerate_selfdual",
    "factorize_xn_minus_1", "format_a", "macwilliams_transform", "min_distance", "parse_a",
    "parse_poly", "print_poly", "selfdual_exists", "table_row", "weight_enumerator",
]
