"""Quasitrivial semigroups on finite sets.

Construction via the weak-ordering factorization, exact classification of
Cayley tables, deterministic enumeration of every counted family, and exact
integer sequences with mutually cross-checking derivations.
"""

from .errors import CapacityError, ConsistencyError, DecompositionError, ParseError
from .magmas import (
    FiniteBinOp,
    annihilator_elements,
    degree_sequence,
    f_degree,
    graphical_quasitriviality_test,
    is_associative,
    is_commutative,
    is_idempotent,
    is_order_preserving,
    is_quasitrivial,
    neutral_elements,
    rectangle_associativity_test,
)
from .orders import (
    PatternFlags,
    TotalOrder,
    WeakOrder,
    is_convex,
    is_single_peaked,
    is_weakly_single_peaked,
    is_valley_free,
    lower_sets_convex,
    plateaus,
    plateaus_are_minimal,
    profile_patterns,
    strict_convex_hull,
)
from .structure import (
    ClassificationReport,
    KimuraDecomposition,
    build,
    classify,
    commutative_characterization,
    decompose,
    exists_monotonizing_order,
    induced_weak_order,
    weak_order_from_degrees,
)

__all__ = [
    "CapacityError",
    "ClassificationReport",
    "ConsistencyError",
    "DecompositionError",
    "FiniteBinOp",
    "KimuraDecomposition",
    "ParseError",
    "PatternFlags",
    "TotalOrder",
    "WeakOrder",
    "annihilator_elements",
    "build",
    "classify",
    "commutative_characterization",
    "decompose",
    "degree_sequence",
    "exists_monotonizing_order",
    "f_degree",
    "graphical_quasitriviality_test",
    "induced_weak_order",
    "is_associative",
    "is_commutative",
    "is_convex",
    "is_idempotent",
    "is_order_preserving",
    "is_quasitrivial",
    "is_single_peaked",
    "is_valley_free",
    "is_weakly_single_peaked",
    "lower_sets_convex",
    "neutral_elements",
    "plateaus",
    "plateaus_are_minimal",
    "profile_patterns",
    "rectangle_associativity_test",
    "strict_convex_hull",
    "weak_order_from_degrees",
]

__version__ = "0.1.0"
