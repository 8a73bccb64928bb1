"""Shared fixtures: the worked-example Cayley tables used across the suite.

The X4 and X6 tables are transcriptions of known contour-plot examples; each
fixture's defining properties (associativity, quasitriviality, degrees,
ordering, monotonicity) are asserted in the test modules, so a transcription
slip cannot pass silently.
"""

import pytest

from quasitrivial import FiniteBinOp, TotalOrder
from quasitrivial.formats import parse_cayley

# Commutative, associative, quasitrivial, monotone for the natural ordering
# of X6; equals the maximum under 4 < 5 < 3 < 2 < 6 < 1.
X6_COMMUTATIVE = """\
cayley 6
1 1 1 1 1 1
1 2 2 2 2 6
1 2 3 3 3 6
1 2 3 4 5 6
1 2 3 5 5 6
1 6 6 6 6 6
"""

# Associative, idempotent, commutative, monotone, annihilator 2 -- but NOT
# quasitrivial (every mixed pair maps to 2).
X3_NOT_QUASITRIVIAL = """\
cayley 3
1 2 2
2 2 2
2 2 3
"""

# Associative and quasitrivial but monotone for no total ordering at all:
# one element below a three-element class (left projection inside).
X4_NEVER_MONOTONE = """\
cayley 4
1 1 1 1
1 2 3 4
3 3 3 3
4 4 4 4
"""

# The worked X4 example: ordering 2 < 1 ~ 3 < 4 with the right projection
# inside {1, 3}; neutral 2, annihilator 4, degrees (0, 3, 3, 6).
X4_PEAKED = """\
cayley 4
1 1 3 4
1 2 3 4
1 3 3 4
4 4 4 4
"""

# The worked X4 counterexample: ordering 1 < 4 < 2 ~ 3 (right projection
# inside {2, 3}); not monotone for the natural ordering, profile shows all
# three forbidden patterns.
X4_UNPEAKED = """\
cayley 4
1 2 3 4
2 2 3 2
3 2 3 3
4 2 3 4
"""


@pytest.fixture
def x6_commutative() -> FiniteBinOp:
    return parse_cayley(X6_COMMUTATIVE)


@pytest.fixture
def x3_not_quasitrivial() -> FiniteBinOp:
    return parse_cayley(X3_NOT_QUASITRIVIAL)


@pytest.fixture
def x4_never_monotone() -> FiniteBinOp:
    return parse_cayley(X4_NEVER_MONOTONE)


@pytest.fixture
def x4_peaked() -> FiniteBinOp:
    return parse_cayley(X4_PEAKED)


@pytest.fixture
def x4_unpeaked() -> FiniteBinOp:
    return parse_cayley(X4_UNPEAKED)


@pytest.fixture
def x6_single_peaked_max() -> FiniteBinOp:
    # max under 4 < 3 < 5 < 2 < 1 < 6, the single-peaked showcase ordering
    return FiniteBinOp.max_under(TotalOrder.from_ordered_elements([4, 3, 5, 2, 1, 6]))
