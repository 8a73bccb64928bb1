"""Canonical form of associative quasitrivial operations.

Every such operation factors uniquely as: take a weak ordering, let the
strictly larger argument win across distinct classes, and fix one projection
(left or right) inside each class of size >= 2.  `build` goes from the
factored form to the table, `decompose` recovers it, and the two are mutually
inverse bijections.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Mapping

from .errors import CapacityError, ConsistencyError, DecompositionError
from .magmas import (
    FiniteBinOp,
    annihilator_elements,
    degree_sequence,
    f_degree,
    is_associative,
    is_commutative,
    is_idempotent,
    is_order_preserving,
    is_quasitrivial,
    neutral_elements,
)
from .orders import TotalOrder, WeakOrder, is_weakly_single_peaked

MONOTONE_SEARCH_MAX_N = 8

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class KimuraDecomposition:
    """A weak ordering plus a projection side for each class of size >= 2.

    `choices` holds (class rank, side) pairs in increasing rank order, with
    exactly one entry per class of size >= 2 and none for singletons.
    """

    order: WeakOrder
    choices: tuple[tuple[int, str], ...]

    def __post_init__(self):
        choices = tuple((int(r), s) for r, s in self.choices)
        object.__setattr__(self, "choices", choices)
        big = [r for r, block in enumerate(self.order.classes(), start=1) if len(block) >= 2]
        if [r for r, _ in choices] != big:
            raise ValueError(f"choices must cover exactly the class ranks {big}")
        for _, side in choices:
            if side not in (LEFT, RIGHT):
                raise ValueError(f"invalid projection side {side!r}")

    @classmethod
    def make(cls, order: WeakOrder, sides: Mapping[int, str]) -> "KimuraDecomposition":
        return cls(order, tuple(sorted(sides.items())))

    def side_for(self, rank: int) -> str:
        for r, side in self.choices:
            if r == rank:
                return side
        raise KeyError(rank)


def build(d: KimuraDecomposition, minimum: bool = False) -> FiniteBinOp:
    """The table of a decomposition: across distinct classes the strictly
    larger argument wins, inside a class the chosen projection applies.

    With ``minimum=True`` the strictly smaller argument wins instead; applied
    to the inverse ordering this reproduces the same table.
    """
    ranks = d.order.ranks
    side = dict(d.choices)
    n = d.order.n
    rows = []
    for x in range(1, n + 1):
        rx = ranks[x - 1]
        row = []
        for y in range(1, n + 1):
            ry = ranks[y - 1]
            if rx == ry:
                if x == y:
                    row.append(x)
                else:
                    row.append(x if side[rx] == LEFT else y)
            elif (rx > ry) != minimum:
                row.append(x)
            else:
                row.append(y)
        rows.append(tuple(row))
    return FiniteBinOp(tuple(rows))


def _require_decomposable(f: FiniteBinOp) -> None:
    if not is_quasitrivial(f):
        raise DecompositionError("not quasitrivial")
    if not is_associative(f):
        raise DecompositionError("not associative")


def _ranks_from_levels(levels: list[int]) -> WeakOrder:
    order = {v: i for i, v in enumerate(sorted(set(levels)), start=1)}
    return WeakOrder(tuple(order[v] for v in levels))


def induced_weak_order(f: FiniteBinOp) -> WeakOrder:
    """The unique weak ordering of the factorization, read off pairwise:
    x is weakly below y iff F(x,y) = y or F(y,x) = y."""
    _require_decomposable(f)
    n = f.n
    below = [0] * n
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            le_xy = f(x, y) == y or f(y, x) == y
            le_yx = f(y, x) == x or f(x, y) == x
            if le_xy and not le_yx:
                below[y - 1] += 1
            elif le_yx and not le_xy:
                below[x - 1] += 1
    return _ranks_from_levels(below)


def weak_order_from_degrees(f: FiniteBinOp) -> WeakOrder:
    """The same weak ordering recovered by sorting degrees nondecreasingly."""
    _require_decomposable(f)
    return _ranks_from_levels([f_degree(f, z) for z in range(1, f.n + 1)])


def decompose(f: FiniteBinOp) -> KimuraDecomposition:
    """Recover the factored form; `build(decompose(f))` equals f exactly.

    The ordering is derived pairwise and cross-validated against the degree
    route; a mismatch can only indicate a bug and raises ConsistencyError.
    """
    order = induced_weak_order(f)
    if order != weak_order_from_degrees(f):
        raise ConsistencyError("pairwise and degree-based orderings disagree")
    sides = {}
    for rank, block in enumerate(order.classes(), start=1):
        if len(block) < 2:
            continue
        members = sorted(block)
        a, b = members[0], members[1]
        side = LEFT if f(a, b) == a else RIGHT
        for u in members:
            for v in members:
                if u != v and f(u, v) != (u if side == LEFT else v):
                    raise ConsistencyError(
                        f"class {members} is not a projection on all pairs"
                    )
        sides[rank] = side
    return KimuraDecomposition.make(order, sides)


def commutative_characterization(f: FiniteBinOp) -> TotalOrder | None:
    """The total ordering whose maximum operation equals f, if one exists.

    Two routes are computed and must agree: (1) f is associative,
    quasitrivial, and commutative, with the ordering read from the
    factorization; (2) f is quasitrivial with degree sequence
    (0, 2, ..., 2n-2), with the ordering read from the degrees.
    """
    n = f.n
    via_structure = None
    if is_quasitrivial(f) and is_commutative(f) and is_associative(f):
        order = induced_weak_order(f)
        if not order.is_total():
            raise ConsistencyError("commutative factorization has a fat class")
        via_structure = order.to_total()
    via_degrees = None
    if is_quasitrivial(f) and degree_sequence(f) == tuple(range(0, 2 * n, 2)):
        degrees = [f_degree(f, z) for z in range(1, n + 1)]
        via_degrees = _ranks_from_levels(degrees).to_total()
    if via_structure != via_degrees:
        raise ConsistencyError("structure and degree characterizations disagree")
    return via_structure


def monotonizing_orders(f: FiniteBinOp) -> Iterator[TotalOrder]:
    """All total orderings t with f order-preserving for t, in lexicographic
    order of the element listing.  Plain factorial search, capacity-limited."""
    n = f.n
    if n > MONOTONE_SEARCH_MAX_N:
        raise CapacityError(
            f"monotonizing-order search is limited to n <= {MONOTONE_SEARCH_MAX_N}"
        )
    for elems in permutations(range(1, n + 1)):
        t = TotalOrder.from_ordered_elements(elems)
        if is_order_preserving(f, t):
            yield t


def exists_monotonizing_order(f: FiniteBinOp) -> TotalOrder | None:
    """Some ordering for which f is order-preserving, or None."""
    return next(monotonizing_orders(f), None)


@dataclass(frozen=True)
class ClassificationReport:
    """Everything this package can say about one operation at a glance."""

    n: int
    associative: bool
    quasitrivial: bool
    commutative: bool
    idempotent: bool
    neutral: frozenset[int]
    annihilator: frozenset[int]
    degree_sequence: tuple[int, ...]
    decomposition: KimuraDecomposition | None
    max_of_total_order: TotalOrder | None
    order_preserving_for_reference: bool
    weakly_single_peaked_for_reference: bool | None
    monotone_for: tuple[TotalOrder, ...]
    monotone_for_truncated: bool


def classify(
    f: FiniteBinOp,
    reference: TotalOrder | None = None,
    monotone_limit: int = 24,
) -> ClassificationReport:
    """Populate a ClassificationReport against a reference ordering.

    The monotonizing-order list is truncated at `monotone_limit` entries, and
    skipped entirely (marked truncated) above the factorial-search capacity.
    """
    n = f.n
    reference = reference or TotalOrder.natural(n)
    if reference.n != n:
        raise ValueError("reference ordering has the wrong cardinality")
    associative = is_associative(f)
    quasitrivial = is_quasitrivial(f)
    decomposition = decompose(f) if associative and quasitrivial else None
    wsp = None
    if decomposition is not None:
        wsp = is_weakly_single_peaked(reference, decomposition.order)
    monotone = []
    truncated = False
    if n <= MONOTONE_SEARCH_MAX_N:
        for t in monotonizing_orders(f):
            if len(monotone) >= monotone_limit:
                truncated = True
                break
            monotone.append(t)
    else:
        truncated = True
    return ClassificationReport(
        n=n,
        associative=associative,
        quasitrivial=quasitrivial,
        commutative=is_commutative(f),
        idempotent=is_idempotent(f),
        neutral=neutral_elements(f),
        annihilator=annihilator_elements(f),
        degree_sequence=degree_sequence(f),
        decomposition=decomposition,
        max_of_total_order=commutative_characterization(f),
        order_preserving_for_reference=is_order_preserving(f, reference),
        weakly_single_peaked_for_reference=wsp,
        monotone_for=tuple(monotone),
        monotone_for_truncated=truncated,
    )
