"""Exhaustive, deterministic generators for the counted object families.

Generation order is part of the contract: weak orderings stream in
lexicographic rank-vector order; the projection choices of an operation
stream by binary counting (left before right, the bottom-most fat class
being the most significant digit).  Streams are plain generators, restartable
by calling the function again.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterator

from .errors import CapacityError
from .magmas import (
    FiniteBinOp,
    annihilator_elements,
    is_commutative,
    is_order_preserving,
    neutral_elements,
)
from .orders import TotalOrder, WeakOrder, is_single_peaked, is_weakly_single_peaked
from .structure import LEFT, RIGHT, KimuraDecomposition, build

WEAK_ORDER_MAX_N = 10
TOTAL_ORDER_MAX_N = 10
QT_SEMIGROUP_MAX_N = 9

ORDER_FAMILIES = (
    "total-orders",
    "weak-orders",
    "single-peaked-total-orders",
    "weakly-single-peaked-weak-orders",
)
OPERATION_FAMILIES = ("qt-semigroups",)
FAMILIES = ORDER_FAMILIES + OPERATION_FAMILIES

ORDER_FILTERS = frozenset({"unique-min", "unique-max", "unique-min-and-max-distinct"})
OPERATION_FILTERS = frozenset(
    {
        "neutral",
        "annihilator",
        "neutral-and-annihilator-distinct",
        "commutative",
        "monotone-for-reference",
    }
)


@dataclass(frozen=True)
class FamilySpec:
    """Names one of the enumerable populations, plus optional filters."""

    family: str
    n: int
    filters: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "filters", frozenset(self.filters))
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        allowed = ORDER_FILTERS if self.family in ORDER_FAMILIES else OPERATION_FILTERS
        bad = self.filters - allowed
        if bad:
            raise ValueError(f"filters {sorted(bad)} do not apply to {self.family}")
        if self.n < 0:
            raise ValueError("n must be nonnegative")


def rank_vectors(n: int) -> Iterator[tuple[int, ...]]:
    """All surjective rank vectors on {1..n}, in lexicographic order.

    A prefix is viable iff the ranks skipped so far can still be filled by
    the remaining positions; the search never expands a dead prefix.
    """
    if n == 0:
        yield ()
        return
    vec = [0] * n
    counts = [0] * (n + 1)

    def walk(i: int, top: int, missing: int) -> Iterator[tuple[int, ...]]:
        slots = n - i - 1
        hi = min(n, top + (n - i) - missing)
        for r in range(1, hi + 1):
            if r <= top:
                gap = missing - (1 if counts[r] == 0 else 0)
                new_top = top
            else:
                gap = missing + (r - top - 1)
                new_top = r
            if gap > slots:
                continue
            vec[i] = r
            counts[r] += 1
            if slots == 0:
                yield tuple(vec)
            else:
                yield from walk(i + 1, new_top, gap)
            counts[r] -= 1

    yield from walk(0, 0, 0)


def weak_orders(n: int) -> Iterator[WeakOrder]:
    """All weak orderings of {1..n} in lexicographic rank-vector order."""
    if n > WEAK_ORDER_MAX_N:
        raise CapacityError(f"weak-order enumeration is limited to n <= {WEAK_ORDER_MAX_N}")
    return (WeakOrder(vec) for vec in rank_vectors(n))


def ordered_set_partitions(n: int) -> Iterator[WeakOrder]:
    """All ordered partitions of {1..n}, i.e. the weak orderings."""
    return weak_orders(n)


def total_orders(n: int) -> Iterator[TotalOrder]:
    """All total orderings of {1..n} in lexicographic rank-vector order."""
    if n > TOTAL_ORDER_MAX_N:
        raise CapacityError(f"total-order enumeration is limited to n <= {TOTAL_ORDER_MAX_N}")
    if n == 0:
        raise CapacityError("total orders need n >= 1")
    return (TotalOrder(vec) for vec in permutations(range(1, n + 1)))


def kimura_decompositions(n: int) -> Iterator[KimuraDecomposition]:
    """All factored forms on {1..n}: weak orderings in lexicographic order,
    within one ordering the projection choices counted in binary with left
    before right (bottom-most fat class most significant)."""
    if n > QT_SEMIGROUP_MAX_N:
        raise CapacityError(
            f"operation enumeration is limited to n <= {QT_SEMIGROUP_MAX_N}"
        )
    if n == 0:
        raise CapacityError("operation enumeration needs n >= 1")
    return _kimura_decompositions(n)


def _kimura_decompositions(n: int) -> Iterator[KimuraDecomposition]:
    for order in weak_orders(n):
        fat = [r for r, block in enumerate(order.classes(), start=1) if len(block) >= 2]
        m = len(fat)
        for bits in range(1 << m):
            choices = tuple(
                (rank, RIGHT if (bits >> (m - 1 - j)) & 1 else LEFT)
                for j, rank in enumerate(fat)
            )
            yield KimuraDecomposition(order, choices)


def qt_semigroups(n: int) -> Iterator[FiniteBinOp]:
    """All associative quasitrivial operations on {1..n}, built structurally
    (never by filtering raw tables; that route lives in the oracle module)."""
    return (build(d) for d in kimura_decompositions(n))


def _passes(obj, name: str, reference: TotalOrder) -> bool:
    if name == "unique-min":
        return len(obj.minimal_elements()) == 1
    if name == "unique-max":
        return len(obj.maximal_elements()) == 1
    if name == "unique-min-and-max-distinct":
        lo, hi = obj.minimal_elements(), obj.maximal_elements()
        return len(lo) == 1 and len(hi) == 1 and lo != hi
    if name == "neutral":
        return bool(neutral_elements(obj))
    if name == "annihilator":
        return bool(annihilator_elements(obj))
    if name == "neutral-and-annihilator-distinct":
        e, a = neutral_elements(obj), annihilator_elements(obj)
        return bool(e) and bool(a) and e.isdisjoint(a)
    if name == "commutative":
        return is_commutative(obj)
    if name == "monotone-for-reference":
        return is_order_preserving(obj, reference)
    raise ValueError(f"unknown filter {name!r}")


def generate(spec: FamilySpec, shard_index: int = 0, shard_count: int = 1):
    """Stream the family named by `spec`, each qualifying object exactly once.

    Sharding slices the unfiltered base stream round-robin by index, so the
    union of all shards equals the serial stream regardless of filters.
    """
    if not 0 <= shard_index < shard_count:
        raise ValueError("need 0 <= shard_index < shard_count")
    n = spec.n
    if spec.family == "total-orders":
        base = total_orders(n)
    elif spec.family == "weak-orders":
        base = weak_orders(n)
    elif spec.family == "single-peaked-total-orders":
        ref = TotalOrder.natural(n) if n else None
        base = (t for t in total_orders(n) if is_single_peaked(ref, t))
    elif spec.family == "weakly-single-peaked-weak-orders":
        if n == 0:
            raise CapacityError("peakedness families need n >= 1")
        ref = TotalOrder.natural(n)
        base = (w for w in weak_orders(n) if is_weakly_single_peaked(ref, w))
    else:
        base = qt_semigroups(n)
    reference = TotalOrder.natural(n) if n >= 1 else None
    filters = sorted(spec.filters)

    def stream():
        for i, obj in enumerate(base):
            if i % shard_count != shard_index:
                continue
            if all(_passes(obj, name, reference) for name in filters):
                yield obj

    return stream()


def count(spec: FamilySpec, shard_index: int = 0, shard_count: int = 1) -> int:
    """Exact cardinality of `generate(spec)` (or of one shard of it)."""
    return sum(1 for _ in generate(spec, shard_index, shard_count))
