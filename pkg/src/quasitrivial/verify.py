"""Self-checks wiring the whole package together.

`quick` cross-checks every sequence derivation against the others and against
direct enumeration for small n, plus published reference values.  `full` adds
the raw brute-force searches and the exhaustive structural equivalences.
Failures name the sequence and index (or the offending object) so a single
tampered constant is pinpointed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from . import counting, oracle
from .enumeration import FamilySpec, count, kimura_decompositions, total_orders, weak_orders
from .errors import CapacityError, ConsistencyError
from .magmas import (
    FiniteBinOp,
    graphical_quasitriviality_test,
    is_associative,
    is_order_preserving,
    is_quasitrivial,
    rectangle_associativity_test,
)
from .orders import TotalOrder, is_single_peaked, is_weakly_single_peaked, profile_patterns
from .structure import build, decompose

# Family + filters that realize each sequence as a direct enumeration.
SEQUENCE_SPECS: dict[str, tuple[str, frozenset[str]]] = {
    "q": ("qt-semigroups", frozenset()),
    "q_e": ("qt-semigroups", frozenset({"neutral"})),
    "q_a": ("qt-semigroups", frozenset({"annihilator"})),
    "q_ea": ("qt-semigroups", frozenset({"neutral-and-annihilator-distinct"})),
    "v": ("qt-semigroups", frozenset({"monotone-for-reference"})),
    "v_e": ("qt-semigroups", frozenset({"monotone-for-reference", "neutral"})),
    "v_a": ("qt-semigroups", frozenset({"monotone-for-reference", "annihilator"})),
    "v_ea": (
        "qt-semigroups",
        frozenset({"monotone-for-reference", "neutral-and-annihilator-distinct"}),
    ),
    "u": ("weakly-single-peaked-weak-orders", frozenset()),
    "u_e": ("weakly-single-peaked-weak-orders", frozenset({"unique-min"})),
    "u_a": ("weakly-single-peaked-weak-orders", frozenset({"unique-max"})),
    "u_ea": ("weakly-single-peaked-weak-orders", frozenset({"unique-min-and-max-distinct"})),
    "p": ("weak-orders", frozenset()),
    "sp": ("single-peaked-total-orders", frozenset()),
    "comm": ("qt-semigroups", frozenset({"commutative"})),
}

# Published values (see the OEIS ids in `counting.OEIS_IDS`) pinning n = 6.
REFERENCE_VALUES = {
    ("q", 6): 12166,
    ("q_e", 6): 7092,
    ("q_a", 6): 7092,
    ("q_ea", 6): 4140,
    ("p", 6): 4683,
    ("u", 6): 119,
    ("u_e", 6): 70,
    ("u_a", 6): 98,
    ("u_ea", 6): 58,
    ("v", 6): 258,
    ("v_e", 6): 120,
    ("v_a", 6): 188,
    ("v_ea", 6): 88,
    ("sp", 6): 32,
    ("comm", 6): 720,
}


# First index at which the definitional enumeration matches the sequence.
# The n = 0 terms (except p) are conventions with no population behind them.
# u_a(1) and v_a(1) are likewise pinned to 0 by their shift formulas
# (2 u(0) resp. 2 v(0)) even though the one object on a singleton set does
# have a unique maximum / an annihilator, so their enumerations start at 2.
ENUMERATION_START = {"p": 0, "u_a": 2, "v_a": 2}


def count_by_enumeration(name: str, n: int) -> int:
    """The sequence value by direct generation and filtering.

    Convention-valued terms (see ENUMERATION_START) raise CapacityError: the
    definitional count would disagree with the published convention there.
    """
    family, filters = SEQUENCE_SPECS[name]
    if n < ENUMERATION_START.get(name, 1):
        raise CapacityError(f"{name}({n}) is a convention, not an enumeration")
    return count(FamilySpec(family, n, filters))


class CheckFailure(Exception):
    pass


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _check_method_agreement() -> str:
    for name in counting.SEQUENCE_NAMES:
        table = counting.SequenceTable(name)
        for n in range(7):
            for method, fn in counting.METHODS[name].items():
                if name in ("sp", "comm") and n == 0:
                    continue
                try:
                    table.record(n, fn(n), method)
                except ConsistencyError as exc:
                    raise CheckFailure(str(exc)) from None
    return "all derivations of every sequence agree for n <= 6"


def _check_reference_values() -> str:
    for (name, n), expected in REFERENCE_VALUES.items():
        got = counting.sequence_value(name, n)
        if got != expected:
            raise CheckFailure(f"{name}({n}) = {got}, published value is {expected}")
    return f"{len(REFERENCE_VALUES)} published values reproduced"


def _check_enumeration_agreement() -> str:
    for name in SEQUENCE_SPECS:
        for n in range(ENUMERATION_START.get(name, 1), 6):
            formula = counting.sequence_value(name, n)
            enumerated = count_by_enumeration(name, n)
            if formula != enumerated:
                raise CheckFailure(
                    f"{name}({n}): formula gives {formula}, enumeration gives {enumerated}"
                )
    return "formulas match direct enumeration for every sequence, n <= 5"


def _check_oracle_counts() -> str:
    for n in range(1, 6):
        brute = oracle.brute_count_quasitrivial_associative(n)
        expected = counting.q_recurrence(n)
        if brute != expected:
            raise CheckFailure(f"raw search gives q({n}) = {brute}, expected {expected}")
    return "raw table search reproduces q(n) for n <= 5 (q(5) oracle = 1182)"


def _check_lemma_searches() -> str:
    ok, witness = oracle.check_neutral_monotone_implies_quasitrivial(3)
    if not ok:
        raise CheckFailure(f"neutral+monotone counterexample:\n{witness}")
    ok, witness = oracle.check_commutative_monotone_implies_associative(5)
    if not ok:
        raise CheckFailure(f"commutative+monotone counterexample:\n{witness}")
    return "both implication searches exhausted without counterexample"


def _check_monotonizable_counts() -> str:
    expected = {1: 1, 2: 4, 3: 20, 4: 130}
    for n, want in expected.items():
        got = oracle.brute_count_monotonizable(n)
        if got != want:
            raise CheckFailure(f"monotonizable count at n={n} is {got}, expected {want}")
    return "operations monotone for some ordering: 1, 4, 20, 130"


def _check_roundtrip() -> str:
    total = 0
    for n in range(1, 6):
        for d in kimura_decompositions(n):
            f = build(d)
            if decompose(f) != d or build(decompose(f)) != f:
                raise CheckFailure(f"roundtrip failed for {d}")
            total += 1
    return f"build/decompose roundtrip exact on {total} decompositions (n <= 5)"


def _check_peakedness_theorem() -> str:
    checked = 0
    for n in range(1, 7):
        ref = TotalOrder.natural(n)
        for w in weak_orders(n):
            if is_weakly_single_peaked(ref, w) != profile_patterns(ref, w).all_free():
                raise CheckFailure(f"pattern characterization fails for {w}")
            checked += 1
    return f"weak single-peakedness matches V/L/reversed-L freeness on {checked} orderings"


def _check_monotone_equivalence() -> str:
    for n in range(1, 6):
        ref = TotalOrder.natural(n)
        for d in kimura_decompositions(n):
            f = build(d)
            if is_order_preserving(f, ref) != is_weakly_single_peaked(ref, d.order):
                raise CheckFailure(f"monotonicity mismatch for {d}")
    return "order-preservation matches weak single-peakedness on all operations, n <= 5"


def _all_tables(n: int) -> Iterator[FiniteBinOp]:
    cells = n * n
    for values in product(range(1, n + 1), repeat=cells):
        yield FiniteBinOp(tuple(values[i * n : (i + 1) * n] for i in range(n)))


def _check_graphical_tests() -> str:
    for n in range(1, 4):
        for f in _all_tables(n):
            if graphical_quasitriviality_test(f) != is_quasitrivial(f):
                raise CheckFailure(f"connectivity quasitriviality test fails on {f.rows}")
    for n in range(1, 5):
        pairs = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1) if x != y]
        for bits in product((0, 1), repeat=len(pairs)):
            rows = [[x if x == y else 0 for y in range(1, n + 1)] for x in range(1, n + 1)]
            for (x, y), b in zip(pairs, bits):
                rows[x - 1][y - 1] = y if b else x
            f = FiniteBinOp(tuple(tuple(r) for r in rows))
            if rectangle_associativity_test(f) != is_associative(f):
                raise CheckFailure(f"rectangle associativity test fails on {f.rows}")
    return "both connectivity tests match the definitional predicates (n <= 3 / n <= 4)"


def _check_theorem_counts() -> str:
    for n in range(1, 7):
        spec = FamilySpec("qt-semigroups", n, frozenset({"commutative"}))
        if count(spec) != counting.commutative_count(n):
            raise CheckFailure(f"commutative count at n={n} differs from n!")
    for n in range(1, 9):
        ref = TotalOrder.natural(n)
        got = sum(
            1
            for t in total_orders(n)
            if is_order_preserving(FiniteBinOp.max_under(t), ref)
        )
        if got != counting.single_peaked_count(n):
            raise CheckFailure(f"order-preserving commutative count at n={n} is {got}")
        sp = sum(1 for t in total_orders(n) if is_single_peaked(ref, t))
        if sp != counting.single_peaked_count(n):
            raise CheckFailure(f"single-peaked count at n={n} is {sp}")
    return "commutative counts equal n! (n <= 6); order-preserving ones equal 2^(n-1) (n <= 8)"


QUICK_CHECKS: tuple[tuple[str, Callable[[], str]], ...] = (
    ("method-agreement", _check_method_agreement),
    ("published-values", _check_reference_values),
    ("enumeration-agreement", _check_enumeration_agreement),
)

FULL_CHECKS: tuple[tuple[str, Callable[[], str]], ...] = QUICK_CHECKS + (
    ("oracle-counts", _check_oracle_counts),
    ("implication-searches", _check_lemma_searches),
    ("monotonizable-counts", _check_monotonizable_counts),
    ("factorization-roundtrip", _check_roundtrip),
    ("peakedness-pattern-theorem", _check_peakedness_theorem),
    ("monotone-equivalence", _check_monotone_equivalence),
    ("connectivity-tests", _check_graphical_tests),
    ("theorem-counts", _check_theorem_counts),
)


def run_checks(level: str = "quick") -> list[CheckResult]:
    if level not in ("quick", "full"):
        raise ValueError(f"unknown verification level {level!r}")
    checks = QUICK_CHECKS if level == "quick" else FULL_CHECKS
    results = []
    for name, fn in checks:
        try:
            results.append(CheckResult(name, True, fn()))
        except CheckFailure as exc:
            results.append(CheckResult(name, False, str(exc)))
    return results
