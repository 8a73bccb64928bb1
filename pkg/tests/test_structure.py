"""Structure: the factorization bijection, recovery routes, classification."""

import pytest

from quasitrivial import (
    DecompositionError,
    FiniteBinOp,
    KimuraDecomposition,
    TotalOrder,
    WeakOrder,
    build,
    classify,
    commutative_characterization,
    decompose,
    exists_monotonizing_order,
    f_degree,
    induced_weak_order,
    is_associative,
    is_order_preserving,
    is_quasitrivial,
    is_weakly_single_peaked,
    weak_order_from_degrees,
)
from quasitrivial.enumeration import kimura_decompositions, qt_semigroups
from quasitrivial.structure import monotonizing_orders


def decomp(ranks, **sides):
    return KimuraDecomposition.make(
        WeakOrder(tuple(ranks)), {int(k): v for k, v in sides.items()}
    )


class TestDecompositionType:
    def test_requires_choice_per_fat_class_only(self):
        with pytest.raises(ValueError):
            KimuraDecomposition(WeakOrder((1, 1, 2)), ())  # missing choice for {1,2}
        with pytest.raises(ValueError):
            KimuraDecomposition(WeakOrder((1, 2, 3)), ((1, "left"),))  # singleton choice
        with pytest.raises(ValueError):
            KimuraDecomposition(WeakOrder((1, 1)), ((1, "up"),))


class TestBuild:
    def test_worked_example(self, x4_peaked):
        d = decomp((2, 1, 2, 3), **{"2": "right"})
        assert build(d) == x4_peaked

    def test_total_order_gives_max(self):
        d = decomp((1, 2, 3, 4))
        assert build(d) == FiniteBinOp.max_under(TotalOrder.natural(4))

    def test_single_class_left_gives_projection(self):
        d = decomp((1, 1, 1), **{"1": "left"})
        assert build(d) == FiniteBinOp.projection(3, "left")

    def test_always_associative_and_quasitrivial(self):
        for n in range(1, 6):
            for d in kimura_decompositions(n):
                f = build(d)
                assert is_associative(f)
                assert is_quasitrivial(f)

    def test_inverse_order_with_minimum_rebuilds_same_table(self):
        # flipping the ordering and swapping max for min is a pure convention
        for n in range(1, 6):
            for d in kimura_decompositions(n):
                k = d.order.k
                flipped = KimuraDecomposition.make(
                    d.order.inverse(), {k + 1 - r: side for r, side in d.choices}
                )
                assert build(flipped, minimum=True) == build(d)


class TestInducedWeakOrder:
    def test_worked_examples(self, x4_peaked, x6_single_peaked_max):
        assert induced_weak_order(x4_peaked) == WeakOrder((2, 1, 2, 3))
        assert induced_weak_order(x6_single_peaked_max) == WeakOrder((5, 4, 2, 1, 3, 6))

    def test_projection_gives_single_class(self):
        assert induced_weak_order(FiniteBinOp.projection(3, "left")) == WeakOrder((1, 1, 1))

    def test_rejects_non_quasitrivial(self, x3_not_quasitrivial):
        with pytest.raises(DecompositionError, match="not quasitrivial"):
            induced_weak_order(x3_not_quasitrivial)

    def test_rejects_non_associative(self):
        # quasitrivial but not associative: a 3-cycle-ish choice pattern
        f = FiniteBinOp(((1, 1, 3), (2, 2, 2), (3, 3, 3)))
        assert is_quasitrivial(f) and not is_associative(f)
        with pytest.raises(DecompositionError, match="not associative"):
            induced_weak_order(f)


class TestDegreeRecovery:
    def test_worked_examples(self, x4_peaked, x6_single_peaked_max):
        assert weak_order_from_degrees(x4_peaked) == WeakOrder((2, 1, 2, 3))
        assert weak_order_from_degrees(x6_single_peaked_max).to_total().ordered_elements() == (
            4,
            3,
            5,
            2,
            1,
            6,
        )

    def test_right_projection_on_two_elements(self):
        f = FiniteBinOp.projection(2, "right")
        assert [f_degree(f, z) for z in (1, 2)] == [1, 1]
        assert weak_order_from_degrees(f) == WeakOrder((1, 1))

    def test_both_recovery_routes_coincide(self):
        for n in range(1, 6):
            for f in qt_semigroups(n):
                assert induced_weak_order(f) == weak_order_from_degrees(f)

    def test_degree_formula_from_decomposition(self):
        # degree of x = 2 |below x| + |equivalent to x, not x|
        for n in range(1, 6):
            for d in kimura_decompositions(n):
                f = build(d)
                ranks = d.order.ranks
                for x in range(1, n + 1):
                    below = sum(1 for r in ranks if r < ranks[x - 1])
                    peers = sum(1 for r in ranks if r == ranks[x - 1]) - 1
                    assert f_degree(f, x) == 2 * below + peers
                    # second form of the same identity
                    weakly_below = below + peers + 1
                    assert f_degree(f, x) == below + weakly_below - 1


class TestDecompose:
    def test_worked_example(self, x4_peaked):
        d = decompose(x4_peaked)
        assert d.order == WeakOrder((2, 1, 2, 3))
        assert d.choices == ((2, "right"),)

    def test_max_of_chain(self):
        d = decompose(FiniteBinOp.max_under(TotalOrder.natural(3)))
        assert d.order == WeakOrder((1, 2, 3))
        assert d.choices == ()

    def test_roundtrip_both_ways(self):
        for n in range(1, 5):
            for d in kimura_decompositions(n):
                f = build(d)
                back = decompose(f)
                assert back == d
                assert build(back) == f

    def test_roundtrip_on_random_large_instances(self):
        # beyond the exhaustive range: random orderings up to n = 20
        import random

        rng = random.Random(99)
        for _ in range(60):
            n = rng.randint(6, 20)
            k = rng.randint(1, n)
            ranks = list(range(1, k + 1)) + [rng.randint(1, k) for _ in range(n - k)]
            rng.shuffle(ranks)
            order = WeakOrder(tuple(ranks))
            sides = {
                r: rng.choice(["left", "right"])
                for r, block in enumerate(order.classes(), start=1)
                if len(block) >= 2
            }
            d = KimuraDecomposition.make(order, sides)
            assert decompose(build(d)) == d

    def test_neutral_iff_bottom_singleton(self):
        from quasitrivial import annihilator_elements, neutral_elements

        for n in range(1, 5):
            for d in kimura_decompositions(n):
                f = build(d)
                bottom = d.order.minimal_elements()
                top = d.order.maximal_elements()
                if len(bottom) == 1:
                    assert neutral_elements(f) == bottom
                else:
                    assert neutral_elements(f) == frozenset()
                if len(top) == 1:
                    assert annihilator_elements(f) == top
                else:
                    assert annihilator_elements(f) == frozenset()


class TestCommutativeCharacterization:
    def test_showcase(self, x6_single_peaked_max):
        t = commutative_characterization(x6_single_peaked_max)
        assert t is not None
        assert t.ordered_elements() == (4, 3, 5, 2, 1, 6)

    def test_projection_is_not_commutative(self):
        assert commutative_characterization(FiniteBinOp.projection(3, "left")) is None

    def test_peaked_example_has_wrong_degrees(self, x4_peaked):
        assert commutative_characterization(x4_peaked) is None

    def test_degree_route_equals_structural_route_on_quasitrivial_tables(self):
        # commutative + associative <=> degree sequence (0, 2, ..., 2n-2),
        # over every quasitrivial table (not only associative ones)
        from itertools import product

        from quasitrivial import degree_sequence, is_commutative

        for n in range(1, 5):
            pairs = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1) if x != y]
            for bits in product((0, 1), repeat=len(pairs)):
                rows = [[x for _ in range(n)] for x in range(1, n + 1)]
                for (x, y), b in zip(pairs, bits):
                    rows[x - 1][y - 1] = y if b else x
                f = FiniteBinOp(tuple(tuple(r) for r in rows))
                lhs = is_commutative(f) and is_associative(f)
                rhs = degree_sequence(f) == tuple(range(0, 2 * n, 2))
                assert lhs == rhs
                if lhs:
                    assert commutative_characterization(f) is not None
                else:
                    assert commutative_characterization(f) is None


class TestMonotonizingOrders:
    def test_never_monotone(self, x4_never_monotone):
        assert exists_monotonizing_order(x4_never_monotone) is None

    def test_max_finds_natural_first(self):
        f = FiniteBinOp.max_under(TotalOrder.natural(4))
        assert exists_monotonizing_order(f) == TotalOrder.natural(4)

    def test_search_agrees_with_order_predicate(self, x4_peaked):
        found = list(monotonizing_orders(x4_peaked))
        assert found
        for t in found:
            assert is_order_preserving(x4_peaked, t)

    def test_capacity_guard(self):
        f = FiniteBinOp.projection(9, "left")
        from quasitrivial import CapacityError

        with pytest.raises(CapacityError):
            exists_monotonizing_order(f)


class TestMonotoneEquivalence:
    def test_order_preserving_iff_weakly_single_peaked(self):
        for n in range(1, 6):
            ref = TotalOrder.natural(n)
            for d in kimura_decompositions(n):
                f = build(d)
                assert is_order_preserving(f, ref) == is_weakly_single_peaked(ref, d.order)


class TestClassify:
    def test_peaked_example(self, x4_peaked):
        report = classify(x4_peaked, TotalOrder.natural(4))
        assert report.associative and report.quasitrivial
        assert not report.commutative
        assert report.neutral == {2}
        assert report.annihilator == {4}
        assert report.weakly_single_peaked_for_reference is True
        assert report.order_preserving_for_reference is True
        assert report.decomposition is not None
        assert report.max_of_total_order is None
        assert TotalOrder.natural(4) in report.monotone_for

    def test_non_quasitrivial_example(self, x3_not_quasitrivial):
        report = classify(x3_not_quasitrivial)
        assert not report.quasitrivial
        assert report.annihilator == {2}
        assert report.decomposition is None
        assert report.weakly_single_peaked_for_reference is None

    def test_unpeaked_example(self, x4_unpeaked):
        report = classify(x4_unpeaked, TotalOrder.natural(4))
        assert report.order_preserving_for_reference is False
        assert report.weakly_single_peaked_for_reference is False
        assert report.associative and report.quasitrivial

    def test_monotone_list_truncation(self):
        f = FiniteBinOp.projection(5, "left")  # monotone for all 120 orderings
        report = classify(f, monotone_limit=10)
        assert len(report.monotone_for) == 10
        assert report.monotone_for_truncated

    def test_report_internal_consistency_sweep(self):
        import random

        from quasitrivial.enumeration import qt_semigroups

        rng = random.Random(12166)
        samples = list(qt_semigroups(3))
        for _ in range(150):
            n = rng.randint(1, 4)
            samples.append(FiniteBinOp.from_function(n, lambda x, y: rng.randint(1, n)))
        for f in samples:
            report = classify(f)
            assert (report.decomposition is not None) == (
                report.associative and report.quasitrivial
            )
            assert (report.weakly_single_peaked_for_reference is None) == (
                report.decomposition is None
            )
            assert (report.max_of_total_order is not None) == (
                report.associative and report.quasitrivial and report.commutative
            )
            assert report.order_preserving_for_reference == (
                TotalOrder.natural(f.n) in report.monotone_for
                or report.monotone_for_truncated
                and report.order_preserving_for_reference
            )
            assert report.degree_sequence == tuple(sorted(report.degree_sequence))
