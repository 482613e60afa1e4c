"""Endomorphism oracle: counts, automorphisms, torsion, surjectivity,
conjugacy classes, module groupoid counts."""

import math
from fractions import Fraction

import pytest

from clzeta.oracle import (
    BudgetExceededError,
    PGroupModule,
    conj_classes_aut,
    enumerate_endomorphisms,
    module_groupoid_count,
    surj_prob,
)
from clzeta.partitions import (
    Partition,
    aut_order,
    end_order,
    end_torsion_order,
    partitions_up_to,
)


class TestModuleBasics:
    def test_size_and_elements(self):
        m = PGroupModule(2, Partition((2, 1)))
        assert m.size == 8
        assert len(list(m.elements())) == 8

    def test_torsion_elements(self):
        m = PGroupModule(2, Partition((2, 1)))
        assert len(m.torsion_elements(1)) == 4  # 2Z/4 + Z/2
        assert len(m.torsion_elements(2)) == 8

    def test_composition_is_application(self):
        m = PGroupModule(3, Partition((2, 1)))
        endos = list(m.endomorphisms())
        f, g = endos[7], endos[23]
        fg = m.compose(f, g)
        for x in m.elements():
            assert m.apply(fg, x) == m.apply(f, m.apply(g, x))


class TestCounts:
    def test_all_block_count(self):
        m = PGroupModule(2, Partition((2, 1)))
        assert enumerate_endomorphisms(m, "all") == 32

    def test_invertible_prime_field(self):
        m = PGroupModule(5, Partition((1,)))
        assert enumerate_endomorphisms(m, "invertible") == 4

    def test_invertible_matches_formula(self):
        m = PGroupModule(2, Partition((2, 1)))
        assert enumerate_endomorphisms(m, "invertible") == aut_order(
            Partition((2, 1)), 2
        )

    def test_invertible_equals_bruteforce_bijectivity(self):
        for p, lam in [(2, (2, 1)), (3, (1, 1)), (2, (2, 2))]:
            m = PGroupModule(p, Partition(lam))
            by_rank = [e for e in m.endomorphisms() if m.endo_invertible(e)]
            by_image = [
                e for e in m.endomorphisms() if m.endo_bijective_bruteforce(e)
            ]
            assert by_rank == by_image

    def test_torsion_counts(self):
        m = PGroupModule(2, Partition((2, 1)))
        assert enumerate_endomorphisms(m, "torsion", b=1) == 16
        assert enumerate_endomorphisms(m, "torsion", b=2) == 32
        m2 = PGroupModule(2, Partition((1, 1)))
        assert enumerate_endomorphisms(m2, "torsion", b=1) == 16

    def test_full_sweep_against_formulas(self):
        for p in (2, 3):
            for lam in partitions_up_to(4):
                m = PGroupModule(p, lam)
                if m.endo_count_bound() > 2**16:
                    continue
                assert enumerate_endomorphisms(m, "all") == end_order(lam, p)
                assert enumerate_endomorphisms(m, "invertible") == aut_order(lam, p)
                for b in (1, 2, 3):
                    assert enumerate_endomorphisms(
                        m, "torsion", b=b
                    ) == end_torsion_order(lam, b, p)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            enumerate_endomorphisms(PGroupModule(3, Partition((1,) * 4)), "all")

    def test_torsion_needs_b(self):
        with pytest.raises(ValueError):
            enumerate_endomorphisms(PGroupModule(2, Partition((1,))), "torsion")


class TestGroupoidCount:
    def test_base_cases(self):
        assert module_groupoid_count(2, 0) == 1
        for p in (2, 3, 5):
            assert module_groupoid_count(p, 1) == Fraction(p, p - 1)

    def test_order_p2(self):
        assert module_groupoid_count(2, 2) == Fraction(14, 3)
        assert module_groupoid_count(3, 2) == Fraction(3, 2) + Fraction(81, 48)


class TestConjClasses:
    def test_abelian_cases(self):
        for p in (2, 3, 5):
            assert conj_classes_aut(PGroupModule(p, Partition((1,)))) == p - 1
            assert conj_classes_aut(PGroupModule(p, Partition((2,)))) == p * p - p

    def test_gl2(self):
        assert conj_classes_aut(PGroupModule(2, Partition((1, 1)))) == 3
        assert conj_classes_aut(PGroupModule(3, Partition((1, 1)))) == 8

    def test_mixed_type(self):
        # Aut(Z/4 + Z/2) is dihedral of order 8, hence 5 classes
        assert conj_classes_aut(PGroupModule(2, Partition((2, 1)))) == 5


class TestSurjProb:
    def test_single_generator(self):
        for p in (2, 3, 5):
            res = surj_prob(PGroupModule(p, Partition((1,))), 1)
            assert res.enumerated == res.closed_form == 1 - Fraction(1, p)

    def test_gl2_fraction(self):
        res = surj_prob(PGroupModule(2, Partition((1, 1))), 2)
        assert res.enumerated == res.closed_form == Fraction(3, 8)

    def test_mixed_module(self):
        res = surj_prob(PGroupModule(2, Partition((2, 1))), 2)
        assert res.enumerated == res.closed_form == Fraction(3, 8)

    def test_too_few_generators(self):
        res = surj_prob(PGroupModule(2, Partition((1, 1))), 1)
        assert res.closed_form == 0
        assert res.enumerated == 0

    def test_zero_module(self):
        res = surj_prob(PGroupModule(2, Partition(())), 0)
        assert res.enumerated == res.closed_form == 1

    def test_budget_skips_enumeration(self):
        res = surj_prob(PGroupModule(3, Partition((1,) * 4)), 4)
        assert res.enumerated is None
        assert res.closed_form > 0

    def test_tail_bound(self):
        for p in (2, 3):
            for lam in partitions_up_to(3):
                m = PGroupModule(p, lam)
                if m.size == 1:
                    continue
                for d in range(5):
                    res = surj_prob(m, d, budget=2**14)
                    bound = 2 * m.size * math.log(m.size) * 2.0 ** (-d)
                    assert float(1 - res.closed_form) <= bound
