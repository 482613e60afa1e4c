"""Framed counting: stability, freeness, Quot counts."""

from fractions import Fraction

import pytest

from clzeta.oracle import (
    PGroupModule,
    relation_points,
    stable_framing_stats,
)
from clzeta.oracle.framing import _stable_tuple_count, _stable_tuple_count_direct
from clzeta.partitions import Partition


class TestRelationPoints:
    def test_commuting_pairs_on_vector_space(self):
        m = PGroupModule(2, Partition((1, 1)))
        points = relation_points("A*B - B*A", m)
        assert len(points) == 88

    def test_scalar_case(self):
        m = PGroupModule(2, Partition((1,)))
        assert len(relation_points("A*B - B*A", m)) == 4
        assert len(relation_points("A*B - B*A, A*B", m)) == 3

    def test_mixed_module_torsion_relation(self):
        # pairs (A, B) with AB = BA and 2B = 0 inside End(Z/4 + Z/2)
        m = PGroupModule(2, Partition((2, 1)))
        points = relation_points("A*B - B*A, 2*B", m)
        for a, b in points:
            assert m.endo_is_zero(m.endo_scale(2, b))


class TestStability:
    def test_rank_zero_framing(self):
        m = PGroupModule(2, Partition((1,)))
        stats = stable_framing_stats("A*B - B*A", m, 0)
        assert stats.stable == 0
        assert stats.total == 4

    def test_scalar_rank_one(self):
        # 1x1 commuting pairs with one framing vector: v must be nonzero
        m = PGroupModule(2, Partition((1,)))
        stats = stable_framing_stats("A*B - B*A", m, 1)
        assert stats.total == 8
        assert stats.stable == 4
        assert stats.aut_order == 1
        assert stats.quot_count == 4

    def test_methods_agree(self):
        m = PGroupModule(2, Partition((1, 1)))
        for d in (1, 2, 3):
            lattice = stable_framing_stats("A*B - B*A", m, d, method="lattice")
            direct = stable_framing_stats("A*B - B*A", m, d, method="direct")
            assert lattice == direct

    def test_methods_agree_mixed_module(self):
        m = PGroupModule(2, Partition((2,)))
        for d in (1, 2):
            lattice = stable_framing_stats("A*B - B*A", m, d, method="lattice")
            direct = stable_framing_stats("A*B - B*A", m, d, method="direct")
            assert lattice == direct

    def test_tuple_counters_agree_per_point(self):
        m = PGroupModule(2, Partition((1, 1)))
        for a, b in relation_points("A*B - B*A", m)[:20]:
            for d in (1, 2):
                assert _stable_tuple_count(m, a, b, d) == _stable_tuple_count_direct(
                    m, a, b, d
                )

    def test_freeness_divisibility(self):
        m = PGroupModule(2, Partition((1, 1)))
        for d in range(1, 6):
            stats = stable_framing_stats("A*B - B*A", m, d)
            assert stats.stable % stats.aut_order == 0

    def test_quot_counts_converge_from_below(self):
        m = PGroupModule(2, Partition((1, 1)))
        coh = Fraction(88, 6)
        previous = Fraction(0)
        for d in range(1, 7):
            stats = stable_framing_stats("A*B - B*A", m, d)
            ratio = Fraction(stats.quot_count, m.size**d)
            assert previous <= ratio <= coh
            previous = ratio


class TestInvalid:
    def test_negative_rank(self):
        m = PGroupModule(2, Partition((1,)))
        with pytest.raises(ValueError):
            stable_framing_stats("A*B - B*A", m, -1)
