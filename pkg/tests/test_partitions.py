"""Partition-lab: combinatorics and module statistics."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clzeta.partitions import (
    Partition,
    aut_order,
    durfee_compose,
    end_order,
    end_torsion_order,
    partition_count,
    partitions,
    partitions_up_to,
)
from clzeta.series import qpoch_value


@st.composite
def random_partition(draw, max_size=12):
    size = draw(st.integers(0, max_size))
    options = list(partitions(size))
    return options[draw(st.integers(0, len(options) - 1))]


class TestEnumeration:
    def test_p4(self):
        got = list(partitions(4))
        assert got == [
            Partition((4,)),
            Partition((3, 1)),
            Partition((2, 2)),
            Partition((2, 1, 1)),
            Partition((1, 1, 1, 1)),
        ]

    def test_bounded_part(self):
        got = {p.parts for p in partitions(4, max_part=2)}
        assert got == {(2, 2), (2, 1, 1), (1, 1, 1, 1)}

    def test_size_zero(self):
        assert list(partitions(0)) == [Partition(())]
        assert list(partitions(0, max_part=3, max_len=0)) == [Partition(())]

    def test_bounded_length(self):
        got = {p.parts for p in partitions(5, max_len=2)}
        assert got == {(5,), (4, 1), (3, 2)}

    def test_counts(self):
        expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
        assert [partition_count(n) for n in range(11)] == expected

    def test_validation(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((0,))


class TestTranspose:
    def test_example(self):
        assert Partition((4, 3, 1)).transpose() == Partition((3, 2, 2, 1))

    def test_ones(self):
        assert Partition((1,) * 6).transpose() == Partition((6,))

    @settings(max_examples=60)
    @given(random_partition())
    def test_involution(self, lam):
        assert lam.transpose().transpose() == lam


class TestMultiplicities:
    def test_examples(self):
        assert Partition((2, 2, 1)).multiplicities() == {1: 1, 2: 2}
        assert Partition(()).multiplicities() == {}
        assert Partition((5,)).multiplicities() == {5: 1}

    @settings(max_examples=60)
    @given(random_partition())
    def test_weight_and_length(self, lam):
        mults = lam.multiplicities()
        assert sum(i * m for i, m in mults.items()) == lam.size
        assert sum(mults.values()) == lam.length


class TestDurfee:
    def test_examples(self):
        assert Partition((4, 3, 1)).durfee_partition() == Partition((2, 1))
        assert Partition((3, 3, 3)).durfee_partition() == Partition((3,))
        assert Partition((7,)).durfee_partition() == Partition((1,))
        assert Partition(()).durfee_partition() == Partition(())

    @settings(max_examples=60)
    @given(random_partition())
    def test_size_is_length(self, lam):
        assert lam.durfee_partition().size == lam.length

    def test_reconstruction_bijection(self):
        # every partition of size <= 10 decomposes uniquely into its first
        # Durfee square plus right/below subpartitions, and composing back
        # is the identity
        seen = {}
        for lam in partitions_up_to(10):
            k, right, below = lam.durfee_decompose()
            if lam.parts:
                assert k >= 1
                assert right.length <= k
                assert not below.parts or below.parts[0] <= k
                assert durfee_compose(k, right, below) == lam
                key = (k, right.parts, below.parts)
                assert key not in seen
                seen[key] = lam

    def test_reconstruction_counts(self):
        # partitions of n with first Durfee side k match pairs (right, below)
        # with k^2 + |right| + |below| = n, len(right) <= k, below parts <= k
        for n in range(11):
            for k in range(1, 4):
                direct = sum(
                    1 for lam in partitions(n) if lam.durfee_side() == k
                )
                paired = 0
                for r in range(n - k * k + 1):
                    rights = sum(1 for _ in partitions(r, max_len=k))
                    belows = sum(
                        1 for _ in partitions(n - k * k - r, max_part=k)
                    )
                    paired += rights * belows
                assert direct == paired


class TestSquareType:
    def test_examples(self):
        assert Partition((2, 1)).square_type() == Partition((2, 1, 1, 1))
        assert Partition((1,)).square_type() == Partition((1,))
        assert Partition((3,)).square_type() == Partition((3,))

    @settings(max_examples=60)
    @given(random_partition())
    def test_transpose_squares(self, lam):
        sq = lam.square_type()
        expected = [c * c for c in lam.transpose().parts]
        assert list(sq.transpose().parts) == expected


class TestModuleOrders:
    def test_aut_small(self):
        q = Fraction(7)
        assert aut_order(Partition((1,)), q) == 6
        assert aut_order(Partition((1, 1)), q) == (49 - 1) * (49 - 7)

    def test_end_examples(self):
        q = Fraction(3)
        assert end_order(Partition((2, 1)), q) == 3**5
        assert end_order(Partition((1,) * 4), q) == 3**16
        assert end_order(Partition((5,)), q) == 3**5

    def test_torsion_examples(self):
        q = Fraction(2)
        assert end_torsion_order(Partition((2, 1)), 1, q) == 2**4
        assert end_torsion_order(Partition((1, 1)), 1, q) == 2**4
        for lam in partitions_up_to(4):
            if not lam.parts:
                continue
            assert end_torsion_order(lam, lam.parts[0], q) == end_order(lam, q)
            assert end_torsion_order(lam, lam.parts[0] + 2, q) == end_order(lam, q)

    @settings(max_examples=40)
    @given(random_partition(max_size=8), st.sampled_from([2, 3, 5, Fraction(7, 2)]))
    def test_aut_end_ratio(self, lam, q):
        ratio = aut_order(lam, q) / end_order(lam, q)
        expected = Fraction(1)
        r = Fraction(1, Fraction(q))
        for m in lam.multiplicities().values():
            expected *= qpoch_value(r, r, m)
        assert ratio == expected
        assert 0 < ratio <= 1

    def test_aut_matches_enumeration(self):
        # |Aut| of the type-(2,1) module over Z/4 by exhaustive count
        from clzeta.oracle import PGroupModule, enumerate_endomorphisms

        module = PGroupModule(2, Partition((2, 1)))
        count = enumerate_endomorphisms(module, "invertible")
        assert count == aut_order(Partition((2, 1)), 2)


class TestDurfeeGeneratingIdentity:
    def test_partitions_with_given_durfee_profile(self):
        # sum over partitions L with durfee partition sigma(L) = lam' of
        # q^|L| equals q^(sum lam'_i^2) / prod (q;q)_{m_i(lam)}
        from clzeta.series import TruncSeries, VarSpec, pochhammer

        window = 16
        spec = VarSpec(("q",), (window,))
        qv = TruncSeries.variable(spec, "q")
        for lam in partitions_up_to(4):
            sigma_target = lam.transpose()
            lhs = TruncSeries.zero(spec)
            for big in partitions_up_to(window - 1):
                if big.durfee_partition() == sigma_target:
                    lhs = lhs + TruncSeries.monomial(spec, (big.size,))
            weight = sum(c * c for c in lam.transpose().parts)
            rhs = TruncSeries.monomial(spec, (weight,)) if weight < window else TruncSeries.zero(spec)
            for m in lam.multiplicities().values():
                rhs = rhs * pochhammer(qv, "q", m).inverse()
            assert lhs == rhs, lam


def test_json_round_trip():
    lam = Partition((3, 1, 1))
    assert lam.to_json() == "[3, 1, 1]"
    assert Partition.from_json(lam.to_json()) == lam
