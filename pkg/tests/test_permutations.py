"""Commuting permutation tuples."""

import math

import pytest

from clzeta.oracle import commuting_perm_count
from clzeta.partitions import partition_count


def test_identity_tuples():
    for n in range(6):
        assert commuting_perm_count(n, 1) == math.factorial(n)


def test_class_equation_small():
    assert commuting_perm_count(3, 2) == 18
    assert commuting_perm_count(4, 2) == 120


def test_class_equation_general():
    for n in range(6):
        assert commuting_perm_count(n, 2) == partition_count(n) * math.factorial(n)


def test_triples():
    # commuting triples by summing commuting pairs inside each centralizer:
    # S_3 has centralizers S_3 (1x), Z_2 (3x), Z_3 (2x) giving 18+12+18
    assert commuting_perm_count(3, 3) == 48
    assert commuting_perm_count(0, 3) == 1
    assert commuting_perm_count(1, 3) == 1
    assert commuting_perm_count(2, 3) == 8


def test_bounds():
    with pytest.raises(ValueError):
        commuting_perm_count(7, 2)
    with pytest.raises(ValueError):
        commuting_perm_count(6, 3)
    with pytest.raises(ValueError):
        commuting_perm_count(3, 4)
