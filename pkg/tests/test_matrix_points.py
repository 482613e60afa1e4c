"""Matrix-point oracle: strategies, kernels, shards, budgets."""

import os
import subprocess
import sys

import pytest

from clzeta.oracle import (
    BudgetExceededError,
    count_matrix_points,
    gl_order,
    matrix_point_series,
    parse_relations,
)
from clzeta.oracle.matrix_points import KERNEL_COMPILED


class TestGlOrder:
    def test_values(self):
        assert gl_order(0, 2) == 1
        assert gl_order(1, 7) == 6
        assert gl_order(2, 2) == 6
        assert gl_order(3, 2) == 168


class TestCounts:
    def test_scalar_pairs(self):
        assert count_matrix_points("A*B - B*A", 1, 3).value == 9

    def test_forced_zero_matrix(self):
        # A = 0 is forced, B is free
        assert count_matrix_points("A*B - B*A, A", 2, 2).value == 16

    def test_both_strategies_at_n2(self):
        lin = count_matrix_points("A*B - B*A", 2, 2, strategy="linear")
        full = count_matrix_points("A*B - B*A", 2, 2, strategy="full")
        assert lin.value == full.value == 88
        assert lin.strategy == "linear-in-B"
        assert full.strategy == "full"

    def test_empty_dimension(self):
        assert count_matrix_points("A*B - B*A", 0, 2).value == 1

    def test_empty_system_counts_all_pairs(self):
        assert count_matrix_points("", 1, 3).value == 9
        assert count_matrix_points("", 2, 2).value == 256

    def test_nonlinear_falls_back_to_full(self):
        res = count_matrix_points("A*B*A*B - B*A", 1, 2)
        assert res.strategy == "full"
        # scalars over F_2: (ab)^2 - ba = ab - ab = 0 always
        assert res.value == 4

    def test_affine_relation(self):
        # A*B = 1 over F_q scalars: solutions need a invertible, b = 1/a
        res = count_matrix_points("A*B - 1", 1, 5)
        assert res.value == 4
        full = count_matrix_points("A*B - 1", 1, 5, strategy="full")
        assert full.value == 4

    def test_inconsistent_affine_counts(self):
        # over scalars, A*B - 1 is inconsistent exactly when a = 0
        res = count_matrix_points("A*B - 1", 1, 5)
        assert res.inconsistent == 1

    def test_composite_q_rejected(self):
        with pytest.raises(ValueError):
            count_matrix_points("A*B - B*A", 2, 4)

    def test_forcing_linear_on_nonlinear_fails(self):
        with pytest.raises(ValueError):
            count_matrix_points("B^2 - A", 1, 2, strategy="linear")


class TestShards:
    def test_shard_invariance(self):
        base = count_matrix_points("A*B - B*A, A^2*B", 2, 3).value
        for shards in (2, 3, 8, 16):
            got = count_matrix_points("A*B - B*A, A^2*B", 2, 3, shards=shards)
            assert got.value == base

    def test_shards_beyond_space(self):
        # more shards than points in the A space
        got = count_matrix_points("A*B - B*A", 1, 2, shards=64)
        assert got.value == 4


class TestBudget:
    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceededError):
            count_matrix_points("A*B - B*A", 3, 3, budget=100)

    def test_full_budget_exceeded(self):
        with pytest.raises(BudgetExceededError):
            count_matrix_points("B^2 - A", 2, 3, budget=1000)

    def test_env_override(self):
        env = dict(os.environ, CLZETA_BUDGET="10")
        code = (
            "from clzeta.oracle import count_matrix_points\n"
            "count_matrix_points('A*B - B*A', 2, 2)\n"
        )
        proc = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        assert proc.returncode != 0
        assert "exceeds budget 10" in proc.stderr


class TestSeries:
    def test_leading_terms(self):
        s = matrix_point_series("A*B - B*A", 2, 2)
        assert s.coeff((0,)) == 1
        assert s.coeff((1,)) == 4

    def test_node_linear_term(self):
        s = matrix_point_series("A*B - B*A, A*B", 2, 1)
        assert s.coeff((1,)) == 3


@pytest.mark.skipif(not KERNEL_COMPILED, reason="compiled kernel not built")
class TestKernelParity:
    def test_pure_python_matches_compiled(self):
        from clzeta.oracle import _kernels, _kernels_py  # type: ignore[attr-defined]
        from clzeta.oracle.matrix_points import _compile_for_kernel

        cases = [
            ("A*B - B*A", 2, 3),
            ("A*B - B*A, A^2", 2, 3),
            ("A*B - B*A, A^2*B", 2, 2),
            ("A*B - 1", 1, 5),
            ("A*B - B*A", 3, 2),
        ]
        for text, n, p in cases:
            system = parse_relations(text)
            a_filters, b_relations, max_pow = _compile_for_kernel(system, p)
            total = p ** (n * n)
            got_c = _kernels.nullity_histogram(
                n, p, 0, total, a_filters, b_relations, max_pow
            )
            got_py = _kernels_py.nullity_histogram(
                n, p, 0, total, a_filters, b_relations, max_pow
            )
            assert tuple(got_c[0]) == tuple(got_py[0])
            assert got_c[1:] == got_py[1:]

    def test_partial_ranges_match(self):
        from clzeta.oracle import _kernels, _kernels_py  # type: ignore[attr-defined]
        from clzeta.oracle.matrix_points import _compile_for_kernel

        system = parse_relations("A*B - B*A")
        a_filters, b_relations, max_pow = _compile_for_kernel(system, 3)
        got_c = _kernels.nullity_histogram(2, 3, 17, 61, a_filters, b_relations, max_pow)
        got_py = _kernels_py.nullity_histogram(2, 3, 17, 61, a_filters, b_relations, max_pow)
        assert tuple(got_c[0]) == tuple(got_py[0])
