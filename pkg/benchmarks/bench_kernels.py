#!/usr/bin/env python3
"""Benchmark the compiled counting kernel against the pure-Python fallback.

Runs the matrix-point nullity scan on a few representative relation systems
with both kernels, verifies that the histograms agree, and prints timings.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from clzeta.oracle import _kernels_py
from clzeta.oracle.matrix_points import _compile_for_kernel
from clzeta.oracle.relations import parse_relations

try:
    from clzeta.oracle import _kernels  # type: ignore[attr-defined]
except ImportError:
    _kernels = None

CASES = [
    ("A*B - B*A", 2, 3),
    ("A*B - B*A", 3, 2),
    ("A*B - B*A", 3, 3),
    ("A*B - B*A, A^2*B", 3, 3),
    ("A*B - B*A", 4, 2),
]


def run(kernel, text, n, p):
    system = parse_relations(text)
    a_filters, b_relations, max_pow = _compile_for_kernel(system, p)
    total = p ** (n * n)
    start = time.perf_counter()
    result = kernel.nullity_histogram(n, p, 0, total, a_filters, b_relations, max_pow)
    return time.perf_counter() - start, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _kernels is None:
        print("compiled kernel not built; run: python3 setup.py build_ext --inplace")
        return 1

    header = f"{'relations':32} {'n':>2} {'q':>2} {'python':>10} {'cython':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for text, n, p in CASES:
        t_py = min(run(_kernels_py, text, n, p)[0] for _ in range(args.repeat))
        t_cy = min(run(_kernels, text, n, p)[0] for _ in range(args.repeat))
        _, res_py = run(_kernels_py, text, n, p)
        _, res_cy = run(_kernels, text, n, p)
        assert tuple(res_py[0]) == tuple(res_cy[0]), "kernels disagree"
        assert res_py[1:] == res_cy[1:], "kernels disagree"
        print(
            f"{text:32} {n:>2} {p:>2} {t_py:>9.4f}s {t_cy:>9.4f}s {t_py / t_cy:>7.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
