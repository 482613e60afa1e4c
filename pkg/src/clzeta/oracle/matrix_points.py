"""Exhaustive counting of matrix points of a relation system over F_p.

The count |C_n| is the number of pairs (A, B) of n x n matrices over F_p
satisfying every relation.  Two strategies exist:

* linear-in-B: enumerate A only; relations that omit B filter A, relations
  affine-linear in B stack into one linear system whose solution count is
  p^nullity.  This is the hot loop; it runs in the compiled Cython kernel
  when available and in a pure-Python mirror otherwise.
* full: enumerate both A and B and evaluate every relation literally.  Only
  feasible at tiny sizes; it exists to cross-check the linear strategy and
  to handle relations that are not linear in B.

The A space is an odometer over residue digits (entry (0,0) least
significant, row-major).  Sharding splits the odometer range into contiguous
pieces whose histograms are added, so the result is independent of the shard
count.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction

from ..series import TruncSeries, VarSpec
from . import budget as _budget
from .relations import RelationSystem, parse_relations

if os.environ.get("CLZETA_FORCE_PY"):
    from . import _kernels_py as _kernels
else:
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _kernels

#: True when the compiled kernel is in use.
KERNEL_COMPILED = bool(getattr(_kernels, "COMPILED", False))


def kernel_name() -> str:
    return "cython" if KERNEL_COMPILED else "python"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def gl_order(n: int, q: int) -> int:
    """|GL_n(F_q)| = prod_{k<n} (q^n - q^k)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n and q < 2:
        raise ValueError("q must be at least 2")
    out = 1
    for k in range(n):
        out *= q**n - q**k
    return out


@dataclass(frozen=True)
class CountResult:
    value: int
    strategy: str  # "linear-in-B" or "full"
    scanned: int  # size of the enumerated space
    rejected: int  # A matrices failing an A-only relation
    inconsistent: int  # A matrices whose affine system had no solution

    def to_json_dict(self, op: str, params: dict, elapsed_ms: float | None = None):
        d = {
            "op": op,
            "params": params,
            "value": str(self.value),
            "strategy": self.strategy,
        }
        if elapsed_ms is not None:
            d["elapsed_ms"] = elapsed_ms
        return d


def _compile_for_kernel(system: RelationSystem, p: int):
    """Flatten the relation system into the kernel's integer tuples."""
    a_filters = []
    b_relations = []
    for rel in system.relations:
        if rel.kind == "a_only":
            terms = []
            for t in rel.terms:
                exp = t.word.a_degree() if t.word is not None else 0
                terms.append((t.coeff % p, exp))
            a_filters.append(tuple(terms))
        elif rel.kind == "b_linear":
            linear = []
            const = []
            for t in rel.terms:
                if t.b_degree() == 0:
                    exp = t.word.a_degree() if t.word is not None else 0
                    const.append((t.coeff % p, exp))
                else:
                    pre, post = t.word.linear_split()
                    linear.append((t.coeff % p, pre, post))
            b_relations.append((tuple(linear), tuple(const)))
        else:
            raise ValueError("relation system is not linear in B")
    max_pow = max(system.max_a_power(), 0)
    return tuple(a_filters), tuple(b_relations), max_pow


def _shard_ranges(total: int, shards: int):
    if shards < 1:
        raise ValueError("shards must be >= 1")
    step, extra = divmod(total, shards)
    lo = 0
    for s in range(shards):
        hi = lo + step + (1 if s < extra else 0)
        yield lo, hi
        lo = hi


def _count_linear(system: RelationSystem, n: int, p: int, shards: int):
    a_filters, b_relations, max_pow = _compile_for_kernel(system, p)
    nn = n * n
    total_hist = [0] * (nn + 1)
    rejected = 0
    inconsistent = 0
    for lo, hi in _shard_ranges(p**nn, shards):
        if lo == hi:
            continue
        hist, rej, inc = _kernels.nullity_histogram(
            n, p, lo, hi, a_filters, b_relations, max_pow
        )
        for d in range(nn + 1):
            total_hist[d] += hist[d]
        rejected += rej
        inconsistent += inc
    value = sum(c * p**d for d, c in enumerate(total_hist) if c)
    return CountResult(value, "linear-in-B", p**nn, rejected, inconsistent)


def _mat_mul(x, y, n, p):
    out = [0] * (n * n)
    for i in range(n):
        for k in range(n):
            a = x[i * n + k]
            if a:
                for j in range(n):
                    out[i * n + j] = (out[i * n + j] + a * y[k * n + j]) % p
    return out


def _mat_pow(x, e, n, p):
    out = [0] * (n * n)
    for i in range(n):
        out[i * n + i] = 1 % p
    for _ in range(e):
        out = _mat_mul(out, x, n, p)
    return out


def _eval_word(word, a, b, n, p):
    out = [0] * (n * n)
    for i in range(n):
        out[i * n + i] = 1 % p
    for g, e in word.factors:
        m = a if g == "A" else b
        out = _mat_mul(out, _mat_pow(m, e, n, p), n, p)
    return out


def _mat_pow_cached(cache, key, m, e, n, p):
    got = cache.get((key, e))
    if got is None:
        got = _mat_pow(m, e, n, p)
        cache[(key, e)] = got
    return got


def _count_full(system: RelationSystem, n: int, p: int):
    nn = n * n
    count = 0
    space = itertools.product(range(p), repeat=nn)
    for a in space:
        cache: dict = {}
        for b in itertools.product(range(p), repeat=nn):
            good = True
            for rel in system.relations:
                acc = [0] * nn
                for t in rel.terms:
                    if t.word is None:
                        w = [0] * nn
                        for i in range(n):
                            w[i * n + i] = 1 % p
                    elif t.b_degree() == 0:
                        w = _mat_pow_cached(
                            cache, "A", list(a), t.word.a_degree(), n, p
                        )
                    else:
                        w = _eval_word(t.word, list(a), list(b), n, p)
                    for i in range(nn):
                        acc[i] = (acc[i] + t.coeff * w[i]) % p
                if any(acc):
                    good = False
                    break
            if good:
                count += 1
    return CountResult(count, "full", p ** (2 * nn), 0, 0)


def count_matrix_points(
    system: RelationSystem | str,
    n: int,
    q: int,
    *,
    strategy: str = "auto",
    shards: int = 1,
    budget: int | None = None,
) -> CountResult:
    """Number of n x n matrix pairs (A, B) over F_q satisfying the system.

    ``strategy`` is "auto", "linear" or "full".  q must be prime.  Raises
    :class:`clzeta.oracle.budget.BudgetExceededError` when the enumeration
    space exceeds the budget.
    """
    if isinstance(system, str):
        system = parse_relations(system)
    if not _is_prime(q):
        raise ValueError("the matrix oracle supports prime q only")
    if n < 0:
        raise ValueError("n must be nonnegative")
    nn = n * n
    if n == 0:
        return CountResult(1, "linear-in-B" if strategy != "full" else "full", 1, 0, 0)

    if strategy == "auto":
        strategy = "linear" if system.is_b_linear() else "full"
    if strategy == "linear":
        if not system.is_b_linear():
            raise ValueError("relation system is not linear in B")
        _budget.check(
            "count_matrix_points", q**nn, budget, _budget.DEFAULT_MATRIX_BUDGET
        )
        return _count_linear(system, n, q, shards)
    if strategy == "full":
        _budget.check(
            "count_matrix_points[full]",
            q ** (2 * nn),
            budget,
            _budget.DEFAULT_FULL_BUDGET,
        )
        return _count_full(system, n, q)
    raise ValueError(f"unknown strategy {strategy!r}")


def matrix_point_series(
    system: RelationSystem | str,
    q: int,
    n_max: int,
    *,
    shards: int = 1,
    budget: int | None = None,
) -> TruncSeries:
    """The generating series sum_n |C_n| / |GL_n(F_q)| t^n up to t^n_max,
    with exact rational coefficients."""
    if isinstance(system, str):
        system = parse_relations(system)
    spec = VarSpec(("t",), (n_max + 1,))
    coeffs = {}
    for n in range(n_max + 1):
        c = count_matrix_points(system, n, q, shards=shards, budget=budget)
        coeffs[(n,)] = Fraction(c.value, gl_order(n, q))
    return TruncSeries(spec, coeffs)
