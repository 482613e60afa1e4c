"""Framed counting: matrix/endomorphism points together with generator
tuples, and the induced submodule ("Quot") counts.

A framing of rank d of a module structure (N, A, B) is a d-tuple of elements
of N; it is stable when the elements generate N over the twisted action,
i.e. when the closure of the tuple under addition and under applying A and B
is all of N.  The automorphism group of N acts freely on stable framed
points, so their number divided by |Aut(N)| is an integer, the number of
finite-index submodules of the rank-d free module with quotient N.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import budget as _budget
from .endomorphisms import PGroupModule, automorphisms
from .relations import RelationSystem, parse_relations


@dataclass(frozen=True)
class FramingStats:
    total: int  # |C_N(R)| * |N|^d
    stable: int  # framed points whose framing generates
    aut_order: int
    quot_count: int  # stable / aut_order; the division is exact
    points: int  # |C_N(R)|


def _endo_word(module: PGroupModule, word, A, B):
    out = module.identity_endo()
    for g, e in word.factors:
        m = A if g == "A" else B
        for _ in range(e):
            out = module.compose(out, m)
    return out


def relation_points(
    system: RelationSystem | str, module: PGroupModule, budget: int | None = None
):
    """All pairs (A, B) of endomorphisms of N satisfying the relations."""
    if isinstance(system, str):
        system = parse_relations(system)
    bound = module.endo_count_bound()
    _budget.check("relation_points", bound * bound, budget, _budget.DEFAULT_ENDO_BUDGET)
    endos = list(module.endomorphisms())
    out = []
    for A in endos:
        for B in endos:
            ok = True
            for rel in system.relations:
                acc = None
                for t in rel.terms:
                    w = (
                        module.identity_endo()
                        if t.word is None
                        else _endo_word(module, t.word, A, B)
                    )
                    w = module.endo_scale(t.coeff % module_char(module), w)
                    acc = w if acc is None else module.endo_add(acc, w)
                if acc is not None and not module.endo_is_zero(acc):
                    ok = False
                    break
            if ok:
                out.append((A, B))
    return out


def module_char(module: PGroupModule) -> int:
    """Exponent of the module: scaling coefficients live mod this."""
    return max(module.moduli, default=1)


def _closure(module: PGroupModule, gens, endos):
    """Smallest subset containing gens, closed under addition and under the
    given endomorphisms (the generated twisted submodule).

    Worklist closure: when an element is processed it is summed with
    everything already reached and pushed through each endomorphism, so every
    pair of reached elements is eventually combined."""
    seen = {module.zero}
    queue = [module.zero]
    for g in gens:
        if g not in seen:
            seen.add(g)
            queue.append(g)
    while queue:
        x = queue.pop()
        new = [module.apply(e, x) for e in endos]
        new.extend(module.add(x, y) for y in list(seen))
        for y in new:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def _invariant_lattice(module: PGroupModule, A, B):
    """All submodules of N invariant under A and B, as frozensets."""
    endos = (A, B)
    subs = {_closure(module, [], endos)}
    for x in module.elements():
        subs.add(_closure(module, [x], endos))
    changed = True
    while changed:
        changed = False
        current = list(subs)
        for s1 in current:
            for s2 in current:
                if s1 is s2:
                    continue
                if not (s1 <= s2 or s2 <= s1):
                    join = _closure(module, set(s1) | set(s2), endos)
                    if join not in subs:
                        subs.add(join)
                        changed = True
    return list(subs)


def _stable_tuple_count(module: PGroupModule, A, B, d: int) -> int:
    """Number of d-tuples generating N under (A, B), by Moebius inversion
    over the invariant-submodule lattice: |W|^d counts the tuples lying in
    W, and inclusion-exclusion extracts those whose closure is exactly N."""
    lattice = _invariant_lattice(module, A, B)
    full = frozenset(module.elements())
    if full not in lattice:
        lattice.append(full)
    lattice.sort(key=len)
    mu: dict[frozenset, int] = {}

    def moebius_to_top(v):
        got = mu.get(v)
        if got is not None:
            return got
        if v == full:
            mu[v] = 1
            return 1
        acc = 0
        for w in lattice:
            if v < w:
                acc += moebius_to_top(w)
        mu[v] = -acc
        return mu[v]

    total = 0
    for w in lattice:
        total += moebius_to_top(w) * len(w) ** d
    return total


def _stable_tuple_count_direct(module: PGroupModule, A, B, d: int) -> int:
    """Reference implementation: walk every tuple and test its closure."""
    elems = list(module.elements())
    count = 0
    cache: dict[frozenset, bool] = {}
    for tup in itertools.product(elems, repeat=d):
        key = frozenset(tup)
        good = cache.get(key)
        if good is None:
            good = len(_closure(module, key, (A, B))) == module.size
            cache[key] = good
        if good:
            count += 1
    return count


def stable_framing_stats(
    system: RelationSystem | str,
    module: PGroupModule,
    d: int,
    *,
    budget: int | None = None,
    method: str = "lattice",
) -> FramingStats:
    """Count framed relation points and the stable ones among them.

    ``method`` is "lattice" (Moebius inversion over invariant submodules) or
    "direct" (per-tuple closure; needs |N|^d within budget).  Both test
    stability by generator-application closure and agree exactly.
    """
    if isinstance(system, str):
        system = parse_relations(system)
    if d < 0:
        raise ValueError("d must be nonnegative")
    points = relation_points(system, module, budget=budget)
    auts = automorphisms(module, budget=budget)
    size_d = module.size**d
    stable = 0
    if method == "lattice":
        for A, B in points:
            stable += _stable_tuple_count(module, A, B, d)
    elif method == "direct":
        _budget.check(
            "stable_framing_stats[direct]",
            size_d * max(len(points), 1),
            budget,
            _budget.DEFAULT_SURJ_BUDGET,
        )
        for A, B in points:
            stable += _stable_tuple_count_direct(module, A, B, d)
    else:
        raise ValueError(f"unknown method {method!r}")
    aut_order = len(auts)
    if stable % aut_order:
        raise AssertionError(
            "free-action invariant violated: |Aut| does not divide the stable count"
        )
    return FramingStats(
        total=len(points) * size_d,
        stable=stable,
        aut_order=aut_order,
        quot_count=stable // aut_order,
        points=len(points),
    )
