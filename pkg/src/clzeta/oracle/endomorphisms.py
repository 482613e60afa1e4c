"""Brute-force enumeration over finite modules of a discrete valuation ring.

A module of type lam over Z_p is the direct sum of Z/p^(lam_i).  Elements
are coordinate tuples; an endomorphism is stored as the tuple of images of
the standard generators, which is a well-defined endomorphism exactly when
the j-th image is killed by p^(lam_j).  Those image lists are produced by
filtering the raw element set, so the counts below are genuine enumerations,
independent of the closed-form orders they are tested against.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from ..partitions import Partition
from ..series import qpoch_value
from . import budget as _budget


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PGroupModule:
    """Finite module over Z_p of type ``lam``: the direct sum of
    Z/p^(lam_i).  pi acts as multiplication by p."""

    #: largest module size for which the index/addition tables are built
    _TABLE_LIMIT = 4096

    def __init__(self, p: int, lam):
        if not _is_prime(p):
            raise ValueError("p must be prime")
        if not isinstance(lam, Partition):
            lam = Partition(lam)
        self.p = p
        self.type = lam
        self.moduli = tuple(p**e for e in lam.parts)
        self.size = math.prod(self.moduli) if self.moduli else 1
        self._tables = None

    def __repr__(self):
        return f"PGroupModule(p={self.p}, type={self.type.parts})"

    # -- elements -------------------------------------------------------

    def elements(self):
        """All coordinate tuples, in mixed-radix order."""
        return itertools.product(*(range(m) for m in self.moduli))

    @property
    def zero(self):
        return (0,) * len(self.moduli)

    def add(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def scale(self, c, x):
        return tuple((c * a) % m for a, m in zip(x, self.moduli))

    def torsion_elements(self, b: int) -> list[tuple[int, ...]]:
        """Elements killed by p^b, found by filtering the whole module."""
        pb = self.p**b
        return [x for x in self.elements() if all((pb * a) % m == 0 for a, m in zip(x, self.moduli))]

    def subgroup_generated(self, gens) -> frozenset:
        """Closure of a generating set under addition (equivalently, the
        Z_p-submodule generated, since pi acts by repeated addition)."""
        seen = {self.zero}
        queue = [self.zero]
        gens = list(gens)
        while queue:
            x = queue.pop()
            for v in gens:
                y = self.add(x, v)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def index_tables(self):
        """Element list, element -> index map, and the index-level addition
        table (built lazily; only for modules up to _TABLE_LIMIT elements)."""
        if self._tables is None:
            if self.size > self._TABLE_LIMIT:
                raise ValueError(f"module too large for tables ({self.size})")
            elems = list(self.elements())
            index = {x: i for i, x in enumerate(elems)}
            add = [
                tuple(index[self.add(x, y)] for y in elems) for x in elems
            ]
            self._tables = (elems, index, add)
        return self._tables

    def generated_subgroup_size(self, gen_indices) -> int:
        """Size of the subgroup generated by the elements at the given
        indices, by table-driven closure under adding the generators."""
        _, _, add = self.index_tables()
        seen = bytearray(self.size)
        seen[0] = 1
        count = 1
        queue = [0]
        full = self.size
        while queue:
            x = queue.pop()
            row = add[x]
            for g in gen_indices:
                y = row[g]
                if not seen[y]:
                    seen[y] = 1
                    count += 1
                    if count == full:
                        return count
                    queue.append(y)
        return count

    # -- endomorphisms ----------------------------------------------------

    def generator_image_choices(self) -> list[list[tuple[int, ...]]]:
        """For each generator e_j, the elements it may map to (the
        p^(lam_j)-torsion)."""
        return [self.torsion_elements(e) for e in self.type.parts]

    def endo_count_bound(self) -> int:
        """Size of the endomorphism enumeration space,
        p^(sum_ij min(lam_i, lam_j))."""
        parts = self.type.parts
        return self.p ** sum(min(a, b) for a in parts for b in parts)

    def endomorphisms(self):
        """All endomorphisms, as tuples of generator images."""
        return itertools.product(*self.generator_image_choices())

    def apply(self, endo, x):
        out = self.zero
        for coord, image in zip(x, endo):
            if coord:
                out = self.add(out, self.scale(coord, image))
        return out

    def compose(self, f, g):
        """f after g, as an endomorphism."""
        return tuple(self.apply(f, gj) for gj in g)

    def identity_endo(self):
        l = len(self.moduli)
        return tuple(
            tuple(1 if i == j else 0 for i in range(l)) for j in range(l)
        )

    def endo_add(self, f, g):
        return tuple(self.add(a, b) for a, b in zip(f, g))

    def endo_scale(self, c, f):
        return tuple(self.scale(c, v) for v in f)

    def endo_is_zero(self, f):
        return all(v == self.zero for v in f)

    def endo_invertible(self, endo) -> bool:
        """Invertibility via the induced map on N/pN (surjective iff
        bijective for a finite module)."""
        p = self.p
        l = len(self.moduli)
        if l == 0:
            return True
        rows = [[endo[j][i] % p for j in range(l)] for i in range(l)]
        rank = 0
        for col in range(l):
            piv = next((r for r in range(rank, l) if rows[r][col]), None)
            if piv is None:
                return False
            rows[rank], rows[piv] = rows[piv], rows[rank]
            inv = pow(rows[rank][col], p - 2, p)
            rows[rank] = [v * inv % p for v in rows[rank]]
            for r in range(l):
                if r != rank and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
            rank += 1
        return rank == l

    def endo_bijective_bruteforce(self, endo) -> bool:
        """Bijectivity checked by applying the map to every element."""
        images = {self.apply(endo, x) for x in self.elements()}
        return len(images) == self.size


def enumerate_endomorphisms(
    module: PGroupModule,
    mode: str = "all",
    b: int | None = None,
    budget: int | None = None,
) -> int:
    """Count endomorphisms by enumeration.

    mode: "all", "invertible", or "torsion" (with b >= 1, counting the maps
    killed by pi^b).
    """
    needed = module.endo_count_bound()
    _budget.check("enumerate_endomorphisms", needed, budget, _budget.DEFAULT_ENDO_BUDGET)
    if mode == "all":
        return sum(1 for _ in module.endomorphisms())
    if mode == "invertible":
        return sum(1 for e in module.endomorphisms() if module.endo_invertible(e))
    if mode == "torsion":
        if b is None or b < 1:
            raise ValueError("torsion mode needs b >= 1")
        pb = module.p**b
        moduli = module.moduli
        def killed(v):
            return all((pb * a) % m == 0 for a, m in zip(v, moduli))
        return sum(
            1 for e in module.endomorphisms() if all(killed(v) for v in e)
        )
    raise ValueError(f"unknown mode {mode!r}")


def automorphisms(module: PGroupModule, budget: int | None = None):
    """The invertible endomorphisms, as a list."""
    needed = module.endo_count_bound()
    _budget.check("automorphisms", needed, budget, _budget.DEFAULT_ENDO_BUDGET)
    return [e for e in module.endomorphisms() if module.endo_invertible(e)]


def module_groupoid_count(p: int, k: int, budget: int | None = None) -> Fraction:
    """Groupoid count of modules over Z_p[T] of size p^k: the sum over
    module types of |End| / |Aut|, both sides enumerated."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    from ..partitions import partitions

    total = Fraction(0)
    for lam in partitions(k):
        module = PGroupModule(p, lam)
        n_all = enumerate_endomorphisms(module, "all", budget=budget)
        n_inv = enumerate_endomorphisms(module, "invertible", budget=budget)
        total += Fraction(n_all, n_inv)
    return total


def conj_classes_aut(module: PGroupModule, budget: int | None = None) -> int:
    """Number of conjugacy classes of Aut(N), by explicit orbit partition of
    the conjugation action."""
    auts = automorphisms(module, budget=budget)
    _budget.check("conj_classes_aut", len(auts), budget, _budget.DEFAULT_CONJ_BUDGET)

    elems = list(module.elements())
    index = {x: i for i, x in enumerate(elems)}

    def as_perm(endo):
        return tuple(index[module.apply(endo, x)] for x in elems)

    perms = [as_perm(a) for a in auts]
    perm_set = set(perms)
    assert len(perm_set) == len(perms)

    def p_compose(f, g):
        return tuple(f[g[i]] for i in range(len(g)))

    def p_inverse(f):
        out = [0] * len(f)
        for i, v in enumerate(f):
            out[v] = i
        return tuple(out)

    inverses = {g: p_inverse(g) for g in perms}
    seen: set[tuple[int, ...]] = set()
    classes = 0
    for x in perms:
        if x in seen:
            continue
        classes += 1
        orbit = {p_compose(p_compose(g, x), inverses[g]) for g in perms}
        seen |= orbit
    return classes


@dataclass(frozen=True)
class SurjProbResult:
    enumerated: Fraction | None  # None when the enumeration exceeded budget
    closed_form: Fraction
    sample_space: int


def surj_prob(module: PGroupModule, d: int, budget: int | None = None) -> SurjProbResult:
    """Probability that d uniformly random elements generate the module.

    The closed form is (q^-(d-r+1); q^-1)_r with r the minimal number of
    generators (the length of the type), and 0 when d < r.  The enumerated
    value walks every d-multiset of elements, tests generation by subgroup
    closure, and weights by the number of orderings; it is skipped (None)
    when |N|^d exceeds the budget.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    p = module.p
    r = module.type.length
    if d < r:
        closed = Fraction(0)
    else:
        closed = qpoch_value(Fraction(1, p ** (d - r + 1)), Fraction(1, p), r)

    space = module.size**d
    limit = _budget.resolve(budget, _budget.DEFAULT_SURJ_BUDGET)
    if space > limit:
        return SurjProbResult(None, closed, space)

    use_tables = module.size <= module._TABLE_LIMIT
    generating = 0
    elems = list(module.elements())
    for combo in itertools.combinations_with_replacement(range(module.size), d):
        if use_tables:
            generates = module.generated_subgroup_size(combo) == module.size
        else:
            gens = [elems[i] for i in combo]
            generates = len(module.subgroup_generated(gens)) == module.size
        if generates:
            counts: dict[int, int] = {}
            for i in combo:
                counts[i] = counts.get(i, 0) + 1
            arrangements = math.factorial(d)
            for c in counts.values():
                arrangements //= math.factorial(c)
            generating += arrangements
    return SurjProbResult(Fraction(generating, space), closed, space)
