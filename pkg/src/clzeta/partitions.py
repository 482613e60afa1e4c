"""Integer partitions and the module statistics attached to them.

A partition lambda labels the isomorphism class of a finite module over a
discrete valuation ring with residue cardinality q, namely the direct sum of
S/pi^(lambda_i).  This module provides the combinatorial statistics used by
every partition sum in the package: transpose, part multiplicities, Durfee
squares, the endomorphism-ring type, and the exact |Aut| / |End| / torsion
orders as rational functions of q evaluated at exact rationals.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterator

from .series import qpoch_value


class Partition:
    """A weakly decreasing sequence of positive integers (immutable)."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError("parts must be positive")
            if i and parts[i - 1] < p:
                raise ValueError("parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, *_):
        raise AttributeError("Partition is immutable")

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def transpose(self) -> "Partition":
        """Conjugate partition: part j counts the rows of length >= j."""
        if not self.parts:
            return Partition()
        out = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                out[j] += 1
        return Partition(out)

    def multiplicities(self) -> dict[int, int]:
        """Map part value -> number of occurrences (absent parts omitted)."""
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def durfee_side(self) -> int:
        """Side length of the largest square fitting in the top-left corner."""
        k = 0
        for i, p in enumerate(self.parts):
            if p >= i + 1:
                k = i + 1
            else:
                break
        return k

    def durfee_decompose(self) -> tuple[int, "Partition", "Partition"]:
        """Split off the first Durfee square.

        Returns (k, right, below) where k is the square side, ``right`` is the
        subpartition to the right of the square (length <= k) and ``below``
        the one underneath it (parts <= k).  The partition is recovered by
        :func:`durfee_compose`.
        """
        k = self.durfee_side()
        right = Partition([p - k for p in self.parts[:k] if p > k])
        below = Partition(self.parts[k:])
        return k, right, below

    def durfee_partition(self) -> "Partition":
        """Sides of the successive Durfee squares; its size equals length."""
        sides = []
        cur = self
        while cur.parts:
            k, _, below = cur.durfee_decompose()
            sides.append(k)
            cur = below
        return Partition(sides)

    def square_type(self) -> "Partition":
        """Type of the endomorphism module: 2i-1 copies of the i-th part."""
        out = []
        for i, p in enumerate(self.parts):
            out.extend([p] * (2 * i + 1))
        out.sort(reverse=True)
        return Partition(out)

    # -- serialization: a partition is a JSON array of parts ------------

    def to_json(self) -> str:
        return json.dumps(list(self.parts))

    @classmethod
    def from_json(cls, s: str) -> "Partition":
        return cls(json.loads(s))


def durfee_compose(k: int, right: Partition, below: Partition) -> Partition:
    """Inverse of :meth:`Partition.durfee_decompose`."""
    if right.length > k:
        raise ValueError("right subpartition longer than the square side")
    if below.parts and below.parts[0] > k:
        raise ValueError("below subpartition wider than the square side")
    rows = [k + (right.parts[i] if i < right.length else 0) for i in range(k)]
    rows.extend(below.parts)
    return Partition(rows)


def partitions(
    size: int, max_part: int | None = None, max_len: int | None = None
) -> Iterator[Partition]:
    """All partitions of ``size`` within the bounds, in reverse lexicographic
    order by parts.  Deterministic; the empty partition is the unique
    partition of 0."""
    if size < 0:
        raise ValueError("size must be nonnegative")
    first = size if max_part is None else min(size, max_part)
    limit_len = size if max_len is None else min(max_len, size)

    def rec(remaining: int, cap: int, room: int, prefix: list[int]):
        if remaining == 0:
            yield Partition(prefix)
            return
        if room == 0:
            return
        for p in range(min(cap, remaining), 0, -1):
            # even taking the cap every time must be able to finish
            if p * room < remaining:
                break
            prefix.append(p)
            yield from rec(remaining - p, p, room - 1, prefix)
            prefix.pop()

    return rec(size, first, limit_len, [])


def partitions_up_to(
    max_size: int, max_part: int | None = None, max_len: int | None = None
) -> Iterator[Partition]:
    """Partitions of every size 0..max_size, smaller sizes first."""
    for n in range(max_size + 1):
        yield from partitions(n, max_part=max_part, max_len=max_len)


def partition_count(size: int) -> int:
    """p(size), by enumeration (oracle use only; sizes are tiny)."""
    return sum(1 for _ in partitions(size))


def _sum_transpose_squares(lam: Partition) -> int:
    return sum(c * c for c in lam.transpose().parts)


def aut_order(lam: Partition, q) -> Fraction:
    """|Aut(N)| for a module N of type lam over a DVR with residue size q.

    Equals q^(sum of squared transpose parts) * prod_i (1/q; 1/q)_{m_i}.
    """
    q = Fraction(q)
    if q <= 1:
        raise ValueError("q must exceed 1")
    r = 1 / q
    out = q ** _sum_transpose_squares(lam)
    for m in lam.multiplicities().values():
        out *= qpoch_value(r, r, m)
    return out


def end_order(lam: Partition, q) -> Fraction:
    """|End(N)| = q^(sum of squared transpose parts)."""
    q = Fraction(q)
    if q <= 1:
        raise ValueError("q must exceed 1")
    return q ** _sum_transpose_squares(lam)


def end_torsion_order(lam: Partition, b: int, q) -> Fraction:
    """Order of the pi^b-torsion of End(N): q^(sum of first b squared
    transpose parts)."""
    if b < 1:
        raise ValueError("b must be >= 1")
    q = Fraction(q)
    if q <= 1:
        raise ValueError("q must exceed 1")
    cols = lam.transpose().parts[:b]
    return q ** sum(c * c for c in cols)
