"""Formal Dirichlet series prefixes with exact rational coefficients.

A prefix stores a_1..a_N of sum a_n n^(-s).  On top of the ring operations
(convolution product and the substitution s -> m*s + n) this module builds
the Dedekind zeta prefixes of Z, Z_p, F_q[T] and F_q[[T]], Euler products
over primes, the Cohen-Lenstra zeta of a local base, and the Cohen-Lenstra
zeta of a polynomial ring over Z or F_q[T].

The polynomial-ring zeta is an infinite double product of shifted zetas.  It
is assembled from finitely many literal shifted-zeta factors while the
remaining tail of each block is resummed exactly: grouped per prime p, the
tail's p^(-ms) coefficient is the complete homogeneous sum of a geometric
sequence, m-fold products of p^(-j) over j >= J, which telescopes to
p^(-Jm) / (1/p; 1/p)_m.  No numeric cutoff is involved; every coefficient of
the returned prefix is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .series import qpoch_value


class DirichletError(Exception):
    pass


class UnsupportedRingError(DirichletError):
    """The base ring does not support the requested construction."""


class NonUnitFactorError(DirichletError):
    """An Euler factor whose leading coefficient is not 1."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def primes_up_to(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if _is_prime(p)]


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = min(d for d in range(2, n + 1) if n % d == 0)
    while n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True)
class BaseRing:
    """Descriptor for a base ring with a well-defined Dedekind zeta.

    kind is one of "Z", "Zp", "FqPoly", "FqPowerSeries"; ``param`` is the
    prime p for Zp and the residue cardinality q (a prime power) for the
    function-field rings.
    """

    kind: str
    param: int | None = None

    def __post_init__(self):
        if self.kind == "Z":
            if self.param is not None:
                raise ValueError("Z takes no parameter")
        elif self.kind == "Zp":
            if not (isinstance(self.param, int) and _is_prime(self.param)):
                raise ValueError("Zp requires a prime parameter")
        elif self.kind in ("FqPoly", "FqPowerSeries"):
            if not (isinstance(self.param, int) and is_prime_power(self.param)):
                raise ValueError(f"{self.kind} requires a prime-power parameter")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    @property
    def is_local(self) -> bool:
        return self.kind in ("Zp", "FqPowerSeries")

    @property
    def residue_cardinality(self) -> int:
        if not self.is_local:
            raise UnsupportedRingError(f"{self.kind} is not local")
        return self.param


def ring_Z() -> BaseRing:
    return BaseRing("Z")


def ring_Zp(p: int) -> BaseRing:
    return BaseRing("Zp", p)


def ring_FqPoly(q: int) -> BaseRing:
    return BaseRing("FqPoly", q)


def ring_FqPowerSeries(q: int) -> BaseRing:
    return BaseRing("FqPowerSeries", q)


class DirichletSeries:
    """Finite prefix a_1..a_N of a formal Dirichlet series."""

    __slots__ = ("_a",)

    def __init__(self, coeffs: Sequence):
        a = [Fraction(c) for c in coeffs]
        if not a:
            raise ValueError("length must be >= 1")
        object.__setattr__(self, "_a", tuple(a))

    def __setattr__(self, *_):
        raise AttributeError("DirichletSeries is immutable")

    @classmethod
    def unit(cls, length: int) -> "DirichletSeries":
        return cls([1] + [0] * (length - 1))

    @property
    def length(self) -> int:
        return len(self._a)

    def __getitem__(self, n: int) -> Fraction:
        """1-indexed coefficient a_n."""
        if not 1 <= n <= len(self._a):
            raise IndexError(f"index {n} outside prefix 1..{len(self._a)}")
        return self._a[n - 1]

    def coefficients(self) -> tuple[Fraction, ...]:
        return self._a

    def truncate(self, length: int) -> "DirichletSeries":
        if length > len(self._a):
            raise ValueError("cannot extend a prefix")
        return DirichletSeries(self._a[:length])

    def __eq__(self, other):
        if not isinstance(other, DirichletSeries):
            return NotImplemented
        return self._a == other._a

    def __hash__(self):
        return hash(self._a)

    def __repr__(self):
        head = ", ".join(str(c) for c in self._a[:8])
        tail = ", ..." if len(self._a) > 8 else ""
        return f"DirichletSeries([{head}{tail}])"

    def __mul__(self, other):
        if not isinstance(other, DirichletSeries):
            return NotImplemented
        n = min(self.length, other.length)
        out = [Fraction(0)] * n
        for d in range(1, n + 1):
            ad = self._a[d - 1]
            if not ad:
                continue
            for e in range(1, n // d + 1):
                be = other._a[e - 1]
                if be:
                    out[d * e - 1] += ad * be
        return DirichletSeries(out)

    def partial_sums(self) -> list[Fraction]:
        out = []
        acc = Fraction(0)
        for c in self._a:
            acc += c
            out.append(acc)
        return out

    def to_json_dict(self) -> dict:
        return {
            "N": self.length,
            "a": [f"{c.numerator}/{c.denominator}" for c in self._a],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, d: dict) -> "DirichletSeries":
        if d["N"] != len(d["a"]):
            raise ValueError("inconsistent length")
        return cls([Fraction(c) for c in d["a"]])


def dir_mul(f: DirichletSeries, g: DirichletSeries) -> DirichletSeries:
    return f * g


def shift(
    f: DirichletSeries, m: int, n: int, length: int | None = None
) -> DirichletSeries:
    """The substitution s -> m*s + n: a_k of the result is a_j(f) * j^(-n)
    when k = j^m and zero otherwise."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    if length is None:
        length = f.length
    out = [Fraction(0)] * length
    j = 1
    while j**m <= length:
        aj = f[j] if j <= f.length else None
        if aj is None:
            raise ValueError(f"prefix of f too short for index {j}^{m}")
        if aj:
            out[j**m - 1] = aj * Fraction(1, j**n) if n >= 0 else aj * j ** (-n)
        j += 1
    return DirichletSeries(out)


def dedekind_zeta(ring: BaseRing, length: int) -> DirichletSeries:
    """Prefix of the Dedekind zeta function of the base ring.

    Z: all ones.  Zp: 1 at powers of p.  FqPoly: q^k at q^k (monic
    polynomials of degree k).  FqPowerSeries: 1 at powers of q.
    """
    a = [Fraction(0)] * length
    a[0] = Fraction(1)
    if ring.kind == "Z":
        a = [Fraction(1)] * length
    elif ring.kind == "Zp":
        n = ring.param
        while n <= length:
            a[n - 1] = Fraction(1)
            n *= ring.param
    elif ring.kind == "FqPoly":
        q = ring.param
        n, k = q, 1
        while n <= length:
            a[n - 1] = Fraction(q) ** k
            n *= q
            k += 1
    elif ring.kind == "FqPowerSeries":
        q = ring.param
        n = q
        while n <= length:
            a[n - 1] = Fraction(1)
            n *= q
    return DirichletSeries(a)


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def euler_product(
    factors: Mapping[int, Sequence[Fraction]], length: int
) -> DirichletSeries:
    """Product over primes of local factors given in p^(-s).

    ``factors`` maps a prime p to the list [c_0, c_1, ...] of coefficients of
    its local factor sum_k c_k p^(-ks); c_0 must be 1.  Primes not present
    contribute the unit factor.  The result's a_n multiplies the local
    coefficients along the factorization of n.
    """
    locals_: dict[int, list[Fraction]] = {}
    for p, cs in factors.items():
        if not _is_prime(p):
            raise ValueError(f"Euler factor index {p} is not prime")
        cs = [Fraction(c) for c in cs]
        if not cs or cs[0] != 1:
            raise NonUnitFactorError(f"local factor at {p} does not start with 1")
        locals_[p] = cs
    out = [Fraction(0)] * length
    out[0] = Fraction(1)
    for n in range(2, length + 1):
        val = Fraction(1)
        for p, e in _factorize(n):
            cs = locals_.get(p)
            if cs is None:
                # an absent prime acts as the unit factor, killing a_{p^e}
                val = Fraction(0)
                break
            if e >= len(cs):
                raise ValueError(f"local factor at {p} too short for exponent {e}")
            val *= cs[e]
            if not val:
                break
        out[n - 1] = val
    return DirichletSeries(out)


def cohen_lenstra_local_zeta(ring: BaseRing, length: int) -> DirichletSeries:
    """Cohen-Lenstra zeta of a local base: the product over i >= 1 of
    zeta_S(s + i), resummed exactly per coefficient.

    The q^(-ks) coefficient is the degree-k complete homogeneous sum of the
    geometric values q^(-i), i >= 1, which equals q^(-k) / (1/q; 1/q)_k.
    It also equals the sum of 1/|Aut| over all module types of size k.
    """
    if not ring.is_local:
        raise UnsupportedRingError("Cohen-Lenstra local zeta needs Zp or FqPowerSeries")
    q = ring.residue_cardinality
    r = Fraction(1, q)
    a = [Fraction(0)] * length
    a[0] = Fraction(1)
    n, k = q, 1
    while n <= length:
        a[n - 1] = r**k / qpoch_value(r, r, k)
        n *= q
        k += 1
    return DirichletSeries(a)


def local_polynomial_ring_coefficients(
    lead: Fraction, ratio: Fraction, kmax: int
) -> list[Fraction]:
    """Coefficients c_0..c_kmax in x of prod_{i>=1, j>=1} 1/(1 - lead *
    ratio^(j-1) * x^i).

    The j-product for fixed i is resummed by Euler's identity: its x^(im)
    coefficient is lead^m / (ratio; ratio)_m.  The i-blocks are then
    convolved.  Used with x = p^(-s), lead = 1, ratio = 1/p for the local
    factor of the polynomial-ring zeta over Z, and with x = q^(-s), lead = q,
    ratio = 1/q for the function-field plane.
    """
    out = [Fraction(0)] * (kmax + 1)
    out[0] = Fraction(1)
    for i in range(1, kmax + 1):
        block = [Fraction(0)] * (kmax + 1)
        m = 0
        while i * m <= kmax:
            block[i * m] = lead**m / qpoch_value(ratio, ratio, m)
            m += 1
        new = [Fraction(0)] * (kmax + 1)
        for dcur, c in enumerate(out):
            if not c:
                continue
            for dblk in range(0, kmax + 1 - dcur):
                if block[dblk]:
                    new[dcur + dblk] += c * block[dblk]
        out = new
    return out


def local_cl_coefficient(p: int, k: int) -> Fraction:
    """The p^(-ks) coefficient of the polynomial-ring Cohen-Lenstra zeta
    over Z, computed purely locally."""
    if not _is_prime(p):
        raise ValueError("p must be prime")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return local_polynomial_ring_coefficients(Fraction(1), Fraction(1, p), k)[k]


def _tail_block(length: int, first_shift: int) -> DirichletSeries:
    """Exact prefix of prod_{j >= first_shift} zeta_Z(s + j).

    Multiplicative; at p^m the coefficient is the complete homogeneous sum of
    the geometric sequence p^(-first_shift), p^(-first_shift - 1), ..., which
    resums to p^(-first_shift * m) / (1/p; 1/p)_m.
    """
    out = [Fraction(0)] * length
    out[0] = Fraction(1)
    cache: dict[tuple[int, int], Fraction] = {}
    for n in range(2, length + 1):
        val = Fraction(1)
        for p, e in _factorize(n):
            key = (p, e)
            c = cache.get(key)
            if c is None:
                r = Fraction(1, p)
                c = r ** (first_shift * e) / qpoch_value(r, r, e)
                cache[key] = c
            val *= c
        out[n - 1] = val
    return DirichletSeries(out)


def _int_root(n: int, i: int) -> int:
    """Largest m with m^i <= n."""
    m = int(round(n ** (1.0 / i)))
    while m**i > n:
        m -= 1
    while (m + 1) ** i <= n:
        m += 1
    return m


def polynomial_ring_cl_zeta(
    ring: BaseRing, length: int, literal_factors: int = 4
) -> DirichletSeries:
    """Cohen-Lenstra zeta prefix of S[T] for a global base S (Z or F_q[T]):
    the double product over i, j >= 1 of zeta_S(i*s + j - 1).

    For S = Z the i-block prod_j zeta_Z(i*s + j - 1) is built from
    ``literal_factors`` literal shifted factors times the exact tail block,
    then pushed to index space by s -> i*s; the blocks are convolved.  The
    result is independent of ``literal_factors`` because the tail is resummed
    exactly.  Only blocks with 2^i <= length can touch the window.  For
    S = F_q[T] the product collapses to a single geometric pattern supported
    on powers of q.
    """
    if literal_factors < 0:
        raise ValueError("literal_factors must be nonnegative")
    if ring.kind == "Z":
        result = DirichletSeries.unit(length)
        i = 1
        while 2**i <= length:
            block_len = _int_root(length, i)
            zeta = dedekind_zeta(ring_Z(), block_len)
            g = DirichletSeries.unit(block_len)
            for j in range(1, literal_factors + 1):
                g = g * shift(zeta, 1, j - 1)
            g = g * _tail_block(block_len, literal_factors)
            result = result * shift(g, i, 0, length=length)
            i += 1
        return result
    if ring.kind == "FqPoly":
        q = ring.param
        kmax = 0
        while q ** (kmax + 1) <= length:
            kmax += 1
        cs = local_polynomial_ring_coefficients(Fraction(q), Fraction(1, q), kmax)
        a = [Fraction(0)] * length
        a[0] = Fraction(1)
        for k in range(1, kmax + 1):
            a[q**k - 1] = cs[k]
        return DirichletSeries(a)
    raise UnsupportedRingError("polynomial-ring zeta needs a global base (Z or FqPoly)")
