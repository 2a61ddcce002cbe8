"""Cyclotomic cosets and irreducible representations of cyclic groups.

For a cyclic group of order ``m`` acting over a field ``F`` of
characteristic ``r`` (with ``r = 0`` or a prime not dividing ``m``), the
isomorphism classes of irreducible ``F``-representations are indexed by
orbits of multiplication by ``r`` on ``Z/m`` -- the *cyclotomic cosets*.
Each coset ``X`` sits inside the residues of a fixed gcd ``d`` with
``m``; the corresponding irreducible has ``F``-dimension ``|X|``, which
equals the multiplicative order of ``r`` modulo ``m/d`` (for ``r = 0``
the Galois orbit has size ``phi(m/d)`` instead).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


class NotCoprime(ValueError):
    """Raised when an operation requires coprime arguments."""


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (adequate for small moduli)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    """Euler's totient: the number of units modulo ``n``."""
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def mult_order(r: int, n: int) -> int:
    """Multiplicative order of ``r`` modulo ``n``.

    Requires ``gcd(r, n) = 1``.  The order divides ``phi(n)``, so only
    divisors of the totient are tried.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    if n == 1:
        return 1
    r %= n
    if math.gcd(r, n) != 1:
        raise NotCoprime(f"{r} is not a unit modulo {n}")
    phi = totient(n)
    for f in sorted(_divisors(phi)):
        if pow(r, f, n) == 1:
            return f
    raise AssertionError("order must divide the totient")


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class CyclotomicCoset:
    """One orbit of multiplication by ``r`` on ``Z/m``.

    ``d = gcd(x, m)`` is constant on the orbit; ``elements`` is the full
    orbit and ``dim`` the dimension over the ground field of the
    irreducible representation the coset indexes.
    """

    m: int
    r: int
    d: int
    elements: frozenset[int]

    @property
    def rep(self) -> int:
        return min(self.elements)

    @property
    def dim(self) -> int:
        return len(self.elements)


def cosets(m: int, r: int) -> list[CyclotomicCoset]:
    """All cyclotomic cosets of ``Z/m`` in characteristic ``r``.

    ``r = 0`` gives the characteristic-zero classification: one coset
    per divisor ``d`` of ``m``, consisting of all residues of gcd ``d``
    (a single Galois orbit of size ``phi(m/d)``).
    """
    if m < 1:
        raise ValueError("group order must be positive")
    if r != 0 and math.gcd(r, m) != 1:
        raise NotCoprime(f"characteristic {r} divides the group order {m}")
    out: list[CyclotomicCoset] = []
    if r == 0:
        for d in _divisors(m):
            # gcd(0, m) = m, so d = m indexes the zero residue.
            elems = frozenset(x for x in range(m) if math.gcd(x or m, m) == d)
            out.append(CyclotomicCoset(m=m, r=0, d=d, elements=elems))
        return sorted(out, key=lambda c: c.rep)
    seen: set[int] = set()
    for x in range(m):
        if x in seen:
            continue
        orbit = set()
        y = x
        while y not in orbit:
            orbit.add(y)
            y = (y * r) % m
        seen |= orbit
        d = math.gcd(x or m, m)
        out.append(CyclotomicCoset(m=m, r=r, d=d, elements=frozenset(orbit)))
    return sorted(out, key=lambda c: c.rep)


def coset_of(m: int, r: int, x: int) -> CyclotomicCoset:
    """The coset of ``Z/m`` containing the residue ``x``."""
    x %= m
    for c in cosets(m, r):
        if x in c.elements:
            return c
    raise AssertionError("cosets partition Z/m")


def is_max_order(p: int, n: int, r: int) -> bool:
    """Whether ``r`` generates the full unit group modulo ``p^n``.

    ``r = 0`` (characteristic zero) always qualifies: the rational
    cyclotomic classification already has one irreducible per divisor.
    """
    if r == 0:
        return True
    if math.gcd(r, p) != 1:
        return False
    return mult_order(r, p**n) == totient(p**n)


def _prime_of(m: int) -> tuple[int, int]:
    fac = factorize(m)
    if len(fac) != 1:
        raise ValueError(f"{m} is not a prime power")
    ((p, n),) = fac.items()
    return p, n


def coset_scale(chi: CyclotomicCoset, s: int) -> CyclotomicCoset:
    """Multiply a prime-power coset pointwise by ``p^s``.

    For ``chi`` in the cosets of ``Z/p^n``, returns the coset containing
    ``p^s * x`` for ``x`` in ``chi``; pointwise scaling maps cosets onto
    cosets because multiplication by ``p^s`` commutes with
    multiplication by ``r``.
    """
    p, _n = _prime_of(chi.m)
    x = chi.rep
    return coset_of(chi.m, chi.r, (p**s * x) % chi.m)


@dataclass(frozen=True)
class RestrictionResult:
    """Decomposition of an irreducible restricted to the ``p^s``-subgroup.

    ``trivial`` is True when the restriction is a sum of copies of the
    trivial representation; otherwise ``target`` names the coset over
    the subgroup and ``copies`` the multiplicity.
    """

    trivial: bool
    copies: int
    target: CyclotomicCoset | None = None


def restriction_mult(chi: CyclotomicCoset, s: int) -> RestrictionResult:
    """Restrict the irreducible of ``chi`` (over ``Z/p^n``) to ``Z/p^s``.

    Writing ``d = p^t`` for the gcd of ``chi``: when ``s <= t`` the
    subgroup acts trivially and the restriction is ``dim(chi)`` copies
    of the trivial representation.  Otherwise the restriction is
    isotypic on the coset of ``x mod p^s`` with multiplicity
    ``dim(chi) / dim(target)``.
    """
    p, n = _prime_of(chi.m)
    if not 0 <= s <= n:
        raise ValueError("subgroup exponent out of range")
    t = 0
    d = chi.d
    while d % p == 0:
        d //= p
        t += 1
    if d != 1:
        raise ValueError("coset gcd is not a power of the modulus prime")
    if s <= t:
        return RestrictionResult(trivial=True, copies=chi.dim)
    target = coset_of(p**s, chi.r, chi.rep % (p**s))
    if chi.dim % target.dim != 0:
        raise AssertionError("restriction multiplicity must be integral")
    return RestrictionResult(trivial=False, copies=chi.dim // target.dim, target=target)
