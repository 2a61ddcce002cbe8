"""Classical periodicity obstructions: Alexander, HOMFLYPT, torsion, linking.

These tests predate the decomposition criterion and serve as
comparators:

* Murasugi congruence -- the Alexander polynomial of a ``p``-periodic
  knot satisfies ``delta = +-t^k * delta0^p * (1 + t + ... + t^(l-1))^(p-1)``
  modulo ``p``, where ``delta0`` is the Alexander polynomial of the
  quotient and ``l`` the linking number with the axis.
* HOMFLYPT ideal membership -- ``P(a, z) = P(a^(-1), z)`` modulo the
  ideal ``(p, z^p)`` inside the subring generated by ``a``, ``a^(-1)``,
  ``z`` and ``(a + a^(-1))/z``.
* Multiplicity condition on the torsion of the double branched cover.
* Resultant ratios ``S_k`` refining the determinant condition.
* Linking-number multiplicity conditions for periodic links.

Alexander-type polynomials are plain :class:`~khobstruct.laurent.QLaurent`
values read in the variable ``t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .equivlee import PeriodicLinkData
from .laurent import QLaurent


class NotInRing(ValueError):
    """A claimed HOMFLYPT polynomial lies outside the allowed subring."""


class QuotientNotSubgroup(ValueError):
    """Claimed quotient torsion does not embed in the total torsion."""


class ZeroDenominator(ZeroDivisionError):
    """A resultant ratio has a vanishing denominator."""


@dataclass(frozen=True)
class HomflyPoly:
    """A HOMFLYPT polynomial as a finite map ``(a_exp, z_exp) -> coeff``."""

    terms: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_triples(cls, triples) -> "HomflyPoly":
        out: dict[tuple[int, int], int] = {}
        for a, z, c in triples:
            key = (int(a), int(z))
            out[key] = out.get(key, 0) + int(c)
        return cls(terms=tuple(sorted((k, c) for k, c in out.items() if c)))

    def term_map(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def mirror_a(self) -> "HomflyPoly":
        return HomflyPoly.from_triples(
            [(-a, z, c) for (a, z), c in self.terms]
        )

    def sub(self, other: "HomflyPoly") -> "HomflyPoly":
        trip = [(a, z, c) for (a, z), c in self.terms]
        trip += [(a, z, -c) for (a, z), c in other.terms]
        return HomflyPoly.from_triples(trip)

    def z_slices(self) -> dict[int, dict[int, int]]:
        """Group terms by ``z``-exponent into ``a``-polynomials."""
        out: dict[int, dict[int, int]] = {}
        for (a, z), c in self.terms:
            out.setdefault(z, {})[a] = c
        return out

    def check_ring_membership(self) -> None:
        """Negative ``z`` powers must come from ``((a + a^(-1))/z)``-powers."""
        for z, slice_a in self.z_slices().items():
            if z < 0 and not _divisible_by_a_plus_ainv(slice_a, -z, 0):
                raise NotInRing(
                    f"a-coefficients at z^{z} are not divisible by (a+a^(-1))^{-z}"
                )


def _divisible_by_a_plus_ainv(slice_a: dict[int, int], e: int, p: int) -> bool:
    """Does ``(a + a^(-1))^e`` divide the Laurent polynomial in ``a``?

    Works over the integers (``p = 0``) or modulo a prime ``p``.  Since
    ``a`` is a unit, this is division by ``(a^2 + 1)^e`` after clearing
    denominators.
    """
    coeffs = {a: (c % p if p else c) for a, c in slice_a.items()}
    coeffs = {a: c for a, c in coeffs.items() if c}
    if not coeffs:
        return True
    lo = min(coeffs)
    vec = [coeffs.get(a, 0) for a in range(lo, max(coeffs) + 1)]
    for _ in range(e):
        vec = _divide_once_a2_plus_1(vec, p)
        if vec is None:
            return False
    return True


def _divide_once_a2_plus_1(vec: list[int], p: int) -> list[int] | None:
    """One exact division of a coefficient vector by ``x^2 + 1`` (x = a)."""
    n = len(vec)
    if n < 3:
        return None if any(vec) else []
    quo = [0] * (n - 2)
    rem = list(vec)
    for i in range(n - 3, -1, -1):
        c = rem[i + 2]
        quo[i] = c % p if p else c
        rem[i + 2] -= c
        rem[i] -= c
        if p:
            rem[i] %= p
            rem[i + 2] %= p
    if any((r % p if p else r) for r in rem):
        return None
    return quo


def homflypt_check(poly: HomflyPoly, p: int) -> bool:
    """HOMFLYPT test for ``p``-periodicity: True means no obstruction.

    Forms ``D = P(a, z) - P(a^(-1), z)`` and tests membership of ``D``
    in the ideal ``(p, z^p)`` of the allowed subring: slicing
    ``D = sum_k d_k(a) z^k``, membership holds iff for every ``k < p``
    the reduction of ``d_k`` modulo ``p`` is divisible by
    ``(a + a^(-1))^(p-k)``; slices with ``k >= p`` are absorbed by
    ``z^p`` directly.
    """
    poly.check_ring_membership()
    diff = poly.sub(poly.mirror_a())
    for z, slice_a in diff.z_slices().items():
        if z >= p:
            continue
        if not _divisible_by_a_plus_ainv(slice_a, p - z, p):
            return False
    return True


# -- Alexander-polynomial tests ------------------------------------------


def _t_poly(q: QLaurent) -> sympy.Poly:
    """View a Laurent polynomial in ``t`` as an ordinary sympy Poly."""
    t = sympy.Symbol("t")
    terms = q.terms
    if not terms:
        return sympy.Poly(0, t)
    lo = min(terms)
    expr = sum(c * t ** (j - lo) for j, c in terms.items())
    return sympy.Poly(expr, t)


def divides_up_to_units(delta0: QLaurent, delta: QLaurent) -> bool:
    """Whether ``delta0`` divides ``delta`` in the Laurent ring over Z."""
    if not delta0:
        return not delta
    if not delta:
        return True
    quo, rem = _t_poly(delta).set_domain("QQ").div(_t_poly(delta0).set_domain("QQ"))
    return rem.is_zero and all(c.is_integer for c in quo.all_coeffs())


def _normalized_mod(q: QLaurent, p: int) -> tuple[int, ...]:
    """Coefficient tuple modulo ``p``, shifted to lowest surviving degree."""
    terms = {j: c % p for j, c in q.terms.items() if c % p}
    if not terms:
        return ()
    lo, hi = min(terms), max(terms)
    return tuple(terms.get(j, 0) for j in range(lo, hi + 1))


def murasugi_check(
    delta: QLaurent, delta0: QLaurent, p: int, l_max: int
) -> set[int]:
    """Feasible axis linking numbers for the Alexander congruence.

    Returns the set of ``l`` in ``[1, l_max]`` such that
    ``delta = +-t^k * delta0^p * (1 + t + ... + t^(l-1))^(p-1) (mod p)``
    for some shift ``k``; an empty set obstructs this quotient
    polynomial.  Divisibility of ``delta`` by ``delta0`` over the
    integers (up to units) is a necessary condition and is checked
    first.
    """
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    if not divides_up_to_units(delta0, delta):
        return set()
    target_base = _normalized_mod(delta, p)
    neg = tuple((-c) % p for c in target_base)
    feasible: set[int] = set()
    delta0_p = QLaurent({0: 1})
    for _ in range(p):
        delta0_p = delta0_p * delta0
    for l in range(1, l_max + 1):
        cyc = QLaurent({j: 1 for j in range(l)})
        cand = delta0_p
        for _ in range(p - 1):
            cand = cand * cyc
        norm = _normalized_mod(cand, p)
        if norm == target_base or norm == neg:
            feasible.add(l)
    return feasible


# -- Branched-cover torsion tests ------------------------------------------


def torsion_order(q: int, p: int) -> int:
    """Least ``l >= 1`` with ``q^l = +-1`` modulo ``p``."""
    if p < 2 or math.gcd(q, p) != 1:
        raise ValueError("q must be a unit modulo p")
    acc = 1
    for l in range(1, p + 1):
        acc = (acc * q) % p
        if acc == 1 % p or acc == (p - 1) % p:
            return l
    raise AssertionError("order search must terminate within p steps")


TorsionDecomp = list[tuple[int, int, int]]  # (prime q, exponent i, multiplicity)


def _torsion_map(decomp: TorsionDecomp) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for q, i, mult in decomp:
        if i < 1 or mult < 1:
            raise ValueError("torsion exponents and multiplicities must be >= 1")
        out[(q, i)] = out.get((q, i), 0) + mult
    return out


def naik_multiplicity_check(
    torsion: TorsionDecomp, torsion_quotient: TorsionDecomp, p: int
) -> bool:
    """Multiplicity condition on the double-branched-cover torsion.

    For each prime power ``q^i`` (``q != p``), the multiplicity of
    ``Z/q^i`` in the part of the torsion not accounted for by the
    quotient must be divisible by ``2*l_q`` where ``q^(l_q) = +-1``
    modulo ``p``.
    """
    total = _torsion_map(torsion)
    quot = _torsion_map(torsion_quotient)
    keys = sorted(set(total) | set(quot))
    for q, i in keys:
        extra = total.get((q, i), 0) - quot.get((q, i), 0)
        if extra < 0:
            raise QuotientNotSubgroup(
                f"quotient multiplicity of Z/{q}^{i} exceeds the total"
            )
        if q == p:
            continue
        if extra % (2 * torsion_order(q, p)) != 0:
            return False
    return True


def sk_ratio(delta: QLaurent, delta0: QLaurent, k: int) -> Fraction:
    """Ratio of products of Alexander values over ``k``-th roots of unity.

    Computed exactly as the ratio of integer resultants with
    ``(t^k - 1)/(t - 1)``; absolute values are taken, matching the usual
    determinant normalisation (``k = 2`` gives ``|delta(-1)|`` when the
    denominator polynomial is 1).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    t = sympy.Symbol("t")
    cyclic = sympy.Poly(sum(t**i for i in range(k)), t)
    num = abs(int(sympy.resultant(_t_poly(delta).as_expr(), cyclic.as_expr(), t)))
    den = abs(int(sympy.resultant(_t_poly(delta0).as_expr(), cyclic.as_expr(), t)))
    if den == 0:
        raise ZeroDenominator("quotient polynomial vanishes at a root of unity")
    return Fraction(num, den)


def sk_valuation_check(
    delta: QLaurent, delta0: QLaurent, k: int, p: int
) -> dict[int, tuple[int, int, bool]]:
    """Per-prime valuations of ``S_k`` with the ``2*l_q`` divisibility.

    Returns ``{q: (s_q, l_q, ok)}`` for each prime ``q != p`` dividing
    the (integer) ratio, where ``ok`` means ``2*l_q`` divides ``s_q``.
    """
    ratio = sk_ratio(delta, delta0, k)
    if ratio.denominator != 1:
        raise ValueError("S_k is not an integer for this input")
    out: dict[int, tuple[int, int, bool]] = {}
    for q, s_q in sympy.factorint(ratio.numerator).items():
        q = int(q)
        if q == p:
            continue
        l_q = torsion_order(q, p)
        out[q] = (int(s_q), l_q, s_q % (2 * l_q) == 0)
    return out


# -- Linking numbers and determinants ---------------------------------------


def linking_obstruction(data: PeriodicLinkData, p: int) -> bool:
    """Linking-matrix condition for ``p``-periodicity: True = passes.

    Components fixed by the symmetry must have pairwise linking numbers
    divisible by ``p``.  Among pairs touching a moved component, every
    linking value must occur with multiplicity divisible by ``p`` (each
    such pair has an orbit of size ``p``, so an equivariant matrix
    automatically complies).  The fixed/moved split is applied
    orbit-by-orbit; this refinement of the two pure cases is recorded in
    reports as an interpretation.
    """
    fixed = {i for i in range(data.k) if data.pi[i] == i}
    counts: dict[int, int] = {}
    for i in range(data.k):
        for j in range(i + 1, data.k):
            v = data.lk[i][j]
            if i in fixed and j in fixed:
                if v % p != 0:
                    return False
            else:
                counts[v] = counts.get(v, 0) + 1
    return all(cnt % p == 0 for cnt in counts.values())


def det_divisibility(det_l: int, det_lquot: int) -> bool:
    """Whether the quotient determinant divides the total (0 divides only 0)."""
    if det_lquot == 0:
        return det_l == 0
    return det_l % det_lquot == 0
