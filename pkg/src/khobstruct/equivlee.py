"""Equivariant Lee-theory ranks for links with a cyclic symmetry.

A link ``L`` with ``k`` components and a symmetry of order ``m``
permuting its components is described by :class:`PeriodicLinkData`.  The
Lee theory of ``L`` has one canonical generator per orientation of
``L``; the symmetry permutes orientations, and the equivariant theory
decomposes over the irreducible representations of the cyclic group
according to the isotropy of each orientation orbit.

The homological degree of an orientation ``o`` is twice the difference
of total pairwise linking numbers between ``o`` and the reference
orientation.  Quantum (filtration) offsets are *not* derivable from the
linking matrix alone; callers supply them per orientation-reversal pair
of orbits via ``s_pair`` (default 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import repcyc
from .laurent import BiLaurent


class InvalidLinkData(ValueError):
    """Raised when periodic link data fails its consistency checks."""


Signs = tuple[int, ...]


@dataclass(frozen=True)
class PeriodicLinkData:
    """Combinatorial shadow of a link with a cyclic symmetry.

    ``pi`` is the component permutation of one generator of the cyclic
    group, 0-based (``pi[i]`` is the image of component ``i``).  ``lk``
    is the symmetric pairwise linking matrix with zero diagonal.
    ``s_pair`` optionally assigns a quantum offset to an
    orientation-reversal pair of orbits, keyed by any orientation sign
    vector in the pair (entries +1 / -1 per component).
    """

    k: int
    m: int
    pi: tuple[int, ...]
    lk: tuple[tuple[int, ...], ...]
    s_pair: tuple[tuple[Signs, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.k < 1 or self.m < 1:
            raise InvalidLinkData("component count and symmetry order must be >= 1")
        if sorted(self.pi) != list(range(self.k)):
            raise InvalidLinkData("pi is not a permutation of the components")
        identity = list(range(self.k))
        perm = identity
        order = None
        for step in range(1, self.m + 1):
            perm = [self.pi[x] for x in perm]
            if perm == identity:
                order = step
                break
        if order is None or self.m % order != 0:
            raise InvalidLinkData("pi does not have order dividing m")
        if len(self.lk) != self.k or any(len(row) != self.k for row in self.lk):
            raise InvalidLinkData("linking matrix has wrong shape")
        for i in range(self.k):
            if self.lk[i][i] != 0:
                raise InvalidLinkData("linking matrix must have zero diagonal")
            for j in range(self.k):
                if self.lk[i][j] != self.lk[j][i]:
                    raise InvalidLinkData("linking matrix must be symmetric")
                if self.lk[self.pi[i]][self.pi[j]] != self.lk[i][j]:
                    raise InvalidLinkData("linking matrix is not equivariant under pi")

    def apply(self, signs: Signs) -> Signs:
        """Act on an orientation by the generator of the symmetry."""
        out = [0] * self.k
        for i in range(self.k):
            out[self.pi[i]] = signs[i]
        return tuple(out)

    def total_linking(self, signs: Signs) -> int:
        return sum(
            signs[i] * signs[j] * self.lk[i][j]
            for i in range(self.k)
            for j in range(i + 1, self.k)
        )

    def offset_for(self, signs: Signs) -> int:
        key = _pair_key(self, signs)
        for ref, s in self.s_pair:
            if _pair_key(self, tuple(ref)) == key:
                return s
        return 0


@dataclass(frozen=True)
class OrientationOrbit:
    """One orbit of orientations under the cyclic symmetry."""

    representative: Signs
    size: int
    isotropy: int  # order of the stabiliser subgroup
    hom_degree: int


def _orbit_of(data: PeriodicLinkData, signs: Signs) -> frozenset[Signs]:
    orbit = {signs}
    cur = data.apply(signs)
    while cur not in orbit:
        orbit.add(cur)
        cur = data.apply(cur)
    return frozenset(orbit)


def _pair_key(data: PeriodicLinkData, signs: Signs) -> Signs:
    """Canonical key of the reversal pair of orbits containing ``signs``."""
    orbit = _orbit_of(data, signs)
    mirror = _orbit_of(data, tuple(-s for s in signs))
    return min(orbit | mirror)


def enumerate_orbits(data: PeriodicLinkData) -> list[OrientationOrbit]:
    """All orientation orbits, sorted by representative."""
    if data.k > 24:
        raise InvalidLinkData("too many components to enumerate orientations")
    ref = (1,) * data.k
    base_lk = data.total_linking(ref)
    seen: set[Signs] = set()
    out: list[OrientationOrbit] = []
    for idx in range(2**data.k):
        signs = tuple(1 if (idx >> b) & 1 == 0 else -1 for b in range(data.k))
        if signs in seen:
            continue
        orbit = _orbit_of(data, signs)
        seen |= orbit
        rep = min(orbit)
        out.append(
            OrientationOrbit(
                representative=rep,
                size=len(orbit),
                isotropy=data.m // len(orbit),
                hom_degree=2 * (data.total_linking(signs) - base_lk),
            )
        )
    return sorted(out, key=lambda o: o.representative)


def _rep_dim(m: int, d: int, r: int) -> int:
    """Dimension over the ground field of the representation indexed by ``d``.

    ``d`` indexes the irreducible whose kernel is the subgroup of order
    ``d`` (so ``d = m`` is the trivial representation); its dimension is
    ``phi(m/d)`` in characteristic zero and the multiplicative order of
    ``r`` modulo ``m/d`` in characteristic ``r``.
    """
    if m % d != 0:
        raise ValueError("representation index must divide the symmetry order")
    if r == 0:
        return repcyc.totient(m // d)
    return repcyc.mult_order(r, m // d)


def elee_ranks(data: PeriodicLinkData, d: int, r: int = 0) -> dict[int, int]:
    """Ground-field ranks per homological degree for one representation.

    An orbit with isotropy of order ``d'`` contributes to the
    representation indexed by ``d`` exactly when ``d'`` divides ``d``,
    and then contributes the representation's full field dimension.
    """
    dim = _rep_dim(data.m, d, r)
    ranks: dict[int, int] = {}
    for orbit in enumerate_orbits(data):
        if d % orbit.isotropy == 0:
            ranks[orbit.hom_degree] = ranks.get(orbit.hom_degree, 0) + dim
    return ranks


def elee_poly(data: PeriodicLinkData, d: int, r: int = 0) -> BiLaurent:
    """Equivariant Lee polynomial (unnormalised) for one representation.

    Orbits are grouped into orientation-reversal pairs; a pair with
    quantum offset ``s`` contributes ``dim * t^h * q^s * (q + q^(-1))``.
    The rare self-paired orbit (its global reversal lands in the same
    orbit) carries a single generator per representation and contributes
    ``dim * t^h * q^s``; its true filtration level must then be encoded
    in the supplied offset.
    """
    dim = _rep_dim(data.m, d, r)
    orbits = {o.representative: o for o in enumerate_orbits(data)}
    done: set[Signs] = set()
    total = BiLaurent.zero()
    for rep, orbit in sorted(orbits.items()):
        if rep in done or d % orbit.isotropy != 0:
            continue
        mirror_rep = min(_orbit_of(data, tuple(-s for s in rep)))
        done.add(rep)
        done.add(mirror_rep)
        s = data.offset_for(rep)
        if mirror_rep == rep:
            total = total + BiLaurent.monomial(orbit.hom_degree, s, dim)
        else:
            total = total + BiLaurent.from_triples(
                [(orbit.hom_degree, s + 1, dim), (orbit.hom_degree, s - 1, dim)]
            )
    return total
