"""Tests for orientation-orbit enumeration and equivariant Lee ranks."""

import pytest

from khobstruct.equivlee import (
    InvalidLinkData,
    PeriodicLinkData,
    elee_poly,
    elee_ranks,
    enumerate_orbits,
)
from khobstruct.laurent import BiLaurent
from khobstruct.repcyc import totient


def knot_data(m=5):
    return PeriodicLinkData(k=1, m=m, pi=(0,), lk=((0,),))


def test_validation_rejects_bad_data():
    with pytest.raises(InvalidLinkData):
        PeriodicLinkData(k=2, m=2, pi=(0, 0), lk=((0, 1), (1, 0)))
    with pytest.raises(InvalidLinkData):  # order 2 does not divide 3
        PeriodicLinkData(k=2, m=3, pi=(1, 0), lk=((0, 1), (1, 0)))
    with pytest.raises(InvalidLinkData):  # asymmetric matrix
        PeriodicLinkData(k=2, m=2, pi=(0, 1), lk=((0, 1), (2, 0)))
    with pytest.raises(InvalidLinkData):  # not equivariant
        PeriodicLinkData(
            k=3, m=3, pi=(1, 2, 0), lk=((0, 1, 0), (1, 0, 0), (0, 0, 0))
        )


def test_knot_orbits():
    orbits = enumerate_orbits(knot_data())
    assert len(orbits) == 2
    assert all(o.size == 1 and o.isotropy == 5 and o.hom_degree == 0 for o in orbits)


def test_borromean_orbits(borromean):
    orbits = enumerate_orbits(borromean)
    sizes = sorted((o.size, o.isotropy, o.hom_degree) for o in orbits)
    assert sizes == [(1, 3, 0), (1, 3, 0), (3, 1, 0), (3, 1, 0)]


def test_swap_action_orbits():
    data = PeriodicLinkData(k=2, m=2, pi=(1, 0), lk=((0, 2), (2, 0)))
    orbits = enumerate_orbits(data)
    fixed = [o for o in orbits if o.size == 1]
    moved = [o for o in orbits if o.size == 2]
    assert len(fixed) == 2 and len(moved) == 1
    assert all(o.hom_degree == 0 for o in fixed)
    # reversing one component flips the pairwise linking contribution,
    # homological degree = 2 * (lk(o) - lk(base)) = 2 * (-4)
    assert moved[0].hom_degree == -8
    assert moved[0].isotropy == 1


def test_knot_ranks_and_poly():
    data = knot_data()
    assert elee_ranks(data, 5, 0) == {0: 2}
    for d in (1,):
        assert elee_ranks(data, d, 0) == {}
        assert elee_poly(data, d, 0) == BiLaurent.zero()
    # with an offset, the trivial representation carries q^s(q+q^(-1))
    shifted = PeriodicLinkData(k=1, m=5, pi=(0,), lk=((0,),), s_pair=(((1,), 4),))
    assert elee_poly(shifted, 5, 0) == BiLaurent.from_triples([(0, 3, 1), (0, 5, 1)])


def test_borromean_ranks_and_polys(borromean):
    assert elee_ranks(borromean, 3, 0) == {0: 4}
    assert elee_ranks(borromean, 1, 0) == {0: 4}  # dim-2 rep on 2 free orbits
    expected = BiLaurent.from_triples([(0, 1, 2), (0, -1, 2)])
    assert elee_poly(borromean, 3, 0) == expected
    assert elee_poly(borromean, 1, 0) == expected


def test_trivial_action_full_lee():
    data = PeriodicLinkData(k=2, m=3, pi=(0, 1), lk=((0, 0), (0, 0)),
                            s_pair=(((1, 1), 1), ((1, -1), -1)))
    total = elee_poly(data, 3, 0)
    assert total == BiLaurent.from_triples(
        [(0, 2, 1), (0, 0, 2), (0, -2, 1)]
    )
    assert elee_poly(data, 1, 0) == BiLaurent.zero()


def test_rank_totals_are_2_to_k(borromean):
    # Summing field dimensions over the group algebra recovers the full
    # Lee homology dimension 2^k: in characteristic zero each rep
    # indexed by d appears once.
    m = borromean.m
    divisors = [d for d in range(1, m + 1) if m % d == 0]
    total = 0
    for d in divisors:
        total += sum(elee_ranks(borromean, d, 0).values())
    assert total == 2**borromean.k
    # orbit sizes partition the orientation set
    assert sum(o.size for o in enumerate_orbits(borromean)) == 2**borromean.k


def test_relabelling_equivariance(borromean):
    # Conjugating the data by the action itself changes nothing.
    relabel = borromean.pi  # relabel components by pi
    lk = tuple(
        tuple(borromean.lk[relabel[i]][relabel[j]] for j in range(3))
        for i in range(3)
    )
    pi = tuple(
        relabel.index(borromean.pi[relabel[i]]) for i in range(3)
    )
    other = PeriodicLinkData(k=3, m=3, pi=pi, lk=lk)
    for d in (1, 3):
        assert elee_ranks(other, d, 0) == elee_ranks(borromean, d, 0)
        assert elee_poly(other, d, 0) == elee_poly(borromean, d, 0)


def test_coefficient_divisibility_by_dimension(borromean):
    # Every coefficient of the unnormalised polynomial for the rep
    # indexed by d is divisible by that rep's field dimension.
    from khobstruct.repcyc import mult_order

    for d, r in ((1, 0), (3, 0), (1, 2), (3, 2)):
        dim = totient(3 // d) if r == 0 else mult_order(r, 3 // d)
        poly = elee_poly(borromean, d, r)
        poly.div_exact_scalar(dim)  # raises if not divisible
