"""Tests for cyclotomic coset and representation arithmetic."""

import math

import pytest

from khobstruct import repcyc
from khobstruct.repcyc import (
    CyclotomicCoset,
    NotCoprime,
    coset_of,
    coset_scale,
    cosets,
    is_max_order,
    mult_order,
    restriction_mult,
    totient,
)


def test_totient_examples():
    assert totient(1) == 1
    assert totient(25) == 20
    assert totient(12) == 4
    for p, k in ((3, 2), (5, 3), (7, 1)):
        assert totient(p**k) == p**k - p ** (k - 1)


def test_totient_matches_direct_count():
    for n in range(1, 500):
        direct = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
        assert totient(n) == direct


def test_totient_sum_identity():
    # sum over divisors d of m of totient(d) = m
    limit = 10000
    acc = [0] * (limit + 1)
    for d in range(1, limit + 1):
        t = totient(d)
        for m in range(d, limit + 1, d):
            acc[m] += t
    assert all(acc[m] == m for m in range(1, limit + 1))


def test_mult_order_examples():
    assert mult_order(7, 1) == 1
    assert mult_order(3, 5) == 4
    assert mult_order(11, 5) == 1
    with pytest.raises(NotCoprime):
        mult_order(10, 5)


def test_cosets_examples():
    cs = cosets(5, 3)
    as_sets = {frozenset(c.elements): c.d for c in cs}
    assert as_sets == {frozenset({0}): 5, frozenset({1, 2, 3, 4}): 1}
    assert [c.elements for c in cosets(1, 3)] == [frozenset({0})]
    with pytest.raises(NotCoprime):
        cosets(6, 3)


def test_coset_partition_and_dimension_identities():
    for m in range(1, 60):
        for r in [0, 2, 3, 5, 7, 11]:
            if r != 0 and math.gcd(r, m) != 1:
                continue
            cs = cosets(m, r)
            assert sum(len(c.elements) for c in cs) == m
            for c in cs:
                assert all(
                    math.gcd(x or m, m) == c.d for x in c.elements
                )
                if r != 0:
                    assert frozenset((x * r) % m for x in c.elements) == c.elements
                    assert len(c.elements) == mult_order(r, m // c.d)
                else:
                    assert len(c.elements) == totient(m // c.d)
            # degree identity: within a fixed d, coset sizes sum to totient(m/d)
            for d in {c.d for c in cs}:
                assert sum(len(c.elements) for c in cs if c.d == d) == totient(m // d)


def test_is_max_order_examples():
    assert is_max_order(5, 1, 3)
    assert not is_max_order(5, 1, 11)
    assert is_max_order(5, 1, 2)
    assert is_max_order(5, 1, 0)  # characteristic zero always qualifies
    assert not is_max_order(5, 1, 5)  # r = p is never admissible


def test_max_order_single_coset_property():
    # When r has maximal order modulo p^n, there is exactly one coset
    # at each gcd level p^s below the top.
    for p, n in ((5, 1), (7, 1), (3, 2), (5, 2), (3, 3)):
        m = p**n
        for r in range(2, 50):
            if math.gcd(r, m) != 1 or not is_max_order(p, n, r):
                continue
            cs = cosets(m, r)
            for s in range(n):
                level = [c for c in cs if c.d == p**s]
                assert len(level) == 1


def test_coset_scale_examples():
    chi = coset_of(5, 3, 1)
    assert coset_scale(chi, 0) == chi
    assert coset_scale(chi, 1).elements == frozenset({0})
    assert coset_scale(chi, 1).d == 5


def test_coset_scale_bijection():
    # Scaling by p^t followed by dividing exponents is a bijection
    # between gcd-p^t cosets of Z/p^n and gcd-1 cosets of Z/p^(n-t):
    # matching element sets after division by p^t.
    for p, n in ((3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (2, 4)):
        m = p**n
        for r in range(2, 30):
            if math.gcd(r, m) != 1:
                continue
            for t in range(n):
                upstairs = [c for c in cosets(m, r) if c.d == p**t]
                downstairs = {
                    c.elements for c in cosets(p ** (n - t), r) if c.d == 1
                }
                image = {
                    frozenset(x // p**t for x in c.elements) for c in upstairs
                }
                assert image == downstairs
                assert len(upstairs) == len(downstairs)


def test_restriction_examples():
    # Restriction to the full group is the identity.
    chi = coset_of(9, 2, 1)
    res = restriction_mult(chi, 2)
    assert not res.trivial and res.target == chi and res.copies == 1
    # Restriction to a subgroup acting trivially gives dim copies of
    # the trivial representation.
    zero = coset_of(9, 2, 0)  # d = 9 = p^n, so t = n
    res0 = restriction_mult(zero, 1)
    assert res0.trivial and res0.copies == 1
    # p=3, n=2, r=2 (order 6 = maximal), gcd-1 coset restricted to Z/3.
    assert mult_order(2, 9) == 6
    chi1 = coset_of(9, 2, 1)
    res1 = restriction_mult(chi1, 1)
    assert not res1.trivial
    assert res1.target.dim == 2 and res1.copies == 3


def test_restriction_dimension_bookkeeping():
    for p, n in ((3, 2), (5, 2), (3, 3)):
        m = p**n
        for r in (2, 0):
            if r != 0 and (math.gcd(r, m) != 1):
                continue
            for chi in cosets(m, r):
                if r == 0:
                    continue  # restriction defined for positive characteristic
                for s in range(n + 1):
                    res = restriction_mult(chi, s)
                    if res.trivial:
                        assert res.copies == chi.dim
                    else:
                        assert res.copies * res.target.dim == chi.dim


def test_coset_dataclass_canonical_rep():
    chi = coset_of(5, 3, 4)
    assert chi.rep == 1  # smallest element of {1,2,3,4}
    assert isinstance(chi, CyclotomicCoset)
    assert repcyc.factorize(360) == {2: 3, 3: 2, 5: 1}
