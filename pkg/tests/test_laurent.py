"""Arithmetic tests for the sparse Laurent polynomial types."""

import pytest
from hypothesis import given, strategies as st

from khobstruct.laurent import (
    BiLaurent,
    EmptyPolynomial,
    NotDivisible,
    QLaurent,
    ResiduePoly,
    bi_q_pair,
    knight_block,
)

from conftest import K15_KHP, bi


def small_bilaurents():
    term = st.tuples(
        st.integers(-5, 5), st.integers(-8, 8), st.integers(-4, 4)
    )
    return st.lists(term, max_size=6).map(BiLaurent.from_triples)


def small_qlaurents():
    term = st.tuples(st.integers(-12, 12), st.integers(-4, 4))
    return st.lists(term, max_size=6).map(
        lambda items: QLaurent({j: c for j, c in items})
    )


def test_add_identity_and_cancellation():
    pair = bi_q_pair(0)
    assert pair + BiLaurent.zero() == pair
    tq4 = BiLaurent.monomial(1, 4)
    assert tq4 + (-tq4) == BiLaurent.zero()
    assert pair.scale(4) == BiLaurent.from_triples([(0, 1, 4), (0, -1, 4)])


def test_mul_examples():
    block = knight_block(1, 2)
    assert block * BiLaurent.monomial(-1, -3) == BiLaurent.from_triples(
        [(-1, -3, 1), (0, 1, 1)]
    )
    assert block * BiLaurent.zero() == BiLaurent.zero()
    assert block * block == BiLaurent.from_triples(
        [(0, 0, 1), (1, 4, 2), (2, 8, 1)]
    )


def test_eval_t_minus1_examples():
    assert BiLaurent.monomial(1, 4).eval_t_minus1() == QLaurent({4: -1})
    three = BiLaurent.from_triples([(0, 0, 1), (1, 4, 1), (2, 8, 1)])
    assert three.eval_t_minus1() == QLaurent({0: 1, 4: -1, 8: 1})
    assert bi_q_pair(0).eval_t_minus1() == QLaurent({1: 1, -1: 1})


def test_mirror_examples():
    assert QLaurent({3: 1}).mirror() == QLaurent({-3: 1})
    pal = QLaurent({1: 1, -1: 1})
    assert pal.mirror() == pal
    assert QLaurent({5: 2, -7: -1}).mirror() == QLaurent({-5: 2, 7: -1})


def test_reduce_mod_examples():
    assert QLaurent({-5: 1}).reduce_mod(5) == ResiduePoly(5, {5: 1})
    assert QLaurent({-11: 1}).reduce_mod(5) == ResiduePoly(5, {9: 1})
    xi = QLaurent({1: -10, 3: 5, 7: -5, 9: 10})
    assert xi.reduce_mod(5) == ResiduePoly(5, {1: -10, 3: 5, 7: -5, 9: 10})


def test_nonneg_and_exact_division():
    assert QLaurent({1: 1, -1: -1}) and not QLaurent.zero()
    assert not BiLaurent.from_triples([(0, 1, 1), (0, -1, -1)]).is_nonneg()
    four = BiLaurent.from_triples([(0, 1, 4), (0, 3, 8)])
    assert four.div_exact_scalar(4) == BiLaurent.from_triples([(0, 1, 1), (0, 3, 2)])
    with pytest.raises(NotDivisible):
        BiLaurent.from_triples([(0, 1, 4), (0, 3, 6)]).div_exact_scalar(4)


def test_delta_width_examples():
    assert bi_q_pair(0).delta_width() == 2
    for s in (-3, 0, 7):
        assert bi_q_pair(s).delta_width() == 2
    assert bi(K15_KHP).delta_width() == 4  # enumerated over the full support
    with pytest.raises(EmptyPolynomial):
        BiLaurent.zero().delta_width()


def test_delta_width_alternate_convention():
    poly = BiLaurent.from_triples([(0, 0, 1), (1, 4, 1)])
    assert poly.delta_width("q_minus_2t") == 2
    assert poly.delta_width("t_minus_2q") == 7
    with pytest.raises(ValueError):
        poly.delta_width("bogus")


@given(small_bilaurents(), small_bilaurents(), small_bilaurents())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(small_qlaurents(), small_qlaurents(), st.integers(1, 7))
def test_reduce_mod_is_additive(a, b, n):
    assert (a + b).reduce_mod(n) == a.reduce_mod(n) + b.reduce_mod(n)


@given(small_qlaurents(), st.integers(-10, 10), st.integers(1, 7))
def test_reduce_mod_periodicity(a, j, n):
    shifted = a * QLaurent({j + 2 * n: 1})
    base = a * QLaurent({j: 1})
    assert shifted.reduce_mod(n) == base.reduce_mod(n)


@given(small_bilaurents(), small_bilaurents())
def test_eval_is_multiplicative(a, b):
    assert (a * b).eval_t_minus1() == a.eval_t_minus1() * b.eval_t_minus1()


@given(small_qlaurents(), st.integers(1, 7))
def test_mirror_involution_and_reduction(a, n):
    assert a.mirror().mirror() == a
    assert a.mirror().reduce_mod(n) == ResiduePoly(
        n, {-j: c for j, c in a.terms.items()}
    )


def test_text_round_trip():
    poly = bi(K15_KHP)
    assert BiLaurent.from_text(poly.text()) == poly
    q = QLaurent({-3: 2, 5: -1})
    assert QLaurent.from_text(q.text()) == q
    assert BiLaurent.zero().text() == "0"
    assert BiLaurent.from_text("0") == BiLaurent.zero()
