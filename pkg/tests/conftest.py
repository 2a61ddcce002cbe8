"""Shared fixture data: polynomial invariants of small knots and links.

Khovanov polynomial tables are transcribed from standard computations;
each entry is (t_exp, q_exp, coeff).
"""

import pytest

from khobstruct.equivlee import PeriodicLinkData
from khobstruct.laurent import BiLaurent, QLaurent

UNKNOT_KHP = [(0, -1, 1), (0, 1, 1)]

# Right-handed trefoil, s = 2.
TREFOIL_KHP = [(0, 1, 1), (0, 3, 1), (2, 5, 1), (3, 9, 1)]

# Figure-eight knot, s = 0.
FIG8_KHP = [(-2, -5, 1), (-1, -1, 1), (0, -1, 1), (0, 1, 1), (1, 1, 1), (2, 5, 1)]

# Torus knots T(2,5) (s = 4) and T(2,7) (s = 6).
T25_KHP = [(0, 3, 1), (0, 5, 1), (2, 7, 1), (3, 11, 1), (4, 11, 1), (5, 15, 1)]
T27_KHP = [(0, 5, 1), (0, 7, 1), (2, 9, 1), (3, 13, 1), (4, 13, 1),
           (5, 17, 1), (6, 17, 1), (7, 21, 1)]

# A 15-crossing knot over F_3, s = 0: the Khovanov polynomial whose
# block decomposition drives the worked residue-search example.
K15_KHP = [
    (-7, -15, 1), (-6, -13, 3), (-6, -11, 1), (-5, -11, 5), (-5, -9, 3),
    (-4, -9, 7), (-4, -7, 5), (-3, -9, 1), (-3, -7, 8), (-3, -5, 7),
    (-2, -7, 3), (-2, -5, 9), (-2, -3, 8), (-1, -5, 5), (-1, -3, 10),
    (-1, -1, 8), (0, -3, 7), (0, -1, 11), (0, 1, 8), (1, -1, 8),
    (1, 1, 10), (1, 3, 5), (2, 1, 8), (2, 3, 9), (2, 5, 3), (3, 3, 7),
    (3, 5, 8), (3, 7, 1), (4, 5, 5), (4, 7, 7), (5, 7, 3), (5, 9, 5),
    (6, 9, 1), (6, 11, 3), (7, 13, 1),
]

# Expected block tables of the K15 base decomposition at p = 5.
K15_S01 = {(-7, -15): 1, (-6, -13): 3, (-5, -11): 1, (-4, -9): 3, (-3, -9): 1,
           (-2, -7): 3, (-1, -5): 1, (-1, -3): 3, (0, -3): 3, (0, -1): 1,
           (1, 1): 3, (2, 3): 1, (3, 3): 3, (4, 5): 1, (5, 7): 3, (6, 9): 1}
K15_S11 = {(-5, -11): 1, (-4, -9): 1, (-3, -7): 2, (-2, -5): 2, (-1, -5): 1,
           (-1, -3): 1, (0, -3): 1, (0, -1): 1, (1, -1): 2, (2, 1): 2,
           (3, 3): 1, (4, 5): 1}

TREFOIL_ALEXANDER = {-1: 1, 0: -1, 1: 1}
FIG8_ALEXANDER = {-1: -1, 0: 3, 1: -1}

# HOMFLYPT polynomials as (a_exp, z_exp, coeff) triples.
TREFOIL_HOMFLY = [(-4, 0, -1), (-2, 0, 2), (-2, 2, 1)]
FIG8_HOMFLY = [(-2, 0, 1), (0, 0, -1), (2, 0, 1), (0, 2, -1)]


def bi(triples) -> BiLaurent:
    return BiLaurent.from_triples(triples)


@pytest.fixture
def k15():
    return bi(K15_KHP)


@pytest.fixture
def borromean():
    return PeriodicLinkData(k=3, m=3, pi=(1, 2, 0), lk=((0, 0, 0),) * 3)


@pytest.fixture
def trefoil_alex():
    return QLaurent(TREFOIL_ALEXANDER)


def homfly_torus_2n(n: int):
    """HOMFLYPT of T(2, n) via the skein recursion (test oracle).

    Uses the variable convention whose two-component unlink value is
    (a + a^(-1)) * z^(-1), matching the subring fixed by the ideal
    membership test:
    P(T(2,n)) = a^2 * P(T(2,n-2)) + a*z * P(T(2,n-1)) with
    P(T(2,0)) = (a + a^(-1)) * z^(-1) and P(T(2,1)) = 1.
    """
    def shift(terms, da, dz):
        return {(a + da, z + dz): c for (a, z), c in terms.items()}

    def add(x, y):
        out = dict(x)
        for k, c in y.items():
            out[k] = out.get(k, 0) + c
        return {k: c for k, c in out.items() if c}

    p0 = {(1, -1): 1, (-1, -1): 1}
    p1 = {(0, 0): 1}
    table = {0: p0, 1: p1}
    for i in range(2, n + 1):
        table[i] = add(shift(table[i - 2], 2, 0), shift(table[i - 1], 1, 1))
    return [(a, z, c) for (a, z), c in sorted(table[n].items())]
