"""Sparse Laurent polynomial arithmetic with integer coefficients.

Three closely related types are provided:

* :class:`BiLaurent` -- Laurent polynomials in two commuting variables
  ``t`` (homological) and ``q`` (quantum), stored as a mapping from
  exponent pairs ``(i, j)`` to nonzero integer coefficients.
* :class:`QLaurent` -- Laurent polynomials in ``q`` alone.
* :class:`ResiduePoly` -- elements of the quotient of the one-variable
  ring by the ideal generated by ``q^N - q^(-N)``.  In the quotient
  ``q^N = q^(-N)`` forces ``q^(2N) = 1``, so a class is represented by
  exponents reduced into the window ``[0, 2N)``.

All arithmetic is exact; there are no floats anywhere in this module.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Mapping


class EmptyPolynomial(ValueError):
    """Raised when an operation needs at least one term but got zero."""


class NotDivisible(ArithmeticError):
    """Raised when an exact division has a nonzero remainder."""


def _clean(terms: Mapping) -> dict:
    return {k: int(c) for k, c in terms.items() if c != 0}


class BiLaurent:
    """A Laurent polynomial in ``t`` and ``q`` with integer coefficients.

    Instances are immutable by convention: all operations return new
    objects and ``_terms`` must not be mutated by callers.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        object.__setattr__(self, "_terms", _clean(terms or {}))

    # -- construction helpers -------------------------------------------

    @classmethod
    def zero(cls) -> "BiLaurent":
        return cls()

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BiLaurent":
        return cls({(i, j): c})

    @classmethod
    def from_triples(cls, triples: Iterable[tuple[int, int, int]]) -> "BiLaurent":
        out: dict[tuple[int, int], int] = {}
        for i, j, c in triples:
            key = (int(i), int(j))
            out[key] = out.get(key, 0) + int(c)
        return cls(out)

    # -- basic queries ---------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(sorted(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiLaurent) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_nonneg(self) -> bool:
        """True when every coefficient is >= 0."""
        return all(c >= 0 for c in self._terms.values())

    def mass(self) -> int:
        """Sum of absolute values of all coefficients."""
        return sum(abs(c) for c in self._terms.values())

    def support(self) -> list[tuple[int, int]]:
        return sorted(self._terms)

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "BiLaurent") -> "BiLaurent":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BiLaurent(out)

    def __neg__(self) -> "BiLaurent":
        return BiLaurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "BiLaurent") -> "BiLaurent":
        return self + (-other)

    def scale(self, c: int) -> "BiLaurent":
        return BiLaurent({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other: "BiLaurent") -> "BiLaurent":
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiLaurent(out)

    def shift(self, di: int, dj: int) -> "BiLaurent":
        return BiLaurent({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    def div_exact_scalar(self, c: int) -> "BiLaurent":
        """Divide every coefficient by ``c``; raise if any remainder."""
        if c == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        out = {}
        for k, v in self._terms.items():
            if v % c != 0:
                raise NotDivisible(f"coefficient {v} at {k} not divisible by {c}")
            out[k] = v // c
        return BiLaurent(out)

    # -- specialisations ---------------------------------------------------

    def eval_t_minus1(self) -> "QLaurent":
        """Substitute ``t = -1``, collapsing to a one-variable polynomial."""
        out: dict[int, int] = {}
        for (i, j), c in self._terms.items():
            s = c if i % 2 == 0 else -c
            out[j] = out.get(j, 0) + s
        return QLaurent(out)

    def delta_width(self, convention: str = "q_minus_2t") -> int:
        """Spread of the diagonal grading over the support.

        ``convention`` selects how the diagonal is computed from an
        exponent pair ``(i, j)``: ``"q_minus_2t"`` uses ``j - 2i`` (the
        default), ``"t_minus_2q"`` uses ``i - 2j``.
        """
        if not self._terms:
            raise EmptyPolynomial("width of the zero polynomial is undefined")
        if convention == "q_minus_2t":
            deltas = [j - 2 * i for (i, j) in self._terms]
        elif convention == "t_minus_2q":
            deltas = [i - 2 * j for (i, j) in self._terms]
        else:
            raise ValueError(f"unknown width convention {convention!r}")
        return max(deltas) - min(deltas)

    # -- text form ----------------------------------------------------------

    def text(self) -> str:
        if not self._terms:
            return "0"
        parts = [f"{c}*t^{i}*q^{j}" for (i, j), c in sorted(self._terms.items())]
        return " + ".join(parts)

    @classmethod
    def from_text(cls, s: str) -> "BiLaurent":
        s = s.strip()
        if s == "0":
            return cls()
        out: dict[tuple[int, int], int] = {}
        for part in s.split("+"):
            c_s, t_s, q_s = (x.strip() for x in part.strip().split("*"))
            if not (t_s.startswith("t^") and q_s.startswith("q^")):
                raise ValueError(f"malformed term {part!r}")
            key = (int(t_s[2:]), int(q_s[2:]))
            out[key] = out.get(key, 0) + int(c_s)
        return cls(out)

    def __repr__(self) -> str:
        return f"BiLaurent({self.text()})"


class QLaurent:
    """A Laurent polynomial in ``q`` with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        object.__setattr__(self, "_terms", _clean(terms or {}))

    @classmethod
    def zero(cls) -> "QLaurent":
        return cls()

    @classmethod
    def monomial(cls, j: int, c: int = 1) -> "QLaurent":
        return cls({j: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, QLaurent) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def coeff(self, j: int) -> int:
        return self._terms.get(j, 0)

    def mass(self) -> int:
        return sum(abs(c) for c in self._terms.values())

    def __add__(self, other: "QLaurent") -> "QLaurent":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return QLaurent(out)

    def __neg__(self) -> "QLaurent":
        return QLaurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "QLaurent") -> "QLaurent":
        return self + (-other)

    def scale(self, c: int) -> "QLaurent":
        return QLaurent({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other: "QLaurent") -> "QLaurent":
        out: dict[int, int] = {}
        for j1, c1 in self._terms.items():
            for j2, c2 in other._terms.items():
                out[j1 + j2] = out.get(j1 + j2, 0) + c1 * c2
        return QLaurent(out)

    def mirror(self) -> "QLaurent":
        """Substitute ``q -> q^(-1)``."""
        return QLaurent({-j: c for j, c in self._terms.items()})

    def reduce_mod(self, n: int) -> "ResiduePoly":
        """Reduce modulo ``q^n - q^(-n)`` (exponents mod ``2n``)."""
        return ResiduePoly.from_qlaurent(n, self)

    def text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*q^{j}" for j, c in sorted(self._terms.items()))

    @classmethod
    def from_text(cls, s: str) -> "QLaurent":
        s = s.strip()
        if s == "0":
            return cls()
        out: dict[int, int] = {}
        for part in s.split("+"):
            c_s, q_s = (x.strip() for x in part.strip().split("*"))
            if not q_s.startswith("q^"):
                raise ValueError(f"malformed term {part!r}")
            j = int(q_s[2:])
            out[j] = out.get(j, 0) + int(c_s)
        return cls(out)

    def __repr__(self) -> str:
        return f"QLaurent({self.text()})"


class ResiduePoly:
    """An element of ``Z[q, q^(-1)] / (q^N - q^(-N))``.

    Since ``q`` is a unit, the ideal equals ``(q^(2N) - 1)`` and classes
    are canonically represented by exponents in ``[0, 2N)``.
    """

    __slots__ = ("_n", "_terms")

    def __init__(self, n: int, terms: Mapping[int, int] | None = None):
        if n < 1:
            raise ValueError("modulus exponent must be positive")
        reduced: dict[int, int] = {}
        for j, c in (terms or {}).items():
            jj = j % (2 * n)
            reduced[jj] = reduced.get(jj, 0) + int(c)
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_terms", _clean(reduced))

    @classmethod
    def from_qlaurent(cls, n: int, poly: QLaurent) -> "ResiduePoly":
        return cls(n, poly.terms)

    @property
    def modulus(self) -> int:
        return self._n

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ResiduePoly)
            and self._n == other._n
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self._n, frozenset(self._terms.items())))

    def _check(self, other: "ResiduePoly") -> None:
        if self._n != other._n:
            raise ValueError(f"modulus mismatch: {self._n} vs {other._n}")

    def __add__(self, other: "ResiduePoly") -> "ResiduePoly":
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return ResiduePoly(self._n, out)

    def __neg__(self) -> "ResiduePoly":
        return ResiduePoly(self._n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "ResiduePoly") -> "ResiduePoly":
        return self + (-other)

    def scale(self, c: int) -> "ResiduePoly":
        return ResiduePoly(self._n, {k: c * v for k, v in self._terms.items()})

    def map_coeffs(self, f: Callable[[int], int]) -> "ResiduePoly":
        return ResiduePoly(self._n, {k: f(v) for k, v in self._terms.items()})

    def text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*q^{j}" for j, c in sorted(self._terms.items()))

    def __repr__(self) -> str:
        return f"ResiduePoly(N={self._n}, {self.text()})"


def knight_block(j: int, c: int) -> BiLaurent:
    """The two-term block ``1 + t*q^(2*c*j)`` used in pawn/knight pairings."""
    if j < 1:
        raise ValueError("block index must be >= 1")
    return BiLaurent({(0, 0): 1, (1, 2 * c * j): 1})


def q_pair(s: int) -> QLaurent:
    """The symmetric pair ``q^(s+1) + q^(s-1)``."""
    return QLaurent({s + 1: 1, s - 1: 1})


def bi_q_pair(s: int) -> BiLaurent:
    """``q^(s+1) + q^(s-1)`` viewed in the two-variable ring at ``t^0``."""
    return BiLaurent({(0, s + 1): 1, (0, s - 1): 1})
