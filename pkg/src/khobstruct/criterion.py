"""Periodicity obstruction from decompositions of the Khovanov polynomial.

A link with a symmetry of prime-power order ``p^n`` forces its Khovanov
polynomial ``khp`` to split as

    khp = P_0 + sum_{k=1..n} (p^k - p^(k-1)) * P_k

where each ``P_k`` is a fixed *free part* (Lee-theoretic survivors) plus
a nonnegative combination of two-term blocks ``(1 + t*q^(2*c*j)) * t^a*q^b``
with ``c = 1`` in characteristic 2 and ``c = 2`` otherwise, subject to

  (1) reconstruction (the displayed identity),
  (2) nonnegativity of all block multiplicity polynomials ``S[k, j]``,
  (3) for each ``k < n`` the specialisation ``(P_k - P_{k+1})`` at
      ``t = -1`` is symmetric under ``q -> q^(-1)`` modulo
      ``q^(p^(n-k)) - q^(-p^(n-k))``,
  (4) a width bound: ``S[k, j] = 0`` for ``j`` beyond a bound determined
      by the diagonal spread of ``khp``.

If no decomposition satisfies (1)-(4), the symmetry is obstructed.  This
module provides exhaustive and pruned deciders plus helpers for building
candidate decompositions from Lee-theory data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from . import repcyc
from .laurent import BiLaurent, QLaurent, ResiduePoly, bi_q_pair, knight_block


class FieldNotAdmissible(ValueError):
    """The coefficient field does not satisfy the order hypothesis."""


class SearchCapExceeded(RuntimeError):
    """The exhaustive search was refused because the input is too large."""


class InvalidDecomposition(ValueError):
    """A candidate decomposition is structurally inconsistent."""


class NoBlockDecomposition(ValueError):
    """The polynomial does not peel into two-term blocks over the free part."""


class PreconditionFailed(ValueError):
    """A checker was handed a base that fails its entry conditions."""


class Verdict(str, Enum):
    NO_OBSTRUCTION = "NO_OBSTRUCTION"
    OBSTRUCTED = "OBSTRUCTED"
    VACUOUS = "VACUOUS"
    NOT_APPLICABLE = "NOT_APPLICABLE"


def c_of(char_r: int) -> int:
    """Block step parameter: 1 in characteristic 2, else 2."""
    return 1 if char_r == 2 else 2


def multiplicity(p: int, k: int) -> int:
    """Multiplicity of ``P_k`` in the decomposition: ``p^k - p^(k-1)``."""
    return 1 if k == 0 else p**k - p ** (k - 1)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    fac = repcyc.factorize(n)
    return len(fac) == 1 and next(iter(fac.values())) == 1


@dataclass(frozen=True)
class WidthPolicy:
    """How the width bound (condition (4)) is applied.

    ``convention`` selects the diagonal grading used to measure the
    spread ``w`` of the polynomial.  The default bound ``j <= w`` never
    rejects a genuine decomposition; ``strict=True`` tightens it to
    ``j <= w // 2`` outside characteristic 2.
    """

    convention: str = "q_minus_2t"
    strict: bool = False

    def jmax(self, width: int, c: int) -> int:
        if self.strict and c == 2:
            return max(1, width // 2)
        return max(1, width)


@dataclass(frozen=True)
class CriterionInput:
    """A polynomial together with the symmetry data to test against.

    ``free_parts[k]`` is the fixed summand of ``P_k``; for a knot this
    is ``q^s*(q + q^(-1))`` at ``k = 0`` and zero above.
    """

    khp: BiLaurent
    p: int
    n: int
    char_r: int
    free_parts: tuple[BiLaurent, ...]

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"period base {self.p} must be prime")
        if self.n < 1:
            raise ValueError("period exponent must be >= 1")
        if self.char_r != 0 and not _is_prime(self.char_r):
            raise ValueError(f"field characteristic {self.char_r} must be 0 or prime")
        if len(self.free_parts) != self.n + 1:
            raise ValueError("need one free part per decomposition summand")
        if not self.khp.is_nonneg():
            raise ValueError("the polynomial must have nonnegative coefficients")
        if not repcyc.is_max_order(self.p, self.n, self.char_r):
            raise FieldNotAdmissible(
                f"characteristic {self.char_r} is not of maximal order modulo {self.p}^{self.n}"
            )

    @classmethod
    def for_knot(
        cls, khp: BiLaurent, p: int, n: int, char_r: int, s: int
    ) -> "CriterionInput":
        parts = [bi_q_pair(s)] + [BiLaurent.zero()] * n
        return cls(khp=khp, p=p, n=n, char_r=char_r, free_parts=tuple(parts))

    @property
    def c(self) -> int:
        return c_of(self.char_r)


@dataclass(frozen=True)
class Decomposition:
    """A candidate splitting: free parts plus block multiplicities.

    ``blocks[(k, j)]`` holds the nonnegative polynomial ``S[k, j]`` of
    bottom corners of ``(1 + t*q^(2*c*j))`` blocks inside ``P_k``.
    """

    p: int
    n: int
    char_r: int
    free_parts: tuple[BiLaurent, ...]
    blocks: tuple[tuple[tuple[int, int], BiLaurent], ...]

    @classmethod
    def build(
        cls,
        p: int,
        n: int,
        char_r: int,
        free_parts: tuple[BiLaurent, ...],
        blocks: dict[tuple[int, int], BiLaurent],
    ) -> "Decomposition":
        clean = {key: s for key, s in blocks.items() if s}
        for (k, j) in clean:
            if not (0 <= k <= n) or j < 1:
                raise InvalidDecomposition(f"block index {(k, j)} out of range")
        return cls(
            p=p,
            n=n,
            char_r=char_r,
            free_parts=tuple(free_parts),
            blocks=tuple(sorted(clean.items())),
        )

    @property
    def c(self) -> int:
        return c_of(self.char_r)

    def block_map(self) -> dict[tuple[int, int], BiLaurent]:
        return dict(self.blocks)

    def summand(self, k: int) -> BiLaurent:
        """The polynomial ``P_k`` of this decomposition."""
        total = self.free_parts[k]
        for (kk, j), s in self.blocks:
            if kk == k:
                total = total + knight_block(j, self.c) * s
        return total

    def reconstruct(self) -> BiLaurent:
        total = BiLaurent.zero()
        for k in range(self.n + 1):
            total = total + self.summand(k).scale(multiplicity(self.p, k))
        return total


def congruence_defect(d: QLaurent, n_mod: int) -> ResiduePoly:
    """Asymmetry of a specialised polynomial modulo ``q^n_mod - q^(-n_mod)``.

    Returns the reduction of ``d - d(q^(-1))``; condition (3) at a given
    level holds iff this vanishes for the appropriate specialisation.
    """
    return (d - d.mirror()).reduce_mod(n_mod)


def level_defect(dec: Decomposition, k: int) -> ResiduePoly:
    """Condition-(3) defect of ``P_k - P_(k+1)`` at ``t = -1``.

    The comparison modulus at level ``k`` is ``q^(p^(n-k)) - q^(-p^(n-k))``.
    """
    if not 0 <= k < dec.n:
        raise ValueError(f"congruence level {k} out of range for n={dec.n}")
    d = (dec.summand(k) - dec.summand(k + 1)).eval_t_minus1()
    return congruence_defect(d, dec.p ** (dec.n - k))


def validate(
    dec: Decomposition, khp: BiLaurent, policy: WidthPolicy | None = None
) -> dict:
    """Check conditions (1)-(4) of a candidate decomposition against ``khp``.

    Returns a report with one boolean per condition plus the defects; the
    ``ok`` entry is the conjunction.
    """
    policy = policy or WidthPolicy()
    c = dec.c
    jmax = policy.jmax(khp.delta_width(policy.convention), c)
    reconstruction = dec.reconstruct() == khp
    nonneg = all(s.is_nonneg() for _, s in dec.blocks)
    width_ok = all(j <= jmax for (_, j), _ in dec.blocks)
    defects = {k: level_defect(dec, k) for k in range(dec.n)}
    congruence_ok = all(d.is_zero() for d in defects.values())
    return {
        "reconstruction": reconstruction,
        "nonnegativity": nonneg,
        "width": width_ok,
        "congruence": congruence_ok,
        "defects": defects,
        "ok": reconstruction and nonneg and width_ok and congruence_ok,
    }


@dataclass
class CheckResult:
    verdict: Verdict
    witness: Decomposition | None = None
    cases: int = 0
    certificate: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)


def brute_force_check(
    inp: CriterionInput,
    policy: WidthPolicy | None = None,
    cap: int = 64,
    exhaustive: bool = False,
) -> CheckResult:
    """Decide the criterion by complete enumeration of decompositions.

    Works for any ``n`` and any free parts, but refuses inputs whose
    residual coefficient mass (after subtracting the weighted free
    parts) exceeds ``cap``.  Enumeration proceeds over the
    lexicographically least uncovered monomial, which must be the bottom
    corner of the blocks covering it, so every decomposition satisfying
    (1), (2) and (4) is visited exactly once.  Condition (3) is checked
    on each complete candidate.  With ``exhaustive=True`` the search
    does not stop at the first witness and ``cases`` counts every
    candidate.
    """
    policy = policy or WidthPolicy()
    c = inp.c
    remaining = inp.khp
    for k, fp in enumerate(inp.free_parts):
        remaining = remaining - fp.scale(multiplicity(inp.p, k))
    if not remaining.is_nonneg():
        return CheckResult(
            Verdict.OBSTRUCTED,
            cases=0,
            notes=["weighted free parts are not dominated by the polynomial"],
        )
    if remaining.mass() > cap:
        raise SearchCapExceeded(
            f"residual mass {remaining.mass()} exceeds the search cap {cap}"
        )
    jmax = policy.jmax(inp.khp.delta_width(policy.convention), c) if inp.khp else 1
    mults = [multiplicity(inp.p, k) for k in range(inp.n + 1)]

    cur = remaining.terms
    chosen: dict[tuple[int, int, tuple[int, int]], int] = {}
    state = {"cases": 0, "witness": None}

    def make_candidate() -> Decomposition:
        blocks: dict[tuple[int, int], dict[tuple[int, int], int]] = {}
        for (k, jb, pos), cnt in chosen.items():
            if cnt:
                blocks.setdefault((k, jb), {})[pos] = cnt
        return Decomposition.build(
            inp.p,
            inp.n,
            inp.char_r,
            inp.free_parts,
            {key: BiLaurent(terms) for key, terms in blocks.items()},
        )

    def search() -> None:
        if state["witness"] is not None and not exhaustive:
            return
        pos = None
        for key in sorted(cur):
            if cur[key] > 0:
                pos = key
                break
        if pos is None:
            state["cases"] += 1
            cand = make_candidate()
            if all(level_defect(cand, k).is_zero() for k in range(inp.n)):
                if state["witness"] is None:
                    state["witness"] = cand
            return
        options = [
            (k, jb, (pos[0] + 1, pos[1] + 2 * c * jb))
            for k in range(inp.n + 1)
            for jb in range(1, jmax + 1)
        ]

        def fill(oi: int) -> None:
            if state["witness"] is not None and not exhaustive:
                return
            if cur[pos] == 0:
                search()
                return
            if oi == len(options):
                return  # the least monomial cannot be covered: dead branch
            k, jb, top = options[oi]
            mk = mults[k]
            fill(oi + 1)
            used = 0
            while cur[pos] >= mk and cur.get(top, 0) >= mk:
                cur[pos] -= mk
                cur[top] -= mk
                chosen[(k, jb, pos)] = chosen.get((k, jb, pos), 0) + 1
                used += 1
                fill(oi + 1)
                if state["witness"] is not None and not exhaustive:
                    break
            for _ in range(used):
                cur[pos] += mk
                cur[top] = cur.get(top, 0) + mk
                chosen[(k, jb, pos)] -= 1

        fill(0)

    search()
    witness = state["witness"]
    if witness is not None:
        report = validate(witness, inp.khp, policy)
        if not report["ok"]:
            raise AssertionError("search produced an invalid witness")
        return CheckResult(
            Verdict.NO_OBSTRUCTION,
            witness=witness,
            cases=state["cases"],
            notes=[] if exhaustive else ["stopped at first witness"],
        )
    return CheckResult(Verdict.OBSTRUCTED, cases=state["cases"])


def base_from_lee_ss(
    khp: BiLaurent, s: int, p: int, char_r: int
) -> Decomposition:
    """Build the canonical ``n = 1`` candidate for a knot polynomial.

    Peels ``khp - q^s*(q + q^(-1))`` into ``(1 + t*q^(2c))`` blocks by
    repeatedly clearing the lexicographically least remaining monomial
    (for a polynomial of diagonal width two this peeling is unique),
    then pushes as many blocks as possible into the top summand:
    ``S[1, 1]`` takes ``floor(total / (p - 1))`` of each coefficient and
    ``S[0, 1]`` the remainder.
    """
    c = c_of(char_r)
    rem = (khp - bi_q_pair(s)).terms
    total: dict[tuple[int, int], int] = {}
    while rem:
        pos = min(rem)
        a = rem[pos]
        if a < 0:
            raise NoBlockDecomposition(
                f"cannot peel blocks: negative residual {a} at {pos}"
            )
        top = (pos[0] + 1, pos[1] + 2 * c)
        total[pos] = a
        del rem[pos]
        t = rem.get(top, 0) - a
        if t < 0:
            raise NoBlockDecomposition(
                f"cannot peel blocks: block top at {top} undersupplied"
            )
        if t:
            rem[top] = t
        else:
            rem.pop(top, None)
    s11 = {pos: a // (p - 1) for pos, a in total.items()}
    s01 = {pos: a - (p - 1) * s11[pos] for pos, a in total.items()}
    return Decomposition.build(
        p,
        1,
        char_r,
        (bi_q_pair(s), BiLaurent.zero()),
        {(0, 1): BiLaurent(s01), (1, 1): BiLaurent(s11)},
    )


def _move_vector(p: int, c: int, j: int) -> ResiduePoly:
    """Defect change per unit move of ``t^(even)*q^j`` from ``S[1,1]`` to ``S[0,1]``.

    Moving one block from the top summand to the bottom one multiplies
    through the weights ``1`` and ``p - 1``, so the specialisation of
    ``P_0 - P_1`` changes by ``p * (1 + t*q^(2c)) * q^j`` at ``t = -1``.
    """
    d = QLaurent({j: 1, j + 2 * c: -1})
    return (d - d.mirror()).reduce_mod(p).scale(p)


def _canonical_sign(v: ResiduePoly) -> tuple[ResiduePoly, int]:
    if v.is_zero():
        return v, 1
    j = min(v.terms)
    if v.terms[j] < 0:
        return -v, -1
    return v, 1


def pruned_check_n1(
    inp: CriterionInput,
    base: Decomposition,
    policy: WidthPolicy | None = None,
) -> CheckResult:
    """Residue-class search for ``n = 1`` starting from a valid base.

    Starting from ``base`` (which must satisfy (1), (2), (4)), the only
    degrees of freedom explored are moves of ``j = 1`` blocks between
    the two summands: ``S[1,1] -> S[1,1] - u*t^a*q^b`` with
    ``S[0,1] -> S[0,1] + (p-1)*u*t^a*q^b`` and their reverses.  Each
    unit move shifts the condition-(3) defect by a vector that depends
    only on the parity of ``a`` and on ``b`` modulo ``2p``, so the
    search collapses to an integer box over the distinct residue
    vectors.  The verdict is decisive whenever every decomposition of
    the polynomial arises from ``base`` by such moves (in particular for
    diagonal width two); otherwise OBSTRUCTED only certifies
    infeasibility within the move family.
    """
    policy = policy or WidthPolicy()
    if inp.n != 1:
        raise ValueError("the pruned search only applies to prime periods (n = 1)")
    report = validate(base, inp.khp, policy)
    if not (report["reconstruction"] and report["nonnegativity"] and report["width"]):
        raise PreconditionFailed("base decomposition fails conditions (1), (2) or (4)")
    p, c = inp.p, inp.c
    xi = level_defect(base, 0)
    blocks = base.block_map()
    s01 = blocks.get((0, 1), BiLaurent.zero())
    s11 = blocks.get((1, 1), BiLaurent.zero())

    # Interval of achievable coefficients per canonical residue vector,
    # together with the unit contributions used to rebuild a witness.
    boxes: dict[ResiduePoly, list[int]] = {}
    slots: dict[ResiduePoly, list[tuple[int, int, tuple[int, int], int]]] = {}
    for source, direction in ((s11, +1), (s01, -1)):
        limit_div = 1 if direction == +1 else p - 1
        for (a, b), coeff in sorted(source.terms.items()):
            cap = coeff // limit_div
            if cap == 0:
                continue
            vec = _move_vector(p, c, b)
            if a % 2 == 1:
                vec = -vec
            if direction == -1:
                vec = -vec
            if vec.is_zero():
                continue
            canon, sign = _canonical_sign(vec)
            lo, hi = boxes.setdefault(canon, [0, 0])
            if sign > 0:
                boxes[canon][1] = hi + cap
            else:
                boxes[canon][0] = lo - cap
            slots.setdefault(canon, []).append((sign, cap, (a, b), direction))

    classes = sorted(boxes, key=lambda v: sorted(v.terms.items()))
    sizes = [boxes[v][1] - boxes[v][0] + 1 for v in classes]
    case_count = 1
    for sz in sizes:
        case_count *= sz

    assignment = _solve_box(xi, [(v, boxes[v][0], boxes[v][1]) for v in classes])
    certificate = {
        "xi": xi,
        "classes": [(v.text(), boxes[v][0], boxes[v][1]) for v in classes],
        # The same data with every vector negated; which global sign one
        # attaches to the move vectors is a convention, and both forms
        # are recorded so certificates can be compared either way.
        "classes_negated": [((-v).text(), -boxes[v][1], -boxes[v][0]) for v in classes],
        "box_sizes": sizes,
        "case_count": case_count,
    }
    if assignment is None:
        return CheckResult(Verdict.OBSTRUCTED, cases=case_count, certificate=certificate)

    witness = _apply_moves(inp, base, classes, assignment, slots)
    if not validate(witness, inp.khp, policy)["ok"]:
        raise AssertionError("pruned search produced an invalid witness")
    certificate["assignment"] = dict(zip((v.text() for v in classes), assignment))
    return CheckResult(
        Verdict.NO_OBSTRUCTION,
        witness=witness,
        cases=case_count,
        certificate=certificate,
    )


def _solve_box(
    xi: ResiduePoly, classes: list[tuple[ResiduePoly, int, int]]
) -> list[int] | None:
    """Find integers ``a_v`` in the boxes with ``xi + sum a_v*v = 0``."""

    def rec(idx: int, acc: ResiduePoly, partial: list[int]) -> list[int] | None:
        if idx == len(classes):
            return list(partial) if acc.is_zero() else None
        vec, lo, hi = classes[idx]
        for a in range(lo, hi + 1):
            partial.append(a)
            found = rec(idx + 1, acc + vec.scale(a), partial)
            partial.pop()
            if found is not None:
                return found
        return None

    return rec(0, xi, [])


def _apply_moves(
    inp: CriterionInput,
    base: Decomposition,
    classes: list[ResiduePoly],
    assignment: list[int],
    slots: dict[ResiduePoly, list[tuple[int, int, tuple[int, int], int]]],
) -> Decomposition:
    """Realise a box solution as an actual decomposition."""
    blocks = base.block_map()
    s01 = blocks.get((0, 1), BiLaurent.zero()).terms
    s11 = blocks.get((1, 1), BiLaurent.zero()).terms
    p = inp.p
    for vec, target in zip(classes, assignment):
        for sign, cap, pos, direction in slots[vec]:
            if target == 0:
                break
            if sign * target <= 0:
                continue
            u = min(abs(target), cap)
            target -= sign * u
            if direction == +1:  # move u blocks out of S[1,1] into S[0,1]
                s11[pos] = s11.get(pos, 0) - u
                s01[pos] = s01.get(pos, 0) + (p - 1) * u
            else:  # reverse move
                s11[pos] = s11.get(pos, 0) + u
                s01[pos] = s01.get(pos, 0) - (p - 1) * u
        if target != 0:
            raise AssertionError("box solution could not be realised by moves")
    return Decomposition.build(
        inp.p,
        inp.n,
        inp.char_r,
        inp.free_parts,
        {(0, 1): BiLaurent(s01), (1, 1): BiLaurent(s11)},
    )


@dataclass(frozen=True)
class VacuityResult:
    vacuous: bool
    defect: ResiduePoly


def vacuity_check(khp: BiLaurent, p: int, n: int) -> VacuityResult:
    """Whether the criterion can obstruct anything for a knot at ``p^n``.

    For prime periods 2 and 3 the congruence condition follows from
    symmetries every knot polynomial has, so the test is vacuous.  The
    returned defect (of the trivial decomposition ``P_0 = khp``) is a
    sanity check: it vanishes for genuine knot polynomials.
    """
    vacuous = n == 1 and p in (2, 3)
    j = khp.eval_t_minus1()
    defect = (j - j.mirror()).reduce_mod(p**n)
    return VacuityResult(vacuous=vacuous, defect=defect)
