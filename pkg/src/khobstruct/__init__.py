"""Exact-arithmetic periodicity obstructions for knots and links.

The package decides whether polynomial invariants of a knot or link are
compatible with a cyclic symmetry of prime-power order: a decomposition
criterion on the Khovanov polynomial (with a pruned residue-class
search for prime periods), equivariant Lee-theory rank computations,
and the classical Alexander / HOMFLYPT / torsion / linking-number
comparators, wrapped in a batch JSONL command-line interface.
"""

from .laurent import BiLaurent, QLaurent, ResiduePoly
from .criterion import (
    CheckResult,
    CriterionInput,
    Decomposition,
    Verdict,
    WidthPolicy,
    base_from_lee_ss,
    brute_force_check,
    congruence_defect,
    level_defect,
    pruned_check_n1,
    vacuity_check,
    validate,
)

__all__ = [
    "BiLaurent",
    "QLaurent",
    "ResiduePoly",
    "CheckResult",
    "CriterionInput",
    "Decomposition",
    "Verdict",
    "WidthPolicy",
    "base_from_lee_ss",
    "brute_force_check",
    "congruence_defect",
    "level_defect",
    "pruned_check_n1",
    "vacuity_check",
    "validate",
]

__version__ = "0.1.0"
