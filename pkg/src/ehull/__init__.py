"""Symplectic duals, hulls and build-up constructions for codes over the ring E."""

from ehull.buildup import (
    ParityRankWarning,
    admissible_x,
    construction_i,
    construction_i_parity,
    construction_ii,
    construction_ii_parity,
)
from ehull.classify import ClassificationEntry, enumerate_classes, optimal_codes, paper_report
from ehull.code import (
    ECode,
    code_intersection,
    code_sum,
    codewords,
    from_binary,
    from_generator_matrix,
    is_free,
    min_symplectic_distance,
    rank_free,
    symplectic_weight,
)
from ehull.equivalence import Permutation, apply, are_equivalent, hull_variation_report, is_symplectic_permutation
from ehull.errors import EHullError, GuardExceeded, HypothesisError, MatrixFormatError, NotFreeError
from ehull.gf2 import BitMatrix
from ehull.ring import ELEMENTS, KAPPA, TAU, ZERO, ZETA, RingElement
from ehull.symplectic import (
    hull_rank,
    left_dual,
    left_hull,
    right_dual,
    right_hull,
    shull,
    sprod_e,
    sprod_f2,
    two_sided_dual,
)
from ehull.textio import format_matrix, parse_matrix

__all__ = [
    "BitMatrix",
    "ClassificationEntry",
    "ECode",
    "EHullError",
    "ELEMENTS",
    "GuardExceeded",
    "HypothesisError",
    "KAPPA",
    "MatrixFormatError",
    "NotFreeError",
    "ParityRankWarning",
    "Permutation",
    "RingElement",
    "TAU",
    "ZERO",
    "ZETA",
    "admissible_x",
    "apply",
    "are_equivalent",
    "code_intersection",
    "code_sum",
    "codewords",
    "construction_i",
    "construction_i_parity",
    "construction_ii",
    "construction_ii_parity",
    "enumerate_classes",
    "format_matrix",
    "from_binary",
    "from_generator_matrix",
    "hull_rank",
    "hull_variation_report",
    "is_free",
    "is_symplectic_permutation",
    "left_dual",
    "left_hull",
    "min_symplectic_distance",
    "optimal_codes",
    "paper_report",
    "parse_matrix",
    "rank_free",
    "right_dual",
    "right_hull",
    "shull",
    "sprod_e",
    "sprod_f2",
    "symplectic_weight",
    "two_sided_dual",
]
