"""Symplectic form, the left/right/two-sided duals and hulls of E-codes, hull-rank.

Duals and hulls are assembled from residue/torsion formulas over GF(2); the
exhaustive definitional versions live in :mod:`ehull.oracle`.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Literal

from ehull import gf2
from ehull.code import ECode, code_intersection, code_sum, is_subcode
from ehull.errors import DimensionError, FormulaMismatch, HypothesisError, NotFreeError
from ehull.gf2 import BitMatrix
from ehull.ring import ZERO, EMatrix, RingElement, add, kappa_lift, mul

Side = Literal["left", "right", "two"]

__all__ = [
    "SymplecticForm",
    "omega",
    "swap_halves",
    "sprod_f2",
    "sprod_e",
    "f2_symplectic_dual",
    "left_dual",
    "right_dual",
    "two_sided_dual",
    "dual",
    "left_hull",
    "right_hull",
    "shull",
    "hull",
    "gram",
    "hull_rank",
    "hull_dimensions",
    "shull_generator_matrix",
    "is_left_nice",
    "is_right_nice",
    "is_two_sided_nice",
    "is_symplectic_lcd",
    "sum_hull_rank",
]


def swap_halves(v: int, n: int) -> int:
    """x -> x*Omega for a packed 2n-bit vector."""
    mask = (1 << n) - 1
    return ((v & mask) << n) | (v >> n)


@dataclass(frozen=True)
class SymplecticForm:
    n: int

    @cached_property
    def omega(self) -> BitMatrix:
        n = self.n
        rows = tuple(1 << (n - 1 - i) for i in range(n)) + tuple(
            1 << (2 * n - 1 - i) for i in range(n)
        )
        return BitMatrix(rows, 2 * n)

    def product(self, x: int, y: int) -> int:
        return gf2.parity(x & swap_halves(y, self.n))


def omega(n: int) -> BitMatrix:
    return SymplecticForm(n).omega


def sprod_f2(x: Sequence[int], y: Sequence[int]) -> int:
    """<(u|v), (u'|v')>_s = <u, v'> + <v, u'> over GF(2)."""
    if len(x) != len(y) or len(x) % 2:
        raise DimensionError("vectors must share an even length")
    n = len(x) // 2
    return sum(x[j] * y[n + j] + x[n + j] * y[j] for j in range(n)) % 2


def sprod_e(x: Sequence[RingElement], y: Sequence[RingElement]) -> RingElement:
    """Symplectic product over E, evaluated with the ring multiplication."""
    if len(x) != len(y) or len(x) % 2:
        raise DimensionError("vectors must share an even length")
    n = len(x) // 2
    acc = ZERO
    for j in range(n):
        acc = add(acc, mul(x[j], y[n + j]))
        acc = add(acc, mul(x[n + j], y[j]))
    return acc


def f2_symplectic_dual(g: BitMatrix) -> BitMatrix:
    """RREF basis of {y : g Omega y^T = 0}."""
    if g.cols % 2:
        raise DimensionError(f"odd column count {g.cols}")
    n = g.cols // 2
    return gf2.kernel_basis(BitMatrix(tuple(swap_halves(r, n) for r in g.rows), g.cols))


def _full(n: int) -> BitMatrix:
    return BitMatrix.identity(2 * n)


def left_dual(c: ECode) -> ECode:
    d = f2_symplectic_dual(c.residue)
    return ECode(c.n, d, d)


def right_dual(c: ECode) -> ECode:
    return ECode(c.n, f2_symplectic_dual(c.torsion), _full(c.n))


def two_sided_dual(c: ECode) -> ECode:
    return ECode(c.n, f2_symplectic_dual(c.torsion), f2_symplectic_dual(c.residue))


def dual(c: ECode, side: Side = "two") -> ECode:
    return {"left": left_dual, "right": right_dual, "two": two_sided_dual}[side](c)


def left_hull(c: ECode) -> ECode:
    res_perp = f2_symplectic_dual(c.residue)
    return ECode(
        c.n,
        gf2.row_space_intersection(c.residue, res_perp),
        gf2.row_space_intersection(res_perp, c.torsion),
    )


def right_hull(c: ECode) -> ECode:
    tor_perp = f2_symplectic_dual(c.torsion)
    return ECode(c.n, gf2.row_space_intersection(c.residue, tor_perp), c.torsion)


def shull(c: ECode) -> ECode:
    return ECode(
        c.n,
        gf2.row_space_intersection(c.residue, f2_symplectic_dual(c.torsion)),
        gf2.row_space_intersection(f2_symplectic_dual(c.residue), c.torsion),
    )


def hull(c: ECode, side: Side = "two") -> ECode:
    return {"left": left_hull, "right": right_hull, "two": shull}[side](c)


def gram(g: BitMatrix) -> BitMatrix:
    """G Omega G^T."""
    n = g.cols // 2
    return g @ omega(n) @ g.transpose()


def _require_free(c: ECode, what: str) -> None:
    if not c.is_free:
        raise NotFreeError(f"{what} is only defined for free codes (k2 = {c.k2})")


def hull_rank(c: ECode) -> int:
    """k - rank(G Omega G^T) with G a basis of the residue code."""
    _require_free(c, "hull-rank")
    return c.k1 - gf2.rank(gram(c.residue))


def hull_dimensions(c: ECode) -> tuple[int, int]:
    """(dim residue, dim torsion) of the two-sided hull; works for any code."""
    h = shull(c)
    return h.residue.nrows, h.torsion.nrows


def shull_generator_matrix(c: ECode) -> EMatrix:
    _require_free(c, "the hull generator matrix")
    res_hull = gf2.row_space_intersection(c.residue, f2_symplectic_dual(c.residue))
    return tuple(kappa_lift(res_hull.row_bits(i)) for i in range(res_hull.nrows))


def _size_product_log2(c: ECode, d: ECode) -> int:
    return c.size_log2 + d.size_log2


def is_left_nice(c: ECode) -> bool:
    return _size_product_log2(c, left_dual(c)) == 2 * c.length


def is_right_nice(c: ECode) -> bool:
    return _size_product_log2(c, right_dual(c)) == 2 * c.length


def is_two_sided_nice(c: ECode) -> bool:
    return _size_product_log2(c, two_sided_dual(c)) == 2 * c.length


def is_symplectic_lcd(c: ECode) -> bool:
    return shull(c).is_zero


def sum_hull_rank(c: ECode, d: ECode) -> int:
    """Hull-rank l1 + l2 - l of C + D, l = rank(SHull(C) ∩ SHull(D)).

    Requires both codes free with SHull(C) ⊆ D^⊥S and SHull(D) ⊆ C^⊥S.
    Under those hypotheses SHull(C) + SHull(D) ⊆ SHull(C + D) always holds,
    but the inclusion can be strict, so the value is checked against the
    direct hull-rank and :class:`FormulaMismatch` is raised when they differ.
    """
    _require_free(c, "sum_hull_rank")
    _require_free(d, "sum_hull_rank")
    if c.n != d.n:
        raise DimensionError(f"length mismatch: {c.length} vs {d.length}")
    hc, hd = shull(c), shull(d)
    if not is_subcode(hc, two_sided_dual(d)):
        raise HypothesisError("SHull(C) is not contained in the symplectic dual of D")
    if not is_subcode(hd, two_sided_dual(c)):
        raise HypothesisError("SHull(D) is not contained in the symplectic dual of C")
    common = code_intersection(hc, hd)
    result = hull_rank(c) + hull_rank(d) - common.k1
    direct = hull_rank(code_sum(c, d))  # sums of free codes are free
    if direct != result:
        raise FormulaMismatch(
            f"sum hull-rank formula gave {result}, direct computation {direct}", result, direct
        )
    return result

