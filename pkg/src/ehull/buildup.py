"""Build-up constructions extending a free [2n, k] code of hull-rank l.

Construction I gives a [2n+2, k+1] code and Construction II a [2n+4, k+1]
code, both with hull-rank l+1.  Binary vectors are bit tuples of length 2n
written ``(a|b)`` with the split at the midpoint.
"""

from __future__ import annotations

import warnings
from collections.abc import Iterator, Sequence

from ehull import gf2
from ehull.code import ECode, from_generator_matrix
from ehull.errors import DimensionError, HypothesisError, NoAdmissiblePairError, NotFreeError
from ehull.gf2 import BitMatrix
from ehull.ring import EMatrix, kappa_lift, pi_vector
from ehull.symplectic import f2_symplectic_dual, gram, hull_rank, sprod_f2, two_sided_dual

__all__ = [
    "ParityRankWarning",
    "residue_rows",
    "admissible_x",
    "default_x",
    "construction_i",
    "construction_ii",
    "construction_i_parity",
    "construction_ii_parity",
    "find_parity_pair_ii",
    "parity_generates_dual",
]


class ParityRankWarning(UserWarning):
    """The printed parity-check matrix does not reach the dual's dimension."""


def _require_free(c: ECode) -> None:
    if not c.is_free:
        raise NotFreeError("build-up constructions need a free code")


def residue_rows(c: ECode) -> list[tuple[int, ...]]:
    """The rows r_i used by the constructions.

    These are pi of the user's generator rows when those are independent
    (so printed examples come out unchanged), otherwise the residue RREF basis.
    """
    if c.source_generator is not None:
        rows = [pi_vector(r) for r in c.source_generator]
        m = BitMatrix(tuple(gf2.pack(r) for r in rows), c.length)
        if gf2.rank(m) == len(rows) == c.k1:
            return rows
    return [c.residue.row_bits(i) for i in range(c.k1)]


def _vector(x: Sequence[int], length: int, name: str) -> tuple[int, ...]:
    x = tuple(int(b) for b in x)
    if len(x) != length:
        raise DimensionError(f"{name} has length {len(x)}, expected {length}")
    if any(b not in (0, 1) for b in x):
        raise ValueError(f"{name} must be a bit vector")
    return x


def admissible_x(c: ECode) -> Iterator[tuple[int, ...]]:
    """All x with <x, r_i>_s = 0, i.e. (C_res)^⊥S, in lexicographic order."""
    _require_free(c)
    perp = f2_symplectic_dual(c.residue)
    for v in gf2.span(perp):
        yield gf2.unpack(v, c.length)


def default_x(c: ECode) -> tuple[int, ...]:
    """Least nonzero admissible x; the zero vector when no nonzero one exists."""
    stream = admissible_x(c)
    zero = next(stream)
    return next(stream, zero)


def _check_x(c: ECode, x: Sequence[int] | None) -> tuple[int, ...]:
    _require_free(c)
    if x is None:
        return default_x(c)
    x = _vector(x, c.length, "x")
    for i, r in enumerate(residue_rows(c)):
        if sprod_f2(x, r):
            raise HypothesisError(f"<x, r_{i + 1}>_s = 1; x must be symplectic-orthogonal to C_res")
    return x


def _extend(top: Sequence[int], rows: Sequence[Sequence[int]], n: int, pad: int) -> list[list[int]]:
    """Prefix ``pad`` zeros to each half of every row; ``top`` is already full length."""
    out = [list(top)]
    for r in rows:
        out.append([0] * pad + list(r[:n]) + [0] * pad + list(r[n:]))
    return out


def _lift(rows: Sequence[Sequence[int]]) -> EMatrix:
    return tuple(kappa_lift(r) for r in rows)


def _build(c: ECode, x: tuple[int, ...], prefix: list[int]) -> ECode:
    n, pad = c.n, len(prefix)
    a, b = list(x[:n]), list(x[n:])
    rows = residue_rows(c)
    binary = _extend(prefix + a + prefix + b, rows, n, pad)
    g_new = _lift(binary)
    d = from_generator_matrix(g_new)
    # the block identity behind the hull-rank claim
    g1 = BitMatrix.from_lists(binary)
    g0 = BitMatrix.from_lists(rows, c.length)
    m1, m0 = gram(g1), gram(g0)
    if m1.rows[0] != 0 or any(m1.entry(i, 0) for i in range(m1.nrows)):
        raise AssertionError("first row/column of G1 Omega G1^T is not zero")
    lower = BitMatrix(tuple(r & ((1 << c.k1) - 1) for r in m1.rows[1:]), c.k1)
    if lower != m0:
        raise AssertionError("lower block of G1 Omega G1^T differs from G Omega G^T")
    if d.k1 != c.k1 + 1 or not d.is_free:
        raise AssertionError(f"expected a free code of rank {c.k1 + 1}, got {d}")
    if hull_rank(d) != hull_rank(c) + 1:
        raise AssertionError("hull-rank did not increase by one")
    return d


def construction_i(c: ECode, x: Sequence[int] | None = None) -> ECode:
    """Free [2n+2, k+1] code with top row kappa*(1, a | 1, b)."""
    return _build(c, _check_x(c, x), [1])


def construction_ii(c: ECode, x: Sequence[int] | None = None) -> ECode:
    """Free [2n+4, k+1] code with top row kappa*(1, 1, a | 1, 1, b)."""
    return _build(c, _check_x(c, x), [1, 1])


def _parity_basis(c: ECode) -> list[tuple[int, ...]]:
    h = f2_symplectic_dual(c.residue)
    return [h.row_bits(j) for j in range(h.nrows)]


def _check_y(c: ECode, y: Sequence[int]) -> tuple[int, ...]:
    y = _vector(y, c.length, "y")
    if not gf2.contains(f2_symplectic_dual(c.residue), y):
        raise HypothesisError("y must lie in (C_res)^⊥S")
    return y


def parity_generates_dual(d: ECode, h: EMatrix) -> bool:
    """Whether the rows of ``h`` generate the two-sided symplectic dual of ``d``."""
    return from_generator_matrix(h, d.length) == two_sided_dual(d)


def _flag(h: EMatrix, expected: int) -> None:
    m = BitMatrix(tuple(gf2.pack(pi_vector(r)) for r in h), len(h[0]))
    r = gf2.rank(m)
    if r != expected:
        warnings.warn(
            f"parity-check matrix has rank {r}, the dual needs {expected}",
            ParityRankWarning,
            stacklevel=3,
        )


def construction_i_parity(c: ECode, x: Sequence[int] | None, y: Sequence[int]) -> EMatrix:
    """Parity-check matrix of ``construction_i(c, x)``.

    Top row kappa*(1, u | 1+delta, v) with delta = <x, y>_s, then each parity
    row s_j of C_res with z_j = <x, s_j>_s inserted in the second new column.
    """
    x = _check_x(c, x)
    y = _check_y(c, y)
    n = c.n
    delta = sprod_f2(x, y)
    rows = [[1] + list(y[:n]) + [1 ^ delta] + list(y[n:])]
    for s in _parity_basis(c):
        z = sprod_f2(x, s)
        rows.append([0] + list(s[:n]) + [z] + list(s[n:]))
    h = _lift(rows)
    _flag(h, c.length - c.k1 + 1)
    return h


def construction_ii_parity(c: ECode, x: Sequence[int] | None, y: Sequence[int]) -> EMatrix:
    """Parity-check matrix of ``construction_ii(c, x)`` as laid out in the construction.

    Needs y != 0 in (C_res)^⊥S, <x, y>_s = 0 and <x, s_j>_s = 0 for every
    parity row s_j.  Because y already lies in the span of the s_j, the
    returned matrix has rank 2n-k+2, one short of the dual; a
    :class:`ParityRankWarning` is issued whenever that happens.
    """
    x = _check_x(c, x)
    y = _check_y(c, y)
    if not any(y):
        raise HypothesisError("y must be nonzero")
    if sprod_f2(x, y):
        raise HypothesisError("<x, y>_s must be 0")
    parity = _parity_basis(c)
    for j, s in enumerate(parity):
        if sprod_f2(x, s):
            raise HypothesisError(f"z_{j + 1} = <x, s_{j + 1}>_s = 1; all z_j must vanish")
    n = c.n
    zeros = [0] * n
    rows = [
        [1, 0] + zeros + [0, 1] + zeros,
        [0, 1] + zeros + [1, 0] + zeros,
    ]
    rows += _extend([0, 0] + list(y[:n]) + [0, 0] + list(y[n:]), parity, n, 2)
    h = _lift(rows)
    _flag(h, c.length - c.k1 + 3)
    return h


def find_parity_pair_ii(c: ECode) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Lexicographically least (x, y) meeting the Construction II parity hypotheses."""
    _require_free(c)
    parity = _parity_basis(c)
    ys = [v for v in admissible_x(c) if any(v)]
    for x in admissible_x(c):
        if any(sprod_f2(x, s) for s in parity):
            continue
        for y in ys:
            if not sprod_f2(x, y):
                return x, y
    raise NoAdmissiblePairError("no (x, y) satisfies the Construction II parity hypotheses")
