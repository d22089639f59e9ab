"""Dense linear algebra over GF(2) with rows stored as Python int bitsets.

Column ``j`` of a matrix with ``cols`` columns lives in bit ``cols - 1 - j`` of
each row integer, so comparing rows as integers is the same as comparing their
bit tuples lexicographically.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from ehull.errors import DimensionError

__all__ = [
    "BitMatrix",
    "pack",
    "unpack",
    "popcount",
    "parity",
    "rref",
    "rank",
    "kernel_basis",
    "row_space_sum",
    "row_space_intersection",
    "contains",
    "span",
    "rref_matrices",
    "subspaces",
    "gaussian_binomial",
]


def pack(bits: Sequence[int]) -> int:
    """Pack a bit sequence into an int, first entry most significant."""
    value = 0
    for bit in bits:
        if bit not in (0, 1):
            raise ValueError(f"not a bit: {bit!r}")
        value = (value << 1) | bit
    return value


def unpack(value: int, length: int) -> tuple[int, ...]:
    return tuple((value >> (length - 1 - j)) & 1 for j in range(length))


def popcount(value: int) -> int:
    return bin(value).count("1")


def parity(value: int) -> int:
    return popcount(value) & 1


@dataclass(frozen=True)
class BitMatrix:
    """Immutable dense matrix over GF(2)."""

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self) -> None:
        if self.cols < 0:
            raise DimensionError("negative column count")
        rows = tuple(int(r) for r in self.rows)
        limit = 1 << self.cols
        for r in rows:
            if r < 0 or r >= limit:
                raise DimensionError(f"row {r:#x} does not fit in {self.cols} columns")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], cols: int | None = None) -> BitMatrix:
        if cols is None:
            if not entries:
                raise DimensionError("column count needed for an empty matrix")
            cols = len(entries[0])
        for row in entries:
            if len(row) != cols:
                raise DimensionError("ragged rows")
        return cls(tuple(pack(row) for row in entries), cols)

    @classmethod
    def zeros(cls, nrows: int, cols: int) -> BitMatrix:
        return cls((0,) * nrows, cols)

    @classmethod
    def identity(cls, size: int) -> BitMatrix:
        return cls(tuple(1 << (size - 1 - i) for i in range(size)), size)

    @classmethod
    def empty(cls, cols: int) -> BitMatrix:
        return cls((), cols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.cols)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> (self.cols - 1 - j)) & 1

    def to_lists(self) -> list[list[int]]:
        return [list(unpack(r, self.cols)) for r in self.rows]

    def row_bits(self, i: int) -> tuple[int, ...]:
        return unpack(self.rows[i], self.cols)

    def transpose(self) -> BitMatrix:
        m = self.nrows
        out = []
        for j in range(self.cols):
            shift = self.cols - 1 - j
            value = 0
            for r in self.rows:
                value = (value << 1) | ((r >> shift) & 1)
            out.append(value)
        return BitMatrix(tuple(out), m)

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        if self.cols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for r in self.rows:
            acc = 0
            for i in range(self.cols):
                if (r >> (self.cols - 1 - i)) & 1:
                    acc ^= other.rows[i]
            out.append(acc)
        return BitMatrix(tuple(out), other.cols)

    def vstack(self, other: BitMatrix) -> BitMatrix:
        if self.cols != other.cols:
            raise DimensionError(f"column mismatch: {self.cols} vs {other.cols}")
        return BitMatrix(self.rows + other.rows, self.cols)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(b) for b in unpack(r, self.cols)) for r in self.rows)


def _reduce(rows: Iterable[int], cols: int) -> tuple[list[int], list[int]]:
    """Gauss-Jordan elimination; returns (nonzero RREF rows, pivot columns)."""
    work = [r for r in rows if r]
    pivots: list[int] = []
    top = 0
    for col in range(cols):
        bit = 1 << (cols - 1 - col)
        found = next((i for i in range(top, len(work)) if work[i] & bit), None)
        if found is None:
            continue
        work[top], work[found] = work[found], work[top]
        pivot_row = work[top]
        for i in range(len(work)):
            if i != top and work[i] & bit:
                work[i] ^= pivot_row
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rref(m: BitMatrix) -> BitMatrix:
    """Reduced row echelon form with zero rows removed."""
    rows, _ = _reduce(m.rows, m.cols)
    return BitMatrix(tuple(rows), m.cols)


def rank(m: BitMatrix) -> int:
    return len(_reduce(m.rows, m.cols)[1])


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """RREF basis of ``{x : m x^T = 0}``."""
    rows, pivots = _reduce(m.rows, m.cols)
    cols = m.cols
    pivot_set = set(pivots)
    basis = []
    for f in range(cols):
        if f in pivot_set:
            continue
        fbit = 1 << (cols - 1 - f)
        x = fbit
        for row, p in zip(rows, pivots):
            if row & fbit:
                x |= 1 << (cols - 1 - p)
        basis.append(x)
    return rref(BitMatrix(tuple(basis), cols))


def _check_cols(a: BitMatrix, b: BitMatrix) -> None:
    if a.cols != b.cols:
        raise DimensionError(f"column mismatch: {a.cols} vs {b.cols}")


def row_space_sum(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    _check_cols(a, b)
    return rref(a.vstack(b))


def row_space_intersection(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    # A ∩ B is the common kernel of the annihilators of A and B.
    _check_cols(a, b)
    return kernel_basis(kernel_basis(a).vstack(kernel_basis(b)))


def contains(space: BitMatrix, v: Sequence[int] | int) -> bool:
    """Whether ``v`` (bit sequence or packed int) lies in the row space."""
    if isinstance(v, int):
        value = v
        if value >> space.cols:
            raise DimensionError("vector longer than the row length")
    else:
        if len(v) != space.cols:
            raise DimensionError(f"vector length {len(v)} != {space.cols}")
        value = pack(v)
    rows, pivots = _reduce(space.rows, space.cols)
    for row, p in zip(rows, pivots):
        if value & (1 << (space.cols - 1 - p)):
            value ^= row
    return value == 0


def span(m: BitMatrix) -> Iterator[int]:
    """Every vector of the row space as a packed int, in increasing order.

    Relies on the RREF basis: toggling coefficients in binary counting order
    (first pivot most significant) visits the span in sorted order.
    """
    basis = _reduce(m.rows, m.cols)[0]
    r = len(basis)
    for mask in range(1 << r):
        value = 0
        for i in range(r):
            if (mask >> (r - 1 - i)) & 1:
                value ^= basis[i]
        yield value


def rref_matrices(cols: int, k: int) -> Iterator[BitMatrix]:
    """All k x cols RREF matrices of rank k, i.e. every k-dim subspace once."""
    if k < 0 or k > cols:
        return
    for pivots in itertools.combinations(range(cols), k):
        # free slots: columns after a row's pivot that are not pivot columns
        slots = [
            (i, c) for i, p in enumerate(pivots) for c in range(p + 1, cols) if c not in pivots
        ]
        base = [1 << (cols - 1 - p) for p in pivots]
        for fill in range(1 << len(slots)):
            rows = list(base)
            for t, (i, c) in enumerate(slots):
                if (fill >> t) & 1:
                    rows[i] |= 1 << (cols - 1 - c)
            yield BitMatrix(tuple(rows), cols)


def subspaces(basis: BitMatrix) -> Iterator[BitMatrix]:
    """Every subspace of the row space of ``basis``, as RREF matrices."""
    b = rref(basis)
    d = b.nrows
    for k in range(d + 1):
        for coeffs in rref_matrices(d, k):
            yield rref(coeffs @ b)


def gaussian_binomial(n: int, k: int, q: int = 2) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den
