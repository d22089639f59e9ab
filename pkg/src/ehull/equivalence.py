"""Coordinate permutations, permutation equivalence of free codes, hull variation."""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from ehull import gf2
from ehull.code import ECode
from ehull.errors import DimensionError, GuardExceeded, NotFreeError
from ehull.gf2 import BitMatrix
from ehull.symplectic import hull_rank, omega

__all__ = [
    "MAX_SEARCH_LENGTH",
    "Permutation",
    "permute_bits",
    "apply",
    "weight_enumerator",
    "are_equivalent",
    "is_symplectic_permutation",
    "symplectic_permutations",
    "HullVariationReport",
    "hull_variation_report",
]

MAX_SEARCH_LENGTH = 8


@dataclass(frozen=True)
class Permutation:
    """Coordinate permutation; ``mapping[i]`` is where coordinate ``i`` goes (0-based).

    Acting on row vectors this is ``w -> w P`` with ``P[i][mapping[i]] = 1``.
    """

    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        mapping = tuple(int(i) for i in self.mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise ValueError(f"not a permutation: {mapping}")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(size)))

    @classmethod
    def transposition(cls, size: int, i: int, j: int) -> Permutation:
        """Swap coordinates i and j (0-based)."""
        m = list(range(size))
        m[i], m[j] = m[j], m[i]
        return cls(tuple(m))

    @property
    def size(self) -> int:
        return len(self.mapping)

    @cached_property
    def matrix(self) -> BitMatrix:
        size = self.size
        return BitMatrix(tuple(1 << (size - 1 - j) for j in self.mapping), size)

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return Permutation(tuple(inv))

    def __call__(self, w: Sequence) -> tuple:
        """Permute the entries of a vector of any alphabet."""
        if len(w) != self.size:
            raise DimensionError(f"vector length {len(w)} != {self.size}")
        out = [None] * self.size
        for i, j in enumerate(self.mapping):
            out[j] = w[i]
        return tuple(out)

    def one_based(self) -> tuple[int, ...]:
        return tuple(j + 1 for j in self.mapping)


def permute_bits(v: int, p: Permutation) -> int:
    size = p.size
    out = 0
    for i, j in enumerate(p.mapping):
        if (v >> (size - 1 - i)) & 1:
            out |= 1 << (size - 1 - j)
    return out


def _permute_matrix(m: BitMatrix, p: Permutation) -> BitMatrix:
    return BitMatrix(tuple(permute_bits(r, p) for r in m.rows), m.cols)


def apply(c: ECode, p: Permutation) -> ECode:
    """The code C P."""
    if p.size != c.length:
        raise DimensionError(f"permutation of size {p.size} on a code of length {c.length}")
    gen = None
    if c.source_generator is not None:
        gen = tuple(p(row) for row in c.source_generator)
    return ECode(c.n, _permute_matrix(c.residue, p), _permute_matrix(c.torsion, p), gen)


def weight_enumerator(space: BitMatrix) -> tuple[int, ...]:
    """Hamming weight distribution A_0..A_cols of a binary row space."""
    counts = [0] * (space.cols + 1)
    for v in gf2.span(space):
        counts[gf2.popcount(v)] += 1
    return tuple(counts)


def _search_guard(length: int) -> None:
    if length > MAX_SEARCH_LENGTH:
        raise GuardExceeded(f"exhaustive search over S_{length} exceeds guard S_{MAX_SEARCH_LENGTH}")


def are_equivalent(c: ECode, d: ECode) -> Permutation | None:
    """Lexicographically least P with C P = D, or None.

    For free codes this holds exactly when the residue codes are equivalent.
    """
    if not (c.is_free and d.is_free):
        raise NotFreeError("equivalence test is implemented for free codes")
    if c.n != d.n:
        return None
    _search_guard(c.length)
    if c.k1 != d.k1 or weight_enumerator(c.residue) != weight_enumerator(d.residue):
        return None
    target = set(gf2.span(d.residue))
    for mapping in itertools.permutations(range(c.length)):
        p = Permutation(mapping)
        if all(permute_bits(r, p) in target for r in c.residue.rows):
            return p
    return None


def is_symplectic_permutation(p: Permutation, n: int) -> bool:
    """Whether P Omega P^T = Omega."""
    if p.size != 2 * n:
        raise DimensionError(f"permutation of size {p.size}, expected {2 * n}")
    om = omega(n)
    return p.matrix @ om @ p.matrix.transpose() == om


def symplectic_permutations(n: int) -> list[Permutation]:
    _search_guard(2 * n)
    return [
        p
        for p in map(Permutation, itertools.permutations(range(2 * n)))
        if is_symplectic_permutation(p, n)
    ]


@dataclass(frozen=True)
class HullVariationReport:
    hull_rank: int
    symplectic: Counter = field(default_factory=Counter)
    other: Counter = field(default_factory=Counter)

    @property
    def invariant_holds(self) -> bool:
        return set(self.symplectic) <= {self.hull_rank}

    @property
    def spectrum(self) -> set[int]:
        return set(self.symplectic) | set(self.other)


def hull_variation_report(c: ECode, perms: Iterable[Permutation] | None = None) -> HullVariationReport:
    """Hull-ranks of C P, split by whether P preserves the symplectic form."""
    if not c.is_free:
        raise NotFreeError("hull variation is defined for free codes")
    if perms is None:
        _search_guard(c.length)
        perms = map(Permutation, itertools.permutations(range(c.length)))
    report = HullVariationReport(hull_rank(c))
    for p in perms:
        h = hull_rank(apply(c, p))
        bucket = report.symplectic if is_symplectic_permutation(p, c.n) else report.other
        bucket[h] += 1
    return report
