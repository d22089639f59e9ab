"""Exhaustive classification of free E-codes up to permutation equivalence.

Free codes are kappa-lifts of binary codes, and two free codes are equivalent
exactly when their residue codes are, so everything here works on binary
subspaces of GF(2)^{2n}.  Orbits under S_{2n} are computed in bulk with numpy
by pushing whole codeword sets through a permutation lookup table.

Hull-rank and minimum symplectic distance are *not* invariant under arbitrary
coordinate permutations, so each orbit keeps both numbers per member code.
A class counts as l_i-optimal when one of its members has hull-rank i and the
largest minimum symplectic distance among all [2n, k] codes of hull-rank i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ehull import gf2
from ehull.code import ECode, binary_symplectic_weight, from_binary
from ehull.errors import GuardExceeded
from ehull.gf2 import BitMatrix
from ehull.ring import EMatrix, kappa_lift
from ehull.symplectic import swap_halves

__all__ = [
    "SUPPORTED_LENGTHS",
    "ClassificationEntry",
    "enumerate_classes",
    "optimal_codes",
    "paper_report",
]

SUPPORTED_LENGTHS = (2, 4, 6, 8)
_CHUNK_CELLS = 1 << 22


@dataclass(frozen=True)
class ClassificationEntry:
    length: int
    k: int
    canonical: BitMatrix  # least RREF in the orbit
    representative: BitMatrix  # the member that hull_rank and d_s describe
    hull_rank: int
    d_s: int
    class_size: int
    hull_rank_spectrum: tuple[int, ...]

    @property
    def canonical_generator(self) -> EMatrix:
        return _lift(self.canonical)

    @property
    def generator(self) -> EMatrix:
        return _lift(self.representative)

    def code(self) -> ECode:
        return from_binary(self.representative)

    def to_record(self) -> dict:
        return {
            "length": self.length,
            "rank": self.k,
            "hull_rank": self.hull_rank,
            "d_s": self.d_s,
            "class_size": self.class_size,
            "hull_rank_spectrum": list(self.hull_rank_spectrum),
            "generator": [" ".join(e.symbol for e in row) for row in self.generator],
            "canonical_generator": [" ".join(e.symbol for e in row) for row in self.canonical_generator],
        }


def _lift(m: BitMatrix) -> EMatrix:
    return tuple(kappa_lift(m.row_bits(i)) for i in range(m.nrows))


@dataclass(frozen=True)
class _Orbit:
    members: tuple[BitMatrix, ...]  # RREF, sorted
    hull_ranks: np.ndarray
    distances: np.ndarray


def _check_length(length: int) -> None:
    if length not in SUPPORTED_LENGTHS:
        raise GuardExceeded(f"classification supports lengths {SUPPORTED_LENGTHS}, got {length}")


@lru_cache(maxsize=None)
def _perm_table(length: int) -> np.ndarray:
    """table[p, v] = image of packed vector v under the p-th permutation of S_length."""
    perms = np.array(list(itertools.permutations(range(length))), dtype=np.int32)
    # unit vector at column i is bit (length-1-i); it moves to column perms[p, i]
    units = np.left_shift(1, length - 1 - perms)
    table = np.zeros((len(perms), 1 << length), dtype=np.int32)
    for v in range(1, 1 << length):
        low = v & -v
        bit_index = length - low.bit_length()  # column of the lowest set bit
        table[:, v] = table[:, v ^ low] ^ units[:, bit_index]
    return table


@lru_cache(maxsize=None)
def _lookup_tables(length: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    n = length // 2
    size = 1 << length
    swapped = np.array([swap_halves(v, n) for v in range(size)], dtype=np.int64)
    parity = np.array([gf2.parity(v) for v in range(size)], dtype=np.int8)
    weight = np.array([binary_symplectic_weight(v, n) for v in range(size)], dtype=np.int64)
    return swapped, parity, weight


def _hull_ranks(words: np.ndarray, bases: np.ndarray, length: int) -> np.ndarray:
    """dim(C ∩ C^⊥S) for each row of codeword sets, counting words orthogonal to a basis."""
    swapped, parity, _ = _lookup_tables(length)
    m, size = words.shape
    k = bases.shape[1]
    out = np.empty(m, dtype=np.int64)
    step = max(1, _CHUNK_CELLS // max(1, size * k))
    for lo in range(0, m, step):
        w = words[lo : lo + step]
        b = swapped[bases[lo : lo + step]]
        prods = parity[w[:, :, None] & b[:, None, :]]
        count = (~prods.any(axis=2)).sum(axis=1)
        out[lo : lo + step] = np.log2(count).round().astype(np.int64)
    return out


def _span_array(basis: BitMatrix) -> np.ndarray:
    return np.fromiter(gf2.span(basis), dtype=np.int32)


@lru_cache(maxsize=None)
def _orbits(length: int, k: int) -> tuple[_Orbit, ...]:
    _check_length(length)
    if not 1 <= k <= length:
        raise ValueError(f"rank must satisfy 1 <= k <= {length}")
    table = _perm_table(length)
    _, _, weight = _lookup_tables(length)
    seen: set[bytes] = set()
    orbits = []
    for g in gf2.rref_matrices(length, k):
        words = _span_array(g)
        if words.tobytes() in seen:
            continue
        images = np.sort(table[:, words], axis=1)
        members, first = np.unique(images, axis=0, return_index=True)
        bases = table[first][:, np.array(g.rows, dtype=np.int32)]
        for row in members:
            seen.add(row.tobytes())
        hull = _hull_ranks(members, bases, length)
        dist = weight[members[:, 1:]].min(axis=1)
        rrefs = [gf2.rref(BitMatrix(tuple(int(x) for x in b), length)) for b in bases]
        order = sorted(range(len(rrefs)), key=lambda i: rrefs[i].rows)
        orbits.append(
            _Orbit(
                tuple(rrefs[i] for i in order),
                hull[order],
                dist[order],
            )
        )
    orbits.sort(key=lambda o: o.members[0].rows)
    return tuple(orbits)


def _entry(length: int, k: int, orbit: _Orbit, index: int) -> ClassificationEntry:
    return ClassificationEntry(
        length=length,
        k=k,
        canonical=orbit.members[0],
        representative=orbit.members[index],
        hull_rank=int(orbit.hull_ranks[index]),
        d_s=int(orbit.distances[index]),
        class_size=len(orbit.members),
        hull_rank_spectrum=tuple(sorted({int(h) for h in orbit.hull_ranks})),
    )


def enumerate_classes(length: int, k: int) -> list[ClassificationEntry]:
    """One entry per equivalence class of free [length, k] codes.

    hull_rank and d_s are those of the canonical member; hull_rank_spectrum
    lists every hull-rank met inside the class.
    """
    return [_entry(length, k, orbit, 0) for orbit in _orbits(length, k)]


def optimal_codes(length: int, k: int, target_hull_rank: int) -> list[ClassificationEntry]:
    """Classes containing an l_i-optimal code for i = target_hull_rank.

    Each entry's representative is the least optimal member of its class.
    """
    orbits = _orbits(length, k)
    best = -1
    for orbit in orbits:
        mask = orbit.hull_ranks == target_hull_rank
        if mask.any():
            best = max(best, int(orbit.distances[mask].max()))
    if best < 0:
        return []
    entries = []
    for orbit in orbits:
        hits = np.flatnonzero((orbit.hull_ranks == target_hull_rank) & (orbit.distances == best))
        if hits.size:
            entries.append(_entry(length, k, orbit, int(hits[0])))
    return entries


def paper_report(lengths: tuple[int, ...] = (2, 4)) -> dict[int, list[ClassificationEntry]]:
    """l_i-optimal classes over every [length, k] stratum, grouped by hull-rank i."""
    report: dict[int, list[ClassificationEntry]] = {}
    for length in lengths:
        for k in range(1, length + 1):
            for i in range(k + 1):
                found = optimal_codes(length, k, i)
                if found:
                    report.setdefault(i, []).extend(found)
    return dict(sorted(report.items()))
