"""Brute-force ground truth by scanning E^{2n}.

Everything here is deliberately definitional: products are evaluated with the
ring's multiplication table entry by entry, duals keep the vectors that
annihilate every codeword, and closures are computed as fixed points.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np

from ehull import gf2
from ehull.code import (
    ECode,
    codeword_ints,
    min_symplectic_distance,
    symplectic_weight,
    unembed_vector,
)
from ehull.errors import GuardExceeded
from ehull.gf2 import BitMatrix
from ehull.ring import ELEMENTS, ZERO, EVector, RingElement, add, mul

Side = Literal["left", "right", "two"]

__all__ = [
    "MAX_ORACLE_LENGTH",
    "brute_left_dual",
    "brute_right_dual",
    "brute_two_sided_dual",
    "brute_dual",
    "brute_hull",
    "brute_min_distance",
    "brute_closure",
    "from_codeword_set",
    "all_codes",
    "all_free_codes",
    "random_code",
    "CheckResult",
    "cross_check",
]

MAX_ORACLE_LENGTH = 8

# element code: a | b << 1, so ring addition is XOR of codes
_CODE = {e: e.a | (e.b << 1) for e in ELEMENTS}
_MUL = np.zeros((4, 4), dtype=np.int8)
for _x in ELEMENTS:
    for _y in ELEMENTS:
        _MUL[_CODE[_x], _CODE[_y]] = _CODE[mul(_x, _y)]


def _guard(length: int) -> None:
    if length > MAX_ORACLE_LENGTH:
        raise GuardExceeded(f"oracle scans are limited to length {MAX_ORACLE_LENGTH}")


def _codes_from_ints(words: Sequence[int], length: int) -> np.ndarray:
    """Rows of element codes for 4n-bit embedded words."""
    arr = np.asarray(words, dtype=np.int64)
    cols = np.arange(length)
    u = (arr[:, None] >> (2 * length - 1 - cols)) & 1
    v = (arr[:, None] >> (length - 1 - cols)) & 1
    return (u | (v << 1)).astype(np.int8)


def _ints_from_codes(codes: np.ndarray, length: int) -> list[int]:
    weights = np.left_shift(1, length - 1 - np.arange(length)).astype(np.int64)
    u = ((codes & 1).astype(np.int64) * weights).sum(axis=1)
    v = (((codes >> 1) & 1).astype(np.int64) * weights).sum(axis=1)
    return [int(x) for x in (u << length) | v]


def _all_vectors(length: int) -> np.ndarray:
    grid = np.indices((4,) * length).reshape(length, -1).T
    return grid.astype(np.int8)


def _products(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Matrix of <l, r>_s element codes for every pair of rows."""
    n = left.shape[1] // 2
    acc = np.zeros((left.shape[0], right.shape[0]), dtype=np.int8)
    for j in range(n):
        acc ^= _MUL[left[:, j][:, None], right[:, n + j][None, :]]
        acc ^= _MUL[left[:, n + j][:, None], right[:, j][None, :]]
    return acc


def _annihilators(c: ECode, side: Side) -> list[int]:
    _guard(c.length)
    words = _codes_from_ints(list(codeword_ints(c)), c.length)
    alive = _all_vectors(c.length)
    # survivors shrink fast, so small chunks keep the product matrices small
    for lo in range(0, words.shape[0], 64):
        w = words[lo : lo + 64]
        if side in ("left", "two"):
            alive = alive[~_products(alive, w).any(axis=1)]
        if side in ("right", "two"):
            alive = alive[~_products(w, alive).any(axis=0)]
    return _ints_from_codes(alive, c.length)


def from_codeword_set(words: Iterable[int], n: int) -> ECode:
    """Turn a set of embedded words into an ECode, checking it really is one."""
    length = 2 * n
    words = set(words)
    residue = gf2.rref(BitMatrix(tuple(w >> length for w in words), length))
    torsion = gf2.rref(BitMatrix(tuple(w for w in words if w >> length == 0), length))
    code = ECode(n, residue, torsion)
    if set(codeword_ints(code)) != words:
        raise ValueError("the word set is not of the form kappa*C_res + zeta*C_tor")
    return code


def brute_dual(c: ECode, side: Side = "two") -> ECode:
    return from_codeword_set(_annihilators(c, side), c.n)


def brute_left_dual(c: ECode) -> ECode:
    return brute_dual(c, "left")


def brute_right_dual(c: ECode) -> ECode:
    return brute_dual(c, "right")


def brute_two_sided_dual(c: ECode) -> ECode:
    return brute_dual(c, "two")


def brute_hull(c: ECode, side: Side = "two") -> ECode:
    common = set(codeword_ints(c)) & set(_annihilators(c, side))
    return from_codeword_set(common, c.n)


def brute_min_distance(c: ECode) -> int:
    best = None
    for w in codeword_ints(c):
        if w:
            wt = symplectic_weight(unembed_vector(w, c.length))
            best = wt if best is None else min(best, wt)
    if best is None:
        raise ValueError("minimum distance of the zero code is undefined")
    return best


def brute_closure(g: Sequence[Sequence[RingElement]], length: int | None = None, limit: int = 1 << 16) -> set[EVector]:
    """Smallest set containing the rows, closed under + and left E-multiplication."""
    rows = [tuple(r) for r in g]
    if rows:
        length = len(rows[0])
    elif length is None:
        raise ValueError("length is required for an empty generator matrix")
    zero = (ZERO,) * length
    closed = {zero}
    frontier = list(rows)
    while frontier:
        w = frontier.pop()
        if w in closed:
            continue
        closed.add(w)
        if len(closed) > limit:
            raise GuardExceeded(f"closure exceeds {limit} words")
        new = [tuple(mul(e, x) for x in w) for e in ELEMENTS]
        new += [tuple(add(x, y) for x, y in zip(w, s)) for s in list(closed)]
        frontier.extend(v for v in new if v not in closed)
    return closed


def all_codes(n: int) -> Iterator[ECode]:
    """Every E-linear code of length 2n (pairs C_res ⊆ C_tor)."""
    for tor in gf2.subspaces(BitMatrix.identity(2 * n)):
        for res in gf2.subspaces(tor) if tor.nrows else [tor]:
            yield ECode(n, res, tor)


def all_free_codes(n: int) -> Iterator[ECode]:
    for sub in gf2.subspaces(BitMatrix.identity(2 * n)):
        yield ECode(n, sub, sub)


def random_code(n: int, rng: random.Random) -> ECode:
    length = 2 * n
    tor_dim = rng.randint(0, length)
    tor = gf2.rref(BitMatrix(tuple(rng.getrandbits(length) for _ in range(tor_dim)), length))
    res_dim = rng.randint(0, tor.nrows)
    coeffs = BitMatrix(tuple(rng.getrandbits(tor.nrows) for _ in range(res_dim)), tor.nrows)
    res = coeffs @ tor if tor.nrows else BitMatrix.empty(length)
    return ECode(n, res, tor)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{status}] {self.name}: {self.cases} cases{extra}"


def _run(name: str, codes: Sequence[ECode], check: Callable[[ECode], bool]) -> CheckResult:
    failures = [c for c in codes if not check(c)]
    detail = f"first failure: {failures[0]}" if failures else ""
    return CheckResult(name, not failures, len(codes), detail)


def cross_check(n: int, samples: int | None = None, seed: int = 0) -> list[CheckResult]:
    """Compare formula-based operations with the brute-force scans.

    Exhaustive over all codes of length 2n when ``samples`` is None, otherwise
    ``samples`` random codes drawn with ``seed``.
    """
    from ehull import symplectic as sp

    if samples is None:
        codes = list(all_codes(n))
    else:
        rng = random.Random(seed)
        codes = [random_code(n, rng) for _ in range(samples)]
    free = [c for c in codes if c.is_free]
    space = 4 ** (2 * n)

    return [
        _run("left dual = brute left dual", codes, lambda c: sp.left_dual(c) == brute_left_dual(c)),
        _run("right dual = brute right dual", codes, lambda c: sp.right_dual(c) == brute_right_dual(c)),
        _run("two-sided dual = brute two-sided dual", codes, lambda c: sp.two_sided_dual(c) == brute_two_sided_dual(c)),
        _run(
            "dual residue/torsion identities",
            codes,
            lambda c: sp.left_dual(c).residue == sp.f2_symplectic_dual(c.residue) == sp.left_dual(c).torsion
            and sp.right_dual(c).residue == sp.f2_symplectic_dual(c.torsion)
            and sp.right_dual(c).torsion == BitMatrix.identity(2 * n)
            and sp.two_sided_dual(c).residue == sp.f2_symplectic_dual(c.torsion)
            and sp.two_sided_dual(c).torsion == sp.f2_symplectic_dual(c.residue),
        ),
        _run("|C| |C^⊥S| = 4^2n", codes, lambda c: len(list(codeword_ints(c))) * len(_annihilators(c, "two")) == space),
        _run("double two-sided dual", codes, lambda c: sp.two_sided_dual(sp.two_sided_dual(c)) == c),
        _run("SHull(C^⊥S) = SHull(C)", codes, lambda c: sp.shull(sp.two_sided_dual(c)) == sp.shull(c)),
        _run("two-sided hull = brute hull", codes, lambda c: sp.shull(c) == brute_hull(c, "two")),
        _run("left hull = brute left hull", codes, lambda c: sp.left_hull(c) == brute_hull(c, "left")),
        _run("right hull = brute right hull", codes, lambda c: sp.right_hull(c) == brute_hull(c, "right")),
        _run("free: LSHull = SHull and SHull free", free, lambda c: sp.left_hull(c) == sp.shull(c) and sp.shull(c).is_free),
        _run("free: hull-rank formula = brute hull rank", free, lambda c: sp.hull_rank(c) == brute_hull(c).k1),
        _run(
            "minimum symplectic distance = brute scan",
            [c for c in codes if not c.is_zero],
            lambda c: min_symplectic_distance(c) == brute_min_distance(c),
        ),
    ]
