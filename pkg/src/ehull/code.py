"""Linear codes over E stored as a (residue, torsion) pair of binary row spaces.

A code of length 2n is the direct sum ``kappa*C_res + zeta*C_tor``.  In the
4n-bit embedding used here, a word with entries ``u_j*kappa + v_j*zeta`` is the
integer ``(u << 2n) | v``, so ``C`` corresponds to the set ``C_res x C_tor``.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from ehull import gf2
from ehull.errors import DimensionError, GuardExceeded, NotFreeError
from ehull.gf2 import BitMatrix
from ehull.ring import EMatrix, EVector, RingElement, kappa_lift, zeta_lift

__all__ = [
    "ECode",
    "ENUMERATION_GUARD_BITS",
    "from_generator_matrix",
    "from_binary",
    "zero_code",
    "full_code",
    "is_free",
    "rank_free",
    "codewords",
    "symplectic_weight",
    "binary_symplectic_weight",
    "min_symplectic_distance",
    "min_weight_word",
    "code_sum",
    "code_intersection",
    "is_subcode",
    "exact_union_check",
    "embed_vector",
    "unembed_vector",
]

ENUMERATION_GUARD_BITS = 24


@dataclass(frozen=True)
class ECode:
    """An E-linear code of length ``2n``; residue and torsion are kept in RREF."""

    n: int
    residue: BitMatrix
    torsion: BitMatrix
    source_generator: EMatrix | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        length = 2 * self.n
        if self.residue.cols != length or self.torsion.cols != length:
            raise DimensionError(f"residue/torsion must have {length} columns")
        res = gf2.rref(self.residue)
        tor = gf2.rref(self.torsion)
        if any(not gf2.contains(tor, r) for r in res.rows):
            raise ValueError("residue code is not contained in the torsion code")
        object.__setattr__(self, "residue", res)
        object.__setattr__(self, "torsion", tor)

    @property
    def length(self) -> int:
        return 2 * self.n

    @property
    def k1(self) -> int:
        return self.residue.nrows

    @property
    def k2(self) -> int:
        return self.torsion.nrows - self.residue.nrows

    @property
    def size_log2(self) -> int:
        """log2 of the number of codewords, 2*k1 + k2."""
        return 2 * self.k1 + self.k2

    @property
    def is_free(self) -> bool:
        return self.k2 == 0

    @property
    def is_zero(self) -> bool:
        return self.torsion.nrows == 0

    def embedding(self) -> BitMatrix:
        """Basis of the code as a GF(2) subspace of 4n-bit words."""
        shift = self.length
        rows = tuple(r << shift for r in self.residue.rows) + self.torsion.rows
        return BitMatrix(rows, 2 * self.length)

    def generator_matrix(self) -> EMatrix:
        """kappa-lift of the residue basis followed by zeta-lifts completing the torsion."""
        if self.source_generator is not None:
            return self.source_generator
        return canonical_generator_matrix(self)

    def __str__(self) -> str:
        kind = "free" if self.is_free else "non-free"
        return f"ECode(length={self.length}, k1={self.k1}, k2={self.k2}, {kind})"


def canonical_generator_matrix(c: ECode) -> EMatrix:
    length = c.length
    rows = [kappa_lift(gf2.unpack(r, length)) for r in c.residue.rows]
    basis = c.residue
    for t in c.torsion.rows:
        if not gf2.contains(basis, t):
            rows.append(zeta_lift(gf2.unpack(t, length)))
            basis = BitMatrix(basis.rows + (t,), length)
    return tuple(rows)


def embed_vector(v: Sequence[RingElement]) -> int:
    u = gf2.pack([e.a for e in v])
    z = gf2.pack([e.b for e in v])
    return (u << len(v)) | z


def unembed_vector(value: int, length: int) -> EVector:
    u = gf2.unpack(value >> length, length)
    z = gf2.unpack(value & ((1 << length) - 1), length)
    return tuple(RingElement(a, b) for a, b in zip(u, z))


def _from_embedding(space: BitMatrix, n: int) -> ECode:
    # RREF rows with a pivot in the zeta half have an all-zero kappa half, so
    # they span (space ∩ zeta*F2^2n); the other rows project onto the residue.
    length = 2 * n
    low = (1 << length) - 1
    res, tor = [], []
    for row in gf2.rref(space).rows:
        if row >> length:
            res.append(row >> length)
        else:
            tor.append(row & low)
    residue = BitMatrix(tuple(res), length)
    torsion = BitMatrix(tuple(tor), length)
    return ECode(n, residue, torsion)


def from_generator_matrix(g: Sequence[Sequence[RingElement]], length: int | None = None) -> ECode:
    """Code generated by the rows of ``g`` under addition and left E-multiplication.

    Left multiplication acts entrywise as ``e * x_j = pi(x_j) * e``, so the
    closure is the GF(2) span of the rows together with ``kappa*pi(s)`` and
    ``zeta*pi(s)`` for every row ``s``.
    """
    rows = [tuple(r) for r in g]
    if rows:
        length = len(rows[0])
        if any(len(r) != length for r in rows):
            raise DimensionError("ragged generator matrix")
    elif length is None:
        raise DimensionError("length is required for an empty generator matrix")
    if length % 2:
        raise DimensionError(f"odd column count {length}")
    gens = []
    for s in rows:
        u = gf2.pack([e.a for e in s])
        gens.append(embed_vector(s))
        gens.append(u << length)  # kappa * s
        gens.append(u)  # zeta * s
    code = _from_embedding(BitMatrix(tuple(gens), 2 * length), length // 2)
    return ECode(code.n, code.residue, code.torsion, tuple(rows) if rows else None)


def from_binary(g: BitMatrix) -> ECode:
    """The free code generated by the kappa-lift of a binary matrix."""
    if g.cols % 2:
        raise DimensionError(f"odd column count {g.cols}")
    lifted = tuple(kappa_lift(g.row_bits(i)) for i in range(g.nrows))
    code = ECode(g.cols // 2, g, g)
    return ECode(code.n, code.residue, code.torsion, lifted or None)


def zero_code(n: int) -> ECode:
    return ECode(n, BitMatrix.empty(2 * n), BitMatrix.empty(2 * n))


def full_code(n: int) -> ECode:
    full = BitMatrix.identity(2 * n)
    return ECode(n, full, full)


def is_free(c: ECode) -> bool:
    return c.is_free


def rank_free(c: ECode) -> int:
    if not c.is_free:
        raise NotFreeError("rank is only defined for free codes")
    return c.k1


def _guard(bits: int) -> None:
    if bits > ENUMERATION_GUARD_BITS:
        raise GuardExceeded(f"enumeration of 2^{bits} words exceeds guard 2^{ENUMERATION_GUARD_BITS}")


def codeword_ints(c: ECode) -> Iterator[int]:
    """All codewords in the 4n-bit embedding."""
    _guard(c.size_log2)
    shift = c.length
    tor = list(gf2.span(c.torsion))
    for r in gf2.span(c.residue):
        head = r << shift
        for t in tor:
            yield head | t


def codewords(c: ECode) -> Iterator[EVector]:
    for w in codeword_ints(c):
        yield unembed_vector(w, c.length)


def binary_symplectic_weight(v: int, n: int) -> int:
    """Number of j with (v_j, v_{n+j}) != (0, 0) for a packed 2n-bit vector."""
    mask = (1 << n) - 1
    return gf2.popcount(((v >> n) | v) & mask)


def symplectic_weight(w: Sequence[RingElement]) -> int:
    if len(w) % 2:
        raise DimensionError(f"odd length {len(w)}")
    n = len(w) // 2
    return sum(1 for j in range(n) if w[j] or w[n + j])


def min_weight_word(c: ECode) -> tuple[int, EVector]:
    """Minimum symplectic weight and a word attaining it.

    A word kappa*r + zeta*t has support supp(r) ∪ supp(t), and zeta*r is also a
    codeword since C_res ⊆ C_tor, so the minimum is attained on zeta*C_tor.
    """
    if c.is_zero:
        raise ValueError("minimum distance of the zero code is undefined")
    _guard(c.torsion.nrows)
    best, best_t = None, 0
    for t in gf2.span(c.torsion):
        if t:
            w = binary_symplectic_weight(t, c.n)
            if best is None or w < best:
                best, best_t = w, t
    return best, zeta_lift(gf2.unpack(best_t, c.length))


def min_symplectic_distance(c: ECode) -> int:
    return min_weight_word(c)[0]


def _check_lengths(a: ECode, b: ECode) -> None:
    if a.n != b.n:
        raise DimensionError(f"length mismatch: {a.length} vs {b.length}")


def code_sum(a: ECode, b: ECode) -> ECode:
    _check_lengths(a, b)
    return _from_embedding(gf2.row_space_sum(a.embedding(), b.embedding()), a.n)


def code_intersection(a: ECode, b: ECode) -> ECode:
    _check_lengths(a, b)
    return _from_embedding(gf2.row_space_intersection(a.embedding(), b.embedding()), a.n)


def is_subcode(a: ECode, b: ECode) -> bool:
    """Whether a ⊆ b."""
    _check_lengths(a, b)
    return all(gf2.contains(b.residue, r) for r in a.residue.rows) and all(
        gf2.contains(b.torsion, t) for t in a.torsion.rows
    )


def exact_union_check(g: Sequence[Sequence[RingElement]]) -> bool:
    """Whether the literal union of the E-span and the GF(2)-span of the rows
    already equals the closed code.

    The union is not closed under addition in general; ``from_generator_matrix``
    always uses the closure.  This diagnostic tells the two readings apart.
    """
    rows = [tuple(r) for r in g]
    if not rows:
        return True
    length = len(rows[0])
    code = from_generator_matrix(rows)
    pis = [gf2.pack([e.a for e in s]) for s in rows]
    _guard(len(rows) + 2 * gf2.rank(BitMatrix(tuple(pis), length)))
    pi_span = list(gf2.span(BitMatrix(tuple(pis), length)))
    # E-span: sums of e_j * s_j = (a_j pi(s_j), b_j pi(s_j)) -> kappa*U + zeta*U
    e_span = {(x << length) | y for x in pi_span for y in pi_span}
    f2_span = set(gf2.span(BitMatrix(tuple(embed_vector(s) for s in rows), 2 * length)))
    return (e_span | f2_span) == set(codeword_ints(code))
