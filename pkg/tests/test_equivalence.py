import itertools
import random

import pytest
from conftest import code, mat
from hypothesis import given, settings
from hypothesis import strategies as st

from ehull import oracle
from ehull.code import codeword_ints, codewords, embed_vector, from_binary
from ehull.equivalence import (
    HullVariationReport,
    Permutation,
    apply,
    are_equivalent,
    hull_variation_report,
    is_symplectic_permutation,
    permute_bits,
    symplectic_permutations,
    weight_enumerator,
)
from ehull.errors import DimensionError, GuardExceeded, NotFreeError
from ehull.gf2 import BitMatrix
from ehull.ring import ELEMENTS, KAPPA, add, mul
from ehull.symplectic import hull_rank, omega, sprod_e, two_sided_dual

SWAP_23 = Permutation.transposition(4, 1, 2)


def euclid(x, y):
    acc = mul(x[0], y[0])
    for a, b in zip(x[1:], y[1:]):
        acc = add(acc, mul(a, b))
    return acc


def test_permutation_basics():
    p = Permutation((1, 2, 0))
    assert p(("a", "b", "c")) == ("c", "a", "b")
    assert p.inverse()(p(("a", "b", "c"))) == ("a", "b", "c")
    assert p.one_based() == (2, 3, 1)
    assert p.matrix.to_lists() == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    with pytest.raises(DimensionError):
        p((1, 2))


def test_matrix_action_matches_call():
    p = Permutation((2, 0, 3, 1))
    for v in range(16):
        row = BitMatrix((v,), 4)
        assert (row @ p.matrix).rows[0] == permute_bits(v, p)


def test_apply_examples():
    c = code("k 0 0 0")
    assert apply(c, SWAP_23) == c
    assert apply(c, Permutation.identity(4)) == c
    self_hull = code("k 0 0 0; 0 k 0 0")
    assert apply(self_hull, SWAP_23) == code("k 0 0 0; 0 0 k 0")
    assert apply(self_hull, SWAP_23).generator_matrix() == mat("k 0 0 0; 0 0 k 0")
    with pytest.raises(DimensionError):
        apply(c, Permutation.identity(2))


def test_symplectic_product_not_permutation_invariant():
    w, z = mat("k 0 0 0; 0 k 0 0")
    assert sprod_e(SWAP_23(w), SWAP_23(z)) == KAPPA != sprod_e(w, z)


@pytest.mark.parametrize("seed", range(25))
def test_euclidean_product_is_permutation_invariant(seed):
    rng = random.Random(seed)
    w = tuple(rng.choice(ELEMENTS) for _ in range(4))
    z = tuple(rng.choice(ELEMENTS) for _ in range(4))
    p = Permutation(tuple(rng.sample(range(4), 4)))
    assert euclid(p(w), p(z)) == euclid(w, z)


def test_dual_does_not_commute_with_permutation():
    c = code("k 0 0 0")
    permuted_dual = apply(two_sided_dual(c), SWAP_23)
    dual_of_permuted = two_sided_dual(apply(c, SWAP_23))
    word = embed_vector(mat("0 k 0 0")[0])
    assert word in set(codeword_ints(dual_of_permuted))
    assert word not in set(codeword_ints(permuted_dual))


def euclidean_dual_words(c):
    words = list(codewords(c))
    return {
        z
        for z in itertools.product(ELEMENTS, repeat=c.length)
        if all(not euclid(z, w) for w in words)
    }


@pytest.mark.parametrize("seed", range(5))
def test_euclidean_dual_commutes_with_permutation(seed):
    rng = random.Random(seed)
    c = oracle.random_code(1, rng)
    p = Permutation(tuple(rng.sample(range(2), 2)))
    assert {p(z) for z in euclidean_dual_words(c)} == euclidean_dual_words(apply(c, p))


def test_are_equivalent_examples():
    c = code("k 0 0 0; 0 k 0 0")
    d = code("k 0 0 0; 0 0 k 0")
    assert are_equivalent(c, c) == Permutation.identity(4)
    assert are_equivalent(c, d) == SWAP_23
    assert are_equivalent(code("k k 0 0"), code("k 0 0 0")) is None
    assert are_equivalent(code("k 0"), code("k 0 0 0")) is None
    with pytest.raises(NotFreeError):
        are_equivalent(code("z 0"), code("z 0"))
    with pytest.raises(GuardExceeded):
        are_equivalent(code("k" + " 0" * 9), code("k" + " 0" * 9))


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_equivalence_relation_properties(rnd):
    frees = list(oracle.all_free_codes(2))
    c, d = rnd.choice(frees), rnd.choice(frees)
    p = Permutation(tuple(rnd.sample(range(4), 4)))
    assert are_equivalent(c, c) is not None
    assert (are_equivalent(c, d) is None) == (are_equivalent(d, c) is None)
    assert (are_equivalent(apply(c, p), d) is None) == (are_equivalent(c, d) is None)
    witness = are_equivalent(c, apply(c, p))
    assert apply(c, witness) == apply(c, p)


def test_weight_enumerator():
    assert weight_enumerator(BitMatrix.from_lists([[1, 1, 0], [0, 1, 1]])) == (1, 0, 3, 0)


def test_symplectic_permutation_examples():
    assert is_symplectic_permutation(Permutation.identity(4), 2)
    assert not is_symplectic_permutation(SWAP_23, 2)
    expected = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    p = SWAP_23.matrix
    assert (p @ omega(2) @ p.transpose()).to_lists() == expected
    halves = Permutation((3, 4, 5, 0, 1, 2))
    assert is_symplectic_permutation(halves, 3)
    with pytest.raises(DimensionError):
        is_symplectic_permutation(halves, 2)


def test_symplectic_permutation_count():
    # pairs (j, n+j) are permuted among themselves and each may be flipped
    assert len(symplectic_permutations(1)) == 2
    assert len(symplectic_permutations(2)) == 8
    assert len(symplectic_permutations(3)) == 48


def test_hull_variation_examples():
    rep = hull_variation_report(code("k 0 0 0; 0 k 0 0"))
    assert rep.hull_rank == 2 and rep.invariant_holds
    assert {0, 2} <= rep.spectrum
    lcd = hull_variation_report(code("k 0 0 0; 0 0 k 0"))
    assert set(lcd.symplectic) == {0}
    single = hull_variation_report(code("k 0 0 k"), [Permutation.identity(4)])
    assert single.spectrum == {1}
    assert isinstance(single, HullVariationReport)
    with pytest.raises(NotFreeError):
        hull_variation_report(code("z 0"))


def test_hull_variation_invariant_exhaustive():
    perms = symplectic_permutations(2)
    for c in oracle.all_free_codes(2):
        assert hull_variation_report(c, perms).invariant_holds


def test_apply_matches_codeword_permutation():
    c = from_binary(BitMatrix.from_lists([[1, 1, 0, 1], [0, 1, 1, 0]]))
    p = Permutation((3, 1, 0, 2))
    assert set(codewords(apply(c, p))) == {p(w) for w in codewords(c)}
