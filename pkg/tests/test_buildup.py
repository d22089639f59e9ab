import itertools
import warnings

import pytest
from conftest import M_LARGE, M_SMALL, bits, code, mat

from ehull import buildup, oracle
from ehull.buildup import (
    ParityRankWarning,
    admissible_x,
    construction_i,
    construction_i_parity,
    construction_ii,
    construction_ii_parity,
    default_x,
    find_parity_pair_ii,
    parity_generates_dual,
    residue_rows,
)
from ehull.code import from_binary, from_generator_matrix, zero_code
from ehull.errors import DimensionError, HypothesisError, NoAdmissiblePairError, NotFreeError
from ehull.gf2 import BitMatrix
from ehull.ring import pi_vector
from ehull.symplectic import gram, hull_rank, omega, sprod_f2, two_sided_dual

G1_SMALL = "k k k 0 k 0 0 k; 0 k 0 0 0 0 0 k; 0 0 k 0 0 0 0 k"
G2_SMALL = "k k k k 0 k k 0 0 k; 0 0 k 0 0 0 0 0 0 k; 0 0 0 k 0 0 0 0 0 k"
G1_LARGE = (
    "k 0 0 k 0 k 0 k k k; 0 k 0 0 k 0 0 k k 0; 0 0 k 0 k 0 k k 0 0; 0 0 0 k k 0 0 k 0 k"
)
G2_LARGE = (
    "k k 0 0 k 0 k k 0 k k k; 0 0 k 0 0 k 0 0 0 k k 0; "
    "0 0 0 k 0 k 0 0 k k 0 0; 0 0 0 0 k k 0 0 0 k 0 k"
)


def binary(h):
    return BitMatrix.from_lists([pi_vector(r) for r in h])


def test_admissible_x_contains_the_worked_choices():
    assert bits("110001") in set(admissible_x(code(M_SMALL)))
    assert bits("00100111") in set(admissible_x(code(M_LARGE)))
    stream = list(admissible_x(code(M_SMALL)))
    assert stream[0] == (0,) * 6
    assert stream == sorted(stream)
    assert len(stream) == 2 ** (6 - 2)


def test_admissible_x_restarts():
    c = code(M_SMALL)
    assert list(admissible_x(c)) == list(admissible_x(c))


def test_default_x_is_least_nonzero():
    c = code(M_SMALL)
    assert default_x(c) == next(x for x in admissible_x(c) if any(x))
    assert default_x(code("k 0; 0 k")) == (0, 0)


def test_residue_rows_follow_the_user_matrix():
    assert residue_rows(code(M_SMALL)) == [bits("100001"), bits("010001")]
    # dependent user rows fall back to the RREF basis
    redundant = code("k 0 0 0; k 0 0 0")
    assert residue_rows(redundant) == [(1, 0, 0, 0)]


@pytest.mark.parametrize(
    "m, x, build, expected, params",
    [
        (M_SMALL, "110001", construction_i, G1_SMALL, (8, 3, 3)),
        (M_SMALL, "110001", construction_ii, G2_SMALL, (10, 3, 3)),
        (M_LARGE, "00100111", construction_i, G1_LARGE, (10, 4, 4)),
        (M_LARGE, "00100111", construction_ii, G2_LARGE, (12, 4, 4)),
    ],
)
def test_worked_examples(m, x, build, expected, params):
    d = build(code(m), bits(x))
    assert d.generator_matrix() == mat(expected)
    assert (d.length, d.k1, hull_rank(d)) == params
    assert d.is_free


@pytest.mark.parametrize("build, length", [(construction_i, 6), (construction_ii, 8)])
def test_zero_rank_input(build, length):
    d = build(zero_code(2), (0, 0, 0, 0))
    assert (d.length, d.k1, hull_rank(d)) == (length, 1, 1)
    top = pi_vector(d.generator_matrix()[0])
    half = length // 2
    assert top[0] == top[half] == 1 and sum(top) == (2 if length == 6 else 4)


def test_bad_x_rejected():
    c = code(M_SMALL)
    with pytest.raises(HypothesisError):
        construction_i(c, bits("001000"))
    with pytest.raises(DimensionError):
        construction_i(c, bits("11"))
    with pytest.raises(ValueError):
        construction_i(c, (2, 0, 0, 0, 0, 0))
    with pytest.raises(NotFreeError):
        construction_i(code("z 0"), (0, 0))


def test_constructions_exhaustive_length_4():
    for c in oracle.all_free_codes(2):
        k, l = c.k1, hull_rank(c)
        g0 = BitMatrix.from_lists(residue_rows(c), 4)
        for x in admissible_x(c):
            for build, extra in [(construction_i, 2), (construction_ii, 4)]:
                d = build(c, x)
                assert d.is_free and d.length == 4 + extra
                assert (d.k1, hull_rank(d)) == (k + 1, l + 1)
                g1 = binary(d.generator_matrix())
                m = gram(g1)
                assert m.rows[0] == 0 and all(m.entry(i, 0) == 0 for i in range(m.nrows))
                lower = BitMatrix(tuple(r & ((1 << k) - 1) for r in m.rows[1:]), k)
                assert lower == gram(g0)


def test_parity_i_worked_example():
    c = code(M_SMALL)
    x = bits("110001")
    h = construction_i_parity(c, x, x)
    d = construction_i(c, x)
    assert len(h) == 6 - 2 + 1
    assert from_generator_matrix(h) == oracle.brute_two_sided_dual(d)
    assert parity_generates_dual(d, h)


def test_parity_i_top_row_shapes():
    c = code(M_SMALL)
    x = bits("110001")
    top = pi_vector(construction_i_parity(c, x, (0,) * 6)[0])
    assert top == (1, 0, 0, 0, 1, 0, 0, 0)
    y = next(v for v in admissible_x(c) if sprod_f2(x, v) == 0 and any(v))
    top = pi_vector(construction_i_parity(c, x, y)[0])
    assert top[4] == 1


def test_parity_i_exhaustive_length_4():
    for c in oracle.all_free_codes(2):
        ys = list(admissible_x(c))
        for x in ys:
            d = construction_i(c, x)
            dual = two_sided_dual(d)
            g = binary(d.generator_matrix())
            for y in ys:
                with warnings.catch_warnings():
                    warnings.simplefilter("error", ParityRankWarning)
                    h = construction_i_parity(c, x, y)
                hb = binary(h)
                assert (g @ omega(3) @ hb.transpose()).is_zero()
                assert from_generator_matrix(h) == dual


def test_parity_i_rejects_y_outside_dual():
    c = code(M_SMALL)
    with pytest.raises(HypothesisError):
        construction_i_parity(c, bits("110001"), bits("001000"))


def test_parity_ii_hypotheses():
    c = code(M_SMALL)
    with pytest.raises(HypothesisError, match="z_"):
        construction_ii_parity(c, bits("110001"), bits("110001"))
    x, y = find_parity_pair_ii(c)
    with pytest.raises(HypothesisError, match="nonzero"):
        construction_ii_parity(c, x, (0,) * 6)


def test_parity_ii_structure():
    c = code(M_SMALL)
    x, y = find_parity_pair_ii(c)
    assert sprod_f2(x, y) == 0 and any(y)
    with pytest.warns(ParityRankWarning):
        h = construction_ii_parity(c, x, y)
    assert len(h) == 6 - 2 + 3
    rows = [pi_vector(r) for r in h]
    # rows 1 and 2 are each other's half-swap
    assert rows[0][5:] + rows[0][:5] == rows[1]
    d = construction_ii(c, x)
    assert (binary(d.generator_matrix()) @ omega(5) @ binary(h).transpose()).is_zero()


def test_parity_ii_as_laid_out_is_one_row_short():
    # y lies in (C_res)^⊥S, which the s_j already span, so row 3 is redundant
    c = code(M_SMALL)
    x, y = find_parity_pair_ii(c)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ParityRankWarning)
        h = construction_ii_parity(c, x, y)
    d = construction_ii(c, x)
    spanned = from_generator_matrix(h)
    dual = two_sided_dual(d)
    assert spanned.k1 == dual.k1 - 1
    assert not parity_generates_dual(d, h)


def test_find_parity_pair_ii_absent():
    # full-rank residue: (C_res)^⊥S = {0}, so no nonzero y exists
    with pytest.raises(NoAdmissiblePairError):
        find_parity_pair_ii(code("k 0; 0 k"))


def test_user_matrix_with_redundant_rows():
    c = from_binary(BitMatrix.from_lists([[1, 0, 0, 1]]))
    d = construction_i(c, (0, 0, 0, 0))
    assert d.k1 == 2
