import pytest

from ehull.errors import MatrixFormatError
from ehull.ring import KAPPA, TAU, ZERO, ZETA
from ehull.textio import format_matrix, parse_matrix, read_matrix


def test_parse_and_format_roundtrip():
    text = "k 0 t z\n0 k 0 0"
    m = parse_matrix(text)
    assert m[0] == (KAPPA, ZERO, TAU, ZETA)
    assert format_matrix(m) == text


def test_comments_and_blank_lines_are_skipped():
    m = parse_matrix("# a comment\n\nk 0\n\n")
    assert m == ((KAPPA, ZERO),)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("k 0\nk x", "line 2"),
        ("k 0 0 0\nk 0", "ragged"),
        ("k 0 0", "odd"),
        ("# nothing\n", "no rows"),
    ],
)
def test_malformed_input(text, fragment):
    with pytest.raises(MatrixFormatError, match=fragment):
        parse_matrix(text)


def test_read_matrix(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("k k\n")
    assert read_matrix(path) == ((KAPPA, KAPPA),)
