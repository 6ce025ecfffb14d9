import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lehmangraphs.exactmat import (DimensionError, LmxFormatError, RationalMatrix, determinant, format_lmx,
                                   hadamard, inverse, matmul, parse_lmx, rank, solve)
from lehmangraphs.figures import fano_matrix

# the partner of the Fano incidence matrix is the matrix itself
FANO_B = ["1101000", "0110100", "0011010", "0001101", "1000110", "0100011", "1010001"]


def fano_B():
    return RationalMatrix([[int(c) for c in r] for r in FANO_B])


def cofactor_det(rows):
    """Laplace expansion along the first row; the reference determinant."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * Fraction(rows[0][j]) * cofactor_det(minor)
    return total


small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def square(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    return [[draw(small_ints) for _ in range(n)] for _ in range(n)]


@given(square())
@settings(max_examples=150, deadline=None)
def test_determinant_matches_cofactor_expansion(rows):
    assert determinant(RationalMatrix(rows)) == cofactor_det(rows)


@given(square(5))
@settings(max_examples=100, deadline=None)
def test_inverse_and_solve_are_exact(rows):
    M = RationalMatrix(rows)
    inv = inverse(M)
    if determinant(M) == 0:
        assert inv is None
        assert rank(M) < M.rows
        return
    n = M.rows
    assert inv @ M == RationalMatrix.identity(n)
    assert M @ inv == RationalMatrix.identity(n)
    b = [Fraction(i + 1, 3) for i in range(n)]
    x = solve(M, b)
    assert [sum(M[i, j] * x[j] for j in range(n)) for i in range(n)] == b


def test_fractions_reduce():
    M = RationalMatrix([[Fraction(2, 4), Fraction(-3, -6)]])
    assert M[0, 0] == Fraction(1, 2) and M[0, 0].denominator == 2
    with pytest.raises(TypeError):
        RationalMatrix([[0.5]])


def test_matmul_examples():
    M = RationalMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert matmul(RationalMatrix.identity(3), M) == M
    assert (RationalMatrix([[1, 1, 0]]) @ RationalMatrix([[1], [0], [1]])).tolist() == [[1]]
    A = fano_matrix().matrix
    JkI = RationalMatrix([[1 + 2 * (i == j) for j in range(7)] for i in range(7)])
    assert A @ fano_B().T == JkI
    with pytest.raises(DimensionError):
        matmul(RationalMatrix.identity(2), RationalMatrix.identity(3))


def test_determinant_examples():
    assert determinant(RationalMatrix.identity(5)) == 1
    assert abs(determinant(fano_matrix().matrix)) == 24
    assert cofactor_det(fano_matrix().matrix.tolist()) ** 2 == 2 ** 6 * 9
    assert determinant(RationalMatrix([[1, 2, 3], [1, 2, 3], [0, 1, 1]])) == 0
    with pytest.raises(DimensionError):
        determinant(RationalMatrix([[1, 2]]))


def test_solve_examples():
    A = fano_matrix().matrix
    b = [1 + 2 * (i == 0) for i in range(7)]
    assert list(solve(A, b)) == list(fano_B().row(0))
    assert solve(RationalMatrix.identity(3), [1, 2, 3]) == (1, 2, 3)
    assert solve(RationalMatrix.ones(3, 3), [1, 1, 1]) is None
    with pytest.raises(DimensionError):
        solve(RationalMatrix.identity(3), [1, 2])


def test_inverse_examples():
    assert inverse(RationalMatrix.identity(4)) == RationalMatrix.identity(4)
    assert inverse(RationalMatrix.identity(3).scale(2)) == RationalMatrix.identity(3).scale(Fraction(1, 2))
    twins = RationalMatrix([[1, 1, 0], [1, 1, 0], [0, 1, 1]])
    assert inverse(twins) is None
    with pytest.raises(DimensionError):
        inverse(RationalMatrix([[1, 2, 3]]))


def test_hadamard_examples():
    X = RationalMatrix([[1, 2], [3, 4]])
    assert hadamard(X, RationalMatrix.ones(2, 2)) == X
    assert hadamard(X, RationalMatrix.zeros(2, 2)) == RationalMatrix.zeros(2, 2)
    H = hadamard(fano_matrix().matrix, fano_B())
    assert H.is_01() and set(H.row_sums()) == {3} and set(H.col_sums()) == {3}
    with pytest.raises(DimensionError):
        hadamard(X, RationalMatrix.identity(3))


def test_rank():
    assert rank(RationalMatrix([[1, 2], [2, 4]])) == 1
    assert rank(fano_matrix().matrix) == 7
    assert rank(RationalMatrix([[1, 0, 1], [0, 1, 1]])) == 2


@given(st.integers(1, 5), st.integers(1, 5), st.data())
@settings(max_examples=60, deadline=None)
def test_lmx_roundtrip(r, c, data):
    zero_one = data.draw(st.booleans())
    ent = st.integers(0, 1) if zero_one else st.fractions(min_value=-5, max_value=5, max_denominator=7)
    M = RationalMatrix([[data.draw(ent) for _ in range(c)] for _ in range(r)])
    text = format_lmx(M)
    assert parse_lmx(text) == M
    assert format_lmx(parse_lmx(text)) == text


def test_lmx_formats():
    assert format_lmx(RationalMatrix([[1, 0], [0, 1]])) == "2 2\n10\n01\n"
    assert format_lmx(RationalMatrix([[Fraction(1, 2), 3]])) == "1 2\n1/2 3/1\n"
    for bad in ["", "2 2\n10\n", "x 2\n10\n01\n", "2 2\n10\n0a\n", "1 2\n1/0 1\n"]:
        with pytest.raises(LmxFormatError):
            parse_lmx(bad)


def test_all_small_01_determinants():
    # every 3x3 0/1 matrix against the cofactor oracle
    for bits in itertools.product((0, 1), repeat=9):
        rows = [list(bits[i:i + 3]) for i in (0, 3, 6)]
        assert determinant(RationalMatrix(rows)) == cofactor_det(rows)
