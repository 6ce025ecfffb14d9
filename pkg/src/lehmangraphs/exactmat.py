"""Exact rational dense linear algebra.

Every quantity is a :class:`fractions.Fraction` (aliased as ``Rational``);
there is no floating point anywhere.  Elimination is fraction-free
(Bareiss) on integer rows obtained by clearing denominators, so
intermediate values stay bounded by Hadamard-type determinant bounds.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction

__all__ = [
    "Rational",
    "RationalMatrix",
    "DimensionError",
    "LmxFormatError",
    "matmul",
    "determinant",
    "solve",
    "inverse",
    "hadamard",
    "rank",
    "parse_lmx",
    "format_lmx",
    "read_lmx",
    "write_lmx",
]


class DimensionError(ValueError):
    """Raised when matrix shapes are incompatible with an operation."""


class LmxFormatError(ValueError):
    """Raised for malformed ``.lmx`` text."""


def _to_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted; use int or Fraction")
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(int(x)) if not hasattr(x, "numerator") else Fraction(x)


class RationalMatrix:
    """Immutable dense matrix of exact rationals (row-major)."""

    __slots__ = ("rows", "cols", "_e", "_hash")

    def __init__(self, entries: Iterable[Iterable], cols: Optional[int] = None):
        grid = tuple(tuple(_to_rational(x) for x in row) for row in entries)
        if grid:
            width = len(grid[0])
            if any(len(row) != width for row in grid):
                raise DimensionError("ragged rows")
        else:
            width = cols or 0
        self.rows = len(grid)
        self.cols = width
        self._e = grid
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def ones(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[1] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def coerce(cls, m) -> "RationalMatrix":
        """Accept a RationalMatrix, anything exposing ``.matrix``, or nested rows."""
        if isinstance(m, RationalMatrix):
            return m
        inner = getattr(m, "matrix", None)
        if isinstance(inner, RationalMatrix):
            return inner
        if hasattr(m, "tolist"):
            m = m.tolist()
        return cls(m)

    # -- access -------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._e[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._e)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._e]

    def to_int_rows(self) -> tuple[tuple[int, ...], ...]:
        """Entries as Python ints; raises if any entry is non-integral."""
        out = []
        for r in self._e:
            if any(x.denominator != 1 for x in r):
                raise ValueError("matrix has non-integral entries")
            out.append(tuple(x.numerator for x in r))
        return tuple(out)

    def is_01(self) -> bool:
        return all(x == 0 or x == 1 for r in self._e for x in r)

    def row_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(r, Fraction(0)) for r in self._e)

    def col_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(self.col(j), Fraction(0)) for j in range(self.cols))

    @property
    def T(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self._e), cols=self.rows) if self.rows else RationalMatrix.zeros(self.cols, 0)

    # -- arithmetic ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._e == other._e

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, self._e))
        return self._hash

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return RationalMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)], cols=self.cols
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {self.shape} and {other.shape}")
        return RationalMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)], cols=self.cols
        )

    def scale(self, c) -> "RationalMatrix":
        c = _to_rational(c)
        return RationalMatrix([[c * x for x in r] for r in self._e], cols=self.cols)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        return matmul(self, other)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._e)
        return f"RationalMatrix({self.rows}x{self.cols}: {body})"


Vector = Sequence[Fraction]


def matmul(X: RationalMatrix, Y: RationalMatrix) -> RationalMatrix:
    X, Y = RationalMatrix.coerce(X), RationalMatrix.coerce(Y)
    if X.cols != Y.rows:
        raise DimensionError(f"cannot multiply {X.shape} by {Y.shape}")
    ycols = [Y.col(j) for j in range(Y.cols)]
    return RationalMatrix(
        [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in ycols] for r in X._e],
        cols=Y.cols,
    )


def hadamard(X: RationalMatrix, Y: RationalMatrix) -> RationalMatrix:
    X, Y = RationalMatrix.coerce(X), RationalMatrix.coerce(Y)
    if X.shape != Y.shape:
        raise DimensionError(f"hadamard product needs equal shapes, got {X.shape} and {Y.shape}")
    return RationalMatrix([[a * b for a, b in zip(r, s)] for r, s in zip(X._e, Y._e)], cols=X.cols)


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], list[int]]:
    """Scale each row by the lcm of its denominators; return rows and scale factors."""
    out, scales = [], []
    for r in rows:
        d = 1
        for x in r:
            d = lcm(d, x.denominator)
        out.append([int(x * d) for x in r])
        scales.append(d)
    return out, scales


def _bareiss(m: list[list[int]], ncols: int) -> tuple[list[int], int]:
    """In-place fraction-free forward elimination on the first ``ncols`` columns.

    Returns the pivot columns and the sign of the applied row permutation.
    After the call, ``m[i][p_i]`` for the i-th pivot is the leading minor of
    order i+1 (up to sign), and rows below the last pivot are zero in the
    eliminated block.
    """
    nrows = len(m)
    width = len(m[0]) if m else 0
    prev = 1
    sign = 1
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            sign = -sign
        piv = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            f = row_i[c]
            for j in range(c + 1, width):
                row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots, sign


def determinant(M: RationalMatrix) -> Fraction:
    """Exact determinant via Bareiss elimination."""
    M = RationalMatrix.coerce(M)
    if not M.is_square:
        raise DimensionError(f"determinant needs a square matrix, got {M.shape}")
    n = M.rows
    if n == 0:
        return Fraction(1)
    rows, scales = _integer_rows(M._e)
    pivots, sign = _bareiss(rows, n)
    if len(pivots) < n:
        return Fraction(0)
    denom = 1
    for s in scales:
        denom *= s
    return Fraction(sign * rows[n - 1][n - 1], denom)


def rank(M: RationalMatrix) -> int:
    M = RationalMatrix.coerce(M)
    if M.rows == 0 or M.cols == 0:
        return 0
    rows, _ = _integer_rows(M._e)
    pivots, _ = _bareiss(rows, M.cols)
    return len(pivots)


def _solve_many(M: RationalMatrix, rhs: Sequence[Sequence[Fraction]]) -> Optional[list[list[Fraction]]]:
    """Solve ``M X = R`` for the columns ``rhs``; None when M is singular."""
    n = M.rows
    aug = [list(M._e[i]) + [rhs[c][i] for c in range(len(rhs))] for i in range(n)]
    rows, _ = _integer_rows(aug)
    pivots, _ = _bareiss(rows, n)
    if len(pivots) < n:
        return None
    sols = []
    for c in range(len(rhs)):
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            acc = Fraction(rows[i][n + c])
            row = rows[i]
            for j in range(i + 1, n):
                if row[j]:
                    acc -= row[j] * x[j]
            x[i] = acc / row[i]
        sols.append(x)
    return sols


def solve(M: RationalMatrix, b: Vector) -> Optional[tuple[Fraction, ...]]:
    """Unique solution of ``M x = b``, or None when M is singular."""
    M = RationalMatrix.coerce(M)
    if not M.is_square:
        raise DimensionError(f"solve needs a square matrix, got {M.shape}")
    if len(b) != M.rows:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {M.rows}")
    out = _solve_many(M, [[_to_rational(x) for x in b]])
    return None if out is None else tuple(out[0])


def inverse(M: RationalMatrix) -> Optional[RationalMatrix]:
    M = RationalMatrix.coerce(M)
    if not M.is_square:
        raise DimensionError(f"inverse needs a square matrix, got {M.shape}")
    n = M.rows
    unit = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    cols = _solve_many(M, unit)
    if cols is None:
        return None
    return RationalMatrix([[cols[j][i] for j in range(n)] for i in range(n)], cols=n)


# -- .lmx text format --------------------------------------------------------

def format_lmx(M) -> str:
    """Serialise a matrix: header ``rows cols`` then one line per row.

    0/1 matrices use contiguous digit rows; anything else uses
    space-separated ``p/q`` tokens.
    """
    M = RationalMatrix.coerce(M)
    lines = [f"{M.rows} {M.cols}"]
    if M.is_01():
        lines += ["".join(str(int(x)) for x in r) for r in M._e]
    else:
        lines += [" ".join(f"{x.numerator}/{x.denominator}" for x in r) for r in M._e]
    return "\n".join(lines) + "\n"


def parse_lmx(text: str) -> RationalMatrix:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise LmxFormatError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2 or not all(h.isdigit() for h in head):
        raise LmxFormatError(f"bad header {lines[0]!r}")
    nr, nc = int(head[0]), int(head[1])
    body = lines[1:]
    if len(body) != nr:
        raise LmxFormatError(f"expected {nr} rows, found {len(body)}")
    rows = []
    for ln in body:
        toks = ln.split()
        if len(toks) == 1 and len(ln) == nc and set(ln) <= {"0", "1"}:
            rows.append([int(ch) for ch in ln])
        elif len(toks) == nc:
            try:
                rows.append([Fraction(t) for t in toks])
            except (ValueError, ZeroDivisionError) as exc:
                raise LmxFormatError(f"bad entry in row {ln!r}") from exc
        else:
            raise LmxFormatError(f"row {ln!r} does not have {nc} entries")
    return RationalMatrix(rows, cols=nc)


def read_lmx(path: Union[str, Path]) -> RationalMatrix:
    return parse_lmx(Path(path).read_text())


def write_lmx(path: Union[str, Path], M) -> None:
    Path(path).write_text(format_lmx(M))
