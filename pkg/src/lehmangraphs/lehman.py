"""Lehman pairs: verification, partners, mates, auxiliary graph and rungs."""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactmat import RationalMatrix, inverse, solve
from .graph import BipartiteGraph, InputError, as_01_rows

log = logging.getLogger(__name__)

__all__ = [
    "LehmanType",
    "LehmanCertificate",
    "AuxiliaryDecomposition",
    "MateStatus",
    "NotLehmanError",
    "is_lehman_pair",
    "partner",
    "lehman_types",
    "mate",
    "mate_status",
    "certify",
    "auxiliary",
    "rungs",
]


class NotLehmanError(ValueError):
    """Raised when an operation needs a Lehman pair and did not get one."""


@dataclass(frozen=True, order=True)
class LehmanType:
    n: int
    r: int
    s: int
    k: int

    def __post_init__(self):
        if self.k == 0 or self.k < -1:
            raise ValueError(f"k must be -1 or positive, got {self.k}")
        if self.r * self.s != self.n + self.k:
            raise ValueError(f"r*s = {self.r * self.s} but n+k = {self.n + self.k}")

    @property
    def sign(self) -> int:
        return -1 if self.k < 0 else 1

    def __str__(self) -> str:
        return f"({self.n},{self.r},{self.s}) k={self.k}"


class MateStatus(enum.Enum):
    OK = "ok"
    SINGULAR = "singular"  # A x = 1 + k e_b has no unique solution
    NOT_01 = "not-01"  # unique solution exists but is not a 0/1 vector


def _valid_k(k: int) -> bool:
    return k == -1 or k >= 1


def _check_k(k: int) -> None:
    if not _valid_k(k):
        raise ValueError(f"k must be -1 or a positive integer, got {k}")


def is_lehman_pair(A, B) -> Optional[int]:
    """Return k when ``A B^T = J + kI`` with k in {-1, 1, 2, ...}, else None."""
    a, b = as_01_rows(A), as_01_rows(B)
    n = len(a)
    if len(b) != n:
        raise InputError("A and B must have the same order")
    if n == 0:
        return None
    k = None
    for i in range(n):
        ai = a[i]
        for j in range(n):
            dot = sum(x & y for x, y in zip(ai, b[j]))
            if i == j:
                want = dot - 1
                if k is None:
                    k = want
                elif k != want:
                    return None
            elif dot != 1:
                return None
    return k if k is not None and _valid_k(k) else None


def _partner_rows(a: tuple[tuple[int, ...], ...], k: int, Ainv=None):
    """Rows of ``(A^{-1}(J+kI))^T`` as Fractions, computed column by column."""
    n = len(a)
    if Ainv is None:
        Ainv = inverse(RationalMatrix(a, cols=n))
        if Ainv is None:
            return None
    one = [sum(Ainv.row(i), Fraction(0)) for i in range(n)]  # A^{-1} 1
    for b in range(n):
        yield [one[i] + k * Ainv[i, b] for i in range(n)]


def partner(A, k: int) -> Optional[RationalMatrix]:
    """The only candidate B with ``A B^T = J + kI``; None unless it is 0/1."""
    _check_k(k)
    a = as_01_rows(A)
    n = len(a)
    Ainv = inverse(RationalMatrix(a, cols=n))
    if Ainv is None:
        return None
    rows = []
    for row in _partner_rows(a, k, Ainv):
        if any(x != 0 and x != 1 for x in row):
            return None
        rows.append([int(x) for x in row])
    return RationalMatrix(rows, cols=n)


def lehman_types(A) -> list[LehmanType]:
    """Every Lehman type the matrix admits (a matrix can sit in two pairs)."""
    a = as_01_rows(A)
    n = len(a)
    g = BipartiteGraph(a)
    r = g.degree()
    if r is None or r == 0:
        log.info("lehman_types: matrix is not regular; no Lehman types")
        return []
    Ainv = inverse(RationalMatrix(a, cols=n))
    if Ainv is None:
        return []
    out = []
    for k in [-1] + list(range(1, n * (r - 1) + 1)):
        if (n + k) % r:
            continue
        rows = list(_partner_rows(a, k, Ainv))
        if all(x == 0 or x == 1 for row in rows for x in row):
            s = int(sum(rows[0]))
            out.append(LehmanType(n, r, s, k))
    return out


def mate_status(G, b: int, k: int) -> tuple[MateStatus, Optional[frozenset]]:
    """Solve ``A x = 1 + k e_b`` exactly and classify the outcome."""
    a = as_01_rows(G)
    n = len(a)
    rhs = [1 + (k if i == b else 0) for i in range(n)]
    x = solve(RationalMatrix(a, cols=n), rhs)
    if x is None:
        return MateStatus.SINGULAR, None
    if any(v != 0 and v != 1 for v in x):
        return MateStatus.NOT_01, None
    return MateStatus.OK, frozenset(w for w in range(n) if x[w] == 1)


def mate(G, b: int, k: int) -> Optional[frozenset]:
    """White-vertex set dominating ``b`` k+1 times and every other black once."""
    return mate_status(G, b, k)[1]


@dataclass(frozen=True)
class LehmanCertificate:
    graph: BipartiteGraph
    partner: BipartiteGraph  # rows = mates of the black vertices
    params: LehmanType

    @property
    def mates(self) -> tuple[frozenset, ...]:
        B = self.partner
        return tuple(frozenset(B.black_neighbours(b)) for b in range(B.n))

    @property
    def comates(self) -> tuple[frozenset, ...]:
        B = self.partner
        return tuple(frozenset(B.white_neighbours(w)) for w in range(B.n))

    @property
    def k(self) -> int:
        return self.params.k

    def check(self) -> None:
        """Re-verify every defining identity by direct counting.

        Raises AssertionError on the first failure.  This path never touches
        the linear solver, so it independently confirms a certificate.
        """
        A, B = self.graph.adj, self.partner.adj
        n, k = len(A), self.params.k
        for i in range(n):
            for j in range(n):
                want = 1 + (k if i == j else 0)
                # A B^T, B^T A and A^T B entries
                assert sum(A[i][t] * B[j][t] for t in range(n)) == want, ("AB^T", i, j)
                assert sum(B[t][i] * A[t][j] for t in range(n)) == want, ("B^TA", i, j)
                assert sum(A[t][i] * B[t][j] for t in range(n)) == want, ("A^TB", i, j)
        assert self.params.r * self.params.s == n + k
        for b, M in enumerate(self.mates):
            assert len(M) == self.params.s
            for b2 in range(n):
                hits = sum(1 for w in self.graph.black_neighbours(b2) if w in M)
                assert hits == (k + 1 if b2 == b else 1), ("mate", b, b2)
        comates = self.comates
        for b, M in enumerate(self.mates):
            for w in range(n):
                assert (w in M) == (b in comates[w]), ("symmetry", b, w)


def certify(A, k: int) -> Optional[LehmanCertificate]:
    """Full certificate for ``A`` at the given k, or None.

    Fails fast on the first black vertex whose mate is missing or not 0/1.
    """
    _check_k(k)
    a = as_01_rows(A)
    n = len(a)
    if n == 0:
        return None
    g = BipartiteGraph(a)
    r = g.degree()
    if r is None or (n + k) % r:
        return None
    Ainv = inverse(RationalMatrix(a, cols=n))
    if Ainv is None:
        return None
    rows = []
    for b, row in enumerate(_partner_rows(a, k, Ainv)):
        if any(x != 0 and x != 1 for x in row):
            log.debug("certify: black vertex %d has no 0/1 mate", b)
            return None
        rows.append(tuple(int(x) for x in row))
    B = BipartiteGraph(tuple(rows))
    s = (n + k) // r
    if any(sum(row) != s for row in rows) or not B.is_regular(s):
        return None
    # combinatorial re-validation of the solver output
    for b in range(n):
        M = set(B.black_neighbours(b))
        for b2 in range(n):
            hits = sum(1 for w in g.black_neighbours(b2) if w in M)
            if hits != (k + 1 if b2 == b else 1):
                return None
    return LehmanCertificate(graph=g, partner=B, params=LehmanType(n, r, s, k))


@dataclass(frozen=True)
class AuxiliaryDecomposition:
    aux_edges: frozenset  # (black, white) pairs in the support of A∘B
    rungs: Optional[frozenset]  # A minus aux; only for cubic k=1


def auxiliary(A, B) -> AuxiliaryDecomposition:
    k = is_lehman_pair(A, B)
    if k is None:
        raise NotLehmanError("auxiliary graph needs a Lehman pair")
    a, bb = as_01_rows(A), as_01_rows(B)
    n = len(a)
    aux = frozenset((i, j) for i in range(n) for j in range(n) if a[i][j] and bb[i][j])
    r = sum(a[0])
    rung_set = None
    if r == 3 and k == 1:
        rung_set = frozenset((i, j) for i in range(n) for j in range(n) if a[i][j] and not bb[i][j])
    return AuxiliaryDecomposition(aux_edges=aux, rungs=rung_set)


def rungs(cert: LehmanCertificate) -> frozenset:
    """Perfect matching of rungs of a cubic k=1 certificate."""
    if cert.params.r != 3 or cert.params.k != 1:
        raise NotLehmanError("rungs are defined only for cubic Lehman graphs with k=1")
    return auxiliary(cert.graph, cert.partner).rungs
