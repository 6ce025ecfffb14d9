"""Covering polyhedra ``Q(A) = {x : Ax >= 1, x >= 0}`` and exact vertex enumeration.

Vertices come from the double description method run on the homogenised
cone ``{(t, x) : Ax - t*1 >= 0, x >= 0, t >= 0}``.  Everything is integer
arithmetic; extreme rays are scaled to primitive integer vectors.  Rays with
``t > 0`` give vertices, those with ``t = 0`` recession directions.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .clutters import Clutter, ClutterTooLarge, is_degenerate_plane
from .exactmat import RationalMatrix, solve
from .lehman import lehman_types

log = logging.getLogger(__name__)

__all__ = [
    "HPolyhedron",
    "VRep",
    "covering_polyhedron",
    "enumerate_vertices",
    "enumerate_vertices_bruteforce",
    "fractional_vertices",
    "mni_test_square",
    "NotAClutterError",
    "is_ideal",
    "is_mni_exact",
    "MNI_CAP",
]

MNI_CAP = 14


class NotAClutterError(ValueError):
    pass


@dataclass(frozen=True)
class HPolyhedron:
    """Inequalities ``coeffs . x >= bound`` in ``dimension`` variables."""

    inequalities: tuple
    dimension: int

    def contains(self, x: Sequence) -> bool:
        return all(sum(c * v for c, v in zip(a, x)) >= b for a, b in self.inequalities)

    def tight(self, x: Sequence) -> list[int]:
        return [i for i, (a, b) in enumerate(self.inequalities) if sum(c * v for c, v in zip(a, x)) == b]


@dataclass(frozen=True)
class VRep:
    vertices: tuple  # tuples of Fractions, sorted
    rays: tuple  # primitive integer tuples, sorted

    def to_json_obj(self) -> dict:
        fmt = lambda q: f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)  # noqa: E731
        return {
            "vertices": [[fmt(Fraction(v)) for v in p] for p in self.vertices],
            "rays": [[str(v) for v in r] for r in self.rays],
        }


def _rows(A) -> list[tuple]:
    if hasattr(A, "tolist"):
        A = A.tolist()
    return [tuple(int(v) for v in r) for r in A]


def check_clutter_matrix(rows: Sequence[Sequence[int]]) -> None:
    supports = []
    for r in rows:
        if any(v not in (0, 1) for v in r):
            raise NotAClutterError("entries must be 0 or 1")
        supports.append(frozenset(j for j, v in enumerate(r) if v))
    for i, j in itertools.permutations(range(len(supports)), 2):
        if supports[i] <= supports[j]:
            raise NotAClutterError(f"row {j} contains row {i}")


def covering_polyhedron(A, check: bool = True) -> HPolyhedron:
    """``m`` cover rows followed by the ``n`` bounds ``x_j >= 0``."""
    rows = _rows(A)
    if not rows:
        raise NotAClutterError("empty matrix")
    n = len(rows[0])
    if check:
        check_clutter_matrix(rows)
    ineq = [(r, 1) for r in rows]
    ineq += [(tuple(int(i == j) for i in range(n)), 0) for j in range(n)]
    return HPolyhedron(tuple(ineq), n)


def _primitive(v: list[int]) -> tuple:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        v = [x // g for x in v]
    return tuple(v)


def enumerate_vertices(H: HPolyhedron) -> VRep:
    """Exact vertices and extreme rays of ``H``.

    ``H`` must contain every bound ``x_j >= 0`` (so the polyhedron is
    pointed).  Other inequalities may be arbitrary rational.
    """
    d = H.dimension
    if d == 0:
        raise ValueError("dimension must be positive")
    cons = []  # homogenised, integer: (t, x) -> sum >= 0
    bounds = set()
    for a, b in H.inequalities:
        fr = [Fraction(v) for v in a] + [Fraction(b)]
        den = 1
        for q in fr:
            den = den * q.denominator // gcd(den, q.denominator)
        ints = [int(q * den) for q in fr]
        row = [-ints[-1]] + ints[:-1]
        if ints[-1] == 0 and sum(1 for v in ints[:-1] if v) == 1 and max(ints[:-1]) > 0:
            bounds.add(next(j for j, v in enumerate(ints[:-1]) if v))
        cons.append(row)
    if len(bounds) != d:
        raise ValueError("enumerate_vertices needs every bound x_j >= 0")
    D = d + 1
    # start: t >= 0 and x >= 0; rays are the unit vectors, zero sets index these D seed constraints
    seed = [[int(i == j) for i in range(D)] for j in range(D)]
    allc = seed + cons
    rays = [tuple(int(i == j) for i in range(D)) for j in range(D)]
    zeros = [((1 << D) - 1) & ~(1 << j) for j in range(D)]
    for ci in range(D, len(allc)):
        h = allc[ci]
        vals = [sum(a * b for a, b in zip(h, r)) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        if not neg:
            zeros = [z | (1 << ci) if vals[i] == 0 else z for i, z in enumerate(zeros)]
            continue
        new_rays = [rays[i] for i in pos] + [rays[i] for i in zer]
        new_zeros = [zeros[i] for i in pos] + [zeros[i] | (1 << ci) for i in zer]
        for p in pos:
            zp = zeros[p]
            for q in neg:
                common = zp & zeros[q]
                if common.bit_count() < D - 2:
                    continue
                # combinatorial adjacency: no third ray is tight on all of ``common``
                adjacent = True
                for t, zt in enumerate(zeros):
                    if t != p and t != q and zt & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                vp, vq = vals[p], vals[q]
                comb = [vp * b - vq * a for a, b in zip(rays[p], rays[q])]
                new_rays.append(_primitive(comb))
                new_zeros.append(common | (1 << ci))
        rays, zeros = new_rays, new_zeros
        if not rays:
            break
    verts = set()
    dirs = set()
    for r in rays:
        if r[0] > 0:
            verts.add(tuple(Fraction(x, r[0]) for x in r[1:]))
        elif any(r[1:]):
            dirs.add(r[1:])
    return VRep(tuple(sorted(verts)), tuple(sorted(dirs)))


def enumerate_vertices_bruteforce(H: HPolyhedron) -> list[tuple]:
    """Reference: solve every ``d``-subset of constraints as equalities."""
    d = H.dimension
    out = set()
    for idx in itertools.combinations(range(len(H.inequalities)), d):
        M = RationalMatrix([H.inequalities[i][0] for i in idx], cols=d)
        x = solve(M, [H.inequalities[i][1] for i in idx])
        if x is not None and H.contains(x):
            out.add(tuple(x))
    return sorted(out)


def fractional_vertices(V: VRep) -> list[tuple]:
    return [p for p in V.vertices if any(Fraction(v).denominator != 1 for v in p)]


def mni_test_square(A, cert=None) -> bool:
    """Operational mni test for a square matrix: the only fractional vertex is ``A^{-1} 1``.

    For a Lehman matrix of degree ``r`` that point is ``(1/r) 1``.  Besides
    certified Lehman matrices, degenerate projective planes are accepted.
    """
    rows = _rows(A)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("mni_test_square needs a square matrix")
    if cert is None and not lehman_types(rows):
        if is_degenerate_plane(Clutter.from_matrix(rows)) is None:
            raise ValueError("matrix is neither a certified Lehman matrix nor a degenerate plane")
    target = solve(RationalMatrix(rows, cols=n), [1] * n)
    if target is None:
        return False
    fr = fractional_vertices(enumerate_vertices(covering_polyhedron(rows)))
    return fr == [tuple(target)]


def is_ideal(C: Clutter) -> bool:
    """Every vertex of ``Q(matrix(C))`` is integral.  An empty polyhedron counts as ideal."""
    if frozenset() in C.edges or not C.edges or not C.ground:
        return True
    return not fractional_vertices(enumerate_vertices(covering_polyhedron(C.matrix())))


def is_mni_exact(C: Clutter, cap: int = MNI_CAP) -> bool:
    """Not ideal, while every single deletion and contraction is ideal."""
    if len(C.ground) > cap:
        raise ClutterTooLarge(f"ground set of {len(C.ground)} exceeds the cap {cap}")
    if is_ideal(C):
        return False
    # single-vertex minors suffice: idealness is closed under taking minors
    return all(is_ideal(C.delete(v)) and is_ideal(C.contract(v)) for v in C.ground)
