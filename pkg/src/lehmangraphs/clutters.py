"""Clutters, their minors and blockers, and small projective planes.

A clutter is a ground set together with an antichain of subsets.  The two
planes of order 2 and 3 are built from cyclic difference sets; triangles,
their corner sets and blocking sets are computed exhaustively.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

import networkx as nx

__all__ = [
    "Clutter",
    "ClutterError",
    "ClutterTooLarge",
    "minimal_sets",
    "core",
    "build_J",
    "is_degenerate_plane",
    "ProjectivePlane",
    "build_plane",
    "Triangle",
    "triangles",
    "zero_corner",
    "blocking_sets",
    "corner_classify",
    "augmented_ternary",
    "fano_minor_configuration",
    "verify_fano_minor_in_augmented_ternary",
    "find_minor",
]

BLOCKER_CAP = 15


class ClutterError(ValueError):
    pass


class ClutterTooLarge(ClutterError):
    pass


def minimal_sets(sets: Iterable[Iterable]) -> frozenset:
    """Inclusion-minimal members of ``sets`` (duplicates collapse)."""
    uniq = sorted({frozenset(s) for s in sets}, key=len)
    out: list = []
    for s in uniq:
        if not any(t <= s for t in out):
            out.append(s)
    return frozenset(out)


class Clutter:
    __slots__ = ("ground", "edges")

    def __init__(self, ground: Iterable, edges: Iterable[Iterable], check: bool = True):
        self.ground = tuple(sorted(set(ground)))
        self.edges = frozenset(frozenset(e) for e in edges)
        if check:
            gs = set(self.ground)
            for e in self.edges:
                if not e <= gs:
                    raise ClutterError(f"edge {sorted(e)} leaves the ground set")
            for e, f in itertools.permutations(self.edges, 2):
                if e <= f:
                    raise ClutterError(f"edge {sorted(f)} contains edge {sorted(e)}")

    # construction and export
    @classmethod
    def from_matrix(cls, rows) -> "Clutter":
        if hasattr(rows, "tolist"):
            rows = rows.tolist()
        rows = [list(r) for r in rows]
        n = len(rows[0]) if rows else 0
        return cls(range(n), [[j for j, v in enumerate(r) if v] for r in rows])

    def sorted_edges(self) -> list[tuple]:
        return sorted((tuple(sorted(e)) for e in self.edges), key=lambda e: (len(e), e))

    def matrix(self) -> list[tuple]:
        col = {v: j for j, v in enumerate(self.ground)}
        out = []
        for e in self.sorted_edges():
            row = [0] * len(self.ground)
            for v in e:
                row[col[v]] = 1
            out.append(tuple(row))
        return out

    def to_text(self) -> str:
        idx = {v: i for i, v in enumerate(self.ground)}
        lines = [f"{len(self.ground)} {len(self.edges)}"]
        lines += [" ".join(str(idx[v]) for v in e) for e in self.sorted_edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Clutter":
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise ClutterError("empty clutter file")
        try:
            nv, ne = (int(x) for x in lines[0].split())
            edges = [[int(x) for x in ln.split()] for ln in lines[1:]]
        except ValueError as exc:
            raise ClutterError(f"malformed clutter file: {exc}") from None
        if len(edges) != ne:
            raise ClutterError(f"header promises {ne} edges, found {len(edges)}")
        return cls(range(nv), edges)

    # algebra
    def _need(self, v) -> None:
        if v not in self.ground:
            raise ClutterError(f"{v!r} is not in the ground set")

    def delete(self, v) -> "Clutter":
        self._need(v)
        return Clutter((u for u in self.ground if u != v), (e for e in self.edges if v not in e), check=False)

    def contract(self, v) -> "Clutter":
        self._need(v)
        return Clutter((u for u in self.ground if u != v), minimal_sets(e - {v} for e in self.edges), check=False)

    def minor(self, delete: Iterable = (), contract: Iterable = ()) -> "Clutter":
        """Delete then contract.  The two sets must be disjoint."""
        d, c = set(delete), set(contract)
        if d & c:
            raise ClutterError("a vertex cannot be both deleted and contracted")
        for v in d | c:
            self._need(v)
        kept = [e for e in self.edges if not e & d]
        ground = [u for u in self.ground if u not in d and u not in c]
        return Clutter(ground, minimal_sets(e - c for e in kept), check=False)

    def blocker(self, cap: int = BLOCKER_CAP) -> "Clutter":
        """Minimal transversals, built edge by edge (Berge's method)."""
        if len(self.ground) > cap:
            raise ClutterTooLarge(f"ground set of {len(self.ground)} exceeds the cap {cap}")
        trans = {frozenset()}
        for e in sorted(self.edges, key=lambda e: (len(e), sorted(e))):
            nxt = set()
            for t in trans:
                if t & e:
                    nxt.add(t)
                else:
                    nxt.update(t | {v} for v in e)
            trans = set(minimal_sets(nxt))
        return Clutter(self.ground, trans, check=False)

    def is_transversal(self, s: Iterable) -> bool:
        s = set(s)
        return all(e & s for e in self.edges)

    # isomorphism
    def _incidence(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from((("v", v) for v in self.ground), kind="v")
        for e in self.edges:
            node = ("e", tuple(sorted(e)))
            g.add_node(node, kind="e")
            g.add_edges_from((node, ("v", v)) for v in e)
        return g

    def isomorphic(self, other: "Clutter") -> bool:
        if (len(self.ground), len(self.edges)) != (len(other.ground), len(other.edges)):
            return False
        if sorted(map(len, self.edges)) != sorted(map(len, other.edges)):
            return False
        return nx.is_isomorphic(self._incidence(), other._incidence(),
                                node_match=lambda a, b: a["kind"] == b["kind"])

    def __eq__(self, other) -> bool:
        return isinstance(other, Clutter) and self.ground == other.ground and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.ground, self.edges))

    def __repr__(self) -> str:
        return f"Clutter(ground={list(self.ground)}, edges={self.sorted_edges()})"


def core(A) -> list[tuple]:
    """Rows of minimum weight, in input order."""
    rows = [tuple(r) for r in (A.tolist() if hasattr(A, "tolist") else A)]
    if not rows:
        return []
    w = min(sum(r) for r in rows)
    return [r for r in rows if sum(r) == w]


def build_J(t: int) -> Clutter:
    if t < 2:
        raise ClutterError("J_t needs t >= 2")
    return Clutter(range(t + 1), [range(1, t + 1)] + [(0, i) for i in range(1, t + 1)])


def is_degenerate_plane(C: Clutter) -> Optional[int]:
    """Return ``t`` if ``C`` is isomorphic to ``J_t``, else None."""
    t = len(C.ground) - 1
    if t < 2 or len(C.edges) != t + 1:
        return None
    big = [e for e in C.edges if len(e) == t]
    pairs = [e for e in C.edges if len(e) == 2]
    if t == 2:
        # J_2 is the triangle: any three 2-subsets of a 3-set
        return 2 if len(pairs) == 3 else None
    if len(big) != 1 or len(pairs) != t:
        return None
    apex = set(C.ground) - big[0]
    if len(apex) != 1:
        return None
    (a,) = apex
    if not all(a in e for e in pairs):
        return None
    if set().union(*pairs) - {a} != big[0]:
        return None
    return t


@dataclass(frozen=True)
class ProjectivePlane:
    q: int
    points: tuple
    lines: Clutter

    def line_list(self) -> list[frozenset]:
        return sorted(self.lines.edges, key=lambda e: sorted(e))

    def line_through(self, a, b) -> frozenset:
        for L in self.lines.edges:
            if a in L and b in L:
                return L
        raise ClutterError(f"no line through {a} and {b}")

    def validate(self) -> None:
        q, pts, lines = self.q, self.points, self.line_list()
        v = q * q + q + 1
        if len(pts) != v or len(lines) != v:
            raise ClutterError("wrong number of points or lines")
        if any(len(L) != q + 1 for L in lines):
            raise ClutterError("line of the wrong size")
        for L, M in itertools.combinations(lines, 2):
            if len(L & M) != 1:
                raise ClutterError("two lines do not meet in exactly one point")
        for a, b in itertools.combinations(pts, 2):
            if sum(1 for L in lines if a in L and b in L) != 1:
                raise ClutterError("two points not on exactly one line")


_DIFFERENCE_SETS = {2: (1, 2, 4), 3: (0, 1, 3, 9)}


def build_plane(q: int) -> ProjectivePlane:
    if q not in _DIFFERENCE_SETS:
        raise ClutterError(f"only orders {sorted(_DIFFERENCE_SETS)} are supported")
    v = q * q + q + 1
    D = _DIFFERENCE_SETS[q]
    lines = [frozenset((d + i) % v for d in D) for i in range(v)]
    P = ProjectivePlane(q, tuple(range(v)), Clutter(range(v), lines))
    P.validate()
    return P


@dataclass(frozen=True)
class Triangle:
    lines: tuple  # (L_x, L_y, L_z)
    corners: tuple  # (x, y, z) with x = L_y & L_z etc.
    sides: tuple  # (X, Y, Z) = lines minus corners

    @property
    def points(self) -> frozenset:
        return self.lines[0] | self.lines[1] | self.lines[2]


def _triangle(Lx: frozenset, Ly: frozenset, Lz: frozenset) -> Triangle:
    (x,) = Ly & Lz
    (y,) = Lx & Lz
    (z,) = Lx & Ly
    return Triangle((Lx, Ly, Lz), (x, y, z), (Lx - {y, z}, Ly - {x, z}, Lz - {x, y}))


def triangles(P: ProjectivePlane) -> list[Triangle]:
    out = []
    for a, b, c in itertools.combinations(P.line_list(), 3):
        if not a & b & c:
            out.append(_triangle(a, b, c))
    return out


def zero_corner(T: Triangle) -> frozenset:
    X, Y, Z = T.sides
    return X | Y | Z


def blocking_sets(P: ProjectivePlane) -> list[frozenset]:
    """Minimal transversals of the lines that are not themselves lines."""
    if P.q > 3:
        raise ClutterTooLarge("blocking sets are enumerated only for orders up to 3")
    lines = P.lines.edges
    return sorted((t for t in P.lines.blocker().edges if t not in lines), key=lambda s: sorted(s))


def corner_classify(T: Triangle, R: Iterable) -> tuple:
    """Classify ``R`` against the corner patterns of ``T``.

    Returns one of ``("line", i)``, ``("0-corner",)``, ``("1-corner", base)``,
    ``("3-corner",)`` or ``("invalid",)``.
    """
    R = frozenset(R)
    if not R <= T.points:
        raise ClutterError("R is not contained in the triangle")
    for i, L in enumerate(T.lines):
        if R == L:
            return ("line", i)
    X, Y, Z = T.sides
    x, y, z = T.corners
    if R == X | Y | Z:
        return ("0-corner",)
    sides = (X, Y, Z)
    corners = (x, y, z)
    inside = [c in R for c in corners]
    if sum(inside) == 1:
        i = inside.index(True)
        others = [sides[j] for j in range(3) if j != i]
        own = R & sides[i]
        if own and all(S <= R for S in others) and R == {corners[i]} | others[0] | others[1] | own:
            return ("1-corner", corners[i])
    if all(inside) and all((R & S) < S for S in sides):
        return ("3-corner",)
    return ("invalid",)


def augmented_ternary() -> tuple[ProjectivePlane, Clutter]:
    """PG(2,3) with every triangle 0-corner added as an extra edge."""
    P = build_plane(3)
    extra = {zero_corner(T) for T in triangles(P)}
    return P, Clutter(P.points, set(P.lines.edges) | extra)


def fano_minor_configuration(P: ProjectivePlane, x=None, triple=None, fourth=None, picks=None) -> dict:
    """Three lines through ``x``, a fourth line avoiding ``x`` and one extra point on each.

    With no arguments the first choices in sorted order are taken.  Returns
    the kept points and the points to delete and to contract.
    """
    x = P.points[0] if x is None else x
    through = [L for L in P.line_list() if x in L]
    L123 = list(triple) if triple is not None else through[:3]
    L4 = fourth if fourth is not None else next(L for L in P.line_list() if x not in L)
    if len(L123) != 3 or any(x not in L for L in L123) or x in L4:
        raise ClutterError("need three lines through x and a fourth line avoiding x")
    ys = [next(iter(L & L4)) for L in L123]
    if picks is None:
        picks = [min(L - {x, y}) for L, y in zip(L123, ys)]
    for L, y, a in zip(L123, ys, picks):
        if a not in L or a in (x, y):
            raise ClutterError("each pick must lie on its line away from x and the meeting point")
    union = frozenset().union(*L123, L4)
    keep = frozenset([x, *ys, *picks])
    return {
        "x": x, "lines": [sorted(L) for L in L123], "fourth": sorted(L4), "ys": ys, "picks": list(picks),
        "keep": keep, "delete": frozenset(P.points) - union, "contract": union - keep,
    }


def _configuration_sets(P: ProjectivePlane, cfg: dict) -> list[frozenset]:
    """The four lines of a configuration and the 0-corners of its three triangles."""
    L1, L2, L3 = (frozenset(L) for L in cfg["lines"])
    L4 = frozenset(cfg["fourth"])
    tris = [_triangle(L2, L3, L4), _triangle(L1, L3, L4), _triangle(L1, L2, L4)]
    return [L1, L2, L3, L4] + [zero_corner(T) for T in tris]


def verify_fano_minor_in_augmented_ternary(with_zero_corners: bool = True, all_configurations: bool = False,
                                           configuration_only: bool = False) -> bool:
    """Apply the deletion/contraction recipe and test for the Fano clutter.

    The recipe runs on PG(2,3) lines plus all triangle 0-corners, or on the
    bare lines when ``with_zero_corners`` is false.  ``configuration_only``
    keeps just the seven sets of the configuration itself (four lines and
    three 0-corners).  ``all_configurations`` requires every choice to work.

    On the full augmented clutter the answer is False: two further lines
    through the fourth point of ``L4`` lie inside the union and contract to
    sets of size at most one.
    """
    P, aug = augmented_ternary()
    C = aug if with_zero_corners else P.lines
    fano = build_plane(2).lines

    def ok(cfg) -> bool:
        host = C
        if configuration_only:
            sets = _configuration_sets(P, cfg)
            if not with_zero_corners:
                sets = sets[:4]
            host = Clutter(P.points, sets)
        return host.minor(cfg["delete"], cfg["contract"]).isomorphic(fano)

    if not all_configurations:
        return ok(fano_minor_configuration(P))
    lines = P.line_list()
    for x in P.points:
        through = [L for L in lines if x in L]
        for triple in itertools.combinations(through, 3):
            for L4 in (L for L in lines if x not in L):
                ys = [next(iter(L & L4)) for L in triple]
                choices = [sorted(L - {x, y}) for L, y in zip(triple, ys)]
                for picks in itertools.product(*choices):
                    if not ok(fano_minor_configuration(P, x, triple, L4, picks)):
                        return False
    return True


def find_minor(C: Clutter, target: Clutter) -> Optional[tuple]:
    """Exhaustive search for a minor of ``C`` isomorphic to ``target``.

    Returns ``(delete, contract)`` or None.  Vertices left isolated by a
    minor can be contracted away, so only minors on exactly
    ``len(target.ground)`` vertices are tried.
    """
    k = len(target.ground)
    sizes = sorted(map(len, target.edges))
    for keep in itertools.combinations(C.ground, k):
        rest = [v for v in C.ground if v not in keep]
        for mask in range(1 << len(rest)):
            d = [v for i, v in enumerate(rest) if mask >> i & 1]
            c = [v for i, v in enumerate(rest) if not mask >> i & 1]
            M = C.minor(d, c)
            if sorted(map(len, M.edges)) == sizes and M.isomorphic(target):
                return tuple(d), tuple(c)
    return None
