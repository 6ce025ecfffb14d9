"""Coloured bipartite graphs viewed through their bipartite adjacency matrix."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from .exactmat import RationalMatrix, format_lmx, parse_lmx

__all__ = ["BipartiteGraph", "as_01_rows", "InputError"]


class InputError(ValueError):
    """Raised when a matrix argument is not a square 0/1 matrix."""


def as_01_rows(A, *, square: bool = True) -> tuple[tuple[int, ...], ...]:
    """Validate and normalise a 0/1 matrix argument to a tuple of int rows.

    Accepts a :class:`BipartiteGraph`, a :class:`RationalMatrix`, a numpy
    array or nested sequences.
    """
    if isinstance(A, BipartiteGraph):
        return A.adj
    if isinstance(A, RationalMatrix):
        rows = [[x for x in r] for r in A.tolist()]
    else:
        if hasattr(A, "tolist"):
            A = A.tolist()
        rows = [list(r) for r in A]
    out = []
    for r in rows:
        vals = []
        for x in r:
            if x == 0:
                vals.append(0)
            elif x == 1:
                vals.append(1)
            else:
                raise InputError(f"entry {x!r} is not 0 or 1")
        out.append(tuple(vals))
    if out and any(len(r) != len(out[0]) for r in out):
        raise InputError("ragged rows")
    if square and out and len(out) != len(out[0]):
        raise InputError(f"matrix is {len(out)}x{len(out[0])}, expected square")
    return tuple(out)


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with ``n`` black (rows) and ``n`` white (columns) vertices.

    Vertices are 0-indexed within their colour class.  ``adj[b][w] == 1``
    iff black ``b`` is adjacent to white ``w``.
    """

    adj: tuple[tuple[int, ...], ...]
    _nb: tuple = field(init=False, repr=False, compare=False, hash=False)
    _nw: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        adj = as_01_rows(self.adj)
        object.__setattr__(self, "adj", adj)
        n = len(adj)
        object.__setattr__(self, "_nb", tuple(tuple(w for w in range(n) if adj[b][w]) for b in range(n)))
        object.__setattr__(self, "_nw", tuple(tuple(b for b in range(n) if adj[b][w]) for w in range(n)))

    # -- construction --------------------------------------------------
    @classmethod
    def from_matrix(cls, A) -> "BipartiteGraph":
        return cls(as_01_rows(A))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        """Build from ``(black, white)`` pairs."""
        rows = [[0] * n for _ in range(n)]
        for b, w in edges:
            if rows[b][w]:
                raise InputError(f"duplicate edge ({b}, {w})")
            rows[b][w] = 1
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_lmx(cls, text: str) -> "BipartiteGraph":
        return cls.from_matrix(parse_lmx(text))

    # -- views ---------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def order(self) -> int:
        """Total vertex count ``2n``."""
        return 2 * len(self.adj)

    @property
    def matrix(self) -> RationalMatrix:
        return RationalMatrix(self.adj, cols=self.n)

    def black_neighbours(self, b: int) -> tuple[int, ...]:
        return self._nb[b]

    def white_neighbours(self, w: int) -> tuple[int, ...]:
        return self._nw[w]

    def edges(self) -> list[tuple[int, int]]:
        return [(b, w) for b in range(self.n) for w in self._nb[b]]

    def has_edge(self, b: int, w: int) -> bool:
        return bool(self.adj[b][w])

    def transpose(self) -> "BipartiteGraph":
        """Swap the colour classes."""
        return BipartiteGraph(tuple(zip(*self.adj)) if self.adj else ())

    def degree(self) -> int | None:
        """Common degree if the graph is regular, else None."""
        degs = {len(x) for x in self._nb} | {len(x) for x in self._nw}
        return degs.pop() if len(degs) == 1 else None

    def is_regular(self, r: int | None = None) -> bool:
        d = self.degree()
        return d is not None and (r is None or d == r)

    def is_connected(self) -> bool:
        n = self.n
        if n == 0:
            return True
        seen_b, seen_w = {0}, set()
        stack = [("b", 0)]
        while stack:
            side, v = stack.pop()
            if side == "b":
                for w in self._nb[v]:
                    if w not in seen_w:
                        seen_w.add(w)
                        stack.append(("w", w))
            else:
                for b in self._nw[v]:
                    if b not in seen_b:
                        seen_b.add(b)
                        stack.append(("b", b))
        return len(seen_b) == n and len(seen_w) == n

    def relabel(self, black_perm: Sequence[int], white_perm: Sequence[int]) -> "BipartiteGraph":
        """Graph where old black ``b`` becomes ``black_perm[b]`` (same for whites)."""
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for b, w in self.edges():
            rows[black_perm[b]][white_perm[w]] = 1
        return BipartiteGraph(tuple(tuple(r) for r in rows))

    def to_networkx(self) -> nx.Graph:
        """Plain graph on ``2n`` nodes: blacks ``0..n-1``, whites ``n..2n-1``."""
        g = nx.Graph()
        n = self.n
        g.add_nodes_from(range(n), colour="black")
        g.add_nodes_from(range(n, 2 * n), colour="white")
        g.add_edges_from((b, n + w) for b, w in self.edges())
        return g

    # -- serialisation -------------------------------------------------
    def to_lmx(self) -> str:
        return format_lmx(self.matrix)

    def to_b6(self) -> str:
        """``B6:`` followed by the sparse6 encoding, blacks first."""
        raw = nx.to_sparse6_bytes(self.to_networkx(), header=False).decode().strip()
        return "B6:" + raw

    @classmethod
    def from_b6(cls, text: str) -> "BipartiteGraph":
        text = text.strip()
        if not text.startswith("B6:"):
            raise InputError("B6 strings must start with 'B6:'")
        g = nx.from_sparse6_bytes(text[3:].encode())
        total = g.number_of_nodes()
        if total % 2:
            raise InputError("B6 graph has an odd number of vertices")
        n = total // 2
        edges = []
        for u, v in g.edges():
            b, w = (u, v) if u < v else (v, u)
            if not (b < n <= w):
                raise InputError(f"edge ({u}, {v}) is not between the colour classes")
            edges.append((b, w - n))
        return cls.from_edges(n, edges)

    def __str__(self) -> str:
        return self.to_lmx()
