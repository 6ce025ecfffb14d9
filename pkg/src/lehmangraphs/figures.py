"""Hand-transcribed example graphs, each checked by certification.

Every entry of :data:`FIGURES` records the graph, the parameters it is
expected to certify at and a few structural claims that tests and the CLI
re-check.  Vertex names follow the drawings they were copied from; the
``black`` list fixes the row order of the adjacency matrix.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import BipartiteGraph, InputError
from .lehman import LehmanType

__all__ = ["FigureGraph", "FIGURES", "figure", "named_graph", "fano_matrix", "cube", "mobius10",
           "desargues", "j_minus_i", "mobius_ladder", "fig5_rungs"]


def named_graph(black: list, white: list, edges: list) -> BipartiteGraph:
    """Build a graph from named vertices; each edge may be given in either order."""
    bi = {v: i for i, v in enumerate(black)}
    wi = {v: i for i, v in enumerate(white)}
    if len(bi) != len(wi):
        raise InputError("colour classes differ in size")
    pairs = set()
    for u, v in edges:
        if u in bi and v in wi:
            pairs.add((bi[u], wi[v]))
        elif v in bi and u in wi:
            pairs.add((bi[v], wi[u]))
        else:
            raise InputError(f"edge {u}-{v} does not join the colour classes")
    return BipartiteGraph.from_edges(len(bi), sorted(pairs))


def _path(*names) -> list:
    return list(zip(names, names[1:]))


def fano_matrix() -> BipartiteGraph:
    rows = ["1101000", "0110100", "0011010", "0001101", "1000110", "0100011", "1010001"]
    return BipartiteGraph(tuple(tuple(int(c) for c in r) for r in rows))


def j_minus_i(m: int) -> BipartiteGraph:
    """K_{m,m} minus a perfect matching; a negative Lehman graph of type (m, m-1, 1)."""
    return BipartiteGraph(tuple(tuple(int(i != j) for j in range(m)) for i in range(m)))


def cube() -> BipartiteGraph:
    b = [f"b{i}" for i in range(4)]
    w = [f"w{i}" for i in range(4)]
    e = [(f"b{i}", f"w{i}") for i in range(4)]
    e += _path("b0", "w1", "b2", "w3", "b0") + _path("b1", "w2", "b3", "w0", "b1")
    return named_graph(b, w, e)


def mobius10() -> BipartiteGraph:
    b = [f"b{i}" for i in range(5)]
    w = [f"w{i}" for i in range(5)]
    e = [(f"b{i}", f"w{i}") for i in range(5)]
    e += _path("w3", "b4", "w0", "b1", "w2", "b3", "w4", "b0", "w1", "b2", "w3")
    return named_graph(b, w, e)


def mobius_ladder(m: int) -> BipartiteGraph:
    """Cubic Möbius ladder on ``2m`` vertices (``m`` odd keeps it bipartite)."""
    if m % 2 == 0 or m < 3:
        raise InputError("bipartite Möbius ladders need an odd number of rungs >= 3")
    # rim v0..v_{2m-1}, spokes v_i v_{i+m}; colour by parity
    n = 2 * m
    black = [f"v{i}" for i in range(0, n, 2)]
    white = [f"v{i}" for i in range(1, n, 2)]
    edges = [(f"v{i}", f"v{(i + 1) % n}") for i in range(n)]
    edges += [(f"v{i}", f"v{i + m}") for i in range(m)]
    return named_graph(black, white, edges)


def desargues() -> BipartiteGraph:
    black = [f"c{x}" for x in range(10)]
    white = [f"r{x}" for x in range(10)]
    e = [(f"r{x}", f"c{x}") for x in range(10)]
    e += _path("c0", "r1", "c2", "r3", "c4", "r5", "c6", "r7", "c8", "r9", "c0")
    e += _path("r0", "c3", "r6", "c9", "r2", "c5", "r8", "c1", "r4", "c7", "r0")
    return named_graph(black, white, e)


def _ladder22() -> BipartiteGraph:
    ev, od = [0, 2, 4, 6, 8, 10], [1, 3, 5, 7, 9]
    black = [f"v{x}" for x in ev] + [f"w{x}" for x in od]
    white = [f"w{x}" for x in ev] + [f"v{x}" for x in od]
    e = [(f"v{x}", f"w{x}") for x in range(11)]
    e += _path(*[f"v{x}" for x in range(11)], *[f"w{x}" for x in range(11)], "v0")
    return named_graph(black, white, e)


def _fig2_right() -> BipartiteGraph:
    black = ["v0", "v2", "v4", "v6", "v8", "v10", "w1", "w3", "w5", "w7", "w9"]
    white = ["v1", "v3", "v5", "v7", "v9", "w0", "w2", "w4", "w6", "w8", "w10"]
    e = [(f"v{x}", f"w{x}") for x in range(11)]
    e += _path(*[f"v{x}" for x in range(11)], "w0", "w1")
    e += _path(*[f"w{x}" for x in range(2, 9)])
    e += _path("w9", "w10", "v0") + [("w2", "w9"), ("w1", "w8")]
    return named_graph(black, white, e)


_FIG3_COMMON_B = ["v1", "v3", "w0", "w2", "x0", "x2", "y1", "y3"]
_FIG3_COMMON_W = ["v0", "v2", "w1", "w3", "x1", "x3", "y0", "y2"]


def _fig3_common() -> list:
    e = _path("v0", "v1", "v2", "v3", "w3", "w2", "w1", "w0", "v0")
    e += [("v1", "w1"), ("v2", "w2")]
    e += _path("x0", "x1", "x2", "x3", "y3", "y2", "y1", "y0", "x0")
    e += [("x1", "y1"), ("x2", "y2")]
    return e


def _fig3_left() -> BipartiteGraph:
    black = _FIG3_COMMON_B + ["b0", "b3", "a0"]
    white = _FIG3_COMMON_W + ["b1", "b2", "a1"]
    e = _fig3_common() + [("a0", "a1")] + _path("b0", "b1", "b3", "b2", "b0")
    e += [("w0", "b2"), ("w3", "b3"), ("v0", "a0"), ("v3", "a1"), ("a0", "x3"), ("a1", "x0"),
          ("b0", "y0"), ("b1", "y3")]
    return named_graph(black, white, e)


def _fig3_right() -> BipartiteGraph:
    black = _FIG3_COMMON_B + ["z0", "z2", "zz1"]
    white = _FIG3_COMMON_W + ["z1", "zz0", "zz2"]
    e = _fig3_common() + _path("z0", "z1", "z2", "zz2", "zz1", "zz0", "z0") + [("z1", "zz1")]
    e += [("zz2", "w0"), ("z2", "w3"), ("z0", "y0"), ("zz0", "y3"), ("v0", "x0"), ("v3", "x3")]
    return named_graph(black, white, e)


# white vertex v_i (i < 17) is adjacent to these blacks v_j (17 <= j < 34)
_FIG4 = [
    (17, 18, 19), (17, 18, 20), (17, 19, 21), (18, 22, 23), (19, 24, 25), (20, 24, 26),
    (20, 27, 28), (21, 22, 29), (21, 27, 30), (22, 23, 26), (23, 31, 32), (24, 25, 29),
    (25, 31, 33), (26, 30, 33), (27, 28, 30), (28, 29, 32), (31, 32, 33),
]


def _fig4() -> BipartiteGraph:
    black = [f"v{j}" for j in range(17, 34)]
    white = [f"v{i}" for i in range(17)]
    e = [(f"v{i}", f"v{j}") for i, js in enumerate(_FIG4) for j in js]
    return named_graph(black, white, e)


_FIG5_AUX = (
    ("r0", "c1", "b1", "w1", "r1", "c0", "r9", "c8", "r7", "c6", "r5", "c4", "b4", "w4", "r4",
     "c5", "r6", "c7", "r8", "c9", "r0"),
    ("c2", "b2", "w2", "r2", "c3", "b3", "w3", "r3", "c2"),
)
_FIG5_RUNGS = tuple((f"r{x}", f"c{x}") for x in (0, 5, 6, 7, 8, 9)) + (
    ("w1", "b2"), ("w2", "b1"), ("w3", "b4"), ("w4", "b3"),
    ("r1", "c2"), ("c1", "r2"), ("r3", "c4"), ("c3", "r4"),
)
_FIG5_BLACK = [f"r{x}" for x in range(10)] + [f"b{i}" for i in range(1, 5)]
_FIG5_WHITE = [f"c{x}" for x in range(10)] + [f"w{i}" for i in range(1, 5)]


def _fig5() -> BipartiteGraph:
    e = [p for cyc in _FIG5_AUX for p in _path(*cyc)] + list(_FIG5_RUNGS)
    return named_graph(_FIG5_BLACK, _FIG5_WHITE, e)


def fig5_rungs() -> frozenset:
    """The drawn rungs as (black, white) index pairs of the figure graph."""
    bi = {v: i for i, v in enumerate(_FIG5_BLACK)}
    wi = {v: i for i, v in enumerate(_FIG5_WHITE)}
    out = set()
    for u, v in _FIG5_RUNGS:
        out.add((bi[u], wi[v]) if u in bi else (bi[v], wi[u]))
    return frozenset(out)


def _fig8() -> BipartiteGraph:
    black = [f"{p}r{x}" for p in ("i", "o") for x in range(0, 14, 2)]
    white = [f"{p}c{y}" for p in ("i", "o") for y in range(1, 14, 2)]
    e = []
    for x in range(0, 14, 2):
        y = x + 1
        e += [(f"ir{x}", f"ic{y}"), (f"ir{x}", f"oc{y}"), (f"or{x}", f"ic{y}"), (f"or{x}", f"oc{y}")]
        e.append((f"oc{y}", f"or{(x + 2) % 14}"))
        e.append((f"ic{y}", f"ir{(x + 4) % 14}"))
    return named_graph(black, white, e)


@dataclass(frozen=True)
class FigureGraph:
    name: str
    graph: BipartiteGraph
    params: LehmanType
    note: str = ""
    claims: dict = field(default_factory=dict)


def _build() -> dict:
    T = LehmanType
    figs = [
        FigureGraph("fano", fano_matrix(), T(7, 3, 3, 2), "Fano plane incidence matrix"),
        FigureGraph("ladder22", _ladder22(), T(11, 3, 4, 1), "Möbius ladder on 22 vertices",
                    {"has_3rung": True}),
        FigureGraph("fig2b", _fig2_right(), T(11, 3, 4, 1), "second (11,3,4) graph of the pair"),
        FigureGraph("fig3a", _fig3_left(), T(11, 3, 4, 1), "third (11,3,4) graph"),
        FigureGraph("fig3b", _fig3_right(), T(11, 3, 4, 1), "fourth (11,3,4) graph"),
        FigureGraph("missing34", _fig4(), T(17, 3, 6, 1), "the 34-vertex graph absent from the older catalogue",
                    {"has_3rung": True, "has_4rung": False}),
        FigureGraph("aux14", _fig5(), T(14, 3, 5, 1), "(14,3,5) graph with auxiliary cycles and rungs drawn"),
        FigureGraph("cube", cube(), T(4, 3, 1, -1), "cube, K_{4,4} minus a perfect matching"),
        FigureGraph("mobius10", mobius10(), T(5, 3, 2, 1), "Möbius ladder on 10 vertices"),
        FigureGraph("desargues", desargues(), T(10, 3, 4, 2), "Desargues graph", {"mate_c0": (0, 1, 9, 5)}),
        FigureGraph("noladder14", _fig8(), T(14, 3, 5, 1), "(14,3,5) graph without 3-rung ladders",
                    {"has_3rung": False, "partitionable": True}),
    ]
    return {f.name: f for f in figs}


FIGURES = _build()


def figure(name: str) -> FigureGraph:
    try:
        return FIGURES[name]
    except KeyError:
        raise KeyError(f"unknown figure {name!r}; known: {sorted(FIGURES)}") from None
