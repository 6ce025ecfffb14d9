"""3-rung ladder reduction/insertion and biclique compression/expansion.

Segment labelling (blacks ``b0 b1 b2``, whites ``w0 w1 w2``)::

    wL - b0 - w0 - bL          internal edges: b0w0 b1w1 b2w2
          |  X  |                              b0w1 b2w1 b1w0 b1w2
    wR - b2 - w2 - bR          non-edges:      b0w2 b2w0

``b1`` and ``w1`` have all three neighbours inside the segment.  The four
attachments are the third neighbours of ``b0`` (``wL``), ``b2`` (``wR``),
``w0`` (``bL``) and ``w2`` (``bR``).

Edges are always written ``(black, white)``.  In an insertion the removed
edge ``e`` is ``(bR, wL)`` and ``f`` is ``(bL, wR)``.
"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import BipartiteGraph, InputError
from .lehman import LehmanCertificate, NotLehmanError, certify, rungs as rungs_of

log = logging.getLogger(__name__)

__all__ = [
    "LadderSegment",
    "BicliquePartition",
    "ConstructionError",
    "LadderPreconditionError",
    "NotExpandableError",
    "CompressionException",
    "find_3rung_ladders",
    "has_4rung_ladder",
    "ladder_reduce",
    "ladder_reduce_with_maps",
    "expandable_pairs",
    "ladder_insert",
    "find_biclique_partitions",
    "biclique_compress",
    "biclique_expand",
    "perfect_matchings",
    "SEGMENT_EDGES",
]

# (i, j) means b_i ~ w_i for the internal edges of a segment
SEGMENT_EDGES = ((0, 0), (1, 1), (2, 2), (0, 1), (2, 1), (1, 0), (1, 2))


class ConstructionError(RuntimeError):
    """A construction produced something that failed certification."""


class LadderPreconditionError(ValueError):
    pass


class NotExpandableError(ValueError):
    pass


class CompressionException(ValueError):
    """Compression is not regular (the K_{4,4} minus a perfect matching case)."""


def _require_cubic(G: BipartiteGraph) -> None:
    if not G.is_regular(3):
        raise InputError("graph is not cubic")


def _lehman_k(G: BipartiteGraph, k: Optional[int]) -> LehmanCertificate:
    if k is None:
        for kk in (1, -1):
            cert = certify(G, kk)
            if cert is not None:
                return cert
        raise NotLehmanError("graph is not a Lehman graph with k = +-1")
    cert = certify(G, k)
    if cert is None:
        raise NotLehmanError(f"graph does not certify with k={k}")
    return cert


# ---------------------------------------------------------------------------
# ladders


@dataclass(frozen=True, order=True)
class LadderSegment:
    b: tuple  # (b0, b1, b2)
    w: tuple  # (w0, w1, w2)
    bL: int
    wL: int
    bR: int
    wR: int

    @property
    def key(self) -> tuple:
        return self.b + self.w

    def as_dict(self) -> dict:
        return {"b": list(self.b), "w": list(self.w), "bL": self.bL, "wL": self.wL, "bR": self.bR, "wR": self.wR}


def _third(nbrs: Sequence[int], a: int, b: int) -> int:
    (x,) = [v for v in nbrs if v != a and v != b]
    return x


def find_3rung_ladders(G) -> list[LadderSegment]:
    """Every induced 3-rung ladder segment, one orientation each, sorted."""
    G = BipartiteGraph.from_matrix(G)
    _require_cubic(G)
    found = {}
    for b1 in range(G.n):
        for w1 in G.black_neighbours(b1):
            ws = [w for w in G.black_neighbours(b1) if w != w1]
            bs = [b for b in G.white_neighbours(w1) if b != b1]
            for w0, w2 in (ws, ws[::-1]):
                for b0, b2 in (bs, bs[::-1]):
                    if not (G.has_edge(b0, w0) and G.has_edge(b2, w2)):
                        continue
                    if G.has_edge(b0, w2) or G.has_edge(b2, w0):
                        continue
                    seg = LadderSegment(
                        (b0, b1, b2), (w0, w1, w2),
                        bL=_third(G.white_neighbours(w0), b0, b1),
                        wL=_third(G.black_neighbours(b0), w0, w1),
                        bR=_third(G.white_neighbours(w2), b1, b2),
                        wR=_third(G.black_neighbours(b2), w1, w2),
                    )
                    mirror = LadderSegment(
                        (b2, b1, b0), (w2, w1, w0), bL=seg.bR, wL=seg.wR, bR=seg.bL, wR=seg.wL
                    )
                    best = min(seg, mirror)
                    found[best.key] = best
    return [found[k] for k in sorted(found)]


def has_4rung_ladder(G) -> bool:
    """True if two 3-rung segments overlap in a 4-rung ladder.

    A 4-rung segment ``b0..b3 / w0..w3`` has rungs ``b_i w_i`` and the zigzag
    ``b_i w_{i+1}``, ``b_{i+1} w_i`` between consecutive rungs; it is the
    induced 8-vertex graph whose four middle vertices have full degree.
    """
    G = BipartiteGraph.from_matrix(G)
    _require_cubic(G)
    segs = find_3rung_ladders(G)
    for s in segs:
        for t in (s, LadderSegment(s.b[::-1], s.w[::-1], s.bR, s.wR, s.bL, s.wL)):
            # extend to the right: b2 and w2 become inner; bR, wR join as new rung
            b3, w3 = t.bR, t.wR
            b = t.b + (b3,)
            w = t.w + (w3,)
            if not G.has_edge(b3, w3):
                continue
            want = {(0, 0), (1, 1), (2, 2), (3, 3), (0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2)}
            got = {(i, j) for i in range(4) for j in range(4) if G.has_edge(b[i], w[j])}
            if got == want:
                return True
    return False


def _check_reducible(G: BipartiteGraph, L: LadderSegment) -> None:
    if L.bL == L.bR or L.wL == L.wR:
        raise LadderPreconditionError("attachments coincide")
    if G.has_edge(L.bL, L.wR):
        raise LadderPreconditionError("b_L adjacent to w_R")
    if G.has_edge(L.bR, L.wL):
        raise LadderPreconditionError("w_L adjacent to b_R")


def ladder_reduce_with_maps(G, L: LadderSegment, k: Optional[int] = None):
    """Reduce and also return the old->new vertex maps of the survivors."""
    G = BipartiteGraph.from_matrix(G)
    _require_cubic(G)
    if k is not None:
        _lehman_k(G, k)
    _check_reducible(G, L)
    bmap = {}
    wmap = {}
    for b in range(G.n):
        if b not in L.b:
            bmap[b] = len(bmap)
    for w in range(G.n):
        if w not in L.w:
            wmap[w] = len(wmap)
    edges = [(bmap[b], wmap[w]) for b, w in G.edges() if b in bmap and w in wmap]
    edges += [(bmap[L.bL], wmap[L.wR]), (bmap[L.bR], wmap[L.wL])]
    H = BipartiteGraph.from_edges(G.n - 3, edges)
    if k is not None:
        s_old = (G.n + k) // 3
        cert = certify(H, k)
        if cert is None or cert.params.s != s_old - 1:
            raise ConstructionError("reduction did not give a Lehman graph")
    return H, bmap, wmap


def ladder_reduce(G, L: LadderSegment, k: Optional[int] = None) -> BipartiteGraph:
    """Delete the six segment vertices and join ``bL-wR`` and ``bR-wL``."""
    return ladder_reduce_with_maps(G, L, k)[0]


def _sufficient(cert: LehmanCertificate, e, f) -> bool:
    (bR, wL), (bL, wR) = e, f
    B = cert.partner.adj
    n = len(B)
    k = cert.params.k
    if any(B[bL][w] and B[bR][w] for w in range(n)):
        return False
    if any(B[b][wL] and B[b][wR] for b in range(n)):
        return False
    if k == 1:
        return bool(B[bR][wL] and B[bL][wR])
    return not B[bL][wL] and not B[bR][wR]


def _insert(G: BipartiteGraph, e, f) -> tuple[BipartiteGraph, LadderSegment]:
    (bR, wL), (bL, wR) = e, f
    n = G.n
    edges = set(G.edges())
    edges.discard(e)
    edges.discard(f)
    b = (n, n + 1, n + 2)
    w = (n, n + 1, n + 2)
    edges.update((b[i], w[j]) for i, j in SEGMENT_EDGES)
    edges.update([(bL, w[0]), (bR, w[2]), (b[0], wL), (b[2], wR)])
    H = BipartiteGraph.from_edges(n + 3, sorted(edges))
    return H, LadderSegment(b, w, bL=bL, wL=wL, bR=bR, wR=wR)


def _edge_pairs(G: BipartiteGraph):
    es = G.edges()
    for e, f in itertools.combinations(es, 2):
        if e[0] != f[0] and e[1] != f[1]:
            yield e, f


def expandable_pairs(G, k: int, exhaustive: bool = False) -> list[tuple]:
    """Non-incident edge pairs ``(e, f)`` along which a segment can be inserted.

    By default only the sufficient conditions are tested.  ``exhaustive``
    instead inserts along every pair and keeps those whose result certifies.
    Swapping ``e`` and ``f`` mirrors the new segment, so each unordered pair is
    listed once with ``e < f``.
    """
    if k not in (1, -1):
        raise ValueError("ladder operations need k = 1 or k = -1")
    G = BipartiteGraph.from_matrix(G)
    _require_cubic(G)
    cert = _lehman_k(G, k)
    out = []
    for e, f in _edge_pairs(G):
        if exhaustive:
            H, _ = _insert(G, e, f)
            ok = certify(H, k) is not None
        else:
            ok = _sufficient(cert, e, f) or _sufficient(cert, f, e)
        if ok:
            out.append((e, f))
    return out


def ladder_insert(G, e, f, k: int, check: str = "certify") -> BipartiteGraph:
    """Insert a 3-rung ladder segment, removing ``e = (bR, wL)`` and ``f = (bL, wR)``.

    ``check='sufficient'`` demands the sufficient conditions.  The default
    accepts any pair whose result is Lehman, trying the sufficient conditions
    first and certifying otherwise.
    """
    if k not in (1, -1):
        raise ValueError("ladder operations need k = 1 or k = -1")
    G = BipartiteGraph.from_matrix(G)
    _require_cubic(G)
    e, f = tuple(e), tuple(f)
    if any(not 0 <= v < G.n for v in e + f) or not (G.has_edge(*e) and G.has_edge(*f)):
        raise InputError("e and f must be edges of G")
    if e[0] == f[0] or e[1] == f[1]:
        raise NotExpandableError("e and f are incident")
    cert = _lehman_k(G, k)
    suff = _sufficient(cert, e, f)
    if check == "sufficient" and not suff:
        raise NotExpandableError("pair fails the sufficient conditions")
    H, _ = _insert(G, e, f)
    hc = certify(H, k)
    if hc is None:
        if suff:
            raise ConstructionError("sufficient conditions held but insertion is not Lehman")
        raise NotExpandableError("insertion along this pair is not a Lehman graph")
    return H


# ---------------------------------------------------------------------------
# bicliques


@dataclass(frozen=True)
class BicliquePartition:
    blocks: tuple  # ((blacks...), (whites...)) sorted
    out_neighbour: tuple  # out_neighbour[b] = white neighbour outside b's block

    def block_of_black(self) -> dict:
        return {b: i for i, (bs, _) in enumerate(self.blocks) for b in bs}

    def block_of_white(self) -> dict:
        return {w: i for i, (_, ws) in enumerate(self.blocks) for w in ws}

    def as_dict(self) -> dict:
        return {
            "blocks": [{"black": list(bs), "white": list(ws)} for bs, ws in self.blocks],
            "out_neighbour": list(self.out_neighbour),
        }


def _candidate_blocks(G: BipartiteGraph, r: int) -> list[tuple]:
    m = r - 1
    blocks = set()
    for b in range(G.n):
        for ws in itertools.combinations(G.black_neighbours(b), m):
            common = set(G.white_neighbours(ws[0]))
            for w in ws[1:]:
                common &= set(G.white_neighbours(w))
            common.discard(b)
            for rest in itertools.combinations(sorted(common), m - 1):
                blocks.add((tuple(sorted((b,) + rest)), ws))
    return sorted(blocks)


def find_biclique_partitions(G) -> list[BicliquePartition]:
    """All partitions of the vertex set into K_{r-1,r-1} blocks (exact cover)."""
    G = BipartiteGraph.from_matrix(G)
    r = G.degree()
    if r is None:
        raise InputError("graph is not regular")
    if r < 3:
        raise InputError("biclique partitions need r >= 3")
    n = G.n
    cand_all = _candidate_blocks(G, r)
    containing = {b: [blk for blk in cand_all if b in blk[0]] for b in range(n)}
    out = []

    def rec(cov_b, cov_w, chosen):
        if len(cov_b) == n:
            if len(cov_w) == n:
                out.append(tuple(sorted(chosen)))
            return
        b = min(x for x in range(n) if x not in cov_b)
        for bs, ws in containing[b]:
            if any(x in cov_b for x in bs) or any(x in cov_w for x in ws):
                continue
            chosen.append((bs, ws))
            rec(cov_b | set(bs), cov_w | set(ws), chosen)
            chosen.pop()

    rec(frozenset(), frozenset(), [])
    parts = []
    for blocks in sorted(set(out)):
        inside = {}
        for bs, ws in blocks:
            for b in bs:
                inside[b] = set(ws)
        outn = tuple(_third_out(G.black_neighbours(b), inside[b]) for b in range(n))
        parts.append(BicliquePartition(blocks, outn))
    return parts


def _third_out(nbrs, inside) -> int:
    (x,) = [w for w in nbrs if w not in inside]
    return x


def biclique_compress(G, P: BicliquePartition, verify: bool = True) -> BipartiteGraph:
    """Shrink each block to an edge; block ``i`` becomes black ``i`` and white ``i``."""
    G = BipartiteGraph.from_matrix(G)
    r = G.degree()
    if r is None or r < 3:
        raise InputError("need an r-regular graph with r >= 3")
    cert = _lehman_k(G, None) if verify else None
    if cert is not None and not (cert.k == 1 or (cert.k == -1 and r == 3)):
        raise NotLehmanError("compression needs k=1, or k=-1 with r=3")
    bb, wb = P.block_of_black(), P.block_of_white()
    m = len(P.blocks)
    if len(bb) != G.n or len(wb) != G.n:
        raise InputError("partition does not cover the graph")
    edges = {(i, i) for i in range(m)}
    for b, w in G.edges():
        edges.add((bb[b], wb[w]))
    H = BipartiteGraph.from_edges(m, sorted(edges))
    if not H.is_regular(r):
        raise CompressionException(
            "compressed graph is not regular: the input is K_{4,4} minus a perfect matching"
        )
    if verify and certify(H, -cert.k) is None:
        raise ConstructionError("compression did not give a Lehman graph of opposite sign")
    return H


def perfect_matchings(G) -> list[tuple]:
    """All perfect matchings as tuples ``m`` with ``m[b]`` the partner of black ``b``."""
    G = BipartiteGraph.from_matrix(G)
    n = G.n
    out = []
    cur = [0] * n

    def rec(b, used):
        if b == n:
            out.append(tuple(cur))
            return
        for w in G.black_neighbours(b):
            if not used >> w & 1:
                cur[b] = w
                rec(b + 1, used | (1 << w))

    rec(0, 0)
    return out


def _as_matching(G: BipartiteGraph, M) -> tuple:
    M = list(M)
    n = G.n
    if M and isinstance(M[0], (tuple, list)):
        mate = [None] * n
        for b, w in M:
            mate[b] = w
        M = mate
    if len(M) != n or sorted(M) != list(range(n)) or any(not G.has_edge(b, w) for b, w in enumerate(M)):
        raise InputError("not a perfect matching of the graph")
    return tuple(M)


def biclique_expand(
    G,
    M,
    k_in: int,
    orderings: Optional[tuple] = None,
    rng: Optional[random.Random] = None,
    verify: bool = True,
) -> BipartiteGraph:
    """Replace every matching edge by a K_{r-1,r-1} block.

    ``M`` is a list of ``(b, w)`` pairs or a tuple giving each black's
    partner.  Black ``b`` becomes blacks ``b*(r-1) .. b*(r-1)+r-2`` and white
    ``w`` becomes whites ``w*(r-1) ..``.  The non-matching edges at every
    vertex are ordered by neighbour index unless ``orderings`` (a pair of
    per-vertex lists) or ``rng`` say otherwise.
    """
    if k_in not in (1, -1):
        raise ValueError("k_in must be 1 or -1")
    G = BipartiteGraph.from_matrix(G)
    r = G.degree()
    if r is None or r < 3:
        raise InputError("need an r-regular graph with r >= 3")
    mate = _as_matching(G, M)
    if verify or k_in == 1:
        cert = _lehman_k(G, k_in)
        if k_in == 1:
            if r != 3:
                raise NotLehmanError("positive expansion needs a cubic graph")
            if set(enumerate(mate)) != set(rungs_of(cert)):
                raise NotExpandableError("positive graphs can only be expanded along their rungs")
    n, m = G.n, r - 1
    bord = []
    word = []
    for b in range(n):
        bord.append([w for w in G.black_neighbours(b) if w != mate[b]])
    inv = {w: b for b, w in enumerate(mate)}
    for w in range(n):
        word.append([b for b in G.white_neighbours(w) if b != inv[w]])
    if orderings is not None:
        bord = [list(x) for x in orderings[0]]
        word = [list(x) for x in orderings[1]]
    elif rng is not None:
        for lst in bord + word:
            rng.shuffle(lst)
    edges = []
    for b in range(n):
        w = mate[b]
        for i in range(m):
            for j in range(m):
                edges.append((b * m + i, w * m + j))
    for b in range(n):
        for i, w in enumerate(bord[b]):
            j = word[w].index(b)
            edges.append((b * m + i, w * m + j))
    H = BipartiteGraph.from_edges(n * m, edges)
    if verify and certify(H, -k_in) is None:
        raise ConstructionError("expansion is not a Lehman graph")
    return H
