"""Exhaustive generation, canonical forms and Lehman catalogues.

Two generators share one orderly engine (see ``_orderly``):

* :func:`generate_cubic_bipartite` walks plain regular bipartite adjacency
  matrices.  It is exact but the number of cubic bipartite graphs grows far
  too quickly for pure Python past about 24 vertices.
* :func:`search_lehman` walks the combined matrix ``A + 2B`` of a Lehman pair
  and prunes with the pair identities at every row.  Lehman matrices are rare,
  so this reaches 28 vertices in well under a minute.

Both emit lex-max canonical matrices, so their outputs can be compared
directly through :func:`canonical_form`.
"""
from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from ._orderly import OrderlySearch, column_blocks, is_lexmax, lexmax_form
from ._pairsearch import PairCandidates
from .graph import BipartiteGraph, InputError, as_01_rows
from .lehman import LehmanType, certify

log = logging.getLogger(__name__)

PRESERVING = "preserving"
BLIND = "blind"
_MODES = (PRESERVING, BLIND)


# ---------------------------------------------------------------------------
# canonical forms


@dataclass(frozen=True, order=True)
class CanonicalForm:
    data: bytes
    mode: str = PRESERVING

    @property
    def n(self) -> int:
        return int(round(len(self.data) ** 0.5))

    def graph(self) -> BipartiteGraph:
        n = self.n
        return BipartiteGraph(tuple(tuple(self.data[i * n:(i + 1) * n]) for i in range(n)))

    def hex(self) -> str:
        return self.data.hex()


def canonical_matrix(A) -> tuple:
    """Lex-max representative of ``A`` under independent row/column permutations."""
    a = as_01_rows(A)
    return lexmax_form(a, len(a))


def _encode(rows) -> bytes:
    return bytes(v for row in rows for v in row)


def canonical_form(G, mode: str = PRESERVING) -> CanonicalForm:
    """Canonical encoding under colour-preserving or colour-blind isomorphism."""
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}")
    a = as_01_rows(G)
    c = _encode(canonical_matrix(a))
    if mode == BLIND:
        ct = _encode(canonical_matrix(tuple(zip(*a)) if a else ()))
        c = max(c, ct)
    return CanonicalForm(c, mode)


def has_colour_reversing_automorphism(G) -> bool:
    a = as_01_rows(G)
    return canonical_matrix(a) == canonical_matrix(tuple(zip(*a)))


def colour_reversing_automorphism_bruteforce(G) -> bool:
    """Reference check by networkx isomorphism with a colour swap (small graphs)."""
    from networkx.algorithms import isomorphism

    g = BipartiteGraph.from_matrix(G)
    h = g.transpose()
    gm = isomorphism.GraphMatcher(
        g.to_networkx(), h.to_networkx(), node_match=lambda x, y: x["colour"] == y["colour"]
    )
    return gm.is_isomorphic()


# ---------------------------------------------------------------------------
# generic regular bipartite generation


class _RegularCandidates:
    """Rows with ``r`` ones; optional twin cut."""

    def __init__(self, n: int, r: int, prune: bool):
        self.n, self.r, self.prune = n, r, prune

    def __call__(self, prefix):
        n, r, prune = self.n, self.r, self.prune
        i = len(prefix)
        rem = n - i - 1
        blocks = []
        for lo, hi in column_blocks(prefix, n):
            blocks.append((lo, hi - lo, sum(row[lo] for row in prefix)))
        nb = len(blocks)
        prev = prefix[-1] if prefix else None
        row = [0] * n

        def rec(x, left, tight, lead):
            if x == nb:
                if left == 0:
                    out = tuple(row)
                    if not (prune and out == prev):
                        yield out
                return
            lo, L, ca = blocks[x]
            if lead and ca < r and left == 0:
                return
            for t in range(min(left, L), -1, -1):
                if t and ca >= r:
                    continue
                if r - ca > rem and t != L:
                    continue
                if lead and ca < r and t == 0:
                    continue
                if prune and t >= 2 and ca + 1 == r:
                    continue  # two finished twin columns
                for p in range(lo, lo + L):
                    row[p] = 1 if p - lo < t else 0
                nt = tight
                if tight:
                    seg = tuple(row[lo:lo + L])
                    pseg = prev[lo:lo + L]
                    if seg > pseg:
                        continue
                    nt = seg == pseg
                yield from rec(x + 1, left - t, nt, lead and t == 0)

        yield from rec(0, r, prev is not None, True)


def _accept_connected_blind(M) -> bool:
    g = BipartiteGraph(M)
    if not g.is_connected():
        return False
    # one representative per colour-blind class: keep the larger orientation
    return M >= lexmax_form(tuple(zip(*M)), len(M))


def _regular_shard(n: int, r: int, prune: bool, shard: int, nshards: int) -> list:
    S = OrderlySearch(n, n, _RegularCandidates(n, r, prune), accept=_accept_connected_blind)
    return list(S.run(shard, nshards, split_depth=min(3, n)))


def generate_regular_bipartite(n: int, r: int, prune: bool = False, jobs: int = 1) -> Iterator[BipartiteGraph]:
    """Connected r-regular bipartite graphs with ``n`` vertices per side, one per iso class."""
    if n < r:
        return iter(())
    if jobs <= 1:
        S = OrderlySearch(n, n, _RegularCandidates(n, r, prune), accept=_accept_connected_blind)
        return (BipartiteGraph(M) for M in S.run())
    mats = _run_sharded(_regular_shard, (n, r, prune), jobs)
    return (BipartiteGraph(M) for M in mats)


def generate_cubic_bipartite(order_2n: int, prune: bool = False, jobs: int = 1) -> Iterator[BipartiteGraph]:
    """Connected cubic bipartite graphs on ``order_2n`` vertices.

    With ``prune`` set, partial matrices holding two finished vertices with
    the same neighbourhood are cut; such graphs have singular adjacency
    matrices and so are never Lehman.
    """
    if order_2n % 2:
        raise InputError("order must be even")
    if order_2n < 6:
        raise InputError("cubic bipartite graphs need at least 6 vertices")
    return generate_regular_bipartite(order_2n // 2, 3, prune=prune, jobs=jobs)


def _run_sharded(fn, args: tuple, jobs: int) -> list:
    nshards = jobs * 4
    out = []
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        futs = [ex.submit(fn, *args, i, nshards) for i in range(nshards)]
        for f in futs:
            out.extend(f.result())
    out.sort(reverse=True)
    return out


# ---------------------------------------------------------------------------
# catalogues


@dataclass(frozen=True)
class Catalogue:
    """Lehman graphs of one type, one per colour-preserving isomorphism class."""

    params: Optional[LehmanType]
    graphs: tuple = ()
    _blind: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        seen = {}
        for g in self.graphs:
            cf = canonical_form(g)
            seen.setdefault(cf.data, cf.graph())
        ordered = tuple(seen[d] for d in sorted(seen, reverse=True))
        object.__setattr__(self, "graphs", ordered)
        blind = {}
        for g in ordered:
            blind.setdefault(canonical_form(g, BLIND).data, g)
        object.__setattr__(self, "_blind", tuple(CanonicalForm(d, BLIND).graph() for d in sorted(blind, reverse=True)))

    @classmethod
    def from_blind(cls, params, reps: Iterable) -> "Catalogue":
        """Build from one graph per colour-blind class, adding transposes."""
        graphs = []
        for g in reps:
            g = BipartiteGraph.from_matrix(g)
            graphs.append(g)
            graphs.append(g.transpose())
        return cls(params, tuple(graphs))

    @property
    def lp_count(self) -> int:
        """Colour-preserving classes (the primed column of the tables)."""
        return len(self.graphs)

    @property
    def l_count(self) -> int:
        """Colour-blind classes."""
        return len(self._blind)

    def blind_graphs(self) -> tuple:
        return self._blind

    def keys(self, mode: str = PRESERVING) -> set:
        src = self.graphs if mode == PRESERVING else self._blind
        return {canonical_form(g, mode).data for g in src}

    def entries(self, mode: str = PRESERVING) -> list[str]:
        src = self.graphs if mode == PRESERVING else self._blind
        return [g.to_lmx() for g in src]

    def without_colour_reversal(self) -> list:
        return [g for g in self._blind if not has_colour_reversing_automorphism(g)]

    def merged(self, other: "Catalogue") -> "Catalogue":
        if self.params and other.params and self.params != other.params:
            raise ValueError("cannot merge catalogues of different types")
        return Catalogue(self.params or other.params, self.graphs + other.graphs)

    def to_json(self, mode: str = PRESERVING) -> str:
        p = self.params
        doc = {
            "params": None if p is None else {"n": p.n, "r": p.r, "s": p.s, "k": p.k},
            "mode": mode,
            "count": self.lp_count if mode == PRESERVING else self.l_count,
            "entries": self.entries(mode),
        }
        return json.dumps(doc, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "Catalogue":
        doc = json.loads(text)
        p = doc.get("params")
        params = None if p is None else LehmanType(p["n"], p["r"], p["s"], p["k"])
        gs = [BipartiteGraph.from_lmx(e) for e in doc["entries"]]
        if doc.get("mode") == BLIND:
            return cls.from_blind(params, gs)
        return cls(params, tuple(gs))


def extract_lehman(stream: Iterable, k: int, params: Optional[LehmanType] = None) -> Catalogue:
    """Certify each graph of a generator stream at ``k`` and catalogue the hits."""
    hits = []
    for g in stream:
        cert = certify(g, k)
        if cert is None:
            continue
        if params is None:
            params = cert.params
        hits.append(cert.graph)
    return Catalogue.from_blind(params, hits)


def _pair_shard(n, r, s, k, shard, nshards) -> list:
    S = OrderlySearch(n, n, PairCandidates(n, r, s, k))
    return list(S.run(shard, nshards, split_depth=min(3, n)))


def search_lehman_pairs(n: int, k: int, r: int = 3, jobs: int = 1) -> list[tuple]:
    """Lex-max matrices ``A + 2B``, one per colour-preserving class of Lehman pairs."""
    if (n + k) % r:
        return []
    s = (n + k) // r
    if jobs <= 1:
        return list(OrderlySearch(n, n, PairCandidates(n, r, s, k)).run())
    return _run_sharded(_pair_shard, (n, r, s, k), jobs)


def search_lehman(n: int, k: int, r: int = 3, jobs: int = 1, verify: bool = True) -> Catalogue:
    """All r-regular Lehman matrices of order ``n`` with the given ``k``."""
    if k == 0 or k < -1:
        raise ValueError("k must be -1 or positive")
    params = None
    if (n + k) % r == 0:
        params = LehmanType(n, r, (n + k) // r, k)
    graphs = []
    for C in search_lehman_pairs(n, k, r, jobs):
        A = tuple(tuple(v & 1 for v in row) for row in C)
        if verify:
            cert = certify(A, k)
            if cert is None or tuple(tuple(v >> 1 for v in row) for row in C) != cert.partner.adj:
                raise AssertionError("pair search produced an uncertifiable matrix")
        graphs.append(BipartiteGraph(A))
    cat = Catalogue(params, tuple(graphs))
    if cat.lp_count != len(graphs):
        raise AssertionError("pair search emitted isomorphic duplicates")
    return cat


__all__ = [
    "CanonicalForm",
    "Catalogue",
    "canonical_form",
    "canonical_matrix",
    "has_colour_reversing_automorphism",
    "generate_cubic_bipartite",
    "generate_regular_bipartite",
    "extract_lehman",
    "search_lehman",
    "search_lehman_pairs",
    "is_lexmax",
    "PRESERVING",
    "BLIND",
]


# ---------------------------------------------------------------------------
# construction closure


def closure_generate(
    bases: Iterable,
    max_2n: int,
    k: int,
    opposite: Iterable = (),
    mode: str = "sufficient",
) -> dict:
    """Everything reachable from ``bases`` by ladder insertion, up to ``max_2n`` vertices.

    ``opposite`` holds Lehman graphs of sign ``-k``; each is expanded into
    graphs of sign ``k`` (along every perfect matching when it is negative,
    along its rungs when it is positive) and the results join the seeds.
    ``mode='exhaustive'`` inserts along every edge pair instead of only the
    pairs passing the sufficient conditions.  Returns ``{n: Catalogue}``.
    """
    from .constructions import biclique_expand, expandable_pairs, ladder_insert, perfect_matchings
    from .lehman import rungs

    if k not in (1, -1):
        raise ValueError("closure needs k = 1 or k = -1")
    if mode not in ("sufficient", "exhaustive"):
        raise ValueError("mode must be 'sufficient' or 'exhaustive'")
    max_n = max_2n // 2
    levels: dict = {}

    def add(g: BipartiteGraph) -> None:
        if g.n > max_n:
            return
        for h in (g, g.transpose()):
            cf = canonical_form(h)
            levels.setdefault(g.n, {}).setdefault(cf.data, cf.graph())

    for g in bases:
        g = BipartiteGraph.from_matrix(g)
        if certify(g, k) is None:
            raise ValueError("every base must certify at the requested k")
        add(g)
    for h in opposite:
        h = BipartiteGraph.from_matrix(h)
        r = h.degree()
        if r is None or h.n * (r - 1) > max_n:
            continue
        cert = certify(h, -k)
        if cert is None:
            raise ValueError("opposite graphs must certify at -k")
        if -k == -1:
            matchings = perfect_matchings(h)
        else:
            matchings = [tuple(w for _, w in sorted(rungs(cert)))]
        for M in matchings:
            add(biclique_expand(h, M, -k))

    n = min(levels) if levels else max_n + 1
    while n <= max_n:
        for g in list(levels.get(n, {}).values()):
            if g.n + 3 > max_n:
                break
            for e, f in expandable_pairs(g, k, exhaustive=(mode == "exhaustive")):
                add(ladder_insert(g, e, f, k))
        n += 1
    out = {}
    for n, d in sorted(levels.items()):
        s, rem = divmod(n + k, 3)
        params = LehmanType(n, 3, s, k) if rem == 0 else None
        out[n] = Catalogue(params, tuple(d.values()))
    return out


__all__.append("closure_generate")
