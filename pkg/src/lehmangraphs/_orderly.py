"""Orderly row-by-row generation of small integer matrices.

Matrices are kept in *lex-max* form: the row-major tuple of the matrix is the
largest one obtainable by permuting rows and columns.  A prefix of a lex-max
matrix is again lex-max, so generating rows one at a time and keeping only
lex-max prefixes visits every isomorphism class exactly once.

Two alphabets are in use.  Plain adjacency matrices use {0, 1}.  For Lehman
pairs the search runs on ``C = A + 2B`` so each cell is 0, 1 (A only),
2 (B only) or 3 (both); the pair is recovered with ``c & 1`` and ``c >> 1``.
"""
from __future__ import annotations

from typing import Callable, Iterator, Optional, Sequence

Row = tuple
Matrix = tuple  # tuple of Row


def _refine(row: Row, part: tuple, target: Optional[Row]):
    """Sort ``row`` inside each class of ``part`` and compare with ``target``.

    Returns ``(cmp, image, newpart)`` where ``cmp`` is the sign of
    ``image - target`` (0 when ``target`` is None).  Stops early on a strict
    comparison, in which case ``newpart`` is None.
    """
    image = []
    pos = 0
    newpart = []
    for cls in part:
        if len(cls) == 1:
            c = cls[0]
            v = row[c]
            if target is not None:
                t = target[pos]
                if v != t:
                    return (1 if v > t else -1), None, None
            image.append(v)
            newpart.append(cls)
            pos += 1
            continue
        vals = sorted((row[c] for c in cls), reverse=True)
        L = len(vals)
        if target is not None:
            seg = target[pos:pos + L]
            tv = tuple(vals)
            if tv != seg:
                return (1 if tv > seg else -1), None, None
        image.extend(vals)
        pos += L
        if vals[0] == vals[-1]:
            newpart.append(cls)
        else:
            for v in sorted(set(vals), reverse=True):
                newpart.append(tuple(c for c in cls if row[c] == v))
    return 0, tuple(image), tuple(newpart)


def is_lexmax(M: Sequence[Row], ncols: int) -> bool:
    """True iff no row/column permutation of ``M`` is lexicographically larger."""
    m = len(M)
    states = {(0, (tuple(range(ncols)),))}
    for lvl in range(m):
        target = M[lvl]
        nxt = set()
        for used, part in states:
            for i in range(m):
                if used >> i & 1:
                    continue
                cmp, _, newpart = _refine(M[i], part, target)
                if cmp > 0:
                    return False
                if cmp == 0:
                    nxt.add((used | (1 << i), newpart))
        states = nxt
    return True


def lexmax_form(M: Sequence[Row], ncols: int) -> Matrix:
    """The lex-max representative of ``M`` under row and column permutations."""
    m = len(M)
    states = {(0, (tuple(range(ncols)),))}
    out = []
    for _ in range(m):
        best = None
        nxt = set()
        for used, part in states:
            for i in range(m):
                if used >> i & 1:
                    continue
                _, image, newpart = _refine(M[i], part, None)
                if best is None or image > best:
                    best = image
                    nxt = {(used | (1 << i), newpart)}
                elif image == best:
                    nxt.add((used | (1 << i), newpart))
        out.append(best)
        states = nxt
    return tuple(out)


def column_blocks(M: Sequence[Row], ncols: int) -> list[tuple[int, int]]:
    """Maximal runs ``[lo, hi)`` of equal adjacent columns."""
    if not M:
        return [(0, ncols)]
    blocks = []
    lo = 0
    for c in range(1, ncols):
        if any(r[c] != r[c - 1] for r in M):
            blocks.append((lo, c))
            lo = c
    blocks.append((lo, ncols))
    return blocks


class OrderlySearch:
    """Depth-first orderly search.

    ``candidates(prefix)`` yields rows that may follow ``prefix``; it must
    already respect the within-block ordering.  ``accept(full)`` filters
    complete matrices.  ``check_depths`` limits which prefix lengths get the
    (expensive) lex-max test; the final matrix is always tested.
    """

    def __init__(self, nrows: int, ncols: int, candidates: Callable, accept: Callable = None,
                 check_depths: Optional[set] = None):
        self.nrows = nrows
        self.ncols = ncols
        self.candidates = candidates
        self.accept = accept
        self.check_depths = check_depths
        self.nodes = 0

    def run(self, shard: int = 0, nshards: int = 1, split_depth: int = 2) -> Iterator[Matrix]:
        counter = [0]
        yield from self._dfs([], shard, nshards, split_depth, counter)

    def _dfs(self, prefix, shard, nshards, split_depth, counter):
        depth = len(prefix)
        if depth == self.nrows:
            M = tuple(prefix)
            if self.accept is None or self.accept(M):
                yield M
            return
        prev = prefix[-1] if prefix else None
        for row in self.candidates(prefix):
            if prev is not None and row > prev:
                continue
            prefix.append(row)
            ok = True
            d = depth + 1
            if self.check_depths is None or d in self.check_depths or d == self.nrows:
                ok = is_lexmax(prefix, self.ncols)
            if ok and nshards > 1 and d == split_depth:
                ok = counter[0] % nshards == shard
                counter[0] += 1
            if ok:
                self.nodes += 1
                yield from self._dfs(prefix, shard, nshards, split_depth, counter)
            prefix.pop()
