"""Row candidates for the orderly search over combined Lehman pair matrices.

A cell of ``C = A + 2B`` holds 3 when the edge is in both A and B, 1 for A
only and 2 for B only.  Every row has exactly ``k+1`` threes, ``r-k-1`` ones
and ``s-k-1`` twos.  The generator enforces, for the new row ``i`` and all
earlier rows ``j``, ``a_i.b_j = a_j.b_i = 1`` and the column analogue coming
from ``A^T B = J + kI``.
"""
from __future__ import annotations

from ._orderly import column_blocks


class PairCandidates:
    def __init__(self, n: int, r: int, s: int, k: int):
        if r * s != n + k:
            raise ValueError("r*s must equal n+k")
        self.n, self.r, self.s, self.k = n, r, s, k
        self.n3 = k + 1
        self.n1 = r - k - 1
        self.n2 = s - k - 1
        if min(self.n1, self.n2) < 0:
            raise ValueError(f"no rows possible for r={r}, s={s}, k={k}")

    def __call__(self, prefix):
        n, r, s = self.n, self.r, self.s
        i = len(prefix)
        rem = n - i - 1  # rows still to come after this one
        blocks = []
        for lo, hi in column_blocks(prefix, n):
            am = bm = 0
            for j, row in enumerate(prefix):
                v = row[lo]
                if v & 1:
                    am |= 1 << j
                if v & 2:
                    bm |= 1 << j
            ca, cb = bin(am).count("1"), bin(bm).count("1")
            blocks.append((lo, hi - lo, am, bm, ca, cb))
        nb = len(blocks)
        full = (1 << i) - 1
        # suffix unions let us abandon a branch that can no longer hit every row
        suf_a = [0] * (nb + 1)
        suf_b = [0] * (nb + 1)
        suf_len = [0] * (nb + 1)
        for x in range(nb - 1, -1, -1):
            suf_a[x] = suf_a[x + 1] | blocks[x][2]
            suf_b[x] = suf_b[x + 1] | blocks[x][3]
            suf_len[x] = suf_len[x + 1] + blocks[x][1]
        prev = prefix[-1] if prefix else None
        row = [0] * n
        k = self.k

        k1 = k + 1

        def rec(x, r3, r2, r1, hit_ab, hit_ba, acc_a, acc_b, tight, lead):
            if x == nb:
                if r3 == r2 == r1 == 0 and hit_ab == full and hit_ba == full:
                    yield tuple(row)
                return
            if r3 + r2 + r1 > suf_len[x]:
                return
            if (hit_ab | suf_b[x]) != full or (hit_ba | suf_a[x]) != full:
                return
            lo, L, am, bm, ca, cb = blocks[x]
            need_a = r - ca > rem
            need_b = s - cb > rem
            can_a = ca < r
            can_b = cb < s
            ab_here = am & bm
            # Later rows are lexicographically smaller, so while this row is
            # still all zeros the columns it passes must already be full.
            if lead and not (ca == r and cb == s):
                if r3 + r2 + r1 == 0:
                    return
                lead_ok = False
            else:
                lead_ok = lead
            n3here = bin(ab_here).count("1")
            for t3 in range(min(r3, L), -1, -1):
                for t2 in range(min(r2, L - t3), -1, -1):
                    b = t3 + t2
                    if b and not can_b:
                        continue
                    if need_b and b != L:
                        continue
                    if b:
                        if am and (b > 1 or hit_ba & am):
                            continue
                        if bm & acc_a:
                            continue
                    for t1 in range(min(r1, L - b), -1, -1):
                        a = t3 + t1
                        if a and not can_a:
                            continue
                        if need_a and a != L:
                            continue
                        if a:
                            if bm and (a > 1 or hit_ab & bm):
                                continue
                            if am & acc_b:
                                continue
                        if ab_here and a and b:
                            # an A column and a different B column inside this block
                            if not (t3 == 1 and a == 1 and b == 1):
                                continue
                            if bin(ab_here).count("1") + 1 > 1 + k:
                                continue
                        if lead and not lead_ok:
                            if t3 + t2 + t1 == 0:
                                continue
                            # first nonzero entry bounds every later entry of its column
                            if not t3 and n3here != k1:
                                continue
                            if not t3 and not t2 and cb != s:
                                continue
                        p = lo
                        for _ in range(t3):
                            row[p] = 3
                            p += 1
                        for _ in range(t2):
                            row[p] = 2
                            p += 1
                        for _ in range(t1):
                            row[p] = 1
                            p += 1
                        for _ in range(L - t3 - t2 - t1):
                            row[p] = 0
                            p += 1
                        nt = tight
                        if tight:
                            seg = tuple(row[lo:lo + L])
                            pseg = prev[lo:lo + L]
                            if seg > pseg:
                                continue
                            nt = seg == pseg
                        yield from rec(
                            x + 1, r3 - t3, r2 - t2, r1 - t1,
                            hit_ab | (bm if a else 0), hit_ba | (am if b else 0),
                            acc_a | (am if a else 0), acc_b | (bm if b else 0), nt,
                            lead and t3 + t2 + t1 == 0,
                        )

        yield from rec(0, self.n3, self.n2, self.n1, 0, 0, 0, 0, prev is not None, True)
