"""Command-line entry point: ``lehmangraphs <command> ...``.

Exit codes: 0 success, 1 a check failed (uncertifiable input, table
mismatch, invariant violation), 2 unreadable or malformed input.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from . import clutters as cl
from . import constructions as cons
from .exactmat import LmxFormatError, parse_lmx
from .figures import FIGURES, cube, mobius10
from .graph import BipartiteGraph, InputError
from .lehman import LehmanType, certify, lehman_types, mate_status
from .polyhedra import (NotAClutterError, covering_polyhedron, enumerate_vertices, fractional_vertices,
                        is_mni_exact, mni_test_square)
from .search import BLIND, PRESERVING, canonical_form, closure_generate, generate_cubic_bipartite, search_lehman

log = logging.getLogger("lehmangraphs")

# Expected table rows: (n, r, s) -> (colour-blind count, colour-preserving count)
# Positive cubic Lehman matrices, k = 1.
EXPECTED_T1 = {
    (5, 3, 2): (1, 1), (8, 3, 3): (2, 2), (11, 3, 4): (4, 4), (14, 3, 5): (17, 18),
    (17, 3, 6): (71, 98), (20, 3, 7): (491, 785),
}
# Negative cubic Lehman matrices, k = -1.
EXPECTED_T2 = {
    (4, 3, 1): (1, 1), (7, 3, 2): (1, 1), (10, 3, 3): (2, 2), (13, 3, 4): (5, 5),
    (16, 3, 5): (19, 21), (19, 3, 6): (105, 154), (22, 3, 7): (853, 1488),
}
# Cubic k = 1 Lehman matrices passing the unique-fractional-vertex test.
EXPECTED_T3 = {(5, 3, 2): 1, (8, 3, 3): 2, (11, 3, 4): 4, (14, 3, 5): 9, (17, 3, 6): 4, (20, 3, 7): 0}

TABLE_TITLES = {1: "cubic Lehman graphs, k=1", 2: "cubic Lehman graphs, k=-1", 3: "mni cubic Lehman matrices, k=1"}
DESK_MAX = {1: 28, 2: 26, 3: 28}


class CliFailure(Exception):
    """A check failed; exit status 1."""


class CliInputError(Exception):
    """Unreadable input; exit status 2."""


def _digest(data: str | bytes) -> str:
    if isinstance(data, str):
        data = data.encode()
    return hashlib.sha256(data).hexdigest()


@dataclass
class RunManifest:
    command: str
    parameters: dict
    input_digests: dict = field(default_factory=dict)
    output_digests: dict = field(default_factory=dict)
    wall_time: float = 0.0
    workers: int = 1

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


class Context:
    """Collects output text and files written during one command."""

    def __init__(self, args):
        self.args = args
        params = {k: v for k, v in vars(args).items() if k not in ("func", "manifest") and not callable(v)}
        self.manifest = RunManifest(args.command, json.loads(json.dumps(params, default=str)),
                                    workers=getattr(args, "jobs", 1) or 1)
        self.lines: list[str] = []

    def emit(self, text: str) -> None:
        self.lines.append(text)

    def emit_json(self, obj, compact: bool = False) -> None:
        self.emit(json.dumps(obj, indent=None if compact else 2, sort_keys=True, default=_json_default))

    def read(self, path: str) -> str:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise CliInputError(f"cannot read {path}: {exc}") from None
        self.manifest.input_digests[path] = _digest(text)
        return text

    def write(self, path: Path, text: str) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        self.manifest.output_digests[str(path)] = _digest(text)


def _json_default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    if isinstance(o, LehmanType):
        return {"n": o.n, "r": o.r, "s": o.s, "k": o.k}
    raise TypeError(f"cannot serialise {type(o).__name__}")


def _load_graph(ctx: Context, path: str) -> BipartiteGraph:
    text = ctx.read(path)
    try:
        return BipartiteGraph.from_lmx(text)
    except (LmxFormatError, InputError, ValueError) as exc:
        raise CliInputError(f"{path}: {exc}") from None


def _load_rows(ctx: Context, path: str) -> list[tuple]:
    text = ctx.read(path)
    try:
        M = parse_lmx(text)
    except LmxFormatError as exc:
        raise CliInputError(f"{path}: {exc}") from None
    if not M.is_01():
        raise CliInputError(f"{path}: entries must be 0 or 1")
    return [tuple(int(v) for v in r) for r in M.tolist()]


def _load_clutter(ctx: Context, path: str) -> cl.Clutter:
    text = ctx.read(path)
    try:
        return cl.Clutter.from_text(text)
    except cl.ClutterError as exc:
        raise CliInputError(f"{path}: {exc}") from None


def _certified(G: BipartiteGraph, k: int):
    cert = certify(G, k)
    if cert is None:
        raise CliFailure(f"graph does not certify as a Lehman graph with k={k}")
    return cert


def _emit_graph(ctx: Context, G: BipartiteGraph, name: str) -> None:
    out = getattr(ctx.args, "out", None)
    fmt = getattr(ctx.args, "format", "lmx")
    text = G.to_lmx() if fmt == "lmx" else json.dumps({"matrix": [list(r) for r in G.adj]}) + "\n"
    if out:
        ctx.write(Path(out) / f"{name}.{fmt}", text)
    else:
        ctx.emit(text.rstrip("\n"))


# -- Lehman pairs ---------------------------------------------------------

def cmd_verify(ctx: Context) -> None:
    a = ctx.args
    G = _load_graph(ctx, a.path)
    ks = [a.k] if a.k is not None else [t.k for t in lehman_types(G)]
    if not ks:
        ctx.emit_json({"certified": False, "reason": "no k makes the matrix Lehman"})
        raise CliFailure("not a Lehman matrix")
    reports = []
    ok = False
    for k in ks:
        cert = certify(G, k)
        rep: dict = {"k": k, "certified": cert is not None}
        if cert is None:
            status = [mate_status(G, b, k)[0].value for b in range(G.n)]
            rep["mate_status"] = status
        else:
            ok = True
            cert.check()
            p = cert.params
            rep["type"] = f"({p.n},{p.r},{p.s})"
            rep["mates"] = {str(b): sorted(M) for b, M in enumerate(cert.mates)}
            if a.out:
                path = Path(a.out) / f"{Path(a.path).stem}.partner.lmx"
                ctx.write(path, cert.partner.to_lmx())
                rep["partner"] = str(path)
            else:
                rep["partner"] = ["".join(map(str, r)) for r in cert.partner.adj]
        reports.append(rep)
    ctx.emit_json(reports if len(reports) > 1 else reports[0])
    if not ok:
        raise CliFailure("uncertifiable")


def cmd_generate(ctx: Context) -> None:
    a = ctx.args
    count = 0
    # the generator yields one graph per colour-blind class
    for g in generate_cubic_bipartite(a.order, prune=a.prune, jobs=a.jobs):
        batch = [g]
        if a.mode == PRESERVING:
            t = canonical_form(g.transpose())
            if t != canonical_form(g):
                batch.append(t.graph())
        for h in batch:
            count += 1
            if a.format == "b6":
                ctx.emit(h.to_b6())
            else:
                _emit_graph(ctx, h, f"g{count:05d}")
    ctx.emit(f"# {count} connected cubic bipartite graphs on {a.order} vertices ({a.mode})")


def cmd_catalogue(ctx: Context) -> None:
    a = ctx.args
    if a.order % 2:
        raise CliInputError("--order is the total vertex count and must be even")
    cat = search_lehman(a.order // 2, a.k, r=a.r, jobs=a.jobs)
    text = cat.to_json(a.mode)
    if a.out:
        ctx.write(Path(a.out), text)
    ctx.emit(text if not a.out else f"{cat.params}: blind {cat.l_count}, preserving {cat.lp_count}")


def _opposite_catalogue(k: int, max_n: int, jobs: int) -> list:
    out = []
    for n in range(2, max_n // 2 + 1):
        if (n - k) % 3 == 0:
            out.extend(search_lehman(n, -k, jobs=jobs).graphs)
    return out


def cmd_closure(ctx: Context) -> None:
    a = ctx.args
    bases = [_load_graph(ctx, p) for p in a.base] if a.base else [mobius10() if a.k == 1 else cube()]
    opposite = _opposite_catalogue(a.k, a.max // 2, a.jobs) if a.expand else []
    levels = closure_generate(bases, a.max, a.k, opposite=opposite, mode=a.mode)
    rows = []
    failed = False
    for n, cat in sorted(levels.items()):
        blind = cat.blind_graphs()
        row = {"n": n, "blind": cat.l_count, "preserving": cat.lp_count,
               "without_3rung": sum(1 for g in blind if not cons.find_3rung_ladders(g))}
        if a.compare and cat.params is not None:
            ref = search_lehman(n, a.k, jobs=a.jobs)
            row["matches_search"] = ref.keys() == cat.keys()
            failed |= not row["matches_search"]
        rows.append(row)
    ctx.emit_json(rows)
    if failed:
        raise CliFailure("closure differs from the exhaustive catalogue")


# -- constructions ----------------------------------------------------------

def cmd_ladders(ctx: Context) -> None:
    G = _load_graph(ctx, ctx.args.path)
    try:
        segs = cons.find_3rung_ladders(G)
    except InputError as exc:
        raise CliInputError(str(exc)) from None
    ctx.emit_json({"segments": [s.as_dict() for s in segs], "has_4rung": cons.has_4rung_ladder(G)})


def cmd_reduce(ctx: Context) -> None:
    a = ctx.args
    G = _load_graph(ctx, a.path)
    segs = cons.find_3rung_ladders(G)
    if not 0 <= a.index < len(segs):
        raise CliFailure(f"segment index {a.index} out of range ({len(segs)} segments)")
    try:
        H = cons.ladder_reduce(G, segs[a.index], k=a.k)
    except (cons.LadderPreconditionError, cons.ConstructionError) as exc:
        raise CliFailure(str(exc)) from None
    _emit_graph(ctx, H, "reduced")


def cmd_expandable(ctx: Context) -> None:
    a = ctx.args
    G = _load_graph(ctx, a.path)
    _certified(G, a.k)
    pairs = cons.expandable_pairs(G, a.k, exhaustive=a.exhaustive)
    ctx.emit_json([{"e": list(e), "f": list(f)} for e, f in pairs])


def cmd_insert(ctx: Context) -> None:
    a = ctx.args
    G = _load_graph(ctx, a.path)
    try:
        H = cons.ladder_insert(G, tuple(a.e), tuple(a.f), a.k)
    except InputError as exc:
        raise CliInputError(str(exc)) from None
    except (cons.NotExpandableError, cons.ConstructionError) as exc:
        raise CliFailure(str(exc)) from None
    _emit_graph(ctx, H, "inserted")


def cmd_partitions(ctx: Context) -> None:
    G = _load_graph(ctx, ctx.args.path)
    try:
        parts = cons.find_biclique_partitions(G)
    except InputError as exc:
        raise CliInputError(str(exc)) from None
    ctx.emit_json([p.as_dict() for p in parts])


def cmd_compress(ctx: Context) -> None:
    a = ctx.args
    G = _load_graph(ctx, a.path)
    parts = cons.find_biclique_partitions(G)
    if not 0 <= a.index < len(parts):
        raise CliFailure(f"partition index {a.index} out of range ({len(parts)} partitions)")
    try:
        H = cons.biclique_compress(G, parts[a.index])
    except (cons.CompressionException, cons.ConstructionError) as exc:
        raise CliFailure(str(exc)) from None
    _emit_graph(ctx, H, "compressed")


def cmd_expand(ctx: Context) -> None:
    a = ctx.args
    G = _load_graph(ctx, a.path)
    if a.matching:
        M = tuple(a.matching)
    else:
        ms = cons.perfect_matchings(G)
        if not ms:
            raise CliFailure("graph has no perfect matching")
        M = ms[0]
    try:
        H = cons.biclique_expand(G, M, a.k)
    except InputError as exc:
        raise CliInputError(str(exc)) from None
    except (cons.NotExpandableError, cons.ConstructionError) as exc:
        raise CliFailure(str(exc)) from None
    _emit_graph(ctx, H, "expanded")


# -- polyhedra --------------------------------------------------------------

def _point(p) -> list[str]:
    return [str(Fraction(v)) for v in p]


def cmd_vertices(ctx: Context) -> None:
    rows = _load_rows(ctx, ctx.args.path)
    try:
        V = enumerate_vertices(covering_polyhedron(rows))
    except NotAClutterError as exc:
        raise CliInputError(str(exc)) from None
    obj = V.to_json_obj()
    obj["fractional"] = [_point(p) for p in fractional_vertices(V)]
    ctx.emit_json(obj, compact=True)


def cmd_mni(ctx: Context) -> None:
    a = ctx.args
    rows = _load_rows(ctx, a.path)
    try:
        res = {"mni_test_square": mni_test_square(rows)}
    except (ValueError, NotAClutterError) as exc:
        raise CliFailure(str(exc)) from None
    if a.exact:
        res["is_mni_exact"] = is_mni_exact(cl.Clutter.from_matrix(rows))
        res["agree"] = res["is_mni_exact"] == res["mni_test_square"]
    ctx.emit_json(res)
    if a.exact and not res["agree"]:
        raise CliFailure("operational test and exact check disagree")


# -- clutters ---------------------------------------------------------------

def cmd_blocker(ctx: Context) -> None:
    C = _load_clutter(ctx, ctx.args.path)
    try:
        ctx.emit(C.blocker().to_text().rstrip("\n"))
    except cl.ClutterTooLarge as exc:
        raise CliFailure(str(exc)) from None


def cmd_minor(ctx: Context) -> None:
    a = ctx.args
    C = _load_clutter(ctx, a.path)
    try:
        M = C.minor(a.delete or (), a.contract or ())
    except cl.ClutterError as exc:
        raise CliInputError(str(exc)) from None
    ctx.emit(M.to_text().rstrip("\n"))


def cmd_plane(ctx: Context) -> None:
    P = cl.build_plane(ctx.args.q)
    ctx.emit(P.lines.to_text().rstrip("\n"))


def cmd_blocking_sets(ctx: Context) -> None:
    P = cl.build_plane(ctx.args.q)
    bs = cl.blocking_sets(P)
    corners = {cl.zero_corner(T) for T in cl.triangles(P)}
    ctx.emit_json({"count": len(bs), "sets": [sorted(s) for s in bs],
                   "all_zero_corners": set(bs) == corners if bs else None})


def cmd_fano_minor_check(ctx: Context) -> None:
    a = ctx.args
    ok = cl.verify_fano_minor_in_augmented_ternary(with_zero_corners=not a.lines_only,
                                                   all_configurations=a.all,
                                                   configuration_only=a.configuration_only)
    P = cl.build_plane(3)
    cfg = cl.fano_minor_configuration(P)
    ctx.emit_json({"fano": ok, "configuration": {k: v for k, v in cfg.items() if k not in ("delete", "contract", "keep")},
                   "delete": sorted(cfg["delete"]), "contract": sorted(cfg["contract"])})
    if not ok:
        raise CliFailure("minor is not the Fano clutter")


# -- reproduction -------------------------------------------------------------

def _table_rows(which: int, max_2n: int, jobs: int) -> list[dict]:
    k = -1 if which == 2 else 1
    rows = []
    for n in range(2, max_2n // 2 + 1):
        if (n + k) % 3:
            continue
        if which != 2 and n < 5:
            continue
        t0 = time.time()
        cat = search_lehman(n, k, jobs=jobs)
        key = (n, 3, (n + k) // 3)
        row = {"type": key, "seconds": None}
        if which == 3:
            row["mni"] = sum(1 for g in cat.blind_graphs() if mni_test_square(g.adj, cert=True))
        else:
            row["blind"], row["preserving"] = cat.l_count, cat.lp_count
        row["seconds"] = round(time.time() - t0, 2)
        log.info("table %d row %s done in %.1fs", which, key, row["seconds"])
        rows.append(row)
    return rows


def cmd_tables(ctx: Context) -> None:
    a = ctx.args
    failures = []
    for which in a.which:
        max_2n = a.max if a.max is not None else DESK_MAX[which]
        if max_2n > DESK_MAX[which] and not a.allow_large:
            raise CliInputError(f"table {which}: --max {max_2n} exceeds the desk-scale cap {DESK_MAX[which]}"
                                " (pass --allow-large to try anyway)")
        expected = {1: EXPECTED_T1, 2: EXPECTED_T2, 3: EXPECTED_T3}[which]
        ctx.emit(f"table {which}: {TABLE_TITLES[which]}")
        for row in _table_rows(which, max_2n, a.jobs):
            key = row["type"]
            got = row["mni"] if which == 3 else (row["blind"], row["preserving"])
            want = expected.get(key)
            label = "({},{},{})".format(*key)
            shown = str(got) if which == 3 else f"{got[0]}/{got[1]}"
            if a.no_expected or want is None:
                ctx.emit(f"  {label:<12} {shown}")
                continue
            status = "ok" if got == want else "MISMATCH"
            if got != want:
                failures.append(f"table {which} {label}: got {got}, expected {want}")
            wshown = str(want) if which == 3 else f"{want[0]}/{want[1]}"
            ctx.emit(f"  {label:<12} {shown:<10} expected {wshown:<10} {status}")
    if failures:
        for f in failures:
            ctx.emit(f)
        raise CliFailure("table mismatch")


def _figure_checks(fig) -> dict:
    G, p = fig.graph, fig.params
    cert = certify(G, p.k)
    res: dict = {"params": str(p), "certified": cert is not None and cert.params == p}
    if cert is None:
        return res
    cert.check()
    claims = fig.claims
    if "has_3rung" in claims:
        res["has_3rung"] = bool(cons.find_3rung_ladders(G)) == claims["has_3rung"]
    if "has_4rung" in claims:
        res["has_4rung"] = cons.has_4rung_ladder(G) == claims["has_4rung"]
    if "partitionable" in claims:
        res["partitionable"] = bool(cons.find_biclique_partitions(G)) == claims["partitionable"]
    if "mate_c0" in claims:
        res["mate_c0"] = cert.mates[0] == frozenset(claims["mate_c0"])
    return res


def cmd_figures(ctx: Context) -> None:
    a = ctx.args
    report = {}
    bad = []
    for name in sorted(FIGURES):
        fig = FIGURES[name]
        res = _figure_checks(fig)
        if a.out:
            ctx.write(Path(a.out) / f"{name}.lmx", fig.graph.to_lmx())
        res["sha256"] = _digest(fig.graph.to_lmx())
        report[name] = res
        if not all(v for k, v in res.items() if isinstance(v, bool)):
            bad.append(name)
    ctx.emit_json(report)
    if bad:
        raise CliFailure(f"figure checks failed: {', '.join(bad)}")


# -- argument parsing -----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 2 with usage, as argparse does, but keep it testable
        self.print_usage(sys.stderr)
        raise CliInputError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lehmangraphs", description="Lehman matrices, their constructions and covering polyhedra.")
    p.add_argument("--log-level", default="WARNING")
    p.add_argument("--manifest", help="write a run manifest (JSON) to this path")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("verify", cmd_verify, "certify a .lmx matrix as a Lehman matrix")
    sp.add_argument("path")
    sp.add_argument("--k", type=int)
    sp.add_argument("--out", help="directory for the partner matrix")

    sp = add("generate", cmd_generate, "list connected cubic bipartite graphs")
    sp.add_argument("--order", type=int, required=True, help="total vertex count 2n")
    sp.add_argument("--mode", choices=[PRESERVING, BLIND], default=PRESERVING)
    sp.add_argument("--prune", action="store_true", help="apply the ladder-twin prune")
    sp.add_argument("--format", choices=["lmx", "json", "b6"], default="b6")
    sp.add_argument("--out")
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("catalogue", cmd_catalogue, "exhaustive catalogue of r-regular Lehman matrices")
    sp.add_argument("--order", type=int, required=True, help="total vertex count 2n")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--r", type=int, default=3)
    sp.add_argument("--mode", choices=[PRESERVING, BLIND], default=PRESERVING)
    sp.add_argument("--out")
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("closure", cmd_closure, "close seeds under ladder insertion")
    sp.add_argument("--k", type=int, choices=[1, -1], default=1)
    sp.add_argument("--max", type=int, required=True, help="largest total vertex count 2n")
    sp.add_argument("--mode", choices=["sufficient", "exhaustive"], default="sufficient")
    sp.add_argument("--base", nargs="*", help=".lmx seed graphs (default: Möbius-10 or the cube)")
    sp.add_argument("--no-expand", dest="expand", action="store_false",
                    help="skip biclique expansions of the opposite-sign catalogue")
    sp.add_argument("--compare", action="store_true", help="compare every level with the exhaustive search")
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("ladders", cmd_ladders, "list 3-rung ladder segments")
    sp.add_argument("path")

    sp = add("reduce", cmd_reduce, "remove a 3-rung ladder segment")
    sp.add_argument("path")
    sp.add_argument("--index", type=int, default=0)
    sp.add_argument("--k", type=int)
    sp.add_argument("--out")
    sp.add_argument("--format", choices=["lmx", "json"], default="lmx")

    sp = add("expandable", cmd_expandable, "edge pairs where a ladder can be inserted")
    sp.add_argument("path")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--exhaustive", action="store_true")

    sp = add("insert", cmd_insert, "insert a 3-rung ladder along two edges")
    sp.add_argument("path")
    sp.add_argument("--e", type=int, nargs=2, required=True, metavar=("BLACK", "WHITE"))
    sp.add_argument("--f", type=int, nargs=2, required=True, metavar=("BLACK", "WHITE"))
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--out")
    sp.add_argument("--format", choices=["lmx", "json"], default="lmx")

    sp = add("partitions", cmd_partitions, "partitions into K_{r-1,r-1} blocks")
    sp.add_argument("path")

    sp = add("compress", cmd_compress, "contract each block of a biclique partition")
    sp.add_argument("path")
    sp.add_argument("--index", type=int, default=0)
    sp.add_argument("--out")
    sp.add_argument("--format", choices=["lmx", "json"], default="lmx")

    sp = add("expand", cmd_expand, "blow a perfect matching up into bicliques")
    sp.add_argument("path")
    sp.add_argument("--k", type=int, required=True, help="sign of the input graph")
    sp.add_argument("--matching", type=int, nargs="*", help="white mate of each black vertex")
    sp.add_argument("--out")
    sp.add_argument("--format", choices=["lmx", "json"], default="lmx")

    sp = add("vertices", cmd_vertices, "vertices and rays of the covering polyhedron")
    sp.add_argument("path")

    sp = add("mni", cmd_mni, "unique-fractional-vertex test for a square matrix")
    sp.add_argument("path")
    sp.add_argument("--exact", action="store_true", help="also check all single deletions and contractions")

    sp = add("blocker", cmd_blocker, "minimal transversals of a clutter file")
    sp.add_argument("path")

    sp = add("minor", cmd_minor, "delete and contract vertices of a clutter file")
    sp.add_argument("path")
    sp.add_argument("--delete", type=int, nargs="*")
    sp.add_argument("--contract", type=int, nargs="*")

    sp = add("plane", cmd_plane, "lines of the projective plane of order q")
    sp.add_argument("--q", type=int, choices=[2, 3], required=True)

    sp = add("blocking-sets", cmd_blocking_sets, "all blocking sets of a small plane")
    sp.add_argument("--q", type=int, choices=[2, 3], required=True)

    sp = add("fano-minor-check", cmd_fano_minor_check, "look for a Fano minor in the augmented ternary plane")
    sp.add_argument("--lines-only", action="store_true", help="drop the triangle 0-corners")
    sp.add_argument("--configuration-only", action="store_true",
                    help="keep only the four lines and three 0-corners of the configuration")
    sp.add_argument("--all", action="store_true", help="require every configuration to work")

    sp = add("tables", cmd_tables, "recompute the catalogue count tables")
    sp.add_argument("--which", type=int, nargs="+", choices=[1, 2, 3], default=[1, 2, 3])
    sp.add_argument("--max", type=int, help="largest total vertex count 2n")
    sp.add_argument("--no-expected", action="store_true", help="print counts without comparing")
    sp.add_argument("--allow-large", action="store_true", help="lift the desk-scale cap")
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("figures", cmd_figures, "write and check the transcribed example graphs")
    sp.add_argument("--out")
    return p


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    logging.basicConfig(level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    ctx = Context(args)
    t0 = time.time()
    code = 0
    try:
        args.func(ctx)
    except (CliInputError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = 2
    except (CliFailure, AssertionError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        code = 1
    out = "\n".join(ctx.lines)
    if out:
        print(out)
    if args.manifest:
        ctx.manifest.wall_time = round(time.time() - t0, 3)
        ctx.manifest.output_digests["stdout"] = _digest(out)
        ctx.manifest.parameters["exit_code"] = code
        Path(args.manifest).write_text(ctx.manifest.to_json() + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
