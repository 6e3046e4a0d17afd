"""Command-line interface: ``deltamin <subcommand> [options]``.

Graph arguments accept a built-in name (``PETERSEN``, ``G5``, ``P_PRIME``,
``K4``, ``K33``, ``C7``), a graph6 string, a path to a file whose first
non-empty line is graph6, or ``-`` for stdin. Exit status: 2 for bad input,
1 when a verification fails, 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .colouring import BudgetExceeded, InvariantViolation, decide_three_colourable
from .constructions import UnknownName, dot_product, make_named, reduce_all
from .factors import NoTwoFactor, PreconditionFailed, bound_suite, enumerate_two_factors, permutation_graph_check, verify_c5_factors
from .graph import Edge, Graph, GraphError, edge
from .graph6 import emit_graph6, parse_graph6, read_graph6_lines
from .report import Report, fraction_text, to_dot, witness_list
from .smin import NotThreeColourableRemainder, s_exact
from .structure import CheckResult, NotDeltaMinimumEvidence, classify_delta_edges, independent_cover, payan_strong_matching, verify_structure

CORPUS = "cubic_4_10.g6"


class BadInput(Exception):
    pass


def load_graph(spec: str) -> tuple[Graph, str | None]:
    """Resolve a graph argument; returns the graph and its name when it was named."""
    if spec == "-":
        lines = list(read_graph6_lines(sys.stdin.read()))
        if not lines:
            raise BadInput("no graph on stdin")
        return parse_graph6(lines[0]), None
    try:
        return make_named(spec), spec.upper()
    except UnknownName:
        pass
    path = Path(spec)
    if path.is_file():
        lines = list(read_graph6_lines(path.read_text()))
        if not lines:
            raise BadInput(f"{spec}: no graph6 line")
        return parse_graph6(lines[0]), None
    return parse_graph6(spec), None


def corpus_text() -> str:
    return resources.files("deltamin").joinpath("data", CORPUS).read_text()


def _pair(text: str) -> Edge:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise BadInput(f"expected 'u,v', got {text!r}") from exc
    return edge(u, v)


def structure_checks(g: Graph, budget: int = 0) -> tuple[list[CheckResult], object]:
    res = s_exact(g, budget)
    part = classify_delta_edges(res.witness)
    return verify_structure(res.witness, part), res


def analyse(g: Graph, name: str | None = None, budget: int = 0, allow_large: bool = False, timing: bool = False) -> Report:
    start = time.perf_counter()
    checks, res = structure_checks(g, budget)
    metrics = bound_suite(g, allow_large, budget, res)
    rep = Report(graph=emit_graph6(g), name=name, metrics=metrics, checks=checks, witness=witness_list(res.witness))
    if timing:
        rep.timing = round(time.perf_counter() - start, 6)
    return rep


def _print_colouring(c, out) -> None:
    for (u, v), col in zip(c.graph.edges, c.colours):
        print(f"{u} {v} {col.label}", file=out)


def cmd_colour(args, out) -> int:
    g, name = load_graph(args.graph)
    c = s_exact(g, args.budget).witness
    if args.format == "dot":
        out.write(to_dot(c, name or "G"))
    elif args.format == "json":
        print(json.dumps(witness_list(c)), file=out)
    else:
        _print_colouring(c, out)
    return 0


def cmd_smin(args, out) -> int:
    g, _ = load_graph(args.graph)
    print(s_exact(g, args.budget).s, file=out)
    return 0


def cmd_gamma(args, out) -> int:
    g, _ = load_graph(args.graph)
    print(fraction_text(s_exact(g, args.budget).gamma), file=out)
    return 0


def cmd_metrics(args, out) -> int:
    g, name = load_graph(args.graph)
    print(analyse(g, name, args.budget, args.opt_in_large, args.timing).to_json(indent=args.indent), file=out)
    return 0


def verification_records(g: Graph, budget: int = 0, allow_large: bool = False) -> list[CheckResult]:
    checks, res = structure_checks(g, budget)
    records = list(checks)
    metrics = bound_suite(g, allow_large, budget, res)
    records += [CheckResult(f"bound:{b.name}", b.status, b.detail) for b in metrics.bounds]
    records.append(CheckResult("extremal", "PASS", metrics.extremal.value))
    if g.m:
        strong = payan_strong_matching(g, res.witness)
        cover = independent_cover(g, strong)
        rest = g.isolate(cover)
        ok = len(cover) == res.s and decide_three_colourable(rest, budget) is not None
        records.append(CheckResult("independent_cover", "PASS" if ok else "FAIL", f"cover {sorted(cover)}"))
    for label, fn in (("c5_factors", verify_c5_factors), ("permutation_graph", permutation_graph_check)):
        try:
            records.append(fn(g, res.s, allow_large))
        except (PreconditionFailed, NoTwoFactor, BudgetExceeded) as exc:
            records.append(CheckResult(label, "SKIPPED", str(exc) or type(exc).__name__))
    return records


def cmd_verify(args, out) -> int:
    records = verification_records(load_graph(args.graph)[0], args.budget, args.opt_in_large)
    for r in records:
        print(f"{r.status} {r.name} {r.detail}".rstrip(), file=out)
    return 1 if any(r.status == "FAIL" for r in records) else 0


def cmd_payan(args, out) -> int:
    g, _ = load_graph(args.graph)
    strong = payan_strong_matching(g, s_exact(g, args.budget).witness)
    _print_colouring(strong, out)
    print("cover " + " ".join(map(str, sorted(independent_cover(g, strong)))), file=out)
    return 0


def cmd_factors(args, out) -> int:
    g, _ = load_graph(args.graph)
    try:
        factors = enumerate_two_factors(g, args.opt_in_large)
    except NoTwoFactor:
        factors = []
    for f in factors:
        so = f.shortest_odd
        rec = {"cycles": [list(c) for c in f.cycles], "lengths": f.lengths, "odd_count": f.odd_count, "shortest_odd": "inf" if so == float("inf") else so}
        print(json.dumps(rec, sort_keys=True), file=out)
    if factors:
        gp = max(f.shortest_odd for f in factors)
        print(f"factors {len(factors)} oddness {min(f.odd_count for f in factors)} g_plus {gp if gp != float('inf') else 'inf'}", file=out)
    else:
        print("factors 0", file=out)
    return 0


def cmd_generate(args, out) -> int:
    print(emit_graph6(make_named(args.name)), file=out)
    return 0


def cmd_reduce(args, out) -> int:
    g, _ = load_graph(args.graph)
    h, steps = reduce_all(g)
    for st in steps:
        print(f"# {st.kind} removed {list(st.removed_vertices)}", file=sys.stderr)
    print(emit_graph6(h), file=out)
    return 0


def _first_disjoint_pair(g: Graph) -> tuple[Edge, Edge]:
    for i, e in enumerate(g.edges):
        for f in g.edges[i + 1 :]:
            if not set(e) & set(f):
                return e, f
    raise BadInput("first graph has no two disjoint edges")


def cmd_dotproduct(args, out) -> int:
    g1, _ = load_graph(args.first)
    g2, _ = load_graph(args.second)
    if args.e1 and args.f1:
        e1, f1 = _pair(args.e1), _pair(args.f1)
    else:
        e1, f1 = _first_disjoint_pair(g1)
    uv = _pair(args.uv) if args.uv else g2.edges[0]
    print(emit_graph6(dot_product(g1, e1, f1, g2, uv, args.alt_pairing)), file=out)
    return 0


def scan_line(item: tuple[int, str, int, bool]) -> str:
    lineno, line, budget, allow_large = item
    try:
        rep = analyse(parse_graph6(line), None, budget, allow_large)
        d = rep.to_dict()
    except (GraphError, NotThreeColourableRemainder, BudgetExceeded, ValueError) as exc:
        d = {"error": f"{type(exc).__name__}: {exc}", "input": line}
    d["line"] = lineno
    return json.dumps(d, sort_keys=True)


def _scan_items(lines: Iterable[str], budget: int, allow_large: bool):
    for i, line in enumerate(lines, 1):
        yield i, line.strip(), budget, allow_large


def cmd_scan(args, out) -> int:
    if args.file is None:
        text = corpus_text()
    elif args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise BadInput(str(exc)) from exc
    lines = [ln for ln in text.splitlines() if ln.strip()]
    items = _scan_items(lines, args.budget, args.opt_in_large)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            for rec in pool.map(scan_line, items, chunksize=4):
                print(rec, file=out)
    else:
        for item in items:
            print(scan_line(item), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=0, help="node budget for each 3-colouring search (0 = unlimited)")
    common.add_argument("--opt-in-large", action="store_true", help="allow 2-factor enumeration on more than 24 vertices")
    common.add_argument("--alt-pairing", action="store_true", help="dot product: use the alternative attachment pairing")

    p = argparse.ArgumentParser(prog="deltamin", description="Parsimonious edge-colouring of graphs with maximum degree 3.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_text: str, graph: bool = True):
        sp = sub.add_parser(name, help=help_text, parents=[common])
        if graph:
            sp.add_argument("graph", help="name, graph6 string, file, or '-'")
        sp.set_defaults(func=fn)
        return sp

    add("colour", cmd_colour, "print a delta-minimum proper 4-edge-colouring").add_argument("--format", choices=("text", "dot", "json"), default="text")
    add("smin", cmd_smin, "print s(G)")
    add("gamma", cmd_gamma, "print gamma(G) as p/q")
    sp = add("metrics", cmd_metrics, "full JSON report")
    sp.add_argument("--timing", action="store_true", help="include wall-clock time (breaks byte stability)")
    sp.add_argument("--indent", type=int, default=None)
    add("verify", cmd_verify, "run every structural check and bound")
    add("payan", cmd_payan, "print a colouring whose delta class is a strong matching")
    add("factors", cmd_factors, "list 2-factors with odd-cycle statistics")
    add("generate", cmd_generate, "emit a named graph as graph6", graph=False).add_argument("name")
    add("reduce", cmd_reduce, "apply pendant and triangle reductions to a fixpoint")
    sp = add("dotproduct", cmd_dotproduct, "dot product of two cubic graphs", graph=False)
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("--e1", help="edge 'a,b' of the first graph")
    sp.add_argument("--f1", help="edge 'c,d' of the first graph")
    sp.add_argument("--uv", help="edge 'u,v' of the second graph")
    sp = add("scan", cmd_scan, "one JSON line per graph6 line (bundled corpus by default)", graph=False)
    sp.add_argument("file", nargs="?", default=None)
    sp.add_argument("--jobs", type=int, default=1)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (BadInput, GraphError, NotThreeColourableRemainder, PreconditionFailed) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return 2
    except (InvariantViolation, NotDeltaMinimumEvidence) as exc:
        print(f"verification failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
