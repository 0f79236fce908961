"""Command-line front end: ``evenorient <command> GRAPH [options]``.

GRAPH is a file path, ``-`` for stdin, or ``catalog:<name>``.  Output is a
single JSON document on stdout.  Exit status: 0 computed, 1 negative
verdict, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from evenorient import catalog as cat
from evenorient import solver, structure, wagner
from evenorient.alternating import CycleCapError, enumerate_alternating_cycles
from evenorient.graph import Graph, GraphError, is_bipartite, parse_edge_pairs, parse_graph
from evenorient.matching import (
    OneFactor,
    enumerate_perfect_matchings,
    factor_from_labels,
    first_perfect_matching,
    is_one_extendible,
)
from evenorient.splitting import e0_split, glue_labels

OK, NEGATIVE, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class Loaded:
    def __init__(self, graph: Graph, entry: cat.CatalogEntry | None) -> None:
        self.graph = graph
        self.entry = entry


def load_graph(source: str) -> Loaded:
    if source.startswith("catalog:"):
        name = source.split(":", 1)[1]
        try:
            entry = cat.entry(name)
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
        return Loaded(entry.graph, entry)
    try:
        text = sys.stdin.read() if source == "-" else open(source, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None
    return Loaded(parse_graph(text), None)


def resolve_factor(loaded: Loaded, text: str | None) -> OneFactor:
    """``--factor`` as an edge list, a catalog factor name, or the default."""
    g, entry = loaded.graph, loaded.entry
    if text is None:
        if entry is not None:
            return entry.factor(next(iter(entry.factor_pairs)))
        return first_perfect_matching(g)
    if entry is not None and text in entry.factor_pairs:
        return entry.factor(text)
    return factor_from_labels(g, parse_edge_pairs(text))


def _edges_json(g: Graph, idxs) -> list:
    return [list(g.edge_labels(i)) for i in sorted(idxs)]


# -- commands -----------------------------------------------------------------


def cmd_matchings(args, loaded: Loaded) -> tuple[dict, int]:
    g = loaded.graph
    pms = enumerate_perfect_matchings(g)
    return {"count": len(pms), "matchings": [_edges_json(g, m) for m in pms]}, OK


def cmd_extendible(args, loaded: Loaded) -> tuple[dict, int]:
    g = loaded.graph
    ok, bad = is_one_extendible(g)
    out = {"one_extendable": ok, "bad_edge": list(g.edge_labels(bad)) if bad is not None else None}
    return out, OK if ok else NEGATIVE


def cmd_altcycles(args, loaded: Loaded) -> tuple[dict, int]:
    g = loaded.graph
    f = resolve_factor(loaded, args.factor)
    cycles = enumerate_alternating_cycles(g, f)
    return {"factor": _edges_json(g, f), "count": len(cycles),
            "cycles": [c.labels(g) for c in cycles]}, OK


def cmd_orient(args, loaded: Loaded) -> tuple[dict, int]:
    g = loaded.graph
    f = resolve_factor(loaded, args.factor)
    sys_ = solver.build_parity_system(g, f)
    if args.target == "even" and is_bipartite(g):
        # bipartite graphs have the canonical even orientation
        verdict = solver.OrientationVerdict("even", True,
                                            witness=solver.canonical_orientation(g, f))
    else:
        verdict = solver.solve_orientation(sys_, args.target)
    solver.validate_verdict(sys_, verdict)
    out = solver.verdict_json(sys_, verdict)
    out["factor"] = _edges_json(g, f)
    return out, OK if verdict.exists else NEGATIVE


def cmd_zerosum(args, loaded: Loaded) -> tuple[dict, int]:
    g = loaded.graph
    f = resolve_factor(loaded, args.factor)
    sys_ = solver.build_parity_system(g, f)
    basis = solver.zero_sum_basis(sys_)
    return {"factor": _edges_json(g, f), "cycles": len(sys_.cycles), "dimension": len(basis),
            "basis": [c.to_json_obj(g) for c in basis]}, OK


def cmd_pfaffian(args, loaded: Loaded) -> tuple[dict, int]:
    answer = solver.is_pfaffian(loaded.graph)
    return {"pfaffian": answer}, OK if answer else NEGATIVE


def cmd_bad(args, loaded: Loaded) -> tuple[dict, int]:
    g = loaded.graph
    f = resolve_factor(loaded, args.factor)
    v = solver.is_bad(g, f)
    out = {"bad": v.bad, "factor": _edges_json(g, f),
           "certificate": v.certificate.to_json_obj(g) if v.certificate else None}
    return out, NEGATIVE if v.bad else OK


def cmd_wagner(args, loaded: Loaded) -> tuple[dict, int]:
    g = loaded.graph
    if args.factor is None:
        cert = wagner.wagner_membership(g)
    else:
        cert = wagner.w_factor_certificate(g, resolve_factor(loaded, args.factor))
    out = {"member": cert is not None, "certificate": cert.to_json_obj(g) if cert else None}
    return out, OK if cert else NEGATIVE


def cmd_earify(args, loaded: Loaded) -> tuple[dict, int]:
    g = loaded.graph
    f = resolve_factor(loaded, args.factor)
    dec = structure.f_reducible_ear_decomposition(g, f)
    return dec.to_json_obj(), OK


def cmd_cuts(args, loaded: Loaded) -> tuple[dict, int]:
    g = loaded.graph
    reports = structure.enumerate_tight_cuts(g, with_shores=False)
    if not args.all:
        reports = [r for r in reports if r.tight and not r.trivial]
    tagged = structure.barrier_and_2separation_cuts(g) if is_one_extendible(g)[0] else []
    return {"cuts": [r.to_json_obj(g) for r in reports],
            "barrier_and_2separation": [t.to_json_obj(g) for t in tagged]}, OK


def cmd_bricks(args, loaded: Loaded) -> tuple[dict, int]:
    g = loaded.graph
    pieces = structure.tight_cut_decomposition(g)
    return {"brick": structure.is_brick_by_definition(g), "brace": structure.is_brace(g),
            "pieces": [p.to_json_obj() for p in pieces]}, OK


def cmd_split(args, loaded: Loaded) -> tuple[dict, int]:
    g = loaded.graph
    pairs = parse_edge_pairs(args.edge)
    if len(pairs) != 1:
        raise InputError("--edge takes exactly one edge")
    res = e0_split(g, g.edge_by_labels(*pairs[0]), args.choice)
    return {"graph": res.graph.to_json_obj(), "is_simple": res.is_simple,
            "added": [list(p) for p in res.added]}, OK


def cmd_glue(args, loaded: Loaded) -> tuple[dict, int]:
    g = loaded.graph
    pairs = parse_edge_pairs(args.edges)
    if len(pairs) != 2:
        raise InputError("--edges takes exactly two edges")
    labels = tuple(args.labels.split(","))
    if len(labels) != 2:
        raise InputError("--labels takes two comma-separated names")
    res = glue_labels(g, pairs[0], pairs[1], new_labels=labels)
    return {"graph": res.graph.to_json_obj(), "e0": list(res.e0), "choice": res.choice}, OK


def cmd_catalog(args, loaded: Loaded | None) -> tuple[dict, int]:
    if args.name is None:
        return {"entries": list(cat.NAMES)}, OK
    try:
        return cat.entry(args.name).to_json_obj(), OK
    except KeyError as exc:
        raise InputError(exc.args[0]) from None


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="evenorient",
                                description="Even and odd F-orientations of small graphs.")
    p.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, func: Callable, help_: str, factor: bool = False) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", help="file path, - for stdin, or catalog:<name>")
        if factor:
            sp.add_argument("--factor", help='edge list such as "1 2,3 4", or a catalog factor name')
        sp.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(func=func)
        return sp

    add("matchings", cmd_matchings, "list perfect matchings")
    add("extendible", cmd_extendible, "test 1-extendability")
    add("altcycles", cmd_altcycles, "list F-alternating cycles", factor=True)
    o = add("orient", cmd_orient, "decide an even or odd F-orientation", factor=True)
    o.add_argument("--target", choices=("even", "odd"), default="even")
    add("zerosum", cmd_zerosum, "basis of zero-sum cycle sets", factor=True)
    add("pfaffian", cmd_pfaffian, "decide the Pfaffian property")
    add("bad", cmd_bad, "search for an odd-parity zero-sum set", factor=True)
    add("wagner", cmd_wagner, "generalized Wagner membership (with --factor: W-factor test)",
        factor=True)
    add("earify", cmd_earify, "F-reducible ear decomposition", factor=True)
    c = add("cuts", cmd_cuts, "non-trivial tight cuts and barrier/2-separation cuts")
    c.add_argument("--all", action="store_true", help="report every cut, not just tight ones")
    add("bricks", cmd_bricks, "tight cut decomposition")
    s = add("split", cmd_split, "split a cubic graph at an edge")
    s.add_argument("--edge", required=True, help='the edge, e.g. "x y"')
    s.add_argument("--choice", type=int, choices=(1, 2), default=1)
    gl = add("glue", cmd_glue, "glue two independent edges")
    gl.add_argument("--edges", required=True, help='two edges, e.g. "1 5,2 6"')
    gl.add_argument("--labels", default="x,y", help="names of the two new vertices")
    cp = sub.add_parser("catalog", help="list built-in graphs or show one")
    cp.add_argument("name", nargs="?")
    cp.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    cp.set_defaults(func=cmd_catalog)
    return p


def _emit(obj: Any, pretty: bool) -> None:
    print(json.dumps(obj, indent=2 if pretty else None, default=str))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        loaded = load_graph(args.graph) if hasattr(args, "graph") else None
        out, code = args.func(args, loaded)
    except (InputError, GraphError, CycleCapError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else type(exc).__name__
        _emit({"error": str(msg)}, args.pretty)
        return BAD_INPUT
    _emit(out, args.pretty)
    return code


if __name__ == "__main__":
    sys.exit(main())
