"""Command-line interface."""

import argparse
import sys

from . import batch as batch_mod
from .dual_wood import check_crossing_vertices, completion, dual_wood
from .errors import CapExceeded, FormatError, PlanarGraphError, VerifierAlarm
from .export import draw_schnyder, to_dot
from .extract import run_pipeline
from .formats import (
    dumps, graph_to_json, read_planar_code, read_rot, write_planar_code, write_rot, write_wood,
)
from .generators import KINDS, gen
from .opp import check_index_monotonicity, compatible_opp, parent_edges, validate_opp
from .oracle import best_degree_pair, count_spanning_trees, enumerate_spanning_trees, enumerate_woods
from .planar import suspend
from .schnyder import compute_wood, validate_wood


def _read_graph(path, fmt, index=0):
    if fmt == "planar_code":
        data = sys.stdin.buffer.read() if path == "-" else open(path, "rb").read()
        graphs = read_planar_code(data)
        if not 0 <= index < len(graphs):
            raise FormatError(f"file holds {len(graphs)} graphs, asked for #{index}")
        return graphs[index]
    text = sys.stdin.read() if path == "-" else open(path).read()
    return read_rot(text)


def _emit(args, text):
    if isinstance(text, bytes):
        if args.out:
            with open(args.out, "wb") as fh:
                fh.write(text)
        else:
            sys.stdout.buffer.write(text)
        return
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_json(rep):
    return {"ok": rep.ok, "violations": [str(v) for v in rep]}


def cmd_gen(args):
    G = gen(args.kind, args.n, args.seed)
    _emit(args, write_planar_code([G]) if args.format == "planar_code" else write_rot(G))
    return 0


def cmd_wood(args):
    G = _read_graph(args.input, args.format, args.index)
    S = compute_wood(suspend(G))
    _emit(args, write_wood(S))
    return 0


def cmd_dual(args):
    G = _read_graph(args.input, args.format, args.index)
    Gs = suspend(G)
    S = compute_wood(Gs)
    Sd, corr = dual_wood(S)
    rep = validate_wood(Sd.host, Sd)
    crossings = check_crossing_vertices(completion(Gs, S, Sd, corr))
    out = {"dual_graph": graph_to_json(Sd.host.base), "dual_wood": write_wood(Sd),
           "dual_wood_valid": _report_json(rep), "crossings_valid": _report_json(crossings)}
    _emit(args, dumps(out) + "\n")
    return 0 if rep.ok and crossings.ok else 1


def cmd_opp(args):
    G = _read_graph(args.input, args.format, args.index)
    S = compute_wood(suspend(G))
    P = compatible_opp(S, args.color)
    par = parent_edges(S, P)
    rep = validate_opp(G, P)
    mono = check_index_monotonicity(S, P)
    out = dict(P.to_json(), parent_path=list(par.parent_path), parent_edge=list(par.parent_edge),
               report=_report_json(rep), monotonicity=_report_json(mono))
    _emit(args, dumps(out) + "\n")
    return 0 if rep.ok and mono.ok else 1


def cmd_candidate(args):
    G = _read_graph(args.input, args.format, args.index)
    res = run_pipeline(G, strict=False)
    out = {"H": res.H.to_json(), "H_dual": dict(res.H_dual.to_json(), x=res.H_dual.x),
           "reports": {k: _report_json(v) for k, v in sorted(res.reports.items())},
           "certificates": dict(sorted(res.certificates.items()))}
    _emit(args, dumps(out) + "\n")
    return 0 if res.ok else 1


def cmd_extract(args):
    G = _read_graph(args.input, args.format, args.index)
    res = run_pipeline(G, strict=False)
    if res.pair is None:
        _emit(args, dumps({"certificates": dict(sorted(res.certificates.items()))}) + "\n")
        return 1
    _emit(args, dumps(res.pair.to_json()) + "\n")
    return 0 if res.ok else 1


def cmd_oracle(args):
    G = _read_graph(args.input, args.format, args.index)
    out = {}
    if args.count:
        out["count"] = count_spanning_trees(G)
    if args.enumerate:
        out["trees"] = sorted(sorted(T) for T in enumerate_spanning_trees(G, args.cap))
    if args.best_pair:
        out["best_pair"] = list(best_degree_pair(G, args.cap))
        pair = run_pipeline(G).pair
        out["pipeline_pair"] = [pair.max_deg_tree, pair.max_deg_cotree]
    if args.woods:
        out["woods"] = [write_wood(S) for S in enumerate_woods(suspend(G), args.cap)]
    _emit(args, dumps(out) + "\n")
    return 0


def cmd_export(args):
    G = _read_graph(args.input, args.format, args.index)
    if args.what == "graph":
        text = to_dot(G)
    else:
        res = run_pipeline(G, strict=False)
        text = {
            "wood": lambda: to_dot(res.S),
            "dual_wood": lambda: to_dot(res.Sd),
            "completion": lambda: to_dot(res.completion),
            "H": lambda: to_dot(res.H),
            "H_dual": lambda: to_dot(res.H_dual),
            "pair": lambda: to_dot((G, res.dual.graph, res.pair)),
        }[args.what]()
    _emit(args, text)
    return 0


def cmd_draw(args):
    G = _read_graph(args.input, args.format, args.index)
    svg, crossings = draw_schnyder(compute_wood(suspend(G)))
    _emit(args, svg)
    if crossings:
        print(f"warning: {len(crossings)} crossing edge pairs", file=sys.stderr)
        return 1
    return 0


def cmd_batch(args):
    if args.builtin:
        items = batch_mod.builtin_items(args.seed)
    elif args.corpus:
        items = batch_mod.load_corpus(args.corpus)
    else:
        print("batch needs a corpus directory or --builtin", file=sys.stderr)
        return 2
    records = batch_mod.batch_verify(items, seed=args.seed, oracle_cap=args.cap,
                                     workers=args.workers)
    report = args.report or args.out
    if report:
        batch_mod.write_reports(records, report)
    else:
        sys.stdout.write(batch_mod.render_jsonl(records))
    failed = [r["name"] for r in records if r.get("passed") is False]
    flagged = [r["name"] for r in records if r.get("error")]
    print(f"{len(records)} graphs, {len(failed)} failed, {len(flagged)} flagged", file=sys.stderr)
    return batch_mod.exit_code(records)


def build_parser():
    p = argparse.ArgumentParser(prog="schnyder-cotree",
                                description="Schnyder woods and degree-5 tree/co-tree pairs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["rot", "planar_code"], default="rot")
    p.add_argument("--out", help="output file (default: stdout)")
    # the same flags are accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=["rot", "planar_code"], default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def with_input(sp):
        sp.add_argument("input", help="graph file, '-' for stdin")
        sp.add_argument("--index", type=int, default=0, help="graph number in a planar_code file")
        return sp

    g = add("gen", help="generate a corpus graph")
    g.add_argument("kind", choices=KINDS)
    g.add_argument("n", type=int, nargs="?", help="rim size (wheel) or vertex count (stacked)")
    g.set_defaults(func=cmd_gen)

    with_input(add("wood", help="compute a Schnyder wood")).set_defaults(func=cmd_wood)
    with_input(add("dual", help="dual wood and crossing check")).set_defaults(func=cmd_dual)
    o = with_input(add("opp", help="compatible ordered path partition"))
    o.add_argument("--color", type=int, choices=[1, 2, 3], default=2)
    o.set_defaults(func=cmd_opp)
    with_input(add("candidate", help="H and H° with verifier reports")).set_defaults(
        func=cmd_candidate)
    with_input(add("extract", help="certified tree/co-tree pair")).set_defaults(
        func=cmd_extract)

    q = with_input(add("oracle", help="brute-force references"))
    q.add_argument("--count", action="store_true")
    q.add_argument("--enumerate", action="store_true")
    q.add_argument("--best-pair", action="store_true")
    q.add_argument("--woods", action="store_true")
    q.add_argument("--cap", type=int, default=batch_mod.ORACLE_CAP)
    q.set_defaults(func=cmd_oracle)

    x = with_input(add("export", help="DOT export"))
    x.add_argument("--what", choices=["graph", "wood", "dual_wood", "completion", "H", "H_dual", "pair"],
                   default="wood")
    x.set_defaults(func=cmd_export)
    with_input(add("draw", help="SVG face-count drawing")).set_defaults(func=cmd_draw)

    b = add("batch", help="verify a corpus and write reports")
    b.add_argument("corpus", nargs="?", help="directory of .rot / .pc files")
    b.add_argument("--builtin", action="store_true", help="use the built-in corpus")
    b.add_argument("--report", help="JSON-lines report path; a .csv summary is written beside it")
    b.add_argument("--workers", type=int, default=None)
    b.add_argument("--cap", type=int, default=batch_mod.ORACLE_CAP)
    b.set_defaults(func=cmd_batch)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, PlanarGraphError, CapExceeded, OSError, ValueError) as ex:
        print(f"error: {type(ex).__name__}: {ex}", file=sys.stderr)
        return 2
    except VerifierAlarm as ex:
        print(f"verifier alarm: {ex}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
