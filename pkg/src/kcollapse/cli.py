"""Command-line entry point: ``kcollapse <subcommand> ...``.

Exit status is 0 on success, 1 on usage errors and 2 on data errors.
Results go to ``--out`` or standard output; progress goes to standard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys

from . import baselines, solvers
from .corona import core_strength, is_corona
from .cores import compute_cores
from .evaluation import METHODS, SCHEMA_VERSION, MetricsReport, case_trace, compare, resilience_summary, sweep
from .graph import Graph, GraphError, GraphView, read_edge_list
from .impact import calculate_impact
from .oracle import OracleInfeasible, exact_nr


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _default_threads() -> int:
    env = os.environ.get("KCOLLAPSE_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"KCOLLAPSE_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--out", help="output path (default: standard output)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--skip-header", action="store_true", help="ignore the first data line of the input")
    common.add_argument("-v", "--verbose", action="store_true")

    solve = _Parser(add_help=False)
    solve.add_argument("--method", choices=METHODS, default="tnc")
    solve.add_argument("--runs", type=int, default=None)
    solve.add_argument("--eps2", type=float, default=0.1)
    solve.add_argument("--timeout-secs", type=float, default=60.0)
    solve.add_argument("--atnc-fallback", choices=("random", "min_cs"), default="random")
    solve.add_argument("--sv-refresh", action="store_true")

    p = _Parser(prog="kcollapse", description="Targeted k-core node collapse toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("decompose", parents=[common], help="core value of every node")
    s.add_argument("graph")
    s = sub.add_parser("metrics", parents=[common], help="core value, core strength and corona flag per node")
    s.add_argument("graph")
    s = sub.add_parser("collapse", parents=[common, solve], help="collapse one target node")
    s.add_argument("graph")
    s.add_argument("--target", required=True, help="node label")
    s = sub.add_parser("trace", parents=[common, solve], help="supportive-neighbor trace of one collapse")
    s.add_argument("graph")
    s.add_argument("--target", required=True)
    s.add_argument("--impact-seed", help="also dump followed/influenced sets seeded at this corona node")
    s = sub.add_parser("sweep", parents=[common, solve], help="node robustness of every node")
    s.add_argument("graph")
    s = sub.add_parser("compare", parents=[common], help="merge sweep reports into one table")
    s.add_argument("reports", nargs="+")
    s = sub.add_parser("oracle-check", parents=[common, solve], help="compare a method with exact search")
    s.add_argument("graph")
    s.add_argument("--candidate-mode", choices=("reduced", "full"), default="reduced")
    s.add_argument("--size-cap", type=int, default=4)
    s.add_argument("--budget", type=int, default=10**7)
    return p


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _fmt(args, default: str) -> str:
    if args.format:
        return args.format
    if args.out and args.out.endswith((".csv", ".json")):
        return args.out.rsplit(".", 1)[1]
    return default


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _load(args) -> Graph:
    try:
        return read_edge_list(args.graph, skip_header=args.skip_header)
    except FileNotFoundError:
        raise UsageError(f"no such file: {args.graph}") from None


def _target(graph: Graph, label: str) -> int:
    return graph.index_of(label)


def _solve(args, graph: Graph, target: int) -> solvers.CollapseResult:
    m = args.method
    if m == "tnc":
        return solvers.tnc(graph, target)
    if m == "atnc":
        return solvers.atnc(graph, target, seed=args.seed, fallback=args.atnc_fallback)
    if m == "knm":
        return baselines.knm(graph, target)
    if m == "sv":
        return baselines.sv(graph, target, eps2=args.eps2, seed=args.seed, refresh=args.sv_refresh)
    if m == "red":
        return baselines.red(graph, target, seed=args.seed)
    return baselines.rnd(graph, target, seed=args.seed)


def cmd_decompose(args) -> str:
    g = _load(args)
    core = compute_cores(GraphView(g)).core
    if _fmt(args, "csv") == "json":
        return _json({"schema_version": SCHEMA_VERSION,
                      "cores": [{"node_label": g.labels[i], "core_value": c} for i, c in enumerate(core)]})
    return _csv(["node_label", "core_value"], ((g.labels[i], c) for i, c in enumerate(core)))


def cmd_metrics(args) -> str:
    g = _load(args)
    view = GraphView(g)
    index = compute_cores(view)
    rows = [
        (g.labels[i], c, core_strength(view, index, i) if c else 0, int(c > 0 and is_corona(view, index, i)))
        for i, c in enumerate(index.core)
    ]
    header = ["node_label", "core_value", "core_strength", "is_corona"]
    if _fmt(args, "csv") == "json":
        return _json({"schema_version": SCHEMA_VERSION, "nodes": [dict(zip(header, r)) for r in rows]})
    return _csv(header, rows)


def cmd_collapse(args) -> str:
    g = _load(args)
    res = _solve(args, g, _target(g, args.target))
    return _json({"schema_version": SCHEMA_VERSION, **res.as_dict(g)})


def cmd_trace(args) -> str:
    g = _load(args)
    target = _target(g, args.target)
    res = _solve(args, g, target)
    tr = case_trace(res)
    tr["target"] = g.labels[target]
    out = {"schema_version": SCHEMA_VERSION, **tr}
    if args.impact_seed is not None:
        view = GraphView(g)
        index = compute_cores(view)
        rep = calculate_impact(view, index, target, _target(g, args.impact_seed)).as_dict()
        rep["followed"] = [g.labels[x] for x in rep["followed"]]
        rep["influenced"] = [g.labels[x] for x in rep["influenced"]]
        out["impact"] = rep
    return _json(out)


def cmd_sweep(args) -> str:
    g = _load(args)

    def progress(done: int, total: int) -> None:
        if args.verbose:
            print(f"\r{args.method}: {done}/{total}", end="", file=sys.stderr, flush=True)

    opts = {"eps2": args.eps2} if args.method == "sv" else {}
    if args.method == "atnc":
        opts["atnc_fallback"] = args.atnc_fallback
    rep = sweep(g, args.method, runs=args.runs, seed=args.seed, threads=args.threads,
                timeout=args.timeout_secs if args.timeout_secs > 0 else None, progress=progress, **opts)
    if args.verbose:
        print(file=sys.stderr)
    if _fmt(args, "json") == "csv":
        return rep.to_csv()
    out = rep.as_dict()
    out["resilience"] = resilience_summary(rep)
    return _json(out)


def cmd_compare(args) -> str:
    reps = []
    for path in args.reports:
        try:
            with open(path, encoding="utf-8") as fh:
                reps.append(MetricsReport.from_dict(json.load(fh)))
        except FileNotFoundError:
            raise UsageError(f"no such file: {path}") from None
        except (KeyError, ValueError) as exc:
            raise GraphError(f"{path}: not a sweep report ({exc})") from None
    return compare(reps)


def cmd_oracle_check(args) -> str:
    g = _load(args)
    view = GraphView(g)
    index = compute_cores(view)
    rows = []
    for i in range(g.node_count):
        if index.core[i] < 1:
            continue
        cs = core_strength(view, index, i)
        nr = _solve(args, g, i).nr
        try:
            ex = exact_nr(g, i, args.candidate_mode, args.size_cap, args.budget).nr
            status = "match" if nr == ex else ("above" if nr > ex else "below")
        except OracleInfeasible:
            ex, status = "", "infeasible"
        rows.append((g.labels[i], index.core[i], cs, nr, ex, status))
    header = ["node_label", "core_value", "core_strength", "nr_method", "nr_oracle", "status"]
    if _fmt(args, "csv") == "json":
        return _json({"schema_version": SCHEMA_VERSION, "method": args.method,
                      "rows": [dict(zip(header, r)) for r in rows]})
    return _csv(header, rows)


COMMANDS = {
    "decompose": cmd_decompose,
    "metrics": cmd_metrics,
    "collapse": cmd_collapse,
    "trace": cmd_trace,
    "sweep": cmd_sweep,
    "compare": cmd_compare,
    "oracle-check": cmd_oracle_check,
}


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.threads is None:
            args.threads = _default_threads()
        if args.threads < 1:
            raise UsageError("--threads must be >= 1")
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
        _emit(args, COMMANDS[args.command](args))
    except UsageError as exc:
        print(f"kcollapse: usage error: {exc}", file=sys.stderr)
        return 1
    except (GraphError, OracleInfeasible, UnicodeDecodeError) as exc:
        print(f"kcollapse: data error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())
