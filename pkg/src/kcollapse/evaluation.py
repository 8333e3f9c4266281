"""Whole-graph sweeps, bubble-node metrics and resilience summaries."""

from __future__ import annotations

import csv
import io
import logging
import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import baselines, solvers
from .corona import core_strength
from .cores import compute_cores
from .graph import Graph, GraphView
from .solvers import CollapseResult, SolverTimeout

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
RANDOM_METHODS = ("red", "rnd")
METHODS = ("tnc", "atnc", "knm", "sv", "red", "rnd")


@dataclass
class NodeRow:
    node: int
    label: str
    core: int
    cs: int
    nr: Fraction | None = None

    @property
    def complete(self) -> bool:
        return self.nr is not None

    @property
    def rc(self) -> Fraction | None:
        return None if self.nr is None else self.cs - self.nr

    @property
    def bubble(self) -> bool:
        return self.nr is not None and self.cs > self.nr


@dataclass
class MetricsReport:
    method: str
    rows: list[NodeRow]
    seeds: list[int] = field(default_factory=list)
    params: dict = field(default_factory=dict)
    duration: float = 0.0

    @property
    def incomplete(self) -> int:
        return sum(1 for r in self.rows if not r.complete)

    def bubble_costs(self) -> list[Fraction]:
        return [r.rc for r in self.rows if r.bubble]

    @property
    def nbn(self) -> int:
        return sum(1 for r in self.rows if r.bubble)

    @property
    def src(self) -> Fraction:
        return sum(self.bubble_costs(), Fraction(0))

    @property
    def war(self) -> float:
        return war(self.bubble_costs())

    @property
    def rp(self) -> float:
        total = sum(r.cs for r in self.rows if r.complete)
        return float(self.src / total * 100) if total else 0.0

    def aggregates(self) -> dict:
        return {"NBN": self.nbn, "SRC": float(self.src), "WAR": self.war, "RP": self.rp}

    def as_dict(self, timing: bool = True) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "method": self.method,
            "seeds": list(self.seeds),
            "params": dict(self.params),
            "aggregates": self.aggregates(),
            "incomplete": self.incomplete,
            "rows": [
                {
                    "node_label": r.label,
                    "core_value": r.core,
                    "core_strength": r.cs,
                    "nr": None if r.nr is None else _num(r.nr),
                    "rc": None if r.rc is None else _num(r.rc),
                }
                for r in self.rows
            ],
        }
        if timing:
            out["duration"] = self.duration
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "MetricsReport":
        rows = [
            NodeRow(
                i,
                r["node_label"],
                r["core_value"],
                r["core_strength"],
                None if r["nr"] is None else Fraction(r["nr"]).limit_denominator(10**6),
            )
            for i, r in enumerate(d["rows"])
        ]
        return cls(d["method"], rows, d.get("seeds", []), d.get("params", {}), d.get("duration", 0.0))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["node_label", "core_value", "core_strength", "nr", "rc", "bubble"])
        for r in self.rows:
            w.writerow([
                r.label, r.core, r.cs,
                "" if r.nr is None else _num(r.nr),
                "" if r.rc is None else _num(r.rc),
                int(r.bubble),
            ])
        return buf.getvalue()


def _num(x: Fraction) -> int | float:
    return int(x) if x.denominator == 1 else float(x)


def war(costs: Iterable[Fraction | int | float]) -> float:
    """Inverse-frequency weighted average of reduced costs; 0 when empty.

    Each distinct cost ``r`` is weighted by ``1 / p_r`` where ``p_r`` is the
    share of bubble nodes having that cost.
    """
    counts = Counter(Fraction(c) for c in costs)
    if not counts:
        return 0.0
    n = sum(counts.values())
    num = sum((Fraction(n, c) * r for r, c in counts.items()), Fraction(0))
    den = sum((Fraction(n, c) for c in counts.values()), Fraction(0))
    return float(num / den)


# -- sweep -------------------------------------------------------------------


def _base_rows(graph: Graph) -> list[NodeRow]:
    view = GraphView(graph)
    index = compute_cores(view)
    return [
        NodeRow(i, graph.labels[i], index.core[i], core_strength(view, index, i) if index.core[i] else 0)
        for i in range(graph.node_count)
    ]


def _solve_one(graph: Graph, method: str, target: int, seed: int, opts: dict, deadline: float | None) -> int:
    if method == "tnc":
        return solvers.tnc(graph, target, deadline=deadline).nr
    if method == "atnc":
        return solvers.atnc(graph, target, seed=seed, fallback=opts.get("atnc_fallback", "random"),
                            deadline=deadline).nr
    if method == "red":
        return baselines.red(graph, target, seed=seed, deadline=deadline).nr
    if method == "rnd":
        return baselines.rnd(graph, target, seed=seed, deadline=deadline).nr
    if method == "knm":
        return baselines.knm(graph, target, deadline=deadline).nr
    if method == "sv":
        return baselines.sv(graph, target, eps2=opts.get("eps2", 0.1), seed=seed, deadline=deadline).nr
    raise ValueError(f"unknown method {method!r}")


def _node_task(args) -> tuple[int, Fraction | None]:
    graph, method, target, seeds, opts, timeout = args
    total = 0
    try:
        for s in seeds:
            deadline = None if timeout is None else time.monotonic() + timeout
            total += _solve_one(graph, method, target, s, opts, deadline)
    except SolverTimeout:
        return target, None
    return target, Fraction(total, len(seeds))


def _level_task(args) -> dict[int, int]:
    graph, method, k, seed, opts, timeout = args
    deadline = None if timeout is None else time.monotonic() + timeout
    try:
        if method == "knm":
            _, fell = baselines.knm_sequence(graph, k, deadline=deadline)
        else:
            _, fell = baselines.sv_sequence(graph, k, eps2=opts.get("eps2", 0.1), seed=seed)
    except SolverTimeout:
        return {}
    return fell


def sweep(
    graph: Graph,
    method: str,
    runs: int | None = None,
    seed: int = 0,
    threads: int = 1,
    timeout: float | None = 60.0,
    progress: Callable[[int, int], None] | None = None,
    **opts,
) -> MetricsReport:
    """Node robustness of every node with core value >= 1 under ``method``.

    Random baselines are averaged over ``runs`` seeds (default 10); the other
    methods run once. KNM and SV removal orders depend only on the core level,
    so one sequence per level serves every target at that level.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    if runs is None:
        runs = 10 if method in RANDOM_METHODS else 1
    seeds = [seed + r for r in range(runs)]
    t0 = time.perf_counter()
    rows = _base_rows(graph)
    targets = [r.node for r in rows if r.core >= 1]
    results: dict[int, Fraction | None] = {}

    if method in ("knm", "sv"):
        levels = sorted({rows[i].core for i in targets})
        per_level = Counter(rows[i].core for i in targets)
        tasks = [
            (graph, method, k, seed, opts, None if timeout is None else timeout * per_level[k])
            for k in levels
        ]
        done = 0
        for k, fell in zip(levels, _map(_level_task, tasks, threads)):
            for i in targets:
                if rows[i].core == k:
                    results[i] = Fraction(fell[i]) if i in fell else None
            done += per_level[k]
            if progress:
                progress(done, len(targets))
    else:
        tasks = [(graph, method, i, seeds, opts, timeout) for i in targets]
        for n, (i, nr) in enumerate(_map(_node_task, tasks, threads), start=1):
            results[i] = nr
            if progress:
                progress(n, len(targets))

    for i, nr in results.items():
        rows[i].nr = nr
    report = MetricsReport(
        method,
        [r for r in rows if r.core >= 1],
        seeds,
        {"runs": runs, **opts},
        time.perf_counter() - t0,
    )
    if report.incomplete:
        log.warning("%s: %d node(s) timed out and are excluded from aggregates", method, report.incomplete)
    return report


def _map(fn, tasks: list, threads: int):
    if threads <= 1 or len(tasks) <= 1:
        return map(fn, tasks)
    pool = ProcessPoolExecutor(max_workers=threads)
    try:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * threads))))
    finally:
        pool.shutdown()


# -- summaries ---------------------------------------------------------------


def case_trace(result: CollapseResult) -> dict:
    """Supportive-neighbor count of the target after each removal."""
    return {
        "target": result.target,
        "method": result.method,
        "critical": result.k,
        "series": [[step, sn] for step, sn in enumerate(result.trace)],
    }


def resilience_summary(report: MetricsReport) -> dict:
    """Per-level and total comparison of core strength against node robustness."""
    levels: dict[int, dict] = defaultdict(
        lambda: {"nodes": 0, "cs_total": 0, "nr_total": Fraction(0), "bubbles": 0, "src": Fraction(0),
                 "cs_hist": Counter(), "nr_hist": Counter()}
    )
    for r in report.rows:
        if not r.complete:
            continue
        lv = levels[r.core]
        lv["nodes"] += 1
        lv["cs_total"] += r.cs
        lv["nr_total"] += r.nr
        lv["cs_hist"][r.cs] += 1
        lv["nr_hist"][_num(r.nr)] += 1
        if r.bubble:
            lv["bubbles"] += 1
            lv["src"] += r.rc
    cs_total = sum(lv["cs_total"] for lv in levels.values())
    nr_total = sum((lv["nr_total"] for lv in levels.values()), Fraction(0))
    src = report.src
    return {
        "method": report.method,
        "cs_total": cs_total,
        "nr_total": _num(nr_total),
        "src": _num(src),
        "redundancy": float(src / cs_total) if cs_total else 0.0,
        "rp": report.rp,
        "levels": {
            str(k): {
                "nodes": lv["nodes"],
                "cs_total": lv["cs_total"],
                "nr_total": _num(lv["nr_total"]),
                "bubbles": lv["bubbles"],
                "src": _num(lv["src"]),
                "cs_hist": {str(a): b for a, b in sorted(lv["cs_hist"].items())},
                "nr_hist": {str(a): b for a, b in sorted(lv["nr_hist"].items())},
            }
            for k, lv in sorted(levels.items())
        },
    }


def compare(reports: Iterable[MetricsReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["method", "NBN", "SRC", "WAR", "RP"])
    for rep in reports:
        a = rep.aggregates()
        w.writerow([rep.method, a["NBN"], f"{a['SRC']:.4f}", f"{a['WAR']:.4f}", f"{a['RP']:.4f}"])
    return buf.getvalue()
