"""Command-line entry point: ``sparsedet <command> [flags]``.

Commands: bound, schedule, construct, search, figure, verify, certify.
Reports are JSON on stdout, series are CSV, matrices use the text format of
:func:`sparsedet.linalg.format_matrix`.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import bounds as B
from .bounds import BoundParams, BoundReport
from .certify import certify_bounds
from .constructions import (
    PaperMatrix,
    best_block_construction,
    biplane_11,
    block_diag_power,
    fano,
    paper_matrix,
    projective_plane,
    s_matrix,
)
from .linalg import format_matrix
from .logmag import LogMagnitude
from .schedule import make_schedule, schedule_bound, write_counts_csv
from .search import DEFAULT_BUDGET, MatrixClass, search_max_det
from .verify import CRITERIA, run_criterion, verify_counterexample_items


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


# -- bound -----------------------------------------------------------------------

def collect_bounds(p: BoundParams, k_tilde: Optional[float] = None) -> list[BoundReport]:
    """Every bound that applies to the given parameters.

    Growth constants (``*_rate``) are always reported; totals need n.
    """
    k = p.k
    out: list[BoundReport] = []

    def add(name, value, kind=B.UPPER, **detail):
        out.append(BoundReport(name, p, value, kind, {key: str(v) for key, v in detail.items()}))

    q_star, c_star = B.optimal_q(k)
    q = p.q if p.q is not None else q_star
    add("hadamard_rate", LogMagnitude.power(k, 0.5))
    add("pair_rate", B.c_pair(k))
    add("q_row_rate", B.c_q(q, k), q=q)
    if k >= 2:
        add("beta_rate", B.beta(k), alpha=B.alpha(k).format(5))
        add("design_lower_rate", B.design_lower_bound(k), B.LOWER)
    if p.delta is not None and k >= 2:
        add("perturbed_rate", B.perturbed_bound(k, p.delta), delta=p.delta)
    if k_tilde is not None:
        add("conjectured_rate", B.conjectured_dtilde(k_tilde), B.CONJECTURAL, k_tilde=k_tilde)

    if p.n is None:
        return out
    n, m = p.n, p.rows
    if m > n:
        raise ValueError("need m <= n")
    add("hadamard", B.hadamard_bound(m, k) if m == n else LogMagnitude.power(k, m / 2))
    if m == n and n >= 2:
        lam, v = B.ryser_bound(n, k)
        add("ryser", v, lam=lam)
    elif m >= 2:
        mu, v = B.ryser_gen_bound(m, n, k)
        add("ryser_gen", v, mu=mu)
    add("pair", B.pair_bound(m, n, k))
    add("q_row", B.q_row_bound(m, n, k, q), q=q)
    sched = make_schedule(m, n, k)
    add("greedy_schedule", schedule_bound(sched), r=sched.r)
    add("greedy_closed", B.greedy_closed_bound(m, n, k))
    if m == n and k == 2:
        add("two_ones_per_row", B.rows_at_most_two_bound(n))
    if p.delta is not None and k >= 2 and m == n:
        add("perturbed", B.perturbed_bound(k, p.delta) ** n, delta=p.delta)
    if k_tilde is not None:
        add("conjectured", B.conjectured_dtilde(k_tilde) ** n, B.CONJECTURAL, k_tilde=k_tilde)
    if m == n:
        built = best_block_construction(n, k)
        if built is not None:
            add("construction", LogMagnitude.of(built[0]), B.LOWER, det=built[0], blocks=built[1])
    return out


def cmd_bound(args) -> int:
    p = BoundParams(k=args.k, n=args.n, m=args.m, q=args.q, delta=args.delta)
    print(dump_json([r.to_dict() for r in collect_bounds(p, args.k_tilde)]))
    return 0


# -- schedule ----------------------------------------------------------------------

def cmd_schedule(args) -> int:
    s = make_schedule(args.m if args.m is not None else args.n, args.n, args.k)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_counts_csv(s, fh)
    print(dump_json(s.to_dict()))
    return 0


# -- construct ---------------------------------------------------------------------

def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "fano":
        M = fano()
    elif kind == "plane":
        M = projective_plane(args.p)
    elif kind == "biplane":
        M = biplane_11()
    elif kind == "s":
        M = s_matrix(args.n, args.a, args.k)
    else:
        M = paper_matrix(kind)
    if args.t > 1:
        M = block_diag_power(M, args.t)
    sys.stdout.write(format_matrix(M))
    return 0


# -- search -----------------------------------------------------------------------

def cmd_search(args) -> int:
    res = search_max_det(args.matrix_class, args.n, args.k, budget=args.budget,
                         threads=args.threads, prune=not args.no_prune)
    print(dump_json(res.to_dict()))
    return 0


def cmd_certify(args) -> int:
    rep = certify_bounds(args.matrix_class, args.n, args.k, budget=args.budget, threads=args.threads)
    print(dump_json(rep.to_dict()))
    return 0 if rep.ok else 1


# -- figure -----------------------------------------------------------------------

@dataclass
class FigureSeries:
    k: int
    points: list[tuple[int, float]]
    peak: tuple[int, float]
    reference_line: Optional[float] = None


def figure_series(k: int, with_beta: bool = False) -> FigureSeries:
    """Gap sqrt(k) - c_{q,k} for q = 1..k, computed as sqrt(k)(1 - c/sqrt(k))."""
    if k < 1:
        raise ValueError("k must be >= 1")
    root = LogMagnitude.power(k, 0.5)

    def gap(c: LogMagnitude) -> float:
        # + 0.0 turns -0.0 into 0.0 at q = 1
        return -math.expm1(c.ln_value - root.ln_value) * math.sqrt(k) + 0.0

    points = [(q, gap(B.c_q(q, k))) for q in range(1, k + 1)]
    q_star, c_star = B.optimal_q(k)
    ref = gap(B.beta(k)) if with_beta and k >= 2 else None
    return FigureSeries(k, points, (q_star, c_star.to_float()), ref)


def write_figure_csv(fs: FigureSeries, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["series", "q", "value", "gap"])
    root = math.sqrt(fs.k)
    for q, g in fs.points:
        w.writerow(["point", q, f"{root - g:.10f}", f"{g:.10f}"])
    q_star, c_star = fs.peak
    w.writerow(["peak", q_star, f"{c_star:.10f}", f"{root - c_star:.10f}"])
    if fs.reference_line is not None:
        w.writerow(["beta", "", f"{root - fs.reference_line:.10f}", f"{fs.reference_line:.10f}"])


def cmd_figure(args) -> int:
    fs = figure_series(args.k, args.beta)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_figure_csv(fs, fh)
    else:
        write_figure_csv(fs, sys.stdout)
    return 0


# -- verify -----------------------------------------------------------------------

def _line(ok: bool, tag: str, name: str, computed, expected) -> str:
    return f"{'PASS' if ok else 'FAIL'} [{tag}] {name}: computed={computed} expected={expected}"


def cmd_verify(args) -> int:
    wanted = args.criteria or [num for num, *_ in CRITERIA]
    summary = []
    for num in wanted:
        res = run_criterion(num)
        limit = f" (limit {res.time_limit:g} s)" if res.time_limit else ""
        print(f"== criterion {num}: {res.title} [{res.seconds:.2f} s{limit}]")
        for it in res.items:
            print(_line(it.ok, str(num), it.name, it.computed, it.expected))
        print(f"{'PASS' if res.ok else 'FAIL'} criterion {num}")
        summary.append({"criterion": num, "ok": res.ok, "seconds": round(res.seconds, 3),
                        "failed": [it.name for it in res.items if not it.ok]})
    print("== counterexample block")
    ce = verify_counterexample_items()
    for it in ce:
        print(_line(it.ok, "cx", it.name, it.computed, it.expected))
    ce_ok = all(it.ok for it in ce)
    summary.append({"criterion": "counterexample", "ok": ce_ok, "seconds": 0.0,
                    "failed": [it.name for it in ce if not it.ok]})
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(dump_json(summary) + "\n")
    failed = [s["criterion"] for s in summary if not s["ok"]]
    print(f"== {len(summary) - len(failed)}/{len(summary)} passed" + (f"; failing: {failed}" if failed else ""))
    return 1 if failed else 0


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sparsedet", description="Determinant bounds for sparse zero-one matrices.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="all applicable bounds as JSON")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, help="rows (defaults to n)")
    p.add_argument("--q", type=int, help="group size for the q-row bound (defaults to the optimal q)")
    p.add_argument("--delta", type=float, help="entry perturbation for the perturbed bound")
    p.add_argument("--k-tilde", type=float, help="real average row weight for the conjectural rate")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("schedule", help="greedy removal schedule as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--csv", help="also write the a_i counts to this CSV file")
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("construct", help="print an explicit matrix")
    p.add_argument("kind", choices=["fano", "plane", "biplane", "s"] + [m.value for m in PaperMatrix])
    p.add_argument("--p", type=int, default=2, help="prime order for 'plane'")
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int, default=1, help="block-diagonal copies")
    p.set_defaults(func=cmd_construct)

    for name, func, helptext in (("search", cmd_search, "exhaustive max |det| search"),
                                 ("certify", cmd_certify, "search, then check against every bound")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--class", dest="matrix_class", choices=[c.value for c in MatrixClass], required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--threads", type=int, default=1)
        if name == "search":
            p.add_argument("--no-prune", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("figure", help="CSV of sqrt(k) - c_{q,k} over q")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--beta", action="store_true", help="add the sqrt(k) - beta_k reference row")
    p.add_argument("--out")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", help="run the reproduction suite")
    p.add_argument("--criteria", type=int, nargs="*", help="subset of criterion numbers")
    p.add_argument("--json", help="write a machine-readable summary here")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
