"""``dim`` command line entry point."""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .bench import FAMILIES, bench, format_rows, rows_as_dicts
from .generate import generate_random_graph
from .graph import GraphFormatError, read_graph
from .oracle import OracleSizeError, brute_force_solve
from .report import RunReport
from .search import FOUND, NO_DIM, Solution, solve

EXIT_FOUND, EXIT_NODIM, EXIT_ERROR = 0, 1, 2


def _fmt_weight(w: float) -> str:
    return str(int(w)) if float(w).is_integer() else repr(w)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dim", description="Minimum-weight dominating induced matchings.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, text in [
        ("solve", "minimum-weight DIM, witness and DIM count"),
        ("count", "number of DIMs"),
        ("exists", "whether any DIM exists"),
        ("oracle", "brute-force answer (small graphs only)"),
    ]:
        sp = sub.add_parser(name, help=text)
        sp.add_argument("file")
        sp.add_argument("--json", action="store_true", help="print a JSON report")

    gp = sub.add_parser("gen", help="write a random G(n, p) instance")
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--p", type=float, required=True)
    gp.add_argument("--seed", type=int, required=True)
    gp.add_argument("--wmin", type=float, default=1.0)
    gp.add_argument("--wmax", type=float, default=1.0)
    gp.add_argument("--int", dest="integer", action="store_true", help="integer weights")
    gp.add_argument("-o", "--output")

    bp = sub.add_parser("bench", help="check search-tree leaves against 8*1.1939^n")
    bp.add_argument("--family", choices=FAMILIES, required=True)
    bp.add_argument("--nmin", type=int, required=True)
    bp.add_argument("--nmax", type=int, required=True)
    bp.add_argument("--p", type=float, default=0.2)
    bp.add_argument("--seeds", type=int, default=1)
    bp.add_argument("--jobs", type=int, default=1)
    bp.add_argument("--json", action="store_true")
    return ap


def _run_file(cmd: str, path: str, as_json: bool, out) -> int:
    g = read_graph(path)
    t0 = time.perf_counter()
    if cmd == "oracle":
        res = brute_force_solve(g)
        sol = Solution(res.status, res.weight, res.witness, res.count)
    else:
        sol = solve(g)
    report = RunReport.from_solution(path, sol, (time.perf_counter() - t0) * 1e3)
    if cmd == "count":
        report.edges = []
    if as_json:
        print(report.to_json(), file=out)
    elif sol.status == NO_DIM:
        if sol.k4 is not None:
            quad = " ".join(str(v + 1) for v in sol.k4)
            print(f"no DIM (K4 found: {quad})", file=out)
        else:
            print("no DIM", file=out)
    elif cmd == "exists":
        print("DIM exists", file=out)
    elif cmd == "count":
        print(f"count {sol.count}", file=out)
    else:
        print(f"found: weight {_fmt_weight(sol.weight)}, count {sol.count}", file=out)
        print("edges: " + " ".join(f"{u}-{v}" for u, v in report.edges), file=out)
    return EXIT_FOUND if sol.status == FOUND else EXIT_NODIM


def run_cli(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_FOUND
    try:
        if args.command == "gen":
            _, text = generate_random_graph(
                args.n, args.p, args.seed, args.wmin, args.wmax, integer=args.integer
            )
            if args.output:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                out.write(text)
            return 0
        if args.command == "bench":
            rows = bench(args.family, args.nmin, args.nmax, args.p, args.seeds, args.jobs)
            if args.json:
                print(json.dumps(rows_as_dicts(rows)), file=out)
            else:
                print(format_rows(rows), file=out)
            return 0 if all(r.ok for r in rows) else 1
        return _run_file(args.command, args.file, args.json, out)
    except (OSError, GraphFormatError, OracleSizeError, ValueError) as exc:
        print(f"dim: error: {exc}", file=err)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
