"""``cubic-census`` command line.

Exit status: 0 when everything ran and every assertion held, 1 when a
verification failed, 2 on bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .canonical import canonical_form
from .counting import (
    coloring_formula_count,
    count_cycles,
    count_perfect_matchings,
    count_two_factors,
)
from .errors import CubicCensusError
from .families import KINDS, FamilySpec, named_graph
from .io import ReportDocument, encode_graph6, read_graphs, to_csv, write_graphs
from .search import (
    census,
    default_jobs,
    verify_bounds,
    verify_coloring_formula,
    verify_cycle_bounds,
    verify_extremal,
    verify_m_inequalities,
    verify_tensor_identity,
)
from .sequences import psi_table

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

# quantity -> (algorithm name, counter)
QUANTITIES = {
    "pm": ("perfect_matchings/memoised_free_mask", count_perfect_matchings),
    "2f": ("two_factors/degree_bounded_backtracking", count_two_factors),
    "cycles": ("cycles/cycle_space_gray_code", count_cycles),
    "formula": ("perfect_matchings/homogeneous_coloring_sum", coloring_formula_count),
}

SUITE_DEFAULTS = {"aa": 8, "bb": 6, "af": 8, "lemma1": 40, "cc": 14}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cubic-census", description="Exact counts and census checks for cubic graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="count structures in the graphs of a file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", choices=("g6", "edges"), default="g6")
    p.add_argument("--what", choices=(*QUANTITIES, "all"), default="pm")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("family", help="write a named graph")
    p.add_argument("--name", choices=KINDS, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("g6", "edges"), default="g6")

    p = sub.add_parser("search", help="census of connected cubic graphs with a JSON report")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--report", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=tuple(SUITE_DEFAULTS), required=True)
    p.add_argument("--max-n", type=int)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("table", help="print the cycle lower-bound table")
    p.add_argument("--psi", action="store_true", required=True)
    p.add_argument("--max-r", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    return parser


def _cmd_count(args, out) -> int:
    text = Path(args.infile).read_text()
    graphs = read_graphs(text, args.format)
    wanted = list(QUANTITIES) if args.what == "all" else [args.what]
    doc = ReportDocument("count", {"in": args.infile, "format": args.format, "what": args.what})
    for idx, g in enumerate(graphs):
        values = {q: QUANTITIES[q][1](g) for q in wanted}
        if args.json:
            form = canonical_form(g).hex()
            for q in wanted:
                doc.rows.append({"graph": idx, "canonical": form, "quantity": q,
                                 "algorithm": QUANTITIES[q][0], "value": values[q]})
        elif len(wanted) == 1:
            out.write(f"{values[wanted[0]]}\n")
        else:
            out.write(" ".join(f"{q}={values[q]}" for q in wanted) + "\n")
    if args.json:
        out.write(doc.to_json())
    return EXIT_OK


def _cmd_family(args, out) -> int:
    g = named_graph(FamilySpec(args.name, args.n))
    Path(args.out).write_text(write_graphs([g], args.format))
    return EXIT_OK


def _cmd_search(args, out) -> int:
    jobs = args.jobs or default_jobs()
    records = census(args.vertices, args.bipartite, jobs)
    doc = ReportDocument("search", {"vertices": args.vertices, "bipartite": args.bipartite})
    for rec in records:
        rep = rec.report
        doc.rows.append({
            "canonical": rec.canonical.hex(),
            "graph6": encode_graph6(rec.graph),
            "bipartite": rec.bipartite,
            "automorphisms": rec.canonical.orbit_size,
            "perfect_matchings": rep.pm_count,
            "perfect_matchings_algorithm": QUANTITIES["pm"][0],
            "two_factors": rep.two_factor_count,
            "two_factors_algorithm": QUANTITIES["2f"][0],
            "extremal": rec.extremal,
        })
        doc.checked += 1
        doc.passed += bool(rep.bound_m_n)
    doc.failed = doc.checked - doc.passed
    doc.params["classes"] = len(records)
    doc.params["bipartite_classes"] = sum(r.bipartite for r in records)
    Path(args.report).write_text(doc.to_json())
    out.write(f"{len(records)} classes on {args.vertices} vertices; report written to {args.report}\n")
    return EXIT_FAILED if doc.failed else EXIT_OK


def _run_suite(suite: str, max_n: int, jobs: int):
    if suite == "aa":
        return verify_extremal(max_n, False, jobs)
    if suite == "bb":
        return verify_coloring_formula(max_n, False, jobs).merge(verify_tensor_identity(max_n, False, jobs))
    if suite == "af":
        return verify_bounds(max_n, False, jobs)
    if suite == "lemma1":
        return verify_m_inequalities(max_n)
    return verify_cycle_bounds(max_n)


def _cmd_verify(args, out) -> int:
    max_n = args.max_n if args.max_n is not None else SUITE_DEFAULTS[args.suite]
    jobs = args.jobs or default_jobs()
    summary = _run_suite(args.suite, max_n, jobs)
    doc = ReportDocument("verify", {"suite": args.suite, "max_n": max_n}, summary.rows(),
                         summary.checked, summary.passed, summary.failed)
    if args.suite == "cc":
        doc.rows += [{"r": row.r, "psi_lower": row.psi_lower, "half_power": row.half_power,
                      "ceiling_16ths": row.ceiling_16ths} for row in psi_table(max_n + 1)]
    if summary.notes:
        doc.params["notes"] = summary.notes
    if args.json:
        out.write(doc.to_json())
    else:
        for row in summary.rows():
            status = "ok" if row["failed"] == 0 else "FAIL"
            out.write(f"{status:4} {row['assertion']}: {row['passed']}/{row['checked']}\n")
            for what in row["failures"]:
                out.write(f"       failed: {what}\n")
        for note in summary.notes:
            out.write(f"note: {note}\n")
        out.write(f"checked={summary.checked} passed={summary.passed} failed={summary.failed}\n")
    return EXIT_FAILED if summary.failed else EXIT_OK


def _cmd_table(args, out) -> int:
    rows = psi_table(args.max_r)
    header = ("r", "psi_lower", "half_power", "ceiling_16ths")
    if args.csv:
        out.write(to_csv(header, rows))
    else:
        out.write("{:>4} {:>14} {:>14} {:>16}\n".format(*header))
        for row in rows:
            out.write(f"{row.r:>4} {row.psi_lower:>14} {row.half_power:>14} {row.ceiling_16ths:>16}\n")
    return EXIT_OK


COMMANDS = {"count": _cmd_count, "family": _cmd_family, "search": _cmd_search,
            "verify": _cmd_verify, "table": _cmd_table}


def run_cli(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
    except (CubicCensusError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
    return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
