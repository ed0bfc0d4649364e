"""Command-line frontend: analyze / verify / generate / enumerate / oracle.

All subcommands consume graph6 (one graph per line, file or stdin) and emit
JSON lines or CSV on stdout.  Exit codes: 0 all good, 1 bound violation or
realization failure, 2 input error, 3 a check was skipped on budget with
--strict.
"""

from __future__ import annotations

import argparse
import csv
import json
import multiprocessing
import sys
from dataclasses import dataclass

from .budget import Budget, BudgetExceededError, DEFAULT_EXPANSIONS
from .bounds import CHECK_NAMES, report_to_dict, run_corpus
from .constructions import ConstructionError, realize
from .cycles import DEFAULT_CYCLE_CAP, is_ternary
from .decycling import cyclomatic_number, decycling_summary
from .graph6 import enumerate_labeled_graphs, iter_graph6, to_graph6
from .indpoly import alternating_number, independent_set_count, oracle_polynomial

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

ENUMERATE_MAX_N = 6


@dataclass
class RunConfig:
    """Parsed invocation: one subcommand plus the shared budgets and knobs."""

    command: str
    input: str = "-"
    fmt: str = "json"
    budget_expansions: int = DEFAULT_EXPANSIONS
    cycle_cap: int = DEFAULT_CYCLE_CAP
    density_k: int = 3
    strict: bool = False
    jobs: int = 1
    fail_fast: bool = False

    def __post_init__(self):
        if self.budget_expansions <= 0 or self.cycle_cap <= 0 or self.jobs <= 0:
            raise ValueError("budgets and job counts must be positive")


def _read_lines(path: str) -> list[str]:
    if path == "-":
        return sys.stdin.readlines()
    with open(path, "r", encoding="ascii") as fh:
        return fh.readlines()


def _emit_json(out, record: dict) -> None:
    out.write(json.dumps(record, separators=(",", ":")) + "\n")


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)


# -- analyze -------------------------------------------------------------------


_ANALYZE_FIELDS = (
    "index",
    "graph6",
    "n",
    "e",
    "q",
    "nu",
    "ternary",
    "alternating",
    "independent_sets",
    "phi",
    "phi_witness",
    "phi3",
    "phi3_witness",
    "middle_bound",
    "middle_witness",
    "error",
)


def _analyze_worker(args) -> dict:
    index, text, graph, limit = args
    record: dict = {
        "index": index,
        "graph6": text,
        "n": graph.n,
        "e": graph.edge_count(),
        "q": graph.component_count(),
        "nu": cyclomatic_number(graph),
    }
    try:
        record["ternary"] = is_ternary(graph, Budget(limit))
        record["alternating"] = alternating_number(graph, Budget(limit))
        record["independent_sets"] = independent_set_count(graph, Budget(limit))
        summary = decycling_summary(graph, Budget(limit))
        record["phi"] = summary.phi
        record["phi_witness"] = list(summary.phi_witness)
        record["phi3"] = summary.phi3
        record["phi3_witness"] = list(summary.phi3_witness)
        record["middle_bound"] = summary.middle_bound
        record["middle_witness"] = list(summary.middle_witness)
        record["error"] = None
    except BudgetExceededError as exc:
        record["error"] = str(exc)
        for key in _ANALYZE_FIELDS:
            record.setdefault(key, None)
    return {key: record[key] for key in _ANALYZE_FIELDS}


def _map_ordered(worker, payload: list, jobs: int) -> list:
    if jobs > 1 and len(payload) > 1:
        chunk = max(1, len(payload) // (jobs * 8))
        with multiprocessing.Pool(processes=jobs) as pool:
            return list(pool.imap(worker, payload, chunksize=chunk))
    return [worker(item) for item in payload]


def cmd_analyze(config: RunConfig, out) -> int:
    try:
        lines = _read_lines(config.input)
    except OSError as exc:
        print(f"cannot read {config.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT

    payload = []
    parse_errors = []
    for lineno, text, graph, error in iter_graph6(lines):
        if error is not None:
            parse_errors.append((lineno, error))
            if config.fail_fast:
                break
            continue
        payload.append((lineno, text, graph, config.budget_expansions))
    records = _map_ordered(_analyze_worker, payload, config.jobs)

    if config.fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(_ANALYZE_FIELDS)
        for record in records:
            writer.writerow([_csv_cell(record[k]) for k in _ANALYZE_FIELDS])
    else:
        for record in records:
            _emit_json(out, record)

    for lineno, error in parse_errors:
        print(f"line {lineno}: {error}", file=sys.stderr)
    if parse_errors:
        return EXIT_INPUT
    if config.strict and any(r["error"] for r in records):
        return EXIT_BUDGET
    return EXIT_OK


# -- verify --------------------------------------------------------------------


def _flatten_check(prefix: str, check: dict) -> list[tuple[str, object]]:
    return [
        (f"{prefix}_applicable", check["applicable"]),
        (f"{prefix}_bound", check["bound"]),
        (f"{prefix}_satisfied", check["satisfied"]),
        (f"{prefix}_slack", check["slack"]),
        (f"{prefix}_error", check["error"]),
    ]


def cmd_verify(config: RunConfig, out) -> int:
    try:
        lines = _read_lines(config.input)
    except OSError as exc:
        print(f"cannot read {config.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT

    reports, parse_errors, summary = run_corpus(
        lines,
        jobs=config.jobs,
        budget_limit=config.budget_expansions,
        fail_fast=config.fail_fast,
    )

    if config.fmt == "csv":
        header = ["index", "graph6", "n", "alternating"]
        for name in CHECK_NAMES:
            header.extend(
                f"{name}_{suffix}"
                for suffix in ("applicable", "bound", "satisfied", "slack", "error")
            )
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        for report in reports:
            rec = report_to_dict(report)
            row = [rec["index"], rec["graph6"], rec["n"], rec["alternating"]]
            for name in CHECK_NAMES:
                row.extend(value for _, value in _flatten_check(name, rec["checks"][name]))
            writer.writerow([_csv_cell(v) for v in row])
        print(json.dumps(summary, separators=(",", ":")), file=sys.stderr)
    else:
        for report in reports:
            _emit_json(out, report_to_dict(report))
        _emit_json(out, summary)

    for lineno, _text, error in parse_errors:
        print(f"line {lineno}: {error}", file=sys.stderr)
    for violation in summary["violations"]:
        print(
            f"BOUND VIOLATION: graph {violation['index']} ({violation['graph6']}) "
            f"fails {violation['check']}",
            file=sys.stderr,
        )

    if parse_errors:
        return EXIT_INPUT
    if summary["violations"]:
        return EXIT_VIOLATION
    not_evaluated = sum(c["not_evaluated"] for c in summary["checks"].values())
    if config.strict and not_evaluated:
        return EXIT_BUDGET
    return EXIT_OK


# -- generate ------------------------------------------------------------------


def cmd_generate(config: RunConfig, k: int, q: "int | None", sweep: bool, recipe_out: "str | None", out) -> int:
    targets = list(range(-(1 << k), (1 << k) + 1)) if sweep else [q]
    results = []
    failures = []
    for target in targets:
        try:
            graph, recipe = realize(k, target, density_cap=config.density_k,
                                    budget=Budget(config.budget_expansions))
            results.append((target, graph, recipe))
        except (ConstructionError, BudgetExceededError) as exc:
            failures.append((target, str(exc)))

    records = [
        {
            "k": k,
            "q": target,
            "n": graph.n,
            "graph6": to_graph6(graph),
            "steps": [list(step) for step in recipe.steps],
        }
        for target, graph, recipe in results
    ]
    if recipe_out:
        with open(recipe_out, "w", encoding="ascii") as fh:
            for rec in records:
                fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
        for _target, graph, _recipe in results:
            out.write(to_graph6(graph) + "\n")
    elif config.fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["k", "q", "n", "graph6", "steps"])
        for rec in records:
            steps = ";".join(" ".join(str(x) for x in step) for step in rec["steps"])
            writer.writerow([rec["k"], rec["q"], rec["n"], rec["graph6"], steps])
    else:
        for rec in records:
            _emit_json(out, rec)

    for target, message in failures:
        print(f"realization failed for (k={k}, q={target}): {message}", file=sys.stderr)
    return EXIT_VIOLATION if failures else EXIT_OK


# -- enumerate / oracle ----------------------------------------------------------


def cmd_enumerate(n: int, out) -> int:
    if n < 0 or n > ENUMERATE_MAX_N:
        print(
            f"refusing to enumerate n={n}: labeled enumeration is capped at "
            f"n <= {ENUMERATE_MAX_N} (2^(n(n-1)/2) lines)",
            file=sys.stderr,
        )
        return EXIT_INPUT
    for graph in enumerate_labeled_graphs(n):
        out.write(to_graph6(graph) + "\n")
    return EXIT_OK


def cmd_oracle(config: RunConfig, out) -> int:
    try:
        lines = _read_lines(config.input)
    except OSError as exc:
        print(f"cannot read {config.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    parse_errors = []
    records = []
    for lineno, text, graph, error in iter_graph6(lines):
        if error is not None:
            parse_errors.append((lineno, error))
            if config.fail_fast:
                break
            continue
        record = {"index": lineno, "graph6": text, "n": graph.n}
        try:
            coeffs = oracle_polynomial(graph)
            record["coefficients"] = coeffs
            record["alternating"] = sum(
                c if i % 2 == 0 else -c for i, c in enumerate(coeffs)
            )
            record["error"] = None
        except ValueError as exc:
            record["coefficients"] = None
            record["alternating"] = None
            record["error"] = str(exc)
        records.append(record)

    if config.fmt == "csv":
        fields = ("index", "graph6", "n", "coefficients", "alternating", "error")
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(fields)
        for record in records:
            writer.writerow([_csv_cell(record[k]) for k in fields])
    else:
        for record in records:
            _emit_json(out, record)
    for lineno, error in parse_errors:
        print(f"line {lineno}: {error}", file=sys.stderr)
    return EXIT_INPUT if parse_errors else EXIT_OK


# -- argument parsing ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altind",
        description=(
            "Exact independence-polynomial invariants, decycling bounds and "
            "extremal constructions over graph6 streams."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--input", default="-", metavar="PATH",
                       help="graph6 input file, or - for stdin (default)")
        p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json",
                       help="output format (default json lines)")
        p.add_argument("--budget-expansions", type=int, default=DEFAULT_EXPANSIONS,
                       metavar="N", help=f"search expansion budget per check "
                       f"(default {DEFAULT_EXPANSIONS})")
        p.add_argument("--cycle-cap", type=int, default=DEFAULT_CYCLE_CAP, metavar="N",
                       help="cap on enumerated cycle lists; predicates are exempt "
                       f"(default {DEFAULT_CYCLE_CAP})")
        p.add_argument("--density-k", type=int, default=3, metavar="K",
                       help="largest ternary decycling number for generate (default 3)")
        p.add_argument("--strict", action="store_true",
                       help="treat budget-skipped checks as a failing exit (code 3)")
        p.add_argument("--jobs", type=int, default=1, metavar="N",
                       help="parallel worker processes (default 1)")
        p.add_argument("--fail-fast", action="store_true",
                       help="stop at the first malformed input line")

    p_analyze = sub.add_parser("analyze", help="per-graph invariants as JSON/CSV")
    add_common(p_analyze)

    p_verify = sub.add_parser("verify", help="check every bound on a corpus")
    add_common(p_verify)

    p_generate = sub.add_parser("generate", help="emit verified extremal witnesses")
    add_common(p_generate)
    p_generate.add_argument("k", type=int, help="target ternary decycling number")
    p_generate.add_argument("q", type=int, nargs="?", default=None,
                            help="target alternating number (|q| <= 2^k)")
    p_generate.add_argument("--all", action="store_true",
                            help="sweep every q with |q| <= 2^k")
    p_generate.add_argument("--recipe-out", metavar="PATH", default=None,
                            help="write JSON recipes here and print bare graph6 lines")

    p_enumerate = sub.add_parser("enumerate", help="all labeled graphs on n vertices")
    p_enumerate.add_argument("n", type=int)

    p_oracle = sub.add_parser("oracle", help="brute-force polynomial for small graphs")
    add_common(p_oracle)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "enumerate":
        return cmd_enumerate(args.n, sys.stdout)

    try:
        config = RunConfig(
            command=args.command,
            input=args.input,
            fmt=args.fmt,
            budget_expansions=args.budget_expansions,
            cycle_cap=args.cycle_cap,
            density_k=args.density_k,
            strict=args.strict,
            jobs=args.jobs,
            fail_fast=args.fail_fast,
        )
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT

    if args.command == "analyze":
        return cmd_analyze(config, sys.stdout)
    if args.command == "verify":
        return cmd_verify(config, sys.stdout)
    if args.command == "oracle":
        return cmd_oracle(config, sys.stdout)
    if args.command == "generate":
        if args.all == (args.q is not None):
            print("generate needs either a target q or --all", file=sys.stderr)
            return EXIT_INPUT
        if not args.all and abs(args.q) > 1 << args.k:
            print(f"|q| must be at most 2^k = {1 << args.k}", file=sys.stderr)
            return EXIT_INPUT
        return cmd_generate(config, args.k, args.q, args.all, args.recipe_out, sys.stdout)
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    raise SystemExit(main())
