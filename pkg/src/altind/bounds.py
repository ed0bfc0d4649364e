"""Per-graph verification of the alternating-number bound chain.

For each input graph the verifier evaluates, with exact integers:

  * ternary_unit_bound:  ternary graphs satisfy |I(G;-1)| <= 1,
  * decycling_bound:     |I(G;-1)| <= 2^phi,
  * cyclomatic_bound:    |I(G;-1)| <= 2^nu - nu, when some cycle length is
                         not divisible by 3,
  * chain_lower:         |I(G;-1)| <= min |Ind(G[D])| over ternary
                         decycling sets D,
  * chain_upper:         that minimum is <= 2^phi3.

Hypothesis failure marks a check not applicable, never unsatisfied; a budget
failure downgrades it to "not evaluated" with the reason recorded.  A
satisfied=False anywhere signals either an implementation bug or a
counterexample to a proved statement, and is surfaced loudly by the callers.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Iterable

from .budget import Budget, BudgetExceededError, DEFAULT_EXPANSIONS
from .cycles import has_cycle_length_not_div3, is_ternary
from .decycling import DecyclingResult, cyclomatic_number, decycling_summary
from .graph import Graph
from .graph6 import iter_graph6
from .indpoly import alternating_number

CHECK_NAMES = (
    "ternary_unit_bound",
    "decycling_bound",
    "cyclomatic_bound",
    "chain_lower",
    "chain_upper",
)


@dataclass(frozen=True)
class CheckResult:
    """One bound instance.  applicable is None when the hypothesis test
    itself could not be evaluated; error holds the reason whenever the check
    was not evaluated."""

    applicable: "bool | None"
    bound: "int | None" = None
    satisfied: "bool | None" = None
    slack: "int | None" = None
    error: "str | None" = None


@dataclass(frozen=True)
class BoundsReport:
    index: int
    graph6: str
    n: int
    alternating: "int | None"
    checks: dict
    error: "str | None" = None


def _not_evaluated(reason: str) -> CheckResult:
    return CheckResult(applicable=None, error=reason)


def verify_graph(
    g: Graph,
    index: int = 0,
    graph6_text: str = "",
    budget_limit: "int | None" = None,
) -> BoundsReport:
    """Evaluate every bound in scope on one graph.

    Each sub-computation runs under its own fresh expansion budget so one
    blown check cannot poison the others.
    """
    limit = budget_limit if budget_limit is not None else DEFAULT_EXPANSIONS
    checks: dict[str, CheckResult] = {}

    alt_error = None
    alternating = None
    try:
        alternating = alternating_number(g, Budget(limit))
    except BudgetExceededError as exc:
        alt_error = f"alternating number not evaluated: {exc}"
    magnitude = None if alternating is None else abs(alternating)

    ternary = None
    ternary_error = None
    try:
        ternary = is_ternary(g, Budget(limit))
    except BudgetExceededError as exc:
        ternary_error = f"ternary test not evaluated: {exc}"

    summary: "DecyclingResult | None" = None
    summary_error = None
    try:
        summary = decycling_summary(g, Budget(limit))
    except BudgetExceededError as exc:
        summary_error = f"decycling invariants not evaluated: {exc}"

    not_div3 = None
    not_div3_error = None
    try:
        not_div3 = has_cycle_length_not_div3(g, Budget(limit))
    except BudgetExceededError as exc:
        not_div3_error = f"cycle-length hypothesis not evaluated: {exc}"

    def bounded(applicable: bool, bound: int, value: "int | None") -> CheckResult:
        if not applicable:
            return CheckResult(applicable=False)
        if value is None:
            return _not_evaluated(alt_error or "value not evaluated")
        return CheckResult(
            applicable=True,
            bound=bound,
            satisfied=value <= bound,
            slack=bound - value,
        )

    if ternary_error:
        checks["ternary_unit_bound"] = _not_evaluated(ternary_error)
    else:
        checks["ternary_unit_bound"] = bounded(ternary, 1, magnitude)

    if summary_error:
        checks["decycling_bound"] = _not_evaluated(summary_error)
    else:
        checks["decycling_bound"] = bounded(True, 1 << summary.phi, magnitude)

    if not_div3_error:
        checks["cyclomatic_bound"] = _not_evaluated(not_div3_error)
    else:
        nu = cyclomatic_number(g)
        checks["cyclomatic_bound"] = bounded(not_div3, (1 << nu) - nu, magnitude)

    if summary_error:
        checks["chain_lower"] = _not_evaluated(summary_error)
        checks["chain_upper"] = _not_evaluated(summary_error)
    else:
        checks["chain_lower"] = bounded(True, summary.middle_bound, magnitude)
        # The upper link bounds the middle quantity itself, not |I|.
        checks["chain_upper"] = bounded(True, 1 << summary.phi3, summary.middle_bound)

    return BoundsReport(
        index=index,
        graph6=graph6_text,
        n=g.n,
        alternating=alternating,
        checks=checks,
        error=alt_error,
    )


def report_to_dict(report: BoundsReport) -> dict:
    out = {
        "index": report.index,
        "graph6": report.graph6,
        "n": report.n,
        "alternating": report.alternating,
    }
    if report.error:
        out["error"] = report.error
    out["checks"] = {
        name: {
            "applicable": c.applicable,
            "bound": c.bound,
            "satisfied": c.satisfied,
            "slack": c.slack,
            "error": c.error,
        }
        for name, c in report.checks.items()
    }
    return out


def summarize(reports: list[BoundsReport], parse_errors: "list | None" = None) -> dict:
    """Aggregate counts; associative and order-independent per check."""
    per_check = {
        name: {"applicable": 0, "satisfied": 0, "violated": 0, "tight": 0, "not_evaluated": 0}
        for name in CHECK_NAMES
    }
    violations = []
    for report in reports:
        for name in CHECK_NAMES:
            c = report.checks[name]
            stats = per_check[name]
            if c.error is not None:
                stats["not_evaluated"] += 1
                continue
            if not c.applicable:
                continue
            stats["applicable"] += 1
            if c.satisfied:
                stats["satisfied"] += 1
                if c.slack == 0:
                    stats["tight"] += 1
            else:
                stats["violated"] += 1
                violations.append(
                    {"index": report.index, "graph6": report.graph6, "check": name}
                )
    return {
        "type": "summary",
        "graphs": len(reports),
        "parse_errors": len(parse_errors or []),
        "violations": violations,
        "checks": per_check,
    }


def _verify_worker(args) -> BoundsReport:
    index, text, graph, budget_limit = args
    return verify_graph(graph, index=index, graph6_text=text, budget_limit=budget_limit)


def run_corpus(
    lines: Iterable[str],
    jobs: int = 1,
    budget_limit: "int | None" = None,
    max_n: int = 62,
    fail_fast: bool = False,
) -> tuple[list[BoundsReport], list[tuple[int, str, str]], dict]:
    """Verify a graph6 stream.

    Parsing is sequential; per-graph verification fans out over ``jobs``
    processes with results reassembled in input order, so output is
    byte-identical for any job count.  Returns (reports, parse_errors,
    summary) where parse errors are (lineno, text, message) triples.
    """
    payload = []
    parse_errors: list[tuple[int, str, str]] = []
    for lineno, text, graph, error in iter_graph6(lines, max_n=max_n):
        if error is not None:
            parse_errors.append((lineno, text, error))
            if fail_fast:
                break
            continue
        payload.append((lineno, text, graph, budget_limit))

    if jobs > 1 and len(payload) > 1:
        chunk = max(1, len(payload) // (jobs * 8))
        with multiprocessing.Pool(processes=jobs) as pool:
            reports = list(pool.imap(_verify_worker, payload, chunksize=chunk))
    else:
        reports = [_verify_worker(item) for item in payload]

    return reports, parse_errors, summarize(reports, parse_errors)
