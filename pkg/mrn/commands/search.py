import argparse
import sys

from mrn.commands.options import is_quiet, query_from_args
from mrn.core.color import colorize_verdict
from mrn.core.constants import EXIT_BAD, EXIT_BUDGET, EXIT_USAGE
from mrn.core.errors import MrnError, die, warn
from mrn.core.io import write_text_lf
from mrn.domain.coloring_format import ColoringDocument, serialize
from mrn.domain.formulas import mrn_value
from mrn.domain.search import (
    Resolution,
    SearchStatus,
    compute_value_by_search,
    decide_colorable,
    decide_colorable_naive,
)


def cmd_search(args: argparse.Namespace) -> None:
    quiet = is_quiet(args)
    try:
        if args.naive:
            if args.threads != 1:
                warn("--threads is ignored with --naive")
            outcome = decide_colorable_naive(args.j, args.t, args.m, args.n)
        else:
            outcome = decide_colorable(
                args.j,
                args.t,
                args.m,
                args.n,
                node_budget=args.budget,
                time_budget=args.time_budget,
                threads=args.threads,
                show_progress=not quiet,
            )
    except MrnError as e:
        die(str(e), code=EXIT_USAGE)

    status = outcome.status
    print(colorize_verdict(status.value, status is not SearchStatus.BUDGET_EXHAUSTED))
    if not quiet:
        print(outcome.stats.render(), file=sys.stderr)

    if outcome.witness is not None and args.output:
        doc = ColoringDocument(outcome.witness, args.m, args.n)
        path = write_text_lf(args.output, serialize(doc), label="witness")
        if not quiet:
            print(f"witness: {path}", file=sys.stderr)
    if status is SearchStatus.BUDGET_EXHAUSTED:
        sys.exit(EXIT_BUDGET)


def cmd_compute(args: argparse.Namespace) -> None:
    q = query_from_args(args)
    quiet = is_quiet(args)
    try:
        result = compute_value_by_search(
            q.j,
            q.m,
            q.n,
            t_max=args.t_max,
            node_budget=args.budget,
            time_budget=args.time_budget,
            threads=args.threads,
            show_progress=not quiet,
        )
    except MrnError as e:
        die(str(e), code=EXIT_USAGE)

    for t, outcome in result.outcomes:
        print(f"t={t} {outcome.status.value}")
        if not quiet:
            print(f"t={t} {outcome.stats.render()}", file=sys.stderr)

    formula = mrn_value(q)
    if result.resolution is Resolution.UNRESOLVED:
        print(f"{q.label()} = UNRESOLVED  [search, t_max={args.t_max}]")
        print(f"formula: {formula}")
        sys.exit(EXIT_BUDGET)

    note = "search" if result.resolution is Resolution.RESOLVED else f"search evidence, t <= {args.t_max}"
    print(f"{q.label()} = {result.value}  [{note}]")
    agree = result.value == formula
    print(f"formula: {formula} ({'agree' if agree else 'DISAGREE'})")
    if not agree:
        sys.exit(EXIT_BAD)
