import argparse
import sys

from mrn.commands.options import is_quiet, query_from_args
from mrn.core.color import colorize_verdict
from mrn.core.constants import EXIT_BAD, EXIT_USAGE
from mrn.core.errors import MrnError, die
from mrn.core.io import emit_stdout, read_bytes, require_existing_file, write_text_lf
from mrn.domain.coloring_format import ColoringDocument, parse_bytes, serialize
from mrn.domain.witness import build_diagonal_star, build_extremal, verify_good, witness_sweep


def cmd_witness(args: argparse.Namespace) -> None:
    q = query_from_args(args)
    builder = build_diagonal_star if args.variant == "star" else build_extremal
    try:
        coloring = builder(q, args.t)
    except MrnError as e:
        die(str(e), code=EXIT_USAGE)
    text = serialize(ColoringDocument(coloring, q.m, q.n))
    if args.output:
        path = write_text_lf(args.output, text, label="witness")
        if not is_quiet(args):
            print(f"wrote {path} ({coloring.shape.label()}, E={coloring.shape.E})", file=sys.stderr)
    else:
        emit_stdout(text)


def cmd_verify(args: argparse.Namespace) -> None:
    path = require_existing_file(args.file, label="coloring")
    try:
        doc = parse_bytes(read_bytes(path, label="coloring"))
    except MrnError as e:
        die(f"{path}: {e}", code=EXIT_USAGE)

    m = args.m if args.m is not None else doc.m
    n = args.n if args.n is not None else doc.n
    if m is None or n is None:
        die("give --m and --n (the file header carries no m/n)", code=EXIT_USAGE)
    if m < 1 or n < 1:
        die(f"m and n must be >= 1 (got m={m}, n={n})", code=EXIT_USAGE)

    report = verify_good(doc.coloring, m, n)
    verdict, _, rest = report.render().partition(" ")
    print(f"{colorize_verdict(verdict, report.good)} {rest}")
    if not report.good:
        sys.exit(EXIT_BAD)


def cmd_sweep(args: argparse.Namespace) -> None:
    m_lo, m_hi = args.m
    j_lo, j_hi = args.j
    n_lo, n_hi = args.n
    try:
        summary = witness_sweep(
            range(m_lo, m_hi + 1), range(j_lo, j_hi + 1), range(n_lo, n_hi + 1)
        )
    except MrnError as e:
        die(str(e), code=EXIT_USAGE)
    for f in summary.failures:
        print(f"WARNING: {f.query.label()} at t={f.t}: {f.reason}", file=sys.stderr)
    print(
        f"checked={summary.checked} skipped_infinite={summary.skipped_infinite} "
        f"failures={len(summary.failures)}"
    )
    if not summary.ok:
        sys.exit(EXIT_BAD)
