import argparse
import sys

from mrn.commands.options import is_quiet, query_from_args
from mrn.core.constants import EXIT_BAD, EXIT_USAGE
from mrn.core.errors import MrnError, die
from mrn.core.io import emit_stdout, write_text_lf
from mrn.domain.formulas import classify_regime, consistency_table, mrn_value
from mrn.domain.tables import TableSpec, render_table


def cmd_formula(args: argparse.Namespace) -> None:
    q = query_from_args(args)
    tag = classify_regime(q)
    print(f"{q.label()} = {mrn_value(q)}  [{tag.theorem}]")
    if not is_quiet(args):
        print(f"regime: {tag.regime.value}", file=sys.stderr)


def cmd_table(args: argparse.Namespace) -> None:
    try:
        spec = TableSpec(args.m, args.j, args.n, args.format)
    except MrnError as e:
        die(str(e), code=EXIT_USAGE)
    text = render_table(spec)
    if args.output:
        path = write_text_lf(args.output, text, label="table")
        if not is_quiet(args):
            print(f"wrote {path}", file=sys.stderr)
    else:
        emit_stdout(text)


def cmd_consistency(args: argparse.Namespace) -> None:
    try:
        rows = consistency_table(j_max=args.j_max, n_max=args.n_max, m_max=args.m_max)
    except MrnError as e:
        die(str(e), code=EXIT_USAGE)
    bad = [r for r in rows if not r.agree]
    if args.all:
        print("j,m,n,statement,unified,stated,agree")
        for r in rows:
            q = r.query
            print(f"{q.j},{q.m},{q.n},{r.theorem},{r.unified},{r.stated},{'yes' if r.agree else 'no'}")
    for r in bad:
        print(
            f"WARNING: {r.query.label()}: unified {r.unified}, {r.theorem} states {r.stated}",
            file=sys.stderr,
        )
    print(f"rows={len(rows)} disagreements={len(bad)}")
    if bad:
        sys.exit(EXIT_BAD)
