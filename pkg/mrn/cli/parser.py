import argparse

from mrn.commands.formula import cmd_consistency, cmd_formula, cmd_table
from mrn.commands.options import (
    int_range,
    nonnegative_int,
    positive_float,
    positive_int,
)
from mrn.commands.search import cmd_compute, cmd_search
from mrn.commands.witness import cmd_sweep, cmd_verify, cmd_witness
from mrn.core.constants import (
    DEFAULT_NODE_BUDGET,
    DEFAULT_T_MAX,
    DEFAULT_TIME_BUDGET,
    NAIVE_EDGE_LIMIT,
    __version__,
)


def _add_query_flags(parser: argparse.ArgumentParser) -> None:
    # Plain ints: domain errors (e.g. m = 2) are reported by the library with exit 2.
    parser.add_argument("--j", type=int, required=True, help="Number of parts (>= 2)")
    parser.add_argument("--m", type=int, required=True, help="Clique order K_m (>= 3)")
    parser.add_argument("--n", type=int, required=True, help="Stripe size nK_2 (>= 1)")


def _add_budget_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--budget",
        type=positive_int,
        default=DEFAULT_NODE_BUDGET,
        help=f"Search node budget (default: {DEFAULT_NODE_BUDGET})",
    )
    parser.add_argument(
        "--time-budget",
        dest="time_budget",
        type=positive_float,
        default=DEFAULT_TIME_BUDGET,
        help=f"Wall-clock budget in seconds per search (default: {DEFAULT_TIME_BUDGET:g})",
    )
    parser.add_argument(
        "--threads",
        type=positive_int,
        default=1,
        help="Explore top-level branches on N threads (default: 1, bit-reproducible)",
    )


def _configure_formula_parser(parser: argparse.ArgumentParser) -> None:
    _add_query_flags(parser)
    parser.set_defaults(func=cmd_formula)


def _configure_witness_parser(parser: argparse.ArgumentParser) -> None:
    _add_query_flags(parser)
    parser.add_argument(
        "--t",
        type=nonnegative_int,
        default=None,
        help="Vertices per part (default: m_j - 1; required when the value is infinite)",
    )
    parser.add_argument(
        "--variant",
        choices=["general", "star"],
        default="general",
        help="general = color 2 on the last j+2-m parts; star = color 2 on edges at the last part (j = m only)",
    )
    parser.add_argument("-o", "--output", help="Write the coloring file here instead of stdout")
    parser.set_defaults(func=cmd_witness)


def _configure_verify_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="Coloring file (MRN1 format)")
    parser.add_argument("--m", type=int, default=None, help="Clique order (default: from file header)")
    parser.add_argument("--n", type=int, default=None, help="Stripe size (default: from file header)")
    parser.set_defaults(func=cmd_verify)


def _configure_search_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--j", type=int, required=True, help="Number of parts (>= 2)")
    parser.add_argument("--t", type=int, required=True, help="Vertices per part (>= 0)")
    parser.add_argument("--m", type=int, required=True, help="Clique order K_m (>= 3)")
    parser.add_argument("--n", type=int, required=True, help="Stripe size nK_2 (>= 1)")
    _add_budget_flags(parser)
    parser.add_argument(
        "--naive",
        action="store_true",
        help=f"Use the exhaustive oracle (hosts with at most {NAIVE_EDGE_LIMIT} edges)",
    )
    parser.add_argument("-o", "--output", help="Write the witness coloring here when COLORABLE")
    parser.set_defaults(func=cmd_search)


def _configure_compute_parser(parser: argparse.ArgumentParser) -> None:
    _add_query_flags(parser)
    parser.add_argument(
        "--t-max",
        dest="t_max",
        type=positive_int,
        default=DEFAULT_T_MAX,
        help=f"Largest t to search (default: {DEFAULT_T_MAX})",
    )
    _add_budget_flags(parser)
    parser.set_defaults(func=cmd_compute)


def _configure_table_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int, required=True, help="Clique order K_m (>= 3)")
    parser.add_argument("--j", type=int_range, required=True, help="Part-count range, e.g. 2-7")
    parser.add_argument("--n", type=int_range, required=True, help="Stripe-size range, e.g. 1-5")
    parser.add_argument("--format", choices=["md", "csv"], default="md")
    parser.add_argument("-o", "--output", help="Write the table here instead of stdout")
    parser.set_defaults(func=cmd_table)


def _configure_sweep_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int_range, default=(3, 8), help="Clique orders (default: 3-8)")
    parser.add_argument("--j", type=int_range, default=(2, 12), help="Part counts (default: 2-12)")
    parser.add_argument("--n", type=int_range, default=(1, 20), help="Stripe sizes (default: 1-20)")
    parser.set_defaults(func=cmd_sweep)


def _configure_consistency_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--j-max", dest="j_max", type=positive_int, default=12)
    parser.add_argument("--n-max", dest="n_max", type=positive_int, default=20)
    parser.add_argument("--m-max", dest="m_max", type=positive_int, default=8)
    parser.add_argument("--all", action="store_true", help="Print every row as CSV, not just the summary")
    parser.set_defaults(func=cmd_consistency)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mrn",
        description="Multipartite Ramsey numbers m_j(K_m, nK_2): formulas, witnesses, exact search.",
    )
    p.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    color_grp = p.add_mutually_exclusive_group()
    color_grp.add_argument(
        "--color", dest="color", action="store_true", help="Force-enable ANSI colors"
    )
    color_grp.add_argument(
        "--no-color",
        dest="no_color",
        action="store_true",
        help="Force-disable ANSI colors",
    )
    p.add_argument(
        "--quiet",
        dest="quiet",
        action="store_true",
        help="Suppress progress and statistics on stderr (errors still print)",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    a = sub.add_parser("formula", help="Closed-form value and the statement covering it")
    _configure_formula_parser(a)

    a = sub.add_parser("witness", help="Write the extremal lower-bound coloring")
    _configure_witness_parser(a)

    a = sub.add_parser("verify", help="Check a coloring file for K_m in color 1 and nK_2 in color 2")
    _configure_verify_parser(a)

    a = sub.add_parser("search", help="Decide colorability of K_{j x t} exactly")
    _configure_search_parser(a)

    a = sub.add_parser("compute", help="Find m_j(K_m, nK_2) by search and compare with the formula")
    _configure_compute_parser(a)

    a = sub.add_parser("table", help="Render formula values as a Markdown or CSV table")
    _configure_table_parser(a)

    a = sub.add_parser("sweep", help="Build and verify witnesses over parameter ranges")
    _configure_sweep_parser(a)

    a = sub.add_parser("consistency", help="Compare the unified formula with every stated value")
    _configure_consistency_parser(a)

    return p
