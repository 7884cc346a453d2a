import argparse
from typing import Any, Tuple

from mrn.core.constants import EXIT_USAGE
from mrn.core.errors import MrnError, die
from mrn.domain.formulas import RamseyQuery


def _as_int(value: Any, what: str) -> int:
    try:
        return int(value)
    except (TypeError, ValueError) as err:
        raise argparse.ArgumentTypeError(f"{what} must be an integer, got {value!r}") from err


def positive_int(value: Any) -> int:
    n = _as_int(value, "value")
    if n < 1:
        raise argparse.ArgumentTypeError(f"value must be >= 1, got {n}")
    return n


def nonnegative_int(value: Any) -> int:
    n = _as_int(value, "value")
    if n < 0:
        raise argparse.ArgumentTypeError(f"value must be >= 0, got {n}")
    return n


def positive_float(value: Any) -> float:
    try:
        x = float(value)
    except (TypeError, ValueError) as err:
        raise argparse.ArgumentTypeError(f"value must be a number, got {value!r}") from err
    if not x > 0:
        raise argparse.ArgumentTypeError(f"value must be > 0, got {value}")
    return x


def int_range(value: Any) -> Tuple[int, int]:
    """Parse `a-b` (inclusive) or a single `a` into (lo, hi)."""
    text = str(value).strip()
    lo_s, sep, hi_s = text.partition("-")
    lo = _as_int(lo_s, "range start")
    hi = _as_int(hi_s, "range end") if sep else lo
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def is_quiet(args: argparse.Namespace) -> bool:
    return bool(getattr(args, "quiet", False))


def query_from_args(args: argparse.Namespace) -> RamseyQuery:
    try:
        return RamseyQuery(args.j, args.m, args.n)
    except MrnError as e:
        die(str(e), code=EXIT_USAGE)
