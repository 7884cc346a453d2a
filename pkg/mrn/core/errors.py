import sys
from typing import NoReturn


class MrnError(ValueError):
    """Base class for library errors surfaced to CLI users as exit code 2."""


class ParameterError(MrnError):
    pass


class FormatError(MrnError):
    pass


class NaiveLimitError(MrnError):
    pass


def die(msg: str, code: int = 1) -> NoReturn:
    print(f"ERROR: {msg}", file=sys.stderr)
    sys.exit(code)


def warn(msg: str) -> None:
    print(f"WARNING: {msg}", file=sys.stderr)
