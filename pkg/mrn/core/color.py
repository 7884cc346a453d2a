import sys
from typing import Optional

_CLI_COLOR_OVERRIDE: Optional[bool] = None

_GREEN = "\033[32m"
_RED = "\033[31m"
_RESET = "\033[0m"


def set_cli_color_override(value: Optional[bool]) -> None:
    global _CLI_COLOR_OVERRIDE
    _CLI_COLOR_OVERRIDE = value


def _supports_color() -> bool:
    """Return whether to use ANSI colors.

    `--color` / `--no-color` win; otherwise color only an interactive stdout.
    """
    if _CLI_COLOR_OVERRIDE is not None:
        return _CLI_COLOR_OVERRIDE
    try:
        return sys.stdout.isatty()
    except Exception:
        return False


def colorize_verdict(word: str, ok: bool) -> str:
    """Paint a verdict word green (ok) or red; plain text when colors are off."""
    if not _supports_color():
        return word
    return f"{_GREEN if ok else _RED}{word}{_RESET}"
