import sys
from pathlib import Path

from mrn.core.constants import EXIT_USAGE
from mrn.core.errors import die


def read_bytes(path: Path, *, label: str) -> bytes:
    try:
        return path.read_bytes()
    except Exception as e:
        die(f"Failed to read {label} file: {path}\n{e}", code=EXIT_USAGE)


def require_existing_file(path_value: str, *, label: str) -> Path:
    path = Path(path_value).expanduser().resolve()
    if not path.exists():
        die(f"{label} file not found: {path}", code=EXIT_USAGE)
    if not path.is_file():
        die(f"{label} path is not a file: {path}", code=EXIT_USAGE)
    return path


def write_text_lf(path_value: str, text: str, *, label: str) -> Path:
    """Write `text` as UTF-8 bytes, keeping LF line endings on every platform."""
    path = Path(path_value).expanduser()
    try:
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(text.encode("utf-8"))
    except Exception as e:
        die(f"Failed to write {label} file: {path}\n{e}", code=EXIT_USAGE)
    return path


def emit_stdout(text: str) -> None:
    # Bypass newline translation so piped output is byte-identical to files.
    sys.stdout.flush()
    sys.stdout.buffer.write(text.encode("utf-8"))
    sys.stdout.buffer.flush()
