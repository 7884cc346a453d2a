"""Bit-exact coloring document format.

    MRN1
    j=<int> t=<int>[ m=<int> n=<int>]
    colors=<E chars from {1,2} in canonical edge order>

UTF-8, LF endings, no trailing whitespace, exactly one trailing newline.
"""

import re
from dataclasses import dataclass
from typing import Optional

from mrn.core.constants import COLOR_ONE, COLOR_TWO, FORMAT_MAGIC
from mrn.core.errors import FormatError, ParameterError
from mrn.domain.multipartite import TwoColoring, make_shape

_INT = r"(0|[1-9][0-9]*)"
_PARAMS_RE = re.compile(rf"j={_INT} t={_INT}(?: m={_INT} n={_INT})?")


@dataclass(frozen=True)
class ColoringDocument:
    coloring: TwoColoring
    m: Optional[int] = None
    n: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.m is None) != (self.n is None):
            raise ParameterError("m and n must be given together")

    @property
    def j(self) -> int:
        return self.coloring.shape.j

    @property
    def t(self) -> int:
        return self.coloring.shape.t


def serialize(doc: ColoringDocument) -> str:
    params = f"j={doc.j} t={doc.t}"
    if doc.m is not None:
        params += f" m={doc.m} n={doc.n}"
    return f"{FORMAT_MAGIC}\n{params}\ncolors={doc.coloring.colors_string()}\n"


def parse(text: str) -> ColoringDocument:
    if not text.endswith("\n"):
        raise FormatError("document must end with exactly one newline")
    lines = text[:-1].split("\n")
    if len(lines) != 3:
        raise FormatError(f"expected 3 lines, found {len(lines)}")
    magic, params, payload = lines

    if magic != FORMAT_MAGIC:
        raise FormatError(f"line 1: expected {FORMAT_MAGIC!r}, found {magic!r}")

    match = _PARAMS_RE.fullmatch(params)
    if not match:
        raise FormatError(f"line 2: expected 'j=<int> t=<int>[ m=<int> n=<int>]', found {params!r}")
    j, t = int(match.group(1)), int(match.group(2))
    m = int(match.group(3)) if match.group(3) is not None else None
    n = int(match.group(4)) if match.group(4) is not None else None

    if not payload.startswith("colors="):
        raise FormatError("line 3: missing 'colors=' field")
    body = payload[len("colors="):]
    bad = next((i for i, ch in enumerate(body) if ch not in "12"), None)
    if bad is not None:
        raise FormatError(f"line 3: payload char {bad} is {body[bad]!r}; colors are '1' or '2'")

    try:
        shape = make_shape(j, t)
    except ParameterError as e:
        raise FormatError(f"line 2: {e}") from e
    if len(body) != shape.E:
        raise FormatError(
            f"line 3: payload has {len(body)} colors, {shape.label()} has {shape.E} edges"
        )
    colors = tuple(COLOR_ONE if ch == "1" else COLOR_TWO for ch in body)
    return ColoringDocument(TwoColoring(shape, colors), m, n)


def parse_bytes(data: bytes) -> ColoringDocument:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise FormatError(f"not UTF-8 text: {e}") from e
    return parse(text)
