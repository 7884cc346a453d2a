from dataclasses import dataclass
from typing import List, Tuple

from mrn.core.errors import ParameterError
from mrn.domain.formulas import RamseyQuery, mrn_value

TABLE_FORMATS = ("md", "csv")


@dataclass(frozen=True)
class TableSpec:
    m: int
    j_range: Tuple[int, int]
    n_range: Tuple[int, int]
    fmt: str = "md"

    def __post_init__(self) -> None:
        for name, (lo, hi) in (("j", self.j_range), ("n", self.n_range)):
            if lo > hi:
                raise ParameterError(f"empty {name} range {lo}-{hi}")
        if self.fmt not in TABLE_FORMATS:
            raise ParameterError(f"unknown table format {self.fmt!r} (expected md or csv)")
        # Validates the low corner; the rest of the grid only grows.
        RamseyQuery(self.j_range[0], self.m, self.n_range[0])

    def js(self) -> range:
        return range(self.j_range[0], self.j_range[1] + 1)

    def ns(self) -> range:
        return range(self.n_range[0], self.n_range[1] + 1)


def _cell(j: int, m: int, n: int) -> str:
    value = mrn_value(RamseyQuery(j, m, n))
    return "inf" if value.is_infinite else str(value.t)


def table_rows(spec: TableSpec) -> List[List[str]]:
    """Header row followed by one row per n."""
    rows = [["n"] + [f"j={j}" for j in spec.js()]]
    for n in spec.ns():
        rows.append([str(n)] + [_cell(j, spec.m, n) for j in spec.js()])
    return rows


def render_table(spec: TableSpec) -> str:
    rows = table_rows(spec)
    if spec.fmt == "csv":
        return "".join(",".join(r) + "\n" for r in rows)
    header, body = rows[0], rows[1:]
    lines = ["| " + " | ".join(header) + " |", "|" + " --- |" * len(header)]
    lines += ["| " + " | ".join(r) + " |" for r in body]
    return "\n".join(lines) + "\n"
