"""Extremal lower-bound colorings and the goodness check for any coloring.

A coloring of K_{j x t} is good for (m, n) when its color-1 graph has no K_m
and its color-2 graph has no n-edge matching.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from mrn.core.constants import COLOR_ONE, COLOR_TWO
from mrn.core.errors import ParameterError
from mrn.domain.clique import CliqueCertificate, clique_number, contains_clique
from mrn.domain.formulas import RamseyQuery, mrn_value
from mrn.domain.matching import Matching, max_matching
from mrn.domain.multipartite import TwoColoring, color_subgraph, make_shape


@dataclass(frozen=True)
class GoodnessReport:
    good: bool
    omega1: int
    nu2: int
    clique_cert: Optional[CliqueCertificate] = None
    matching_cert: Optional[Matching] = None

    def render(self) -> str:
        if self.good:
            return f"good omega1={self.omega1} nu2={self.nu2}"
        parts = ["bad"]
        if self.clique_cert is not None:
            parts.append(f"clique={self.clique_cert.render()}")
        if self.matching_cert is not None:
            parts.append(f"matching={self.matching_cert.render()}")
        parts.append(f"omega1={self.omega1}")
        parts.append(f"nu2={self.nu2}")
        return " ".join(parts)


def verify_good(coloring: TwoColoring, m: int, n: int) -> GoodnessReport:
    if m < 1 or n < 1:
        raise ParameterError(f"m and n must be >= 1 (got m={m}, n={n})")
    g1 = color_subgraph(coloring, COLOR_ONE)
    g2 = color_subgraph(coloring, COLOR_TWO)

    clique = contains_clique(g1, m)
    matching = max_matching(g2)
    matching_cert = Matching(matching.edges[:n]) if len(matching) >= n else None
    return GoodnessReport(
        good=clique is None and matching_cert is None,
        omega1=clique_number(g1),
        nu2=len(matching),
        clique_cert=clique,
        matching_cert=matching_cert,
    )


def _resolve_t(q: RamseyQuery, t: Optional[int]) -> int:
    value = mrn_value(q)
    if t is None:
        if value.is_infinite:
            raise ParameterError(
                f"{q.label()} is infinite (j <= m - 1); give an explicit t for the witness"
            )
        return value.t - 1
    if t < 0:
        raise ParameterError(f"t must be >= 0, got {t}")
    return t


def build_extremal(q: RamseyQuery, t: Optional[int] = None) -> TwoColoring:
    """Lower-bound witness for `q`, at t = t* - 1 unless `t` is given.

    Finite regime: color 2 is every cross edge among the last j + 2 - m parts
    (so G^2 is K_{(j+2-m) x t}) and color 1 everywhere else. Infinite regime:
    all edges color 1, and `t` is mandatory.
    """
    t = _resolve_t(q, t)
    shape = make_shape(q.j, t)
    if q.j <= q.m - 1:
        return TwoColoring.all_color(shape, COLOR_ONE)
    first = q.j - q.s
    return TwoColoring.from_color2_edges(
        shape,
        ((u, v) for u, v in shape.edges() if shape.part(u) >= first),
    )


def build_diagonal_star(q: RamseyQuery, t: Optional[int] = None) -> TwoColoring:
    """Diagonal (j = m) witness with color 2 on every edge touching the last part.

    G^2 is K_{t, (j-1)t} and G^1 is K_{(j-1) x t}; at t = n - 1 that gives
    omega1 = j - 1 and nu2 = n - 1.
    """
    if q.j != q.m:
        raise ParameterError(f"star witness needs j = m (got j={q.j}, m={q.m})")
    t = _resolve_t(q, t)
    shape = make_shape(q.j, t)
    last = q.j - 1
    return TwoColoring.from_color2_edges(
        shape,
        ((u, v) for u, v in shape.edges() if shape.part(v) == last),
    )


@dataclass(frozen=True)
class SweepFailure:
    query: RamseyQuery
    t: int
    reason: str


@dataclass
class SweepSummary:
    checked: int = 0
    skipped_infinite: int = 0
    failures: List[SweepFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _sweep_one(q: RamseyQuery) -> Optional[SweepFailure]:
    coloring = build_extremal(q)
    t = coloring.shape.t
    report = verify_good(coloring, q.m, q.n)
    if not report.good:
        return SweepFailure(q, t, report.render())
    # G^2 is K_{s x t}; its matching number is floor(s t / 2) since s >= 2.
    expected_nu2 = q.s * t // 2
    if report.nu2 != expected_nu2:
        return SweepFailure(q, t, f"nu2={report.nu2}, expected {expected_nu2}")
    expected_omega1 = min(q.m - 1, q.j) if t >= 1 else 0
    if report.omega1 != expected_omega1:
        return SweepFailure(q, t, f"omega1={report.omega1}, expected {expected_omega1}")
    return None


def witness_sweep(
    m_range: Sequence[int], j_range: Sequence[int], n_range: Sequence[int]
) -> SweepSummary:
    """Build and verify the lower-bound witness for every finite-regime query in range."""
    summary = SweepSummary()
    for m in m_range:
        for j in j_range:
            for n in n_range:
                q = RamseyQuery(j, m, n)
                if j <= m - 1:
                    summary.skipped_infinite += 1
                    continue
                summary.checked += 1
                failure = _sweep_one(q)
                if failure is not None:
                    summary.failures.append(failure)
    return summary
