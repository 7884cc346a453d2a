"""Closed-form values of m_j(K_m, nK_2) and the statements they come from.

The implementation is a single unified formula: INFINITE when j <= m - 1,
otherwise ceil(2n / (j + 2 - m)). Each individually stated result is kept as a
value oracle (`theorem_value`) so `consistency_table` can check that the
unified formula agrees with all of them on their stated ranges.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional

from mrn.core.errors import ParameterError


@dataclass(frozen=True)
class RamseyQuery:
    j: int
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 3:
            raise ParameterError(f"m must be >= 3 (got m={self.m})")
        if self.j < 2:
            raise ParameterError(f"j must be >= 2 (got j={self.j})")
        if self.n < 1:
            raise ParameterError(f"n must be >= 1 (got n={self.n})")

    @property
    def s(self) -> int:
        """Number of parts carrying color 2 in the extremal construction."""
        return self.j + 2 - self.m

    def label(self) -> str:
        return f"m_{self.j}(K_{self.m}, {self.n}K2)"


class ValueKind(Enum):
    FINITE = "finite"
    INFINITE = "infinite"


@dataclass(frozen=True)
class RamseyValue:
    kind: ValueKind
    t: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind is ValueKind.FINITE and (self.t is None or self.t < 1):
            raise ParameterError(f"finite Ramsey value must be >= 1, got {self.t}")
        if self.kind is ValueKind.INFINITE and self.t is not None:
            raise ParameterError("INFINITE carries no t")

    @classmethod
    def finite(cls, t: int) -> "RamseyValue":
        return cls(ValueKind.FINITE, t)

    @classmethod
    def infinite(cls) -> "RamseyValue":
        return cls(ValueKind.INFINITE)

    @property
    def is_infinite(self) -> bool:
        return self.kind is ValueKind.INFINITE

    def __str__(self) -> str:
        return "INF" if self.is_infinite else str(self.t)


class Regime(Enum):
    INFINITE_FEW_PARTS = "INFINITE_FEW_PARTS"
    DIAGONAL = "DIAGONAL"
    SUBDIAGONAL_SMALL_N = "SUBDIAGONAL_SMALL_N"
    GENERAL = "GENERAL"


@dataclass(frozen=True)
class RegimeTag:
    regime: Regime
    theorem: str


THM_K3 = "Theorem t1"
THM_INFINITE = "Theorem t2"
LEMMA_SMALL_DIAGONAL = "Lemma l1"
THM_DIAGONAL = "Theorem t3"
THM_SUBDIAGONAL = "Theorem t4"
THM_K4_J5 = "Theorem t6"
THM_K4_INDUCTIVE = "Theorem t7"
THM_K5_J6_SMALL = "Theorem th4"
THM_K5_J6 = "Theorem th5"
THM_K5_INDUCTIVE = "Theorem th6"
THM_GENERAL = "Theorem th7"
THM_LOWER_BOUND = "Theorem t5"
COMBINED_K4 = "combined K_4 theorem"
COMBINED_K5 = "combined K_5 theorem"
SMALL_CASE = "small-case remark"


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def mrn_value(q: RamseyQuery) -> RamseyValue:
    if q.j <= q.m - 1:
        return RamseyValue.infinite()
    return RamseyValue.finite(_ceil_div(2 * q.n, q.s))


def classify_regime(q: RamseyQuery) -> RegimeTag:
    if q.j <= q.m - 1:
        return RegimeTag(Regime.INFINITE_FEW_PARTS, THM_INFINITE)
    if q.j == q.m:
        regime = Regime.DIAGONAL
    elif q.j == q.m + 1 and q.n <= 5:
        regime = Regime.SUBDIAGONAL_SMALL_N
    else:
        regime = Regime.GENERAL

    if q.m == 3:
        return RegimeTag(regime, THM_K3)
    if regime is Regime.DIAGONAL:
        return RegimeTag(regime, LEMMA_SMALL_DIAGONAL if q.n <= 2 else THM_DIAGONAL)
    if q.n <= 2:
        return RegimeTag(regime, SMALL_CASE)
    if regime is Regime.SUBDIAGONAL_SMALL_N:
        return RegimeTag(regime, THM_SUBDIAGONAL)
    if q.m == 4:
        return RegimeTag(regime, COMBINED_K4)
    if q.m == 5:
        return RegimeTag(regime, COMBINED_K5)
    if q.j >= q.m + 2:
        return RegimeTag(regime, THM_GENERAL)
    # j = m + 1 with n >= 6 and m >= 6: only the lower-bound construction is stated.
    return RegimeTag(regime, THM_LOWER_BOUND)


_Oracle = Callable[[RamseyQuery], Optional[RamseyValue]]
_INF = RamseyValue.infinite()
_fin = RamseyValue.finite


def _k3(q: RamseyQuery) -> Optional[RamseyValue]:
    if q.m != 3:
        return None
    return _INF if q.j == 2 else _fin(_ceil_div(2 * q.n, q.j - 1))


def _few_parts(q: RamseyQuery) -> Optional[RamseyValue]:
    return _INF if q.j <= q.m - 1 else None


def _small_diagonal(q: RamseyQuery) -> Optional[RamseyValue]:
    return _fin(q.n) if q.j == q.m and q.n <= 2 else None


def _diagonal(q: RamseyQuery) -> Optional[RamseyValue]:
    return _fin(q.n) if q.j == q.m and q.n >= 3 else None


def _subdiagonal(q: RamseyQuery) -> Optional[RamseyValue]:
    return _fin(q.n - 1) if q.j == q.m + 1 and q.n in (3, 4, 5) else None


def _k4_j5(q: RamseyQuery) -> Optional[RamseyValue]:
    return _fin(_ceil_div(2 * q.n, 3)) if (q.m, q.j) == (4, 5) and q.n >= 3 else None


def _k4_inductive(q: RamseyQuery) -> Optional[RamseyValue]:
    return _fin(_ceil_div(2 * q.n, q.j - 2)) if q.m == 4 and q.j >= 6 and q.n >= 3 else None


def _combined_k4(q: RamseyQuery) -> Optional[RamseyValue]:
    if q.m != 4:
        return None
    return _INF if q.j in (2, 3) else _fin(_ceil_div(2 * q.n, q.j - 2))


def _k5_j6_small(q: RamseyQuery) -> Optional[RamseyValue]:
    return _fin(q.n - 2) if (q.m, q.j) == (5, 6) and q.n in (6, 7, 8) else None


def _k5_j6(q: RamseyQuery) -> Optional[RamseyValue]:
    return _fin(q.n - q.n // 3) if (q.m, q.j) == (5, 6) and q.n >= 6 else None


def _k5_inductive(q: RamseyQuery) -> Optional[RamseyValue]:
    return _fin(_ceil_div(2 * q.n, q.j - 3)) if q.m == 5 and q.j >= 7 and q.n >= 3 else None


def _combined_k5(q: RamseyQuery) -> Optional[RamseyValue]:
    if q.m != 5:
        return None
    return _INF if q.j <= 4 else _fin(_ceil_div(2 * q.n, q.j - 3))


def _general(q: RamseyQuery) -> Optional[RamseyValue]:
    if q.m >= 6 and q.j >= q.m + 2 and q.n >= 3:
        return _fin(_ceil_div(2 * q.n, q.s))
    return None


def _small_case(q: RamseyQuery) -> Optional[RamseyValue]:
    if q.j < q.m or q.n > 2:
        return None
    if q.n == 1:
        return _fin(1)
    return _fin(2) if q.j <= q.m + 1 else _fin(1)


THEOREM_ORACLES: Dict[str, _Oracle] = {
    THM_K3: _k3,
    THM_INFINITE: _few_parts,
    LEMMA_SMALL_DIAGONAL: _small_diagonal,
    THM_DIAGONAL: _diagonal,
    THM_SUBDIAGONAL: _subdiagonal,
    THM_K4_J5: _k4_j5,
    THM_K4_INDUCTIVE: _k4_inductive,
    COMBINED_K4: _combined_k4,
    THM_K5_J6_SMALL: _k5_j6_small,
    THM_K5_J6: _k5_j6,
    THM_K5_INDUCTIVE: _k5_inductive,
    COMBINED_K5: _combined_k5,
    THM_GENERAL: _general,
    SMALL_CASE: _small_case,
}


def theorem_value(label: str, q: RamseyQuery) -> Optional[RamseyValue]:
    """Value the named statement asserts for `q`, or None outside its stated range."""
    try:
        oracle = THEOREM_ORACLES[label]
    except KeyError:
        raise ParameterError(f"unknown statement label: {label!r}") from None
    return oracle(q)


@dataclass(frozen=True)
class ConsistencyRow:
    query: RamseyQuery
    unified: RamseyValue
    theorem: str
    stated: RamseyValue

    @property
    def agree(self) -> bool:
        return self.unified == self.stated


def consistency_table(
    j_max: int = 12, n_max: int = 20, m_max: int = 8
) -> List[ConsistencyRow]:
    """Unified value next to every stated value for 3 <= m <= m_max, 2 <= j <= j_max, 1 <= n <= n_max.

    The default bounds cover m in {3, 4, 5} in full together with the
    diagonal (j = m) and subdiagonal (j = m + 1) families up to m = 8.
    """
    if j_max < 2 or n_max < 1 or m_max < 3:
        raise ParameterError(f"empty consistency grid (j_max={j_max}, n_max={n_max}, m_max={m_max})")
    rows: List[ConsistencyRow] = []
    for m in range(3, m_max + 1):
        for j in range(2, max(j_max, m + 1) + 1):
            for n in range(1, n_max + 1):
                q = RamseyQuery(j, m, n)
                unified = mrn_value(q)
                for label, oracle in THEOREM_ORACLES.items():
                    stated = oracle(q)
                    if stated is not None:
                        rows.append(ConsistencyRow(q, unified, label, stated))
    return rows
