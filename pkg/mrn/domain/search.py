"""Exact decision of "is K_{j x t} 2-colorable to (K_m, nK_2)?".

Cover-set search. Take a good coloring and a maximum color-2 matching M with
k <= n - 1 edges; W = V(M) has 2k vertices and Y = V - W is independent in
color 2, so every cross edge inside Y is color 1. Up to part and slot
permutations W can be taken to fill the lowest slots of each part with a
non-increasing occupancy profile. For each profile the search:

  1. drops W when Y meets >= m parts (Y alone holds a color-1 K_m);
  2. fixes a perfect matching M of W (its edges are color 2, and M must stay
     maximum, so nu(G^2) = |M| throughout);
  3. picks color-2 neighbourhoods into Y for every matched pair, obeying the
     exchange rule (two distinct private neighbours would augment M). Only
     the empty set, singletons and the full set are tried: any good coloring
     in which a vertex has >= 2 color-2 neighbours in Y stays good when that
     vertex is given all of them;
  4. colors the remaining W-W edges by DFS in rank order, color 1 first, with
     incremental clique and matching checks.

Every leaf is re-checked with `verify_good` before it is reported.
"""

import sys
import threading
import time
from collections import Counter
from concurrent.futures import FIRST_COMPLETED, Future, ThreadPoolExecutor, wait
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Set, Tuple

from mrn.core.constants import (
    COLOR_ONE,
    COLOR_TWO,
    DEFAULT_NODE_BUDGET,
    DEFAULT_T_MAX,
    DEFAULT_TIME_BUDGET,
    NAIVE_EDGE_LIMIT,
)
from mrn.core.errors import NaiveLimitError, ParameterError
from mrn.domain.clique import has_clique_in
from mrn.domain.formulas import RamseyValue
from mrn.domain.graph import Graph, iter_bits, popcount
from mrn.domain.matching import has_matching_of_size
from mrn.domain.multipartite import MultipartiteShape, TwoColoring, make_shape
from mrn.domain.witness import verify_good


class SearchStatus(Enum):
    COLORABLE = "COLORABLE"
    NOT_COLORABLE = "NOT_COLORABLE"
    BUDGET_EXHAUSTED = "BUDGET_EXHAUSTED"


@dataclass
class SearchStats:
    nodes: int = 0
    cover_sets: int = 0
    elapsed: float = 0.0

    def render(self) -> str:
        return f"stats: nodes={self.nodes} cover_sets={self.cover_sets} elapsed={self.elapsed:.3f}s"


@dataclass
class SearchOutcome:
    status: SearchStatus
    witness: Optional[TwoColoring] = None
    stats: SearchStats = field(default_factory=SearchStats)

    def __post_init__(self) -> None:
        if (self.status is SearchStatus.COLORABLE) != (self.witness is not None):
            raise ParameterError("a witness is present exactly when the status is COLORABLE")


@dataclass(frozen=True)
class CoverSet:
    """Canonical cover set: the lowest `profile[p]` slots of every part p."""

    shape: MultipartiteShape
    profile: Tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.profile)

    def mask(self) -> int:
        out = 0
        for p, k in enumerate(self.profile):
            out |= ((1 << k) - 1) << (p * self.shape.t)
        return out

    def parts_meeting_rest(self) -> int:
        """Number of parts with at least one vertex outside W."""
        return sum(1 for k in self.profile if k < self.shape.t)


def cover_set_profiles(j: int, t: int, w: int) -> Iterator[Tuple[int, ...]]:
    """Non-increasing length-j tuples with entries in [0, t] summing to w."""

    def rec(remaining_parts: int, remaining: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if remaining_parts == 0:
            if remaining == 0:
                yield ()
            return
        if remaining > cap * remaining_parts:
            return
        for k in range(min(cap, remaining), -1, -1):
            for tail in rec(remaining_parts - 1, remaining - k, k):
                yield (k,) + tail

    if w < 0 or t < 0:
        return
    yield from rec(j, w, t)


def _matchable(vertices: Sequence[int], part_of) -> bool:
    # Complete multipartite: a perfect matching exists iff no part holds more than half.
    if len(vertices) % 2:
        return False
    counts = Counter(part_of(v) for v in vertices)
    return 2 * max(counts.values(), default=0) <= len(vertices)


def _perfect_matchings(vertices: Sequence[int], part_of) -> Iterator[List[Tuple[int, int]]]:
    """Perfect matchings of `vertices` using cross-part pairs, lowest vertex first.

    Pairs whose remainder cannot be matched are skipped, so every partial
    matching extends and the generator never walks a dead subtree.
    """
    if not vertices:
        yield []
        return
    if not _matchable(vertices, part_of):
        return
    u = vertices[0]
    rest = vertices[1:]
    for i, v in enumerate(rest):
        if part_of(u) == part_of(v):
            continue
        remainder = rest[:i] + rest[i + 1:]
        if not _matchable(remainder, part_of):
            continue
        for tail in _perfect_matchings(remainder, part_of):
            yield [(u, v)] + tail


class _BudgetExhausted(Exception):
    pass


class _Cancelled(Exception):
    pass


class _Budget:
    """Node and wall-clock budget shared by every branch of one search."""

    def __init__(self, node_budget: int, time_budget: float) -> None:
        self.node_budget = node_budget
        self.deadline = time.monotonic() + time_budget
        self.nodes = 0
        self._lock = threading.Lock()

    def tick(self) -> None:
        with self._lock:
            self.nodes += 1
            nodes = self.nodes
        if nodes > self.node_budget:
            raise _BudgetExhausted()
        if nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted()


class _BranchSearch:
    """DFS below one (cover set, matching) pair."""

    def __init__(
        self,
        shape: MultipartiteShape,
        m: int,
        n: int,
        w_mask: int,
        matching: List[Tuple[int, int]],
        budget: _Budget,
        cancelled: Callable[[], bool],
    ) -> None:
        self.shape = shape
        self.m = m
        self.n = n
        self.budget = budget
        self.cancelled = cancelled
        self.N = shape.N
        self.part_masks = [shape.part_mask(p) for p in range(shape.j)]
        self.w_mask = w_mask
        self.y_mask = ((1 << self.N) - 1) & ~w_mask
        self.matching = matching
        self.k = len(matching)

        self.g1 = [0] * self.N
        self.g2 = [0] * self.N
        for y in iter_bits(self.y_mask):
            self.g1[y] = self.y_mask & ~self.part_masks[shape.part(y)]
        for a, b in matching:
            self._link(self.g2, a, b)

        matched = {(a, b) for a, b in matching}
        self.ww_edges = [
            (u, v)
            for u, v in shape.edges()
            if (w_mask >> u) & 1 and (w_mask >> v) & 1 and (u, v) not in matched
        ]

    @staticmethod
    def _link(adj: List[int], u: int, v: int) -> None:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    @staticmethod
    def _unlink(adj: List[int], u: int, v: int) -> None:
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)

    def _tick(self) -> None:
        if self.cancelled():
            raise _Cancelled()
        self.budget.tick()

    def _foreign_y(self, a: int) -> int:
        return self.y_mask & ~self.part_masks[self.shape.part(a)]

    def _admissible(self, a: int, nbhd2: int) -> bool:
        # a plus one color-1 neighbour in each of m - 1 parts of Y is a K_m.
        rest1 = self._foreign_y(a) & ~nbhd2
        touched = sum(1 for pm in self.part_masks if rest1 & pm)
        return touched <= self.m - 2

    def _vertex_options(self, a: int) -> List[int]:
        foreign = self._foreign_y(a)
        options = [0] + [1 << y for y in iter_bits(foreign)]
        if popcount(foreign) >= 2:
            options.append(foreign)
        return options

    def _pair_options(self, a: int, b: int) -> List[Tuple[int, int]]:
        opts_a = self._vertex_options(a)
        opts_b = self._vertex_options(b)
        shared = self._foreign_y(a) & self._foreign_y(b)
        seen = set()
        out: List[Tuple[int, int]] = []
        candidates = [(0, sb) for sb in opts_b]
        candidates += [(sa, 0) for sa in opts_a if sa]
        candidates += [(1 << y, 1 << y) for y in iter_bits(shared)]
        for sa, sb in candidates:
            if (sa, sb) in seen:
                continue
            seen.add((sa, sb))
            if self._admissible(a, sa) and self._admissible(b, sb):
                out.append((sa, sb))
        return out

    def _set_neighbourhood(self, a: int, nbhd2: int, add: bool) -> None:
        rest1 = self._foreign_y(a) & ~nbhd2
        for adj, nbhd in ((self.g2, nbhd2), (self.g1, rest1)):
            for y in iter_bits(nbhd):
                if add:
                    self._link(adj, a, y)
                else:
                    self._unlink(adj, a, y)

    def _matching_grew(self) -> bool:
        return has_matching_of_size(Graph(self.N, tuple(self.g2)), self.k + 1)

    def run(self) -> Optional[TwoColoring]:
        return self._assign_pairs(0)

    def _assign_pairs(self, i: int) -> Optional[TwoColoring]:
        if i == self.k:
            return self._color_ww(0)
        a, b = self.matching[i]
        for sa, sb in self._pair_options(a, b):
            self._tick()
            self._set_neighbourhood(a, sa, True)
            self._set_neighbourhood(b, sb, True)
            if not self._matching_grew():
                found = self._assign_pairs(i + 1)
                if found is not None:
                    return found
            self._set_neighbourhood(a, sa, False)
            self._set_neighbourhood(b, sb, False)
        return None

    def _color_ww(self, i: int) -> Optional[TwoColoring]:
        if i == len(self.ww_edges):
            return self._leaf()
        u, v = self.ww_edges[i]
        self._tick()

        common = self.g1[u] & self.g1[v]
        if not has_clique_in(self.g1, common, self.m - 2, self.part_masks):
            self._link(self.g1, u, v)
            found = self._color_ww(i + 1)
            self._unlink(self.g1, u, v)
            if found is not None:
                return found

        self._link(self.g2, u, v)
        found = None
        if not self._matching_grew():
            found = self._color_ww(i + 1)
        self._unlink(self.g2, u, v)
        return found

    def _leaf(self) -> Optional[TwoColoring]:
        colors = tuple(
            COLOR_TWO if (self.g2[u] >> v) & 1 else COLOR_ONE for u, v in self.shape.edges()
        )
        coloring = TwoColoring(self.shape, colors)
        if verify_good(coloring, self.m, self.n).good:
            return coloring
        return None


def _check_params(j: int, t: int, m: int, n: int) -> None:
    if j < 2:
        raise ParameterError(f"j must be >= 2 (got j={j})")
    if t < 0:
        raise ParameterError(f"t must be >= 0 (got t={t})")
    if m < 3:
        raise ParameterError(f"m must be >= 3 (got m={m})")
    if n < 1:
        raise ParameterError(f"n must be >= 1 (got n={n})")


def _branches(shape: MultipartiteShape, m: int, n: int, stats: SearchStats):
    """Top-level (W mask, perfect matching of W) pairs in deterministic order."""
    w_max = min(2 * (n - 1), shape.N)
    for w in range(0, w_max + 1, 2):
        for profile in cover_set_profiles(shape.j, shape.t, w):
            cover = CoverSet(shape, profile)
            if cover.parts_meeting_rest() >= m:
                continue
            stats.cover_sets += 1
            mask = cover.mask()
            vertices = list(iter_bits(mask))
            for matching in _perfect_matchings(vertices, shape.part):
                yield mask, matching


def _report(show_progress: bool, done: int, start: float) -> None:
    if show_progress:
        print(
            f"\rSearched {done} branches ({time.monotonic() - start:.1f}s)",
            end="",
            file=sys.stderr,
            flush=True,
        )


def decide_colorable(
    j: int,
    t: int,
    m: int,
    n: int,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_budget: float = DEFAULT_TIME_BUDGET,
    threads: int = 1,
    show_progress: bool = False,
) -> SearchOutcome:
    """Decide whether some coloring of K_{j x t} avoids K_m in color 1 and nK_2 in color 2.

    Branches are generated lazily and every branch is charged one node, so
    both budgets also bound the enumeration of cover sets and matchings.

    With `threads` > 1 the top-level branches run on a thread pool, at most
    a few per worker in flight; the witness is taken from the lowest-numbered
    branch that produced one, which is the branch a single-threaded run would
    stop at whenever no earlier branch ran out of budget.
    """
    _check_params(j, t, m, n)
    if threads < 1:
        raise ParameterError(f"threads must be >= 1 (got {threads})")
    start = time.monotonic()
    stats = SearchStats()
    shape = make_shape(j, t)

    if t == 0:
        stats.elapsed = time.monotonic() - start
        return SearchOutcome(SearchStatus.COLORABLE, TwoColoring.all_color(shape, COLOR_ONE), stats)

    budget = _Budget(node_budget, time_budget)
    branches = _branches(shape, m, n, stats)
    found: Optional[TwoColoring] = None
    exhausted = False

    if threads == 1:
        try:
            for i, (mask, matching) in enumerate(branches):
                budget.tick()
                found = _BranchSearch(shape, m, n, mask, matching, budget, lambda: False).run()
                _report(show_progress, i + 1, start)
                if found is not None:
                    break
        except _BudgetExhausted:
            exhausted = True
    else:
        best = [sys.maxsize]
        lock = threading.Lock()
        results: Dict[int, TwoColoring] = {}
        exhausted_flag = [False]
        done = [0]

        def work(index: int, mask: int, matching: List[Tuple[int, int]]) -> None:
            search = _BranchSearch(
                shape, m, n, mask, matching, budget, lambda: best[0] < index
            )
            try:
                result = search.run()
            except _Cancelled:
                return
            except _BudgetExhausted:
                exhausted_flag[0] = True
                return
            with lock:
                done[0] += 1
                _report(show_progress, done[0], start)
                if result is not None:
                    results[index] = result
                    if index < best[0]:
                        best[0] = index

        window = 4 * threads
        with ThreadPoolExecutor(max_workers=threads) as pool:
            pending: Set[Future] = set()
            try:
                for index, (mask, matching) in enumerate(branches):
                    if best[0] < index or exhausted_flag[0]:
                        break
                    budget.tick()
                    pending.add(pool.submit(work, index, mask, matching))
                    if len(pending) >= window:
                        finished, pending = wait(pending, return_when=FIRST_COMPLETED)
                        for future in finished:
                            future.result()
            except _BudgetExhausted:
                exhausted_flag[0] = True
            for future in wait(pending).done:
                future.result()
        if best[0] in results:
            found = results[best[0]]
        exhausted = exhausted_flag[0]

    if show_progress:
        print("", file=sys.stderr)
    stats.nodes = budget.nodes
    stats.elapsed = time.monotonic() - start
    if found is not None:
        return SearchOutcome(SearchStatus.COLORABLE, found, stats)
    if exhausted:
        return SearchOutcome(SearchStatus.BUDGET_EXHAUSTED, None, stats)
    return SearchOutcome(SearchStatus.NOT_COLORABLE, None, stats)


class _NaiveSearch:
    def __init__(self, shape: MultipartiteShape, m: int, n: int) -> None:
        self.shape = shape
        self.m = m
        self.n = n
        self.edges = shape.edges()
        self.part_masks = [shape.part_mask(p) for p in range(shape.j)]
        self.g1 = [0] * shape.N
        self.g2 = [0] * shape.N
        self.nodes = 0

    def run(self, i: int = 0) -> Optional[TwoColoring]:
        self.nodes += 1
        if i == len(self.edges):
            colors = tuple(
                COLOR_TWO if (self.g2[u] >> v) & 1 else COLOR_ONE for u, v in self.edges
            )
            coloring = TwoColoring(self.shape, colors)
            return coloring if verify_good(coloring, self.m, self.n).good else None
        u, v = self.edges[i]
        bu, bv = 1 << u, 1 << v

        # Both color classes only grow along a branch, so a violation rules
        # out every completion.
        if not has_clique_in(self.g1, self.g1[u] & self.g1[v], self.m - 2, self.part_masks):
            self.g1[u] |= bv
            self.g1[v] |= bu
            found = self.run(i + 1)
            self.g1[u] &= ~bv
            self.g1[v] &= ~bu
            if found is not None:
                return found

        self.g2[u] |= bv
        self.g2[v] |= bu
        found = None
        if not has_matching_of_size(Graph(self.shape.N, tuple(self.g2)), self.n):
            found = self.run(i + 1)
        self.g2[u] &= ~bv
        self.g2[v] &= ~bu
        return found


def decide_colorable_naive(
    j: int, t: int, m: int, n: int, *, edge_limit: int = NAIVE_EDGE_LIMIT
) -> SearchOutcome:
    """Exhaustive enumeration of all 2^E colorings, color 1 before color 2 on each edge."""
    _check_params(j, t, m, n)
    shape = make_shape(j, t)
    if shape.E > edge_limit:
        raise NaiveLimitError(
            f"{shape.label()} has {shape.E} edges; the naive oracle stops at {edge_limit}"
        )
    start = time.monotonic()
    search = _NaiveSearch(shape, m, n)
    found = search.run()
    stats = SearchStats(nodes=search.nodes, cover_sets=0, elapsed=time.monotonic() - start)
    if found is not None:
        return SearchOutcome(SearchStatus.COLORABLE, found, stats)
    return SearchOutcome(SearchStatus.NOT_COLORABLE, None, stats)


class Resolution(Enum):
    RESOLVED = "RESOLVED"
    INFINITE_EVIDENCE = "INFINITE_EVIDENCE"
    UNRESOLVED = "UNRESOLVED"


@dataclass
class ComputedValue:
    resolution: Resolution
    value: Optional[RamseyValue]
    outcomes: List[Tuple[int, SearchOutcome]] = field(default_factory=list)

    def bracket(self) -> str:
        """Per-t verdicts, e.g. 't=1 COLORABLE, t=2 NOT_COLORABLE'."""
        return ", ".join(f"t={t} {o.status.value}" for t, o in self.outcomes)


def compute_value_by_search(
    j: int,
    m: int,
    n: int,
    *,
    t_max: int = DEFAULT_T_MAX,
    node_budget: int = DEFAULT_NODE_BUDGET,
    time_budget: float = DEFAULT_TIME_BUDGET,
    threads: int = 1,
    show_progress: bool = False,
) -> ComputedValue:
    """Smallest t <= t_max at which the search reports NOT_COLORABLE.

    t = 0 is colorable for every query, so the scan starts at t = 1. When
    every t up to t_max is colorable the result is INFINITE_EVIDENCE for
    j <= m - 1 (all-color-1 is good at every t) and UNRESOLVED otherwise.
    """
    _check_params(j, 0, m, n)
    if t_max < 1:
        raise ParameterError(f"t_max must be >= 1 (got {t_max})")
    outcomes: List[Tuple[int, SearchOutcome]] = []
    for t in range(1, t_max + 1):
        outcome = decide_colorable(
            j,
            t,
            m,
            n,
            node_budget=node_budget,
            time_budget=time_budget,
            threads=threads,
            show_progress=show_progress,
        )
        outcomes.append((t, outcome))
        if outcome.status is SearchStatus.BUDGET_EXHAUSTED:
            return ComputedValue(Resolution.UNRESOLVED, None, outcomes)
        if outcome.status is SearchStatus.NOT_COLORABLE:
            return ComputedValue(Resolution.RESOLVED, RamseyValue.finite(t), outcomes)
    if j <= m - 1:
        return ComputedValue(Resolution.INFINITE_EVIDENCE, RamseyValue.infinite(), outcomes)
    return ComputedValue(Resolution.UNRESOLVED, None, outcomes)
