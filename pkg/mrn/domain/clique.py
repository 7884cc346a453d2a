"""Clique detection and clique numbers by branch-and-bound.

Candidates are expanded lowest vertex id first. A candidate set that meets p
partite sets cannot hold more than p clique vertices (parts are independent);
a greedy split of the candidates into independent sets tightens that when
color classes merge several parts. Graphs without part labels use the greedy
bound alone.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from mrn.domain.graph import Graph, popcount


@dataclass(frozen=True)
class CliqueCertificate:
    vertices: Tuple[int, ...]

    def render(self) -> str:
        return "[" + ",".join(str(v) for v in self.vertices) + "]"


def part_masks_of(graph: Graph) -> Optional[List[int]]:
    if graph.parts is None:
        return None
    masks: dict = {}
    for v, p in enumerate(graph.parts):
        masks[p] = masks.get(p, 0) | (1 << v)
    return [masks[p] for p in sorted(masks)]


class _CliqueSearch:
    def __init__(
        self,
        adj: Sequence[int],
        part_masks: Optional[Sequence[int]],
        target: Optional[int],
    ) -> None:
        self.adj = adj
        self.part_masks = part_masks
        self.target = target
        self.best: List[int] = []

    def _bound(self, cand: int) -> int:
        bound = popcount(cand)
        if self.part_masks is not None:
            touched = sum(1 for pm in self.part_masks if cand & pm)
            bound = min(bound, touched)
        # Greedy partition of cand into independent sets; never looser than `bound`.
        classes = 0
        rest = cand
        while rest:
            classes += 1
            if classes >= bound:
                return bound
            avail = rest
            while avail:
                low = avail & -avail
                rest ^= low
                avail &= ~self.adj[low.bit_length() - 1] & ~low
        return classes

    def _done(self) -> bool:
        return self.target is not None and len(self.best) >= self.target

    def expand(self, cand: int, current: List[int]) -> None:
        if len(current) > len(self.best):
            self.best = list(current)
        if self._done():
            return
        while cand:
            if len(current) + self._bound(cand) <= len(self.best):
                return
            low = cand & -cand
            v = low.bit_length() - 1
            current.append(v)
            self.expand(cand & self.adj[v], current)
            current.pop()
            if self._done():
                return
            cand ^= low


def has_clique_in(
    adj: Sequence[int],
    mask: int,
    k: int,
    part_masks: Optional[Sequence[int]] = None,
) -> bool:
    """True iff the vertices in `mask` contain k pairwise adjacent vertices."""
    if k <= 0:
        return True
    if popcount(mask) < k:
        return False
    search = _CliqueSearch(adj, part_masks, k)
    search.expand(mask, [])
    return len(search.best) >= k


def contains_clique(graph: Graph, m: int) -> Optional[CliqueCertificate]:
    if m <= 0:
        return CliqueCertificate(())
    if graph.order < m:
        return None
    search = _CliqueSearch(graph.adj, part_masks_of(graph), m)
    search.expand((1 << graph.order) - 1, [])
    if len(search.best) < m:
        return None
    return CliqueCertificate(tuple(search.best[:m]))


def clique_number(graph: Graph) -> int:
    search = _CliqueSearch(graph.adj, part_masks_of(graph), None)
    search.expand((1 << graph.order) - 1, [])
    return len(search.best)


def maximum_clique(graph: Graph) -> CliqueCertificate:
    search = _CliqueSearch(graph.adj, part_masks_of(graph), None)
    search.expand((1 << graph.order) - 1, [])
    return CliqueCertificate(tuple(search.best))


def verify_clique(graph: Graph, cert: CliqueCertificate, m: int) -> bool:
    vs = cert.vertices
    if len(vs) != m or len(set(vs)) != m:
        return False
    if any(not 0 <= v < graph.order for v in vs):
        return False
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            if not graph.has_edge(u, v):
                return False
    return True
