"""Maximum-cardinality matching on general simple graphs.

Edmonds' augmenting-path search with blossom contraction (blossoms are kept
implicitly through a `base` array). Exposed vertices are tried as roots in
increasing vertex order, so results are reproducible.
"""

from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from mrn.core.errors import ParameterError
from mrn.domain.graph import Graph, iter_bits, popcount


@dataclass(frozen=True)
class Matching:
    edges: Tuple[Tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.edges)

    def vertex_mask(self) -> int:
        m = 0
        for u, v in self.edges:
            m |= (1 << u) | (1 << v)
        return m

    def render(self) -> str:
        return "[" + ",".join(f"{u}-{v}" for u, v in self.edges) + "]"


def _neighbor_lists(graph: Graph) -> List[List[int]]:
    return [list(iter_bits(a)) for a in graph.adj]


def _augment_from(nbrs: List[List[int]], match: List[int], root: int) -> bool:
    """Grow an alternating tree from `root`; augment `match` in place if a path exists."""
    n = len(nbrs)
    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_tree[root] = True
    queue = deque([root])

    def common_base(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_blossom_path(v: int, b: int, child: int, blossom: List[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # Odd cycle through two outer vertices: contract it.
                cur = common_base(v, to)
                blossom = [False] * n
                mark_blossom_path(v, cur, to, blossom)
                mark_blossom_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not in_tree[i]:
                            in_tree[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    u = to
                    while u != -1:
                        pv = parent[u]
                        nxt = match[pv]
                        match[u] = pv
                        match[pv] = u
                        u = nxt
                    return True
                in_tree[match[to]] = True
                queue.append(match[to])
    return False


def _grow_matching(graph: Graph, limit: Optional[int]) -> List[int]:
    nbrs = _neighbor_lists(graph)
    match = [-1] * graph.order
    size = 0
    for root in range(graph.order):
        if limit is not None and size >= limit:
            break
        if match[root] == -1 and nbrs[root] and _augment_from(nbrs, match, root):
            size += 1
    return match


def _as_matching(match: List[int]) -> Matching:
    return Matching(tuple((u, v) for u, v in enumerate(match) if v > u))


def max_matching(graph: Graph) -> Matching:
    return _as_matching(_grow_matching(graph, None))


def has_matching_of_size(graph: Graph, n: int) -> bool:
    """True iff nu(graph) >= n; stops augmenting once n edges are matched."""
    if n < 0:
        raise ParameterError(f"matching size must be >= 0, got {n}")
    if n == 0:
        return True
    if 2 * n > graph.order:
        return False
    match = _grow_matching(graph, n)
    return sum(1 for u, v in enumerate(match) if v > u) >= n


def find_matching_of_size(graph: Graph, n: int) -> Optional[Matching]:
    """A matching with exactly n edges, or None when nu(graph) < n."""
    if n <= 0:
        return Matching(())
    match = _grow_matching(graph, n)
    found = _as_matching(match)
    if len(found) < n:
        return None
    return Matching(found.edges[:n])


def nu_complete_multipartite(part_sizes: Sequence[int]) -> int:
    if any(a < 0 for a in part_sizes):
        raise ParameterError(f"part sizes must be >= 0, got {list(part_sizes)}")
    total = sum(part_sizes)
    if total == 0:
        return 0
    return min(total // 2, total - max(part_sizes))


def is_valid_matching(graph: Graph, matching: Matching) -> bool:
    used = 0
    for u, v in matching.edges:
        if u == v or not graph.has_edge(u, v):
            return False
        pair = (1 << u) | (1 << v)
        if used & pair:
            return False
        used |= pair
    return True


def exchange_property_holds(graph: Graph, matching: Matching) -> bool:
    """No matched pair v1v2 has distinct neighbours y, y' among the unmatched vertices.

    Holds for every maximum matching: otherwise (M - v1v2) + v1y + v2y' is larger.
    """
    unmatched = ((1 << graph.order) - 1) & ~matching.vertex_mask()
    for a, b in matching.edges:
        na = graph.adj[a] & unmatched
        nb = graph.adj[b] & unmatched
        if not na or not nb:
            continue
        if na == nb and popcount(na) == 1:
            continue
        return False
    return True
