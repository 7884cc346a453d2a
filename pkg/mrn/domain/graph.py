"""Simple undirected graphs stored as per-vertex adjacency bitsets.

Vertex ids are 0..order-1 and bit `v` of `adj[u]` is set iff uv is an edge.
`parts` optionally records a partite-set label per vertex. Every part must
be an independent set; the clique engine relies on that for its bound.
"""

from dataclasses import dataclass
from typing import Any, Iterable, Iterator, List, Optional, Sequence, Tuple

from mrn.core.errors import ParameterError


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int) -> Iterator[int]:
    """Yield set bit positions of `x` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    order: int
    adj: Tuple[int, ...]
    parts: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_edges(
        cls,
        order: int,
        edges: Iterable[Tuple[int, int]],
        parts: Optional[Sequence[int]] = None,
    ) -> "Graph":
        if order < 0:
            raise ParameterError(f"graph order must be >= 0, got {order}")
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ParameterError(f"edge ({u},{v}) outside vertex range 0..{order - 1}")
            if parts is not None and parts[u] == parts[v]:
                raise ParameterError(f"edge ({u},{v}) joins two vertices of part {parts[u]}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, tuple(adj), tuple(parts) if parts is not None else None)

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order, (0,) * order)

    @classmethod
    def complete_multipartite(cls, part_sizes: Sequence[int]) -> "Graph":
        labels: List[int] = []
        for i, size in enumerate(part_sizes):
            if size < 0:
                raise ParameterError(f"part size must be >= 0, got {size}")
            labels.extend([i] * size)
        order = len(labels)
        adj = []
        for u in range(order):
            row = 0
            for v in range(order):
                if labels[u] != labels[v]:
                    row |= 1 << v
            adj.append(row)
        return cls(order, tuple(adj), tuple(labels))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edge_count(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def edges(self) -> List[Tuple[int, int]]:
        """All edges (u, v) with u < v, sorted lexicographically."""
        out: List[Tuple[int, int]] = []
        for u in range(self.order):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def to_networkx(self) -> Any:
        """Export as a `networkx.Graph` (requires the optional networkx extra)."""
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.order))
        g.add_edges_from(self.edges())
        return g
