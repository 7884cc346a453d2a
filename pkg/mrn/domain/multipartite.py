"""Complete multipartite hosts K_{j x t} and their 2-colorings.

Vertices are laid out part-major: v = part * t + slot. Cross-part edges are
ranked lexicographically over (min(u, v), max(u, v)), skipping intra-part
pairs, which gives the canonical dense order used by colorings and files.
"""

from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from mrn.core.constants import COLOR_ONE, COLOR_TWO
from mrn.core.errors import ParameterError
from mrn.domain.graph import Graph


@dataclass(frozen=True)
class MultipartiteShape:
    j: int
    t: int
    _offsets: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.j < 2:
            raise ParameterError(f"j (number of parts) must be >= 2, got {self.j}")
        if self.t < 0:
            raise ParameterError(f"t (vertices per part) must be >= 0, got {self.t}")
        offsets = [0]
        n_vertices = self.j * self.t
        for u in range(n_vertices):
            # Partners of u with a larger id in another part.
            offsets.append(offsets[-1] + n_vertices - (self.part(u) + 1) * self.t)
        object.__setattr__(self, "_offsets", tuple(offsets))

    @property
    def N(self) -> int:
        return self.j * self.t

    @property
    def E(self) -> int:
        return self.t * self.t * self.j * (self.j - 1) // 2

    def part(self, v: int) -> int:
        return v // self.t

    def slot(self, v: int) -> int:
        return v % self.t

    def vertex(self, part: int, slot: int) -> int:
        if not (0 <= part < self.j and 0 <= slot < self.t):
            raise ParameterError(f"(part={part}, slot={slot}) outside K_{{{self.j}x{self.t}}}")
        return part * self.t + slot

    def part_labels(self) -> Tuple[int, ...]:
        return tuple(v // self.t for v in range(self.N))

    def part_mask(self, part: int) -> int:
        return ((1 << self.t) - 1) << (part * self.t)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.N:
            raise ParameterError(f"vertex {v} outside 0..{self.N - 1}")

    def edge_rank(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v or self.part(u) == self.part(v):
            raise ParameterError(
                f"({u},{v}) is not a cross-part edge (both in part {self.part(u)})"
            )
        if u > v:
            u, v = v, u
        return self._offsets[u] + v - (self.part(u) + 1) * self.t

    def edge_unrank(self, r: int) -> Tuple[int, int]:
        if not 0 <= r < self.E:
            raise ParameterError(f"edge rank {r} outside 0..{self.E - 1}")
        u = bisect_right(self._offsets, r) - 1
        v = r - self._offsets[u] + (self.part(u) + 1) * self.t
        return u, v

    def edges(self) -> List[Tuple[int, int]]:
        """All cross-part edges in rank order."""
        out: List[Tuple[int, int]] = []
        for u in range(self.N):
            for v in range((self.part(u) + 1) * self.t, self.N):
                out.append((u, v))
        return out

    def host_graph(self) -> Graph:
        return Graph.complete_multipartite([self.t] * self.j)

    def label(self) -> str:
        return f"K_{{{self.j}x{self.t}}}"


def make_shape(j: int, t: int) -> MultipartiteShape:
    return MultipartiteShape(j, t)


@dataclass(frozen=True)
class TwoColoring:
    shape: MultipartiteShape
    colors: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != self.shape.E:
            raise ParameterError(
                f"coloring has {len(self.colors)} entries, {self.shape.label()} has {self.shape.E} edges"
            )
        for r, c in enumerate(self.colors):
            if c not in (COLOR_ONE, COLOR_TWO):
                raise ParameterError(f"edge rank {r} has color {c!r}; colors are 1 or 2")

    @classmethod
    def all_color(cls, shape: MultipartiteShape, c: int) -> "TwoColoring":
        return cls(shape, (c,) * shape.E)

    @classmethod
    def from_color2_edges(
        cls, shape: MultipartiteShape, edges: Iterable[Tuple[int, int]]
    ) -> "TwoColoring":
        colors = [COLOR_ONE] * shape.E
        for u, v in edges:
            colors[shape.edge_rank(u, v)] = COLOR_TWO
        return cls(shape, tuple(colors))

    def color_of(self, u: int, v: int) -> int:
        return self.colors[self.shape.edge_rank(u, v)]

    def count(self, c: int) -> int:
        return sum(1 for x in self.colors if x == c)

    def colors_string(self) -> str:
        return "".join("1" if c == COLOR_ONE else "2" for c in self.colors)

    def color_edges(self, c: int) -> List[Tuple[int, int]]:
        return [e for e, x in zip(self.shape.edges(), self.colors) if x == c]

    def permuted(
        self, part_perm: Sequence[int], slot_perms: Sequence[Sequence[int]]
    ) -> "TwoColoring":
        """Image under the automorphism (part p, slot s) -> (part_perm[p], slot_perms[p][s])."""
        shape = self.shape
        if sorted(part_perm) != list(range(shape.j)):
            raise ParameterError(f"not a permutation of the {shape.j} parts: {list(part_perm)}")
        if len(slot_perms) != shape.j or any(
            sorted(sp) != list(range(shape.t)) for sp in slot_perms
        ):
            raise ParameterError("slot_perms must hold one permutation of 0..t-1 per part")

        def image(v: int) -> int:
            p, s = shape.part(v), shape.slot(v)
            return part_perm[p] * shape.t + slot_perms[p][s]

        colors = [COLOR_ONE] * shape.E
        for (u, v), c in zip(shape.edges(), self.colors):
            colors[shape.edge_rank(image(u), image(v))] = c
        return TwoColoring(shape, tuple(colors))


def color_subgraph(coloring: TwoColoring, c: int) -> Graph:
    """The simple graph on [0, N) whose edges are the cross-part edges colored `c`."""
    if c not in (COLOR_ONE, COLOR_TWO):
        raise ParameterError(f"color must be 1 or 2, got {c}")
    shape = coloring.shape
    return Graph.from_edges(shape.N, coloring.color_edges(c), parts=shape.part_labels())
