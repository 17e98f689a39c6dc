"""Simple undirected graphs and lexicographic-product constructions.

Vertices are dense integers 0..n-1.  Adjacency is stored as bit-packed
rows (one Python int per vertex), which keeps neighbourhood intersections
and complement computations cheap at desk scale.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed or out-of-contract graph inputs."""


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph on vertices 0..n-1.

    `rows[u]` is a bitmask of the neighbours of `u`; the relation is kept
    symmetric and loop-free by construction.  `labels`, when present, are
    opaque provenance strings with no semantic effect.
    """

    n: int
    rows: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        if len(self.rows) != self.n:
            raise GraphError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {u} references vertices outside 0..{self.n - 1}")
            if row >> u & 1:
                raise GraphError(f"loop at vertex {u}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (self.rows[u] >> v & 1) != (self.rows[v] >> u & 1):
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]],
                   labels: Optional[Sequence[str]] = None) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop edge ({u}, {v}) rejected")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows), tuple(labels) if labels is not None else None)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def neighbours(self, u: int) -> int:
        """Neighbourhood of `u` as a bitmask."""
        self._check_vertex(u)
        return self.rows[u]

    def degree(self, u: int) -> int:
        return self.neighbours(u).bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.rows[u] >> (u + 1) << (u + 1)
            while row:
                v = (row & -row).bit_length() - 1
                yield (u, v)
                row &= row - 1

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def _check_vertex(self, u: int) -> None:
        if not (0 <= u < self.n):
            raise GraphError(f"vertex {u} out of range for n={self.n}")


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << u) for u in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(u, (u + 1) % n) for u in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, u + 1) for u in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """The star with one centre (vertex 0) and `leaves` leaves."""
    return Graph.from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ g.rows[u]) & ~(1 << u) for u in range(g.n)),
                 g.labels)


def disjoint_union(gs: Sequence[Graph]) -> tuple[Graph, list[int]]:
    """Block-diagonal union; also returns the starting vertex id of each factor."""
    if not gs:
        raise GraphError("disjoint union needs at least one factor")
    offsets = []
    total = 0
    rows: list[int] = []
    for g in gs:
        offsets.append(total)
        rows.extend(r << total for r in g.rows)
        total += g.n
    return Graph(total, tuple(rows)), offsets


def lex_product(x: Graph, y: Graph) -> Graph:
    """The graph on V(X) x V(Y) with (a,b)~(a',b') iff aa' in E(X), or
    a = a' and bb' in E(Y).  Flat vertex index is a*|V(Y)| + b."""
    if x.n == 0 or y.n == 0:
        raise GraphError("lexicographic product factors must be nonempty")
    ny = y.n
    y_full = (1 << ny) - 1
    rows = []
    for a in range(x.n):
        x_row = x.rows[a]
        outer = 0
        for a2 in range(x.n):
            if x_row >> a2 & 1:
                outer |= y_full << (a2 * ny)
        for b in range(ny):
            rows.append(outer | (y.rows[b] << (a * ny)))
    return Graph(x.n * ny, tuple(rows))


def product_index(y: Graph, a: int, b: int) -> int:
    return a * y.n + b


def product_coords(y: Graph, p: int) -> tuple[int, int]:
    return divmod(p, y.n)


class PairClass(enum.Enum):
    DIAGONAL = "diagonal"
    INNER_EDGE = "inner_edge"
    OUTER_EDGE = "outer_edge"
    INNER_NONEDGE = "inner_nonedge"
    OUTER_NONEDGE = "outer_nonedge"


def classify_pair(x: Graph, y: Graph, p: tuple[int, int], q: tuple[int, int]) -> PairClass:
    """Classify a product vertex pair as diagonal / inner / outer (non-)edge."""
    px, py = p
    qx, qy = q
    if not (0 <= px < x.n and 0 <= qx < x.n):
        raise GraphError("product vertex out of range in the left factor")
    if not (0 <= py < y.n and 0 <= qy < y.n):
        raise GraphError("product vertex out of range in the right factor")
    if p == q:
        return PairClass.DIAGONAL
    if px == qx:
        return PairClass.INNER_EDGE if y.has_edge(py, qy) else PairClass.INNER_NONEDGE
    return PairClass.OUTER_EDGE if x.has_edge(px, qx) else PairClass.OUTER_NONEDGE


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = 0
    components = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        frontier = 1 << start
        comp = 0
        while frontier:
            comp |= frontier
            new = 0
            row = frontier
            while row:
                u = (row & -row).bit_length() - 1
                new |= g.rows[u]
                row &= row - 1
            frontier = new & ~comp
        seen |= comp
        components.append(_bits(comp))
    return components


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Induced subgraph on `vertices`, relabelled to 0..k-1 in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph.from_edges(len(vertices), edges)


@dataclass(frozen=True)
class TwinPartition:
    """The partition of vertices into maximal classes of pairwise twins."""

    classes: tuple[tuple[int, ...], ...]
    uniform_size: Optional[int]

    @property
    def has_twins(self) -> bool:
        return any(len(c) >= 2 for c in self.classes)


def twin_partition(g: Graph) -> TwinPartition:
    """Group vertices by exact neighbourhood equality.

    Twins are never adjacent, so equal-neighbourhood rows characterise the
    classes directly.  Classes are ordered by smallest member.
    """
    by_row: dict[int, list[int]] = {}
    for u in range(g.n):
        by_row.setdefault(g.rows[u], []).append(u)
    classes = sorted((tuple(vs) for vs in by_row.values()), key=lambda c: c[0])
    sizes = {len(c) for c in classes}
    uniform = sizes.pop() if len(sizes) == 1 else None
    return TwinPartition(tuple(classes), uniform)


def has_twins(g: Graph) -> bool:
    return twin_partition(g).has_twins


def distance_matrix(g: Graph) -> list[list[Optional[int]]]:
    """All-pairs graph distances via BFS; None encodes unreachable."""
    dist: list[list[Optional[int]]] = [[None] * g.n for _ in range(g.n)]
    for s in range(g.n):
        dist[s][s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                row = g.rows[u]
                while row:
                    v = (row & -row).bit_length() - 1
                    row &= row - 1
                    if dist[s][v] is None:
                        dist[s][v] = d
                        nxt.append(v)
            frontier = nxt
    return dist


def graph_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable identity of the labelled graph (n plus adjacency rows)."""
    return (g.n, g.rows)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out
