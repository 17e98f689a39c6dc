"""Two-dimensional Weisfeiler-Leman refinement of ordered-pair colourings.

A colouring assigns an id to every ordered vertex pair.  One refinement
round replaces each pair colour by its exact triangle profile (counts of
middle-vertex colour combinations), then renames the resulting classes
canonically: new ids are assigned in order of first occurrence scanning
pairs row-major.  Iterating to a fixed point yields the stable colouring.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, GraphError, complement, classify_pair, PairClass


@dataclass(frozen=True)
class PairColouring:
    """A total colouring of ordered vertex pairs, row-major, with compact ids."""

    n: int
    colours: tuple[int, ...]
    num_colours: int

    def colour(self, u: int, v: int) -> int:
        return self.colours[u * self.n + v]

    def matrix(self) -> list[list[int]]:
        n = self.n
        return [list(self.colours[u * n:(u + 1) * n]) for u in range(n)]

    def classes(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.num_colours)]
        n = self.n
        for u in range(n):
            for v in range(n):
                out[self.colours[u * n + v]].append((u, v))
        return out


@dataclass(frozen=True)
class RefinementTrace:
    """All rounds from the initial colouring up to (and including) the round
    that certifies stability.  The last two rounds induce the same partition."""

    rounds: tuple[PairColouring, ...]

    @property
    def stable_round(self) -> int:
        return max(len(self.rounds) - 2, 0)

    @property
    def stable(self) -> PairColouring:
        return self.rounds[self.stable_round]


@dataclass(frozen=True)
class TriangleProfile:
    """Counts of middle vertices by (colour to z, colour from z) for one pair."""

    counts: tuple[tuple[tuple[int, int], int], ...]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.counts)

    def total(self) -> int:
        return sum(c for _, c in self.counts)


def _canonical_rename(raw: list, n: int) -> PairColouring:
    ids: dict = {}
    colours = []
    for key in raw:
        if key not in ids:
            ids[key] = len(ids)
        colours.append(ids[key])
    return PairColouring(n, tuple(colours), len(ids))


def initial_colouring(g: Graph) -> PairColouring:
    """Diagonal / edge / non-edge colouring, canonically renamed.

    Raw codes are 0 for the diagonal, 1 for edges, 2 for non-edges; the
    rename collapses absent codes so ids are always contiguous.
    """
    raw = []
    for u in range(g.n):
        row = g.rows[u]
        for v in range(g.n):
            if u == v:
                raw.append(0)
            elif row >> v & 1:
                raw.append(1)
            else:
                raw.append(2)
    return _canonical_rename(raw, g.n)


def edge_nonedge_colours(g: Graph, c: PairColouring) -> tuple[Optional[int], Optional[int]]:
    """The ids that an initial colouring gave to edges and to non-edges.

    The canonical rename is first-occurrence based, so on some graphs the
    edge class ends up with a higher id than the non-edge class; callers
    comparing against semantic edge/non-edge roles need this mapping.
    """
    edge_colour = nonedge_colour = None
    for u in range(g.n):
        for v in range(g.n):
            if u == v:
                continue
            if g.rows[u] >> v & 1:
                edge_colour = c.colour(u, v)
            else:
                nonedge_colour = c.colour(u, v)
            if edge_colour is not None and nonedge_colour is not None:
                return edge_colour, nonedge_colour
    return edge_colour, nonedge_colour


def triangle_counts(g: Graph, c: PairColouring, p: int, q: int) -> TriangleProfile:
    """Exact middle-vertex counts for the ordered pair (p, q) under `c`."""
    if c.n != g.n:
        raise GraphError("colouring size does not match graph")
    g._check_vertex(p)
    g._check_vertex(q)
    n = g.n
    counts: Counter[tuple[int, int]] = Counter()
    row_p = c.colours[p * n:(p + 1) * n]
    for z in range(n):
        counts[(row_p[z], c.colours[z * n + q])] += 1
    return TriangleProfile(tuple(sorted(counts.items())))


def refine_step(g: Graph, c: PairColouring) -> PairColouring:
    """One refinement round: split classes by exact triangle profiles."""
    if c.n != g.n:
        raise GraphError("colouring size does not match graph")
    n = g.n
    cols = c.colours
    raw = []
    for u in range(n):
        row_u = cols[u * n:(u + 1) * n]
        for v in range(n):
            counts: Counter[tuple[int, int]] = Counter()
            for z in range(n):
                counts[(row_u[z], cols[z * n + v])] += 1
            raw.append((cols[u * n + v], tuple(sorted(counts.items()))))
    return _canonical_rename(raw, n)


def stable_colouring(g: Graph) -> RefinementTrace:
    """Refine the initial colouring until the induced partition repeats.

    Canonical renaming makes equal partitions equal as colour tuples, so
    stability is detected by tuple equality of consecutive rounds.
    """
    rounds = [initial_colouring(g)]
    for _ in range(g.n * g.n + 1):
        nxt = refine_step(g, rounds[-1])
        rounds.append(nxt)
        if nxt.colours == rounds[-2].colours:
            return RefinementTrace(tuple(rounds))
    raise AssertionError("refinement failed to stabilise within n^2 rounds")


def distinguished(c: PairColouring, p1: tuple[int, int], p2: tuple[int, int]) -> bool:
    return c.colour(*p1) != c.colour(*p2)


def strongly_distinguished(c: PairColouring, e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    """True iff the colour sets of both orientations are disjoint."""
    if e1[0] == e1[1] or e2[0] == e2[1]:
        raise GraphError("strong distinguishing is defined for non-diagonal pairs")
    s1 = {c.colour(e1[0], e1[1]), c.colour(e1[1], e1[0])}
    s2 = {c.colour(e2[0], e2[1]), c.colour(e2[1], e2[0])}
    return not (s1 & s2)


def table1_closed_form(x: Graph, y: Graph, p: tuple[int, int], q: tuple[int, int]) -> TriangleProfile:
    """Closed-form triangle counts for an edge of the lexicographic product
    after the initial colouring, keyed by semantic codes (1=edge, 2=non-edge).

    Inner edge (p, q in the same copy of the right factor at position a):
        D11 = |N_Y(py) & N_Y(qy)| + |N_X(a)| * n
        D12 = |N_Y(py) & N_Yc(qy)|
        D21 = |N_Yc(py) & N_Y(qy)|
        D22 = |N_Yc(py) & N_Yc(qy)| + |N_Xc(a)| * n
    Outer edge:
        D11 = |N_Y(py)| + |N_Y(qy)| + |N_X(px) & N_X(qx)| * n
        D12 = |N_Yc(qy)| + |N_X(px) & N_Xc(qx)| * n
        D21 = |N_Yc(py)| + |N_Xc(px) & N_X(qx)| * n
        D22 = |N_Xc(px) & N_Xc(qx)| * n
    where n = |V(Y)| and N_*c are neighbourhoods in the complement.
    Degenerate counts involving the diagonal colour are omitted.
    """
    kind = classify_pair(x, y, p, q)
    if kind not in (PairClass.INNER_EDGE, PairClass.OUTER_EDGE):
        raise GraphError("closed-form triangle counts require a product edge")
    xc = complement(x)
    yc = complement(y)
    n = y.n
    (px, py), (qx, qy) = p, q
    if kind is PairClass.INNER_EDGE:
        a = px
        d11 = (y.rows[py] & y.rows[qy]).bit_count() + x.rows[a].bit_count() * n
        d12 = (y.rows[py] & yc.rows[qy]).bit_count()
        d21 = (yc.rows[py] & y.rows[qy]).bit_count()
        d22 = (yc.rows[py] & yc.rows[qy]).bit_count() + xc.rows[a].bit_count() * n
    else:
        d11 = (y.rows[py].bit_count() + y.rows[qy].bit_count()
               + (x.rows[px] & x.rows[qx]).bit_count() * n)
        d12 = yc.rows[qy].bit_count() + (x.rows[px] & xc.rows[qx]).bit_count() * n
        d21 = yc.rows[py].bit_count() + (xc.rows[px] & x.rows[qx]).bit_count() * n
        d22 = (xc.rows[px] & xc.rows[qx]).bit_count() * n
    counts = tuple(((i, j), v) for (i, j), v in
                   [((1, 1), d11), ((1, 2), d12), ((2, 1), d21), ((2, 2), d22)])
    return TriangleProfile(counts)


def profile_distinguish(g: Graph, c: PairColouring,
                        src_pair: tuple[int, int], dst_pair: tuple[int, int],
                        max_len: int) -> Optional[tuple[int, tuple[int, ...]]]:
    """Search for a colour word whose walk counts separate two pairs.

    Returns the shortest (length, word) such that the numbers of walks from
    src_pair[0] to src_pair[1] and from dst_pair[0] to dst_pair[1] carrying
    that exact colour word differ, or None if no witness of length at most
    `max_len` exists.  Walk counts are accumulated by dynamic programming
    over colour-labelled transitions; identical intermediate count-vector
    pairs are merged to keep the search finite.
    """
    if max_len < 1:
        raise GraphError("max_len must be at least 1")
    if c.n != g.n:
        raise GraphError("colouring size does not match graph")
    n = g.n
    x0, x1 = src_pair
    y0, y1 = dst_pair
    for v in (x0, x1, y0, y1):
        g._check_vertex(v)
    # transitions[i][u] = bit/count layout: list of v with colour(u, v) == i
    transitions: list[list[list[int]]] = [
        [[v for v in range(n) if c.colours[u * n + v] == i] for u in range(n)]
        for i in range(c.num_colours)
    ]
    start_x = tuple(1 if v == x0 else 0 for v in range(n))
    start_y = tuple(1 if v == y0 else 0 for v in range(n))
    frontier: dict[tuple[tuple[int, ...], tuple[int, ...]], tuple[int, ...]] = {
        (start_x, start_y): ()
    }
    for length in range(1, max_len + 1):
        nxt: dict[tuple[tuple[int, ...], tuple[int, ...]], tuple[int, ...]] = {}
        for (vx, vy), word in frontier.items():
            for i in range(c.num_colours):
                wx = [0] * n
                wy = [0] * n
                for u in range(n):
                    cu = vx[u]
                    if cu:
                        for v in transitions[i][u]:
                            wx[v] += cu
                    cu = vy[u]
                    if cu:
                        for v in transitions[i][u]:
                            wy[v] += cu
                if wx[x1] != wy[y1]:
                    return (length, word + (i,))
                state = (tuple(wx), tuple(wy))
                if state not in nxt:
                    nxt[state] = word + (i,)
        frontier = nxt
        if not frontier:
            break
    return None
