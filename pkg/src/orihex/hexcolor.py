"""Constructive 6-coloring of oriented hexagonal grids.

The target tournament must satisfy the three-step path property: between
any two (not necessarily distinct) vertices u, v there is a walk
u, x, y, v whose three steps follow any prescribed direction pattern,
with consecutive vertices distinct. The witness table built by
check_property1 then lets a single sweep color an arbitrary orientation
of a hexagonal grid row by row:

  * the first row is a path, colored greedily left to right;
  * each later row starts with one greedy choice against the vertex
    above, then repeatedly colors two new vertices at once by looking up
    the walk from the last colored row vertex to the already-colored
    anchor two columns over in the previous row;
  * a row's final vertex has no anchor above and is colored greedily.

Greedy steps only need every target vertex to have in- and out-degree
at least 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .digraph import OrientedGraph
from .hexgrid import HexGrid
from .tournaments import Tournament, fixture_a6

#: direction pattern of a three-edge walk; bit r is 1 when edge r points
#: from the u-side toward the v-side
OrientationPattern = tuple[int, int, int]

PathTable = dict[tuple[int, int, OrientationPattern], tuple[int, int]]

PATTERNS: tuple[OrientationPattern, ...] = tuple(
    (b0, b1, b2) for b0 in (0, 1) for b1 in (0, 1) for b2 in (0, 1)
)


@dataclass(frozen=True)
class Prop1Check:
    """Outcome of check_property1: the witness table on success, the
    unrealizable (u, v, pattern) triples otherwise."""

    holds: bool
    table: PathTable
    missing: tuple[tuple[int, int, OrientationPattern], ...]

    def __bool__(self) -> bool:
        return self.holds


def _step_ok(t: Tournament, a: int, b: int, forward: int) -> bool:
    return t.has_arc(a, b) if forward else t.has_arc(b, a)


def check_property1(t: Tournament, include_equal_endpoints: bool = True) -> Prop1Check:
    """Search, for every ordered endpoint pair and every 3-bit direction
    pattern, internal vertices (x, y) realizing the walk u, x, y, v.

    Consecutive walk vertices must differ; non-consecutive repeats are
    allowed, including u == v when the flag is set. Witnesses pick the
    lowest (x, y) in lexicographic order.
    """
    if t.order < 2:
        raise ValueError("target must have order >= 2")
    table: PathTable = {}
    missing = []
    for u in range(t.order):
        for v in range(t.order):
            if u == v and not include_equal_endpoints:
                continue
            for pat in PATTERNS:
                found = None
                for x in range(t.order):
                    if x == u or not _step_ok(t, u, x, pat[0]):
                        continue
                    for y in range(t.order):
                        if y == x or y == v:
                            continue
                        if _step_ok(t, x, y, pat[1]) and _step_ok(t, y, v, pat[2]):
                            found = (x, y)
                            break
                    if found:
                        break
                if found:
                    table[(u, v, pat)] = found
                else:
                    missing.append((u, v, pat))
    return Prop1Check(not missing, table, tuple(missing))


@cache
def a6_path_table() -> PathTable:
    """Witness table of the packaged order-6 target (equal endpoints included)."""
    check = check_property1(fixture_a6(), include_equal_endpoints=True)
    assert check.holds
    return check.table


def _require_degrees(target: Tournament) -> None:
    if min(target.out_degrees) < 1 or min(target.in_degrees) < 1:
        raise ValueError("target must have minimum in- and out-degree >= 1")


def _greedy(target: Tournament, anchor_color: int, outgoing: bool) -> int:
    """Lowest color adjacent to anchor_color in the required direction."""
    nbrs = target.out_neighbors if outgoing else target.in_neighbors
    return nbrs[anchor_color][0]


def color_first_row(path: OrientedGraph, target: Tournament) -> tuple[int, ...]:
    """Color an oriented path (vertices 0..n-1 joined consecutively),
    starting at color 0 and taking the lowest compatible color each step."""
    _require_degrees(target)
    if path.n_vertices == 0:
        return ()
    expected = {frozenset((i, i + 1)) for i in range(path.n_vertices - 1)}
    actual = {frozenset(arc) for arc in path.arcs}
    if actual != expected:
        raise ValueError("input must be an orientation of the path 0-1-...-(n-1)")
    colors = [0]
    for i in range(path.n_vertices - 1):
        outgoing = (i, i + 1) in path.arc_set
        colors.append(_greedy(target, colors[i], outgoing))
    return tuple(colors)


def color_hex(
    grid: HexGrid,
    orientation: OrientedGraph,
    target: Tournament | None = None,
    table: PathTable | None = None,
) -> tuple[int, ...]:
    """Color an orientation of the grid by a homomorphism into the target.

    The orientation must assign one direction to each grid edge. The table
    must come from check_property1(target, include_equal_endpoints=True);
    by default the packaged order-6 target and its table are used. The
    result is deterministic and always a valid homomorphism.
    """
    if target is None:
        target = fixture_a6()
        if table is None:
            table = a6_path_table()
    elif table is None:
        check = check_property1(target, include_equal_endpoints=True)
        if not check.holds:
            raise ValueError("target lacks the three-step path property")
        table = check.table
    _require_degrees(target)
    if orientation.n_vertices != grid.graph.n_vertices:
        raise ValueError("orientation and grid disagree on vertex count")
    undirected = {frozenset(arc) for arc in orientation.arcs}
    if undirected != {frozenset(e) for e in grid.graph.edges}:
        raise ValueError("orientation must direct exactly the grid's edges")

    arc_set = orientation.arc_set
    index = grid.index

    def forward(a: tuple[int, int], b: tuple[int, int]) -> int:
        """1 when the edge between grid points a, b is oriented a -> b."""
        return 1 if (index[a], index[b]) in arc_set else 0

    colors: dict[tuple[int, int], int] = {}

    def greedy_against(point: tuple[int, int], anchor: tuple[int, int]) -> None:
        if forward(anchor, point):
            colors[point] = _greedy(target, colors[anchor], outgoing=True)
        else:
            colors[point] = _greedy(target, colors[anchor], outgoing=False)

    rows = grid.rows
    first = rows[1]
    colors[(1, first[0])] = 0
    for prev_j, j in zip(first, first[1:]):
        greedy_against((1, j), (1, prev_j))

    for i in range(2, grid.m + 2):
        js = rows[i]
        start = (i, js[0])
        above = (i - 1, js[0])
        assert above in index and (i - 1 + js[0]) % 2 == 0
        greedy_against(start, above)
        idx = 0
        while idx + 2 < len(js):
            j0, j1, j2 = js[idx], js[idx + 1], js[idx + 2]
            anchor = (i - 1, j2)
            if anchor not in index or (i - 1 + j2) % 2 != 0:
                break
            pat = (
                forward((i, j0), (i, j1)),
                forward((i, j1), (i, j2)),
                forward((i, j2), anchor),
            )
            entry = table.get((colors[(i, j0)], colors[anchor], pat))
            if entry is None:
                raise RuntimeError("path table is missing a required entry")
            colors[(i, j1)], colors[(i, j2)] = entry
            idx += 2
        for j in js[idx + 1:]:
            tail = (i, j)
            if (i - 1, j) in index and (i - 1 + j) % 2 == 0:
                raise RuntimeError("tail vertex unexpectedly anchored above")
            greedy_against(tail, (i, j - 1))

    result = tuple(colors[c] for c in grid.coords)
    for (u, v) in orientation.arcs:
        if not target.has_arc(result[u], result[v]):
            raise RuntimeError("internal error: coloring violates an arc")
    return result


def upper_bound_certificate(
    g: OrientedGraph,
    grid: HexGrid,
    host_orientation: OrientedGraph,
    placement: tuple[int, ...],
    target: Tournament | None = None,
    table: PathTable | None = None,
) -> tuple[int, ...]:
    """Color the host grid orientation and restrict to an embedded subgraph.

    placement[u] names the host vertex carrying g's vertex u; every arc of
    g must appear, with direction, in the host orientation.
    """
    if len(placement) != g.n_vertices:
        raise ValueError("placement must cover every vertex of the subgraph")
    if len(set(placement)) != len(placement):
        raise ValueError("placement must be injective")
    for p in placement:
        if not (0 <= p < host_orientation.n_vertices):
            raise ValueError(f"placement target {p} outside the host")
    host_arcs = host_orientation.arc_set
    for (u, v) in g.arcs:
        if (placement[u], placement[v]) not in host_arcs:
            raise ValueError(
                f"arc {u + 1} -> {v + 1} is not an arc of the host orientation"
            )
    host_colors = color_hex(grid, host_orientation, target, table)
    return tuple(host_colors[p] for p in placement)
