"""Hexagonal grids, square grids, and the two packaged counterexample
fixtures with their lattice-membership validator.

The hexagonal grid with m rows of n hexagons lives inside the square grid
with m+1 rows and 2n+m columns: row i keeps the columns j with
i-1 <= j <= i+2n, every horizontal edge survives, and vertical edges
survive exactly when i+j is even.

Fixtures carry axial lattice coordinates (a, b). A point belongs to the
hexagonal lattice when (a - b) mod 3 is 1 or 2, and its three possible
neighbor offsets are fixed by that class:

    class 2: (0, 1), (1, -1), (-1, 0)
    class 1: (0, -1), (-1, 1), (1, 0)

Adjacent lattice points always have opposite classes, which makes the
lattice bipartite with maximum degree 3.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from functools import cache, cached_property
from importlib import resources
from typing import Iterable

from .digraph import OrientedGraph, UndirectedGraph, parse_graph_file

_CLASS2_OFFSETS = frozenset({(0, 1), (1, -1), (-1, 0)})
_CLASS1_OFFSETS = frozenset({(0, -1), (-1, 1), (1, 0)})

#: sha256 digests of the packaged fixture files, pinned at transcription time.
FIXTURE_DIGESTS = {
    "h4.digraph": "6820be00b29067a14d073a8d1b5c307223991fa5740f5a6ab9776e7b7fad4e17",
    "h49.digraph": "1d57d99f8f5e347e866795409efee246c7f916bd7dba6ccc73815e78333b566f",
}

#: vertex/arc counts pinned at transcription time.
FIXTURE_COUNTS = {"h4.digraph": (18, 21), "h49.digraph": (126, 174)}


@dataclass(frozen=True)
class HexGrid:
    """Hexagonal grid: m rows of n hexagons, vertices numbered in row-major
    (i, j) order."""

    m: int
    n: int
    graph: UndirectedGraph
    coords: tuple[tuple[int, int], ...]

    @cached_property
    def index(self) -> dict[tuple[int, int], int]:
        return {c: v for v, c in enumerate(self.coords)}

    @cached_property
    def rows(self) -> dict[int, list[int]]:
        """Row index i -> sorted list of column indices j present in the grid."""
        rows: dict[int, list[int]] = {}
        for (i, j) in self.coords:
            rows.setdefault(i, []).append(j)
        for js in rows.values():
            js.sort()
        return rows


def hex_row_span(m: int, n: int, i: int) -> tuple[int, int]:
    """Inclusive column range of row i (1 <= i <= m+1)."""
    return max(1, i - 1), min(i + 2 * n, 2 * n + m)


def build_hex_grid(m: int, n: int) -> HexGrid:
    """Construct the hexagonal grid with m rows of n hexagons."""
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    coords = []
    for i in range(1, m + 2):
        lo, hi = hex_row_span(m, n, i)
        coords.extend((i, j) for j in range(lo, hi + 1))
    index = {c: v for v, c in enumerate(coords)}
    edges = []
    for (i, j) in coords:
        if (i, j + 1) in index:
            edges.append((index[(i, j)], index[(i, j + 1)]))
        if (i + j) % 2 == 0 and (i + 1, j) in index:
            edges.append((index[(i, j)], index[(i + 1, j)]))
    return HexGrid(m, n, UndirectedGraph(len(coords), tuple(edges)), tuple(coords))


def build_square_grid(m: int, n: int) -> UndirectedGraph:
    """Grid graph with m rows and n columns (Cartesian product of two paths)."""
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    def idx(i: int, j: int) -> int:
        return (i - 1) * n + (j - 1)
    edges = []
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if j < n:
                edges.append((idx(i, j), idx(i, j + 1)))
            if i < m:
                edges.append((idx(i, j), idx(i + 1, j)))
    return UndirectedGraph(m * n, tuple(edges))


@dataclass(frozen=True)
class AxialFixture:
    """Oriented graph together with axial lattice coordinates per vertex."""

    graph: OrientedGraph
    coords: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.coords) != self.graph.n_vertices:
            raise ValueError("one coordinate pair per vertex required")


@dataclass(frozen=True)
class LatticeCheck:
    """Verdict of validate_axial_fixture with human-readable violations."""

    ok: bool
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def _lattice_class(a: int, b: int) -> int:
    return (a - b) % 3


def validate_axial_fixture(fixture: AxialFixture) -> LatticeCheck:
    """Check that the fixture is an orientation of a hexagonal-lattice patch:
    injective coordinates on lattice points, arcs only between lattice
    neighbors, total degree at most 3."""
    violations = []
    coords = fixture.coords
    seen: dict[tuple[int, int], int] = {}
    for v, c in enumerate(coords):
        if c in seen:
            violations.append(f"vertices {seen[c] + 1} and {v + 1} share coordinates {c}")
        seen[c] = v
        if _lattice_class(*c) == 0:
            violations.append(f"vertex {v + 1} at {c} is not a hexagonal-lattice point")
    for (u, v) in fixture.graph.arcs:
        (a1, b1), (a2, b2) = coords[u], coords[v]
        off = (a2 - a1, b2 - b1)
        allowed = _CLASS2_OFFSETS if _lattice_class(a1, b1) == 2 else _CLASS1_OFFSETS
        if off not in allowed:
            violations.append(
                f"arc {u + 1} -> {v + 1} joins non-neighbor lattice points "
                f"{coords[u]} and {coords[v]}"
            )
    for v in range(fixture.graph.n_vertices):
        deg = fixture.graph.out_degrees[v] + fixture.graph.in_degrees[v]
        if deg > 3:
            violations.append(f"vertex {v + 1} has degree {deg} > 3")
    return LatticeCheck(not violations, tuple(violations))


def load_fixture(text: str) -> AxialFixture:
    """Parse a graph file whose coord lines cover every vertex."""
    graph, coords = parse_graph_file(text)
    missing = [v + 1 for v in range(graph.n_vertices) if v not in coords]
    if missing:
        raise ValueError(f"missing coord lines for vertices {missing}")
    return AxialFixture(graph, tuple(coords[v] for v in range(graph.n_vertices)))


def serialize_fixture(fixture: AxialFixture) -> str:
    g = fixture.graph
    lines = [f"{g.n_vertices} {len(g.arcs)}"]
    lines.extend(f"{u + 1} {v + 1}" for (u, v) in g.arcs)
    lines.extend(
        f"coord {v + 1} {a} {b}" for v, (a, b) in enumerate(fixture.coords)
    )
    return "\n".join(lines) + "\n"


def fixture_file_bytes(name: str) -> bytes:
    return resources.files("orihex.data").joinpath(name).read_bytes()


def fixture_digest(name: str) -> str:
    return hashlib.sha256(fixture_file_bytes(name)).hexdigest()


@cache
def fixture_h4() -> AxialFixture:
    """18-vertex, 21-arc orientation of a lattice patch: one hexagon with an
    oriented 3-path grafted onto every other hexagon vertex."""
    return load_fixture(fixture_file_bytes("h4.digraph").decode())


@cache
def fixture_h49() -> AxialFixture:
    """126-vertex, 174-arc orientation of a lattice patch, transcribed
    vertex-by-vertex and arc-by-arc, with coordinates retained."""
    return load_fixture(fixture_file_bytes("h49.digraph").decode())


def axial_to_grid(a: int, b: int) -> tuple[int, int]:
    """Base change from axial lattice coordinates to hexagonal-grid (i, j).

    Determined up to translation; composing with translations
    (i, j) -> (i + p, j + q) with p == q (mod 2) reaches every placement.
    """
    return (a - b + 5) // 3, a + b - 6


def place_fixture(fixture: AxialFixture, grid: HexGrid) -> tuple[int, ...] | None:
    """Deterministic injective embedding of the fixture into the grid, as a
    vertex map, or None when no translate of the patch fits."""
    base = [axial_to_grid(a, b) for (a, b) in fixture.coords]
    i_lo = min(i for (i, _) in base)
    i_hi = max(i for (i, _) in base)
    j_lo = min(j for (_, j) in base)
    j_hi = max(j for (_, j) in base)
    for di in range(1 - i_lo, (grid.m + 1) - i_hi + 1):
        for dj in range(1 - j_lo, (2 * grid.n + grid.m) - j_hi + 1):
            if (dj - di) % 2:
                continue
            placed = [(i + di, j + dj) for (i, j) in base]
            if all(p in grid.index for p in placed):
                return tuple(grid.index[p] for p in placed)
    return None


def orientation_extending(
    grid: HexGrid, forced_arcs: Iterable[tuple[int, int]], seed: int = 0
) -> OrientedGraph:
    """Orientation of the grid agreeing with the forced arcs; remaining
    edges get seed-deterministic directions."""
    forced = {}
    for (u, v) in forced_arcs:
        key = (u, v) if u < v else (v, u)
        if forced.get(key, (u, v)) != (u, v):
            raise ValueError(f"conflicting directions forced for edge {key}")
        forced[key] = (u, v)
    edge_set = set(grid.graph.edges)
    unknown = [key for key in forced if key not in edge_set]
    if unknown:
        raise ValueError(f"forced arcs not on grid edges: {unknown}")
    rng = random.Random(seed)
    arcs = []
    for (u, v) in grid.graph.edges:
        if (u, v) in forced:
            arcs.append(forced[(u, v)])
        else:
            arcs.append((u, v) if rng.getrandbits(1) else (v, u))
    return OrientedGraph(grid.graph.n_vertices, tuple(arcs))
