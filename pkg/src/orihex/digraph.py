"""Core graph types: simple undirected graphs, their orientations, and the
shared text file format.

Vertices are 0-based everywhere in memory; the text format is 1-based.
All types are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_ENUMERATION_EDGES = 24


class GraphFormatError(ValueError):
    """Raised for malformed graph files; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple graph: no self-loops, no duplicate edges."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for (u, v) in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"edge ({u},{v}) out of range 0..{self.n_vertices - 1}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {{{u},{v}}}")
            seen.add(key)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs = [[] for _ in range(self.n_vertices)]
        for (u, v) in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(ns) for ns in self.adjacency)


@dataclass(frozen=True)
class OrientedGraph:
    """Orientation of a simple graph: each edge carries exactly one direction,
    so the arc set is antisymmetric and loop-free."""

    n_vertices: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for (u, v) in self.arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"arc ({u},{v}) out of range 0..{self.n_vertices - 1}")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u},{v})")
            if (v, u) in seen:
                raise ValueError(f"2-cycle between {u} and {v}")
            seen.add((u, v))

    @cached_property
    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.arcs)

    @cached_property
    def out_degrees(self) -> tuple[int, ...]:
        d = [0] * self.n_vertices
        for (u, _) in self.arcs:
            d[u] += 1
        return tuple(d)

    @cached_property
    def in_degrees(self) -> tuple[int, ...]:
        d = [0] * self.n_vertices
        for (_, v) in self.arcs:
            d[v] += 1
        return tuple(d)

    @cached_property
    def neighbors(self) -> tuple[tuple[tuple[int, bool], ...], ...]:
        """Per vertex: (other endpoint, True if the arc leaves this vertex)."""
        nbrs = [[] for _ in range(self.n_vertices)]
        for (u, v) in self.arcs:
            nbrs[u].append((v, True))
            nbrs[v].append((u, False))
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    def underlying(self) -> UndirectedGraph:
        return UndirectedGraph(
            self.n_vertices,
            tuple((u, v) if u < v else (v, u) for (u, v) in self.arcs),
        )


def _parse_int(tok: str, what: str, line: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"{what} is not an integer: {tok!r}", line) from None


def parse_graph_file(text: str) -> tuple[OrientedGraph, dict[int, tuple[int, int]]]:
    """Parse the graph file format, returning the graph and any coordinate
    bindings from optional ``coord u a b`` lines (keys 0-based).

    Format: a header line "N M", then M lines "u v" (arc u -> v, 1-based).
    Lines starting with '#' and blank lines are ignored.
    """
    header: tuple[int, int] | None = None
    arcs: list[tuple[int, int]] = []
    coords: dict[int, tuple[int, int]] = {}
    arc_seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if header is None:
            if len(toks) != 2:
                raise GraphFormatError("header must be 'N M'", lineno)
            n = _parse_int(toks[0], "vertex count", lineno)
            m = _parse_int(toks[1], "arc count", lineno)
            if n < 0 or m < 0:
                raise GraphFormatError("counts must be nonnegative", lineno)
            header = (n, m)
            continue
        n, m = header
        if toks[0] == "coord":
            if len(toks) != 4:
                raise GraphFormatError("coord line must be 'coord u a b'", lineno)
            u = _parse_int(toks[1], "coord vertex", lineno)
            if not (1 <= u <= n):
                raise GraphFormatError(f"coord vertex {u} out of range 1..{n}", lineno)
            if u - 1 in coords:
                raise GraphFormatError(f"duplicate coord for vertex {u}", lineno)
            a = _parse_int(toks[2], "coordinate", lineno)
            b = _parse_int(toks[3], "coordinate", lineno)
            coords[u - 1] = (a, b)
            continue
        if len(toks) != 2:
            raise GraphFormatError("arc line must be 'u v'", lineno)
        u = _parse_int(toks[0], "arc tail", lineno)
        v = _parse_int(toks[1], "arc head", lineno)
        for x in (u, v):
            if not (1 <= x <= n):
                raise GraphFormatError(f"vertex {x} out of range 1..{n}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        arc = (u - 1, v - 1)
        if arc in arc_seen:
            raise GraphFormatError(f"duplicate arc {u} -> {v}", lineno)
        if (arc[1], arc[0]) in arc_seen:
            raise GraphFormatError(f"2-cycle between {u} and {v}", lineno)
        arc_seen.add(arc)
        arcs.append(arc)
    if header is None:
        raise GraphFormatError("empty file: missing 'N M' header", 1)
    n, m = header
    if len(arcs) != m:
        raise GraphFormatError(f"header declares {m} arcs but file lists {len(arcs)}")
    return OrientedGraph(n, tuple(arcs)), coords


def parse_digraph(text: str) -> OrientedGraph:
    """Parse a graph file (arc order preserved; coord lines accepted, ignored)."""
    return parse_graph_file(text)[0]


def serialize_digraph(g: OrientedGraph) -> str:
    """Canonical text form: header plus one 1-based 'u v' line per arc."""
    lines = [f"{g.n_vertices} {len(g.arcs)}"]
    lines.extend(f"{u + 1} {v + 1}" for (u, v) in g.arcs)
    return "\n".join(lines) + "\n"


def _normalize_code(code: Iterable[int] | str) -> tuple[int, ...]:
    bits = tuple(int(b) for b in code)
    if any(b not in (0, 1) for b in bits):
        raise ValueError("orientation code must consist of 0/1 bits")
    return bits


def orient(g: UndirectedGraph, code: Iterable[int] | str) -> OrientedGraph:
    """Direct each edge of g by the aligned code bit (1: first endpoint dominates)."""
    bits = _normalize_code(code)
    if len(bits) != len(g.edges):
        raise ValueError(f"code length {len(bits)} != edge count {len(g.edges)}")
    arcs = tuple((u, v) if b else (v, u) for ((u, v), b) in zip(g.edges, bits))
    return OrientedGraph(g.n_vertices, arcs)


def enumerate_orientations(
    g: UndirectedGraph, limit: int = MAX_ENUMERATION_EDGES
) -> Iterator[OrientedGraph]:
    """All 2^|E| orientations of g, streamed in lexicographic code order."""
    m = len(g.edges)
    if m > limit:
        raise ValueError(f"{m} edges exceeds enumeration limit {limit}")

    def generate():
        for value in range(1 << m):
            bits = tuple((value >> (m - 1 - i)) & 1 for i in range(m))
            yield orient(g, bits)

    return generate()


def random_orientation(g: UndirectedGraph, seed: int) -> OrientedGraph:
    """Seed-deterministic orientation, uniform over the 2^|E| codes."""
    rng = random.Random(seed)
    return orient(g, tuple(rng.getrandbits(1) for _ in g.edges))


def relabel_oriented(g: OrientedGraph, perm: Sequence[int]) -> OrientedGraph:
    """Rename vertex u to perm[u], preserving arc order."""
    if sorted(perm) != list(range(g.n_vertices)):
        raise ValueError("perm must be a permutation of the vertex set")
    return OrientedGraph(g.n_vertices, tuple((perm[u], perm[v]) for (u, v) in g.arcs))
