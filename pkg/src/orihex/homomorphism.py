"""Deciding homomorphism existence from an oriented graph to a tournament.

Two independent routes: a complete backtracking search with forward
checking (the workhorse), and an exhaustive map enumeration used as a
cross-checking oracle on small instances. Both are deterministic.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .digraph import OrientedGraph
from .tournaments import Tournament, enumerate_tournaments

BRUTE_FORCE_GUARD = 10**7
_BRUTE_CHUNK = 1 << 18

Homomorphism = tuple[int, ...]


class SearchBudgetExceeded(RuntimeError):
    """Raised when a solve exceeds an explicitly requested time budget."""


@dataclass(frozen=True)
class HomResult:
    """Search outcome: a validated witness map, or proof of nonexistence
    with statistics of the completed search."""

    found: bool
    witness: Homomorphism | None
    nodes_expanded: int
    max_depth: int

    def __bool__(self) -> bool:
        return self.found


def validate_homomorphism(g: OrientedGraph, t: Tournament, phi: Sequence[int]) -> bool:
    """True iff phi maps every arc of g onto an arc of t.

    phi must be total on g's vertices with values inside t's vertex set;
    anything else is a usage error, not a False verdict.
    """
    if len(phi) != g.n_vertices:
        raise ValueError(f"map covers {len(phi)} of {g.n_vertices} vertices")
    for c in phi:
        if not (0 <= c < t.order):
            raise ValueError(f"color {c} outside 0..{t.order - 1}")
    return all(t.has_arc(phi[u], phi[v]) for (u, v) in g.arcs)


def _components(g: OrientedGraph) -> list[list[int]]:
    comp_of = [-1] * g.n_vertices
    comps: list[list[int]] = []
    for s in range(g.n_vertices):
        if comp_of[s] >= 0:
            continue
        comp = [s]
        comp_of[s] = len(comps)
        dq = deque([s])
        while dq:
            v = dq.popleft()
            for (w, _) in g.neighbors[v]:
                if comp_of[w] < 0:
                    comp_of[w] = len(comps)
                    comp.append(w)
                    dq.append(w)
        comps.append(comp)
    return comps


def _bfs_order(g: OrientedGraph, comp: list[int]) -> list[int]:
    # root: maximum total degree, lowest index on ties
    deg = {v: len(g.neighbors[v]) for v in comp}
    root = max(comp, key=lambda v: (deg[v], -v))
    order = [root]
    seen = {root}
    dq = deque([root])
    while dq:
        v = dq.popleft()
        for (w, _) in g.neighbors[v]:
            if w not in seen:
                seen.add(w)
                order.append(w)
                dq.append(w)
    return order


def homomorphism_exists(
    g: OrientedGraph, t: Tournament, time_budget_s: float | None = None
) -> HomResult:
    """Complete backtracking search for a homomorphism g -> t.

    Vertices are assigned in breadth-first order from a maximum-degree
    vertex (per connected component, components solved independently);
    target vertices are tried in ascending order; forward checking prunes
    the domains of unassigned neighbors after each assignment. The verdict
    and, when found, the witness are deterministic.
    """
    k = t.order
    full = (1 << k) - 1
    if g.n_vertices and k == 0:
        return HomResult(False, None, 0, 0)
    out_m, in_m = t.out_masks, t.in_masks
    assignment = [-1] * g.n_vertices
    nodes = 0
    max_depth = 0
    deadline = time.monotonic() + time_budget_s if time_budget_s is not None else None

    for comp in _components(g):
        order = _bfs_order(g, comp)
        pos = {v: i for i, v in enumerate(order)}
        # constraints from each position to later positions, with the mask
        # table the assigned color selects from
        post: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in order]
        for i, v in enumerate(order):
            for (w, outgoing) in g.neighbors[v]:
                if pos[w] > i:
                    post[i].append((pos[w], out_m if outgoing else in_m))
        m = len(order)
        doms = [full] * m

        def bt(p: int) -> bool:
            nonlocal nodes, max_depth
            if p == m:
                return True
            if p >= max_depth:
                max_depth = p + 1
            if deadline is not None and (nodes & 0xFFFF) == 0 and time.monotonic() > deadline:
                raise SearchBudgetExceeded(f"time budget {time_budget_s}s exceeded")
            vals = doms[p]
            while vals:
                low = vals & (-vals)
                vals ^= low
                c = low.bit_length() - 1
                nodes += 1
                saved = []
                ok = True
                for (q, masks) in post[p]:
                    narrowed = doms[q] & masks[c]
                    if narrowed != doms[q]:
                        saved.append((q, doms[q]))
                        doms[q] = narrowed
                        if not narrowed:
                            ok = False
                            break
                if ok:
                    assignment[order[p]] = c
                    if bt(p + 1):
                        return True
                for (q, old) in saved:
                    doms[q] = old
            return False

        if not bt(0):
            return HomResult(False, None, nodes, max_depth)

    witness = tuple(assignment)
    assert validate_homomorphism(g, t, witness)
    return HomResult(True, witness, nodes, max_depth)


def brute_force_hom(g: OrientedGraph, t: Tournament, guard: int = BRUTE_FORCE_GUARD) -> HomResult:
    """Exhaustively scan all k^n vertex maps in lexicographic order.

    Independent oracle for homomorphism_exists; refuses instances with
    more than `guard` candidate maps.
    """
    n, k = g.n_vertices, t.order
    total = k**n
    if total > guard:
        raise ValueError(f"{k}^{n} = {total} maps exceeds guard {guard}")
    if n == 0:
        return HomResult(True, (), 0, 0)
    if k == 0:
        return HomResult(False, None, 0, 0)
    adj = np.zeros((k, k), dtype=bool)
    for (u, v) in t.arcs:
        adj[u, v] = True
    divisors = np.array([k ** (n - 1 - i) for i in range(n)], dtype=np.int64)
    checked = 0
    for start in range(0, total, _BRUTE_CHUNK):
        stop = min(start + _BRUTE_CHUNK, total)
        indices = np.arange(start, stop, dtype=np.int64)
        digits = (indices[None, :] // divisors[:, None]) % k
        valid = np.ones(stop - start, dtype=bool)
        for (u, v) in g.arcs:
            valid &= adj[digits[u], digits[v]]
            if not valid.any():
                break
        hits = np.flatnonzero(valid)
        if hits.size:
            checked += int(hits[0]) + 1
            witness = tuple(int(c) for c in digits[:, hits[0]])
            assert validate_homomorphism(g, t, witness)
            return HomResult(True, witness, checked, n)
        checked += stop - start
    return HomResult(False, None, checked, n)


def colorable_with_order(g: OrientedGraph, k: int, limit: int = 5) -> bool:
    """True iff g maps homomorphically into some k-tournament."""
    return any(homomorphism_exists(g, t).found for t in enumerate_tournaments(k, limit))


def chi_o(g: OrientedGraph, k_max: int = 5) -> int | None:
    """Least k <= k_max such that g has an oriented k-coloring, else None."""
    for k in range(1, k_max + 1):
        if colorable_with_order(g, k, limit=max(k_max, 5)):
            return k
    return None
