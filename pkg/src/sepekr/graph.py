"""Disjointness graphs of set families: Kneser and Schrijver instances, exact invariants."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .core import SetFamily, enumerate_separated
from .search import (
    ResourceLimitError,
    disjointness_adjacency,
    solve_max_independent,
)

DEFAULT_MAX_VERTICES = 20000
COLORING_MAX_VERTICES = 64


@dataclass(frozen=True)
class DisjointnessGraph:
    """Graph on a set family where edges join disjoint members."""

    vertices: SetFamily
    adjacency: tuple[int, ...]

    @property
    def num_vertices(self) -> int:
        return len(self.adjacency)

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as index pairs (u, v) with u < v, in vertex enumeration order."""
        for u in range(self.num_vertices):
            rem = self.adjacency[u] >> (u + 1) << (u + 1)
            while rem:
                b = rem & -rem
                yield u, b.bit_length() - 1
                rem ^= b

    def to_json_dict(self) -> dict:
        return {
            "vertices": [list(s.elems) for s in self.vertices.sets],
            "edges": [[u, v] for u, v in self.edges()],
        }


def _build(family: SetFamily) -> DisjointnessGraph:
    return DisjointnessGraph(family, tuple(disjointness_adjacency(family.sets)))


def build_kneser(n: int, r: int, *, max_vertices: int = DEFAULT_MAX_VERTICES) -> DisjointnessGraph:
    """Kneser graph: all r-subsets of [n], edges between disjoint pairs."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    if math.comb(n, r) > max_vertices:
        raise ResourceLimitError(
            f"{math.comb(n, r)} vertices exceed the limit of {max_vertices}"
        )
    return _build(enumerate_separated(n, r, 0))


def build_schrijver(
    n: int, r: int, k: int = 1, *, max_vertices: int = DEFAULT_MAX_VERTICES
) -> DisjointnessGraph:
    """Induced subgraph of the Kneser graph on the k-separated r-sets."""
    if n < (k + 1) * r:
        raise ValueError(f"need n >= (k+1)r = {(k + 1) * r}, got n={n}")
    family = enumerate_separated(n, r, k)
    if len(family) > max_vertices:
        raise ResourceLimitError(
            f"{len(family)} vertices exceed the limit of {max_vertices}"
        )
    return _build(family)


def independence_number(
    graph: DisjointnessGraph,
    *,
    time_limit: float | None = None,
) -> int:
    """Exact independence number via the branch-and-bound solver."""
    optimum, _, _ = solve_max_independent(list(graph.adjacency), time_limit=time_limit)
    return optimum


def _greedy_clique(adj: tuple[int, ...]) -> list[int]:
    """Deterministic greedy clique, grown from every seed vertex; largest wins."""
    best: list[int] = []
    v_count = len(adj)
    for seed in sorted(range(v_count), key=lambda v: (-adj[v].bit_count(), v)):
        clique = [seed]
        cand = adj[seed]
        while cand:
            pick = -1
            pick_deg = -1
            rem = cand
            while rem:
                b = rem & -rem
                u = b.bit_length() - 1
                rem ^= b
                deg = (adj[u] & cand).bit_count()
                if deg > pick_deg:
                    pick_deg = deg
                    pick = u
            clique.append(pick)
            cand &= adj[pick]
        if len(clique) > len(best):
            best = clique
    return best


def _colorable(adj: tuple[int, ...], colors_allowed: int, clique: list[int]) -> bool:
    """Backtracking c-colorability with the clique pre-coloured and fresh-colour symmetry breaking."""
    v_count = len(adj)
    assignment = [-1] * v_count
    used_masks = [0] * v_count  # colours taken by coloured neighbours
    for idx, v in enumerate(clique):
        assignment[v] = idx
    for v in clique:
        rem = adj[v]
        while rem:
            b = rem & -rem
            u = b.bit_length() - 1
            rem ^= b
            used_masks[u] |= 1 << assignment[v]
    degrees = [row.bit_count() for row in adj]

    def place(remaining: int, max_used: int) -> bool:
        if remaining == 0:
            return True
        v = -1
        v_key = (-1, -1, 0)
        for u in range(v_count):
            if assignment[u] < 0:
                key = (used_masks[u].bit_count(), degrees[u], -u)
                if key > v_key:
                    v_key = key
                    v = u
        limit = min(colors_allowed - 1, max_used + 1)
        avail = ~used_masks[v] & ((1 << (limit + 1)) - 1)
        while avail:
            b = avail & -avail
            color = b.bit_length() - 1
            avail ^= b
            assignment[v] = color
            touched = []
            rem = adj[v]
            while rem:
                nb = rem & -rem
                u = nb.bit_length() - 1
                rem ^= nb
                if assignment[u] < 0 and not used_masks[u] >> color & 1:
                    used_masks[u] |= 1 << color
                    touched.append(u)
            if place(remaining - 1, max(max_used, color)):
                return True
            for u in touched:
                used_masks[u] &= ~(1 << color)
            assignment[v] = -1
        return False

    if len(clique) > colors_allowed:
        return False
    return place(v_count - len(clique), len(clique) - 1)


def chromatic_number(
    graph: DisjointnessGraph,
    *,
    max_vertices: int = COLORING_MAX_VERTICES,
) -> int:
    """Exact chromatic number by iterative deepening from a greedy clique bound."""
    v_count = graph.num_vertices
    if v_count > max_vertices:
        raise ResourceLimitError(
            f"{v_count} vertices exceed the colouring limit of {max_vertices}"
        )
    if graph.num_edges == 0:
        return 1 if v_count else 0
    clique = _greedy_clique(graph.adjacency)
    for c in range(len(clique), v_count + 1):
        if _colorable(graph.adjacency, c, clique):
            return c
    raise AssertionError("a graph is always colourable with one colour per vertex")


def export_dimacs(graph: DisjointnessGraph, destination) -> None:
    """Write the graph in DIMACS format: 'p edge V E' then 'e u v' lines with 1-based u < v."""
    lines = [f"p edge {graph.num_vertices} {graph.num_edges}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in graph.edges())
    text = "\n".join(lines) + "\n"
    if isinstance(destination, (str, bytes)) or hasattr(destination, "__fspath__"):
        with open(destination, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        destination.write(text)
