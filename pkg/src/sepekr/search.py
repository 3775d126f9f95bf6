"""Exact maximum intersecting families via branch-and-bound over disjointness graphs.

Vertices are the k-separated r-sets of a circle; two vertices clash when the
sets are disjoint, so intersecting families are exactly the independent sets.
The solver uses Python-int bitsets for adjacency rows and candidate sets, a
greedy clique-cover upper bound, and deterministic branching, so repeated runs
return identical answers.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .core import CircSet, SetFamily, enumerate_separated
from .families import canonical_form


class ResourceLimitError(RuntimeError):
    """Raised when a search exceeds its configured vertex, node, or time budget."""


DEFAULT_MAX_VERTICES = 20000
CLASS_MAX_VERTICES = 2000

_TIME_CHECK_MASK = 0x3FF


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exact search: the optimum, one witness, and optional class census."""

    n: int
    r: int
    k: int
    optimum: int
    witness: SetFamily
    classes: tuple[SetFamily, ...] | None
    nodes_explored: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "optimum": self.optimum,
            "witness": [list(s.elems) for s in self.witness.sets],
            "classes": None
            if self.classes is None
            else [[list(s.elems) for s in c.sets] for c in self.classes],
            "nodes": self.nodes_explored,
        }


def disjointness_adjacency(sets: Sequence[CircSet]) -> list[int]:
    """Bitmask adjacency rows: bit j of row i set when sets i and j are disjoint."""
    masks = [s.mask for s in sets]
    rows = [0] * len(masks)
    for i in range(len(masks)):
        mi = masks[i]
        for j in range(i + 1, len(masks)):
            if not mi & masks[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def _cover_bound(cand: int, adj: list[int], weights: list[int] | None) -> int:
    """Greedy partition of cand into cliques; an independent set takes at most one per clique.

    Returns the clique count, or with weights the sum of per-clique maxima.
    """
    bound = 0
    class_masks: list[int] = []
    class_best: list[int] = []
    rem = cand
    while rem:
        b = rem & -rem
        v = b.bit_length() - 1
        rem ^= b
        w = 1 if weights is None else weights[v]
        for ci in range(len(class_masks)):
            if class_masks[ci] & ~adj[v] == 0:
                class_masks[ci] |= b
                if w > class_best[ci]:
                    bound += w - class_best[ci]
                    class_best[ci] = w
                break
        else:
            class_masks.append(b)
            class_best.append(w)
            bound += w
    return bound


def _pick_branch_vertex(cand: int, adj: list[int]) -> int:
    """Candidate with the most conflicts inside cand; ties go to the lowest index."""
    best_v = -1
    best_deg = -1
    rem = cand
    while rem:
        b = rem & -rem
        v = b.bit_length() - 1
        rem ^= b
        deg = (adj[v] & cand).bit_count()
        if deg > best_deg:
            best_deg = deg
            best_v = v
    return best_v


class _Budget:
    """Shared node counter with optional wall-clock deadline."""

    def __init__(self, time_limit: float | None):
        self.nodes = 0
        self.deadline = None if time_limit is None else time.monotonic() + time_limit

    def tick(self) -> None:
        self.nodes += 1
        if (
            self.deadline is not None
            and self.nodes & _TIME_CHECK_MASK == 0
            and time.monotonic() > self.deadline
        ):
            raise ResourceLimitError(f"time limit exceeded after {self.nodes} nodes")


def solve_max_independent(
    adj: list[int],
    weights: list[int] | None = None,
    *,
    time_limit: float | None = None,
) -> tuple[int, int, int]:
    """Maximum(-weight) independent set; returns (optimum, vertex bitmask, nodes explored)."""
    budget = _Budget(time_limit)
    best_w = 0
    best_mask = 0
    stack = [((1 << len(adj)) - 1, 0, 0)]
    while stack:
        cand, cur_w, cur_mask = stack.pop()
        budget.tick()
        if cur_w > best_w:
            best_w = cur_w
            best_mask = cur_mask
        if not cand:
            continue
        if cur_w + _cover_bound(cand, adj, weights) <= best_w:
            continue
        v = _pick_branch_vertex(cand, adj)
        b = 1 << v
        stack.append((cand & ~b, cur_w, cur_mask))
        w = 1 if weights is None else weights[v]
        stack.append((cand & ~adj[v] & ~b, cur_w + w, cur_mask | b))
    return best_w, best_mask, budget.nodes


def enumerate_max_independent(
    adj: list[int],
    target: int,
    *,
    time_limit: float | None = None,
) -> tuple[list[int], int]:
    """All independent sets of exactly target vertices, where target is the independence number.

    Each qualifying set is emitted exactly once as a bitmask; the include or
    exclude branching visits every subset along a unique path.
    """
    budget = _Budget(time_limit)
    found: list[int] = []
    stack = [((1 << len(adj)) - 1, 0, 0)]
    while stack:
        cand, size, mask = stack.pop()
        budget.tick()
        if size == target:
            found.append(mask)
            continue
        if not cand:
            continue
        if size + _cover_bound(cand, adj, None) < target:
            continue
        v = _pick_branch_vertex(cand, adj)
        b = 1 << v
        stack.append((cand & ~b, size, mask))
        stack.append((cand & ~adj[v] & ~b, size + 1, mask | b))
    return found, budget.nodes


def _family_from_mask(universe: SetFamily, mask: int) -> SetFamily:
    members = []
    rem = mask
    while rem:
        b = rem & -rem
        members.append(universe.sets[b.bit_length() - 1])
        rem ^= b
    return SetFamily(universe.n, universe.r, universe.k, tuple(members))


def _universe(n: int, r: int, k: int, max_vertices: int) -> SetFamily:
    if n < (k + 1) * r:
        raise ValueError(f"need n >= (k+1)r = {(k + 1) * r}, got n={n}")
    universe = enumerate_separated(n, r, k)
    if len(universe) > max_vertices:
        raise ResourceLimitError(
            f"{len(universe)} vertices exceed the limit of {max_vertices}"
        )
    return universe


def max_intersecting(
    n: int,
    r: int,
    k: int,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    time_limit: float | None = None,
) -> SearchResult:
    """Exact maximum size of an intersecting family of k-separated r-sets in [n].

    The witness is returned in canonical form; repeated runs are identical.
    """
    universe = _universe(n, r, k, max_vertices)
    adj = disjointness_adjacency(universe.sets)
    optimum, mask, nodes = solve_max_independent(adj, time_limit=time_limit)
    witness = canonical_form(_family_from_mask(universe, mask))
    return SearchResult(n, r, k, optimum, witness, None, nodes)


def max_intersecting_weighted(
    n: int,
    r: int,
    k: int,
    weight_fn: Callable[[CircSet], int],
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    time_limit: float | None = None,
) -> SearchResult:
    """Exact maximum total weight of an intersecting family under a non-negative integer weight.

    The witness is one optimal family as found; it is not canonicalised because
    an arbitrary weight function need not respect the circle symmetries.
    """
    universe = _universe(n, r, k, max_vertices)
    weights = []
    for s in universe:
        w = weight_fn(s)
        if not isinstance(w, int) or w < 0:
            raise ValueError(f"weight of {s} must be a non-negative integer, got {w!r}")
        weights.append(w)
    adj = disjointness_adjacency(universe.sets)
    optimum, mask, nodes = solve_max_independent(adj, weights, time_limit=time_limit)
    witness = _family_from_mask(universe, mask)
    return SearchResult(n, r, k, optimum, witness, None, nodes)


def extremal_classes(
    n: int,
    r: int,
    k: int,
    *,
    rotations_only: bool = False,
    max_vertices: int = CLASS_MAX_VERTICES,
    time_limit: float | None = None,
) -> SearchResult:
    """All maximum intersecting families, reported as one representative per symmetry class.

    Representatives are canonical forms sorted lexicographically; the witness
    is the least of them.
    """
    universe = _universe(n, r, k, max_vertices)
    adj = disjointness_adjacency(universe.sets)
    optimum, _, nodes_opt = solve_max_independent(adj, time_limit=time_limit)
    masks, nodes_enum = enumerate_max_independent(adj, optimum, time_limit=time_limit)
    reps: dict[frozenset, SetFamily] = {}
    for mask in masks:
        rep = canonical_form(_family_from_mask(universe, mask), rotations_only)
        reps.setdefault(rep.member_keys, rep)
    classes = tuple(sorted(reps.values(), key=lambda f: tuple(s.elems for s in f.sets)))
    return SearchResult(
        n, r, k, optimum, classes[0], classes, nodes_opt + nodes_enum
    )
