"""Intersecting families of separated sets: canonical examples, isomorphism, bijections."""

from __future__ import annotations

import random
from typing import Iterable

from .core import (
    CircSet,
    SetFamily,
    enumerate_separated,
    is_k_separated,
    reflect,
    rotate,
    star_size_formula,
)


def is_intersecting(family: SetFamily) -> bool:
    """True when every two members share an element.  Empty and singleton families qualify."""
    members = family.sets
    for i in range(len(members)):
        mi = members[i].mask
        for j in range(i + 1, len(members)):
            if not mi & members[j].mask:
                return False
    return True


def star_family(n: int, r: int, k: int, i: int) -> SetFamily:
    """All k-separated r-sets through the fixed element i."""
    if not (1 <= i <= n):
        raise ValueError(f"centre {i} outside 1..{n}")
    if n < (k + 1) * r:
        raise ValueError(f"need n >= (k+1)r = {(k + 1) * r}, got n={n}")
    universe = enumerate_separated(n, r, k)
    bit = 1 << (i - 1)
    return SetFamily(n, r, k, tuple(s for s in universe if s.mask & bit))


def exceptional_family(r: int, i: int) -> SetFamily:
    """The i-th exceptional maximum intersecting family of separated r-sets on 2r+2 points.

    Members are the separated r-sets meeting {1, 3, ..., 4i+1} in at least
    i+1 elements, a strict majority of that window.  Defined for
    1 <= i <= r // 2; matches the star bound in size without being a star.
    """
    if r < 2:
        raise ValueError(f"need r >= 2, got r={r}")
    if not (1 <= i <= r // 2):
        raise ValueError(f"index {i} outside 1..{r // 2}")
    n = 2 * r + 2
    window = 0
    for a in range(1, 4 * i + 2, 2):
        window |= 1 << (a - 1)
    universe = enumerate_separated(n, r, 1)
    members = tuple(s for s in universe if (s.mask & window).bit_count() >= i + 1)
    return SetFamily(n, r, 1, members)


def transform_family(family: SetFamily, shift: int = 0, reflected: bool = False) -> SetFamily:
    """Apply a circle symmetry (optional reflection, then rotation) to every member."""
    members = []
    for s in family.sets:
        t = reflect(s) if reflected else s
        members.append(rotate(t, shift))
    return SetFamily(family.n, family.r, family.k, tuple(members))


def canonical_form(family: SetFamily, rotations_only: bool = False) -> SetFamily:
    """Lexicographically least image of the family under the circle symmetries.

    The full dihedral group is used unless rotations_only is set.  Families are
    compared as sorted tuples of member element tuples, so equal canonical
    forms is exactly isomorphism under the chosen group.
    """
    n = family.n
    best: tuple[tuple[int, ...], ...] | None = None
    flips = (False,) if rotations_only else (False, True)
    for flipped in flips:
        base = [reflect(s).elems if flipped else s.elems for s in family.sets]
        for shift in range(n):
            key = tuple(
                sorted(tuple(sorted((x - 1 + shift) % n + 1 for x in e)) for e in base)
            )
            if best is None or key < best:
                best = key
    members = tuple(CircSet(n, e) for e in (best or ()))
    return SetFamily(n, family.r, family.k, members)


def are_isomorphic(f: SetFamily, g: SetFamily, rotations_only: bool = False) -> bool:
    """Whether some rotation (optionally with a reflection) maps f onto g."""
    if (f.n, f.r, f.k) != (g.n, g.r, g.k):
        raise ValueError(
            f"parameter mismatch: ({f.n},{f.r},{f.k}) vs ({g.n},{g.r},{g.k})"
        )
    if len(f) != len(g):
        return False
    return (
        canonical_form(f, rotations_only).member_keys
        == canonical_form(g, rotations_only).member_keys
    )


def exchange_map(a: CircSet, k: int) -> CircSet:
    """Disjoint partner of a set through 1 avoiding k+2: swap 1 for k+2 and push the rest by k.

    Pairs the k-separated r-sets containing 1 but not k+2 with those containing
    k+2 but not 1; the image never meets its argument.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    if not is_k_separated(a, k):
        raise ValueError(f"{a} is not {k}-separated in [{a.n}]")
    if 1 not in a or (k + 2) in a:
        raise ValueError(f"{a} must contain 1 and avoid {k + 2}")
    elems = (k + 2,) + tuple(x + k for x in a.elems[1:])
    return CircSet(a.n, elems)


def random_maximal_intersecting(
    n: int, r: int, k: int, rng: random.Random
) -> SetFamily:
    """Greedily grow an intersecting family over a shuffled universe until maximal."""
    universe = enumerate_separated(n, r, k).sets
    order = list(range(len(universe)))
    rng.shuffle(order)
    chosen: list[CircSet] = []
    for idx in order:
        s = universe[idx]
        if all(s.mask & t.mask for t in chosen):
            chosen.append(s)
    return SetFamily(n, r, k, tuple(chosen))
