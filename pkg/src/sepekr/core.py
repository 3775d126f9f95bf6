"""Circular set arithmetic: k-separated subsets of a cycle, gap encodings, enumeration.

Positions 1..n are read around a circle.  An r-subset is k-separated when every
circular gap between consecutive elements exceeds k; k = 0 places no constraint
and recovers plain r-subsets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class CircSet:
    """An r-subset of {1..n} with positions read circularly.

    The ambient size n travels with the set because several operations move
    sets between ground sets of different sizes.  elems is normalised to a
    strictly increasing tuple; empty sets are rejected.
    """

    n: int
    elems: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = tuple(sorted(self.elems))
        object.__setattr__(self, "elems", elems)
        if self.n < 1:
            raise ValueError(f"ground set size must be positive, got n={self.n}")
        if not elems:
            raise ValueError("empty sets are not supported (r >= 1 required)")
        if len(set(elems)) != len(elems):
            raise ValueError(f"duplicate elements in {elems}")
        if elems[0] < 1 or elems[-1] > self.n:
            raise ValueError(f"elements {elems} outside 1..{self.n}")

    @property
    def r(self) -> int:
        return len(self.elems)

    @cached_property
    def mask(self) -> int:
        """Bitmask with bit a-1 set for each element a."""
        m = 0
        for a in self.elems:
            m |= 1 << (a - 1)
        return m

    def __contains__(self, a: int) -> bool:
        return 1 <= a <= self.n and bool(self.mask >> (a - 1) & 1)

    def intersects(self, other: "CircSet") -> bool:
        return bool(self.mask & other.mask)

    def __str__(self) -> str:
        return "{" + ",".join(str(a) for a in self.elems) + "}"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "elems": list(self.elems)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "CircSet":
        return cls(int(data["n"]), tuple(int(a) for a in data["elems"]))


@dataclass(frozen=True)
class GapVector:
    """Circular gap sequence of a CircSet, in element order starting at the minimum."""

    gaps: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.gaps:
            raise ValueError("gap vector must be non-empty")
        if any(g < 1 for g in self.gaps):
            raise ValueError(f"gaps must be positive, got {self.gaps}")

    @property
    def total(self) -> int:
        return sum(self.gaps)

    @property
    def min_gap(self) -> int:
        return min(self.gaps)

    def __iter__(self) -> Iterator[int]:
        return iter(self.gaps)

    def __len__(self) -> int:
        return len(self.gaps)


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free collection of k-separated r-sets over the same ground set.

    Members are stored sorted so equality of families is equality of member
    sets.  k = 0 declares no separation constraint, which is how families of
    arbitrary r-sets are carried.
    """

    n: int
    r: int
    k: int
    sets: tuple[CircSet, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"ground set size must be positive, got n={self.n}")
        if self.r < 1:
            raise ValueError(f"member size must be positive, got r={self.r}")
        if self.k < 0:
            raise ValueError(f"separation parameter must be non-negative, got k={self.k}")
        members = tuple(sorted(set(self.sets)))
        object.__setattr__(self, "sets", members)
        for s in members:
            if s.n != self.n:
                raise ValueError(f"member {s} has ambient {s.n}, family has {self.n}")
            if s.r != self.r:
                raise ValueError(f"member {s} has {s.r} elements, family declares r={self.r}")
            if not is_k_separated(s, self.k):
                raise ValueError(f"member {s} is not {self.k}-separated in [{self.n}]")

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[CircSet]:
        return iter(self.sets)

    @cached_property
    def member_keys(self) -> frozenset[tuple[int, ...]]:
        return frozenset(s.elems for s in self.sets)

    def __contains__(self, s: CircSet) -> bool:
        return s.n == self.n and s.elems in self.member_keys

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "sets": [list(s.elems) for s in self.sets],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SetFamily":
        n = int(data["n"])
        sets = tuple(CircSet(n, tuple(int(a) for a in e)) for e in data["sets"])
        return cls(n, int(data["r"]), int(data["k"]), sets)

    def to_line(self) -> str:
        """One-line text form: 'n r k : {a,b} {c,d} ...'."""
        body = " ".join(str(s) for s in self.sets)
        return f"{self.n} {self.r} {self.k} :" + (" " + body if body else "")


def gap_vector(a: CircSet) -> GapVector:
    """Circular gaps (a2-a1, ..., ar-a(r-1), a1+n-ar); they sum to n."""
    e = a.elems
    gaps = tuple(e[i + 1] - e[i] for i in range(len(e) - 1)) + (e[0] + a.n - e[-1],)
    return GapVector(gaps)


def is_k_separated(a: CircSet, k: int) -> bool:
    """True when every circular gap of a exceeds k.  k = 0 accepts every set."""
    if k < 0:
        raise ValueError(f"separation parameter must be non-negative, got k={k}")
    if k == 0:
        return True
    return gap_vector(a).min_gap > k


def from_gaps(start: int, gaps: Iterable[int], n: int) -> CircSet:
    """Rebuild a CircSet from a start element and its circular gap sequence.

    Inverse of gap_vector when start is the minimum element.  The gap sequence
    must sum to n; positions past n wrap around the circle.
    """
    gaps = tuple(gaps)
    if not (1 <= start <= n):
        raise ValueError(f"start {start} outside 1..{n}")
    if any(g < 1 for g in gaps):
        raise ValueError(f"gaps must be positive, got {gaps}")
    if sum(gaps) != n:
        raise ValueError(f"gaps {gaps} sum to {sum(gaps)}, expected n={n}")
    elems = [start]
    for g in gaps[:-1]:
        elems.append((elems[-1] + g - 1) % n + 1)
    return CircSet(n, tuple(elems))


def rotate(a: CircSet, s: int) -> CircSet:
    """Rotate every element by s steps around the circle."""
    n = a.n
    return CircSet(n, tuple((x - 1 + s) % n + 1 for x in a.elems))


def reflect(a: CircSet) -> CircSet:
    """Reflect the circle about the axis through position 1."""
    n = a.n
    return CircSet(n, tuple((n + 1 - x) % n + 1 for x in a.elems))


def enumerate_separated(n: int, r: int, k: int) -> SetFamily:
    """All k-separated r-subsets of the circular ground set {1..n}, in lexicographic order.

    Empty family when the circle is too small (n < (k+1)r).  k = 0 yields all
    r-subsets.
    """
    if n < 1:
        raise ValueError(f"ground set size must be positive, got n={n}")
    if r < 1:
        raise ValueError(f"member size must be positive, got r={r}")
    if k < 0:
        raise ValueError(f"separation parameter must be non-negative, got k={k}")
    out: list[CircSet] = []
    step = k + 1
    if r == 1:
        if n > k:
            out = [CircSet(n, (a,)) for a in range(1, n + 1)]
        return SetFamily(n, r, k, tuple(out))

    def grow(prefix: tuple[int, ...], first: int) -> None:
        i = len(prefix)
        if i == r:
            out.append(CircSet(n, prefix))
            return
        # wrap gap forces the last element to stay at most first + n - step
        hi = min(n, first + n - step - step * (r - 1 - i))
        for a in range(prefix[-1] + step, hi + 1):
            grow(prefix + (a,), first)

    for first in range(1, n + 1):
        grow((first,), first)
    return SetFamily(n, r, k, tuple(out))


def star_size_formula(n: int, r: int, k: int) -> int:
    """Closed form for the number of k-separated r-sets through a fixed element.

    Equals C(n - k r - 1, r - 1); defined for n >= (k+1) r.
    """
    if r < 1:
        raise ValueError(f"member size must be positive, got r={r}")
    if k < 0:
        raise ValueError(f"separation parameter must be non-negative, got k={k}")
    if n < (k + 1) * r:
        raise ValueError(f"need n >= (k+1)r = {(k + 1) * r}, got n={n}")
    return math.comb(n - k * r - 1, r - 1)
