"""Compression of separated families onto smaller circles, with per-instance verification.

The compression map fixes position 1 and pulls every other element one step
down, shrinking the ambient circle by one.  Iterating it k times sends a
k-separated family on [n] toward [n-k]; the partition and derivation steps
below organise that descent, and the verification suite checks every
structural claim the size bound rests on, clause by clause, on a concrete
family.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CircSet, SetFamily, is_k_separated
from .families import is_intersecting


def compress(a: CircSet) -> CircSet:
    """Map the circle [n] onto [n-1]: 1 stays put, every other element drops by one.

    When both 1 and 2 are present they merge, so the image can lose an element.
    """
    if a.n < 2:
        raise ValueError("cannot compress below a single position")
    elems = sorted({1 if x == 1 else x - 1 for x in a.elems})
    return CircSet(a.n - 1, tuple(elems))


def compress_iter(a: CircSet, j: int) -> CircSet:
    """Apply compress j times, landing in ambient n - j."""
    if j < 0:
        raise ValueError(f"iteration count must be non-negative, got {j}")
    if a.n - j < a.r:
        raise ValueError(f"cannot fit {a.r} elements in ambient {a.n - j}")
    for _ in range(j):
        a = compress(a)
    return a


@dataclass(frozen=True)
class PartitionResult:
    """Cells of a separated family, split by how compression treats each member.

    free: members without 1 whose image stays k-separated.
    anchored: members containing 1 whose image stays k-separated.
    boundary: k+1 cells of members whose image degenerates; cell i pins the
    pair (n+1-i, k+2-i), with cell 0 pinning (1, k+2).
    """

    free: SetFamily
    anchored: SetFamily
    boundary: tuple[SetFamily, ...]
    exhaustive: bool

    @property
    def n(self) -> int:
        return self.free.n

    @property
    def r(self) -> int:
        return self.free.r

    @property
    def k(self) -> int:
        return self.free.k

    @property
    def cells(self) -> tuple[SetFamily, ...]:
        return (self.free, self.anchored) + self.boundary

    def size(self) -> int:
        return sum(len(c) for c in self.cells)


def _boundary_cell(a: CircSet, n: int, k: int) -> int | None:
    """Index of the boundary pattern a matches, or None.

    Exclusivity for k-separated sets: the patterns pin pairs at circular
    distance k+1, and two different patterns would force two elements at
    distance at most k.
    """
    if 1 in a and (k + 2) in a:
        return 0
    for i in range(1, k + 1):
        if (n + 1 - i) in a and (k + 2 - i) in a:
            return i
    return None


def partition_family(family: SetFamily) -> PartitionResult:
    """Split a k-separated family into the compression cells.

    Requires k >= 1 and n >= (k+1)r + 1.  The classification is verified to be
    exhaustive and exclusive on the given members; a failure would mean a
    non-separated member slipped in and raises.
    """
    n, r, k = family.n, family.r, family.k
    if k < 1:
        raise ValueError(f"compression needs k >= 1, got k={k}")
    if n < (k + 1) * r + 1:
        raise ValueError(f"need n >= (k+1)r + 1 = {(k + 1) * r + 1}, got n={n}")
    free: list[CircSet] = []
    anchored: list[CircSet] = []
    boundary: list[list[CircSet]] = [[] for _ in range(k + 1)]
    for a in family:
        cell = _boundary_cell(a, n, k)
        image = compress(a)
        image_ok = image.r == r and is_k_separated(image, k)
        if cell is None and not image_ok:
            raise RuntimeError(f"member {a} fits no cell; partition not exhaustive")
        if cell is not None and image_ok:
            raise RuntimeError(f"member {a} fits two cells; partition not exclusive")
        if cell is not None:
            boundary[cell].append(a)
        elif 1 in a:
            anchored.append(a)
        else:
            free.append(a)
    return PartitionResult(
        free=SetFamily(n, r, k, tuple(free)),
        anchored=SetFamily(n, r, k, tuple(anchored)),
        boundary=tuple(SetFamily(n, r, k, tuple(b)) for b in boundary),
        exhaustive=True,
    )


@dataclass(frozen=True)
class Violation:
    """A structural claim that failed during derivation, with the sets involved."""

    kind: str
    detail: str
    members: tuple[CircSet, ...]


@dataclass(frozen=True)
class DerivedFamilies:
    """Families produced from a partition by compressing and dropping the anchor.

    overlap: sets reachable by compression from both a free and an anchored
    member (ambient n-1).
    reduced: the (r-1)-set family on [n-k] assembled from the overlap and the
    boundary cells; claimed k-separated and intersecting when the source
    family is intersecting, so it is carried with k = 0 and the claims are
    checked separately.
    reduced_image: one further compression of reduced, ambient n-k-1.
    components: the k+2 pieces of reduced before deduplication, overlap piece
    first.
    violations: separation or disjointness claims that failed during assembly.
    """

    overlap: SetFamily
    reduced: SetFamily
    reduced_image: SetFamily
    components: tuple[SetFamily, ...]
    violations: tuple[Violation, ...]


def _drop_anchor(a: CircSet) -> CircSet:
    """Remove the element 1; defined only where 1 is present."""
    if a.elems[0] != 1:
        raise ValueError(f"cannot drop 1 from {a}, it is absent")
    return CircSet(a.n, a.elems[1:])


def derive_families(partition: PartitionResult) -> DerivedFamilies:
    """Assemble the reduced (r-1)-set family a partition compresses onto.

    The overlap is compressed k-1 further steps, each boundary cell k steps,
    and the anchor 1 is dropped from every image.  Violations of the expected
    separation and disjointness are recorded, not raised; they indicate a
    non-intersecting source family.
    """
    n, r, k = partition.n, partition.r, partition.k
    if r < 2:
        raise ValueError(f"reduction drops an element, needs r >= 2, got r={r}")
    free_images = {compress(a).elems for a in partition.free}
    anchored_images = {compress(a).elems for a in partition.anchored}
    overlap = SetFamily(
        n - 1,
        r,
        k,
        tuple(CircSet(n - 1, e) for e in free_images & anchored_images),
    )
    pieces: list[tuple[CircSet, ...]] = [
        tuple(_drop_anchor(compress_iter(e, k - 1)) for e in overlap)
    ]
    for cell in partition.boundary:
        pieces.append(tuple(_drop_anchor(compress_iter(a, k)) for a in cell))
    components = tuple(SetFamily(n - k, r - 1, 0, piece) for piece in pieces)

    violations: list[Violation] = []
    for i in range(len(components)):
        for j in range(i + 1, len(components)):
            shared = components[i].member_keys & components[j].member_keys
            if shared:
                violations.append(
                    Violation(
                        kind="component-overlap",
                        detail=f"components {i} and {j} share {len(shared)} set(s)",
                        members=tuple(CircSet(n - k, e) for e in sorted(shared)),
                    )
                )
    reduced = SetFamily(n - k, r - 1, 0, tuple(m for c in components for m in c))
    bad = tuple(m for m in reduced if not is_k_separated(m, k))
    if bad:
        violations.append(
            Violation(
                kind="reduced-not-separated",
                detail=f"{len(bad)} reduced member(s) not {k}-separated in [{n - k}]",
                members=bad,
            )
        )
    reduced_image = SetFamily(
        n - k - 1, r - 1, 0, tuple(compress(m) for m in reduced)
    )
    bad_image = tuple(m for m in reduced_image if not is_k_separated(m, k))
    if bad_image:
        violations.append(
            Violation(
                kind="reduced-image-not-separated",
                detail=f"{len(bad_image)} compressed member(s) not {k}-separated in [{n - k - 1}]",
                members=bad_image,
            )
        )
    return DerivedFamilies(
        overlap=overlap,
        reduced=reduced,
        reduced_image=reduced_image,
        components=components,
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class ClauseResult:
    """Outcome of one verification clause, with the witnessing sets on failure."""

    clause_id: str
    passed: bool
    witnesses: tuple[CircSet, ...]
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {
            "clause_id": self.clause_id,
            "passed": self.passed,
            "witnesses": [w.to_json_dict() for w in self.witnesses],
            "detail": self.detail,
        }


@dataclass(frozen=True)
class CompressionReport:
    """Clause-by-clause verification of the compression argument on one family."""

    n: int
    r: int
    k: int
    clauses: tuple[ClauseResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    def clause(self, clause_id: str) -> ClauseResult:
        for c in self.clauses:
            if c.clause_id == clause_id:
                return c
        raise KeyError(clause_id)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "passed": self.passed,
            "clauses": [c.to_json_dict() for c in self.clauses],
        }


def _collision_clause(family: SetFamily) -> ClauseResult:
    """Sets identified by j-fold compression must differ in exactly two elements of 1..j+1."""
    witnesses: list[CircSet] = []
    for j in range(1, family.k + 1):
        buckets: dict[tuple[int, ...], list[CircSet]] = {}
        for a in family:
            buckets.setdefault(compress_iter(a, j).elems, []).append(a)
        for group in buckets.values():
            for x in range(len(group)):
                for y in range(x + 1, len(group)):
                    diff = set(group[x].elems) ^ set(group[y].elems)
                    if len(diff) != 2 or max(diff) > j + 1:
                        witnesses.extend((group[x], group[y]))
    return ClauseResult("collision-structure", not witnesses, tuple(witnesses))


def verify_compression_suite(family: SetFamily) -> CompressionReport:
    """Check every structural clause of the compression argument on one family.

    Intended for intersecting families; a non-intersecting input fails the
    first clause and usually some later ones, all reported with witnesses
    rather than raised.
    """
    n, r, k = family.n, family.r, family.k
    if k < 1:
        raise ValueError(f"compression needs k >= 1, got k={k}")
    if r < 2:
        raise ValueError(f"reduction needs r >= 2, got r={r}")
    if n < (k + 1) * r + 1:
        raise ValueError(f"need n >= (k+1)r + 1 = {(k + 1) * r + 1}, got n={n}")
    clauses: list[ClauseResult] = []

    disjoint_pairs: list[CircSet] = []
    for i in range(len(family.sets)):
        for j in range(i + 1, len(family.sets)):
            if not family.sets[i].mask & family.sets[j].mask:
                disjoint_pairs.extend((family.sets[i], family.sets[j]))
    clauses.append(
        ClauseResult("input-intersecting", not disjoint_pairs, tuple(disjoint_pairs[:10]))
    )

    clauses.append(_collision_clause(family))

    partition = partition_family(family)
    derived = derive_families(partition)

    image_members = [compress(a) for a in partition.free] + [
        compress(a) for a in partition.anchored
    ]
    bad_images = tuple(
        m for m in image_members if m.r != r or not is_k_separated(m, k)
    )
    clauses.append(ClauseResult("compressed-separated", not bad_images, bad_images))

    image_union = SetFamily(n - 1, r, k, tuple(image_members))
    img = image_union.sets
    disjoint_images: list[CircSet] = []
    for i in range(len(img)):
        for j in range(i + 1, len(img)):
            if not img[i].mask & img[j].mask:
                disjoint_images.extend((img[i], img[j]))
    clauses.append(
        ClauseResult(
            "compressed-intersecting", not disjoint_images, tuple(disjoint_images[:10])
        )
    )

    overlap_witnesses = tuple(
        m
        for v in derived.violations
        if v.kind == "component-overlap"
        for m in v.members
    )
    clauses.append(
        ClauseResult(
            "reduced-components-disjoint", not overlap_witnesses, overlap_witnesses
        )
    )

    red = derived.reduced.sets
    disjoint_reduced: list[CircSet] = []
    for i in range(len(red)):
        for j in range(i + 1, len(red)):
            if not red[i].mask & red[j].mask:
                disjoint_reduced.extend((red[i], red[j]))
    clauses.append(
        ClauseResult(
            "reduced-intersecting", not disjoint_reduced, tuple(disjoint_reduced[:10])
        )
    )

    bad_reduced = tuple(m for m in derived.reduced if not is_k_separated(m, k))
    clauses.append(ClauseResult("reduced-separated", not bad_reduced, bad_reduced))

    bad_reduced_image = tuple(
        m for m in derived.reduced_image if not is_k_separated(m, k)
    )
    clauses.append(
        ClauseResult("reduced-image-separated", not bad_reduced_image, bad_reduced_image)
    )

    total = len(family)
    recovered = len(image_union) + len(derived.reduced)
    clauses.append(
        ClauseResult(
            "size-identity",
            total == recovered,
            (),
            detail=f"{total} = {len(image_union)} + {len(derived.reduced)}",
        )
    )

    return CompressionReport(n=n, r=r, k=k, clauses=tuple(clauses))
