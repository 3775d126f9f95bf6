"""Independent brute-force oracles for the test suite.

Everything here is written from scratch against the definitions, without
reusing package internals, so a bug in the package cannot hide behind a
matching bug in the oracle.
"""

from itertools import combinations


def circ_gaps(elems: tuple[int, ...], n: int) -> list[int]:
    """Circular gaps via modular distance; element order differs from the package's."""
    e = sorted(elems)
    out = []
    for i in range(len(e)):
        nxt = e[(i + 1) % len(e)]
        out.append((nxt - e[i] - 1) % n + 1)
    return out


def brute_separated(n: int, r: int, k: int) -> list[tuple[int, ...]]:
    """Filter all r-subsets by the separation predicate."""
    return [
        c
        for c in combinations(range(1, n + 1), r)
        if min(circ_gaps(c, n)) > k
    ]


def dihedral_images(members, n: int) -> list[frozenset]:
    """All 2n symmetry images of a family, each as a frozenset of sorted tuples."""
    out = []
    for s in range(n):
        out.append(
            frozenset(tuple(sorted((x - 1 + s) % n + 1 for x in m)) for m in members)
        )
        out.append(
            frozenset(tuple(sorted((s - (x - 1)) % n + 1 for x in m)) for m in members)
        )
    return out


def intersecting(members) -> bool:
    ms = [set(m) for m in members]
    return all(ms[i] & ms[j] for i in range(len(ms)) for j in range(i + 1, len(ms)))


def max_intersecting_size(members) -> int:
    """Walk every intersecting subfamily; feasible because such subfamilies are few."""
    sets = [set(m) for m in members]
    best = 0

    def grow(start: int, chosen: list[set]) -> None:
        nonlocal best
        if len(chosen) > best:
            best = len(chosen)
        for j in range(start, len(sets)):
            if all(sets[j] & c for c in chosen):
                chosen.append(sets[j])
                grow(j + 1, chosen)
                chosen.pop()

    grow(0, [])
    return best


def max_weight_intersecting(members, weights) -> int:
    sets = [set(m) for m in members]
    best = 0

    def grow(start: int, chosen: list[set], total: int) -> None:
        nonlocal best
        if total > best:
            best = total
        for j in range(start, len(sets)):
            if all(sets[j] & c for c in chosen):
                chosen.append(sets[j])
                grow(j + 1, chosen, total + weights[j])
                chosen.pop()

    grow(0, [], 0)
    return best


def all_maximum_intersecting(members) -> list[frozenset]:
    """Every maximum intersecting subfamily, as frozensets of member tuples."""
    sets = [set(m) for m in members]
    found: list[tuple[int, ...]] = []

    def grow(start: int, chosen: list[int]) -> None:
        found.append(tuple(chosen))
        for j in range(start, len(sets)):
            if all(sets[j] & sets[c] for c in chosen):
                chosen.append(j)
                grow(j + 1, chosen)
                chosen.pop()

    grow(0, [])
    top = max(len(c) for c in found)
    return [
        frozenset(tuple(sorted(members[i])) for i in c) for c in found if len(c) == top
    ]


def count_classes(families: list[frozenset], n: int) -> int:
    """Group families by dihedral orbit and count the orbits."""
    seen: set[frozenset] = set()
    classes = 0
    for fam in families:
        if fam in seen:
            continue
        classes += 1
        for img in dihedral_images(fam, n):
            seen.add(img)
    return classes


def nx_max_intersecting(members, weights=None) -> int:
    """Third route: maximum clique of the intersection graph via networkx."""
    import networkx as nx

    g = nx.Graph()
    for i, m in enumerate(members):
        g.add_node(i, weight=1 if weights is None else weights[i])
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if set(members[i]) & set(members[j]):
                g.add_edge(i, j)
    _, value = nx.max_weight_clique(g, weight="weight")
    return value
