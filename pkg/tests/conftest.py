"""Shared test helpers: exhaustive small-graph catalogs and independent
brute-force oracles (kept deliberately naive; they are the reference the
library code is checked against)."""

from __future__ import annotations

import itertools
from functools import lru_cache

from arlab.graphs import Graph, canonical_code


@lru_cache(maxsize=None)
def graph_catalog(order: int) -> tuple[Graph, ...]:
    """All graphs on exactly `order` vertices up to isomorphism (isolated
    vertices included), generated by orderly vertex extension."""
    if order == 0:
        return (Graph(0),)
    out = []
    seen = set()
    for parent in graph_catalog(order - 1):
        base = parent.edges()
        for mask in range(1 << (order - 1)):
            g = Graph(order, base + [(v, order - 1)
                                     for v in range(order - 1) if mask >> v & 1])
            code = canonical_code(g)
            if code not in seen:
                seen.add(code)
                out.append(g)
    return tuple(out)


def naive_contains(host: Graph, pattern: Graph) -> bool:
    """All-injections subgraph containment (the spec's reference oracle)."""
    if pattern.n > host.n:
        return False
    pedges = pattern.edges()
    for image in itertools.permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[a], image[b]) for a, b in pedges):
            return True
    return False


def brute_force_girth(g: Graph):
    """Shortest cycle length by enumerating vertex sequences."""
    for length in range(3, g.n + 1):
        for subset in itertools.combinations(range(g.n), length):
            first = subset[0]
            rest = subset[1:]
            for perm in itertools.permutations(rest):
                cyc = (first,) + perm
                if perm[0] > perm[-1]:  # kill direction symmetry
                    continue
                if all(g.has_edge(cyc[i], cyc[(i + 1) % length])
                       for i in range(length)):
                    return length
    return None


def brute_force_alpha(g: Graph) -> int:
    best = 0
    for k in range(g.n, 0, -1):
        for subset in itertools.combinations(range(g.n), k):
            if all(not g.has_edge(i, j)
                   for i, j in itertools.combinations(subset, 2)):
                return k
    return best


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
