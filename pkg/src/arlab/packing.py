"""Graph packing inside a complete host: edge-disjoint placements, the
Bollobas-Eldridge sufficient condition, minimum edge overlap, and the
blocker / anti-packer machinery built on it.

Two graphs pack in K_p when they admit placements with disjoint edge images.
A (G,p)-blocker meets every placement of G in at least 2 edges; an
anti-packer in at least 1.  Minimality means no proper subgraph keeps the
property; since overlap only drops when edges are deleted, checking the
one-edge-deleted subgraphs suffices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .graphs import (Graph, are_isomorphic, canonical_code, enumerate_graphs,
                     parse_graph)

# placement enumeration budget: injections of the permuted core into the host
MAX_PLACEMENTS = 5_000_000


@dataclass(frozen=True)
class PackingWitness:
    """Two placements with disjoint edge images."""
    p: int
    map1: tuple[int, ...]
    map2: tuple[int, ...]


@dataclass(frozen=True)
class OverlapReport:
    p: int
    min_overlap: int
    map1: tuple[int, ...]
    map2: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"p": self.p, "min_overlap": self.min_overlap,
                "placement1": list(self.map1), "placement2": list(self.map2)}


def _edge_bit(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return 1 << (j * (j - 1) // 2 + i)


def _placed_mask(g: Graph, mapping: dict[int, int]) -> int:
    mask = 0
    for i, j in g.edges():
        mask |= _edge_bit(mapping[i], mapping[j])
    return mask


def _full_map(g: Graph, core_vertices: list[int], injection: Iterable[int],
              p: int) -> tuple[int, ...]:
    """Extend an injection of the non-isolated vertices to all of g,
    assigning isolates to the smallest free host vertices."""
    out = [-1] * g.n
    used = set()
    for v, img in zip(core_vertices, injection):
        out[v] = img
        used.add(img)
    free = iter(x for x in range(p) if x not in used)
    for v in range(g.n):
        if out[v] < 0:
            out[v] = next(free)
    return tuple(out)


def min_overlap(h: Graph, g: Graph, p: int,
                stop_at: int = 0) -> OverlapReport:
    """Exact minimum of |E(h') ∩ E(g')| over placements h' ≅ h, g' ≅ g in
    K_p, with witnessing placements.

    The denser core is pinned to one canonical position (the host's full
    symmetry makes this lossless) and the other core is permuted over all
    injections.  ``stop_at`` short-circuits once the minimum is proved to be
    <= stop_at; the reported value is still exact whenever it exceeds
    stop_at.
    """
    if max(h.n, g.n) > p:
        raise ValueError(f"orders {h.n},{g.n} exceed host {p}")
    h_core = [v for v in range(h.n) if h.adj[v]]
    g_core = [v for v in range(g.n) if g.adj[v]]
    # pin the graph whose permuted counterpart yields fewer injections
    if _injection_count(len(h_core), p) <= _injection_count(len(g_core), p):
        fixed_g, fixed_core = g, g_core
        moving_g, moving_core = h, h_core
        swap = True
    else:
        fixed_g, fixed_core = h, h_core
        moving_g, moving_core = g, g_core
        swap = False
    if _injection_count(len(moving_core), p) > MAX_PLACEMENTS:
        raise ValueError(
            f"placement search too large: {len(moving_core)} core vertices in K_{p}")

    fixed_map = {v: k for k, v in enumerate(fixed_core)}
    fixed_mask = _placed_mask(fixed_g, {v: fixed_map[v] for v in fixed_core})
    moving_edges = [(moving_core.index(i), moving_core.index(j))
                    for i, j in moving_g.edges()]

    best = None
    best_inj = None
    for inj in itertools.permutations(range(p), len(moving_core)):
        mask = 0
        for a, b in moving_edges:
            mask |= _edge_bit(inj[a], inj[b])
        ov = (mask & fixed_mask).bit_count()
        if best is None or ov < best:
            best = ov
            best_inj = inj
            if best <= stop_at:
                break
    if best is None:  # one side has no edges
        best, best_inj = 0, ()

    fixed_full = _full_map(fixed_g, fixed_core, range(len(fixed_core)), p)
    moving_full = _full_map(moving_g, moving_core, best_inj, p)
    m1, m2 = (moving_full, fixed_full) if swap else (fixed_full, moving_full)
    return OverlapReport(p=p, min_overlap=best, map1=m1, map2=m2)


def _injection_count(k: int, p: int) -> int:
    out = 1
    for x in range(p, p - k, -1):
        out *= x
    return out


def pack(g1: Graph, g2: Graph, p: int) -> Optional[PackingWitness]:
    """Edge-disjoint placement of g1 and g2 in K_p, or None."""
    report = min_overlap(g1, g2, p, stop_at=0)
    if report.min_overlap == 0:
        return PackingWitness(p=p, map1=report.map1, map2=report.map2)
    return None


# ---------------------------------------------------------------------------
# Bollobas-Eldridge condition
# ---------------------------------------------------------------------------

_BE_EXCEPTION_SPECS = [
    ("M2", "K1+K3"),
    ("K1+K1+K3", "K2+K3"),
    ("M3", "K1+K1+K4"),
    ("K1+K1+K1+K3", "K3+K3"),
    ("M2+K3", "K1+K1+K1+K4"),
    ("K1+K1+K1+K1+K4", "K2+K3+K3"),
    ("K1+K1+K1+K1+K1+K4", "K3+K3+K3"),
]


def be_exception_pairs() -> list[tuple[Graph, Graph]]:
    """The seven exceptional pairs of the Bollobas-Eldridge packing theorem."""
    return [(parse_graph(a), parse_graph(b)) for a, b in _BE_EXCEPTION_SPECS]


@lru_cache(maxsize=1)
def _be_exception_codes() -> list[tuple[int, bytes, bytes]]:
    return [(a.n, canonical_code(a), canonical_code(b))
            for a, b in be_exception_pairs()]


def be_packable(g1: Graph, g2: Graph) -> str:
    """Bollobas-Eldridge verdict: 'guaranteed', 'exception', or 'inconclusive'.

    Both graphs are padded with isolates to a common order n.  'guaranteed'
    needs max degrees below n-1, e(g1)+e(g2) <= 2n-3, and the pair (in either
    order, up to isomorphism) absent from the exception list.
    """
    n = max(g1.n, g2.n, 2)
    a, b = g1.padded(n), g2.padded(n)
    if max(a.degrees()) >= n - 1 or max(b.degrees()) >= n - 1:
        return "inconclusive"
    if a.edge_count + b.edge_count > 2 * n - 3:
        return "inconclusive"
    ca, cb = canonical_code(a), canonical_code(b)
    for order, c1, c2 in _be_exception_codes():
        if order == n and (ca, cb) in ((c1, c2), (c2, c1)):
            return "exception"
    return "guaranteed"


# ---------------------------------------------------------------------------
# Blockers and anti-packers
# ---------------------------------------------------------------------------

def is_blocker(h: Graph, g: Graph, p: int) -> bool:
    return min_overlap(h, g, p, stop_at=1).min_overlap >= 2


def is_anti_packer(h: Graph, g: Graph, p: int) -> bool:
    return min_overlap(h, g, p, stop_at=0).min_overlap >= 1


def _is_minimal(h: Graph, g: Graph, p: int, threshold: int) -> bool:
    core = h.strip_isolates()
    if min_overlap(core, g, p, stop_at=threshold - 1).min_overlap < threshold:
        return False
    for e in core.edges():
        sub = core.without_edge(*e).strip_isolates()
        if sub.edge_count == 0:
            continue
        if min_overlap(sub, g, p, stop_at=threshold - 1).min_overlap >= threshold:
            return False
    # the empty subgraph never overlaps, so edge deletions settle minimality
    return True


def is_minimal_blocker(h: Graph, g: Graph, p: int) -> bool:
    return _is_minimal(h, g, p, threshold=2)


def is_minimal_anti_packer(h: Graph, g: Graph, p: int) -> bool:
    return _is_minimal(h, g, p, threshold=1)


@dataclass
class MinimalEnumeration:
    kind: str
    graphs: list[Graph] = field(default_factory=list)
    complete: bool = True  # False when the candidate budget was exhausted


def enumerate_minimal(kind: str, g: Graph, p: int, max_edges: int,
                      candidate_budget: int = 2_000_000) -> MinimalEnumeration:
    """All minimal (g,p)-blockers or anti-packers on at most p vertices and
    max_edges edges, one representative per isomorphism class, sorted by
    (edges, order, canonical code)."""
    if kind not in ("blocker", "anti-packer"):
        raise ValueError(f"kind must be 'blocker' or 'anti-packer', got {kind!r}")
    if p > 7:
        raise ValueError(f"enumeration bounded to hosts of order <= 7, got {p}")
    threshold = 2 if kind == "blocker" else 1
    total = sum(1 for r in range(max_edges + 1)
                for _ in itertools.combinations(range(p * (p - 1) // 2), r))
    result = MinimalEnumeration(kind=kind)
    if total > candidate_budget:
        result.complete = False
        return result
    found = []
    for h in enumerate_graphs(p, max_edges=max_edges):
        core = h.strip_isolates()
        if core.edge_count == 0:
            continue
        if _is_minimal(core, g, p, threshold):
            found.append(core)
    found.sort(key=lambda x: (x.edge_count, x.n, canonical_code(x)))
    result.graphs = found
    return result


def contains_iso(graphs: Iterable[Graph], target: Graph) -> bool:
    return any(are_isomorphic(h, target) for h in graphs)
