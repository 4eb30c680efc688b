"""Edge colorings of complete graphs: pattern constructors, restriction to
copies, and canonical-structure finders.

Colors are stored per edge in lexicographic edge order over pairs (i, j) with
i < j, and are always renumbered into restricted-growth normal form: color
ids appear in order of first use, so any two colorings inducing the same
partition of the edge set compare equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graphs import Graph, has_cycle, turan_classes


def edge_order(n: int) -> list[tuple[int, int]]:
    """Edges of K_n as (i, j), i < j, in lexicographic order."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def edge_index(i: int, j: int, n: int) -> int:
    if i > j:
        i, j = j, i
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def rgs_normalize(colors: Sequence[int]) -> tuple[int, ...]:
    """Renumber color ids by first use (restricted-growth normal form)."""
    mapping: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in mapping:
            mapping[c] = len(mapping)
        out.append(mapping[c])
    return tuple(out)


class EdgeColoring:
    """A coloring of all edges of K_n, i.e. a partition into color classes."""

    __slots__ = ("n", "colors", "num_colors")

    def __init__(self, n: int, colors: Sequence[int]):
        m = n * (n - 1) // 2
        if len(colors) != m:
            raise ValueError(f"expected {m} colors for K_{n}, got {len(colors)}")
        self.n = n
        self.colors = rgs_normalize(colors)
        self.num_colors = len(set(self.colors))

    @classmethod
    def from_map(cls, n: int, color_of: dict[tuple[int, int], int]) -> "EdgeColoring":
        seq = []
        for i, j in edge_order(n):
            key = (i, j) if (i, j) in color_of else (j, i)
            seq.append(color_of[key])
        return cls(n, seq)

    def color_of(self, i: int, j: int) -> int:
        return self.colors[edge_index(i, j, self.n)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, EdgeColoring) and self.n == other.n
                and self.colors == other.colors)

    def __hash__(self) -> int:
        return hash((self.n, self.colors))

    def __repr__(self) -> str:
        return f"EdgeColoring(n={self.n}, colors={self.num_colors})"

    def class_edges(self) -> dict[int, list[tuple[int, int]]]:
        """Edges of each color class over the whole host."""
        out: dict[int, list[tuple[int, int]]] = {}
        for e, c in zip(edge_order(self.n), self.colors):
            out.setdefault(c, []).append(e)
        return out

    def to_json_dict(self) -> dict:
        return {"n": self.n, "colors": list(self.colors)}

    @staticmethod
    def from_json_dict(d: dict) -> "EdgeColoring":
        return EdgeColoring(d["n"], d["colors"])


# ---------------------------------------------------------------------------
# Pattern constructors
# ---------------------------------------------------------------------------

PATTERNS = ("MONO", "RAINBOW", "LEX", "RTEM", "RTDM", "RTEL", "RTDL")


@dataclass(frozen=True)
class PatternParams:
    pattern: str
    n: int
    m: Optional[int] = None  # number of Turan classes, RT* patterns only

    def __post_init__(self):
        if self.pattern not in PATTERNS:
            raise ValueError(f"unknown pattern {self.pattern!r}")
        if self.pattern.startswith("RT"):
            if self.m is None or not 2 <= self.m <= self.n:
                raise ValueError(
                    f"{self.pattern} needs 2 <= m <= n, got m={self.m}, n={self.n}")
        if self.n < 1:
            raise ValueError(f"need n >= 1, got {self.n}")


def build_pattern(params: PatternParams) -> EdgeColoring:
    """Construct one of the standard coloring patterns.

    MONO uses one color; RAINBOW gives every edge a private color; LEX colors
    edge {i, j} (i < j) by its top endpoint j.  The four compound patterns
    put a rainbow Turan graph T_{n,m} on the class boundaries and color the
    inside of the classes monochromatically (RTEM: one shared color, RTDM:
    one private color per class) or by LEX (RTEL: class-internal LEX levels
    shared across classes, RTDL: private per class).  No inside color ever
    reappears on the rainbow part.
    """
    n, kind = params.n, params.pattern
    if kind == "MONO":
        return EdgeColoring(n, [0] * (n * (n - 1) // 2))
    if kind == "RAINBOW":
        return EdgeColoring(n, range(n * (n - 1) // 2))
    if kind == "LEX":
        return EdgeColoring.from_map(n, {(i, j): j for i, j in edge_order(n)})

    classes = turan_classes(n, params.m)
    cls_of = {}
    for c, vs in enumerate(classes):
        for v in vs:
            cls_of[v] = c
    color_of: dict[tuple[int, int], int] = {}
    nxt = 0

    def fresh() -> int:
        nonlocal nxt
        nxt += 1
        return nxt - 1

    for i, j in edge_order(n):
        if cls_of[i] != cls_of[j]:
            color_of[(i, j)] = fresh()

    if kind == "RTEM":
        shared = fresh()
        for vs in classes:
            for i, j in itertools.combinations(vs, 2):
                color_of[(i, j)] = shared
    elif kind == "RTDM":
        for vs in classes:
            if len(vs) < 2:
                continue
            mine = fresh()
            for i, j in itertools.combinations(vs, 2):
                color_of[(i, j)] = mine
    elif kind == "RTEL":
        levels = [fresh() for _ in range(max(len(vs) for vs in classes) - 1)] \
            if max(len(vs) for vs in classes) > 1 else []
        for vs in classes:
            for a, b in itertools.combinations(range(len(vs)), 2):
                color_of[(vs[a], vs[b])] = levels[b - 1]
    elif kind == "RTDL":
        for vs in classes:
            levels = [fresh() for _ in range(len(vs) - 1)]
            for a, b in itertools.combinations(range(len(vs)), 2):
                color_of[(vs[a], vs[b])] = levels[b - 1]

    # the RTEM shared color must be used by at least one edge
    used = set(color_of.values())
    if len(used) != nxt:
        remap = {c: k for k, c in enumerate(sorted(used))}
        color_of = {e: remap[c] for e, c in color_of.items()}
    return EdgeColoring.from_map(n, color_of)


def pattern(kind: str, n: int, m: Optional[int] = None) -> EdgeColoring:
    return build_pattern(PatternParams(kind, n, m))


# -- named lower-bound constructions ----------------------------------------

def mono_clique_plus_rainbow(n: int, t: int) -> EdgeColoring:
    """Monochromatic K_{n-t} on the top vertices; every edge meeting the
    first t vertices gets a private color.  Uses t*n - C(t+1,2) + 1 colors."""
    if not 0 < t < n - 1:
        raise ValueError(f"need 0 < t < n-1, got t={t}, n={n}")
    color_of = {}
    nxt = 0
    for i, j in edge_order(n):
        if i < t:
            color_of[(i, j)] = nxt
            nxt += 1
    for i, j in edge_order(n):
        if i >= t:
            color_of[(i, j)] = nxt
    return EdgeColoring.from_map(n, color_of)


def rainbow_cycle_plus_mono(n: int) -> EdgeColoring:
    """Rainbow Hamiltonian cycle, monochromatic complement: n + 1 colors."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    cyc = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    color_of = {}
    nxt = 0
    for e in edge_order(n):
        if e in cyc:
            color_of[e] = nxt
            nxt += 1
    for e in edge_order(n):
        if e not in cyc:
            color_of[e] = nxt
    return EdgeColoring.from_map(n, color_of)


def rainbow_matching_plus_mono(n: int) -> EdgeColoring:
    """Rainbow perfect (or near-perfect) matching, monochromatic complement."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    mat = {(2 * k, 2 * k + 1) for k in range(n // 2)}
    color_of = {}
    nxt = 0
    for e in edge_order(n):
        if e in mat:
            color_of[e] = nxt
            nxt += 1
    for e in edge_order(n):
        if e not in mat:
            color_of[e] = nxt
    return EdgeColoring.from_map(n, color_of)


def rainbow_graph_plus_mono(n: int, rainbow: Graph) -> EdgeColoring:
    """Private colors on the edges of the given graph (embedded as-is on
    0..n-1), one extra color on the complement."""
    if rainbow.n > n:
        raise ValueError(f"graph order {rainbow.n} exceeds host {n}")
    special = set(rainbow.edges())
    color_of = {}
    nxt = 0
    for e in edge_order(n):
        if e in special:
            color_of[e] = nxt
            nxt += 1
    for e in edge_order(n):
        if e not in special:
            color_of[e] = nxt
    return EdgeColoring.from_map(n, color_of)


# ---------------------------------------------------------------------------
# Restriction of colorings to copies
# ---------------------------------------------------------------------------

def classes_of_edges(coloring: EdgeColoring,
                     edges: Iterable[tuple[int, int]]) -> list[tuple[int, Graph]]:
    """Partition the given host edges by color.

    Returns (color id, class graph) pairs sorted by color id; each class is
    the isolate-free graph spanned by its edges (vertices relabeled).
    """
    by_color: dict[int, list[tuple[int, int]]] = {}
    for i, j in edges:
        by_color.setdefault(coloring.color_of(i, j), []).append((i, j))
    out = []
    for c in sorted(by_color):
        es = by_color[c]
        verts = sorted({v for e in es for v in e})
        pos = {v: k for k, v in enumerate(verts)}
        out.append((c, Graph(len(verts), [(pos[i], pos[j]) for i, j in es])))
    return out


def classes_on(coloring: EdgeColoring, vertices: Sequence[int]) -> list[tuple[int, Graph]]:
    """Color classes induced inside a vertex subset."""
    vs = sorted(set(vertices))
    if vs and (vs[0] < 0 or vs[-1] >= coloring.n):
        raise ValueError(f"vertex subset {vs} out of range for n={coloring.n}")
    return classes_of_edges(coloring, itertools.combinations(vs, 2))


# ---------------------------------------------------------------------------
# Canonical-structure finders
# ---------------------------------------------------------------------------

def _subset_kind(coloring: EdgeColoring, vs: tuple[int, ...],
                 kinds: tuple[str, ...] = ("mono", "rainbow", "lex")
                 ) -> Optional[str]:
    """Homogeneity kind of a vertex subset among the requested kinds:
    'mono', 'rainbow', or 'lex' (order-isomorphic to the LEX pattern), else
    None.  The kinds coincide on two vertices and are disjoint above."""
    t = len(vs)
    cols = [coloring.color_of(i, j) for i, j in itertools.combinations(vs, 2)]
    if "mono" in kinds and len(set(cols)) == 1:
        return "mono"
    if "rainbow" in kinds and len(set(cols)) == len(cols):
        return "rainbow"
    if "lex" not in kinds:
        return None
    for perm in itertools.permutations(vs):
        seen = []
        ok = True
        for b in range(1, t):
            level = coloring.color_of(perm[0], perm[b])
            if level in seen:
                ok = False
                break
            if any(coloring.color_of(perm[a], perm[b]) != level for a in range(1, b)):
                ok = False
                break
            seen.append(level)
        if ok:
            return "lex"
    return None


def find_canonical_clique(coloring: EdgeColoring, t: int,
                          kinds: tuple[str, ...] = ("mono", "rainbow", "lex")
                          ) -> Optional[tuple[str, tuple[int, ...]]]:
    """First t-subset (in lexicographic order) whose induced coloring is
    monochromatic, rainbow, or order-isomorphic to LEX; ``kinds`` restricts
    which of the three patterns count."""
    if t > coloring.n:
        raise ValueError(f"t={t} exceeds host order {coloring.n}")
    for vs in itertools.combinations(range(coloring.n), t):
        kind = _subset_kind(coloring, vs, kinds)
        if kind is not None:
            return kind, vs
    return None


def find_clean_multipartite(coloring: EdgeColoring, r: int, t: int
                            ) -> Optional[tuple[tuple[tuple[int, ...], ...], tuple[str, ...]]]:
    """Search for vertex-disjoint classes V_1..V_r of size t such that all
    cross edges are rainbow, each class is monochromatic/rainbow/LEX, and no
    cross color repeats inside a class.  Returns the lexicographically first
    witness (classes ordered by smallest member) with the homogeneity kinds,
    or None.  This decides presence for a concrete coloring only.
    """
    n = coloring.n
    if r * t > n:
        raise ValueError(f"need r*t <= n, got r={r}, t={t}, n={n}")
    subsets = [vs for vs in itertools.combinations(range(n), t)
               if _subset_kind(coloring, vs) is not None]

    def cross_colors(a: tuple[int, ...], b: tuple[int, ...]) -> Optional[set[int]]:
        cols = set()
        for i in a:
            for j in b:
                c = coloring.color_of(i, j)
                if c in cols:
                    return None
                cols.add(c)
        return cols

    def extend(chosen: list[tuple[int, ...]], used: set[int],
               cross: set[int], start: int) -> Optional[list[tuple[int, ...]]]:
        if len(chosen) == r:
            # clean: no cross color inside any class
            for vs in chosen:
                for i, j in itertools.combinations(vs, 2):
                    if coloring.color_of(i, j) in cross:
                        return None
            return chosen
        for idx in range(start, len(subsets)):
            vs = subsets[idx]
            if used & set(vs):
                continue
            new_cross = set(cross)
            ok = True
            for other in chosen:
                cols = cross_colors(other, vs)
                if cols is None or cols & new_cross:
                    ok = False
                    break
                new_cross |= cols
            if not ok:
                continue
            got = extend(chosen + [vs], used | set(vs), new_cross, idx + 1)
            if got is not None:
                return got
        return None

    witness = extend([], set(), set(), 0)
    if witness is None:
        return None
    kinds = tuple(_subset_kind(coloring, vs) for vs in witness)
    return tuple(witness), kinds


def find_min_order_rainbow(coloring: EdgeColoring, k: int
                           ) -> tuple[Graph, tuple[int, ...]]:
    """A rainbow subgraph with exactly k edges on as few vertices as
    possible.  Needs k >= 3 and at least k colors; the result never exceeds
    2k-2 vertices.
    """
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if coloring.num_colors < k:
        raise ValueError(
            f"coloring has {coloring.num_colors} colors, needs at least {k}")
    n = coloring.n
    v_min = next(v for v in range(2, n + 1) if v * (v - 1) // 2 >= k)
    for v in range(v_min, n + 1):
        for vs in itertools.combinations(range(n), v):
            seen: dict[int, tuple[int, int]] = {}
            for i, j in itertools.combinations(vs, 2):
                c = coloring.color_of(i, j)
                if c not in seen:
                    seen[c] = (i, j)
                    if len(seen) == k:
                        break
            if len(seen) < k:
                continue
            edges = sorted(seen.values())
            verts = sorted({x for e in edges for x in e})
            pos = {x: a for a, x in enumerate(verts)}
            g = Graph(len(verts), [(pos[i], pos[j]) for i, j in edges])
            return g, tuple(verts)
    raise AssertionError("coloring has >= k colors, so K_n itself qualifies")


def embed_forest_rainbow_in_lex(forest: Graph, n: int) -> tuple[int, ...]:
    """Embed a forest into the LEX coloring of K_n so that it is rainbow.

    Components are laid out root-first by breadth-first search from the
    lowest position upward, so every vertex has exactly one embedded edge to
    a lower position; the embedding is verified rainbow before returning.
    Returns the injection as a tuple indexed by forest vertex.
    """
    if has_cycle(forest):
        raise ValueError("pattern contains a cycle; only forests embed rainbow in LEX")
    if forest.n > n:
        raise ValueError(f"forest order {forest.n} exceeds host order {n}")
    placement = [-1] * forest.n
    nxt = 0
    seen = [False] * forest.n
    for root in range(forest.n):
        if seen[root]:
            continue
        queue = [root]
        seen[root] = True
        while queue:
            v = queue.pop(0)
            placement[v] = nxt
            nxt += 1
            for u in sorted(forest.neighbors(v)):
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    lex = pattern("LEX", n)
    cols = [lex.color_of(placement[i], placement[j]) for i, j in forest.edges()]
    if len(set(cols)) != len(cols):
        raise AssertionError("breadth-first placement failed to be rainbow")
    return tuple(placement)
