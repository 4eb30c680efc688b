"""Small simple graphs: constructors, isomorphism, and exact invariants.

Everything here is exhaustive and exact, sized for graphs on at most 12
vertices (adjacency rows fit in machine-word bitmasks).  Vertices are always
0..n-1; edges are unordered pairs (i, j) with i < j.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 12


class GraphSpecError(ValueError):
    """Raised when a textual graph specification cannot be parsed."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is stored as one bitmask per vertex; bit j of ``adj[i]`` is set
    iff ij is an edge.  No self-loops; symmetry is enforced at construction.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphSpecError(f"order must be between 0 and {MAX_VERTICES}, got {n}")
        rows = [0] * n
        for i, j in edges:
            if i == j:
                raise GraphSpecError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise GraphSpecError(f"edge ({i},{j}) out of range for order {n}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        self.n = n
        self.adj = tuple(rows)
        self._hash = hash((n, self.adj))

    # -- basic accessors ---------------------------------------------------

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges as (i, j) pairs with i < j."""
        out = []
        for i in range(self.n):
            row = self.adj[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    out.append((i, j))
                row >>= 1
                j += 1
        return out

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()})"

    # -- derived graphs ----------------------------------------------------

    def with_edge(self, i: int, j: int) -> "Graph":
        return Graph(self.n, self.edges() + [(i, j)])

    def without_edge(self, i: int, j: int) -> "Graph":
        e = (min(i, j), max(i, j))
        return Graph(self.n, [x for x in self.edges() if x != e])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on the given vertices, relabeled 0..k-1 in sorted order."""
        vs = sorted(vertices)
        pos = {v: k for k, v in enumerate(vs)}
        es = [(pos[i], pos[j]) for i, j in self.edges() if i in pos and j in pos]
        return Graph(len(vs), es)

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Image under the vertex permutation v -> perm[v]."""
        return Graph(self.n, [(perm[i], perm[j]) for i, j in self.edges()])

    def strip_isolates(self) -> "Graph":
        """Drop isolated vertices and relabel compactly (sorted order kept)."""
        keep = [v for v in range(self.n) if self.adj[v]]
        if len(keep) == self.n:
            return self
        return self.induced(keep)

    def padded(self, order: int) -> "Graph":
        """Same graph with isolated vertices appended up to the given order."""
        if order < self.n:
            raise GraphSpecError(f"cannot pad order {self.n} down to {order}")
        return Graph(order, self.edges())

    def disjoint_union(self, other: "Graph") -> "Graph":
        es = self.edges() + [(i + self.n, j + self.n) for i, j in other.edges()]
        return Graph(self.n + other.n, es)

    def complement(self) -> "Graph":
        es = [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
              if not self.has_edge(i, j)]
        return Graph(self.n, es)

    def isolate_count(self) -> int:
        return sum(1 for r in self.adj if r == 0)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @staticmethod
    def from_json_dict(d: dict) -> "Graph":
        return Graph(d["n"], [tuple(e) for e in d["edges"]])


def _bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


# ---------------------------------------------------------------------------
# Named constructors
# ---------------------------------------------------------------------------

def complete_graph(p: int) -> Graph:
    return Graph(p, itertools.combinations(range(p), 2))

def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])

def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphSpecError(f"cycle needs at least 3 vertices, got {k}")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])

def star_graph(t: int) -> Graph:
    """The star K_{1,t} on t+1 vertices, center 0."""
    return Graph(t + 1, [(0, i) for i in range(1, t + 1)])

def matching_graph(m: int) -> Graph:
    """The matching of m disjoint edges on 2m vertices."""
    return Graph(2 * m, [(2 * i, 2 * i + 1) for i in range(m)])

def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])

def complete_multipartite(sizes: Sequence[int]) -> Graph:
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    n = bounds[-1]
    es = []
    for c in range(len(sizes)):
        for d in range(c + 1, len(sizes)):
            es += [(i, j) for i in range(bounds[c], bounds[c + 1])
                   for j in range(bounds[d], bounds[d + 1])]
    return Graph(n, es)

def turan_class_sizes(n: int, m: int) -> list[int]:
    """Class sizes of the Turan graph T_{n,m}: the first n mod m classes get
    ceil(n/m) vertices, the rest floor(n/m).  Any two sizes differ by <= 1."""
    if m < 1 or m > n:
        raise GraphSpecError(f"Turan graph needs 1 <= m <= n, got T_{{{n},{m}}}")
    q, r = divmod(n, m)
    return [q + 1] * r + [q] * (m - r)

def turan_classes(n: int, m: int) -> list[list[int]]:
    """Vertex classes of T_{n,m} as contiguous ranges of 0..n-1."""
    out, start = [], 0
    for s in turan_class_sizes(n, m):
        out.append(list(range(start, start + s)))
        start += s
    return out

def turan_graph(n: int, m: int) -> Graph:
    return complete_multipartite(turan_class_sizes(n, m))


# ---------------------------------------------------------------------------
# Textual specifications
# ---------------------------------------------------------------------------

def parse_graph(spec: str) -> Graph:
    """Parse a graph specification.

    Accepted forms: ``K4``, ``P5``, ``C6``, ``S3`` (star K_{1,3}),
    ``M2`` (matching 2K_2), ``T7,3`` (Turan graph), ``KB2,3`` (complete
    bipartite), ``MULTI2,2,2`` (complete multipartite), disjoint unions
    joined with ``+`` (``K1+K3``), explicit edge lists (``0-1,1-2``), and
    graph6 strings (optionally prefixed ``g6:``).
    """
    spec = spec.strip()
    if not spec:
        raise GraphSpecError("empty graph specification")
    if spec.startswith("g6:"):
        return from_graph6(spec[3:])
    if "+" in spec:
        parts = spec.split("+")
        g = _parse_atom(parts[0])
        for part in parts[1:]:
            g = g.disjoint_union(_parse_atom(part))
        if g.n > MAX_VERTICES:
            raise GraphSpecError(f"union order {g.n} exceeds {MAX_VERTICES}")
        return g
    return _parse_atom(spec)


def _parse_atom(spec: str) -> Graph:
    spec = spec.strip()
    if not spec:
        raise GraphSpecError("empty graph specification")
    if "-" in spec and spec[0].isdigit():
        return _parse_edge_list(spec)
    for prefix, fn in (("MULTI", None), ("KB", None), ("K", complete_graph),
                       ("P", path_graph), ("C", cycle_graph), ("S", star_graph),
                       ("M", matching_graph), ("T", None)):
        if spec.startswith(prefix):
            body = spec[len(prefix):]
            if prefix == "MULTI":
                sizes = _parse_ints(body, spec)
                if sum(sizes) > MAX_VERTICES:
                    raise GraphSpecError(f"order {sum(sizes)} exceeds {MAX_VERTICES}")
                return complete_multipartite(sizes)
            if prefix == "KB":
                a, b = _parse_ints(body, spec, expect=2)
                return complete_bipartite(a, b)
            if prefix == "T":
                n, m = _parse_ints(body, spec, expect=2)
                return turan_graph(n, m)
            if not body.isdigit():
                continue
            k = int(body)
            order = {complete_graph: k, path_graph: k, cycle_graph: k,
                     star_graph: k + 1, matching_graph: 2 * k}[fn]
            if order > MAX_VERTICES:
                raise GraphSpecError(f"order {order} exceeds {MAX_VERTICES}")
            return fn(k)
    # graph6 fallback for anything that is not a named form or edge list
    try:
        return from_graph6(spec)
    except GraphSpecError:
        raise GraphSpecError(f"cannot parse graph specification {spec!r}") from None


def _parse_ints(body: str, spec: str, expect: Optional[int] = None) -> list[int]:
    try:
        vals = [int(x) for x in body.split(",")]
    except ValueError:
        raise GraphSpecError(f"cannot parse graph specification {spec!r}") from None
    if expect is not None and len(vals) != expect:
        raise GraphSpecError(f"{spec!r}: expected {expect} comma-separated integers")
    if any(v < 0 for v in vals):
        raise GraphSpecError(f"{spec!r}: negative size")
    return vals


def _parse_edge_list(spec: str) -> Graph:
    edges = []
    for item in spec.split(","):
        try:
            i, j = (int(x) for x in item.split("-"))
        except ValueError:
            raise GraphSpecError(f"bad edge {item!r} in {spec!r}") from None
        edges.append((min(i, j), max(i, j)))
    n = 1 + max(max(e) for e in edges)
    if n > MAX_VERTICES:
        raise GraphSpecError(f"order {n} exceeds {MAX_VERTICES}")
    return Graph(n, edges)


def to_edge_list_spec(g: Graph) -> str:
    return ",".join(f"{i}-{j}" for i, j in g.edges())


# ---------------------------------------------------------------------------
# graph6 interchange
# ---------------------------------------------------------------------------

def from_graph6(s: str) -> Graph:
    """Decode a graph6 string (orders above 12 are rejected)."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphSpecError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise GraphSpecError(f"invalid graph6 characters in {s!r}")
    if data[0] == 63:
        raise GraphSpecError("graph6 order too large")
    n, data = data[0], data[1:]
    if n > MAX_VERTICES:
        raise GraphSpecError(f"graph6 order {n} exceeds {MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) != need:
        raise GraphSpecError(f"graph6 body length {len(data)}, expected {need}")
    bits = []
    for b in data:
        bits += [(b >> k) & 1 for k in range(5, -1, -1)]
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


# ---------------------------------------------------------------------------
# Subgraph containment
# ---------------------------------------------------------------------------

def contains_subgraph(host: Graph, pattern: Graph,
                      induced: bool = False) -> Optional[tuple[int, ...]]:
    """Find an injection of pattern vertices into host vertices mapping every
    pattern edge to a host edge (and, if ``induced``, non-edges to non-edges).

    Returns the injection as a tuple indexed by pattern vertex, or None.
    """
    if pattern.n > host.n:
        return None
    # most-constrained-first: descending degree, then connectivity to placed
    order = sorted(range(pattern.n), key=lambda v: -pattern.degree(v))
    seq: list[int] = []
    for _ in range(pattern.n):
        nxt = next((v for v in order if v not in seq
                    and any(pattern.has_edge(v, u) for u in seq)), None)
        if nxt is None:
            nxt = next(v for v in order if v not in seq)
        seq.append(nxt)
    assign: dict[int, int] = {}
    used = [False] * host.n

    def extend(k: int) -> bool:
        if k == len(seq):
            return True
        pv = seq[k]
        for hv in range(host.n):
            if used[hv] or host.degree(hv) < pattern.degree(pv):
                continue
            ok = True
            for pu, hu in assign.items():
                pe = pattern.has_edge(pv, pu)
                he = host.has_edge(hv, hu)
                if (pe and not he) or (induced and not pe and he):
                    ok = False
                    break
            if ok:
                assign[pv] = hv
                used[hv] = True
                if extend(k + 1):
                    return True
                used[hv] = False
                del assign[pv]
        return False

    if extend(0):
        return tuple(assign[v] for v in range(pattern.n))
    return None


# ---------------------------------------------------------------------------
# Exact invariants
# ---------------------------------------------------------------------------

def max_clique_size(g: Graph) -> int:
    best = 0

    def grow(cand: int, size: int):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if cand == 0:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            grow(cand & g.adj[v], size + 1)

    grow((1 << g.n) - 1, 0)
    return best


def independence_number(g: Graph) -> int:
    return max_clique_size(g.complement())


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    lo = max_clique_size(g)
    order = sorted(range(g.n), key=lambda v: -g.degree(v))

    def colorable(k: int) -> bool:
        colors = [-1] * g.n

        def assign(idx: int) -> bool:
            if idx == g.n:
                return True
            v = order[idx]
            used_new = max(colors[order[i]] for i in range(idx)) if idx else -1
            for c in range(min(k - 1, used_new + 1) + 1):
                if all(colors[u] != c for u in g.neighbors(v)):
                    colors[v] = c
                    if assign(idx + 1):
                        return True
                    colors[v] = -1
            return False

        return assign(0)

    k = lo
    while not colorable(k):
        k += 1
    return k


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def girth(g: Graph) -> float:
    """Length of a shortest cycle; math.inf for acyclic graphs."""
    best = math.inf
    for i, j in g.edges():
        # shortest i-j path avoiding the edge ij closes a shortest cycle through ij
        dist = {i: 0}
        frontier = [i]
        d = 0
        while frontier and j not in dist:
            d += 1
            nxt = []
            for v in frontier:
                for u in g.neighbors(v):
                    if (v, u) in ((i, j), (j, i)):
                        continue
                    if u not in dist:
                        dist[u] = d
                        nxt.append(u)
            frontier = nxt
        if j in dist:
            best = min(best, dist[j] + 1)
    return best


def has_cycle(g: Graph) -> bool:
    return g.edge_count > g.n - len(components(g))


def invariants_of(g: Graph) -> dict:
    """All standard invariants at once, each computed exhaustively."""
    degs = g.degrees()
    return {
        "order": g.n,
        "edges": g.edge_count,
        "chi": chromatic_number(g),
        "alpha": independence_number(g),
        "girth": girth(g),
        "max_deg": max(degs, default=0),
        "min_deg": min(degs, default=0),
        "connected": is_connected(g),
        "bipartite": is_bipartite(g),
        "components": len(components(g)),
    }


def invariants_json(g: Graph) -> dict:
    """JSON form: infinite girth serialized as 0 plus an explicit flag."""
    inv = invariants_of(g)
    acyclic = inv["girth"] == math.inf
    inv["girth"] = 0 if acyclic else int(inv["girth"])
    inv["acyclic"] = acyclic
    return inv


def mu(g: Graph) -> float:
    """Smallest k such that every induced k-vertex subgraph has a cycle;
    math.inf when the graph is acyclic."""
    if not has_cycle(g):
        return math.inf
    for k in range(1, g.n + 1):
        if all(has_cycle(g.induced(s)) for s in itertools.combinations(range(g.n), k)):
            return k
    return g.n  # unreachable: the full graph has a cycle


def chi_family_info(g: Graph, family) -> tuple[int, bool]:
    """Minimum chromatic number of g minus the edges of a subgraph D lying in
    the family, over all nonempty edge subsets D (membership tested on the
    isolate-free form of D).

    Returns (value, no_removal): when no edge subset belongs to the family the
    value falls back to chi(g) and the flag is set.
    """
    es = g.edges()
    if len(es) > 22:
        raise ValueError(f"chi_family needs <= 22 edges, got {len(es)}")
    best = None
    for r in range(1, len(es) + 1):
        for subset in itertools.combinations(es, r):
            d = Graph(g.n, subset).strip_isolates()
            if not family.member(d):
                continue
            remaining = [e for e in es if e not in set(subset)]
            val = chromatic_number(Graph(g.n, remaining))
            if best is None or val < best:
                best = val
                if best == 1:
                    return best, False
    if best is None:
        return chromatic_number(g), True
    return best, False


def chi_family(g: Graph, family) -> int:
    return chi_family_info(g, family)[0]


# ---------------------------------------------------------------------------
# Canonical labeling
# ---------------------------------------------------------------------------

def _refine_classes(g: Graph) -> list[int]:
    """Iterated degree refinement; returns an isomorphism-invariant class id
    per vertex, ids ordered by class signature."""
    color = [0] * g.n
    while True:
        sigs = []
        for v in range(g.n):
            nbr = sorted(color[u] for u in g.neighbors(v))
            sigs.append((color[v], tuple(nbr)))
        ranking = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == color:
            return color
        color = new


def canonical_code(g: Graph) -> bytes:
    """Canonical byte string: equal codes iff isomorphic.

    Minimizes the packed adjacency matrix over vertex orderings compatible
    with the refined class order; ties are explored with prefix pruning, and
    homogeneous tails (all remaining vertices equivalent, inducing a complete
    or empty graph) are closed greedily.
    """
    n = g.n
    if n == 0:
        return b"\x00"
    classes = _refine_classes(g)
    # position k must host a vertex of class slot[k]
    slot = sorted(classes)
    best: Optional[list[int]] = None

    def finish(order: list[int], code: list[int], rest: list[int]):
        nonlocal best
        for v in rest:
            bits = 0
            for i, u in enumerate(order):
                if g.has_edge(v, u):
                    bits |= 1 << i
            code.append(bits)
            order.append(v)
        if best is None or code < best:
            best = list(code)

    def search(order: list[int], code: list[int], remaining: list[int]):
        nonlocal best
        k = len(order)
        if not remaining:
            if best is None or code < best:
                best = list(code)
            return
        cand = [v for v in remaining if classes[v] == slot[k]]
        level = []
        for v in cand:
            bits = 0
            for i, u in enumerate(order):
                if g.has_edge(v, u):
                    bits |= 1 << i
            level.append((bits, v))
        low = min(b for b, _ in level)
        if best is not None:
            prefix = best[:k + 1]
            if code + [low] > prefix:
                return
        ties = [v for b, v in level if b == low]
        if len(ties) == len(remaining):
            # homogeneous tail: equal bits to the placed prefix and a complete
            # or empty induced graph make all completions identical
            full = _mask(remaining)
            rows = [g.adj[v] & full for v in remaining]
            if all(r == 0 for r in rows) or all(
                    rows[i] == full & ~(1 << v) for i, v in enumerate(remaining)):
                finish(list(order), list(code), sorted(ties))
                return
        for v in ties:
            search(order + [v], code + [low], [u for u in remaining if u != v])

    search([], [], list(range(n)))
    assert best is not None
    out = bytearray([n])
    for bits in best:
        out += bits.to_bytes(2, "big")
    return bytes(out)


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_code(g) == canonical_code(h)


# ---------------------------------------------------------------------------
# Exhaustive generation
# ---------------------------------------------------------------------------

def enumerate_graphs(order: int, max_edges: Optional[int] = None,
                     predicate=None) -> list[Graph]:
    """All graphs on exactly ``order`` labeled-as-0..order-1 vertices, up to
    isomorphism (isolated vertices allowed), optionally capped by edge count
    and filtered by a predicate applied before deduplication."""
    all_edges = list(itertools.combinations(range(order), 2))
    cap = len(all_edges) if max_edges is None else min(max_edges, len(all_edges))
    seen = set()
    out = []
    for r in range(cap + 1):
        for subset in itertools.combinations(all_edges, r):
            g = Graph(order, subset)
            if predicate is not None and not predicate(g):
                continue
            code = canonical_code(g)
            if code not in seen:
                seen.add(code)
                out.append(g)
    return out


@lru_cache(maxsize=None)
def _small_graph(spec: str) -> Graph:
    return parse_graph(spec)


K2 = parse_graph("K2")
