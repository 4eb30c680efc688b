"""Graph families: membership predicates, the family expression language,
complementation, and the edge-count sequence utilities.

A family tests membership of the *isolate-free form* of a graph; the empty
graph is never a member.  Families carry three metadata flags:
``contains_k2`` (always exact, it decides which of the two threshold
functions is defined), and ``hereditary`` / ``upward_closed``, which are
declared by the constructors (True/False/None for unknown) and spot-checked
by tests rather than inferred.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Optional

from .graphs import (Graph, GraphSpecError, canonical_code, contains_subgraph,
                     is_connected, parse_graph)

K2 = parse_graph("K2")


class FamilyExprError(ValueError):
    """Raised when a family expression cannot be parsed."""


class GraphFamily:
    """A membership predicate over isolate-free graphs plus metadata flags."""

    def __init__(self, name: str, predicate: Callable[[Graph], bool],
                 hereditary: Optional[bool] = None,
                 upward_closed: Optional[bool] = None):
        self.name = name
        self._predicate = predicate
        self.hereditary = hereditary
        self.upward_closed = upward_closed
        self.contains_k2 = bool(predicate(K2))
        self._cache: dict[bytes, bool] = {}

    def member(self, g: Graph) -> bool:
        stripped = g.strip_isolates()
        if stripped.n == 0:
            return False
        code = canonical_code(stripped)
        hit = self._cache.get(code)
        if hit is None:
            hit = bool(self._predicate(stripped))
            self._cache[code] = hit
        return hit

    def __contains__(self, g: Graph) -> bool:
        return self.member(g)

    def __repr__(self) -> str:
        return f"GraphFamily({self.name!r})"

    def flags_dict(self) -> dict:
        return {
            "name": self.name,
            "contains_k2": self.contains_k2,
            "hereditary": self.hereditary,
            "upward_closed": self.upward_closed,
        }


def member(family: GraphFamily, g: Graph) -> bool:
    return family.member(g)


def complement_family(family: GraphFamily) -> GraphFamily:
    """Complement within the universe of nonempty isolate-free graphs.

    Heredity and upward closure swap under complementation (when known):
    removing a hereditary family from the universe leaves an upward-closed
    one, and vice versa.
    """
    name = family.name[3:] if family.name.startswith("co:") else f"co:{family.name}"
    out = GraphFamily(
        name,
        lambda g: not family.member(g),
        hereditary=family.upward_closed,
        upward_closed=family.hereditary,
    )
    return out


# ---------------------------------------------------------------------------
# Edge-count sequences
# ---------------------------------------------------------------------------

class EdgeCountSequence:
    """A decidable set of positive integers used to form edge-count families."""

    def __init__(self, name: str, contains: Callable[[int], bool]):
        self.name = name
        self._contains = contains

    def __contains__(self, k: int) -> bool:
        return k >= 1 and self._contains(k)

    def first(self, count: int, limit: int = 100000) -> list[int]:
        out = []
        k = 1
        while len(out) < count and k <= limit:
            if k in self:
                out.append(k)
            k += 1
        return out


SQUARES = EdgeCountSequence("squares", lambda k: math.isqrt(k) ** 2 == k)


def residue_sequence(r: int, k: int) -> EdgeCountSequence:
    if k < 1:
        raise FamilyExprError(f"modulus must be positive, got {k}")
    return EdgeCountSequence(f"mod,{r},{k}", lambda m: m % k == r % k)


def is_legal(s) -> bool:
    """A sequence is legal when it contains 1 and avoids 2."""
    return 1 in s and 2 not in s


def is_s_good(p: int, s) -> bool:
    """p >= 5 is S-good when some t with p >= t >= ceil((p+1)/2) has C(t,2) in S."""
    if p < 5:
        raise ValueError(f"S-goodness is defined for p >= 5, got {p}")
    lo = (p + 2) // 2  # ceil((p+1)/2)
    return any(t * (t - 1) // 2 in s for t in range(lo, p + 1))


def sparsest_well_spaced(i: int) -> int:
    """i-th element of the sparsest well-spaced sequence of triangular
    numbers: 1, then C(5*2^(i-2), 2) for i >= 2 (1, 10, 45, 190, ...)."""
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    if i == 1:
        return 1
    t = 5 * 2 ** (i - 2)
    return t * (t - 1) // 2


# ---------------------------------------------------------------------------
# Built-in constructors
# ---------------------------------------------------------------------------

def family_all() -> GraphFamily:
    return GraphFamily("all", lambda g: True, hereditary=True, upward_closed=True)


def family_k2() -> GraphFamily:
    return GraphFamily("k2", lambda g: g.n == 2 and g.edge_count == 1,
                       hereditary=True, upward_closed=False)


def family_up(h: Graph, spec: str) -> GraphFamily:
    core = h.strip_isolates()
    if core.n == 0:
        raise FamilyExprError(f"up:{spec}: pattern has no edges")
    is_k2 = core.n == 2
    return GraphFamily(f"up:{spec}",
                       lambda g: contains_subgraph(g, core) is not None,
                       hereditary=True if is_k2 else False,
                       upward_closed=True)


def family_not(h: Graph, spec: str) -> GraphFamily:
    core = h.strip_isolates()
    if core.n == 0:
        raise FamilyExprError(f"not:{spec}: pattern has no edges")
    code = canonical_code(core)
    is_k2 = core.n == 2
    return GraphFamily(f"not:{spec}",
                       lambda g: canonical_code(g) != code,
                       hereditary=False,
                       upward_closed=True if is_k2 else False)


def family_free(h: Graph, spec: str) -> GraphFamily:
    core = h.strip_isolates()
    if core.n == 0:
        raise FamilyExprError(f"free:{spec}: pattern has no edges")
    return GraphFamily(f"free:{spec}",
                       lambda g: contains_subgraph(g, core) is None,
                       hereditary=True, upward_closed=False)


def family_noind(h: Graph, spec: str) -> GraphFamily:
    core = h.strip_isolates()
    if core.n == 0:
        raise FamilyExprError(f"noind:{spec}: pattern has no edges")
    return GraphFamily(f"noind:{spec}",
                       lambda g: contains_subgraph(g, core, induced=True) is None,
                       hereditary=False, upward_closed=False)


def _is_matching(g: Graph) -> bool:
    return all(d == 1 for d in g.degrees())


def family_matchings(max_size: Optional[int] = None) -> GraphFamily:
    if max_size is None:
        return GraphFamily("matchings", _is_matching,
                           hereditary=True, upward_closed=False)
    return GraphFamily(f"matchings<={max_size}",
                       lambda g: _is_matching(g) and g.edge_count <= max_size,
                       hereditary=True, upward_closed=False)


def family_regular() -> GraphFamily:
    return GraphFamily("regular", lambda g: len(set(g.degrees())) == 1,
                       hereditary=False, upward_closed=False)


def family_maxdeg(d: int) -> GraphFamily:
    return GraphFamily(f"maxdeg<={d}", lambda g: max(g.degrees()) <= d,
                       hereditary=True, upward_closed=False)


def family_order(k: int) -> GraphFamily:
    return GraphFamily(f"order<={k}", lambda g: g.n <= k,
                       hereditary=True, upward_closed=False)


def family_connected() -> GraphFamily:
    return GraphFamily("connected", is_connected,
                       hereditary=False, upward_closed=False)


def family_disconnected() -> GraphFamily:
    return GraphFamily("disconnected", lambda g: not is_connected(g),
                       hereditary=False, upward_closed=False)


def family_edges(seq: EdgeCountSequence) -> GraphFamily:
    return GraphFamily(f"edges:{seq.name}", lambda g: g.edge_count in seq,
                       hereditary=False, upward_closed=False)


def family_union(parts: list[GraphFamily]) -> GraphFamily:
    def tri_all(flags):
        if all(f is True for f in flags):
            return True
        return None

    return GraphFamily(
        " + ".join(p.name for p in parts),
        lambda g: any(p.member(g) for p in parts),
        hereditary=tri_all([p.hereditary for p in parts]),
        upward_closed=tri_all([p.upward_closed for p in parts]),
    )


# ---------------------------------------------------------------------------
# Expression parser
# ---------------------------------------------------------------------------

def parse_family(expr: str) -> GraphFamily:
    """Parse a family expression.

    Grammar: ``all``, ``k2``, ``up:<graph>``, ``not:<graph>``,
    ``free:<graph>``, ``noind:<graph>``, ``matchings``, ``matchings<=r``,
    ``regular``, ``maxdeg<=d``, ``order<=k``, ``connected``,
    ``disconnected``, ``edges:squares``, ``edges:mod,r,k``,
    ``edges:set,{a,b,...}``, unions joined with ``+`` (binding loosest),
    and ``co:<expr>`` for the complement within the universe.
    """
    expr = expr.strip()
    if not expr:
        raise FamilyExprError("empty family expression")
    if expr.startswith("co:"):
        return complement_family(parse_family(expr[3:]))
    parts = _split_union(expr)
    if len(parts) > 1:
        return family_union([parse_family(p) for p in parts])
    return _parse_atom(expr)


def _split_union(expr: str) -> list[str]:
    # '+' also appears inside graph specs (disjoint unions); a family-level
    # '+' is one whose right side starts a new family atom
    atoms = ("all", "k2", "up:", "not:", "free:", "noind:", "matchings",
             "regular", "maxdeg<=", "order<=", "connected", "disconnected",
             "edges:", "co:")
    parts = []
    current = []
    for chunk in expr.split("+"):
        stripped = chunk.strip()
        if current and any(stripped.startswith(a) for a in atoms):
            parts.append("+".join(current))
            current = [chunk]
        else:
            current.append(chunk)
    parts.append("+".join(current))
    return [p.strip() for p in parts]


def _parse_atom(expr: str) -> GraphFamily:
    expr = expr.strip()
    if expr == "all":
        return family_all()
    if expr == "k2":
        return family_k2()
    if expr == "matchings":
        return family_matchings()
    if expr.startswith("matchings<="):
        return family_matchings(_int_tail(expr, "matchings<="))
    if expr == "regular":
        return family_regular()
    if expr.startswith("maxdeg<="):
        return family_maxdeg(_int_tail(expr, "maxdeg<="))
    if expr.startswith("order<="):
        return family_order(_int_tail(expr, "order<="))
    if expr == "connected":
        return family_connected()
    if expr == "disconnected":
        return family_disconnected()
    if expr.startswith("edges:"):
        return family_edges(_parse_sequence(expr[len("edges:"):]))
    for prefix, fn in (("up:", family_up), ("not:", family_not),
                       ("free:", family_free), ("noind:", family_noind)):
        if expr.startswith(prefix):
            spec = expr[len(prefix):]
            try:
                h = parse_graph(spec)
            except GraphSpecError as e:
                raise FamilyExprError(f"{expr!r}: {e}") from None
            return fn(h, spec)
    raise FamilyExprError(f"cannot parse family expression {expr!r}")


def _int_tail(expr: str, prefix: str) -> int:
    tail = expr[len(prefix):]
    if not tail.isdigit():
        raise FamilyExprError(f"{expr!r}: expected an integer after {prefix!r}")
    return int(tail)


def _parse_sequence(body: str) -> EdgeCountSequence:
    if body == "squares":
        return SQUARES
    if body.startswith("mod,"):
        try:
            r, k = (int(x) for x in body[len("mod,"):].split(","))
        except ValueError:
            raise FamilyExprError(f"edges:{body!r}: expected mod,r,k") from None
        return residue_sequence(r, k)
    if body.startswith("set,"):
        inner = body[len("set,"):].strip()
        if inner.startswith("{") and inner.endswith("}"):
            inner = inner[1:-1]
        try:
            values = frozenset(int(x) for x in inner.split(",") if x.strip())
        except ValueError:
            raise FamilyExprError(f"edges:{body!r}: bad integer set") from None
        if not values:
            raise FamilyExprError(f"edges:{body!r}: empty set")
        name = "set,{" + ",".join(str(v) for v in sorted(values)) + "}"
        return EdgeCountSequence(name, lambda m: m in values)
    raise FamilyExprError(f"unknown edge-count sequence {body!r}")
