"""Command-line surface: exact searches, construction verification, packing
queries, and the acceptance suite.  JSON output is the stable contract;
tables are for reading."""

from __future__ import annotations

import json
import multiprocessing
import sys
from typing import Optional

import click

from .cache import ResultCache, cache_key
from .colorings import build_pattern, PatternParams
from .families import FamilyExprError, parse_family
from .graphs import Graph, GraphSpecError, canonical_code, parse_graph
from .packing import enumerate_minimal, min_overlap, pack
from .search import (Budget, SearchResult, ar_exact, ex_exact, f_exact,
                     g_exact, lr_exact, verify_construction)
from .suite import run_suite, suite_passed

SCHEMA = 1


class CliError(click.ClickException):
    """Validation failure carrying a machine-readable error object."""

    def __init__(self, message: str, code: str = "invalid-argument"):
        super().__init__(message)
        self.code = code

    def show(self, file=None):
        payload = {"schema": SCHEMA, "error": {"code": self.code,
                                               "message": self.message}}
        click.echo(json.dumps(payload), err=True)


def _parse_n_range(text: str) -> list[int]:
    try:
        if "-" in text:
            lo, hi = (int(x) for x in text.split("-"))
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise CliError(f"--n expects an integer or a range like 4-6, got {text!r}")


def _graph(spec: str) -> Graph:
    try:
        return parse_graph(spec)
    except GraphSpecError as exc:
        raise CliError(str(exc), code="graph-parse-error")


def _family(expr: str):
    try:
        return parse_family(expr)
    except FamilyExprError as exc:
        raise CliError(str(exc), code="family-parse-error")


def _budget(nodes: Optional[int], secs: Optional[float]) -> Budget:
    b = Budget()
    return Budget(max_nodes=nodes if nodes is not None else b.max_nodes,
                  max_seconds=secs if secs is not None else b.max_seconds)


def _emit(payloads: list[dict], fmt: str):
    if fmt == "json":
        out = payloads[0] if len(payloads) == 1 else payloads
        click.echo(json.dumps(out, indent=2, sort_keys=True))
        return
    cols = ["kind", "n", "target", "family", "value", "status"]
    widths = {c: len(c) for c in cols}
    rows = []
    for p in payloads:
        row = {
            "kind": p.get("kind", ""),
            "n": str(p.get("n", "")),
            "target": p.get("target_spec") or "",
            "family": p.get("family_expr") or "",
            "value": str(p.get("value", "")),
            "status": p.get("status", ""),
        }
        rows.append(row)
        for c in cols:
            widths[c] = max(widths[c], len(row[c]))
    header = "  ".join(c.ljust(widths[c]) for c in cols)
    click.echo(header)
    click.echo("-" * len(header))
    for row in rows:
        click.echo("  ".join(row[c].ljust(widths[c]) for c in cols))


def _run_search_job(job: dict) -> dict:
    """One search, described entirely by plain values (multiprocessing-safe)."""
    kind = job["kind"]
    n = job["n"]
    budget = Budget(max_nodes=job["max_nodes"], max_seconds=job["max_seconds"])
    cache = ResultCache(job["cache_dir"], enabled=job["cache"])
    target = parse_graph(job["target"]) if job.get("target") else None
    family = parse_family(job["family"]) if job.get("family") else None

    if kind == "ex":
        forbidden = [parse_graph(s) for s in job["forbidden"]]
        key = cache_key("ex", n, None, None,
                        {"forbidden": sorted(canonical_code(p).hex()
                                             for p in forbidden)})
    else:
        key = cache_key(kind, n, canonical_code(target).hex(),
                        family.name if family else None)
    hit = cache.load(key)
    if hit is not None:
        hit["stats"] = {**hit.get("stats", {}), "cached": True}
        hit["target_spec"] = job.get("target")
        hit["family_expr"] = job.get("family")
        return hit

    if kind == "f":
        result = f_exact(n, target, family, budget)
    elif kind == "g":
        result = g_exact(n, target, family, budget)
    elif kind == "ar":
        result = ar_exact(n, target, budget)
    elif kind == "lr":
        result = lr_exact(n, target, budget)
    elif kind == "ex":
        result = ex_exact(n, forbidden, budget)
    else:  # pragma: no cover
        raise ValueError(kind)
    payload = result.to_json_dict()
    payload["target_spec"] = job.get("target")
    payload["family_expr"] = job.get("family")
    if result.status == "exact":
        cache.store(key, payload)
    payload["stats"] = {**payload.get("stats", {}), "cached": False}
    return payload


def _dispatch_jobs(jobs: list[dict], n_jobs: int) -> list[dict]:
    if n_jobs <= 1 or len(jobs) <= 1:
        return [_run_search_job(j) for j in jobs]
    with multiprocessing.Pool(min(n_jobs, len(jobs))) as pool:
        return list(pool.imap(_run_search_job, jobs))


def _search_options(fn):
    fn = click.option("--budget-nodes", type=int, default=None,
                      help="node limit for the search tree")(fn)
    fn = click.option("--budget-secs", type=float, default=None,
                      help="wall-clock limit in seconds")(fn)
    fn = click.option("--jobs", type=int, default=1,
                      help="parallel workers for an --n range")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(["json", "table"]),
                      default="json")(fn)
    fn = click.option("--no-cache", is_flag=True, help="bypass the result cache")(fn)
    fn = click.option("--cache-dir", type=click.Path(), default=None,
                      help="cache directory (env ARLAB_CACHE_DIR)")(fn)
    return fn


@click.group()
def main():
    """Exact anti-Ramsey decomposition and piercing computations on small
    complete hosts."""


def _search_command(kind: str, n: str, target: Optional[str], family: Optional[str],
                    forbidden: tuple[str, ...], budget_nodes, budget_secs,
                    jobs, fmt, no_cache, cache_dir):
    ns = _parse_n_range(n)
    if target:
        _graph(target)
    if family:
        fam = _family(family)
        if kind == "f" and not fam.contains_k2:
            raise CliError(f"f needs a family containing the single edge; "
                           f"{family!r} does not", code="family-contract")
        if kind == "g" and fam.contains_k2:
            raise CliError(f"g needs a family without the single edge; "
                           f"{family!r} contains it", code="family-contract")
    for spec in forbidden:
        _graph(spec)
    b = _budget(budget_nodes, budget_secs)
    base = {"kind": kind, "target": target, "family": family,
            "forbidden": list(forbidden), "max_nodes": b.max_nodes,
            "max_seconds": b.max_seconds, "cache": not no_cache,
            "cache_dir": cache_dir}
    payloads = _dispatch_jobs([{**base, "n": nn} for nn in ns], jobs)
    _emit(payloads, fmt)


@main.command()
@click.option("--n", required=True, help="host order or range (e.g. 5 or 4-6)")
@click.option("--target", required=True, help="graph specification")
@click.option("--family", required=True, help="family expression containing K2")
@_search_options
def f(n, target, family, budget_nodes, budget_secs, jobs, fmt, no_cache, cache_dir):
    """Decomposition threshold f(n, target | family)."""
    _search_command("f", n, target, family, (), budget_nodes, budget_secs,
                    jobs, fmt, no_cache, cache_dir)


@main.command()
@click.option("--n", required=True)
@click.option("--target", required=True)
@click.option("--family", required=True, help="family expression without K2")
@_search_options
def g(n, target, family, budget_nodes, budget_secs, jobs, fmt, no_cache, cache_dir):
    """Piercing number g(n, target | family)."""
    _search_command("g", n, target, family, (), budget_nodes, budget_secs,
                    jobs, fmt, no_cache, cache_dir)


@main.command()
@click.option("--n", required=True)
@click.option("--target", required=True)
@_search_options
def ar(n, target, budget_nodes, budget_secs, jobs, fmt, no_cache, cache_dir):
    """Anti-Ramsey number Ar(n, target)."""
    _search_command("ar", n, target, None, (), budget_nodes, budget_secs,
                    jobs, fmt, no_cache, cache_dir)


@main.command()
@click.option("--n", required=True)
@click.option("--target", required=True)
@_search_options
def lr(n, target, budget_nodes, budget_secs, jobs, fmt, no_cache, cache_dir):
    """Local anti-Ramsey number Lr(n, target)."""
    _search_command("lr", n, target, None, (), budget_nodes, budget_secs,
                    jobs, fmt, no_cache, cache_dir)


@main.command()
@click.option("--n", required=True)
@click.option("--forbid", "forbidden", multiple=True, required=True,
              help="forbidden subgraph (repeatable)")
@_search_options
def ex(n, forbidden, budget_nodes, budget_secs, jobs, fmt, no_cache, cache_dir):
    """Turan number: maximum edges avoiding every forbidden subgraph."""
    _search_command("ex", n, None, None, forbidden, budget_nodes, budget_secs,
                    jobs, fmt, no_cache, cache_dir)


@main.command()
@click.option("--pattern", "pattern_name", required=True,
              type=click.Choice(["MONO", "RAINBOW", "LEX", "RTEM", "RTDM",
                                 "RTEL", "RTDL"], case_sensitive=False))
@click.option("--n", required=True, type=int)
@click.option("--m", type=int, default=None, help="Turan parts for RT* patterns")
@click.option("--mode", required=True, type=click.Choice(["f_bad", "g_valid"]))
@click.option("--target", required=True)
@click.option("--family", required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "table"]),
              default="json")
def verify(pattern_name, n, m, mode, target, family, fmt):
    """Check a pattern coloring as an f lower-bound or g certificate."""
    try:
        coloring = build_pattern(PatternParams(pattern_name.upper(), n, m))
    except ValueError as exc:
        raise CliError(str(exc), code="pattern-error")
    fam = _family(family)
    tgt = _graph(target)
    try:
        report = verify_construction(coloring, mode, tgt, fam)
    except ValueError as exc:
        raise CliError(str(exc), code="family-contract")
    payload = {"schema": SCHEMA, "pattern": pattern_name.upper(), "n": n,
               "m": m, "target_spec": target, "family_expr": family,
               **report.to_json_dict()}
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        click.echo(f"{pattern_name.upper()}({n},{m}) {mode}: "
                   f"{'verified' if report.ok else 'FAILED'} "
                   f"colors={report.colors} {report.implied or ''}")
    if not report.ok:
        sys.exit(1)


@main.command("pack")
@click.option("--g1", required=True)
@click.option("--g2", required=True)
@click.option("--p", required=True, type=int)
@click.option("--format", "fmt", type=click.Choice(["json", "table"]),
              default="json")
def pack_cmd(g1, g2, p, fmt):
    """Edge-disjoint placement of two graphs in the complete host."""
    a, b = _graph(g1), _graph(g2)
    if max(a.n, b.n) > p:
        raise CliError(f"graphs of order {a.n}, {b.n} do not fit in K_{p}")
    witness = pack(a.padded(p), b.padded(p), p)
    payload = {"schema": SCHEMA, "g1": g1, "g2": g2, "p": p,
               "packs": witness is not None,
               "placement1": list(witness.map1) if witness else None,
               "placement2": list(witness.map2) if witness else None}
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        click.echo(f"pack({g1}, {g2}, K_{p}): "
                   f"{'yes' if witness else 'no'}")


@main.command()
@click.option("--h", "h_spec", required=True, help="the overlapping graph")
@click.option("--g", "g_spec", required=True, help="the placed target")
@click.option("--p", required=True, type=int)
@click.option("--format", "fmt", type=click.Choice(["json", "table"]),
              default="json")
def overlap(h_spec, g_spec, p, fmt):
    """Minimum edge overlap of two graphs over all placements in K_p."""
    h, g = _graph(h_spec), _graph(g_spec)
    if max(h.n, g.n) > p:
        raise CliError(f"graphs of order {h.n}, {g.n} do not fit in K_{p}")
    try:
        report = min_overlap(h, g, p)
    except ValueError as exc:
        raise CliError(str(exc), code="search-too-large")
    payload = {"schema": SCHEMA, "h": h_spec, "g": g_spec,
               **report.to_json_dict(),
               "is_blocker": report.min_overlap >= 2,
               "is_anti_packer": report.min_overlap >= 1}
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        click.echo(f"min overlap of {h_spec} with {g_spec} in K_{p}: "
                   f"{report.min_overlap}")


@main.command()
@click.option("--kind", type=click.Choice(["blocker", "anti-packer"]),
              default="blocker")
@click.option("--target", required=True, help="the blocked graph")
@click.option("--p", required=True, type=int)
@click.option("--max-edges", required=True, type=int)
@click.option("--format", "fmt", type=click.Choice(["json", "table"]),
              default="json")
def blockers(kind, target, p, max_edges, fmt):
    """Enumerate minimal blockers or anti-packers up to isomorphism."""
    tgt = _graph(target)
    try:
        res = enumerate_minimal(kind, tgt, p, max_edges)
    except ValueError as exc:
        raise CliError(str(exc), code="enumeration-error")
    payload = {"schema": SCHEMA, "kind": kind, "target_spec": target, "p": p,
               "max_edges": max_edges, "complete": res.complete,
               "graphs": [g.to_json_dict() for g in res.graphs]}
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        click.echo(f"minimal {kind}s of {target} in K_{p} "
                   f"(<= {max_edges} edges): {len(res.graphs)}")
        for g in res.graphs:
            click.echo(f"  {g.n} vertices: {g.edges()}")


@main.command()
@click.option("--level", type=click.Choice(["fast", "full"]), default="fast")
@click.option("--format", "fmt", type=click.Choice(["json", "table"]),
              default="table")
def suite(level, fmt):
    """Run the acceptance suite; exits nonzero on any failure."""
    outcomes = run_suite(level)
    if fmt == "json":
        click.echo(json.dumps({"schema": SCHEMA, "level": level,
                               "claims": [o.to_json_dict() for o in outcomes],
                               "passed": suite_passed(outcomes)},
                              indent=2, sort_keys=True))
    else:
        for o in outcomes:
            mark = {"pass": "PASS", "fail": "FAIL", "error": "ERR ",
                    "skipped": "SKIP"}[o.status]
            click.echo(f"[{mark}] {o.id:<28} {o.seconds:7.2f}s  {o.statement}")
            if o.status in ("fail", "error"):
                click.echo(f"       expected: {o.expected!r}")
                click.echo(f"       computed: {o.computed!r}")
    if not suite_passed(outcomes):
        sys.exit(1)


if __name__ == "__main__":
    main()
