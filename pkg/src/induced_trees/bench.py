"""Reproducible benchmark suites: seeded ensembles plus row builders.

Each suite emits one row per (instance, algorithm) with the bound the
theory requires, the bound achieved, and an in-process re-verification
verdict.  Rows are deterministic given the seed except for the wall-time
column.  The acceptance tests drive the same ensemble helpers, so the CLI
tables and the test suite exercise identical distributions.
"""

from __future__ import annotations

import logging
import math
import random
import time
from typing import Iterator, Optional

from . import finders, generators, oracle
from .admissible import WeightedBipartiteInstance, select_uniform, select_weighted, solve_exact
from .graph import Graph

log = logging.getLogger(__name__)

SUITES = ("triangle-free", "kr-free", "admissible", "claim")

ROW_FIELDS = (
    "suite",
    "instance",
    "algorithm",
    "n",
    "r",
    "relation",
    "bound_required",
    "bound_achieved",
    "verified",
    "wall_time_ms",
)


def triangle_free_ensemble(seed: int, count: int = 500) -> Iterator[tuple[str, Graph]]:
    """Seeded connected triangle-free graphs, n in [2, 60]."""
    rng = random.Random(seed)
    for idx in range(count):
        n = rng.randint(2, 60)
        p = rng.uniform(0.0, 0.3)
        yield f"random-triangle-free[{idx}](n={n})", generators.random_triangle_free(
            n, p, rng.randrange(2 ** 32)
        )


def kr_free_ensemble(seed: int, r: int, count: int = 200) -> Iterator[tuple[str, Graph]]:
    """Seeded connected K_r-free graphs, n <= 200 (sparser as n grows so
    clique repair stays cheap)."""
    rng = random.Random(seed)
    for idx in range(count):
        n = rng.randint(5, 200)
        p = rng.uniform(0.0, min(1.0, 10.0 / n))
        yield f"random-kr-free[{idx}](n={n},r={r})", generators.random_kr_free(
            n, r, p, rng.randrange(2 ** 32)
        )


def connected_ensemble(seed: int, count: int = 200, n_max: int = 14) -> Iterator[tuple[str, Graph]]:
    """Seeded connected graphs with no clique constraint (clique threshold
    above n disables deletion)."""
    rng = random.Random(seed)
    for idx in range(count):
        n = rng.randint(2, n_max)
        p = rng.uniform(0.1, 0.9)
        yield f"random-connected[{idx}](n={n})", generators.random_kr_free(
            n, n + 1, p, rng.randrange(2 ** 32)
        )


def instance_ensemble(
    seed: int, count: int, max_a: int = 10, max_b: int = 20
) -> Iterator[tuple[str, WeightedBipartiteInstance]]:
    """Seeded weighted bipartite instances with uniform [0,1] weights."""
    rng = random.Random(seed)
    for idx in range(count):
        a = rng.randint(1, max_a)
        items = []
        for _ in range(rng.randint(1, max_b)):
            degree = rng.randint(1, a)
            items.append((rng.uniform(0.0, 1.0), rng.sample(range(a), degree)))
        yield f"random-instance[{idx}](a={a},b={len(items)})", WeightedBipartiteInstance(a, items)


def _sample_roots(n: int) -> list[int]:
    return sorted({0, n // 2, n - 1})


def _row(suite, instance, algorithm, n, r, required, achieved, verified, started,
         relation: str = ">=") -> dict:
    return {
        "suite": suite,
        "instance": instance,
        "algorithm": algorithm,
        "n": n,
        "r": r,
        "relation": relation,
        "bound_required": required,
        "bound_achieved": achieved,
        "verified": verified,
        "wall_time_ms": int((time.monotonic() - started) * 1000),
    }


def _finder_row(suite, name, g, r, roots=None) -> dict:
    """One row aggregating a finder over its roots: achieved = worst size,
    verified = every certificate valid and at least the required bound."""
    started = time.monotonic()
    if r == 3:
        required = math.sqrt(g.n)
        find = lambda v: finders.find_tree_triangle_free(g, v)
        algorithm = "find-tree-triangle-free"
    else:
        required = math.log(g.n) / (4.0 * math.log(r)) if g.n >= 2 else 0.0
        find = lambda v: finders.find_tree_kr_free(g, v, r)
        algorithm = "find-tree-kr-free"
    roots = roots if roots is not None else _sample_roots(g.n)
    worst = None
    ok = True
    for v in roots:
        cert = find(v)
        if not finders.verify_certificate(g, cert):
            ok = False
        if cert.size < required - finders.BOUND_EPS:
            ok = False
        worst = cert.size if worst is None else min(worst, cert.size)
    return _row(suite, name, algorithm, g.n, r, required, worst, ok, started)


def suite_triangle_free(seed: int, count: Optional[int] = None) -> list[dict]:
    """Extremal family at every root, oracle upper bounds on the small
    members, and the random ensemble at three roots per graph."""
    rows = []
    for m in range(3, 31):
        g = generators.ms_layered(m)
        rows.append(
            _finder_row("triangle-free", f"ms-layered(m={m})", g, 3, roots=range(g.n))
        )
    for m in range(2, 6):
        g = generators.ms_layered(m)
        started = time.monotonic()
        size, _ = oracle.max_induced_tree_exact(
            g, oracle.OracleBudget(max_vertices=25, time_limit=120.0)
        )
        rows.append(
            _row(
                "triangle-free",
                f"ms-layered(m={m})",
                "oracle-max-tree<=2m-1",
                g.n,
                3,
                float(2 * m - 1),
                size,
                size <= 2 * m - 1,
                started,
                relation="<=",
            )
        )
    n_graphs = count if count is not None else 500
    for name, g in triangle_free_ensemble(seed, n_graphs):
        row = _finder_row("triangle-free", name, g, 3)
        row["verified"] = row["verified"] and row["bound_achieved"] >= math.ceil(math.sqrt(g.n))
        rows.append(row)
    return rows


def suite_kr_free(seed: int, count: Optional[int] = None) -> list[dict]:
    rows = []
    for r in (4, 5):
        for depth in (2, 3, 4):
            g = generators.line_graph_balanced_tree(r, depth)
            rows.append(
                _finder_row("kr-free", f"line-graph-tree(r={r},depth={depth})", g, r)
            )
        n_graphs = count if count is not None else 200
        for name, g in kr_free_ensemble(seed + r, r, n_graphs):
            rows.append(_finder_row("kr-free", name, g, r))
    return rows


def suite_admissible(seed: int, count: Optional[int] = None) -> list[dict]:
    rows = []
    n_weighted = count if count is not None else 1000
    naive_every = max(1, n_weighted // 200)
    budget = oracle.OracleBudget(max_a_side=12)
    for idx, (name, inst) in enumerate(instance_ensemble(seed, n_weighted)):
        started = time.monotonic()
        total = inst.total_weight()
        target = math.sqrt(total)
        exact = solve_exact(inst, alpha=0.5)
        constructive = select_weighted(inst)
        ok = (
            exact.value >= target - 1e-9
            and constructive.value >= target - 1e-9
        )
        if inst.a_count <= 12 and idx % naive_every == 0:
            naive = oracle.admissible_naive(inst, alpha=0.5, budget=budget)
            ok = ok and math.isclose(naive.value, exact.value, rel_tol=1e-12, abs_tol=1e-12)
        uniform = select_uniform(inst)
        need = math.isqrt(inst.b_count)
        if need * need < inst.b_count:
            need += 1
        ok = ok and len(uniform.b_chosen) >= need
        rows.append(
            _row("admissible", name, "weighted-selection>=sqrt-total", inst.b_count, None,
                 target, exact.value, ok, started)
        )
    for k in (1, 2, 3):
        inst = generators.dyadic_bipartite(k)
        started = time.monotonic()
        best = solve_exact(inst, alpha=1.0)
        rows.append(
            _row("admissible", f"dyadic(k={k})", "exact-max-below-2m", inst.b_count, None,
                 float(2 ** (k + 1)), best.value, best.value < 2 ** (k + 1), started,
                 relation="<=")
        )
    inst = generators.alpha_counterexample(50)
    started = time.monotonic()
    best = solve_exact(inst, alpha=0.6, limit=64)
    rows.append(
        _row("admissible", "alpha-counterexample(t=50)", "exact-max-below-1(alpha=0.6)",
             inst.b_count, None, 1.0, best.value, best.value < 1.0, started,
             relation="<=")
    )
    return rows


def suite_claim(seed: int, count: Optional[int] = None) -> list[dict]:
    rows = []
    n_graphs = count if count is not None else 200
    budget = oracle.OracleBudget(max_vertices=14, time_limit=120.0)
    for name, g in connected_ensemble(seed, n_graphs):
        started = time.monotonic()
        size, witness = oracle.max_induced_tree_exact(g, budget)
        base = finders.TreeCertificate(witness, min(witness), float(size), "oracle")
        required = 1.0 + size / 2.0
        worst = None
        ok = True
        for v in range(g.n):
            cert = finders.reroute_through_vertex(g, base, v)
            if not finders.verify_certificate(g, cert) or v not in cert.vertices:
                ok = False
            if cert.size < required - finders.BOUND_EPS:
                ok = False
            worst = cert.size if worst is None else min(worst, cert.size)
        rows.append(
            _row("claim", name, "reroute>=1+half-max-tree", g.n, None, required, worst, ok, started)
        )
    return rows


def run_suite(suite: str, seed: int, count: Optional[int] = None) -> list[dict]:
    runners = {
        "triangle-free": suite_triangle_free,
        "kr-free": suite_kr_free,
        "admissible": suite_admissible,
        "claim": suite_claim,
    }
    if suite not in runners:
        raise ValueError(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")
    started = time.monotonic()
    rows = runners[suite](seed, count)
    log.info("suite %s: %d rows in %.1fs", suite, len(rows), time.monotonic() - started)
    return rows


def summarize(rows: list[dict]) -> dict:
    slacks = []
    for row in rows:
        if row["bound_achieved"] is None or row["bound_required"] is None:
            continue
        diff = row["bound_achieved"] - row["bound_required"]
        slacks.append(diff if row["relation"] == ">=" else -diff)
    return {
        "rows": len(rows),
        "all_verified": all(row["verified"] for row in rows),
        "min_slack": min(slacks) if slacks else None,
    }
