"""Constructive clique-or-independent-set extraction.

The classical recursion behind the bound "C(a+b-2, a-1) vertices force a
clique of size a or an independent set of size b": pick the smallest
vertex, recurse into its neighborhood when that is large enough for the
(a-1, b) subproblem, into its non-neighborhood otherwise.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

from .graph import Graph

CLIQUE = "clique"
INDEPENDENT = "independent"


class RamseyPreconditionError(ValueError):
    """Input graph is below the vertex count the recursion requires."""


class CliqueAssertionError(RuntimeError):
    """A caller asserted clique-freeness, but a clique was found.

    Carries the clique as a counterexample certificate.
    """

    def __init__(self, clique: frozenset[int]):
        super().__init__(f"clique-freeness assertion violated by clique {sorted(clique)}")
        self.clique = clique


class CliqueOrIndependent(NamedTuple):
    kind: str
    members: frozenset[int]


def binomial_threshold(a: int, b: int) -> int:
    """C(a+b-2, a-1): vertices guaranteeing a size-a clique or size-b
    independent set.  Exact (arbitrary precision)."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be >= 1")
    return math.comb(a + b - 2, a - 1)


def _extract(g: Graph, allowed: Sequence[int], a: int, b: int) -> CliqueOrIndependent:
    v = allowed[0]
    if a == 1:
        return CliqueOrIndependent(CLIQUE, frozenset({v}))
    if b == 1:
        return CliqueOrIndependent(INDEPENDENT, frozenset({v}))
    nv = g.neighbors(v)
    inside = tuple(u for u in allowed if u in nv)
    if len(inside) >= binomial_threshold(a - 1, b):
        res = _extract(g, inside, a - 1, b)
        if res.kind == CLIQUE:
            return CliqueOrIndependent(CLIQUE, res.members | {v})
        return res
    outside = tuple(u for u in allowed if u != v and u not in nv)
    assert len(outside) >= binomial_threshold(a, b - 1)
    res = _extract(g, outside, a, b - 1)
    if res.kind == INDEPENDENT:
        return CliqueOrIndependent(INDEPENDENT, res.members | {v})
    return res


def clique_or_independent(g: Graph, a: int, b: int) -> CliqueOrIndependent:
    """A clique of size >= a or an independent set of size >= b.

    Requires |V| >= binomial_threshold(a, b).  Recursion depth is at most
    a + b - 2 and each level inspects one vertex's neighborhood.
    """
    need = binomial_threshold(a, b)
    if g.n < need:
        raise RamseyPreconditionError(
            f"below Ramsey threshold: ({a}, {b}) needs {need} vertices, graph has {g.n}"
        )
    return _extract(g, tuple(range(g.n)), a, b)


def independent_set_of_size(g: Graph, r: int, b: int) -> frozenset[int]:
    """Independent set of size >= b in a graph the caller asserts is
    K_r-free (so the clique branch of the recursion cannot win).

    A clique result contradicts the caller's assertion and is surfaced as
    CliqueAssertionError carrying the clique.
    """
    res = clique_or_independent(g, r, b)
    if res.kind == CLIQUE:
        raise CliqueAssertionError(res.members)
    return res.members
