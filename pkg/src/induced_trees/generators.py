"""Extremal constructions and seeded random ensembles.

The layered complete-bipartite chains bound induced-tree sizes from above;
the line graph of a balanced tree does the same for the clique-free case;
the dyadic and two-weight bipartite instances exhibit tightness of the
selection guarantees.  Random generators are fully deterministic given
(params, seed) - regeneration reproduces byte-identical edge lists.
"""

from __future__ import annotations

import random

from .admissible import WeightedBipartiteInstance
from .graph import Graph, _first_clique, _mask_of, components_of


def _layered_complete(part_sizes: list[int]) -> Graph:
    """Chain of parts where consecutive parts induce complete bipartite
    graphs; vertex ids run part by part."""
    starts = []
    total = 0
    for size in part_sizes:
        starts.append(total)
        total += size
    edges = []
    for i in range(len(part_sizes) - 1):
        for u in range(starts[i], starts[i] + part_sizes[i]):
            for v in range(starts[i + 1], starts[i + 1] + part_sizes[i + 1]):
                edges.append((u, v))
    return Graph(total, edges)


def ms_layered(m: int) -> Graph:
    """Layered chain with part sizes m-|i| for i in (-m, m); m^2 vertices,
    bipartite, with no induced tree larger than 2m-1."""
    if m < 2:
        raise ValueError("m must be >= 2")
    return _layered_complete([m - abs(i) for i in range(-m + 1, m)])


def ms_through_vertex(m: int) -> tuple[Graph, int]:
    """Layered chain with a singleton first part {v} and part sizes m-i
    after it; 1 + m(m-1)/2 vertices.  Any induced tree containing v has at
    most m vertices.  Returns (graph, v)."""
    if m < 2:
        raise ValueError("m must be >= 2")
    g = _layered_complete([1] + [m - i for i in range(1, m)])
    return g, 0


def line_graph_balanced_tree(r: int, depth: int) -> Graph:
    """Line graph of the balanced tree whose internal vertices all have
    degree r-1 (root has r-1 children, other internal vertices r-2), with
    every leaf at the given depth.  The result is K_r-free and its induced
    trees correspond to induced paths of the underlying tree."""
    if r < 4:
        raise ValueError("r must be >= 4")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    # Build the tree: edge ids become line-graph vertices.
    tree_edges: list[tuple[int, int]] = []
    incident: list[list[int]] = [[]]
    level = [0]
    next_vertex = 1
    for d in range(depth):
        new_level = []
        for parent in level:
            children = r - 1 if parent == 0 else r - 2
            for _ in range(children):
                child = next_vertex
                next_vertex += 1
                incident.append([])
                edge_id = len(tree_edges)
                tree_edges.append((parent, child))
                incident[parent].append(edge_id)
                incident[child].append(edge_id)
                new_level.append(child)
        level = new_level
    edges = []
    for edge_ids in incident:
        for i in range(len(edge_ids)):
            for j in range(i + 1, len(edge_ids)):
                edges.append((edge_ids[i], edge_ids[j]))
    return Graph(len(tree_edges), edges)


def dyadic_bipartite(k: int) -> WeightedBipartiteInstance:
    """Unit-weight instance on A = Z/2^k Z with (k+1) 2^k items: item
    (i, j) is adjacent to the cyclic interval {i, ..., i + 2^j - 1}.

    Every A-id keeps a private j=0 item, so the instance is reduction
    invariant, yet no admissible selection keeps 2^(k+1) items or more.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    m = 1 << k
    items = []
    for j in range(k + 1):
        span = 1 << j
        for i in range(m):
            items.append((1.0, [(i + s) % m for s in range(span)]))
    return WeightedBipartiteInstance(m, items)


def alpha_counterexample(t: int) -> WeightedBipartiteInstance:
    """Two-weight instance whose optimum drops below sqrt(total) as soon as
    the objective exponent exceeds 1/2: a heavy item (weight 1 - 1/t)
    adjacent to all of A, plus t light private items of weight 1/t^2.
    Total weight is 1 over the reals."""
    if t < 2:
        raise ValueError("t must be >= 2")
    heavy = 1.0 - 1.0 / t
    light = t ** -2.0
    items = [(heavy, list(range(t)))]
    items.extend((light, [i]) for i in range(t))
    return WeightedBipartiteInstance(t, items)


def _random_clique_free(n: int, r: int, p: float, seed: int) -> Graph:
    """Sample edges, delete one edge per r-clique (smallest-id tuple first,
    lexicographically largest edge removed), then bridge components."""
    rng = random.Random(seed)
    adj = [set() for _ in range(n)]

    def add(u: int, v: int) -> None:
        adj[u].add(v)
        adj[v].add(u)

    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                add(u, v)

    # Deletions never create cliques, so repeatedly clearing the
    # lexicographically smallest r-clique matches a single ascending scan.
    while True:
        masks = [_mask_of(s) for s in adj]
        clique = _first_clique(masks, r)
        if clique is None:
            break
        u, v = clique[-2], clique[-1]
        adj[u].discard(v)
        adj[v].discard(u)

    g = Graph(n, _edges_of(adj))
    comps = components_of(g)
    while len(comps) > 1:
        # A bridge between distinct components cannot close a triangle (no
        # common neighbors exist), hence cannot create any clique; the
        # common-neighborhood check below is defensive.
        first, second = sorted(comps[0]), sorted(comps[1])
        bridged = False
        for x in first:
            for y in second:
                if not (adj[x] & adj[y]):
                    add(x, y)
                    bridged = True
                    break
            if bridged:
                break
        assert bridged
        g = Graph(n, _edges_of(adj))
        comps = components_of(g)
    return g


def _edges_of(adj: list[set[int]]) -> list[tuple[int, int]]:
    return [(u, v) for u in range(len(adj)) for v in adj[u] if u < v]


def random_triangle_free(n: int, p: float, seed: int) -> Graph:
    """Seeded connected triangle-free graph: edge sampling at density p,
    triangle repair, then bridges between components."""
    return random_kr_free(n, 3, p, seed)


def random_kr_free(n: int, r: int, p: float, seed: int) -> Graph:
    """Seeded connected graph with no clique of size r (same scheme as
    random_triangle_free, which is the r=3 case)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not (0.0 <= p <= 1.0):
        raise ValueError("p must be in [0, 1]")
    if r < 2:
        raise ValueError("r must be >= 2")
    if r == 2 and n >= 2:
        raise ValueError("r=2 forbids all edges, so no connected graph on n >= 2 exists")
    return _random_clique_free(n, r, p, seed)
