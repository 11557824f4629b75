"""Guaranteed-size induced-tree finders with machine-checkable certificates.

Three constructions:

  * find_tree_triangle_free: in a connected triangle-free graph on N
    vertices, an induced tree of size at least sqrt(N-1) + 1 through any
    prescribed root.  Either the root's star is already big enough, or the
    graph decomposes around the root's neighborhood and a weighted
    admissible selection picks which components to recurse into.

  * find_tree_kr_free: in a connected K_r-free graph (r >= 4), an induced
    tree of size at least ln(N-1)/(4 ln r) + 1 through any root, using
    Ramsey extraction inside large neighborhoods and a uniform admissible
    selection across large components.

  * reroute_through_vertex: given any induced tree T and any vertex v, an
    induced tree of size at least 1 + |T|/2 containing v, built from a
    shortest path into T plus one color class of T's subtree partition.

Recursive subproblems are vertex-region bitmasks over the immutable host
graph, so no subgraphs are materialized; all finders are pure.
"""

from __future__ import annotations

import json
import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .admissible import WeightedBipartiteInstance, select_uniform, select_weighted
from .graph import (
    Graph,
    _component_masks,
    _iter_bits,
    _mask_of,
    components_of,
    find_clique,
    find_triangle,
    induced_subgraph,
    is_connected,
    is_induced_tree,
    shortest_path,
)
from .ramsey import independent_set_of_size

log = logging.getLogger(__name__)

# Slack for comparing integer sizes against sqrt/log bounds.
BOUND_EPS = 1e-9

NOT_INDUCED_TREE = "not-induced-tree"
ROOT_MISSING = "root-missing"
BOUND_UNMET = "bound-unmet"


class FinderPreconditionError(ValueError):
    """Input violates a finder precondition; carries the witness (a
    triangle, a clique, or a stranded component)."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InternalInvariantError(RuntimeError):
    """A step the theory guarantees has failed.  This would falsify the
    underlying theorem, so it indicates a bug; carries a dump for triage."""

    def __init__(self, message: str, dump: dict):
        super().__init__(f"{message}; dump={dump!r}")
        self.dump = dump


@dataclass(frozen=True)
class TreeCertificate:
    """A vertex set claimed to induce a tree containing `root`, of size at
    least `claimed_bound`."""

    vertices: frozenset[int]
    root: int
    claimed_bound: float
    strategy: str = ""

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_json(self) -> str:
        return json.dumps(
            {
                "root": self.root,
                "vertices": sorted(self.vertices),
                "claimed_bound": self.claimed_bound,
                "strategy": self.strategy,
            },
            sort_keys=True,
        )

    @staticmethod
    def from_json(text: str) -> "TreeCertificate":
        payload = json.loads(text)
        if not isinstance(payload, dict):
            raise ValueError("certificate must be a JSON object")
        for key in ("root", "vertices", "claimed_bound"):
            if key not in payload:
                raise ValueError(f"certificate missing '{key}'")
        return TreeCertificate(
            vertices=frozenset(payload["vertices"]),
            root=payload["root"],
            claimed_bound=float(payload["claimed_bound"]),
            strategy=payload.get("strategy", ""),
        )


def certificate_failure(g: Graph, cert: TreeCertificate) -> Optional[str]:
    """None if the certificate holds against g, else a reason code."""
    vs = cert.vertices
    if not vs or any(not (0 <= x < g.n) for x in vs):
        return NOT_INDUCED_TREE
    if not is_induced_tree(g, vs):
        return NOT_INDUCED_TREE
    if cert.root not in vs:
        return ROOT_MISSING
    if len(vs) < cert.claimed_bound - BOUND_EPS:
        return BOUND_UNMET
    return None


def verify_certificate(g: Graph, cert: TreeCertificate) -> bool:
    return certificate_failure(g, cert) is None


def _sqrt_bound(n: int) -> float:
    return math.sqrt(n) + 1.0 if n >= 1 else 1.0


def _log_bound(n: int, r: int) -> float:
    return math.log(n) / (4.0 * math.log(r)) + 1.0 if n >= 2 else 1.0


def _attachment_instance(
    masks, a_list: list[int], comp_masks: list[int]
) -> WeightedBipartiteInstance:
    """Bipartite instance: A = attachment vertices, B = components weighted
    by size, adjacency = 'some component vertex sees the attachment'."""
    items = []
    for comp in comp_masks:
        union = 0
        for x in _iter_bits(comp):
            union |= masks[x]
        items.append(
            (float(comp.bit_count()), [ai for ai, u in enumerate(a_list) if union >> u & 1])
        )
    return WeightedBipartiteInstance(len(a_list), items)


def _unique_attachment(item_nbrs: frozenset[int], chosen_a: frozenset[int], a_list: list[int]) -> int:
    only = item_nbrs & chosen_a
    assert len(only) == 1
    return a_list[next(iter(only))]


def find_tree_triangle_free(g: Graph, v: int) -> TreeCertificate:
    """Induced tree of size >= sqrt(|V|-1) + 1 containing v, in a connected
    triangle-free graph."""
    if g.n == 0:
        raise ValueError("empty graph")
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    if not is_connected(g):
        raise FinderPreconditionError(
            "graph is disconnected", witness=components_of(g)[0]
        )
    triangle = find_triangle(g)
    if triangle is not None:
        raise FinderPreconditionError(
            f"graph contains triangle {triangle}", witness=triangle
        )
    full = (1 << g.n) - 1
    verts, strategy = _tf(g, full, v)
    return TreeCertificate(frozenset(verts), v, _sqrt_bound(g.n - 1), strategy)


def _tf(g: Graph, region: int, v: int) -> tuple[set[int], str]:
    """Tree vertices within the connected triangle-free `region`, rooted at v."""
    masks = g.adjacency_masks
    size = region.bit_count()
    if size <= 2:
        return set(_iter_bits(region)), "base"
    n = size - 1
    nv_mask = masks[v] & region
    if nv_mask.bit_count() ** 2 >= n:
        return {v} | set(_iter_bits(nv_mask)), "star"
    comps = _component_masks(masks, region & ~nv_mask & ~(1 << v))
    a_list = list(_iter_bits(nv_mask))
    inst = _attachment_instance(masks, a_list, comps)
    sel = select_weighted(inst)
    verts = {v}
    for i in sorted(sel.b_chosen):
        u = _unique_attachment(inst.b_items[i].nbrs, sel.a_chosen, a_list)
        branch, _ = _tf(g, comps[i] | (1 << u), u)
        verts |= branch
    return verts, "decompose"


def find_tree_kr_free(g: Graph, v: int, r: int) -> TreeCertificate:
    """Induced tree of size >= ln(|V|-1)/(4 ln r) + 1 containing v, in a
    connected graph with no clique of size r (r >= 4)."""
    if g.n == 0:
        raise ValueError("empty graph")
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    if r < 4:
        raise ValueError("r must be >= 4")
    if not is_connected(g):
        raise FinderPreconditionError(
            "graph is disconnected", witness=components_of(g)[0]
        )
    clique = find_clique(g, r)
    if clique is not None:
        raise FinderPreconditionError(
            f"graph contains a clique of size {r}: {sorted(clique)}", witness=clique
        )
    full = (1 << g.n) - 1
    verts, strategy = _kr(g, full, v, r)
    return TreeCertificate(frozenset(verts), v, _log_bound(g.n - 1, r), strategy)


def _independent_in(g: Graph, vertex_mask: int, r: int, b: int) -> set[int]:
    """Independent set of size >= b inside the induced subgraph on the mask,
    returned in host ids.  The region is K_r-free by heredity."""
    sub, mapping = induced_subgraph(g, _iter_bits(vertex_mask))
    return {mapping[x] for x in independent_set_of_size(sub, r, b)}


def _choose_branch_pair(
    g: Graph, chosen: list[int], attach: dict[int, int], sizes: dict[int, int]
) -> tuple[tuple[int, int], str]:
    """Pick the two components to recurse into.

    With pairwise-distinct attachments, take a non-adjacent attachment pair
    (must exist: the attachments are r+1 or more vertices of a K_r-free
    graph) so the root can reach both branches without closing a cycle;
    otherwise glue two components sharing an attachment.  Either way the
    pair maximizing the combined component size wins, ties to the smallest
    component indices.
    """
    distinct = len(set(attach.values())) == len(chosen)
    best_key = None
    pair = None
    for ii in range(len(chosen)):
        for jj in range(ii + 1, len(chosen)):
            i, j = chosen[ii], chosen[jj]
            if distinct:
                usable = not g.has_edge(attach[i], attach[j])
            else:
                usable = attach[i] == attach[j]
            if usable:
                key = (-(sizes[i] + sizes[j]), i, j)
                if best_key is None or key < best_key:
                    best_key = key
                    pair = (i, j)
    if pair is None:
        raise InternalInvariantError(
            "r+1 distinct attachments are pairwise adjacent in a K_r-free graph",
            dump={"attachments": sorted(attach.values()), "chosen": chosen},
        )
    return pair, "two-branches" if distinct else "shared-attachment"


def _kr(g: Graph, region: int, v: int, r: int) -> tuple[set[int], str]:
    masks = g.adjacency_masks
    size = region.bit_count()
    if size <= 2:
        return set(_iter_bits(region)), "base"
    n = size - 1
    nv_mask = masks[v] & region
    b_need = max(1, math.ceil(math.log(n) / (4.0 * math.log(r))))

    if nv_mask.bit_count() ** 4 >= n:
        return {v} | _independent_in(g, nv_mask, r, b_need), "ramsey-star"

    removed = nv_mask | (1 << v)
    for w in _iter_bits(nv_mask):
        outside = masks[w] & region & ~removed
        if outside.bit_count() ** 4 >= n:
            return {v, w} | _independent_in(g, outside, r, b_need), "ramsey-broom"

    comps = _component_masks(masks, region & ~removed)
    r4 = r ** 4

    big = None
    for comp in comps:
        if comp.bit_count() * r4 > n and (big is None or comp.bit_count() > big.bit_count()):
            big = comp
    if big is not None:
        attach_mask = 0
        for x in _iter_bits(big):
            attach_mask |= masks[x]
        u_mask = attach_mask & nv_mask
        u = (u_mask & -u_mask).bit_length() - 1
        branch, _ = _kr(g, big | (1 << u), u, r)
        return {v} | branch, "big-component"

    big_comps = [comp for comp in comps if comp.bit_count() ** 2 * r4 >= n]
    if len(big_comps) <= r * r:
        raise InternalInvariantError(
            "expected more than r^2 large components",
            dump={
                "region_size": size,
                "r": r,
                "root": v,
                "neighborhood": list(_iter_bits(nv_mask)),
                "component_sizes": [c.bit_count() for c in comps],
                "large_components": len(big_comps),
            },
        )
    a_list = list(_iter_bits(nv_mask))
    inst = _attachment_instance(masks, a_list, big_comps)
    sel = select_uniform(inst)
    chosen = sorted(sel.b_chosen)
    if len(chosen) < r + 1:
        raise InternalInvariantError(
            "uniform selection returned fewer than r+1 components",
            dump={"region_size": size, "r": r, "root": v, "chosen": len(chosen)},
        )
    attach = {
        i: _unique_attachment(inst.b_items[i].nbrs, sel.a_chosen, a_list) for i in chosen
    }

    sizes = {i: big_comps[i].bit_count() for i in chosen}
    pair, strategy = _choose_branch_pair(g, chosen, attach, sizes)

    verts = {v}
    for i in pair:
        branch, _ = _kr(g, big_comps[i] | (1 << attach[i]), attach[i], r)
        verts |= branch
    return verts, strategy


def reroute_through_vertex(g: Graph, t_cert: TreeCertificate, v: int) -> TreeCertificate:
    """Induced tree of size >= 1 + |T|/2 containing v, given any valid
    induced tree T of the connected graph g.

    Walks a shortest path into T; the path's last inner vertex sees some
    attachment points of T.  T splits into subtrees around those points
    (each T-vertex joins its nearest attachment, ties to the smallest
    index); the quotient graph of the split is a tree, hence 2-colorable,
    and the heavier color class joins the path.
    """
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    reason = certificate_failure(g, t_cert)
    if reason is not None:
        raise FinderPreconditionError(f"input certificate invalid: {reason}")
    t = t_cert.vertices
    bound = 1.0 + len(t) / 2.0
    if v in t:
        if len(t) >= 2:
            return TreeCertificate(t, v, bound, "contains-root")
        if g.n == 1:
            return TreeCertificate(t, v, 1.0, "single-vertex")
        return TreeCertificate(frozenset({v, min(g.neighbors(v))}), v, bound, "grown-edge")

    path = shortest_path(g, v, t)
    body = path[:-1]
    last = body[-1]
    attach_pts = sorted(g.neighbors(last) & t)
    adj_t = {x: sorted(g.neighbors(x) & t) for x in t}

    label: dict[int, int] = {}
    queue: deque[int] = deque()
    for idx, s in enumerate(attach_pts):
        label[s] = idx
        queue.append(s)
    while queue:
        x = queue.popleft()
        for y in adj_t[x]:
            if y not in label:
                label[y] = label[x]
                queue.append(y)

    k = len(attach_pts)
    aux_adj: list[set[int]] = [set() for _ in range(k)]
    for x in sorted(t):
        for y in adj_t[x]:
            if y > x and label[x] != label[y]:
                aux_adj[label[x]].add(label[y])
                aux_adj[label[y]].add(label[x])

    color: dict[int, int] = {}
    for start in range(k):
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in sorted(aux_adj[x]):
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    raise InternalInvariantError(
                        "auxiliary subtree graph is not bipartite",
                        dump={
                            "tree": sorted(t),
                            "root": v,
                            "path": path,
                            "attachments": attach_pts,
                            "labels": {x: label[x] for x in sorted(t)},
                        },
                    )

    covered = [0, 0]
    for x in t:
        covered[color[label[x]]] += 1
    pick = 0 if covered[0] >= covered[1] else 1
    verts = set(body)
    verts.update(x for x in t if color[label[x]] == pick)
    return TreeCertificate(frozenset(verts), v, bound, "reroute")


def find_large_tree(g: Graph) -> TreeCertificate:
    """Dispatch to the appropriate finder with the smallest r for which g
    has no size-r clique, trying a sample of roots and keeping the largest
    certificate."""
    if g.n == 0:
        raise ValueError("empty graph")
    if not is_connected(g):
        raise FinderPreconditionError(
            "graph is disconnected", witness=components_of(g)[0]
        )
    n = g.n
    if n == 1:
        return TreeCertificate(frozenset({0}), 0, 1.0, "single-vertex")
    if g.edge_count == n - 1:
        return TreeCertificate(frozenset(range(n)), 0, float(n), "whole-tree")
    r = 3
    while find_clique(g, r) is not None:
        r += 1
    log.debug("find_large_tree: n=%d dispatching with r=%d", n, r)
    full = (1 << n) - 1
    roots = range(n) if n <= 40 else range(0, n, -(-n // 40))
    best: Optional[TreeCertificate] = None
    for v in roots:
        if r == 3:
            verts, strategy = _tf(g, full, v)
            bound = _sqrt_bound(n - 1)
        else:
            verts, strategy = _kr(g, full, v, r)
            bound = _log_bound(n - 1, r)
        cert = TreeCertificate(frozenset(verts), v, bound, strategy)
        if best is None or cert.size > best.size:
            best = cert
    assert best is not None
    return best
