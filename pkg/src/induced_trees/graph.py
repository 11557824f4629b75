"""Simple undirected graphs on dense integer ids, plus the structural
queries the rest of the package is built on.

Graphs are immutable after construction and every operation here is a
pure query, so shared instances are safe to use from multiple threads.
All outputs that are ordered (paths, component lists, parsed files) use
ascending vertex ids to break ties, so repeated runs are reproducible.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence


class EdgeListParseError(ValueError):
    """Malformed edge-list text; carries the 1-based offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Undirected simple graph on vertices 0..n-1.

    No self-loops, no parallel edges; adjacency is symmetric.  Edges are
    stored as (u, v) pairs with u < v.  Adjacency bitmasks and a few
    expensive pure queries (connectivity, triangle search, clique search)
    are cached lazily, which is safe because instances never change.
    """

    __slots__ = ("n", "edges", "_adj", "_masks", "_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        adj: list[set[int]] = [set() for _ in range(n)]
        edge_set: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in edge_set:
                raise ValueError(f"duplicate edge {e}")
            edge_set.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges = frozenset(edge_set)
        self._adj = tuple(frozenset(s) for s in adj)
        self._masks: Optional[tuple[int, ...]] = None
        self._cache: dict = {}

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = self._masks
        if masks is None:
            masks = tuple(_mask_of(s) for s in self._adj)
            self._masks = masks
        return masks

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def is_connected(g: Graph) -> bool:
    """True iff g has exactly one connected component (n >= 1 required)."""
    if g.n == 0:
        raise ValueError("empty graph: connectivity is undefined for n = 0")
    cached = g._cache.get("connected")
    if cached is not None:
        return cached
    masks = g.adjacency_masks
    visited = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= masks[v]
        frontier = nxt & ~visited
        visited |= frontier
    result = visited == (1 << g.n) - 1
    g._cache["connected"] = result
    return result


def _component_masks(masks: Sequence[int], region: int) -> list[int]:
    """Connected components of the subgraph induced on the `region` bitmask,
    as bitmasks ordered by lowest set bit."""
    comps: list[int] = []
    remaining = region
    while remaining:
        seed = remaining & -remaining
        visited = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= masks[v]
            frontier = nxt & remaining & ~visited
            visited |= frontier
        comps.append(visited)
        remaining &= ~visited
    return comps


def components_of(g: Graph, excluded: Iterable[int] = ()) -> list[frozenset[int]]:
    """Connected components of the subgraph induced on V minus `excluded`.

    Components are ordered by their minimum vertex id.
    """
    ex_mask = _mask_of(excluded)
    if ex_mask >> g.n:
        raise ValueError("excluded set contains out-of-range vertices")
    region = ((1 << g.n) - 1) & ~ex_mask
    return [
        frozenset(_iter_bits(mask))
        for mask in _component_masks(g.adjacency_masks, region)
    ]


def find_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    """Some triangle of g as a sorted triple, or None.  Deterministic:
    scans edges in sorted order and picks the smallest common neighbor."""
    if "triangle" in g._cache:
        return g._cache["triangle"]
    masks = g.adjacency_masks
    found = None
    for u, v in sorted(g.edges):
        common = masks[u] & masks[v]
        if common:
            w = (common & -common).bit_length() - 1
            found = tuple(sorted((u, v, w)))
            break
    g._cache["triangle"] = found
    return found


def is_triangle_free(g: Graph) -> bool:
    return find_triangle(g) is None


def _first_clique(masks: Sequence[int], size: int) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest clique of the given size, or None.

    `masks` is per-vertex adjacency as bitmasks; works on raw masks so the
    generators can call it on graphs under construction.
    """
    if size == 0:
        return ()
    n = len(masks)
    if size == 1:
        return (0,) if n >= 1 else None

    def extend(cand: int, chosen: list[int], need: int) -> Optional[tuple[int, ...]]:
        if need == 0:
            return tuple(chosen)
        while cand:
            if cand.bit_count() < need:
                return None
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            chosen.append(v)
            got = extend(cand & masks[v], chosen, need - 1)
            if got is not None:
                return got
            chosen.pop()
        return None

    return extend((1 << n) - 1, [], size)


def find_clique(g: Graph, r: int) -> Optional[frozenset[int]]:
    """A clique of size r (the lexicographically smallest one), or None."""
    if r < 1:
        raise ValueError("clique size must be >= 1")
    key = ("clique", r)
    if key in g._cache:
        return g._cache[key]
    got = _first_clique(g.adjacency_masks, r)
    result = frozenset(got) if got is not None else None
    g._cache[key] = result
    return result


def has_clique(g: Graph, r: int) -> bool:
    """True iff the clique number of g is at least r."""
    return find_clique(g, r) is not None


def is_induced_tree(g: Graph, s: Iterable[int]) -> bool:
    """True iff the subgraph induced on s is connected with |s|-1 edges."""
    s_mask = _mask_of(s)
    if s_mask == 0:
        raise ValueError("a tree has at least one vertex; s must be nonempty")
    if s_mask >> g.n:
        raise ValueError("s contains out-of-range vertices")
    masks = g.adjacency_masks
    k = s_mask.bit_count()
    twice_edges = 0
    for v in _iter_bits(s_mask):
        twice_edges += (masks[v] & s_mask).bit_count()
    if twice_edges != 2 * (k - 1):
        return False
    seed = s_mask & -s_mask
    visited = seed
    frontier = seed
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= masks[v]
        frontier = nxt & s_mask & ~visited
        visited |= frontier
    return visited == s_mask


def shortest_path(g: Graph, start: int, to_set: Iterable[int]) -> list[int]:
    """A shortest path from `start` to the nearest vertex of `to_set`.

    Breadth-first; among equally near targets the smallest id wins, and the
    path itself is canonicalized by choosing the smallest-id predecessor at
    every step.
    """
    to_mask = _mask_of(to_set)
    if to_mask == 0:
        raise ValueError("to_set must be nonempty")
    if to_mask >> g.n or not (0 <= start < g.n):
        raise ValueError("vertices out of range")
    masks = g.adjacency_masks
    layers = [1 << start]
    visited = 1 << start
    while not (layers[-1] & to_mask):
        nxt = 0
        for v in _iter_bits(layers[-1]):
            nxt |= masks[v]
        nxt &= ~visited
        if nxt == 0:
            raise RuntimeError("to_set unreachable from start (graph not connected?)")
        visited |= nxt
        layers.append(nxt)
    hit = layers[-1] & to_mask
    cur = (hit & -hit).bit_length() - 1
    path = [cur]
    for depth in range(len(layers) - 2, -1, -1):
        prevs = layers[depth] & masks[cur]
        cur = (prevs & -prevs).bit_length() - 1
        path.append(cur)
    path.reverse()
    return path


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph with dense relabeled ids.

    Returns (subgraph, mapping) where mapping[new_id] = old_id, sorted
    ascending so the relabeling is canonical.
    """
    vs = sorted(set(vertices))
    if vs and (vs[0] < 0 or vs[-1] >= g.n):
        raise ValueError("vertices out of range")
    index = {old: new for new, old in enumerate(vs)}
    edges = []
    for old_v in vs:
        for old_u in g.neighbors(old_v):
            if old_u > old_v and old_u in index:
                edges.append((index[old_v], index[old_u]))
    return Graph(len(vs), edges), vs


def format_edge_list(g: Graph) -> str:
    """Edge-list text: header '<n> <m>' then one '<u> <v>' line per edge."""
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format, rejecting self-loops and duplicate
    edges with a line-numbered error."""
    raw_lines = text.split("\n")
    while raw_lines and raw_lines[-1] == "":
        raw_lines.pop()
    if not raw_lines:
        raise EdgeListParseError(1, "missing '<n> <m>' header")
    header = raw_lines[0].split()
    if len(header) != 2:
        raise EdgeListParseError(1, "header must be '<n> <m>'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListParseError(1, "header must contain two integers") from None
    if n < 0 or m < 0:
        raise EdgeListParseError(1, "header counts must be nonnegative")
    found = len(raw_lines) - 1
    if found < m:
        raise EdgeListParseError(len(raw_lines) + 1, f"expected {m} edge lines, found {found}")
    if found > m:
        raise EdgeListParseError(m + 2, f"expected {m} edge lines, found {found}")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for line_no, line in enumerate(raw_lines[1:], start=2):
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(line_no, "edge line must be '<u> <v>'")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(line_no, "edge endpoints must be integers") from None
        if u == v:
            raise EdgeListParseError(line_no, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(line_no, f"edge ({u}, {v}) out of range for n={n}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise EdgeListParseError(line_no, f"duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)


def load_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def save_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g))
