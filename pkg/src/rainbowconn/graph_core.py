"""Simple undirected graphs with hop distances, structural statistics and surgery.

Vertices are dense integers ``0..n-1``.  The distance matrix is computed by
breadth-first search from every vertex, eagerly by default and on first use
for graphs built with ``lazy=True`` (large generated gadgets).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

UNREACHABLE = -1

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


class InvalidEdge(GraphError):
    pass


class InvalidVertex(GraphError):
    pass


class NotConnected(GraphError):
    pass


class Unreachable(GraphError):
    pass


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph.

    ``edges`` is the sorted tuple of normalised pairs ``(u, v)`` with ``u < v``;
    the position of an edge in it is its edge id.
    """

    __slots__ = ("n", "edges", "adj", "_eid", "_dist")

    def __init__(self, n: int, edge_list: Iterable[Sequence[int]] = (), lazy: bool = False):
        if n < 0:
            raise InvalidVertex(f"negative vertex count {n}")
        seen = set()
        for e in edge_list:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n) or not (0 <= v < n):
                raise InvalidVertex(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InvalidEdge(f"loop at vertex {u}")
            seen.add(norm_edge(u, v))
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self._eid = {e: i for i, e in enumerate(self.edges)}
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._dist: np.ndarray | None = None
        if not lazy:
            self._dist = _all_pairs_bfs(self.n, self.adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def dist(self) -> np.ndarray:
        if self._dist is None:
            self._dist = _all_pairs_bfs(self.n, self.adj)
        return self._dist

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._eid[norm_edge(u, v)]
        except KeyError:
            raise InvalidEdge(f"({u}, {v}) is not an edge") from None

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self._eid

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InvalidVertex(f"vertex {v} outside 0..{self.n - 1}")

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        if self._dist is not None:
            return bool((self._dist[0] != UNREACHABLE).all())
        return len(_bfs_order(self.adj, 0)) == self.n

    def require_connected(self) -> None:
        if not self.is_connected():
            raise NotConnected("graph is not connected")

    def diameter(self) -> int:
        d = self.dist
        if self.n == 0:
            return 0
        if (d == UNREACHABLE).any():
            raise NotConnected("diameter of a disconnected graph")
        return int(d.max())

    def without_edge(self, u: int, v: int) -> "Graph":
        e = norm_edge(u, v)
        return Graph(self.n, [f for f in self.edges if f != e])

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self.n, list(self.edges) + [tuple(e) for e in extra])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    return Graph(n, edge_list)


def _bfs_order(adj: Sequence[Sequence[int]], s: int) -> list[int]:
    seen = {s}
    order = [s]
    dq = deque([s])
    while dq:
        x = dq.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                order.append(y)
                dq.append(y)
    return order


def _all_pairs_bfs(n: int, adj: Sequence[Sequence[int]]) -> np.ndarray:
    dist = np.full((n, n), UNREACHABLE, dtype=np.int32)
    for s in range(n):
        row = [UNREACHABLE] * n
        row[s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if row[y] == UNREACHABLE:
                        row[y] = d
                        nxt.append(y)
            frontier = nxt
        dist[s] = row
    return dist


# ---------------------------------------------------------------------------
# structural statistics


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    q: int
    diam: int
    b: int
    c: int
    is_complete: bool
    bridges: tuple[Edge, ...] = ()
    cut_vertices: tuple[int, ...] = ()


def bridges_and_cut_vertices(G: Graph) -> tuple[list[Edge], list[int]]:
    """Low-link DFS (iterative) over every component."""
    n = G.n
    disc = [-1] * n
    low = [0] * n
    bridges: list[Edge] = []
    cut = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # frames: (vertex, parent, neighbour cursor)
        stack = [(root, -1, 0)]
        while stack:
            x, parent, i = stack[-1]
            nbrs = G.adj[x]
            if i < len(nbrs):
                stack[-1] = (x, parent, i + 1)
                y = nbrs[i]
                if y == parent:
                    continue
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((y, x, 0))
                    if x == root:
                        root_children += 1
                else:
                    low[x] = min(low[x], disc[y])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[x])
                    if low[x] > disc[parent]:
                        bridges.append(norm_edge(parent, x))
                    if parent != root and low[x] >= disc[parent]:
                        cut.add(parent)
        if root_children >= 2:
            cut.add(root)
    return sorted(bridges), sorted(cut)


def stats(G: Graph) -> GraphStats:
    br, cv = bridges_and_cut_vertices(G)
    q = sum(1 for v in range(G.n) if G.degree(v) >= 2)
    complete = G.m == G.n * (G.n - 1) // 2
    diam = G.diameter() if G.is_connected() else UNREACHABLE
    return GraphStats(G.n, G.m, q, diam, len(br), len(cv), complete, tuple(br), tuple(cv))


# ---------------------------------------------------------------------------
# path enumeration


def iter_geodesics(G: Graph, u: int, v: int) -> Iterator[tuple[int, ...]]:
    """All shortest ``u``-``v`` paths, lexicographic by vertex sequence."""
    G.check_vertex(u)
    G.check_vertex(v)
    d = G.dist
    L = int(d[u, v])
    if L == UNREACHABLE:
        raise Unreachable(f"no path between {u} and {v}")
    dv = d[v]
    path = [u]

    def rec(x: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(path)
            return
        for y in G.adj[x]:
            if dv[y] == remaining - 1:
                path.append(y)
                yield from rec(y, remaining - 1)
                path.pop()

    yield from rec(u, L)


def iter_bounded_paths(G: Graph, u: int, v: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """All simple ``u``-``v`` paths with at most ``max_len`` edges.

    Ordered by length, then lexicographically within a length.
    """
    G.check_vertex(u)
    G.check_vertex(v)
    d = G.dist
    L0 = int(d[u, v])
    if L0 == UNREACHABLE:
        raise Unreachable(f"no path between {u} and {v}")
    if u == v:
        yield (u,)
        return
    dv = d[v]
    for length in range(L0, max_len + 1):
        yield from _exact_length_paths(G.adj, dv, u, v, length)


def _exact_length_paths(adj, dv, u: int, v: int, length: int) -> Iterator[tuple[int, ...]]:
    path = [u]
    on_path = {u}

    def rec(x: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if x == v:
            if remaining == 0:
                yield tuple(path)
            return
        for y in adj[x]:
            if y in on_path or dv[y] > remaining - 1:
                continue
            path.append(y)
            on_path.add(y)
            yield from rec(y, remaining - 1)
            on_path.discard(y)
            path.pop()

    yield from rec(u, length)


def _visit(it: Iterator[tuple[int, ...]], visitor: Callable[[tuple[int, ...]], object] | None) -> int:
    count = 0
    for p in it:
        count += 1
        if visitor is not None and visitor(p):
            break
    return count


def enumerate_geodesics(G: Graph, u: int, v: int, visitor=None) -> int:
    """Feed every geodesic to ``visitor``; a truthy return aborts.  Returns visits."""
    return _visit(iter_geodesics(G, u, v), visitor)


def enumerate_bounded_paths(G: Graph, u: int, v: int, max_len: int, visitor=None) -> int:
    return _visit(iter_bounded_paths(G, u, v, max_len), visitor)


# ---------------------------------------------------------------------------
# surgery and small-graph utilities


def expand_vertex(G: Graph, u: int, H: Graph) -> Graph:
    """``G`` with ``u`` replaced by ``H``, every vertex of ``H`` joined to ``N(u)``.

    Remaining vertices of ``G`` keep their relative order; ``H`` is appended.
    """
    if G.n == 0 or H.n == 0:
        raise InvalidVertex("expansion needs non-empty graphs")
    G.check_vertex(u)
    new = {x: (x if x < u else x - 1) for x in range(G.n) if x != u}
    off = G.n - 1
    edges = [(new[a], new[b]) for a, b in G.edges if u not in (a, b)]
    edges += [(off + a, off + b) for a, b in H.edges]
    edges += [(new[x], off + h) for x in G.adj[u] for h in range(H.n)]
    return Graph(G.n - 1 + H.n, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def canonical_form(G: Graph) -> tuple[int, tuple[Edge, ...]]:
    """Brute-force canonical labelling (min edge tuple over all relabellings)."""
    from itertools import permutations

    if G.n > 8:
        raise ValueError("brute-force canonical form is limited to n <= 8")
    best = None
    for perm in permutations(range(G.n)):
        key = tuple(sorted(norm_edge(perm[a], perm[b]) for a, b in G.edges))
        if best is None or key < best:
            best = key
    return (G.n, best or ())


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.m == H.m and canonical_form(G) == canonical_form(H)
