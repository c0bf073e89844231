"""Independent reference implementations used only by the tests.

Everything here is deliberately naive and shares no code with the package
beyond the ``Graph`` container: paths come from networkx, colourings are
plain dicts, and the parameter oracle is a textbook backtracking search
(no seeding, no per-pair path caps, no candidate compilation).
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

import networkx as nx

EDGE_KINDS = {"rc", "src"}
VERTEX_KINDS = {"rvc", "srvc"}
TOTAL_KINDS = {"trc", "strc"}


def to_nx(G) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


def _uses_edges(kind: str) -> bool:
    return kind in EDGE_KINDS or kind in TOTAL_KINDS


def _uses_vertices(kind: str) -> bool:
    return kind in VERTEX_KINDS or kind in TOTAL_KINDS


def element_list(G, kind: str) -> list:
    """Coloured elements: edge tuples first, then vertex ints."""
    out = []
    if _uses_edges(kind):
        out.extend(tuple(sorted(e)) for e in G.edges)
    if _uses_vertices(kind):
        out.extend(range(G.n))
    return out


def path_elements(path, kind: str) -> list:
    els = []
    if _uses_edges(kind):
        els.extend(tuple(sorted(e)) for e in zip(path, path[1:]))
    if _uses_vertices(kind):
        els.extend(path[1:-1])
    return els


def pair_paths(G, kind: str, u: int, v: int) -> list[list[int]]:
    H = to_nx(G)
    if kind.startswith("s"):
        return [list(p) for p in nx.all_shortest_paths(H, u, v)]
    return [list(p) for p in nx.all_simple_paths(H, u, v)]


def naive_is_connected(G, kind: str, colour_of: dict) -> bool:
    """``colour_of`` maps edge tuples / vertex ints to colours."""
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if not naive_pair_ok(G, kind, colour_of, u, v):
                return False
    return True


def naive_pair_ok(G, kind: str, colour_of: dict, u: int, v: int) -> bool:
    for p in pair_paths(G, kind, u, v):
        cols = [colour_of.get(x, 0) for x in path_elements(p, kind)]
        if 0 not in cols and len(set(cols)) == len(cols):
            return True
    return False


def colouring_dict(col) -> dict:
    """Flatten a package ``Colouring`` into the oracle's dict form."""
    out = {}
    if col.edge_colour:
        out.update({tuple(sorted(e)): c for e, c in col.edge_colour.items()})
    if col.vertex_colour:
        out.update(col.vertex_colour)
    return out


# ---------------------------------------------------------------------------
# parameter oracle


class _Instance:
    def __init__(self, G, kind: str):
        self.G = G
        self.kind = kind
        self.elements = element_list(G, kind)
        index = {x: i for i, x in enumerate(self.elements)}
        self.pairs = []
        for u in range(G.n):
            for v in range(u + 1, G.n):
                self.pairs.append([tuple(index[x] for x in path_elements(p, kind))
                                   for p in pair_paths(G, kind, u, v)])

    def decide(self, k: int) -> dict | None:
        """A colouring dict with colours in ``1..k``, or ``None``."""
        if k == 0:
            ok = all(any(len(p) == 0 for p in paths) for paths in self.pairs)
            return {x: 0 for x in self.elements} if ok else None
        pairs = [[p for p in paths if len(p) <= k] for paths in self.pairs]
        if any(not paths for paths in pairs):
            return None
        E = len(self.elements)
        on = [[] for _ in range(E)]      # element -> (pair id, path id)
        for i, paths in enumerate(pairs):
            for j, p in enumerate(paths):
                for e in p:
                    on[e].append((i, j))
        alive = [len(paths) for paths in pairs]
        dead = [[False] * len(paths) for paths in pairs]
        col = [0] * E

        def rec(e: int, top: int) -> bool:
            if e == E:
                return True
            for c in range(1, min(top + 1, k) + 1):
                killed = []
                ok = True
                for i, j in on[e]:
                    if dead[i][j]:
                        continue
                    if any(col[x] == c for x in pairs[i][j] if x != e):
                        dead[i][j] = True
                        alive[i] -= 1
                        killed.append((i, j))
                        if alive[i] == 0:
                            ok = False
                col[e] = c
                if ok and rec(e + 1, max(top, c)):
                    return True
                col[e] = 0
                for i, j in killed:
                    dead[i][j] = False
                    alive[i] += 1
            return False

        if not rec(0, 0):
            return None
        return {x: col[i] for i, x in enumerate(self.elements)}


def brute_force_value(G, kind: str, start: int = 0, limit: int = 64) -> tuple[int, dict]:
    """Least ``k`` with a rainbow-connected colouring, plus one such colouring."""
    inst = _Instance(G, kind)
    for k in range(start, limit + 1):
        col = inst.decide(k)
        if col is not None:
            return k, col
    raise AssertionError(f"no {kind} colouring with at most {limit} colours")


def leaf_enumeration_feasible(G, kind: str, k: int) -> bool:
    """Literal enumeration of all ``k**E`` colourings, checked at the leaves only."""
    els = element_list(G, kind)
    if k == 0:
        # only element-free paths survive: a single edge, under vertex colourings
        return all(kind in VERTEX_KINDS and G.has_edge(u, v) for u in range(G.n) for v in range(u + 1, G.n))
    for cols in product(range(1, k + 1), repeat=len(els)):
        if naive_is_connected(G, kind, dict(zip(els, cols))):
            return True
    return False


# ---------------------------------------------------------------------------
# structural oracles


def nx_stats(G) -> dict:
    H = to_nx(G)
    return {
        "n": G.n,
        "m": G.m,
        "diam": nx.diameter(H) if G.n > 0 else 0,
        "bridges": sorted(tuple(sorted(e)) for e in nx.bridges(H)),
        "cut_vertices": sorted(nx.articulation_points(H)),
        "q": sum(1 for v in H if H.degree(v) >= 2),
    }


@lru_cache(maxsize=None)
def atlas_counts(max_n: int) -> dict[int, int]:
    """Connected unlabelled graphs per order from the networkx atlas (n <= 7)."""
    from networkx.generators.atlas import graph_atlas_g

    counts: dict[int, int] = {}
    for H in graph_atlas_g():
        if 1 <= H.number_of_nodes() <= max_n and nx.is_connected(H):
            counts[H.number_of_nodes()] = counts.get(H.number_of_nodes(), 0) + 1
    return counts
