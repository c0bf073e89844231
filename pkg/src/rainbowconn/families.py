"""Closed-form parameter values and witness colourings for classic families.

Covered: trees, cycles, wheels, complete graphs, complete bipartite and
complete multipartite graphs.  ``family_witness`` builds a candidate colouring
where a direct scheme is known, checks it with the verifier, and falls back to
exact search at the known palette size otherwise.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Sequence

from .colouring import ALL_KINDS, Colouring, Kind, check_connectivity
from .graph_core import Graph, complete_graph, cycle_graph, norm_edge, stats

# small-cycle tables; larger n follow the closed forms below
CYCLE_RVC = {3: 0, 4: 1, 5: 1, 6: 2, 7: 3, 8: 3, 9: 3, 10: 4, 11: 5, 12: 5, 13: 6, 14: 7, 15: 7}
CYCLE_SRVC = {3: 0, 4: 1, 5: 1, 6: 2, 7: 3, 8: 3, 9: 3, 10: 4, 11: 6, 12: 5, 13: 7, 14: 7, 15: 8}
CYCLE_TRC = {3: 1, 4: 3, 5: 3, 6: 5, 7: 6, 8: 7, 9: 8, 10: 9, 11: 11, 12: 11}


class OutOfRange(ValueError):
    pass


class WitnessSearchFallback(UserWarning):
    """A direct candidate failed verification and search was used instead."""


class WitnessNotFound(RuntimeError):
    pass


FAMILIES = ("tree", "cycle", "wheel", "complete", "complete_bipartite", "complete_multipartite")


@dataclass(frozen=True)
class FamilyDescriptor:
    family: str
    params: tuple = ()
    edges: tuple = ()          # tree only

    @classmethod
    def tree(cls, n: int, edges: Sequence[Sequence[int]]) -> "FamilyDescriptor":
        return cls("tree", (n,), tuple(norm_edge(*e) for e in edges))

    @classmethod
    def cycle(cls, n: int) -> "FamilyDescriptor":
        return cls("cycle", (n,))

    @classmethod
    def wheel(cls, n: int) -> "FamilyDescriptor":
        return cls("wheel", (n,))

    @classmethod
    def complete(cls, n: int) -> "FamilyDescriptor":
        return cls("complete", (n,))

    @classmethod
    def complete_bipartite(cls, m: int, n: int) -> "FamilyDescriptor":
        return cls("complete_bipartite", (m, n))

    @classmethod
    def complete_multipartite(cls, *sizes: int) -> "FamilyDescriptor":
        return cls("complete_multipartite", tuple(sorted(sizes)))

    @property
    def m_sum(self) -> int:
        """Total size of all classes except the largest (multipartite only)."""
        return sum(self.params[:-1])

    def validate(self) -> None:
        p = self.params
        if self.family == "tree":
            n = p[0]
            G = Graph(n, self.edges)
            if n < 2 or G.m != n - 1 or not G.is_connected():
                raise OutOfRange("tree descriptor needs a connected graph with n >= 2 and n-1 edges")
        elif self.family in ("cycle", "wheel"):
            if p[0] < 3:
                raise OutOfRange(f"{self.family} needs n >= 3")
        elif self.family == "complete":
            if p[0] < 2:
                raise OutOfRange("complete graph needs n >= 2")
        elif self.family == "complete_bipartite":
            m, n = p
            if not 1 <= m <= n:
                raise OutOfRange("complete bipartite needs 1 <= m <= n")
        elif self.family == "complete_multipartite":
            if len(p) < 3 or p[0] < 1:
                raise OutOfRange("complete multipartite needs at least 3 non-empty classes")
        else:
            raise OutOfRange(f"unknown family {self.family!r}")

    def __str__(self) -> str:
        if self.family == "tree":
            return f"tree(n={self.params[0]})"
        return f"{self.family}({','.join(map(str, self.params))})"


def ceil_root(n: int, m: int) -> int:
    """Smallest ``b >= 1`` with ``b**m >= n``, in exact integer arithmetic."""
    if n <= 1:
        return 1
    b = max(1, int(round(n ** (1.0 / m))))
    while b ** m < n:
        b += 1
    while b > 1 and (b - 1) ** m >= n:
        b -= 1
    return b


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# ---------------------------------------------------------------------------
# graphs


def family_graph(desc: FamilyDescriptor) -> Graph:
    desc.validate()
    p = desc.params
    if desc.family == "tree":
        return Graph(p[0], desc.edges)
    if desc.family == "cycle":
        return cycle_graph(p[0])
    if desc.family == "wheel":
        n = p[0]
        return Graph(n + 1, [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)])
    if desc.family == "complete":
        return complete_graph(p[0])
    if desc.family == "complete_bipartite":
        m, n = p
        return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])
    # classes are consecutive blocks in ascending size order
    owner = [c for c, size in enumerate(p) for _ in range(size)]
    N = len(owner)
    return Graph(N, [(i, j) for i in range(N) for j in range(i + 1, N) if owner[i] != owner[j]])


# ---------------------------------------------------------------------------
# values


def _tree_values(G: Graph) -> dict[Kind, int]:
    st = stats(G)
    n, q = st.n, st.q
    return {Kind.RC: n - 1, Kind.SRC: n - 1, Kind.RVC: q, Kind.SRVC: q, Kind.TRC: n - 1 + q, Kind.STRC: n - 1 + q}


def _cycle_values(n: int) -> dict[Kind, int]:
    edge = 1 if n == 3 else _ceil_div(n, 2)
    rvc = CYCLE_RVC.get(n, _ceil_div(n, 2))
    srvc = CYCLE_SRVC.get(n, _ceil_div(n, 2))
    trc = CYCLE_TRC.get(n, n)
    return {Kind.RC: edge, Kind.SRC: edge, Kind.RVC: rvc, Kind.SRVC: srvc, Kind.TRC: trc, Kind.STRC: trc}


def _wheel_values(n: int) -> dict[Kind, int]:
    if n == 3:
        return {Kind.RC: 1, Kind.SRC: 1, Kind.RVC: 0, Kind.SRVC: 0, Kind.TRC: 1, Kind.STRC: 1}
    rc = 2 if n <= 6 else 3
    trc = 3 if n <= 6 else 4 if n <= 9 else 5
    src = _ceil_div(n, 3)
    return {Kind.RC: rc, Kind.SRC: src, Kind.RVC: 1, Kind.SRVC: 1, Kind.TRC: trc, Kind.STRC: src + 1}


def _bipartite_values(m: int, n: int) -> dict[Kind, int]:
    if m == 1:
        return _tree_values(family_graph(FamilyDescriptor.complete_bipartite(1, n)))
    b = ceil_root(n, m)
    return {Kind.RC: min(b, 4), Kind.SRC: b, Kind.RVC: 1, Kind.SRVC: 1, Kind.TRC: min(b + 1, 7), Kind.STRC: b + 1}


def _multipartite_values(sizes: tuple[int, ...]) -> dict[Kind, int]:
    m, n = sum(sizes[:-1]), sizes[-1]
    if n == 1:
        return {Kind.RC: 1, Kind.SRC: 1, Kind.RVC: 0, Kind.SRVC: 0, Kind.TRC: 1, Kind.STRC: 1}
    if m > n:
        return {Kind.RC: 2, Kind.SRC: 2, Kind.RVC: 1, Kind.SRVC: 1, Kind.TRC: 3, Kind.STRC: 3}
    b = ceil_root(n, m)
    return {Kind.RC: min(b, 3), Kind.SRC: b, Kind.RVC: 1, Kind.SRVC: 1, Kind.TRC: min(b + 1, 5), Kind.STRC: b + 1}


def family_values(desc: FamilyDescriptor) -> dict[Kind, int]:
    desc.validate()
    p = desc.params
    if desc.family == "tree":
        return _tree_values(family_graph(desc))
    if desc.family == "cycle":
        return _cycle_values(p[0])
    if desc.family == "wheel":
        return _wheel_values(p[0])
    if desc.family == "complete":
        return {Kind.RC: 1, Kind.SRC: 1, Kind.RVC: 0, Kind.SRVC: 0, Kind.TRC: 1, Kind.STRC: 1}
    if desc.family == "complete_bipartite":
        return _bipartite_values(*p)
    return _multipartite_values(p)


def family_value(desc: FamilyDescriptor, kind: Kind) -> int:
    return family_values(desc)[kind]


# ---------------------------------------------------------------------------
# candidate colourings; each returns None when no direct scheme applies


def _build(G: Graph, kind: Kind, k: int, edge=None, vertex=None, default: int = 1) -> Colouring:
    ec = vc = None
    if kind.colours_edges:
        edge = {norm_edge(*e): c for e, c in (edge or {}).items()}
        ec = {} if k == 0 else {e: edge.get(e, default) for e in G.edges}
    if kind.colours_vertices:
        vertex = vertex or {}
        vc = {} if k == 0 else {v: vertex.get(v, default) for v in range(G.n)}
    return Colouring(k, ec, vc)


def _tree_candidate(G: Graph, kind: Kind, k: int) -> Colouring:
    inner = [v for v in range(G.n) if G.degree(v) >= 2]
    edge = {e: i + 1 for i, e in enumerate(G.edges)}
    off = G.m if kind.colours_edges else 0
    vertex = {v: off + i + 1 for i, v in enumerate(inner)}
    return _build(G, kind, k, edge, vertex)


def _cycle_candidate(G: Graph, n: int, kind: Kind, k: int) -> Colouring | None:
    if k == 0 or n == 3:
        return _build(G, kind, k)
    if kind.coloured_elements == "edges":
        return _build(G, kind, k, edge={(i, (i + 1) % n): i % k + 1 for i in range(n)})
    if kind.coloured_elements == "vertices":
        return _build(G, kind, k, vertex={i: i % k + 1 for i in range(n)})
    if k != n:
        return None
    # vertex i sits at position 2i and edge (i, i+1) at 2i+1 around the cycle
    return _build(G, kind, k,
                  edge={(i, (i + 1) % n): (2 * i + 1) % n + 1 for i in range(n)},
                  vertex={i: (2 * i) % n + 1 for i in range(n)})


def _wheel_candidate(G: Graph, n: int, kind: Kind, k: int) -> Colouring | None:
    if n == 3 or kind.coloured_elements == "vertices":
        return _build(G, kind, k)
    centre = n
    rim = [(i, (i + 1) % n) for i in range(n)]
    groups = _ceil_div(n, 3)
    grouped = {(i, centre): i // 3 + 1 for i in range(n)}
    for i in range(0, n - 2, 3):
        grouped[(i, i + 1)] = 1
        grouped[(i + 1, i + 2)] = 2
    if kind is Kind.SRC or (kind is Kind.RC and k == groups):
        return _build(G, kind, k, edge=grouped)
    if kind is Kind.STRC or (kind is Kind.TRC and k == groups + 1):
        return _build(G, kind, k, edge=grouped, vertex={v: groups + 1 for v in range(n + 1)})
    parity = {(i, centre): i % 2 + 1 for i in range(n)}
    if kind is Kind.RC and k == 3:
        return _build(G, kind, k, edge={**parity, **{e: 3 for e in rim}})
    if kind is Kind.TRC and k == 5:
        return _build(G, kind, k, edge={**parity, **{e: 3 for e in rim}},
                      vertex={centre: 4, **{v: 5 for v in range(n)}})
    return None


def _distinct_vectors(m: int, b: int, count: int) -> list[tuple[int, ...]]:
    """``count`` distinct vectors over ``1..b``; near-unit vectors come first.

    The vector with a 2 in coordinate ``i`` separates coordinate ``i`` from
    every other one, so every pair of coordinates is told apart.
    """
    out: list[tuple[int, ...]] = []
    if b >= 2:
        for i in range(min(m - 1, count)):
            out.append(tuple(2 if j == i else 1 for j in range(m)))
    used = set(out)
    for vec in itertools.product(range(1, b + 1), repeat=m):
        if len(out) >= count:
            break
        if vec not in used:
            out.append(vec)
    return out


def _vector_edges(U: Sequence[int], V: Sequence[int], b: int) -> dict:
    edge = {}
    for y, vec in zip(V, _distinct_vectors(len(U), b, len(V))):
        for i, x in enumerate(U):
            edge[(x, y)] = vec[i]
    return edge


def _bipartite_candidate(G: Graph, U: list[int], V: list[int], kind: Kind, k: int,
                         b: int, uu_colour: int | None = None) -> Colouring | None:
    if kind.coloured_elements == "vertices":
        return _build(G, kind, k)
    uu = {}
    if uu_colour is not None:
        uu = {(x, y): uu_colour for x, y in itertools.combinations(U, 2) if G.has_edge(x, y)}
    if kind.coloured_elements == "edges" and k == b:
        return _build(G, kind, k, edge={**_vector_edges(U, V, b), **uu})
    if kind.coloured_elements == "both" and k == b + 1:
        return _build(G, kind, k, edge={**_vector_edges(U, V, b), **uu}, vertex={v: b + 1 for v in range(G.n)})
    if uu_colour is not None or len(U) < 2 or len(V) < 2:
        return None
    # palette smaller than the vector scheme needs: route through one special vertex
    x = V[0]
    edge = {}
    for y in V:
        first, rest = (3, 4) if y == x else (1, 2)
        edge[(U[0], y)] = first
        for u in U[1:]:
            edge[(u, y)] = rest
    if kind is Kind.RC and k == 4:
        return _build(G, kind, k, edge=edge)
    if kind is Kind.TRC and k == 7:
        vertex = {v: 7 for v in V}
        vertex.update({u: 5 for u in U})
        vertex.update({x: 6, U[1]: 7})
        return _build(G, kind, k, edge=edge, vertex=vertex)
    return None


def _candidate(desc: FamilyDescriptor, G: Graph, kind: Kind, k: int) -> Colouring | None:
    p = desc.params
    if desc.family == "tree":
        return _tree_candidate(G, kind, k)
    if desc.family == "complete":
        return _build(G, kind, k)
    if desc.family == "cycle":
        return _cycle_candidate(G, p[0], kind, k)
    if desc.family == "wheel":
        return _wheel_candidate(G, p[0], kind, k)
    if desc.family == "complete_bipartite":
        m, n = p
        if m == 1:
            return _tree_candidate(G, kind, k)
        return _bipartite_candidate(G, list(range(m)), list(range(m, m + n)), kind, k, ceil_root(n, m))
    m, n = desc.m_sum, p[-1]
    if n == 1:
        return _build(G, kind, k)
    if m > n:
        return _build(G, kind, k) if kind.coloured_elements == "vertices" else None
    return _bipartite_candidate(G, list(range(m)), list(range(m, m + n)), kind, k, ceil_root(n, m), uu_colour=1)


def family_witness(desc: FamilyDescriptor, kind: Kind, budget=None, *, search: bool = True) -> Colouring:
    """A verified colouring whose palette is exactly the family value."""
    from .exact import Budget, decide_k

    G = family_graph(desc)
    k = family_value(desc, kind)
    cand = _candidate(desc, G, kind, k)
    if cand is not None and check_connectivity(G, cand, kind):
        return cand
    if not search:
        raise WitnessNotFound(f"{desc} {kind}: no direct colouring and search disabled")
    why = "has no direct colouring" if cand is None else "direct colouring failed"
    warnings.warn(f"{desc} {kind}: {why}, searching", WitnessSearchFallback, stacklevel=2)
    d = decide_k(G, kind, k, budget or Budget())
    if not d.feasible:
        raise WitnessNotFound(f"{desc} {kind}: search at k={k} returned {d.verdict.value}")
    return d.witness


def has_direct_witness(desc: FamilyDescriptor, kind: Kind) -> bool:
    """Whether the direct scheme (no search) yields a verified colouring."""
    G = family_graph(desc)
    cand = _candidate(desc, G, kind, family_value(desc, kind))
    return cand is not None and check_connectivity(G, cand, kind)


# ---------------------------------------------------------------------------
# tables


def cycle_table_rows() -> list[tuple[str, list[tuple[int, int]]]]:
    return [
        ("rvc", sorted(CYCLE_RVC.items())),
        ("srvc", sorted(CYCLE_SRVC.items())),
        ("trc", sorted(CYCLE_TRC.items())),
        ("strc", sorted(CYCLE_TRC.items())),
    ]


def formula_rows(max_n: int = 12) -> list[tuple[str, str, tuple[int, ...], int]]:
    """``(family, param, params, value)`` rows for the closed-form families."""
    rows = []
    for n in range(3, max_n + 1):
        for kind, v in _wheel_values(n).items():
            rows.append(("wheel", kind.value, (n,), v))
    for m in (2, 3):
        for n in range(m, max_n + 1):
            for kind, v in _bipartite_values(m, n).items():
                rows.append(("complete_bipartite", kind.value, (m, n), v))
    for sizes in ((1, 1, 1), (1, 1, 2), (1, 1, 4), (1, 2, 2), (2, 2, 2), (1, 1, 9), (1, 1, 10)):
        for kind, v in _multipartite_values(sizes).items():
            rows.append(("complete_multipartite", kind.value, sizes, v))
    return rows


__all__ = [
    "ALL_KINDS", "FamilyDescriptor", "OutOfRange", "WitnessNotFound", "WitnessSearchFallback",
    "ceil_root", "cycle_table_rows", "family_graph", "family_value", "family_values",
    "family_witness", "formula_rows", "has_direct_witness",
]
