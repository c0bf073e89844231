"""Compile a decision instance (graph, kind, palette size) into flat arrays.

Every unordered vertex pair becomes a set of candidate paths, each path the
tuple of coloured elements it would need to be rainbow.  The search kernel
only sees integers: search positions, path ids and pair ids.

Element ids: edge kinds use edge ids ``0..m-1``; vertex kinds use vertex ids;
total kinds use edge ids followed by ``m + v`` for vertex ``v``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .colouring import Kind
from .graph_core import Graph, bridges_and_cut_vertices, iter_bounded_paths, iter_geodesics

DEFAULT_PATH_CAP = 10_000


def n_elements(G: Graph, kind: Kind) -> int:
    return (G.m if kind.colours_edges else 0) + (G.n if kind.colours_vertices else 0)


def path_elements(G: Graph, path: tuple[int, ...], kind: Kind) -> tuple[int, ...]:
    out = []
    if kind.colours_edges:
        out.extend(G.edge_id(a, b) for a, b in zip(path, path[1:]))
    if kind.colours_vertices:
        off = G.m if kind.colours_edges else 0
        out.extend(off + x for x in path[1:-1])
    return tuple(out)


def forced_distinct(G: Graph, kind: Kind) -> list[int]:
    """Elements that every rainbow-connected colouring must colour pairwise distinctly."""
    br, cv = bridges_and_cut_vertices(G)
    out = []
    if kind.colours_edges:
        out.extend(G.edge_id(*e) for e in br)
    if kind.colours_vertices:
        off = G.m if kind.colours_edges else 0
        out.extend(off + v for v in cv)
    return out


def _drop_dominated(sets: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Remove element sets that contain another candidate of the same pair."""
    if len(sets) > 256:
        return sets
    fs = sorted(set(sets), key=lambda s: (len(s), s))
    kept: list[frozenset] = []
    out = []
    for s in fs:
        f = frozenset(s)
        if any(k <= f for k in kept):
            continue
        kept.append(f)
        out.append(s)
    return out


@dataclass
class PairCandidates:
    u: int
    v: int
    paths: list[tuple[int, ...]]
    overflow: bool = False


class CandidateSource:
    """Caches candidate paths per pair for one (graph, kind)."""

    def __init__(self, G: Graph, kind: Kind, path_cap: int = DEFAULT_PATH_CAP):
        self.G = G
        self.kind = kind
        self.path_cap = path_cap
        self._strong: list[PairCandidates] | None = None
        self._weak: dict[int, list[PairCandidates]] = {}

    def _collect(self, it, u, v) -> PairCandidates:
        paths = []
        overflow = False
        for p in it:
            if len(paths) >= self.path_cap:
                overflow = True
                break
            paths.append(path_elements(self.G, p, self.kind))
        return PairCandidates(u, v, paths, overflow)

    def pairs(self, k: int) -> list[PairCandidates]:
        G = self.G
        if self.kind.strong:
            if self._strong is None:
                self._strong = [
                    self._collect(iter_geodesics(G, u, v), u, v) for u in range(G.n) for v in range(u + 1, G.n)
                ]
            return self._strong
        cap = min(self.kind.length_cap(k), max(G.n - 1, 0))
        if cap not in self._weak:
            self._weak[cap] = [
                self._collect(iter_bounded_paths(G, u, v, cap), u, v) if G.dist[u, v] <= cap
                else PairCandidates(u, v, [])
                for u in range(G.n)
                for v in range(u + 1, G.n)
            ]
        return self._weak[cap]


@dataclass
class CompiledProblem:
    kind: Kind
    k: int
    n_elements: int
    order: list[int]                 # search position -> element id
    n_seeds: int
    fixed: list[int]                 # elements outside every candidate path
    ep_ptr: np.ndarray               # CSR: search position -> path ids
    ep_idx: np.ndarray
    path_pair: np.ndarray
    pair_alive: np.ndarray
    pairs: list[tuple[int, int]]
    overflow_pairs: list[tuple[int, int]] = field(default_factory=list)
    infeasible_pair: tuple[int, int] | None = None

    @property
    def n_paths(self) -> int:
        return len(self.path_pair)


def compile_problem(
    G: Graph,
    kind: Kind,
    k: int,
    source: CandidateSource | None = None,
    seed: bool = True,
) -> CompiledProblem:
    """Build the kernel arrays for deciding ``kind`` with ``k >= 1`` colours."""
    if k < 1:
        raise ValueError("compile_problem needs k >= 1")
    source = source or CandidateSource(G, kind)
    N = n_elements(G, kind)
    seeds = forced_distinct(G, kind) if seed else []

    paths: list[tuple[int, ...]] = []
    path_pair: list[int] = []
    pair_alive: list[int] = []
    pairs: list[tuple[int, int]] = []
    overflow: list[tuple[int, int]] = []
    infeasible = None
    for pc in source.pairs(k):
        usable = [p for p in pc.paths if len(p) <= k]
        if any(len(p) <= 1 for p in usable):
            continue
        if pc.overflow:
            overflow.append((pc.u, pc.v))
            continue
        if not usable:
            infeasible = (pc.u, pc.v)
            break
        usable = _drop_dominated(usable)
        q = len(pairs)
        pairs.append((pc.u, pc.v))
        pair_alive.append(len(usable))
        for p in usable:
            path_pair.append(q)
            paths.append(p)

    score = [0] * N
    for p in paths:
        for e in p:
            score[e] += 1
    seed_set = set(seeds)
    # overflow pairs are only checked at leaves, so every element must be searched
    searched = (lambda e: True) if overflow else (lambda e: score[e] > 0)
    rest = sorted((e for e in range(N) if searched(e) and e not in seed_set), key=lambda e: (-score[e], e))
    order = list(seeds) + rest
    pos = {e: i for i, e in enumerate(order)}
    fixed = [e for e in range(N) if e not in pos]

    buckets: list[list[int]] = [[] for _ in order]
    for pid, p in enumerate(paths):
        for e in p:
            buckets[pos[e]].append(pid)
    ep_ptr = np.zeros(len(order) + 1, dtype=np.int32)
    for i, b in enumerate(buckets):
        ep_ptr[i + 1] = ep_ptr[i] + len(b)
    ep_idx = np.fromiter((pid for b in buckets for pid in b), dtype=np.int32, count=int(ep_ptr[-1]))
    return CompiledProblem(
        kind=kind,
        k=k,
        n_elements=N,
        order=order,
        n_seeds=len(seeds),
        fixed=fixed,
        ep_ptr=ep_ptr,
        ep_idx=ep_idx,
        path_pair=np.asarray(path_pair, dtype=np.int32),
        pair_alive=np.asarray(pair_alive, dtype=np.int32),
        pairs=pairs,
        overflow_pairs=overflow,
        infeasible_pair=infeasible,
    )
