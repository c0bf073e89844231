"""Exhaustive sources of small connected graphs.

Labelled graphs on ``n`` vertices are indexed by bitmasks over the pairs
``(i, j)``, ``i < j``, in lexicographic order.  Isomorphism classes are
found by taking the minimum mask over all vertex permutations, vectorised
over every mask at once (feasible for ``n <= 6``).
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

import numpy as np

from .graph_core import Graph


def pair_list(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = pair_list(n)
    return Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def mask_of(G: Graph) -> int:
    idx = {p: i for i, p in enumerate(pair_list(G.n))}
    return sum(1 << idx[e] for e in G.edges)


@lru_cache(maxsize=None)
def _connected_flags(n: int) -> np.ndarray:
    pairs = pair_list(n)
    total = 1 << len(pairs)
    masks = np.arange(total, dtype=np.int64)
    # reach[v] is a bitmask of vertices reached from vertex 0
    reach = np.ones(total, dtype=np.int64)
    for _ in range(n):
        new = reach.copy()
        for i, (a, b) in enumerate(pairs):
            has = (masks >> i) & 1 == 1
            ra = (reach >> a) & 1 == 1
            rb = (reach >> b) & 1 == 1
            new |= np.where(has & ra, 1 << b, 0)
            new |= np.where(has & rb, 1 << a, 0)
        reach = new
    return reach == (1 << n) - 1


@lru_cache(maxsize=None)
def canonical_masks(n: int) -> np.ndarray:
    """``canon[mask]`` = least mask isomorphic to ``mask``."""
    pairs = pair_list(n)
    P = len(pairs)
    total = 1 << P
    masks = np.arange(total, dtype=np.int64)
    index = {p: i for i, p in enumerate(pairs)}
    canon = masks.copy()
    lo_bits = min(P, 8)
    lo = masks[: 1 << lo_bits] if P else masks
    for perm in permutations(range(n)):
        target = [index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs]
        # byte-wise lookup tables for the bit permutation
        out = np.zeros(total, dtype=np.int64)
        for start in range(0, P, lo_bits):
            chunk = target[start:start + lo_bits]
            table = np.zeros(1 << len(chunk), dtype=np.int64)
            for j, t in enumerate(chunk):
                table |= ((lo[: 1 << len(chunk)] >> j) & 1) << t
            out |= table[(masks >> start) & ((1 << len(chunk)) - 1)]
        np.minimum(canon, out, out=canon)
    return canon


def labelled_connected_masks(n: int) -> np.ndarray:
    if n <= 1:
        return np.zeros(1, dtype=np.int64)
    return np.nonzero(_connected_flags(n))[0]


def labelled_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labelled graph on ``n`` vertices (mask order)."""
    for mask in labelled_connected_masks(n):
        yield graph_from_mask(n, int(mask))


def connected_classes(n: int) -> list[int]:
    """Canonical masks of the connected isomorphism classes on ``n`` vertices."""
    if n <= 1:
        return [0]
    canon = canonical_masks(n)
    conn = labelled_connected_masks(n)
    return sorted(set(int(x) for x in canon[conn]))


def canonical_key(G: Graph) -> tuple[int, int]:
    if G.n > 6:
        raise ValueError("vectorised canonical keys are limited to n <= 6")
    if G.n <= 1:
        return (G.n, 0)
    return (G.n, int(canonical_masks(G.n)[mask_of(G)]))
