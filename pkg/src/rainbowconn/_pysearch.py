"""Pure-Python branch-and-bound kernel (fallback for the compiled one).

Elements are coloured in search order.  Each candidate path keeps a mask of
the colours seen on it and a count of repeats; a path with a repeat is dead.
A pair whose candidate paths are all dead refutes the partial assignment.
The first ``n_seeds`` positions are forced to colours ``1..n_seeds``; after
that a position may use colour ``c`` only if ``c <= 1 + max colour so far``.
"""
from __future__ import annotations

import sys
import time

FOUND, EXHAUSTED, BUDGET = 1, 0, 2
_CLOCK_EVERY = 1024


def search(ep_ptr, ep_idx, path_pair, pair_alive, n_seeds, k, node_limit, deadline, leaf_check=None):
    """Return ``(status, colours, nodes)``; ``colours`` is per search position."""
    E = len(ep_ptr) - 1
    ptr = [int(x) for x in ep_ptr]
    idx = [int(x) for x in ep_idx]
    owner = [int(x) for x in path_pair]
    alive = [int(x) for x in pair_alive]
    P = len(owner)
    mask = [0] * P
    dead = [0] * P
    flag = [False] * len(idx)
    colours = [0] * E
    state = {"nodes": 0, "budget": False}
    if n_seeds > k:
        return EXHAUSTED, colours, 0
    if E + 100 > sys.getrecursionlimit():
        sys.setrecursionlimit(E + 1000)

    def assign(i: int, c: int) -> bool:
        bit = 1 << (c - 1)
        ok = True
        for s in range(ptr[i], ptr[i + 1]):
            p = idx[s]
            if mask[p] & bit:
                flag[s] = True
                dead[p] += 1
                if dead[p] == 1:
                    q = owner[p]
                    alive[q] -= 1
                    if alive[q] == 0:
                        ok = False
            else:
                flag[s] = False
                mask[p] |= bit
        return ok

    def unassign(i: int, c: int) -> None:
        bit = 1 << (c - 1)
        for s in range(ptr[i], ptr[i + 1]):
            p = idx[s]
            if flag[s]:
                dead[p] -= 1
                if dead[p] == 0:
                    alive[owner[p]] += 1
            else:
                mask[p] &= ~bit

    def rec(i: int, maxc: int) -> int:
        if i == E:
            if leaf_check is None or leaf_check(colours):
                return FOUND
            return EXHAUSTED
        state["nodes"] += 1
        n = state["nodes"]
        if n > node_limit:
            return BUDGET
        if deadline is not None and n % _CLOCK_EVERY == 0 and time.monotonic() > deadline:
            return BUDGET
        if i < n_seeds:
            choices = range(i + 1, i + 2)
        else:
            choices = range(1, min(k, maxc + 1) + 1)
        for c in choices:
            colours[i] = c
            if assign(i, c):
                r = rec(i + 1, c if c > maxc else maxc)
                if r == FOUND:
                    return FOUND
                if r == BUDGET:
                    unassign(i, c)
                    return BUDGET
            unassign(i, c)
        colours[i] = 0
        return EXHAUSTED

    status = rec(0, 0)
    return status, colours, state["nodes"]
