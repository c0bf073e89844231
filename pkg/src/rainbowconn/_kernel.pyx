# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled branch-and-bound kernel; same contract as ``_pysearch.search``."""
import time

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int32_t

cdef enum:
    EXHAUSTED = 0
    FOUND = 1
    BUDGET = 2
    CLOCK_EVERY = 4096

MAX_COLOURS = 64


cdef class _State:
    cdef int32_t[::1] ptr
    cdef int32_t[::1] idx
    cdef int32_t[::1] owner
    cdef int32_t[::1] alive
    cdef uint64_t[::1] mask
    cdef int32_t[::1] dead
    cdef char[::1] flag
    cdef int32_t[::1] colours
    cdef int E, n_seeds, k
    cdef long long nodes, node_limit
    cdef double deadline
    cdef object leaf_check

    cdef inline bint assign(self, int i, int c):
        cdef uint64_t bit = (<uint64_t>1) << (c - 1)
        cdef int s, p, q
        cdef bint ok = True
        for s in range(self.ptr[i], self.ptr[i + 1]):
            p = self.idx[s]
            if self.mask[p] & bit:
                self.flag[s] = 1
                self.dead[p] += 1
                if self.dead[p] == 1:
                    q = self.owner[p]
                    self.alive[q] -= 1
                    if self.alive[q] == 0:
                        ok = False
            else:
                self.flag[s] = 0
                self.mask[p] |= bit
        return ok

    cdef inline void unassign(self, int i, int c):
        cdef uint64_t bit = (<uint64_t>1) << (c - 1)
        cdef int s, p
        for s in range(self.ptr[i], self.ptr[i + 1]):
            p = self.idx[s]
            if self.flag[s]:
                self.dead[p] -= 1
                if self.dead[p] == 0:
                    self.alive[self.owner[p]] += 1
            else:
                self.mask[p] &= ~bit

    cdef int rec(self, int i, int maxc) except -1:
        cdef int c, lo, hi, r, nmax
        if i == self.E:
            if self.leaf_check is None or self.leaf_check(np.asarray(self.colours)):
                return FOUND
            return EXHAUSTED
        self.nodes += 1
        if self.nodes > self.node_limit:
            return BUDGET
        if self.deadline > 0 and self.nodes % CLOCK_EVERY == 0 and time.monotonic() > self.deadline:
            return BUDGET
        if i < self.n_seeds:
            lo = i + 1
            hi = i + 1
        else:
            lo = 1
            hi = maxc + 1
            if hi > self.k:
                hi = self.k
        for c in range(lo, hi + 1):
            self.colours[i] = c
            if self.assign(i, c):
                nmax = c if c > maxc else maxc
                r = self.rec(i + 1, nmax)
                if r == FOUND:
                    return FOUND
                if r == BUDGET:
                    self.unassign(i, c)
                    return BUDGET
            self.unassign(i, c)
        self.colours[i] = 0
        return EXHAUSTED


def search(ep_ptr, ep_idx, path_pair, pair_alive, int n_seeds, int k, long long node_limit, deadline,
           leaf_check=None):
    """Return ``(status, colours, nodes)``; ``colours`` is per search position."""
    if k > MAX_COLOURS:
        raise ValueError(f"compiled kernel supports at most {MAX_COLOURS} colours")
    cdef _State st = _State()
    st.ptr = np.ascontiguousarray(ep_ptr, dtype=np.int32)
    st.idx = np.ascontiguousarray(ep_idx, dtype=np.int32)
    st.owner = np.ascontiguousarray(path_pair, dtype=np.int32)
    st.alive = np.array(pair_alive, dtype=np.int32, copy=True)
    cdef Py_ssize_t P = len(path_pair)
    st.mask = np.zeros(P, dtype=np.uint64)
    st.dead = np.zeros(P, dtype=np.int32)
    st.flag = np.zeros(max(len(ep_idx), 1), dtype=np.int8)
    st.E = len(ep_ptr) - 1
    st.colours = np.zeros(st.E, dtype=np.int32)
    st.n_seeds = n_seeds
    st.k = k
    st.nodes = 0
    st.node_limit = node_limit
    st.deadline = deadline if deadline is not None else 0.0
    st.leaf_check = leaf_check
    if n_seeds > k:
        return EXHAUSTED, [0] * st.E, 0
    cdef int status = st.rec(0, 0)
    return status, [int(x) for x in st.colours], st.nodes
