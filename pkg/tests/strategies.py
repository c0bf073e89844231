"""Hypothesis strategies for small connected graphs."""
from hypothesis import strategies as st

from rainbowconn.graph_core import Graph


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 6):
    n = draw(st.integers(min_n, max_n))
    # random spanning tree, then extra edges
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    others = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if others:
        edges |= set(draw(st.lists(st.sampled_from(others), unique=True, max_size=len(others))))
    perm = draw(st.permutations(range(n)))
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


@st.composite
def graphs(draw, max_n: int = 7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)
