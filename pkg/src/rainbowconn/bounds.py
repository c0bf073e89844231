"""Structural lower and upper bounds for the six parameters."""
from __future__ import annotations

from dataclasses import dataclass

from .colouring import Colouring, Kind
from .graph_core import Graph, GraphStats, NotConnected, stats


@dataclass(frozen=True)
class BoundsReport:
    kind: Kind
    lower: int
    upper: int
    lower_sources: tuple[str, ...]
    upper_sources: tuple[str, ...]
    exact: int | None = None
    witness: Colouring | None = None


def _graph_stats(G: Graph) -> GraphStats:
    if G.n < 2:
        raise ValueError("bounds need at least two vertices")
    if not G.is_connected():
        raise NotConnected("bounds are defined for connected graphs only")
    return stats(G)


def _best(candidates: list[tuple[int, str]], pick=max) -> tuple[int, tuple[str, ...]]:
    value = pick(v for v, _ in candidates)
    return value, tuple(dict.fromkeys(tag for v, tag in candidates if v == value and tag))


def lower_bound(G: Graph, kind: Kind, st: GraphStats | None = None) -> tuple[int, tuple[str, ...]]:
    st = st or _graph_stats(G)
    if kind.coloured_elements == "edges":
        return _best([(st.diam, "diameter"), (st.b, "bridges"), (1, "")])
    if kind.coloured_elements == "vertices":
        return _best([(st.diam - 1, "diameter"), (st.c, "cut_vertices"), (0, "")])
    cands = [(2 * st.diam - 1, "diameter"), (st.b + st.c, "bridges"), (st.b + st.c, "cut_vertices"), (1, "")]
    if not st.is_complete:
        cands.append((3, "diameter"))
    return _best(cands)


def upper_bound(
    G: Graph,
    kind: Kind,
    st: GraphStats | None = None,
    src_exact: int | None = None,
) -> tuple[int, tuple[str, ...]]:
    """Upper bound; for STRC a known exact ``src`` tightens diameter-2 graphs."""
    st = st or _graph_stats(G)
    n, m, q = st.n, st.m, st.q
    if kind is Kind.RC:
        return n - 1, ("spanning_tree",)
    if kind is Kind.SRC:
        return m, ("trivial_m",)
    if kind.coloured_elements == "vertices":
        if st.is_complete:
            return 0, ("minimum_n2q",)
        return min(n - 2, q), ("minimum_n2q",)
    if kind is Kind.TRC:
        return min(2 * n - 3, n - 1 + q), ("spanning_tree",)
    cands = [(min(m + n - 2, m + q), "srvc_plus_m")]
    if src_exact is not None and st.diam == 2:
        cands.append((src_exact + 1, "diam2_src_plus_1"))
    return _best(cands, pick=min)


def bounds(G: Graph, kind: Kind, src_exact: int | None = None) -> BoundsReport:
    st = _graph_stats(G)
    lo, lo_src = lower_bound(G, kind, st)
    hi, hi_src = upper_bound(G, kind, st, src_exact)
    return BoundsReport(kind, lo, hi, lo_src, hi_src)
