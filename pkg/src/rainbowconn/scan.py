"""Exhaustive scans of small graphs against the general inequalities.

All six parameters are computed exactly for each graph (cached per
isomorphism class) and every rule of :func:`invariant_rules` is evaluated.
Rules are isomorphism invariant, so each class is checked once and reported through
its first labelled representative.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .colouring import ALL_KINDS, Kind
from .constructions import ConstructionBundle
from .enumeration import canonical_key, labelled_connected_graphs
from .exact import Budget, Status, compute_all, decide_k
from .bounds import lower_bound
from .graph_core import Graph, GraphStats, canonical_form, stats

Values = dict[Kind, int]


# ---------------------------------------------------------------------------
# graph sources


def labelled_source(max_n: int, min_n: int = 2) -> Iterator[Graph]:
    """All connected labelled graphs with ``min_n <= n <= max_n``."""
    for n in range(min_n, max_n + 1):
        yield from labelled_connected_graphs(n)


def graph6_source(path) -> Iterator[Graph]:
    from .graphio import iter_graph6

    with open(path) as fh:
        yield from iter_graph6(fh)


def class_key(G: Graph):
    if G.n <= 6:
        return canonical_key(G)
    if G.n <= 8:
        return canonical_form(G)
    return (G.n, G.edges)


# ---------------------------------------------------------------------------
# rules


def _chain_rules(st: GraphStats, v: Values) -> list[tuple[str, bool]]:
    n, m, q, d = st.n, st.m, st.q, st.diam
    rc, src, rvc, srvc, trc, strc = (v[k] for k in ALL_KINDS)
    return [
        ("edge_chain", d <= rc <= src <= m),
        ("vertex_chain", d - 1 <= rvc <= srvc <= min(n - 2, q)),
        ("total_chain", 2 * d - 1 <= trc <= strc <= srvc + m <= min(m + n - 2, m + q)),
        ("strc_le_src_plus_q", strc <= src + q),
        ("spanning_tree_rc", rc <= n - 1),
        ("spanning_tree_trc", trc <= min(2 * n - 3, n - 1 + q)),
        ("diam2_strc_le_src_plus_1", d != 2 or strc <= src + 1),
        ("bridges_rc", rc >= st.b),
        ("cut_vertices_rvc", rvc >= st.c),
        ("bridges_cut_vertices_trc", trc >= st.b + st.c),
        ("trc_ge_max_rc_rvc", trc >= max(rc, rvc)),
        ("strc_ge_max_src_srvc", strc >= max(src, srvc)),
    ]


def _small_value_rules(st: GraphStats, v: Values) -> list[tuple[str, bool]]:
    rc, src, rvc, srvc, trc, strc = (v[k] for k in ALL_KINDS)
    complete = [st.is_complete, st.diam == 1, rc == 1, src == 1, rvc == 0, srvc == 0, trc == 1, strc == 1]
    c_i = (rc == 2, src == 2)
    c_ii = (rvc == 1, srvc == 1, st.diam == 2)
    c_iv = (trc == 3, strc == 3)
    c_v = (trc == 4, strc == 4)
    return [
        ("complete_equivalences", len(set(complete)) == 1),
        ("not_complete_iff_trc_ge_3", (not st.is_complete) == (strc >= trc >= 3)),
        ("rc2_iff_src2", len(set(c_i)) == 1),
        ("rvc1_iff_srvc1_iff_diam2", len(set(c_ii)) == 1),
        ("rvc2_iff_srvc2", (rvc == 2) == (srvc == 2)),
        ("trc3_iff_strc3", len(set(c_iv)) == 1),
        ("trc4_iff_strc4", len(set(c_v)) == 1),
        ("rc2_implies_trc3", not c_i[0] or c_iv[0]),
        ("small_values_imply_diam2", not (c_i[0] or c_iv[0] or c_v[0]) or c_ii[2]),
    ]


def _conjecture_rules(st: GraphStats, v: Values) -> list[tuple[str, bool]]:
    return [
        ("conjecture_src_le_n_minus_1", v[Kind.SRC] <= st.n - 1),
        ("conjecture_strc_spanning_tree", v[Kind.STRC] <= min(2 * st.n - 3, st.n - 1 + st.q)),
    ]


def invariant_rules(st: GraphStats, v: Values) -> list[tuple[str, bool]]:
    return _chain_rules(st, v) + _small_value_rules(st, v)


MONOTONE_KINDS = (Kind.RC, Kind.RVC, Kind.TRC)


# ---------------------------------------------------------------------------
# reports


@dataclass
class ScanViolation:
    rule: str
    graph: Graph
    values: dict[str, int]
    detail: str = ""


@dataclass
class ScanReport:
    graphs_checked: int = 0
    classes_computed: int = 0
    violations: list[ScanViolation] = field(default_factory=list)
    incomplete: bool = False
    skipped: list[Graph] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations and not self.incomplete


class _ValueCache:
    def __init__(self, budget: Budget | None, kinds=ALL_KINDS):
        self.budget = budget
        self.kinds = kinds
        self.data: dict = {}
        self.computed = 0

    def get(self, G: Graph) -> Values | None:
        key = class_key(G)
        if key not in self.data:
            res = compute_all(G, self.kinds, self.budget)
            if all(r.status is Status.EXACT for r in res.values()):
                self.data[key] = {k: r.value for k, r in res.items()}
            else:
                self.data[key] = None
            self.computed += 1
        return self.data[key]


def _deletions(G: Graph) -> Iterator[tuple[tuple[int, int], Graph]]:
    for e in G.edges:
        H = G.without_edge(*e)
        if H.is_connected():
            yield e, H


def _scan(source: Iterable[Graph], max_n: int, budget: Budget | None,
          rules: Callable[[GraphStats, Values], list[tuple[str, bool]]], monotone: bool) -> ScanReport:
    t0 = time.monotonic()
    report = ScanReport()
    cache = _ValueCache(budget)
    seen: set = set()
    for G in source:
        if G.n > max_n or G.n < 2 or not G.is_connected():
            continue
        report.graphs_checked += 1
        key = class_key(G)
        if key in seen:
            continue
        seen.add(key)
        vals = cache.get(G)
        if vals is None:
            report.incomplete = True
            report.skipped.append(G)
            continue
        st = stats(G)
        named = {k.value: x for k, x in vals.items()}
        for rule, ok in rules(st, vals):
            if not ok:
                report.violations.append(ScanViolation(rule, G, named))
        if monotone:
            for e, H in _deletions(G):
                hv = cache.get(H)
                if hv is None:
                    report.incomplete = True
                    continue
                for kind in MONOTONE_KINDS:
                    if vals[kind] > hv[kind]:
                        report.violations.append(ScanViolation(
                            f"{kind.value}_spanning_monotone", G, named,
                            f"{kind.value} is {vals[kind]} but {hv[kind]} after removing edge {e}"))
    report.classes_computed = cache.computed
    report.elapsed_ms = (time.monotonic() - t0) * 1000
    return report


def scan_invariants(source: Iterable[Graph] | None = None, max_n: int = 5,
                    budget: Budget | None = None, conjecture: bool = True) -> ScanReport:
    """Check the general inequalities, small-value equivalences and monotonicity."""
    source = labelled_source(max_n) if source is None else source
    rules = (lambda st, v: invariant_rules(st, v) + _conjecture_rules(st, v)) if conjecture else invariant_rules
    return _scan(source, max_n, budget, rules, monotone=True)


def scan_conjecture(source: Iterable[Graph] | None = None, max_n: int = 6,
                    budget: Budget | None = None) -> ScanReport:
    """Check only ``src <= n-1`` and ``strc <= min(2n-3, n-1+q)``."""
    source = labelled_source(max_n) if source is None else source
    return _scan(source, max_n, budget, _conjecture_rules, monotone=False)


# ---------------------------------------------------------------------------
# strong parameters under edge deletion


@dataclass
class NonmonotonePair:
    kind: Kind
    G: Graph
    H: Graph
    value_G: int
    value_H: int


@dataclass
class NonmonotoneSearch:
    pair: NonmonotonePair | None
    graphs_checked: int
    incomplete: bool


def find_nonmonotone_pair(kind: Kind, max_n: int, budget: Budget | None = None,
                          source: Iterable[Graph] | None = None) -> NonmonotoneSearch:
    """First ``G`` and ``H = G - e`` with ``kind(G) > kind(H)``, if any."""
    if not kind.strong:
        raise ValueError("only the strong parameters can drop when an edge is added")
    cache = _ValueCache(budget, kinds=(kind,))
    source = labelled_source(max_n) if source is None else source
    seen: set = set()
    checked = 0
    incomplete = False
    for G in source:
        if G.n > max_n:
            continue
        key = class_key(G)
        if key in seen:
            continue
        seen.add(key)
        checked += 1
        gv = cache.get(G)
        if gv is None:
            incomplete = True
            continue
        for _, H in _deletions(G):
            hv = cache.get(H)
            if hv is None:
                incomplete = True
            elif gv[kind] > hv[kind]:
                return NonmonotoneSearch(NonmonotonePair(kind, G, H, gv[kind], hv[kind]), checked, incomplete)
    return NonmonotoneSearch(None, checked, incomplete)


@dataclass
class PairConfirmation:
    kind: Kind
    h_lower: int
    h_upper: int
    g_refuted_at: int
    g_infeasible: bool | None      # None: budget ran out
    g_value: int | None = None
    nodes: int = 0

    @property
    def h_exact(self) -> int | None:
        return self.h_lower if self.h_lower == self.h_upper else None

    @property
    def holds(self) -> bool:
        return bool(self.g_infeasible)


def confirm_nonmonotone(bundle: ConstructionBundle, kind: Kind, budget: Budget | None = None,
                        exact_g: bool = False) -> PairConfirmation:
    """Check a supplied pair: the bundled colouring bounds ``H`` from above,
    and the supergraph ``G`` is refuted at that palette size."""
    from .exact import compute_parameter

    H, G = bundle.graphs["H"], bundle.graphs["G"]
    col = bundle.proof_colourings[("figure", kind)]
    if bundle.verified.get(("figure", kind)) is not True:
        raise ValueError("the bundled colouring has not been verified")
    h_lo, _ = lower_bound(H, kind)
    d = decide_k(G, kind, col.k, budget)
    infeasible = None if d.verdict.value == "budget_exceeded" else not d.feasible
    conf = PairConfirmation(kind, h_lo, col.k, col.k, infeasible, nodes=d.nodes)
    if exact_g and infeasible:
        res = compute_parameter(G, kind, budget, lower=col.k + 1)
        conf.g_value = res.value
        conf.nodes += res.nodes
    return conf
