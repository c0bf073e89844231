"""Exact decision and minimisation for the six parameters.

``decide_k`` asks whether a palette of ``k`` colours suffices; it compiles the
instance (:mod:`.problem`) and hands it to the search kernel (:mod:`.kernel`).
``compute_parameter`` walks ``k`` upward from the structural lower bound.
Every witness is re-checked by the verifier before it is returned.
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

from .bounds import bounds
from .colouring import Colouring, Kind, _PairChecker, check_connectivity, find_violation
from .graph_core import Graph, NotConnected
from .kernel import BUDGET, FOUND, run_search
from .problem import CandidateSource, compile_problem, forced_distinct


@dataclass
class Budget:
    """Wall-clock and node limits, whichever is hit first."""

    max_ms: float | None = 60_000.0
    max_nodes: int = 10**8

    def deadline(self, start: float) -> float | None:
        return None if self.max_ms is None else start + self.max_ms / 1000.0


class Verdict(str, enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    BUDGET_EXCEEDED = "budget_exceeded"


class Status(str, enum.Enum):
    EXACT = "exact"
    BOUNDS_ONLY = "bounds_only"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass
class Decision:
    kind: Kind
    k: int
    verdict: Verdict
    witness: Colouring | None = None
    nodes: int = 0
    elapsed_ms: float = 0.0
    reason: str = ""

    @property
    def feasible(self) -> bool:
        return self.verdict is Verdict.FEASIBLE


@dataclass
class ExactResult:
    kind: Kind
    value: int | None
    witness: Colouring | None
    status: Status
    elapsed_ms: float
    nodes: int
    lower: int
    upper: int
    lower_sources: tuple[str, ...] = ()
    upper_sources: tuple[str, ...] = ()
    decisions: list[Decision] = field(default_factory=list, repr=False)


class WitnessRejected(RuntimeError):
    """The verifier rejected a colouring the search reported as feasible."""


def _zero_colours(G: Graph, kind: Kind) -> Decision:
    # no colour available: only pairs joined by an element-free path survive
    ok = G.n <= 1 or (kind.coloured_elements == "vertices" and G.m == G.n * (G.n - 1) // 2)
    if ok:
        return Decision(kind, 0, Verdict.FEASIBLE, Colouring.for_graph(G, kind, 0))
    return Decision(kind, 0, Verdict.INFEASIBLE, reason="a pair needs a coloured element")


def _colouring_from_search(G: Graph, kind: Kind, k: int, order, colours) -> Colouring:
    per_element = [1] * ((G.m if kind.colours_edges else 0) + (G.n if kind.colours_vertices else 0))
    for pos, e in enumerate(order):
        per_element[e] = int(colours[pos])
    if kind.coloured_elements == "edges":
        return Colouring.for_graph(G, kind, k, edge_colours=per_element)
    if kind.coloured_elements == "vertices":
        return Colouring.for_graph(G, kind, k, vertex_colours=per_element)
    return Colouring.for_graph(G, kind, k, edge_colours=per_element[: G.m], vertex_colours=per_element[G.m:])


def decide_k(
    G: Graph,
    kind: Kind,
    k: int,
    budget: Budget | None = None,
    canonical: bool = True,
    *,
    seed: bool = True,
    backend: str | None = None,
    source: CandidateSource | None = None,
    _deadline: float | None = None,
) -> Decision:
    """Is there a ``kind`` colouring of ``G`` with palette ``1..k``?

    The search is sequential and colour-ordered, so the witness is always the
    lexicographically least feasible assignment in search order; ``canonical``
    is accepted for interface compatibility.
    """
    if not G.is_connected():
        raise NotConnected("decide_k needs a connected graph")
    budget = budget or Budget()
    t0 = time.monotonic()
    if k < 0:
        return Decision(kind, k, Verdict.INFEASIBLE, reason="negative palette")
    if k == 0:
        return _zero_colours(G, kind)
    if seed:
        forced = forced_distinct(G, kind)
        if len(forced) > k:
            return Decision(kind, k, Verdict.INFEASIBLE,
                            reason=f"{len(forced)} forced-distinct elements exceed {k} colours")
    prob = compile_problem(G, kind, k, source=source, seed=seed)
    if prob.infeasible_pair is not None:
        u, v = prob.infeasible_pair
        return Decision(kind, k, Verdict.INFEASIBLE, nodes=0,
                        elapsed_ms=(time.monotonic() - t0) * 1000,
                        reason=f"pair ({u}, {v}) has no candidate path short enough")

    leaf_check = None
    if prob.overflow_pairs:
        def leaf_check(colours):
            col = _colouring_from_search(G, kind, k, prob.order, colours)
            checker = _PairChecker(G, col, kind)
            return all(checker.pair_ok(u, v) for u, v in prob.overflow_pairs)

    deadline = _deadline if _deadline is not None else budget.deadline(t0)
    status, colours, nodes = run_search(
        prob.ep_ptr, prob.ep_idx, prob.path_pair, prob.pair_alive, prob.n_seeds, k,
        budget.max_nodes, deadline, leaf_check, backend=backend,
    )
    elapsed = (time.monotonic() - t0) * 1000
    if status == BUDGET:
        return Decision(kind, k, Verdict.BUDGET_EXCEEDED, nodes=nodes, elapsed_ms=elapsed, reason="budget exhausted")
    if status != FOUND:
        return Decision(kind, k, Verdict.INFEASIBLE, nodes=nodes, elapsed_ms=elapsed, reason="search exhausted")
    witness = _colouring_from_search(G, kind, k, prob.order, colours)
    bad = find_violation(G, witness, kind)
    if bad is not None:
        raise WitnessRejected(f"{kind} witness at k={k} fails on pair ({bad.u}, {bad.v})")
    return Decision(kind, k, Verdict.FEASIBLE, witness, nodes, elapsed)


def compute_parameter(
    G: Graph,
    kind: Kind,
    budget: Budget | None = None,
    canonical: bool = True,
    *,
    seed: bool = True,
    backend: str | None = None,
    src_exact: int | None = None,
    lower: int | None = None,
) -> ExactResult:
    """Exact value of ``kind`` with a verified witness, or the best bracket."""
    budget = budget or Budget()
    t0 = time.monotonic()
    rep = bounds(G, kind, src_exact=src_exact)
    lo, hi = rep.lower, rep.upper
    if lower is not None:
        lo = max(lo, lower)
    if budget.max_nodes == 0:
        return ExactResult(kind, None, None, Status.BOUNDS_ONLY, 0.0, 0, lo, hi, rep.lower_sources, rep.upper_sources)
    deadline = budget.deadline(t0)
    source = CandidateSource(G, kind)
    nodes = 0
    decisions = []
    proven_lo = lo
    for k in range(lo, hi + 1):
        remaining = Budget(budget.max_ms, max(budget.max_nodes - nodes, 1))
        d = decide_k(G, kind, k, remaining, canonical, seed=seed, backend=backend, source=source, _deadline=deadline)
        decisions.append(d)
        nodes += d.nodes
        elapsed = (time.monotonic() - t0) * 1000
        if d.verdict is Verdict.FEASIBLE:
            return ExactResult(kind, k, d.witness, Status.EXACT, elapsed, nodes, k, k,
                               rep.lower_sources, rep.upper_sources, decisions)
        if d.verdict is Verdict.BUDGET_EXCEEDED:
            return ExactResult(kind, None, None, Status.BUDGET_EXCEEDED, elapsed, nodes, proven_lo, hi,
                               rep.lower_sources, rep.upper_sources, decisions)
        proven_lo = k + 1
    raise RuntimeError(f"{kind}: no colouring within the upper bound {hi}; bounds or search are wrong")


def compute_all(
    G: Graph,
    kinds=None,
    budget: Budget | None = None,
    canonical: bool = True,
    **kw,
) -> dict[Kind, ExactResult]:
    """Compute several parameters; SRC is done first so STRC can use it."""
    from .colouring import ALL_KINDS

    kinds = list(kinds or ALL_KINDS)
    order = sorted(kinds, key=lambda k: 0 if k is Kind.SRC else 1)
    out: dict[Kind, ExactResult] = {}
    src = None
    for kind in order:
        res = compute_parameter(G, kind, budget, canonical, src_exact=src if kind is Kind.STRC else None, **kw)
        if kind is Kind.SRC and res.status is Status.EXACT:
            src = res.value
        out[kind] = res
    return {k: out[k] for k in kinds}


def certifies(G: Graph, res: ExactResult) -> bool:
    """Re-check an exact result's witness against its value."""
    return (
        res.status is Status.EXACT
        and res.witness is not None
        and res.witness.k == res.value
        and check_connectivity(G, res.witness, res.kind)
    )
