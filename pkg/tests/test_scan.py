import pytest
from hypothesis import given, settings

from oracles import brute_force_value
from rainbowconn.colouring import ALL_KINDS, Kind
from rainbowconn.constructions import ConstructionDescriptor, make_construction
from rainbowconn.exact import Budget
from rainbowconn.graph_core import Graph, cycle_graph, path_graph, stats
from rainbowconn.graphio import to_graph6
from rainbowconn.scan import (
    confirm_nonmonotone,
    find_nonmonotone_pair,
    graph6_source,
    invariant_rules,
    labelled_source,
    scan_conjecture,
    scan_invariants,
)
from strategies import connected_graphs


@settings(max_examples=40)
@given(connected_graphs(max_n=5))
def test_rules_hold_on_oracle_values(G):
    # rules evaluated on values from the independent oracle, not the solver
    values = {k: brute_force_value(G, k.value)[0] for k in ALL_KINDS}
    failed = [name for name, ok in invariant_rules(stats(G), values) if not ok]
    assert not failed


def test_rules_catch_a_planted_violation():
    G = cycle_graph(5)
    values = {Kind.RC: 3, Kind.SRC: 3, Kind.RVC: 1, Kind.SRVC: 1, Kind.TRC: 3, Kind.STRC: 3}
    assert all(ok for _, ok in invariant_rules(stats(G), values))
    values[Kind.RC] = 1
    failed = {name for name, ok in invariant_rules(stats(G), values) if not ok}
    assert "edge_chain" in failed and "complete_equivalences" in failed


def test_scan_small_orders():
    report = scan_invariants(max_n=4)
    assert report.ok and report.graphs_checked == 1 + 4 + 38
    assert report.classes_computed >= 1 + 2 + 6


def test_scan_reads_graph6(tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("\n".join(to_graph6(G) for G in (path_graph(4), cycle_graph(5), Graph(3, [(0, 1)]))) + "\n")
    report = scan_invariants(graph6_source(f), max_n=5)
    assert report.ok and report.graphs_checked == 2    # the disconnected graph is skipped


def test_scan_reports_incomplete_budget():
    report = scan_invariants(labelled_source(4, min_n=4), max_n=4, budget=Budget(max_nodes=0))
    assert report.incomplete and not report.ok and report.skipped


def test_conjecture_scan_n6():
    report = scan_conjecture(max_n=6)
    assert report.ok and report.graphs_checked == 1 + 4 + 38 + 728 + 26704


@pytest.mark.parametrize("kind", [Kind.SRC, Kind.SRVC, Kind.STRC])
def test_no_small_nonmonotone_pair(kind):
    res = find_nonmonotone_pair(kind, 5)
    assert res.pair is None and not res.incomplete and res.graphs_checked == 1 + 2 + 6 + 21


def test_nonmonotone_needs_strong_kind():
    with pytest.raises(ValueError):
        find_nonmonotone_pair(Kind.RC, 4)


def test_confirm_figure_pair():
    bundle = make_construction(ConstructionDescriptor.of("figure1a"))
    conf = confirm_nonmonotone(bundle, Kind.SRC, exact_g=True)
    assert (conf.h_lower, conf.h_upper, conf.h_exact) == (4, 4, 4)
    assert conf.holds and conf.g_value == 5


@pytest.mark.slow
def test_invariant_scan_n6():
    report = scan_invariants(max_n=6)
    assert report.ok, report.violations[:3]
