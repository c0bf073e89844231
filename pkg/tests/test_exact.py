import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_value, leaf_enumeration_feasible, naive_is_connected, colouring_dict
from rainbowconn import kernel
from rainbowconn.bounds import bounds, lower_bound, upper_bound
from rainbowconn.colouring import ALL_KINDS, Kind, check_connectivity
from rainbowconn.exact import Budget, Status, Verdict, certifies, compute_all, compute_parameter, decide_k
from rainbowconn.graph_core import Graph, NotConnected, complete_graph, cycle_graph, path_graph, star_graph
from rainbowconn.problem import CandidateSource, forced_distinct
from strategies import connected_graphs

kinds = st.sampled_from(ALL_KINDS)


# ---------------------------------------------------------------------------
# bounds


def test_bounds_on_paths():
    P = path_graph(6)
    assert bounds(P, Kind.RC).lower == 5 and bounds(P, Kind.RC).upper == 5
    assert bounds(P, Kind.RVC).lower == 4 and bounds(P, Kind.RVC).upper == 4
    assert bounds(P, Kind.TRC).lower == 9 and bounds(P, Kind.TRC).upper == 9


def test_bounds_reject_bad_graphs():
    with pytest.raises(ValueError):
        bounds(Graph(1), Kind.RC)
    with pytest.raises(NotConnected):
        bounds(Graph(3, [(0, 1)]), Kind.RC)


def test_strong_total_upper_uses_known_src_on_diameter_two():
    G = star_graph(3).with_edges([(1, 2)])
    hi, tags = upper_bound(G, Kind.STRC, src_exact=2)
    assert hi == 3 and "diam2_src_plus_1" in tags


@settings(max_examples=120)
@given(connected_graphs(max_n=6), kinds)
def test_bounds_bracket_the_brute_force_value(G, kind):
    value, _ = brute_force_value(G, kind.value)
    lo, _ = lower_bound(G, kind)
    hi, _ = upper_bound(G, kind)
    assert lo <= value <= hi


# ---------------------------------------------------------------------------
# decision and minimisation


@settings(max_examples=120)
@given(connected_graphs(max_n=6), kinds)
def test_compute_parameter_matches_oracle(G, kind):
    res = compute_parameter(G, kind)
    assert res.status is Status.EXACT
    assert res.value == brute_force_value(G, kind.value)[0]
    assert certifies(G, res)
    assert naive_is_connected(G, kind.value, colouring_dict(res.witness))


@settings(max_examples=80)
@given(connected_graphs(max_n=6), kinds)
def test_feasibility_is_monotone_in_k(G, kind):
    value = compute_parameter(G, kind).value
    for k in range(max(value - 2, 0), value + 3):
        assert decide_k(G, kind, k).feasible == (k >= value)


@settings(max_examples=80)
@given(connected_graphs(max_n=6), kinds)
def test_seeding_is_sound(G, kind):
    seeded = compute_parameter(G, kind, seed=True).value
    assert compute_parameter(G, kind, seed=False).value == seeded


@settings(max_examples=60)
@given(connected_graphs(max_n=6), kinds)
def test_path_cap_overflow_falls_back_to_leaf_checks(G, kind):
    value = compute_parameter(G, kind).value
    src = CandidateSource(G, kind, path_cap=1)
    assert decide_k(G, kind, value, source=src).feasible
    if value > 0:
        assert not decide_k(G, kind, value - 1, source=CandidateSource(G, kind, path_cap=1)).feasible


@settings(max_examples=60)
@given(connected_graphs(max_n=6), kinds)
def test_forced_distinct_elements_really_are(G, kind):
    # any witness colours bridges / cut-vertices pairwise differently
    res = compute_parameter(G, kind)
    forced = forced_distinct(G, kind)
    colours = []
    for x in forced:
        if kind.colours_edges and x < G.m:
            colours.append(res.witness.edge_colour[G.edges[x]])
        else:
            colours.append(res.witness.vertex_colour[x - (G.m if kind.colours_edges else 0)])
    assert len(set(colours)) == len(colours)


def test_unpruned_leaf_enumeration_agrees_on_tiny_cases():
    cases = [path_graph(3), path_graph(4), cycle_graph(4), star_graph(3), complete_graph(3),
             cycle_graph(4).with_edges([(0, 2)])]
    for G in cases:
        for kind in ALL_KINDS:
            value = compute_parameter(G, kind).value
            elements = (G.m if kind.colours_edges else 0) + (G.n if kind.colours_vertices else 0)
            if value ** elements > 2 * 10**5:
                continue
            assert leaf_enumeration_feasible(G, kind.value, value)
            if value > 0:
                assert not leaf_enumeration_feasible(G, kind.value, value - 1)


def test_zero_colours():
    assert decide_k(complete_graph(4), Kind.SRVC, 0).feasible
    assert not decide_k(complete_graph(4), Kind.RC, 0).feasible
    assert not decide_k(path_graph(3), Kind.RVC, 0).feasible
    assert decide_k(path_graph(3), Kind.RC, -1).verdict is Verdict.INFEASIBLE


def test_disconnected_graph_rejected():
    with pytest.raises(NotConnected):
        decide_k(Graph(3, [(0, 1)]), Kind.RC, 2)


def test_budget_exhaustion_reports_bracket():
    G = cycle_graph(12)
    res = compute_parameter(G, Kind.TRC, Budget(max_ms=None, max_nodes=5))
    assert res.status is Status.BUDGET_EXCEEDED and res.value is None
    assert res.lower <= 11 <= res.upper
    bo = compute_parameter(G, Kind.TRC, Budget(max_nodes=0))
    assert bo.status is Status.BOUNDS_ONLY and bo.nodes == 0


def test_compute_all_orders_src_before_strc():
    G = star_graph(3).with_edges([(1, 2)])
    res = compute_all(G, [Kind.STRC, Kind.SRC])
    assert list(res) == [Kind.STRC, Kind.SRC]
    assert res[Kind.SRC].value == 2 and res[Kind.STRC].value == 3
    assert res[Kind.STRC].upper_sources == ("diam2_src_plus_1",)


def test_witness_is_deterministic():
    G = cycle_graph(7)
    a = compute_parameter(G, Kind.SRVC).witness
    b = compute_parameter(G, Kind.SRVC, canonical=True).witness
    assert a == b


# ---------------------------------------------------------------------------
# kernels


@pytest.mark.skipif("cython" not in kernel.available_backends(), reason="compiled kernel not built")
@settings(max_examples=80)
@given(connected_graphs(max_n=6), kinds)
def test_backends_agree(G, kind):
    a = compute_parameter(G, kind, backend="python")
    b = compute_parameter(G, kind, backend="cython")
    assert (a.value, a.witness, a.nodes) == (b.value, b.witness, b.nodes)


def test_unknown_backend():
    with pytest.raises(ValueError):
        decide_k(cycle_graph(5), Kind.RC, 2, backend="fortran")


def test_witness_verifies_independently_on_fixed_graphs():
    for G in (cycle_graph(8), star_graph(4).with_edges([(1, 2), (3, 4)])):
        for kind in ALL_KINDS:
            res = compute_parameter(G, kind)
            assert check_connectivity(G, res.witness, kind)
            assert naive_is_connected(G, kind.value, colouring_dict(res.witness))


def test_pure_python_fallback_selected_at_import():
    import os
    import subprocess
    import sys

    env = dict(os.environ, RAINBOWCONN_PURE_PYTHON="1")
    code = "import rainbowconn.kernel as k; print(k.BACKEND, k.available_backends())"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout
    assert out.split()[0] == "python" and "cython" not in out
