import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_value
from rainbowconn.colouring import ALL_KINDS, Kind, check_connectivity
from rainbowconn.exact import compute_parameter
from rainbowconn.families import (
    CYCLE_RVC,
    CYCLE_SRVC,
    CYCLE_TRC,
    FamilyDescriptor,
    OutOfRange,
    WitnessNotFound,
    WitnessSearchFallback,
    ceil_root,
    cycle_table_rows,
    family_graph,
    family_value,
    family_values,
    family_witness,
    formula_rows,
    has_direct_witness,
)


@given(st.integers(1, 10**12), st.integers(1, 6))
def test_ceil_root_is_exact(n, m):
    b = ceil_root(n, m)
    assert b ** m >= n and (b == 1 or (b - 1) ** m < n)


def test_descriptor_validation():
    for bad in (FamilyDescriptor.cycle(2), FamilyDescriptor.wheel(2), FamilyDescriptor.complete(1),
                FamilyDescriptor.complete_bipartite(3, 2), FamilyDescriptor.complete_multipartite(1, 1),
                FamilyDescriptor.tree(3, [(0, 1)]), FamilyDescriptor("lattice", (3,))):
        with pytest.raises(OutOfRange):
            family_graph(bad)


def test_family_graph_shapes():
    W = family_graph(FamilyDescriptor.wheel(5))
    assert (W.n, W.m, W.degree(5)) == (6, 10, 5)
    K = family_graph(FamilyDescriptor.complete_multipartite(4, 1, 1))
    assert (K.n, K.m) == (6, 9)
    assert FamilyDescriptor.complete_multipartite(4, 1, 1).params == (1, 1, 4)


# small members checked against exhaustive search
SMALL = (
    [FamilyDescriptor.cycle(n) for n in range(3, 10)]
    + [FamilyDescriptor.wheel(n) for n in range(3, 8)]
    + [FamilyDescriptor.complete(n) for n in range(2, 6)]
    + [FamilyDescriptor.complete_bipartite(m, n) for m, n in [(1, 3), (2, 2), (2, 3), (2, 4), (2, 5), (3, 3)]]
    + [FamilyDescriptor.complete_multipartite(*s) for s in [(1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 1, 4), (1, 2, 2)]]
)


@pytest.mark.parametrize("desc", SMALL, ids=str)
def test_closed_forms_match_exact_search(desc):
    G = family_graph(desc)
    values = family_values(desc)
    for kind in ALL_KINDS:
        assert compute_parameter(G, kind).value == values[kind], kind


@pytest.mark.parametrize("desc", [FamilyDescriptor.cycle(5), FamilyDescriptor.wheel(4),
                                  FamilyDescriptor.complete_bipartite(2, 3),
                                  FamilyDescriptor.complete_multipartite(1, 1, 2)], ids=str)
def test_closed_forms_match_brute_force_oracle(desc):
    G = family_graph(desc)
    for kind in ALL_KINDS:
        assert brute_force_value(G, kind.value)[0] == family_value(desc, kind)


def test_cycle_tables_are_consistent():
    for n in CYCLE_RVC:
        assert CYCLE_RVC[n] <= CYCLE_SRVC[n]
    rows = dict(cycle_table_rows())
    assert rows["trc"] == rows["strc"] == sorted(CYCLE_TRC.items())
    # the strong vertex row drops between 11 and 12
    assert CYCLE_SRVC[11] == 6 and CYCLE_SRVC[12] == 5


@pytest.mark.parametrize("n", range(3, 17))
def test_cycle_witnesses(n):
    desc = FamilyDescriptor.cycle(n)
    G = family_graph(desc)
    for kind in ALL_KINDS:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", WitnessSearchFallback)
            col = family_witness(desc, kind)
        assert col.k == family_value(desc, kind)
        assert check_connectivity(G, col, kind)


@pytest.mark.parametrize("n", [4, 7, 10, 13, 20, 30])
def test_wheel_witnesses(n):
    desc = FamilyDescriptor.wheel(n)
    G = family_graph(desc)
    for kind in ALL_KINDS:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", WitnessSearchFallback)
            col = family_witness(desc, kind)
        assert col.k == family_value(desc, kind) and check_connectivity(G, col, kind)


def test_direct_schemes_cover_large_members():
    assert all(has_direct_witness(FamilyDescriptor.wheel(n), Kind.STRC) for n in range(7, 31))
    assert all(has_direct_witness(FamilyDescriptor.complete_bipartite(2, n), Kind.SRC) for n in range(2, 17))
    assert all(has_direct_witness(FamilyDescriptor.complete_bipartite(3, n), Kind.STRC) for n in range(3, 28))


def test_search_fallback_is_announced():
    desc = FamilyDescriptor.complete_multipartite(1, 2, 2)
    assert not has_direct_witness(desc, Kind.STRC)
    with pytest.warns(WitnessSearchFallback):
        col = family_witness(desc, Kind.STRC)
    assert col.k == 3
    with pytest.raises(WitnessNotFound):
        family_witness(desc, Kind.SRC, search=False)


@settings(max_examples=25)
@given(st.integers(2, 10), st.randoms(use_true_random=False))
def test_tree_formulas(n, rnd):
    edges = [(rnd.randrange(v), v) for v in range(1, n)]
    desc = FamilyDescriptor.tree(n, edges)
    G = family_graph(desc)
    for kind in ALL_KINDS:
        col = family_witness(desc, kind, search=False)
        assert check_connectivity(G, col, kind) and col.k == family_value(desc, kind)


def test_formula_rows_shape():
    rows = formula_rows(max_n=6)
    assert ("wheel", "strc", (6,), 3) in rows
    assert ("complete_bipartite", "src", (2, 5), 3) in rows
    assert all(isinstance(v, int) for *_, v in rows)
