import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import atlas_counts
from rainbowconn.enumeration import canonical_key, connected_classes, labelled_connected_graphs
from rainbowconn.graph_core import canonical_form
from strategies import connected_graphs

# connected labelled graphs on n vertices (OEIS A001187)
LABELLED_CONNECTED = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_labelled_counts(n):
    assert sum(1 for _ in labelled_connected_graphs(n)) == LABELLED_CONNECTED[n]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_class_counts_match_atlas(n):
    assert len(connected_classes(n)) == atlas_counts(6)[n]


@settings(max_examples=60)
@given(connected_graphs(min_n=2, max_n=6), st.data())
def test_canonical_key_is_invariant(G, data):
    perm = data.draw(st.permutations(range(G.n)))
    assert canonical_key(G) == canonical_key(G.relabel(perm))
    assert canonical_form(G) == canonical_form(G.relabel(perm))


@settings(max_examples=60)
@given(connected_graphs(min_n=4, max_n=6), connected_graphs(min_n=4, max_n=6))
def test_canonical_key_separates(G, H):
    assert (canonical_key(G) == canonical_key(H)) == (canonical_form(G) == canonical_form(H))
