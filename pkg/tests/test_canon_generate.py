import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, to_nx
from p5k5e.canon import canonical_form, canonical_hash, certificate, is_isomorphic
from p5k5e.generate import connected_levels, enumerate_all, enumerate_connected
from p5k5e.graph import TooLarge, is_connected
from p5k5e.patterns import is_in_class


@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_certificate_invariant_under_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert certificate(g) == certificate(h)
    assert canonical_form(g) == canonical_form(h)
    assert canonical_hash(g) == canonical_hash(h)


@given(graphs(min_n=5, max_n=7), graphs(min_n=5, max_n=7))
def test_isomorphism_matches_networkx(g, h):
    assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


@given(graphs(max_n=8))
def test_canonical_form_is_isomorphic_to_input(g):
    assert nx.is_isomorphic(to_nx(g), to_nx(canonical_form(g)))


def test_connected_counts_match_known_sequence():
    assert [len(level) for level in connected_levels(7)] == [1, 1, 2, 6, 21, 112, 853]


@pytest.mark.slow
def test_connected_count_order_8():
    assert len(enumerate_connected(8)) == 11117


def test_small_examples():
    names = sorted(g.edge_count() for g in enumerate_connected(3))
    assert names == [2, 3]
    assert len(enumerate_connected(4)) == 6
    assert len(enumerate_connected(5)) == 21


def test_all_graph_counts_match_atlas(atlas7):
    by_n = {}
    for g in atlas7:
        by_n[g.n] = by_n.get(g.n, 0) + 1
    assert [len(enumerate_all(n)) for n in range(1, 8)] == [by_n[n] for n in range(1, 8)]


@pytest.mark.parametrize("n", range(1, 7))
def test_generated_graphs_pairwise_non_isomorphic(n):
    level = enumerate_connected(n)
    assert all(is_connected(g) for g in level)
    nxs = [to_nx(g) for g in level]
    for i in range(len(nxs)):
        for j in range(i + 1, len(nxs)):
            assert not nx.faster_could_be_isomorphic(nxs[i], nxs[j]) or not nx.is_isomorphic(nxs[i], nxs[j])


def test_filtered_generation_matches_filtering_atlas(atlas7):
    ours = [len(level) for level in connected_levels(7, is_in_class)]
    ref = [sum(1 for g in atlas7 if g.n == n and is_connected(g) and is_in_class(g)) for n in range(1, 8)]
    assert ours == ref == [1, 1, 2, 6, 19, 82, 377]


def test_generator_limit():
    with pytest.raises(TooLarge):
        list(connected_levels(9))
