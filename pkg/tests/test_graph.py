import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, to_nx
from p5k5e.graph import (
    ANTICOMPLETE,
    COMPLETE,
    MIXED,
    Graph,
    MalformedEdgeList,
    MalformedGraph6,
    OverlappingSets,
    TooLarge,
    bipartite_analysis,
    clique_number,
    complement,
    connected_components,
    disjoint_union,
    has_augmenting_path,
    independence_number,
    is_connected,
    max_clique,
    parse_edge_list,
    parse_graph6,
    set_relation,
    to_edge_list,
    to_graph6,
    two_coloring,
)


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(TooLarge):
        Graph.empty(65)


@given(graphs(max_n=9))
def test_adjacency_symmetric_irreflexive(g):
    for v in range(g.n):
        assert not g.adj[v] >> v & 1
        assert g.adj[v] >> g.n == 0
        for u in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)


# graph6


def test_graph6_smallest_header():
    g = parse_graph6("@")
    assert g.n == 1 and g.edge_count() == 0


@pytest.mark.parametrize("g", [Graph.complete(2), Graph.cycle(5), Graph.path(7), Graph.complete(12)])
def test_graph6_matches_networkx_encoder(g):
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert to_graph6(g) == ref
    back = parse_graph6(ref)
    assert back == g


@given(graphs(max_n=70 // 2))
def test_graph6_round_trip(g):
    text = to_graph6(g)
    assert parse_graph6(text) == g
    assert nx.from_graph6_bytes(text.encode()).number_of_edges() == g.edge_count()


def test_graph6_large_header_round_trip():
    g = Graph.path(64)
    text = to_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


@pytest.mark.parametrize("bad", ["", "D", "Dh", "\x1f", "D\x7f\x7f\x7f\x7f"])
def test_graph6_malformed(bad):
    with pytest.raises(MalformedGraph6):
        parse_graph6(bad)


def test_graph6_too_large():
    with pytest.raises(TooLarge):
        parse_graph6(to_graph6(Graph.path(10)), max_n=9)


def test_edge_list_round_trip_and_hint():
    g = Graph.from_edges(6, [(0, 1), (1, 2)])
    text = to_edge_list(g)
    assert parse_edge_list(text) == g
    assert parse_edge_list("0 1\n# trailing comment\n").n == 2
    with pytest.raises(MalformedEdgeList):
        parse_edge_list("0 1 2\n")
    with pytest.raises(MalformedEdgeList):
        parse_edge_list("0 x\n")


# set algebra


def test_complement_examples():
    assert complement(Graph.complete(5)).edge_count() == 0
    c5 = Graph.cycle(5)
    assert nx.is_isomorphic(to_nx(complement(c5)), to_nx(c5))


@given(graphs(max_n=9))
def test_complement_is_involution(g):
    h = complement(g)
    assert complement(h) == g
    for u, v in itertools.combinations(range(g.n), 2):
        assert h.has_edge(u, v) != g.has_edge(u, v)


def test_components_examples():
    assert connected_components(Graph.empty(3)) == [1, 2, 4]
    assert connected_components(Graph.cycle(5)) == [0b11111]
    sizes = sorted(c.bit_count() for c in connected_components(disjoint_union(Graph.complete(3), Graph.complete(2))))
    assert sizes == [2, 3]


@given(graphs(max_n=10))
def test_components_match_networkx(g):
    ours = sorted(sorted(v for v in range(g.n) if c >> v & 1) for c in connected_components(g))
    ref = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    assert ours == ref
    # the empty graph counts as connected
    assert is_connected(g) == (g.n == 0 or nx.is_connected(to_nx(g)))


def test_set_relation_examples():
    assert set_relation(Graph.complete(5), 0b11, 0b1100) == COMPLETE
    assert set_relation(Graph.empty(5), 0b11, 0b1100) == ANTICOMPLETE
    assert set_relation(Graph.path(5), 0b1, 0b110) == MIXED
    with pytest.raises(OverlappingSets):
        set_relation(Graph.path(5), 0b11, 0b10)


@given(graphs(min_n=2, max_n=8), st.data())
def test_set_relation_flips_under_complement(g, data):
    labels = data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n))
    a = sum(1 << v for v, side in enumerate(labels) if side == 0)
    b = sum(1 << v for v, side in enumerate(labels) if side == 1)
    if a and b:
        flipped = {COMPLETE: ANTICOMPLETE, ANTICOMPLETE: COMPLETE, MIXED: MIXED}
        assert set_relation(complement(g), a, b) == flipped[set_relation(g, a, b)]


# cliques


def test_max_clique_examples():
    k5e = Graph.from_edges(5, [e for e in itertools.combinations(range(5), 2) if e != (0, 1)])
    assert max_clique(k5e).bit_count() == 4
    assert clique_number(Graph.cycle(5)) == 2


def _brute_clique_number(g):
    best = 0
    for r in range(g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                best = r
    return best


@given(graphs(max_n=7))
def test_max_clique_against_subset_enumeration(g):
    clique = max_clique(g)
    assert g.is_clique(clique)
    assert clique.bit_count() == _brute_clique_number(g)
    assert independence_number(g) == _brute_clique_number(complement(g))


@given(graphs(max_n=14))
def test_max_clique_against_networkx(g):
    ref = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
    assert clique_number(g) == ref


# bipartite


def test_bipartite_examples():
    c4 = bipartite_analysis(Graph.cycle(4))
    assert sorted((c4.left.bit_count(), c4.right.bit_count())) == [2, 2]
    assert c4.matching_size == 2
    assert bipartite_analysis(Graph.cycle(5)) is None
    k33 = Graph.from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)])
    assert bipartite_analysis(k33).matching_size == 3


def _brute_min_cover_by_edges_and_vertices(g):
    # smallest partition of V into edges and single vertices
    best = g.n
    edges = list(g.edges())
    for r in range(len(edges) + 1):
        for pick in itertools.combinations(edges, r):
            used = [v for e in pick for v in e]
            if len(set(used)) == len(used):
                best = min(best, g.n - r)
    return best


@given(graphs(max_n=8, p=0.35))
def test_matching_size_against_cover_partition(g):
    res = bipartite_analysis(g)
    if res is None:
        assert not nx.is_bipartite(to_nx(g))
        assert two_coloring(g) is None
        return
    assert res.left & res.right == 0 and res.left | res.right == g.vertices
    assert g.is_stable(res.left) and g.is_stable(res.right)
    assert res.matching_size == g.n - _brute_min_cover_by_edges_and_vertices(g)
    assert not has_augmenting_path(g, res.left, res.right, res.matching)
