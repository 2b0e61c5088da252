import json
import random

import pytest

from p5k5e.census import (
    CensusConfig,
    CensusReport,
    census_stream,
    check_graph,
    enumerate_connected,
    injected_large_omega,
    random_cobipartite,
    read_graph6_stream,
    search_witness,
    verify_bounds,
)
from p5k5e.constructions import perfect_family
from p5k5e.decompose import has_clique_cutset
from p5k5e.graph import Graph, TooLarge, clique_number, independence_number, to_graph6
from p5k5e.oracle import chromatic_number
from p5k5e.patterns import K5_MINUS_E, is_in_class, is_perfect
from p5k5e.structure import cobipartite_coloring


def test_enumerate_examples():
    assert len(enumerate_connected(3)) == 2
    assert len(enumerate_connected(4)) == 6


def test_small_census_is_clean():
    rep = verify_bounds(census_stream(6), CensusConfig(check_detectors=True))
    assert rep.ok, rep.violations
    assert rep.seen == 1 + 2 + 4 + 11 + 34 + 156
    assert rep.in_class <= rep.connected <= rep.seen
    assert rep.fallbacks == 0
    assert rep.n_min == 1 and rep.n_max == 6


def test_out_of_class_graph_is_only_counted():
    rep = verify_bounds([K5_MINUS_E.as_graph()])
    assert (rep.seen, rep.connected, rep.in_class) == (1, 1, 0)
    assert rep.ok


def test_perfect_family_injection_passes():
    rep = verify_bounds([perfect_family(8), perfect_family(8, ((0, 3), (4, 7)))])
    assert rep.ok and rep.omega_ge_7 == 2 and rep.in_class == 2


def test_violations_are_recorded_not_raised(monkeypatch):
    import p5k5e.census as census

    def broken(g):
        raise RuntimeError("boom")

    monkeypatch.setattr(census, "color_connected_report", broken)
    rep = check_graph(Graph.cycle(5))
    assert not rep.ok and "boom" in rep.violations[0][1]


def test_parallel_report_equals_serial():
    stream = list(census_stream(6, min_n=5))
    serial = verify_bounds(stream, CensusConfig(jobs=1))
    parallel = verify_bounds(stream, CensusConfig(jobs=3))
    a, b = serial.to_dict(), parallel.to_dict()
    a.pop("seconds"), b.pop("seconds")
    assert a == b


def test_report_serialisations():
    rep = verify_bounds(census_stream(4))
    data = json.loads(rep.to_json())
    assert data["ok"] and data["seen"] == rep.seen
    assert "branch histogram" in rep.to_text()
    merged = CensusReport()
    merged.merge(rep)
    merged.merge(rep)
    assert merged.seen == 2 * rep.seen


def test_config_validation():
    with pytest.raises(ValueError):
        CensusConfig(jobs=0)
    with pytest.raises(TooLarge):
        list(census_stream(9))


def test_graph6_stream_reader():
    lines = ["# comment", to_graph6(Graph.cycle(5)), "", to_graph6(Graph.path(3))]
    graphs = list(read_graph6_stream(lines))
    assert [g.n for g in graphs] == [5, 3]


def test_random_streams():
    rng = random.Random(1)
    for _ in range(30):
        g = random_cobipartite(rng.randint(1, 10), rng)
        assert cobipartite_coloring(g) is not None
    big = injected_large_omega(9, seed=3, samples=20)
    assert big and all(is_in_class(g) and clique_number(g) >= 7 for g in big)


def test_witness_search_examples():
    assert search_witness(lambda g: not is_in_class(g) and is_in_class(g), 1, 6) is None
    g = search_witness(
        lambda g: clique_number(g) == 4 and independence_number(g) == 2 and chromatic_number(g).chi == 5,
        9,
        9,
        hereditary=lambda g: is_in_class(g) and independence_number(g) <= 2 and clique_number(g) <= 4,
    )
    assert g is not None and g.n == 9
    none7 = search_witness(
        lambda g: clique_number(g) >= 7 and not has_clique_cutset(g) and cobipartite_coloring(g) is None,
        1,
        8,
        hereditary=is_in_class,
    )
    assert none7 is None
    first = search_witness(lambda g: not is_perfect(g), 1, 6, hereditary=is_in_class)
    assert first.n == 5
