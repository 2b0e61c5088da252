import pytest
from hypothesis import given
from hypothesis import strategies as st

from p5k5e.coloring import Coloring, ImproperColoring
from p5k5e.graph import Graph


def test_from_classes_validation():
    col = Coloring.from_classes(4, [0b0101, 0, 0b1010])
    assert col.k == 2 and col.colors == (0, 1, 0, 1)
    with pytest.raises(ImproperColoring):
        Coloring.from_classes(3, [0b011, 0b010, 0b100])
    with pytest.raises(ImproperColoring):
        Coloring.from_classes(3, [0b011])


def test_properness_checks():
    g = Graph.path(3)
    assert Coloring((0, 1, 0), 2).is_proper(g)
    bad = Coloring((0, 0, 1), 2)
    assert bad.conflicts(g) == [(0, 1)]
    with pytest.raises(ImproperColoring):
        bad.check(g)


@given(st.lists(st.integers(0, 6), max_size=12))
def test_serialisations_round_trip(raw):
    col = Coloring.from_assignment(raw)
    assert Coloring.from_json(col.to_json()) == col
    lines = col.to_text().splitlines()
    assert len(lines) == len(raw)
    assert sorted(set(col.colors)) == list(range(col.k))
