import json

import pytest

import p5k5e.constructions as cons
from p5k5e.constructions import (
    NAMES,
    ChecklistFailure,
    NamedConstruction,
    UnknownName,
    build_named,
    build_with_checklist,
    c5_blowup,
    perfect_family,
    run_checklist,
)
from p5k5e.decompose import atom_decomposition, has_clique_cutset
from p5k5e.graph import clique_number, independence_number
from p5k5e.oracle import chromatic_number
from p5k5e.patterns import F1, F2, F3, contains, is_in_class, is_perfect


@pytest.mark.parametrize("name", [n for n in NAMES if n not in cons.PARAMETRIC])
def test_every_named_graph_passes_its_checklist(name):
    g, checks = build_with_checklist(NamedConstruction(name))
    assert all(ok for _, ok in run_checklist(g, checks))


def test_h_star_properties():
    g = build_named("h_star")
    assert clique_number(g) == 6 and not is_perfect(g) and not has_clique_cutset(g) and is_in_class(g)


@pytest.mark.parametrize("name", ["g1", "g2"])
def test_g1_g2_properties(name):
    g = build_named(name)
    assert independence_number(g) == 2 and clique_number(g) == 4
    assert chromatic_number(g).chi == 5
    # chi >= ceil(n / alpha) = 5
    assert -(-g.n // 2) == 5


def test_g2_to_g4_contain_their_patterns():
    assert contains(build_named("g2"), F1)
    for name, p in (("g3", F2), ("g4", F3)):
        g = build_named(name)
        assert contains(g, p)
        assert chromatic_number(g).chi == clique_number(g) == 5


def test_g1_is_the_c5_blowup():
    from p5k5e.canon import is_isomorphic

    assert is_isomorphic(build_named("g1"), c5_blowup((2, 2, 2, 2, 1)))


def test_perfect_family_example():
    g = build_named("perfect_family(7)")
    assert clique_number(g) == 7 and chromatic_number(g).chi == 7
    sizes = sorted(a.mask.bit_count() for a in atom_decomposition(g).atoms)
    assert sizes == [3, 7]


def test_perfect_family_with_attachments():
    g = build_named("perfect_family(8, 0, 3, 0, 1, 5, 2)")
    assert g.n == 8 + 3 + 1 + 2
    with pytest.raises(ValueError):
        perfect_family(7, ((7, 1),))


def test_oversized_attachment_fails_checklist():
    with pytest.raises(ChecklistFailure) as exc:
        build_named("perfect_family(7, 0, 7)")
    assert "omega=7" in exc.value.failed


def test_tampered_data_fails_checklist(monkeypatch):
    data = json.loads(json.dumps(cons._stored()))
    data["h_star"]["graph6"] = data["g1"]["graph6"]
    monkeypatch.setattr(cons, "_stored", lambda: data)
    with pytest.raises(ChecklistFailure):
        build_named("h_star")


def test_name_parsing():
    assert NamedConstruction.parse("c5_blowup(2, 2,2,2,1)") == NamedConstruction("c5_blowup", (2, 2, 2, 2, 1))
    assert str(NamedConstruction.parse("h_t(3)")) == "h_t(3)"
    for bad in ("zzz", "g1(2)", "perfect_family", "h_t(x)", "!!", "perfect_family(7,0)"):
        with pytest.raises(UnknownName):
            build_named(bad)


def test_parametric_builds():
    assert clique_number(build_named("h_t(3)")) == 6
    g = build_named("c5_blowup(1,1,1,1,1)")
    assert g.edge_count() == 5
