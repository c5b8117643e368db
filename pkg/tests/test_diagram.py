import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotforge import corpus
from knotforge.diagram import (
    Diagram,
    DiagramError,
    NonReducedWarning,
    disjoint_union,
    faces,
    linking_numbers,
    mirror,
    parse_diagram,
    relabel,
    writhe,
)

from .conftest import random_diagrams


def test_trefoil_basics(trefoil):
    assert trefoil.n == 3
    assert writhe(trefoil) == -3
    assert trefoil.is_alternating and trefoil.is_reduced and trefoil.is_connected
    assert len(trefoil.components) == 1


def test_hopf_linking(hopf):
    assert len(hopf.components) == 2
    assert abs(linking_numbers(hopf)[(0, 1)]) == 1


@pytest.mark.parametrize(
    "pd",
    [
        [[1, 2, 3]],  # wrong arity
        [[1, 1, 2, 3]],  # label appears twice at one crossing, never elsewhere
        [[1, 2, 3, 4]],  # every label appears once
        [[1, 2, 2, 1], [1, 3, 3, 4]],  # label used three times
    ],
)
def test_malformed_pd_rejected(pd):
    with pytest.raises(DiagramError):
        parse_diagram(json.dumps({"pd": pd}))


def test_bad_json():
    with pytest.raises(DiagramError):
        parse_diagram("{not json")


def test_nonreduced_warns():
    with pytest.warns(NonReducedWarning):
        parse_diagram({"pd": [[1, 2, 2, 1]]})


def test_kink_is_not_reduced(kink):
    assert kink.nugatory_crossings == (0,)
    assert writhe(kink) == -1


def test_free_loops_roundtrip():
    d, _ = parse_diagram({"pd": [], "free_loops": 2})
    assert d.n == 0 and d.free_loops == 2
    assert parse_diagram(d.to_json())[0] == d


@pytest.mark.parametrize("name", corpus.names())
def test_corpus_faces_euler(name):
    data = corpus.raw(name)
    if not data["pd"]:
        pytest.skip("crossingless entry")
    d = corpus.load(name)
    if d.n == 0 or not d.is_connected:
        pytest.skip("no face structure")
    fm = faces(d)
    assert len(fm) == d.n + 2
    # every arc separates two (possibly equal) faces
    for x in d.arcs:
        fm.face_of(x, "L"), fm.face_of(x, "R")


def test_face_resolve_by_arcs(trefoil):
    fm = faces(trefoil)
    for f in range(len(fm)):
        assert fm.resolve(fm.arcs_of(f)) == f
    with pytest.raises(DiagramError):
        fm.resolve(99)


def test_disjoint_union_counts(trefoil, hopf):
    u = disjoint_union(trefoil, hopf)
    assert u.n == 5 and not u.is_connected
    assert len(u.components) == 3


def _canon(c):
    return min(tuple(c), tuple(c[2:]) + tuple(c[:2]))


@given(st.integers(0, 10_000))
def test_mirror_negates_writhe(seed):
    (d,) = random_diagrams(seed, 1)
    assert writhe(mirror(d)) == -writhe(d)
    # a component that never passes under has no orientation in PD form, so a
    # crossing may come back rotated by two
    assert {_canon(c) for c in mirror(mirror(d)).pd} == {_canon(c) for c in d.pd}
    assert mirror(d).is_alternating == d.is_alternating


@given(st.integers(0, 10_000))
def test_relabel_keeps_signs(seed):
    (d,) = random_diagrams(seed, 1)
    r = relabel(d)
    assert r.numbering_consistent
    assert sorted(r.signs) == sorted(d.signs)
    assert r.n == d.n


def test_diagram_is_frozen(trefoil):
    with pytest.raises(Exception):
        trefoil.pd = ()


def test_to_json_roundtrip(figure_eight):
    assert parse_diagram(json.dumps(figure_eight.to_json()))[0] == figure_eight
    assert isinstance(figure_eight, Diagram)
