import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotforge import corpus
from knotforge.annular import (
    AnnularDiagram,
    all_minimal_meridians,
    annular_bracket,
    close_box,
    essential_circle,
    forget_hole,
    jones_st,
    minimal_meridian,
    parse_annular,
    to_box,
    wrap_lower_bound_check,
    wrapping_number,
)
from knotforge.bracket import unnormalized_bracket
from knotforge.construct import braid_closure, embed, lasso, planar, torus_braid
from knotforge.diagram import Diagram, DiagramError
from knotforge.laurent import AnnularPoly, LaurentPoly

LASSOS = [n for n in corpus.names() if n.startswith("lasso")]


def _random_braid(seed):
    rng = random.Random(seed)
    strands = rng.randint(2, 4)
    word = [rng.choice((1, -1)) * i for i in range(1, strands)]
    word += [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(rng.randint(0, 6))]
    rng.shuffle(word)
    return braid_closure(word, strands)


def test_essential_circle():
    ad = essential_circle()
    assert wrapping_number(ad)[0] == 1
    assert annular_bracket(ad) == AnnularPoly({(0, 1): 1})
    with pytest.raises(DiagramError):
        essential_circle(0)


def test_circle_off_the_hole():
    ad = parse_annular({"pd": [], "free_loops": 1, "annular": {}})
    assert wrapping_number(ad)[0] == 0
    assert annular_bracket(ad).z_degree() == 0


def test_lasso_1_2_wrap():
    ad = corpus.load_annular("lasso_1_2")
    w, col = wrapping_number(ad)
    assert w == 3
    assert col.colors == 3
    assert sorted(col.layer.values()) == [1, 2, 3]
    mp = minimal_meridian(ad)
    assert len(mp.crossed_arcs) == 3
    assert mp.faces[0] == ad.hole_face and mp.faces[-1] == ad.outer_face


def test_lasso_1_2_jones_st():
    js = jones_st(corpus.load_annular("lasso_1_2"))
    assert js.z_degree() == 3
    # full state sum in A: -A^5 + A (the extreme state alone gives the -A^5 end)
    top = annular_bracket(corpus.load_annular("lasso_1_2")).coefficient(3)
    assert top == LaurentPoly({5: -1, 1: 1})


@pytest.mark.parametrize("name", LASSOS)
def test_corpus_lassos_pinch(name):
    ad = corpus.load_annular(name)
    assert wrap_lower_bound_check(ad).passed
    assert jones_st(ad).z_degree() == wrapping_number(ad)[0]


def test_annular_engines_agree():
    ad = lasso(2, 1)
    assert annular_bracket(ad) == annular_bracket(ad, engine="oracle")


def test_torus_6_2():
    p = annular_bracket(torus_braid(6, 2))
    assert p.coefficient(2) == LaurentPoly({6: 1})
    assert p.coefficient(0) == LaurentPoly({6: -1, -18: 1})


def test_embed_has_wrap_one(trefoil):
    ad = embed(trefoil)
    assert wrapping_number(ad)[0] == 1
    assert jones_st(ad).z_degree() == 1


def test_disconnected_needs_meridian(hopf):
    from knotforge.diagram import disjoint_union

    u = disjoint_union(hopf, hopf)
    with pytest.raises(DiagramError):
        AnnularDiagram(u)


def test_bad_face_rejected(trefoil):
    with pytest.raises(DiagramError):
        AnnularDiagram(trefoil, 0, 99)


def test_json_roundtrip():
    ad = lasso(1, 2)
    back = parse_annular(ad.to_json())
    assert annular_bracket(back) == annular_bracket(ad)
    assert wrapping_number(back)[0] == wrapping_number(ad)[0]


@given(st.integers(0, 100_000))
def test_forget_hole(seed):
    ad = _random_braid(seed)
    assert forget_hole(annular_bracket(ad)) == unnormalized_bracket(planar(ad))


@given(st.integers(0, 100_000))
def test_top_degree_at_most_wrap(seed):
    ad = _random_braid(seed)
    assert jones_st(ad).z_degree() <= wrapping_number(ad)[0]
    assert wrapping_number(ad)[0] <= ad.strands


@given(st.integers(0, 100_000))
def test_meridian_independence(seed):
    ad = _random_braid(seed)
    base = annular_bracket(ad)
    for mp in all_minimal_meridians(ad, limit=8):
        assert annular_bracket(ad, meridian=mp.crossed_arcs) == base


@given(st.integers(0, 100_000))
def test_essential_parity(seed):
    # every state meets the meridian in strands-many points, so the essential
    # circle count has the parity of the strand count
    ad = _random_braid(seed)
    for (_, k) in annular_bracket(ad).terms:
        assert k % 2 == ad.strands % 2


@given(st.integers(0, 100_000))
def test_box_roundtrip(seed):
    ad = _random_braid(seed)
    back = close_box(to_box(ad))
    assert annular_bracket(back) == annular_bracket(ad)
    assert back.n == ad.n


def test_box_roundtrip_lasso():
    ad = lasso(3, 1, 2)
    assert annular_bracket(close_box(to_box(ad))) == annular_bracket(ad)


def test_nonconnected_wrap_rejected():
    d = Diagram(((1, 2, 2, 1),), 1)
    with pytest.raises(DiagramError):
        wrapping_number(AnnularDiagram(d, meridian_arcs=(1,)))
