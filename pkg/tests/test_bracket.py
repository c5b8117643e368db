import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotforge import corpus
from knotforge.bracket import (
    ORACLE_LIMIT,
    a_to_q,
    adequacy,
    adequacy_by_flips,
    bound_pack,
    bracket,
    extreme_state_circles,
    jones,
    smooth_state,
    state_sum,
    t_breadth,
    unnormalized_bracket,
)
from knotforge.construct import parallel
from knotforge.diagram import Diagram, DiagramError, disjoint_union, mirror, writhe
from knotforge.laurent import LaurentPoly, delta, parse_poly

from .conftest import random_diagrams

# Jones polynomials of the bundled table knots, frozen from oracle-engine runs
# and compared by hand against standard knot tables (up to mirror).
JONES = {
    "3_1": "t^-1 + t^-3 - t^-4",
    "4_1": "t^2 - t + 1 - t^-1 + t^-2",
    "5_1": "t^-2 + t^-4 - t^-5 + t^-6 - t^-7",
    "5_2": "t^-1 - t^-2 + 2*t^-3 - t^-4 + t^-5 - t^-6",
    "6_1": "t^2 - t + 2 - 2*t^-1 + t^-2 - t^-3 + t^-4",
    "6_2": "t - 1 + 2*t^-1 - 2*t^-2 + 2*t^-3 - 2*t^-4 + t^-5",
    "6_3": "-t^3 + 2*t^2 - 2*t + 3 - 2*t^-1 + 2*t^-2 - t^-3",
    "8_19": "-t^8 + t^5 + t^3",
    "8_20": "-t + 2 - t^-1 + 2*t^-2 - t^-3 + t^-4 - t^-5",
    "8_21": "2*t^-1 - 2*t^-2 + 3*t^-3 - 3*t^-4 + 2*t^-5 - 2*t^-6 + t^-7",
    "10_152": "t^13 - 2*t^12 + 2*t^11 - 3*t^10 + 2*t^9 - 2*t^8 + t^7 + t^6 + t^4",
    "10_153": "-t^5 + t^4 - t^3 + t^2 + 1 + t^-1 - t^-2 + t^-3 - t^-4",
    "10_154": "t^-3 + 2*t^-6 - 2*t^-7 + 2*t^-8 - 3*t^-9 + 2*t^-10 - 2*t^-11 + t^-12",
}
DETERMINANT = {"3_1": 3, "4_1": 5, "5_1": 5, "5_2": 7, "6_1": 9, "6_2": 11, "6_3": 13,
               "8_19": 3, "8_20": 9, "8_21": 15, "10_152": 11, "10_153": 1, "10_154": 13}


def _at_minus_one(j: LaurentPoly) -> int:
    # J(t = -1): q = t^(1/2) = i, so only even q-powers are real
    total = 0
    for e, c in j.terms.items():
        assert e % 2 == 0
        total += c * (-1) ** (e // 2)
    return abs(total)


def test_trefoil_bracket(trefoil):
    assert bracket(trefoil) == parse_poly("A^7 - A^3 - A^-5")
    assert jones(trefoil) == LaurentPoly({-8: -1, -6: 1, -2: 1}, "q")
    assert t_breadth(jones(trefoil)) == 3


def test_hopf(hopf):
    assert bracket(hopf) == parse_poly("-A^4 - A^-4")
    assert t_breadth(jones(hopf)) == 2


def test_kink(kink):
    assert bracket(kink) == LaurentPoly({-3: -1})
    assert jones(kink) == LaurentPoly.constant(1, "q")


def test_free_loops():
    assert bracket(Diagram((), 1)) == LaurentPoly.constant(1)
    assert bracket(Diagram((), 3)) == delta() * delta()
    with pytest.raises(DiagramError):
        Diagram((), 0)


@pytest.mark.parametrize("name", sorted(JONES))
def test_table_jones(name):
    d = corpus.load(name)
    j = jones(d)
    assert j.t_string() == JONES[name]
    assert jones(d, engine="oracle") == j
    assert _at_minus_one(j) == DETERMINANT[name]


@pytest.mark.parametrize("name", sorted(JONES))
def test_knot_bracket_at_one(name):
    d = corpus.load(name)
    # <K>(A=1) = (-1)^w for any knot diagram
    assert sum(bracket(d).terms.values()) == (-1) ** (writhe(d) % 2)


def test_engines_agree_on_parallel(trefoil):
    p = parallel(trefoil, 2)
    assert bracket(p) == bracket(p, engine="oracle")


def test_oracle_guard(trefoil):
    big = parallel(trefoil, 3)
    assert big.n > ORACLE_LIMIT
    with pytest.raises(DiagramError):
        bracket(big, engine="oracle")


def test_unknown_engine(trefoil):
    with pytest.raises(ValueError):
        bracket(trefoil, engine="magic")


def test_state_counts_total(figure_eight):
    counts = state_sum(figure_eight)
    assert sum(counts.values()) == 2**figure_eight.n


def test_extreme_states(trefoil):
    sp, sm = extreme_state_circles(trefoil)
    assert sp + sm == trefoil.n + 2
    assert smooth_state(trefoil, [1] * 3) == sp


def test_a_to_q_rejects_odd():
    with pytest.raises(Exception):
        a_to_q(LaurentPoly({1: 1}))


@given(st.integers(0, 100_000))
def test_fast_matches_oracle(seed):
    (d,) = random_diagrams(seed, 1, max_n=12)
    assert unnormalized_bracket(d) == unnormalized_bracket(d, engine="oracle")


@given(st.integers(0, 100_000))
def test_mirror_law(seed):
    (d,) = random_diagrams(seed, 1, max_n=10)
    assert bracket(mirror(d)) == bracket(d).mirror()


@given(st.integers(0, 100_000), st.integers(0, 100_000))
def test_disjoint_union_law(s1, s2):
    (d1,) = random_diagrams(s1, 1, max_n=6)
    (d2,) = random_diagrams(s2, 1, max_n=6)
    assert bracket(disjoint_union(d1, d2)) == bracket(d1) * bracket(d2) * delta()


@given(st.integers(0, 100_000))
def test_jones_is_writhe_normalized(seed):
    (d,) = random_diagrams(seed, 1, max_n=10)
    # J(1) = (-2)^(components - 1)
    assert sum(jones(d).terms.values()) == (-2) ** (len(d.components) - 1)


@pytest.mark.parametrize("name", corpus.ALTERNATING + corpus.NON_ADEQUATE + corpus.NON_ALTERNATING_ADEQUATE)
def test_adequacy_matches_flip_oracle(name):
    d = corpus.load(name)
    rep = adequacy(d)
    assert (rep.plus_adequate, rep.minus_adequate) == adequacy_by_flips(d)


def test_adequacy_rejects_nonreduced(kink):
    with pytest.raises(DiagramError):
        adequacy(kink)
    assert not adequacy(kink, allow_nonreduced=True).adequate


@pytest.mark.parametrize("name", corpus.ALTERNATING + corpus.NON_ALTERNATING_ADEQUATE)
def test_bound_pack_holds(name):
    pack = bound_pack(corpus.load(name))
    for chk in pack["checks"].values():
        assert chk["holds"] or not chk["required"]
