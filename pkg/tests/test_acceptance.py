"""The ten acceptance criteria, one test each.

Run with ``pytest tests/test_acceptance.py`` to get one PASS/FAIL line per
criterion in the terminal summary.
"""

import random
import time
from fractions import Fraction
from itertools import product

import pytest

from knotforge import corpus
from knotforge.annular import jones_st, wrap_lower_bound_check, wrapping_number
from knotforge.bounds import (
    cable_vs_parallel_breadth,
    diagram_bound_reports,
    parallel_bound_report,
    satellite_bound_report,
)
from knotforge.bracket import adequacy, adequacy_by_flips, bracket, jones, state_sum, t_breadth
from knotforge.cli import main
from knotforge.construct import (
    connected_sum,
    embed,
    graft,
    lasso,
    parallel,
    parallel_annular,
    planar,
    random_braid_diagram,
    satellite,
    satellite_jones,
    torus_braid,
)
from knotforge.diagram import DiagramError, writhe
from knotforge.laurent import LaurentPoly, parse_poly

# Reference value for <3_1^3>.
REFERENCE_3_1_CUBED = parse_poly(
    "-A^97 + A^93 + A^85 - A^69 - 3*A^61 + 2*A^57 - A^53 + A^49 - A^45 + A^41 + A^33 + A^25 + A^17"
)


def _reduced_alternating():
    out = []
    for name in corpus.names():
        data = corpus.raw(name)
        if not data["pd"] or "annular" in data:
            continue
        d = corpus.load(name)
        if d.is_connected and d.is_alternating and d.is_reduced:
            out.append((name, d))
    return out


def test_criterion_01_trefoil(criterion, trefoil):
    with criterion(1, "trefoil suite") as c:
        t0 = time.perf_counter()
        br = bracket(trefoil)
        j = jones(trefoil, br=br)
        rep = adequacy(trefoil)
        elapsed = time.perf_counter() - t0
        assert br.breadth()[2] == 12
        assert t_breadth(j) == 3
        assert rep.s_plus_circles + rep.s_minus_circles == 5
        assert rep.plus_adequate and rep.minus_adequate
        assert writhe(trefoil) == -3
        assert elapsed < 1.0
        c.note(f"<3_1> = {br}, J = {j.t_string()}, {elapsed * 1000:.1f} ms")


@pytest.fixture(scope="module")
def trefoil_cubed():
    d = parallel(corpus.load("3_1"), 3)
    t0 = time.perf_counter()
    br = bracket(d)
    return d, br, time.perf_counter() - t0


def test_criterion_02_breadths(trefoil_cubed):
    d, br, elapsed = trefoil_cubed
    assert d.n == 27
    assert br.breadth()[2] == 80
    assert t_breadth(jones(d, br=br)) == 20
    assert elapsed < 300
    with pytest.raises(DiagramError):
        bracket(d, engine="oracle")


def test_criterion_02_reference_analysis(trefoil_cubed):
    # The reference is -A^54 times ours except at A^49 (reference 1, ours 3).
    # The reference sums to 2 at A = 1, which no 3-component link can
    # do (<L>(1) = +-(-2)^(c-1) = +-4); ours gives -4.
    _, br, _ = trefoil_cubed
    assert REFERENCE_3_1_CUBED - br * LaurentPoly({54: -1}) == LaurentPoly({49: -2})
    assert sum(br.terms.values()) == -4
    assert sum(REFERENCE_3_1_CUBED.terms.values()) == 2


@pytest.mark.xfail(strict=True, reason="reference <3_1^3> has a wrong A^49 coefficient and is a shift, not a mirror; see analysis test")
def test_criterion_02(criterion, trefoil_cubed):
    d, br, elapsed = trefoil_cubed
    with criterion(2, "trefoil 3-parallel") as c:
        c.note(f"n=27, breadth {br.breadth()[2]}, Jones breadth {t_breadth(jones(d, br=br))}, {elapsed:.2f} s, oracle guarded")
        c.note("literal match with the reference polynomial, up to A<->A^-1, is expected to fail")
        ok = br in (REFERENCE_3_1_CUBED, REFERENCE_3_1_CUBED.mirror())
        assert ok, "ours equals -A^-54 times the reference except at A^49 (3 vs 1)"


def test_criterion_03_formula_vs_engine(criterion):
    with criterion(3, "breadth formula vs fast engine") as c:
        t0 = time.perf_counter()
        checked = 0
        for name, r in product(("3_1", "4_1", "5_1", "hopf"), (2, 3)):
            d = corpus.load(name)
            if r * r * d.n > 48:
                continue
            rep = adequacy(d)
            formula = 2 * d.n * r * r + 2 * r * rep.s_plus_circles + 2 * r * rep.s_minus_circles - 4
            assert bracket(parallel(d, r)).breadth()[2] == formula, (name, r)
            checked += 1
        assert checked == 8
        c.note(f"{checked} cases in {time.perf_counter() - t0:.2f} s")


def test_criterion_04_alternating(criterion):
    with criterion(4, "alternating equalities") as c:
        diagrams = _reduced_alternating()
        assert len(diagrams) >= 8
        for name, d in diagrams:
            rep = adequacy(d)
            assert rep.s_plus_circles + rep.s_minus_circles == d.n + 2, name
            assert t_breadth(jones(d)) == d.n, name
        c.note(", ".join(n for n, _ in diagrams))


def test_criterion_05_wrapping(criterion):
    with criterion(5, "lasso wrapping numbers") as c:
        worst = 0.0
        count = 0
        for m in range(1, 5):
            for rs in product((1, 2, 3), repeat=m):
                t0 = time.perf_counter()
                ad = lasso(*rs)
                w, _ = wrapping_number(ad)
                M = jones_st(ad).z_degree()
                elapsed = time.perf_counter() - t0
                assert w == m + 1, rs
                assert M == w, rs
                assert elapsed < 1.0, rs
                worst = max(worst, elapsed)
                count += 1
        c.note(f"{count} lassos, slowest {worst * 1000:.0f} ms")


def test_criterion_06_oracle_equivalence(criterion):
    with criterion(6, "fast engine = 2^n oracle") as c:
        n_corpus = 0
        for name in corpus.names():
            data = corpus.raw(name)
            if not data["pd"]:
                continue
            d = corpus.load(name)
            if d.n <= 14:
                assert state_sum(d) == state_sum(d, engine="oracle"), name
                n_corpus += 1
            if "annular" in data:
                ad = corpus.load_annular(name)
                assert state_sum(d, ad.meridian) == state_sum(d, ad.meridian, engine="oracle"), name
        rng = random.Random(20240607)
        for _ in range(200):
            strands = rng.randint(2, 4)
            d = random_braid_diagram(rng, strands, rng.randint(strands - 1, 12), flips=0.3)
            assert d.n <= 12
            assert state_sum(d) == state_sum(d, engine="oracle")
        c.note(f"{n_corpus} corpus diagrams, 200 random")


def test_criterion_07_graft_laws(criterion, trefoil, figure_eight):
    with criterion(7, "graft and connected-sum laws") as c:
        s = connected_sum(trefoil, figure_eight)
        assert jones(s) == jones(trefoil) * jones(figure_eight)
        g = graft(parallel_annular(embed(trefoil), 2), parallel_annular(embed(figure_eight), 2), 2)
        assert bracket(parallel(s, 2)) == bracket(planar(g))
        c.note(f"3_1#4_1 has {s.n} crossings, parallel {2 * 2 * s.n}")


def test_criterion_08_satellite(criterion, kink):
    with criterion(8, "satellite cross-check") as c:
        t0 = time.perf_counter()
        for p in (lasso(2), torus_braid(3, 2)):
            assert jones_st(p).z_degree() == 2 and p.n <= 3
            sat = satellite(p, kink, force=True)
            assert 7 <= sat.n <= 10
            assert satellite_jones(p, kink, force=True) == jones(sat) == jones(sat, engine="oracle")
            c.note(f"{p.n}-crossing pattern -> {sat.n} crossings")
        assert time.perf_counter() - t0 < 10


def test_criterion_09_bounds(criterion, capsys):
    with criterion(9, "bound suite") as c:
        reports = []
        for name in corpus.names():
            data = corpus.raw(name)
            if data["pd"]:
                reports += diagram_bound_reports(corpus.load(name))
            if "annular" in data:
                reports.append(wrap_lower_bound_check(corpus.load_annular(name)))
        for name in ("3_1", "4_1"):
            reports += parallel_bound_report(corpus.load(name), 2)
            reports.append(cable_vs_parallel_breadth(corpus.load(name), 2))
        reports += parallel_bound_report(corpus.load("3_1"), 3)
        reports += satellite_bound_report(corpus.load_annular("lasso_1_2"), corpus.load("3_1"))
        failed = [r.row() for r in reports if not r.passed]
        assert not failed, failed
        names = {r.name for r in reports}
        assert {"parallel_bound", "satellite_bound", "satellite_crossings", "parallel_alternating"} <= names
        # the CLI never exits 3 on the shipped corpus
        codes = [main(["bounds", "parallel", "corpus/3_1.json", "-r", "3"])]
        codes.append(main(["bounds", "satellite", "corpus/lasso_1_2.json", "corpus/3_1.json"]))
        for name in corpus.names():
            if corpus.raw(name)["pd"]:
                codes.append(main(["bounds", "diagram", f"corpus/{name}.json"]))
        capsys.readouterr()
        assert 3 not in codes and set(codes) == {0}
        c.note(f"{len(reports)} reports, {len(codes)} CLI runs")


def test_criterion_10_adequacy(criterion):
    with criterion(10, "adequacy classification") as c:
        for name, d in _reduced_alternating():
            assert adequacy(d).adequate, name
        for name in corpus.NON_ADEQUATE:
            d = corpus.load(name)
            assert not adequacy(d).adequate, name
            assert not all(adequacy_by_flips(d)), name
        for name in corpus.NON_ALTERNATING_ADEQUATE:
            d = corpus.load(name)
            assert d.n == 10 and not d.is_alternating and d.is_reduced
            assert adequacy(d).adequate and all(adequacy_by_flips(d)), name
        c.note("8_19/8_20/8_21 not adequate, 10_152/10_153/10_154 adequate")


def test_fraction_breadth_type():
    # odd q-breadth comes back as an exact half
    assert t_breadth(LaurentPoly({3: 1, 0: 1}, "q")) == Fraction(3, 2)
