"""Diagram constructors: parallels, braid closures, cables, grafts, sums, lassos, satellites."""

from __future__ import annotations

import random
import warnings
from typing import Sequence

from .annular import AnnularDiagram, Box, annular_bracket, close_box, essential_circle, to_box, wrapping_number
from .bracket import a_to_q, unnormalized_bracket, writhe_factor
from .builder import Builder, check_planar
from .diagram import Diagram, DiagramError, mirror, writhe
from .laurent import LaurentPoly, delta

__all__ = [
    "SATELLITE_LIMIT",
    "braid_closure",
    "cable",
    "cable_tube",
    "connected_sum",
    "embed",
    "graft",
    "lasso",
    "parallel",
    "parallel_annular",
    "planar",
    "random_braid_diagram",
    "satellite",
    "satellite_jones",
    "torus_braid",
]

SATELLITE_LIMIT = 60

# grid ports of one small crossing: under strand runs S -> N
_S, _E, _N, _W = 0, 1, 2, 3


def _parallel_builder(d: Diagram, r: int):
    """Builder for D^r plus, per arc, the (tail port, head port) of each copy.

    Copy k of an arc is the k-th from the left, looking along the arc.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    b = Builder()
    grid: list[list[list[int]]] = []  # grid[i][col][row] -> crossing id
    for i, c in enumerate(d.pd):
        cells = [[b.crossing(0) for _ in range(r)] for _ in range(r)]
        grid.append(cells)
        west = d.signs[i] < 0  # over strand runs b -> d, i.e. east to west
        for col in range(r):
            for row in range(r):
                x = cells[col][row]
                if row + 1 < r:
                    b.connect(4 * x + _N, 4 * cells[col][row + 1] + _S)
                if col + 1 < r:
                    y = cells[col + 1][row]
                    if west:
                        b.connect(4 * y + _W, 4 * x + _E)
                    else:
                        b.connect(4 * x + _E, 4 * y + _W)

    def port(i: int, slot: int, k: int) -> int:
        cells = grid[i]
        row = k if d.signs[i] < 0 else r - 1 - k
        if slot == 0:
            return 4 * cells[k][0] + _S
        if slot == 2:
            return 4 * cells[k][r - 1] + _N
        if slot == 1:
            return 4 * cells[r - 1][row] + _E
        return 4 * cells[0][row] + _W

    copies: dict[int, list[tuple[int, int]]] = {}
    for x in d.arcs:
        (ti, ts), (hi, hs) = d.tail(x), d.head(x)
        lst = []
        for k in range(r):
            tp, hp = port(ti, ts, k), port(hi, hs, k)
            b.connect(tp, hp)
            lst.append((tp, hp))
        copies[x] = lst
    b.extra_trivial = d.free_loops * r
    return b, copies


def parallel(d: Diagram, r: int) -> Diagram:
    """The blackboard r-parallel: every crossing becomes an r-by-r grid."""
    if d.n == 0:
        return Diagram((), d.free_loops * r)
    if not d.numbering_consistent:
        raise DiagramError("parallel needs consecutive arc numbering along components")
    b, _ = _parallel_builder(d, r)
    return b.finish().diagram


def parallel_annular(ad: AnnularDiagram, r: int) -> AnnularDiagram:
    """r-parallel of an annular diagram; meridian arcs and marked faces follow the copies."""
    loops = ad.essential_loops * r
    d = ad.base
    if d is None or d.n == 0:
        base = Diagram((), d.free_loops * r) if d is not None and d.free_loops else None
        return AnnularDiagram(base, 0 if base else None, 0 if base else None, (), loops, True)
    b, copies = _parallel_builder(d, r)
    em = b.finish()
    check_planar(em)
    pd = em.diagram
    fm_old = ad.face_map

    def label(port):
        c, s = em.port_dart[port]
        return pd.pd[c][s]

    new_mer = []
    cur = ad.hole_face
    for x in ad.meridian:
        up = fm_old.face_of(x, "L") == cur
        order = range(r) if up else range(r - 1, -1, -1)
        new_mer.extend(label(copies[x][k][0]) for k in order)
        cur = fm_old.face_of(x, "R") if up else fm_old.face_of(x, "L")
    from .diagram import faces

    fm = faces(pd)

    def side_face(x, side):
        # outermost copy on that side of the original arc
        if side == "L":
            tp, _ = copies[x][0]
            return fm.dart_face[em.port_dart[tp]]
        _, hp = copies[x][r - 1]
        return fm.dart_face[em.port_dart[hp]]

    def locate(f):
        x, side = fm_old.incidences[f][0]
        return side_face(x, side)

    return AnnularDiagram(pd, locate(ad.hole_face), locate(ad.outer_face), tuple(new_mer), loops, True)


def planar(ad: AnnularDiagram) -> Diagram:
    """Forget the hole: essential loops become free loops."""
    if ad.base is None:
        return Diagram((), ad.essential_loops)
    return Diagram(ad.base.pd, ad.base.free_loops + ad.essential_loops)


def embed(d: Diagram, arc: int | None = None) -> AnnularDiagram:
    """Put d in the solid torus with wrapping number one, the hole beside ``arc``."""
    if d.n == 0:
        if d.free_loops != 1:
            raise DiagramError("only a single crossingless loop can be embedded")
        return essential_circle(1)
    from .diagram import faces

    x = min(d.arcs) if arc is None else arc
    fm = faces(d)
    return AnnularDiagram(d, fm.face_of(x, "L"), fm.face_of(x, "R"), (x,), 0, True)


# braids


def _braid_box(word: Sequence[int], strands: int) -> Box:
    """Box for a braid word; generator +-i crosses positions i-1 and i, sign from the letter."""
    b = Builder()
    bottom = [b.terminal() for _ in range(strands)]
    top = [b.terminal() for _ in range(strands)]
    cur = list(bottom)
    for g in word:
        j = abs(g) - 1
        if not 0 <= j < strands - 1:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        # ports: 0 = SW, 1 = SE, 2 = NE, 3 = NW; left strand under gives a negative crossing
        c = b.crossing(1 if g > 0 else 0)
        b.connect(cur[j], 4 * c)
        b.connect(cur[j + 1], 4 * c + 1)
        cur[j], cur[j + 1] = 4 * c + 3, 4 * c + 2
    for i in range(strands):
        b.connect(cur[i], top[i])
    return Box(b, bottom, top)


def braid_closure(word: Sequence[int], strands: int) -> AnnularDiagram:
    """Closure of a braid word around the hole."""
    if strands < 1:
        raise ValueError("need at least one strand")
    return close_box(_braid_box(word, strands))


def torus_braid(p: int, r: int) -> AnnularDiagram:
    """Closed braid (s_1 ... s_{r-1})^p; the sign of p sets the crossing signs."""
    if r < 1:
        raise ValueError("r must be at least 1")
    sgn = 1 if p >= 0 else -1
    word = [sgn * i for _ in range(abs(p)) for i in range(1, r)]
    ad = braid_closure(word, r)
    return AnnularDiagram(ad.base, ad.hole_face, ad.outer_face, ad.meridian_arcs, ad.essential_loops, p % r == 0)


# grafting


def graft(rootstock: AnnularDiagram, scion: AnnularDiagram, k: int, force: bool = False) -> AnnularDiagram:
    """Switch the k innermost meridian strands of rootstock and scion.

    The scion's remaining strands are closed off beside its box, so the
    result keeps the rootstock's meridian.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if rootstock.strands < k or scion.strands < k:
        raise DiagramError(f"graft needs {k} meridian strands on both sides ({rootstock.strands}, {scion.strands})")
    if not (rootstock.parallel_family or scion.parallel_family):
        if not force:
            raise DiagramError("graft is only well defined when one side is a parallel; pass force=True to override")
        warnings.warn("grafting two non-parallel diagrams depends on the chosen meridians", stacklevel=2)
    R, S = to_box(rootstock), to_box(scion)
    b = R.builder
    off = b.absorb(S.builder)
    s_bot = [Builder.translate(t, off) for t in S.bottom]
    s_top = [Builder.translate(t, off) for t in S.top]
    for i in range(k, S.width):
        b.connect(s_top[i], s_bot[i])
    bottom, top = list(R.bottom), list(R.top)
    for i in range(k):
        b.connect(R.top[i], s_bot[i])
        top[i] = s_top[i]
    fam = rootstock.parallel_family and (scion.parallel_family or k == rootstock.strands)
    return close_box(Box(b, bottom, top, fam))


def connected_sum(d1: Diagram, d2: Diagram) -> Diagram:
    """K1 # K2 as the one-strand graft of the trivially embedded knots."""
    return planar(graft(embed(d1), embed(d2), 1, force=True))


def _require_reduced(d: Diagram, force: bool) -> None:
    if d.n and not d.is_reduced and not force:
        raise DiagramError(f"companion has nugatory crossings {list(d.nugatory_crossings)}; pass force=True to override")


def cable_tube(d: Diagram, r: int, force: bool = False) -> AnnularDiagram:
    """The 0-framed r-cable of d as an annular diagram with r meridian strands."""
    _require_reduced(d, force)
    w = writhe(d) if d.n else 0
    par = parallel_annular(embed(d), r)
    if r == 1:
        return par
    return graft(torus_braid(-w * r, r), par, r)


def cable(d: Diagram, r: int, force: bool = False) -> Diagram:
    """(D; r): the r-parallel corrected by -writhe(D) full twists."""
    return planar(cable_tube(d, r, force))


# lassos


def _twist_box(b: Builder, bl: int, br: int, tl: int, tr: int, r: int) -> None:
    """Horizontal row of r crossings joining two vertical positions."""
    prev = None
    for j in range(r):
        c = b.crossing(1)
        if prev is None:
            b.connect(bl, 4 * c)
            b.connect(4 * c + 3, tl)
        else:
            b.connect(4 * prev + 2, 4 * c + 3)
            b.connect(4 * c, 4 * prev + 1)
        prev = c
    b.connect(4 * prev + 2, tr)
    b.connect(br, 4 * prev + 1)


def lasso(*rs: int) -> AnnularDiagram:
    """Standard annular diagram of the lasso L(r_1, ..., r_m)."""
    if any(r < 1 for r in rs):
        raise ValueError("lasso twist counts must be positive")
    m = len(rs)
    if m == 0:
        return essential_circle(1)
    b = Builder()
    bottom = [b.terminal() for _ in range(m + 1)]
    cur = list(bottom)
    for i, r in enumerate(rs):
        tl, tr = b.terminal(), b.terminal()
        _twist_box(b, cur[i], cur[i + 1], tl, tr, r)
        cur[i], cur[i + 1] = tl, tr
    top = [b.terminal() for _ in range(m + 1)]
    for i in range(m + 1):
        b.connect(cur[i], top[i])
    return close_box(Box(b, bottom, top))


# satellites


def _check_pattern(p: AnnularDiagram) -> int:
    M = p.strands
    w, _ = wrapping_number(p)
    if w != M:
        raise DiagramError(f"pattern meridian meets {M} strands but the wrapping number is {w}")
    if M == 0:
        raise DiagramError("pattern has wrapping number 0")
    return M


def satellite(p: AnnularDiagram, c: Diagram, force: bool = False) -> Diagram:
    """Sat(P, C): graft the pattern through all M strands of the 0-framed companion tube."""
    M = _check_pattern(p)
    _require_reduced(c, force)
    wc = writhe(c) if c.n else 0
    est = p.n + M * M * c.n + abs(wc) * M * (M - 1)
    if est > SATELLITE_LIMIT and not force:
        raise DiagramError(f"satellite would have {est} crossings (> {SATELLITE_LIMIT}); pass force=True")
    tube = cable_tube(c, M, force=True)
    return planar(graft(p, tube, M))


def satellite_jones(p: AnnularDiagram, c: Diagram, force: bool = False, engine: str = "fast") -> LaurentPoly:
    """J(Sat(P, C)) as sum_k beta_k J(C; k), carried out in the unnormalized bracket."""
    _check_pattern(p)
    _require_reduced(c, force)
    wc = writhe(c) if c.n else 0
    from .annular import annular_writhe

    alpha = annular_bracket(p, engine).coefficients()
    total = LaurentPoly.zero()
    for k, a in alpha.items():
        if k == 0:
            u = LaurentPoly.constant(1)
        else:
            u = unnormalized_bracket(cable(c, k, force=True), engine) * writhe_factor(k * wc)
        total = total + a * u
    total = total * writhe_factor(annular_writhe(p))
    return a_to_q(total.divmod_exact(delta()))


# random diagrams for tests


def random_braid_diagram(rng: random.Random, strands: int, length: int, flips: float = 0.0) -> Diagram:
    """Closure of a random braid word using every generator, with optional crossing flips."""
    if strands < 2:
        raise ValueError("need at least two strands")
    if length < strands - 1:
        raise ValueError("word too short to use every generator")
    word = [rng.choice((1, -1)) * i for i in range(1, strands)]
    word += [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length - len(word))]
    rng.shuffle(word)
    d = planar(braid_closure(word, strands))
    if flips:
        pd = list(d.pd)
        mirrored = mirror(d).pd
        for i in range(len(pd)):
            if rng.random() < flips:
                pd[i] = mirrored[i]
        d = Diagram(tuple(pd), d.free_loops)
    return d
