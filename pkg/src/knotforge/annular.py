"""Diagrams in the annulus: wrapping number, meridians, annular bracket, J_ST.

An annular diagram is a planar diagram with two marked faces: the one
holding the hole and the unbounded one. Crossingless circles around the
hole are carried as a count (``essential_loops``) and sit innermost.

Meridians are read hole -> outer. "Up" along a meridian strand means
counterclockwise around the hole, i.e. with the hole on the left.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .bracket import annular_counts_to_poly, state_sum, writhe_factor
from .builder import Builder, Emitted, check_planar, from_diagram
from .diagram import Diagram, DiagramError, FaceMap, faces, writhe
from .laurent import AnnularPoly

__all__ = [
    "AnnularDiagram",
    "Box",
    "LayerColoring",
    "MeridianPath",
    "all_minimal_meridians",
    "annular_bracket",
    "close_box",
    "essential_circle",
    "forget_hole",
    "from_json",
    "jones_st",
    "minimal_meridian",
    "parse_annular",
    "to_box",
    "wrap_lower_bound_check",
    "wrapping_number",
]


@dataclass(frozen=True)
class AnnularDiagram:
    base: Diagram | None
    hole_face: int | None = None
    outer_face: int | None = None
    meridian_arcs: tuple[int, ...] | None = None
    essential_loops: int = 0
    parallel_family: bool = False

    def __post_init__(self):
        if self.base is None and self.essential_loops == 0:
            raise DiagramError("annular diagram is empty")
        if self.meridian_arcs is not None:
            object.__setattr__(self, "meridian_arcs", tuple(int(x) for x in self.meridian_arcs))
        if self.base is not None and self.base.n:
            if self.base.is_connected:
                fm = self.face_map
                if self.hole_face is None or self.outer_face is None:
                    raise DiagramError("hole_face and outer_face are required")
                fm.resolve(self.hole_face)
                fm.resolve(self.outer_face)
                if self.meridian_arcs is not None:
                    _check_path(fm, self.hole_face, self.outer_face, self.meridian_arcs)
            elif self.meridian_arcs is None:
                raise DiagramError("a disconnected annular diagram needs explicit meridian_arcs")

    @cached_property
    def face_map(self) -> FaceMap:
        if self.base is None:
            raise DiagramError("no base diagram")
        return faces(self.base)

    @property
    def n(self) -> int:
        return self.base.n if self.base is not None else 0

    @property
    def meridian(self) -> tuple[int, ...]:
        """Designated meridian arcs, or the canonical minimal one."""
        if self.meridian_arcs is not None:
            return self.meridian_arcs
        if self.base is None or self.base.n == 0:
            return ()
        return tuple(minimal_meridian(self).crossed_arcs)

    @property
    def strands(self) -> int:
        """Strands met by the designated meridian, essential loops included."""
        return len(self.meridian) + self.essential_loops

    def to_json(self) -> dict:
        data = self.base.to_json() if self.base is not None else {"pd": [], "free_loops": 0}
        ann: dict = {"essential_loops": self.essential_loops}
        if self.hole_face is not None:
            ann["hole_face"] = self.hole_face
            ann["outer_face"] = self.outer_face
        if self.meridian_arcs is not None:
            ann["meridian_arcs"] = list(self.meridian_arcs)
        if self.parallel_family:
            ann["parallel_family"] = True
        data["annular"] = ann
        return data


def from_json(d: Diagram | None, ann: dict) -> AnnularDiagram:
    """Build an AnnularDiagram from a parsed diagram and its ``annular`` block."""
    loops = int(ann.get("essential_loops", 0))
    if d is not None and d.n == 0 and d.free_loops == 0:
        d = None
    hole = outer = None
    if d is not None and d.n and d.is_connected:
        fm = faces(d)
        hole = fm.resolve(ann["hole_face"]) if "hole_face" in ann else None
        outer = fm.resolve(ann["outer_face"]) if "outer_face" in ann else None
    mer = ann.get("meridian_arcs")
    return AnnularDiagram(d, hole, outer, tuple(mer) if mer is not None else None, loops, bool(ann.get("parallel_family", False)))


def parse_annular(text) -> AnnularDiagram:
    """Parse diagram JSON that carries an ``annular`` block (or defaults to none)."""
    import json

    from .diagram import parse_diagram

    data = json.loads(text) if isinstance(text, str) else dict(text)
    ann = dict(data.get("annular") or {})
    if not data.get("pd") and not data.get("free_loops"):
        if int(ann.get("essential_loops", 0)) <= 0:
            raise DiagramError("empty diagram: no crossings, free loops or essential loops")
        return from_json(None, ann)
    d, ann = parse_diagram(data)
    return from_json(d, ann)


def essential_circle(count: int = 1) -> AnnularDiagram:
    """``count`` concentric crossingless circles around the hole."""
    return AnnularDiagram(None, essential_loops=count, parallel_family=True)


def _check_path(fm: FaceMap, hole: int, outer: int, arcs) -> None:
    cur = hole
    for x in arcs:
        left, right = fm.face_of(x, "L"), fm.face_of(x, "R")
        if cur == left:
            cur = right
        elif cur == right:
            cur = left
        else:
            raise DiagramError(f"meridian arc {x} does not border face {cur}")
    if cur != outer:
        raise DiagramError(f"meridian arcs end in face {cur}, not the outer face {outer}")


# wrapping number (Method 1) and minimal meridians (Method 2)


@dataclass(frozen=True)
class LayerColoring:
    layer: dict[int, int]  # face -> colour, 1 at the hole face; outer face absent
    colors: int


@dataclass(frozen=True)
class MeridianPath:
    faces: tuple[int, ...]
    crossed_arcs: tuple[int, ...]
    # face -> list of (previous face, arc) on some shortest path from the hole
    predecessors: dict = field(default_factory=dict, repr=False, compare=False)


def _bfs(ad: AnnularDiagram) -> dict[int, int]:
    fm = ad.face_map
    dist = {ad.hole_face: 0}
    q = deque([ad.hole_face])
    while q:
        f = q.popleft()
        for g in sorted(fm.neighbours(f)):
            if g not in dist:
                dist[g] = dist[f] + 1
                q.append(g)
    return dist


def wrapping_number(ad: AnnularDiagram) -> tuple[int, LayerColoring]:
    """Shortest hole-to-outer face distance plus the number of essential loops."""
    if ad.base is None or ad.base.n == 0:
        return ad.essential_loops, LayerColoring({}, ad.essential_loops)
    if not ad.base.is_connected:
        raise DiagramError("wrapping number needs a connected base diagram")
    dist = _bfs(ad)
    w = dist[ad.outer_face]
    e = ad.essential_loops
    layer = {f: e + k + 1 for f, k in sorted(dist.items()) if k < w}
    return w + e, LayerColoring(layer, w + e)


def _predecessors(ad: AnnularDiagram, dist: dict[int, int]) -> dict[int, list[tuple[int, int]]]:
    fm = ad.face_map
    pred: dict[int, list[tuple[int, int]]] = {}
    for f, k in dist.items():
        for g, arcs in fm.neighbours(f).items():
            if dist.get(g) == k - 1:
                for x in arcs:
                    pred.setdefault(f, []).append((g, x))
    for v in pred.values():
        v.sort(key=lambda t: (t[1], t[0]))
    return pred


def minimal_meridian(ad: AnnularDiagram) -> MeridianPath:
    """Canonical shortest hole-to-outer path; ties go to the smallest arc label."""
    if ad.base is None or ad.base.n == 0:
        return MeridianPath((), ())
    dist = _bfs(ad)
    pred = _predecessors(ad, dist)
    path_f = [ad.outer_face]
    path_a = []
    f = ad.outer_face
    while f != ad.hole_face:
        g, x = pred[f][0]
        path_f.append(g)
        path_a.append(x)
        f = g
    return MeridianPath(tuple(reversed(path_f)), tuple(reversed(path_a)), pred)


def all_minimal_meridians(ad: AnnularDiagram, limit: int = 10_000) -> list[MeridianPath]:
    """Every shortest meridian, read off the predecessor structure."""
    mp = minimal_meridian(ad)
    if not mp.crossed_arcs:
        return [mp]
    out: list[MeridianPath] = []

    def rec(f, fs, xs):
        if len(out) >= limit:
            return
        if f == ad.hole_face:
            out.append(MeridianPath(tuple(reversed(fs)), tuple(reversed(xs))))
            return
        for g, x in mp.predecessors[f]:
            rec(g, fs + [g], xs + [x])

    rec(ad.outer_face, [ad.outer_face], [])
    return out


# brackets


def annular_bracket(ad: AnnularDiagram, engine: str = "fast", meridian=None) -> AnnularPoly:
    """Sum of A^sigma * delta^(trivial) * z^(essential) over all states."""
    if ad.base is None:
        return AnnularPoly({(0, ad.essential_loops): 1})
    mer = ad.meridian if meridian is None else tuple(meridian)
    if ad.base.n == 0:
        return annular_counts_to_poly({(0, 0, 0): 1}, ad.base.free_loops, ad.essential_loops)
    counts = state_sum(ad.base, mer, engine=engine, override=True)
    return annular_counts_to_poly(counts, ad.base.free_loops, ad.essential_loops)


def forget_hole(p: AnnularPoly):
    """Substitute z -> delta: the unnormalized planar bracket."""
    from .laurent import delta

    return p.substitute(z=delta())


def annular_writhe(ad: AnnularDiagram) -> int:
    return writhe(ad.base) if ad.base is not None and ad.base.n else 0


def jones_st(ad: AnnularDiagram, engine: str = "fast") -> AnnularPoly:
    """(-A^-3)^w times the annular bracket, written in q = t^(1/2)."""
    p = annular_bracket(ad, engine)
    f = writhe_factor(annular_writhe(ad))
    terms: dict[tuple[int, int], int] = {}
    for (e, k), c in p.terms.items():
        for fe, fc in f.terms.items():
            a = e + fe
            if a % 2:
                raise DiagramError(f"odd A-exponent {a} in J_ST")
            key = (-a // 2, k)
            terms[key] = terms.get(key, 0) + c * fc
    return AnnularPoly(terms, "q")


def wrap_lower_bound_check(ad: AnnularDiagram):
    """Top z-degree of J_ST against the diagram's wrapping number."""
    from .bounds import BoundReport

    M = max(jones_st(ad).z_degree(), 0)
    w, _ = wrapping_number(ad)
    return BoundReport(
        name="wrap_lower_bound",
        lhs=M,
        rhs=w,
        op="<=",
        hypothesis=(),
        provenance={"lhs": "top z-degree of jones_st", "rhs": "face BFS hole->outer"},
        notes="equality certifies the knot-level wrapping number" if M == w else "",
    )


# boxes: a diagram cut open along a meridian


@dataclass
class Box:
    """A builder with ``bottom``/``top`` terminals per meridian position (0 = innermost)."""

    builder: Builder
    bottom: list[int]
    top: list[int]
    parallel_family: bool = False

    @property
    def width(self) -> int:
        return len(self.bottom)


def to_box(ad: AnnularDiagram) -> Box:
    """Cut along the designated meridian; strands travel up from bottom to top."""
    if ad.base is not None:
        b, ends = from_diagram(ad.base)
    else:
        b, ends = Builder(), {}
    bottom, top = [], []
    for _ in range(ad.essential_loops):
        lo, hi = b.terminal(), b.terminal()
        b.connect(lo, hi)
        bottom.append(lo)
        top.append(hi)
    mer = ad.meridian
    if mer:
        fm = ad.face_map
        cur = ad.hole_face
        for x in mer:
            tp, hp = ends[x]
            b.disconnect(tp, hp)
            lo, hi = b.terminal(), b.terminal()
            if fm.face_of(x, "L") == cur:
                # arc runs up: tail side reaches the top edge, head side leaves the bottom
                b.connect(tp, hi)
                b.connect(lo, hp)
                cur = fm.face_of(x, "R")
            else:
                b.connect(tp, lo)
                b.connect(hi, hp)
                cur = fm.face_of(x, "L")
            bottom.append(lo)
            top.append(hi)
    return Box(b, bottom, top, ad.parallel_family)


def close_box(box: Box, check: bool = True) -> AnnularDiagram:
    """Join every top terminal to the bottom one at its position across the seam."""
    b = box.builder
    for lo, hi in zip(box.bottom, box.top):
        b.connect(hi, lo, seam=True)
    em = b.finish()
    if check:
        check_planar(em)
    return _annular_from_emitted(b, em, box)


def _annular_from_emitted(b: Builder, em: Emitted, box: Box) -> AnnularDiagram:
    d = em.diagram
    if d is None or d.n == 0:
        return AnnularDiagram(d, 0 if d else None, 0 if d else None, (), em.essential_loops, box.parallel_family)
    ups: list[tuple[int, int]] = []  # (port before seam, port after seam) per ported position
    for lo, hi in zip(box.bottom, box.top):
        if hi not in b.terminal_edge:
            continue
        _, before = b._walk(lo, hi)
        _, after = b._walk(hi, lo)
        ups.append((before, after))
    labels = tuple(d.pd[c][s] for c, s in (em.port_dart[p] for p, _ in ups))
    hole = outer = None
    if d.is_connected and ups:
        fm = faces(d)
        hole = fm.dart_face[em.port_dart[ups[0][0]]]
        outer = fm.dart_face[em.port_dart[ups[-1][1]]]
    elif d.is_connected:
        raise DiagramError("closed box has crossings but no strand crosses the seam")
    return AnnularDiagram(d, hole, outer, labels, em.essential_loops, box.parallel_family)
