"""Planar diagram (PD) codes: validation, orientation, writhe, faces, mirroring.

A crossing is a 4-tuple ``(a, b, c, d)`` of arc labels listed counterclockwise,
starting from the incoming under-strand; the under-strand runs a -> c. Every
label occurs exactly twice in the code. Arcs are numbered consecutively
along each oriented component.

A *dart* ``(i, s)`` means "leave crossing ``i`` along the arc in slot ``s``".
Faces are traced on darts: after travelling along an arc into crossing ``j``
at slot ``t`` we leave again through slot ``t - 1``, which keeps the face on
the left of the direction of travel.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Diagram",
    "DiagramError",
    "FaceMap",
    "faces",
    "mirror",
    "parse_diagram",
    "writhe",
    "NonReducedWarning",
]


class DiagramError(ValueError):
    """Invalid or unsuitable diagram."""


class NonReducedWarning(UserWarning):
    pass


Dart = tuple[int, int]


@dataclass(frozen=True)
class Diagram:
    """An immutable PD code plus a count of crossing-free closed loops."""

    pd: tuple[tuple[int, int, int, int], ...]
    free_loops: int = 0

    def __post_init__(self):
        pd = tuple(tuple(int(x) for x in c) for c in self.pd)
        object.__setattr__(self, "pd", pd)
        if self.free_loops < 0:
            raise DiagramError("free_loops must be nonnegative")
        if not pd and self.free_loops == 0:
            raise DiagramError("empty diagram: no crossings and no free loops")
        counts: dict[int, int] = {}
        for c in pd:
            if len(c) != 4:
                raise DiagramError(f"crossing {c} does not have four slots")
            for x in c:
                counts[x] = counts.get(x, 0) + 1
        bad = sorted(x for x, k in counts.items() if k != 2)
        if bad:
            raise DiagramError(f"arc labels must appear exactly twice; offending labels {bad}")

    # basic sizes

    @property
    def n(self) -> int:
        return len(self.pd)

    @cached_property
    def arcs(self) -> tuple[int, ...]:
        return tuple(sorted({x for c in self.pd for x in c}))

    @property
    def n_arcs(self) -> int:
        return len(self.arcs)

    @cached_property
    def endpoints(self) -> dict[int, tuple[Dart, Dart]]:
        ends: dict[int, list[Dart]] = {}
        for i, c in enumerate(self.pd):
            for s, x in enumerate(c):
                ends.setdefault(x, []).append((i, s))
        return {x: (e[0], e[1]) for x, e in ends.items()}

    def other_end(self, dart: Dart) -> Dart:
        i, s = dart
        e1, e2 = self.endpoints[self.pd[i][s]]
        return e2 if e1 == dart else e1

    # orientation

    @cached_property
    def _orientation(self):
        """Head dart of every arc, component arc lists, and a consistency flag."""
        head: dict[int, Dart] = {}
        components: list[list[int]] = []
        consistent = True
        seen: set[int] = set()
        for start in self.arcs:
            if start in seen:
                continue
            # walk the component with ``start`` entering its endpoint e2
            e1, e2 = self.endpoints[start]
            seq: list[tuple[int, Dart]] = []
            x, h = start, e2
            while True:
                seq.append((x, h))
                seen.add(x)
                i, s = h
                nxt_dart = (i, (s + 2) % 4)
                y = self.pd[nxt_dart[0]][nxt_dart[1]]
                h = self.other_end(nxt_dart)
                x = y
                if x == start and h == e2:
                    break
                if x == start:
                    # component came back along ``start`` reversed; cannot happen in a valid PD
                    raise DiagramError(f"arc {start} is traversed in both directions")
            agree = disagree = 0
            for x, (i, s) in seq:
                if s == 0:
                    agree += 1
                elif s == 2:
                    disagree += 1
                tail = self.other_end((i, s))
                if tail[1] == 0:
                    disagree += 1
                elif tail[1] == 2:
                    agree += 1
            if agree and disagree:
                raise DiagramError("under-strand directions are inconsistent along a component")
            if disagree:
                seq = [(x, self.other_end(h)) for x, h in reversed(seq)]
            elif not agree:
                # all-over component: fall back on label order
                labels = [x for x, _ in seq]
                if len(labels) > 2 and _cyclic_step(labels) < 0:
                    seq = [(x, self.other_end(h)) for x, h in reversed(seq)]
            labels = [x for x, _ in seq]
            if len(labels) > 2 and _cyclic_step(labels) != 1:
                consistent = False
            for x, h in seq:
                head[x] = h
            components.append(labels)
        return head, components, consistent

    @property
    def components(self) -> list[list[int]]:
        """Arc labels of each component, in the direction of travel."""
        return [list(c) for c in self._orientation[1]]

    @property
    def numbering_consistent(self) -> bool:
        return self._orientation[2]

    def head(self, arc: int) -> Dart:
        return self._orientation[0][arc]

    def tail(self, arc: int) -> Dart:
        return self.other_end(self._orientation[0][arc])

    def is_tail(self, dart: Dart) -> bool:
        i, s = dart
        return self.tail(self.pd[i][s]) == dart

    @cached_property
    def signs(self) -> tuple[int, ...]:
        """Crossing signs; negative when the over-strand runs from slot b to slot d."""
        out = []
        for i, c in enumerate(self.pd):
            over_in_b = self.head(c[1]) == (i, 1)
            out.append(-1 if over_in_b else 1)
        return tuple(out)

    def component_of_arc(self) -> dict[int, int]:
        return {x: k for k, comp in enumerate(self._orientation[1]) for x in comp}

    @property
    def n_components(self) -> int:
        return len(self._orientation[1]) + self.free_loops

    # connectivity

    @cached_property
    def crossing_components(self) -> list[list[int]]:
        """Connected pieces of the underlying plane graph, as crossing index lists."""
        parent = list(range(self.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for (i, _), (j, _) in self.endpoints.values():
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
        groups: dict[int, list[int]] = {}
        for i in range(self.n):
            groups.setdefault(find(i), []).append(i)
        return sorted(groups.values())

    @property
    def is_connected(self) -> bool:
        pieces = len(self.crossing_components) + self.free_loops
        return pieces <= 1

    @property
    def is_alternating(self) -> bool:
        """Each arc runs from an over-crossing to an under-crossing."""
        for x, (e1, e2) in self.endpoints.items():
            under1 = e1[1] in (0, 2)
            under2 = e2[1] in (0, 2)
            if under1 == under2:
                return False
        return True

    @cached_property
    def nugatory_crossings(self) -> tuple[int, ...]:
        """Crossings with some face touching two of their corners."""
        if not self.n:
            return ()
        fm = faces(self, require_connected=False)
        out = []
        for i in range(self.n):
            corner_faces = [fm.dart_face[(i, s)] for s in range(4)]
            if len(set(corner_faces)) < 4:
                out.append(i)
        return tuple(out)

    @property
    def is_reduced(self) -> bool:
        return not self.nugatory_crossings

    # serialization

    def to_json(self) -> dict:
        out: dict = {"pd": [list(c) for c in self.pd]}
        if self.free_loops:
            out["free_loops"] = self.free_loops
        return out

    def __repr__(self) -> str:
        return f"Diagram(n={self.n}, free_loops={self.free_loops}, pd={[list(c) for c in self.pd]})"


def _cyclic_step(labels: Sequence[int]) -> int:
    """+1 if labels increase cyclically (one wrap), -1 if they decrease, 0 otherwise."""
    k = len(labels)
    up = sum(1 for i in range(k) if labels[(i + 1) % k] > labels[i])
    if up == k - 1:
        return 1
    if up == 1:
        return -1
    return 0


def parse_diagram(text: str | dict) -> tuple[Diagram, dict]:
    """Parse the JSON diagram format. Returns the diagram and the raw ``annular`` block (or ``{}``).

    Non-reduced diagrams are accepted with a :class:`NonReducedWarning`.
    """
    if isinstance(text, str):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"malformed JSON: {exc}") from exc
    else:
        data = text
    if not isinstance(data, dict) or "pd" not in data:
        raise DiagramError("diagram JSON must be an object with a 'pd' field")
    pd = data["pd"]
    if not isinstance(pd, list) or any(not isinstance(c, list) or len(c) != 4 for c in pd):
        raise DiagramError("'pd' must be a list of 4-element lists")
    d = Diagram(tuple(tuple(c) for c in pd), int(data.get("free_loops", 0)))
    if d.n and d.is_connected and not d.is_reduced:
        warnings.warn(f"diagram has nugatory crossings {list(d.nugatory_crossings)}", NonReducedWarning, stacklevel=2)
    return d, dict(data.get("annular", {}))


def writhe(d: Diagram) -> int:
    if not d.numbering_consistent:
        raise DiagramError("arc numbering is not consecutive along the oriented components")
    return sum(d.signs)


def mirror(d: Diagram) -> Diagram:
    """Swap over and under at every crossing; the plane graph is unchanged."""
    out = []
    for i, (a, b, c, dd) in enumerate(d.pd):
        if d.signs[i] < 0:  # over-strand b -> d becomes the under-strand
            out.append((b, c, dd, a))
        else:
            out.append((dd, a, b, c))
    return Diagram(tuple(out), d.free_loops)


@dataclass(frozen=True)
class FaceMap:
    """Faces as cyclic lists of darts, with (arc, side) views and adjacency."""

    darts: tuple[tuple[Dart, ...], ...]
    incidences: tuple[tuple[tuple[int, str], ...], ...]
    dart_face: dict = field(repr=False)
    side_face: dict = field(repr=False)
    adjacency: dict = field(repr=False)

    def __len__(self) -> int:
        return len(self.darts)

    def face_of(self, arc: int, side: str) -> int:
        """Index of the face on the given side ('L' or 'R') of an oriented arc."""
        return self.side_face[(arc, side)]

    def arcs_of(self, f: int) -> list[int]:
        return [x for x, _ in self.incidences[f]]

    def neighbours(self, f: int) -> dict[int, list[int]]:
        """Adjacent faces, each with the sorted arcs separating it from ``f``."""
        return {g: sorted(arcs) for (a, g), arcs in self.adjacency.items() if a == f}

    def resolve(self, spec) -> int:
        """Turn a face spec (index or list of boundary arcs) into an index."""
        if isinstance(spec, bool):
            raise DiagramError("face spec must be an integer or a list of arc labels")
        if isinstance(spec, int):
            if not 0 <= spec < len(self.darts):
                raise DiagramError(f"face index {spec} out of range (0..{len(self.darts) - 1})")
            return spec
        want = sorted(int(x) for x in spec)
        hits = [f for f in range(len(self.darts)) if sorted(self.arcs_of(f)) == want]
        if len(hits) != 1:
            raise DiagramError(f"face spec {spec} matches {len(hits)} traced faces")
        return hits[0]


def faces(d: Diagram, require_connected: bool = True) -> FaceMap:
    """Trace faces deterministically from the smallest unused dart."""
    if require_connected and not d.is_connected:
        pieces = d.crossing_components
        raise DiagramError(f"diagram is disconnected: crossing groups {pieces}, free loops {d.free_loops}")
    if d.n == 0:
        # one free loop: inside and outside
        return FaceMap(((), ()), ((), ()), {}, {}, {})
    used: set[Dart] = set()
    face_darts: list[tuple[Dart, ...]] = []
    dart_face: dict[Dart, int] = {}
    for i in range(d.n):
        for s in range(4):
            if (i, s) in used:
                continue
            cyc = []
            cur = (i, s)
            while cur not in used:
                used.add(cur)
                cyc.append(cur)
                dart_face[cur] = len(face_darts)
                j, t = d.other_end(cur)
                cur = (j, (t - 1) % 4)
            face_darts.append(tuple(cyc))
    incidences = []
    side_face: dict[tuple[int, str], int] = {}
    for f, cyc in enumerate(face_darts):
        inc = []
        for dart in cyc:
            x = d.pd[dart[0]][dart[1]]
            side = "L" if d.is_tail(dart) else "R"
            inc.append((x, side))
            side_face[(x, side)] = f
        incidences.append(tuple(inc))
    adjacency: dict[tuple[int, int], list[int]] = {}
    for x in d.arcs:
        fl, fr = side_face[(x, "L")], side_face[(x, "R")]
        adjacency.setdefault((fl, fr), []).append(x)
        if fl != fr:
            adjacency.setdefault((fr, fl), []).append(x)
    return FaceMap(tuple(face_darts), tuple(incidences), dart_face, side_face, adjacency)


def disjoint_union(d1: Diagram, d2: Diagram) -> Diagram:
    """Place two diagrams side by side, shifting the labels of the second."""
    off = max(d1.arcs, default=0)
    pd = d1.pd + tuple(tuple(x + off for x in c) for c in d2.pd)
    return Diagram(pd, d1.free_loops + d2.free_loops)


def relabel(d: Diagram) -> Diagram:
    """Renumber arcs 1..2n consecutively along each component, in component order."""
    mapping: dict[int, int] = {}
    nxt = 1
    for comp in d.components:
        # start each component at its smallest label so the result is canonical
        k = comp.index(min(comp))
        for x in comp[k:] + comp[:k]:
            mapping[x] = nxt
            nxt += 1
    return Diagram(tuple(tuple(mapping[x] for x in c) for c in d.pd), d.free_loops)


def linking_numbers(d: Diagram) -> dict[tuple[int, int], int]:
    """Pairwise linking numbers between components (indexed as in ``d.components``)."""
    comp = d.component_of_arc()
    twice: dict[tuple[int, int], int] = {}
    for i, c in enumerate(d.pd):
        p, q = comp[c[0]], comp[c[1]]
        if p != q:
            key = (min(p, q), max(p, q))
            twice[key] = twice.get(key, 0) + d.signs[i]
    return {k: v // 2 for k, v in twice.items()}


def self_writhes(d: Diagram) -> list[int]:
    comp = d.component_of_arc()
    out = [0] * len(d.components)
    for i, c in enumerate(d.pd):
        if comp[c[0]] == comp[c[1]]:
            out[comp[c[0]]] += d.signs[i]
    return out


def load(path) -> tuple[Diagram, dict]:
    with open(path) as fh:
        return parse_diagram(fh.read())


def dump(d: Diagram, annular: dict | None = None) -> str:
    data = d.to_json()
    if annular:
        data["annular"] = annular
    return json.dumps(data, sort_keys=True)


def crossings_touching(d: Diagram, arcs: Iterable[int]) -> set[int]:
    want = set(arcs)
    return {i for i, c in enumerate(d.pd) if want & set(c)}
