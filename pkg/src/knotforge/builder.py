"""Port-level assembly of planar diagrams.

Constructors (parallels, braids, grafts, ...) work here rather than on PD
labels. A crossing owns four ports ``4*c + p`` in counterclockwise order and
an ``under`` offset: ports ``under`` and ``under + 2`` carry the
under-strand. Terminals (negative ids) are pass-through beads used for box
boundaries; they are contracted away by :meth:`Builder.finish`.

Every ``connect(x, y)`` records travel from ``x`` to ``y``. The travel hints
pick the orientation of each emitted component; they need not be globally
consistent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, DiagramError, faces

Node = int


@dataclass
class Emitted:
    diagram: Diagram | None
    port_dart: dict[int, tuple[int, int]]  # builder port -> (crossing, slot) in the PD
    trivial_loops: int
    essential_loops: int


class Builder:
    def __init__(self):
        self.under: list[int] = []
        self.nbr: dict[Node, list[Node]] = {}
        self.fwd: dict[Node, Node] = {}  # hinted successor
        self.bwd: dict[Node, Node] = {}  # hinted predecessor
        self.seam: dict[frozenset, int] = {}  # node pair -> number of seam edges
        self._next_terminal = -1
        self.extra_trivial = 0
        self.extra_essential = 0

    def crossing(self, under: int) -> int:
        if under not in (0, 1):
            raise ValueError("under offset must be 0 or 1")
        self.under.append(under)
        return len(self.under) - 1

    def terminal(self) -> Node:
        t = self._next_terminal
        self._next_terminal -= 1
        return t

    def connect(self, x: Node, y: Node, seam: bool = False) -> None:
        for node in (x, y):
            lst = self.nbr.setdefault(node, [])
            limit = 1 if node >= 0 else 2
            if len(lst) >= limit:
                raise DiagramError(f"node {node} is already fully connected")
        self.nbr[x].append(y)
        self.nbr[y].append(x)
        self.fwd[x] = y
        self.bwd[y] = x
        if seam:
            key = frozenset((x, y))
            self.seam[key] = self.seam.get(key, 0) + 1

    def absorb(self, other: "Builder") -> tuple[int, int]:
        """Copy ``other`` in; returns (crossing offset, terminal offset) to translate its ids."""
        coff = len(self.under)
        toff = self._next_terminal + 1  # other's -1 maps to self's next free id

        def tr(v):
            return v + 4 * coff if v >= 0 else v + toff

        self.under.extend(other.under)
        for v, lst in other.nbr.items():
            self.nbr[tr(v)] = [tr(w) for w in lst]
        for v, w in other.fwd.items():
            self.fwd[tr(v)] = tr(w)
        for v, w in other.bwd.items():
            self.bwd[tr(v)] = tr(w)
        for e, cnt in other.seam.items():
            self.seam[frozenset(tr(v) for v in e)] = cnt
        self._next_terminal = min(self._next_terminal, other._next_terminal + toff)
        self.extra_trivial += other.extra_trivial
        self.extra_essential += other.extra_essential
        return coff, toff

    @staticmethod
    def translate(v: Node, offsets: tuple[int, int]) -> Node:
        coff, toff = offsets
        return v + 4 * coff if v >= 0 else v + toff

    def disconnect(self, x: Node, y: Node) -> None:
        self.nbr[x].remove(y)
        self.nbr[y].remove(x)
        if self.fwd.get(x) == y:
            del self.fwd[x]
            del self.bwd[y]
        elif self.fwd.get(y) == x:
            del self.fwd[y]
            del self.bwd[x]
        key = frozenset((x, y))
        if self.seam.get(key):
            self.seam[key] -= 1

    # emission

    def _walk(self, start: Node, first: Node):
        """Follow a chain from ``start`` through terminals; return the terminals and the end node."""
        prev, cur = start, first
        path = []
        while cur < 0:
            path.append(cur)
            nb = self.nbr[cur]
            if len(nb) != 2:
                raise DiagramError(f"terminal {cur} is left dangling")
            nxt = nb[0] if nb[1] == prev else nb[1]
            if nb[0] == nb[1]:
                nxt = nb[0]
            prev, cur = cur, nxt
        return path, cur

    def _seam_count(self, nodes: list[Node]) -> int:
        # parallel edges between two terminals are both on the loop, so count each pair once
        pairs = {frozenset((a, b)) for a, b in zip(nodes, nodes[1:])}
        return sum(self.seam.get(p, 0) for p in pairs)

    def finish(self) -> Emitted:
        nports = 4 * len(self.under)
        for p in range(nports):
            if len(self.nbr.get(p, [])) != 1:
                raise DiagramError(f"port {p} is not connected")
        # port-to-port edges through terminal chains
        edge_to: dict[int, int] = {}
        forward: dict[int, bool] = {}  # does travel hint go from this port outward?
        self.terminal_edge: dict[Node, tuple[int, int]] = {}
        for p in range(nports):
            if p in edge_to:
                continue
            first = self.nbr[p][0]
            path, q = self._walk(p, first)
            edge_to[p], edge_to[q] = q, p
            hint = self.fwd.get(p) == first
            forward[p], forward[q] = hint, not hint
            for t in path:
                self.terminal_edge[t] = (p, q)
        # loops made only of terminals
        trivial, essential = self.extra_trivial, self.extra_essential
        seen: set[Node] = set(self.terminal_edge)
        for t in sorted(self.nbr, reverse=True):
            if t >= 0 or t in seen:
                continue
            cyc = [t]
            seen.add(t)
            prev, cur = t, self.nbr[t][0]
            while cur != t:
                cyc.append(cur)
                seen.add(cur)
                nb = self.nbr[cur]
                nxt = nb[0] if nb[1] == prev else nb[1]
                prev, cur = cur, nxt
            cyc.append(t)
            if self._seam_count(cyc) % 2:
                essential += 1
            else:
                trivial += 1
        if nports == 0:
            if trivial + essential == 0:
                raise DiagramError("nothing was built")
            # a crossingless result is carried entirely by the loop counts
            base = Diagram((), trivial) if trivial else None
            return Emitted(base, {}, trivial, essential)
        # orientation: walk components from their smallest port
        is_tail: dict[int, bool] = {}
        comp_edges: list[list[int]] = []
        for p in range(nports):
            if p in is_tail:
                continue
            start = p if forward[p] else edge_to[p]
            seq = []
            tail = start
            while True:
                head = edge_to[tail]
                is_tail[tail], is_tail[head] = True, False
                seq.append(tail)
                c, k = divmod(head, 4)
                tail = 4 * c + (k + 2) % 4
                if tail == start:
                    break
            comp_edges.append(seq)
        label: dict[int, int] = {}
        nxt = 1
        for seq in comp_edges:
            for tail in seq:
                label[tail] = label[edge_to[tail]] = nxt
                nxt += 1
        pd = []
        port_dart: dict[int, tuple[int, int]] = {}
        for c, u in enumerate(self.under):
            p0, p2 = 4 * c + u, 4 * c + u + 2
            a_port = p2 if is_tail[p0] else p0
            if is_tail[a_port]:
                raise DiagramError("under-strand orientation is inconsistent")
            r = a_port % 4
            slots = []
            for s in range(4):
                port = 4 * c + (r + s) % 4
                port_dart[port] = (c, s)
                slots.append(label[port])
            pd.append(tuple(slots))
        d = Diagram(tuple(pd), trivial)
        self.edge_to = edge_to
        return Emitted(d, port_dart, trivial, essential)

    def dart_before(self, t: Node) -> int:
        """Port whose outgoing dart travels forward (by hints) through terminal ``t``."""
        cur = t
        while cur < 0:
            cur = self.bwd[cur]
        return cur

    def dart_after(self, t: Node) -> int:
        """Port whose outgoing dart travels backward through terminal ``t``."""
        cur = t
        while cur < 0:
            cur = self.fwd[cur]
        return cur


def check_planar(em: Emitted) -> None:
    """Euler check on every connected piece: faces = crossings + 2."""
    d = em.diagram
    if d is None or d.n == 0:
        return
    fm = faces(d, require_connected=False)
    pieces = len(d.crossing_components)
    # each piece is traced on its own, so every piece contributes n_i + 2 faces
    if len(fm) != d.n + 2 * pieces:
        raise DiagramError(f"rotation system is not planar: {len(fm)} faces for {d.n} crossings")


def from_diagram(d: Diagram) -> tuple[Builder, dict[int, tuple[int, int]]]:
    """Load a PD into a builder; returns it with arc label -> (tail port, head port)."""
    b = Builder()
    for _ in d.pd:
        b.crossing(0)
    ends = {}
    for x in d.arcs:
        (ti, ts), (hi, hs) = d.tail(x), d.head(x)
        tp, hp = 4 * ti + ts, 4 * hi + hs
        b.connect(tp, hp)
        ends[x] = (tp, hp)
    b.extra_trivial = d.free_loops
    return b, ends
