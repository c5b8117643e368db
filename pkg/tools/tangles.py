"""Conway-style algebraic tangles on top of the port builder (corpus tooling only)."""

from __future__ import annotations

from knotforge.builder import Builder
from knotforge.construct import _twist_box


class Tangle:
    """Four open ends NW, NE, SW, SE, each a terminal with one free slot."""

    def __init__(self, b: Builder, ends: dict, crossings: list[int]):
        self.b, self.ends, self.crossings = b, ends, crossings


def integer(n: int) -> Tangle:
    """n horizontal half-twists; the sign of n picks the crossing type."""
    b = Builder()
    nw, ne, sw, se = (b.terminal() for _ in range(4))
    x = [b.terminal() for _ in range(4)]
    for t, u in zip((nw, ne, sw, se), x):
        b.connect(t, u)
    first = len(b.under)
    if n == 0:
        b.connect(x[0], x[1])
        b.connect(x[2], x[3])
    else:
        _twist_box(b, x[2], x[3], x[0], x[1], abs(n))
        if n < 0:
            for c in range(first, len(b.under)):
                b.under[c] ^= 1
    return Tangle(b, {"NW": nw, "NE": ne, "SW": sw, "SE": se}, list(range(first, len(b.under))))


def mirror(t: Tangle) -> Tangle:
    for c in t.crossings:
        t.b.under[c] ^= 1
    return t


def rotate(t: Tangle) -> Tangle:
    e = t.ends
    t.ends = {"NE": e["NW"], "SE": e["NE"], "SW": e["SE"], "NW": e["SW"]}
    return t


def zero(t: Tangle) -> Tangle:
    """Conway's T0: rotate a quarter turn and mirror."""
    return mirror(rotate(t))


def add(t1: Tangle, t2: Tangle) -> Tangle:
    b = t1.b
    off = b.absorb(t2.b)
    e2 = {k: Builder.translate(v, off) for k, v in t2.ends.items()}
    b.connect(t1.ends["NE"], e2["NW"])
    b.connect(t1.ends["SE"], e2["SW"])
    cr = t1.crossings + [c + off[0] for c in t2.crossings]
    return Tangle(b, {"NW": t1.ends["NW"], "SW": t1.ends["SW"], "NE": e2["NE"], "SE": e2["SE"]}, cr)


def numerator(t: Tangle):
    t.b.connect(t.ends["NW"], t.ends["NE"])
    t.b.connect(t.ends["SW"], t.ends["SE"])
    return t.b.finish().diagram
