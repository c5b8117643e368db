"""Kauffman bracket engines, extreme states, adequacy and the Jones polynomial.

Both engines sum A^sigma(s) * delta^|sD| (the unnormalized bracket) and
divide once by delta = -A^2 - A^-2 at the end.

Smoothing rule for a crossing (a, b, c, d): the A-smoothing joins the
strand ends a-b and c-d, the B-smoothing joins a-d and b-c.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .diagram import Diagram, DiagramError, writhe
from .laurent import AnnularPoly, LaurentPoly, delta

__all__ = [
    "AdequacyReport",
    "ORACLE_LIMIT",
    "adequacy",
    "adequacy_by_flips",
    "bound_pack",
    "bracket",
    "extreme_state_circles",
    "jones",
    "smooth_state",
    "state_sum",
    "unnormalized_bracket",
]

ORACLE_LIMIT = 26


def _pairs(c: Sequence[int], s: int) -> tuple[tuple[int, int], tuple[int, int]]:
    a, b, cc, d = c
    return ((a, b), (cc, d)) if s > 0 else ((a, d), (b, cc))


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry


def _state_uf(d: Diagram, state: Sequence[int]) -> _UnionFind:
    uf = _UnionFind(d.arcs)
    for c, s in zip(d.pd, state):
        for x, y in _pairs(c, s):
            uf.union(x, y)
    return uf


def smooth_state(d: Diagram, state: Sequence[int]) -> int:
    """Number of circles |sD| after smoothing every crossing (state values +-1)."""
    if len(state) != d.n:
        raise ValueError(f"state has {len(state)} entries for {d.n} crossings")
    uf = _state_uf(d, state)
    return len({uf.find(x) for x in d.arcs}) + d.free_loops


def state_circles(d: Diagram, state: Sequence[int]) -> list[list[int]]:
    """Arc labels of each circle of the smoothing (free loops excluded)."""
    uf = _state_uf(d, state)
    groups: dict[int, list[int]] = {}
    for x in d.arcs:
        groups.setdefault(uf.find(x), []).append(x)
    return sorted(groups.values())


# oracle engine


def _oracle_chunk(args):
    pd, arcs, lo, hi, meridian = args
    index = {x: i for i, x in enumerate(arcs)}
    n = len(pd)
    pairs = [
        [tuple((index[x], index[y]) for x, y in _pairs(c, -1)), tuple((index[x], index[y]) for x, y in _pairs(c, 1))]
        for c in pd
    ]
    mer = [1 if x in meridian else 0 for x in arcs]
    m = len(arcs)
    counts: dict[tuple[int, int, int], int] = {}
    for mask in range(lo, hi):
        parent = list(range(m))
        sigma = 0
        for i in range(n):
            bit = (mask >> i) & 1
            sigma += 1 if bit else -1
            for x, y in pairs[i][bit]:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x != y:
                    parent[x] = y
        par: dict[int, int] = {}
        for i in range(m):
            r = i
            while parent[r] != r:
                r = parent[r]
            par[r] = par.get(r, 0) ^ mer[i]
        ess = sum(par.values())
        key = (sigma, len(par) - ess, ess)
        counts[key] = counts.get(key, 0) + 1
    return counts


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("KNOTFORGE_THREADS", "1")))
    except ValueError:
        return 1


def _oracle_counts(d: Diagram, meridian: frozenset = frozenset(), workers: int | None = None, override: bool = False):
    if d.n > ORACLE_LIMIT and not override:
        raise DiagramError(f"oracle engine refuses n={d.n} > {ORACLE_LIMIT}; pass override=True to force")
    total = 1 << d.n
    workers = workers or _threads()
    if workers <= 1 or d.n < 16:
        return _oracle_chunk((d.pd, d.arcs, 0, total, meridian))
    step = -(-total // (workers * 4))
    jobs = [(d.pd, d.arcs, lo, min(total, lo + step), meridian) for lo in range(0, total, step)]
    counts: dict = {}
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(_oracle_chunk, jobs):
            for k, v in part.items():
                counts[k] = counts.get(k, 0) + v
    return counts


# fast engine: crossing-by-crossing contraction over planar boundary pairings


def contraction_order(d: Diagram) -> list[int]:
    """Greedy order keeping the open-arc frontier small."""
    n = d.n
    if n == 0:
        return []
    remaining = set(range(n))
    open_count: dict[int, int] = {}
    order = []
    cur = 0
    while True:
        order.append(cur)
        remaining.discard(cur)
        for x in d.pd[cur]:
            open_count[x] = open_count.get(x, 0) + 1
        if not remaining:
            break
        best, best_key = None, None
        for i in remaining:
            c = d.pd[i]
            closes = sum(1 for x in c if open_count.get(x, 0) == 1)
            # labels repeated inside the crossing close against themselves
            selfpair = 4 - len(set(c))
            key = (-(closes + selfpair), i)
            if best_key is None or key < best_key:
                best, best_key = i, key
        cur = best
    return order


def _contract(d: Diagram, meridian: frozenset = frozenset(), order: Sequence[int] | None = None):
    """Return counts {(sigma, trivial, essential): coefficient} summed over all states."""
    order = list(order) if order is not None else contraction_order(d)
    mer = {x: (1 if x in meridian else 0) for x in d.arcs}
    # state: pairing (tuple of (x, partner, parity) sorted) -> {(sigma, kt, ke): count}
    states: dict[tuple, dict[tuple[int, int, int], int]] = {(): {(0, 0, 0): 1}}
    for ci in order:
        c = d.pd[ci]
        new_states: dict[tuple, dict[tuple[int, int, int], int]] = {}
        for key, weights in states.items():
            base = {x: (u, p) for x, u, p in key}
            for s in (1, -1):
                m = dict(base)
                kt = ke = 0
                for x, y in _pairs(c, s):
                    if x == y and x not in m:
                        if mer[x]:
                            ke += 1
                        else:
                            kt += 1
                        continue
                    xo, yo = x in m, y in m
                    if not xo and not yo:
                        p = mer[x] ^ mer[y]
                        m[x] = (y, p)
                        m[y] = (x, p)
                    elif xo and not yo:
                        u, p1 = m.pop(x)
                        p = p1 ^ mer[y]
                        m[u] = (y, p)
                        m[y] = (u, p)
                    elif yo and not xo:
                        v, p2 = m.pop(y)
                        p = p2 ^ mer[x]
                        m[v] = (x, p)
                        m[x] = (v, p)
                    else:
                        u, p1 = m.pop(x)
                        if u == y:
                            m.pop(y)
                            if p1:
                                ke += 1
                            else:
                                kt += 1
                        else:
                            v, p2 = m.pop(y)
                            p = p1 ^ p2
                            m[u] = (v, p)
                            m[v] = (u, p)
                nkey = tuple(sorted((x, u, p) for x, (u, p) in m.items()))
                bucket = new_states.setdefault(nkey, {})
                for (sg, t, e), cnt in weights.items():
                    k2 = (sg + s, t + kt, e + ke)
                    v = bucket.get(k2, 0) + cnt
                    if v:
                        bucket[k2] = v
                    else:
                        bucket.pop(k2, None)
        states = new_states
    if set(states) != {()}:
        raise DiagramError("contraction left open arcs; diagram is malformed")
    return states[()]


def state_sum(d: Diagram, meridian: Iterable[int] = (), engine: str = "fast", override: bool = False):
    """Raw state counts keyed by (sigma, trivial circles, essential circles).

    Free loops of ``d`` are not included.
    """
    mer = frozenset(meridian)
    if d.n == 0:
        return {(0, 0, 0): 1}
    if engine == "oracle":
        return _oracle_counts(d, mer, override=override)
    if engine == "fast":
        return _contract(d, mer)
    raise ValueError(f"unknown engine {engine!r}")


def _powers(base: LaurentPoly, top: int) -> list[LaurentPoly]:
    out = [LaurentPoly.constant(1)]
    for _ in range(top):
        out.append(out[-1] * base)
    return out


def unnormalized_bracket(d: Diagram, engine: str = "fast", override: bool = False) -> LaurentPoly:
    """Sum over states of A^sigma * delta^|sD| (free loops included)."""
    counts = state_sum(d, engine=engine, override=override)
    top = max(t for _, t, _ in counts) + d.free_loops
    dp = _powers(delta(), top)
    by_k: dict[int, dict[int, int]] = {}
    for (sg, t, _), cnt in counts.items():
        row = by_k.setdefault(t + d.free_loops, {})
        row[sg] = row.get(sg, 0) + cnt
    total = LaurentPoly.zero()
    for k, row in by_k.items():
        total = total + LaurentPoly(row) * dp[k]
    return total


def bracket(d: Diagram, engine: str = "fast", override: bool = False) -> LaurentPoly:
    """Normalized Kauffman bracket <D> (a single free loop has bracket 1)."""
    if d.n == 0 and d.free_loops == 0:
        raise DiagramError("empty diagram")
    return unnormalized_bracket(d, engine, override).divmod_exact(delta())


def annular_counts_to_poly(counts, trivial_extra: int = 0, essential_extra: int = 0) -> AnnularPoly:
    top = max(t for _, t, _ in counts) + trivial_extra
    dp = _powers(delta(), top)
    terms: dict[tuple[int, int], int] = {}
    for (sg, t, e), cnt in counts.items():
        for ex, c in dp[t + trivial_extra].terms.items():
            key = (sg + ex, e + essential_extra)
            terms[key] = terms.get(key, 0) + cnt * c
    return AnnularPoly(terms)


# extreme states and adequacy


def extreme_state_circles(d: Diagram) -> tuple[int, int]:
    """(|s+ D|, |s- D|): circle counts of the all-A and all-B smoothings."""
    return smooth_state(d, [1] * d.n), smooth_state(d, [-1] * d.n)


@dataclass(frozen=True)
class AdequacyReport:
    plus_adequate: bool
    minus_adequate: bool
    s_plus_circles: int
    s_minus_circles: int
    plus_witnesses: tuple[int, ...] = field(default=())
    minus_witnesses: tuple[int, ...] = field(default=())

    @property
    def adequate(self) -> bool:
        return self.plus_adequate and self.minus_adequate


def _self_touching(d: Diagram, s: int) -> tuple[int, ...]:
    uf = _state_uf(d, [s] * d.n)
    out = []
    for i, c in enumerate(d.pd):
        (x1, _), (x2, _) = _pairs(c, s)
        if uf.find(x1) == uf.find(x2):
            out.append(i)
    return tuple(out)


def adequacy(d: Diagram, allow_nonreduced: bool = False) -> AdequacyReport:
    """Decide plus/minus adequacy by checking whether any smoothing touches one circle twice."""
    if d.n and not allow_nonreduced and d.is_connected and not d.is_reduced:
        raise DiagramError(f"diagram is not reduced (nugatory crossings {list(d.nugatory_crossings)})")
    sp, sm = extreme_state_circles(d)
    wp, wm = _self_touching(d, 1), _self_touching(d, -1)
    return AdequacyReport(not wp, not wm, sp, sm, wp, wm)


def adequacy_by_flips(d: Diagram) -> tuple[bool, bool]:
    """Definitional check: every one-flip state has fewer circles than the extreme state."""
    sp, sm = extreme_state_circles(d)
    plus = minus = True
    for i in range(d.n):
        st = [1] * d.n
        st[i] = -1
        if smooth_state(d, st) >= sp:
            plus = False
        st = [-1] * d.n
        st[i] = 1
        if smooth_state(d, st) >= sm:
            minus = False
    return plus, minus


# Jones polynomial


def a_to_q(p: LaurentPoly) -> LaurentPoly:
    """Substitute t^(-1/2) = A^2, i.e. A^e -> q^(-e/2) with q = t^(1/2)."""
    out = {}
    for e, c in p.terms.items():
        if e % 2:
            raise DiagramError(f"odd A-exponent {e} cannot be written in q = t^(1/2)")
        out[-e // 2] = c
    return LaurentPoly(out, "q")


def writhe_factor(w: int) -> LaurentPoly:
    """(-A^-3)^w."""
    return LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1)


def jones(d: Diagram, engine: str = "fast", br: LaurentPoly | None = None) -> LaurentPoly:
    """Jones polynomial in q = t^(1/2)."""
    if d.n == 0:
        return a_to_q(bracket(d))
    if br is None:
        br = bracket(d, engine)
    return a_to_q(br * writhe_factor(writhe(d)))


def t_breadth(p: LaurentPoly):
    """Breadth of a q-tagged polynomial measured in powers of t."""
    from fractions import Fraction

    if p.tag != "q":
        raise ValueError("t-breadth needs a q-tagged polynomial")
    b = p.breadth()[2]
    return b // 2 if b % 2 == 0 else Fraction(b, 2)


def bound_pack(d: Diagram, br: LaurentPoly | None = None, engine: str = "fast") -> dict:
    """Evaluate the extreme-state bracket bounds on one diagram, exactly."""
    if br is None:
        br = bracket(d, engine)
    m, M, B = br.breadth()
    n = d.n
    sp, sm = extreme_state_circles(d)
    rep = adequacy(d, allow_nonreduced=True) if n else None
    plus = bool(rep and rep.plus_adequate and d.is_reduced)
    minus = bool(rep and rep.minus_adequate and d.is_reduced)
    checks: dict[str, dict] = {}

    def put(name, lhs, op, rhs, required=True):
        ok = {"<=": lhs <= rhs, ">=": lhs >= rhs, "==": lhs == rhs}[op]
        checks[name] = {"lhs": lhs, "op": op, "rhs": rhs, "holds": ok, "required": required}

    put("max_degree_upper", M, "<=", n + 2 * sp - 2)
    put("min_degree_lower", m, ">=", -n - 2 * sm + 2)
    if plus:
        put("max_degree_equality", M, "==", n + 2 * sp - 2)
    if minus:
        put("min_degree_equality", m, "==", -n - 2 * sm + 2)
    if plus and minus:
        put("adequate_breadth", B, "==", 2 * n + 2 * sp + 2 * sm - 4)
        put("s_plus_at_least_two", sp, ">=", 2)
        put("s_minus_at_least_two", sm, ">=", 2)
        put("max_degree_at_least", M, ">=", n + 2)
        put("min_degree_at_most", m, "<=", -n - 2)
    if d.is_connected:
        put("extreme_circles_sum", sp + sm, "<=", n + 2)
        if d.is_alternating and d.is_reduced:
            put("alternating_circles_sum", sp + sm, "==", n + 2)
    if d.numbering_consistent:
        J = jones(d, br=br)
        put("jones_breadth_quarter", 4 * J.breadth()[2], "==", 2 * B)
    return {
        "n": n,
        "M_bracket": M,
        "m_bracket": m,
        "s_plus": sp,
        "s_minus": sm,
        "plus_adequate": plus,
        "minus_adequate": minus,
        "checks": checks,
    }
