"""r-parallels of small adequate diagrams: engine breadth against the closed form."""

import time

from knotforge import adequacy, bracket, corpus, parallel

print(f"{'knot':<6}{'r':>2}{'n(D^r)':>8}{'engine':>8}{'formula':>9}{'secs':>7}")
for name in ("3_1", "4_1", "5_1", "hopf"):
    d = corpus.load(name)
    rep = adequacy(d)
    for r in (1, 2, 3):
        p = parallel(d, r)
        t0 = time.perf_counter()
        b = bracket(p).breadth()[2]
        dt = time.perf_counter() - t0
        f = 2 * d.n * r * r + 2 * r * (rep.s_plus_circles + rep.s_minus_circles) - 4
        print(f"{name:<6}{r:>2}{p.n:>8}{b:>8}{f:>9}{dt:>7.2f}")

# the 27-crossing 3-parallel of the trefoil in full
print()
print("<3_1^3> =", bracket(parallel(corpus.load("3_1"), 3)))
