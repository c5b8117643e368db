"""Wrapping numbers of lassos by face BFS, and the top z-degree of J_ST."""

from itertools import product

from knotforge import jones_st, lasso, minimal_meridian, wrapping_number

for m in range(1, 4):
    for rs in product((1, 2), repeat=m):
        ad = lasso(*rs)
        w, col = wrapping_number(ad)
        M = jones_st(ad).z_degree()
        mer = minimal_meridian(ad).crossed_arcs
        print(f"L{rs!s:<12} n={ad.n:<2} w={w} M={M} meridian arcs={list(mer)}")

print()
print("J_ST(L(1,2)) =", jones_st(lasso(1, 2)))
