"""Satellite Jones polynomials two ways, and the crossing bounds they feed."""

from knotforge import corpus, jones, lasso, satellite, satellite_bound_report, satellite_jones, torus_braid

kink = corpus.load("kink")
for label, p in (("L(2)", lasso(2)), ("T(3,2)", torus_braid(3, 2))):
    sat = satellite(p, kink, force=True)
    a, b = jones(sat).t_string(), satellite_jones(p, kink, force=True).t_string()
    print(f"{label} around the 1-kink unknot: {sat.n} crossings, direct {a!r}, decomposed {b!r}")

print()
p, c = corpus.load_annular("lasso_1_2"), corpus.load("3_1")
print(f"L(1,2) around the trefoil: {satellite(p, c).n} crossings")
for r in satellite_bound_report(p, c):
    print(" ", r.row())
