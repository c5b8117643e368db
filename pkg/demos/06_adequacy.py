"""Adequacy across the bundled knot table, with the one-flip cross-check."""

from knotforge import adequacy, corpus
from knotforge.bracket import adequacy_by_flips

for name in corpus.ALTERNATING + corpus.NON_ADEQUATE + corpus.NON_ALTERNATING_ADEQUATE:
    d = corpus.load(name)
    rep = adequacy(d)
    flips = adequacy_by_flips(d)
    print(
        f"{name:<7} n={d.n:<3} alt={d.is_alternating!s:<6} "
        f"plus={rep.plus_adequate!s:<6} minus={rep.minus_adequate!s:<6} flips agree={flips == (rep.plus_adequate, rep.minus_adequate)}"
    )
