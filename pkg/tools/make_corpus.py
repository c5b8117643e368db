"""Regenerate the bundled corpus JSON files under src/knotforge/corpus/."""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from tangles import add, integer, mirror, numerator, zero  # noqa: E402

from knotforge.construct import braid_closure, lasso, planar  # noqa: E402

OUT = Path(__file__).resolve().parent.parent / "src" / "knotforge" / "corpus"

ROLFSEN = {
    "3_1": [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]],
    "4_1": [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]],
    "5_1": [[1, 6, 2, 7], [3, 8, 4, 9], [5, 10, 6, 1], [7, 2, 8, 3], [9, 4, 10, 5]],
    "5_2": [[1, 4, 2, 5], [3, 8, 4, 9], [5, 10, 6, 1], [9, 6, 10, 7], [7, 2, 8, 3]],
    "6_1": [[1, 4, 2, 5], [7, 10, 8, 11], [3, 9, 4, 8], [9, 3, 10, 2], [5, 12, 6, 1], [11, 6, 12, 7]],
    "6_2": [[1, 4, 2, 5], [5, 10, 6, 11], [3, 9, 4, 8], [9, 3, 10, 2], [7, 12, 8, 1], [11, 6, 12, 7]],
    "6_3": [[4, 2, 5, 1], [8, 4, 9, 3], [12, 9, 1, 10], [10, 5, 11, 6], [6, 11, 7, 12], [2, 8, 3, 7]],
    "hopf": [[1, 3, 2, 4], [3, 1, 4, 2]],
}

BRAIDS = {
    "8_19": ([1, 2] * 4, 3),
    "8_20": ([1, 1, 1, -2, -1, -1, -1, -2], 3),
    "8_21": ([-1, -1, -1, -2, 1, 1, -2, -2], 3),
}

# Conway notation (a,b) - (c,d): the second tangle is rotated and mirrored before the sum
CONWAY = {
    "10_152": ((3,), (3,)),
    "10_153": ((3,), (2, 1)),
    "10_154": ((2, 1), (2, 1)),
}

LASSOS = [(), (1,), (2,), (1, 2), (2, 2), (1, 1, 1), (3, 1, 2), (1, 2, 3, 1)]


def rational(code):
    t = integer(code[0])
    for a in code[1:]:
        t = add(zero(t), integer(a))
    return t


def comma(c1, c2):
    return add(zero(rational(c1)), zero(rational(c2)))


def write(name: str, data: dict) -> None:
    (OUT / f"{name}.json").write_text(json.dumps(data, sort_keys=True) + "\n")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for name, pd in ROLFSEN.items():
        write(name, {"name": name, "pd": pd, "free_loops": 0, "source": "standard table PD"})
    for name, (word, strands) in BRAIDS.items():
        d = planar(braid_closure(word, strands))
        write(name, {"name": name, "pd": [list(c) for c in d.pd], "free_loops": 0, "source": f"closure of braid {word}"})
    for name, (a, b) in CONWAY.items():
        d = numerator(add(comma(a, (2,)), mirror(zero(comma(b, (2,))))))
        src = f"Conway ({''.join(map(str, a))},2)-({''.join(map(str, b))},2)"
        write(name, {"name": name, "pd": [list(c) for c in d.pd], "free_loops": 0, "source": src})
    write("unknot", {"name": "unknot", "pd": [], "free_loops": 1, "source": "crossingless loop"})
    write("kink", {"name": "kink", "pd": [[1, 2, 2, 1]], "free_loops": 0, "source": "one-crossing unknot (not reduced)"})
    for rs in LASSOS:
        name = "lasso" + "".join(f"_{r}" for r in rs)
        data = lasso(*rs).to_json()
        data.update(name=name, source=f"lasso L{rs} generator")
        write(name, data)


if __name__ == "__main__":
    main()
