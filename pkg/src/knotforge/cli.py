"""Command-line front end: ``python -m knotforge VERB ...``.

Exit codes: 0 ok, 1 domain error, 2 usage error, 3 a bound report failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from importlib import resources
from pathlib import Path

from . import corpus
from .annular import (
    AnnularDiagram,
    all_minimal_meridians,
    annular_bracket,
    jones_st,
    minimal_meridian,
    parse_annular,
    wrap_lower_bound_check,
    wrapping_number,
)
from .bounds import (
    cable_vs_parallel_breadth,
    diagram_bound_reports,
    parallel_bound_report,
    satellite_bound_report,
)
from .bracket import ORACLE_LIMIT, adequacy, bracket, jones, t_breadth
from .construct import (
    cable,
    connected_sum,
    graft,
    parallel,
    parallel_annular,
    satellite,
    satellite_jones,
    torus_braid,
)
from .diagram import Diagram, DiagramError, NonReducedWarning, faces, parse_diagram, writhe

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _read(path: str) -> str:
    p = Path(path)
    if p.exists():
        return p.read_text()
    # "corpus/NAME.json" falls back to the bundled copy
    if p.parent.name == "corpus" or not p.parent.parts:
        res = resources.files("knotforge").joinpath("corpus", p.name)
        if res.is_file():
            return res.read_text()
    raise UsageError(f"no such file: {path}")


def _data(path: str) -> dict:
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as e:
        raise DiagramError(f"{path}: not valid JSON ({e})") from e


def _diagram(path: str) -> Diagram:
    d, _ = parse_diagram(_data(path))
    return d


def _annular(path: str) -> AnnularDiagram:
    data = _data(path)
    if "annular" not in data:
        raise DiagramError(f"{path}: no annular block")
    return parse_annular(data)


def _breadth(p) -> int:
    return p.breadth()[2] if p.terms else 0


# verbs


def cmd_bracket(a) -> tuple[int, str]:
    d = _diagram(a.input)
    br = bracket(d, a.engine, a.override)
    if a.format == "text":
        return EXIT_OK, str(br)
    rep = adequacy(d, allow_nonreduced=True) if d.n else None
    j = jones(d, a.engine, br=br)
    rec = {
        "n": d.n,
        "writhe": writhe(d),
        "bracket": str(br),
        "jones": j.t_string(),
        "s_plus": rep.s_plus_circles if rep else d.free_loops,
        "s_minus": rep.s_minus_circles if rep else d.free_loops,
        "plus_adequate": rep.plus_adequate if rep else True,
        "minus_adequate": rep.minus_adequate if rep else True,
        "breadths": {"bracket": _breadth(br), "jones_t": str(t_breadth(j))},
    }
    return EXIT_OK, _dumps(rec)


def cmd_jones(a) -> tuple[int, str]:
    d = _diagram(a.input)
    j = jones(d, a.engine)
    if a.format == "text":
        return EXIT_OK, j.t_string()
    return EXIT_OK, _dumps({"jones": j.t_string(), "q": str(j), "breadth_t": str(t_breadth(j))})


def cmd_adequacy(a) -> tuple[int, str]:
    d = _diagram(a.input)
    rep = adequacy(d, allow_nonreduced=a.allow_nonreduced)
    rec = {
        "plus_adequate": rep.plus_adequate,
        "minus_adequate": rep.minus_adequate,
        "adequate": rep.adequate,
        "s_plus": rep.s_plus_circles,
        "s_minus": rep.s_minus_circles,
        "plus_witnesses": list(rep.plus_witnesses),
        "minus_witnesses": list(rep.minus_witnesses),
    }
    if a.format == "text":
        return EXIT_OK, (
            f"plus_adequate={rep.plus_adequate} minus_adequate={rep.minus_adequate} "
            f"s_plus={rep.s_plus_circles} s_minus={rep.s_minus_circles}"
        )
    return EXIT_OK, _dumps(rec)


def cmd_faces(a) -> tuple[int, str]:
    d = _diagram(a.input)
    fm = faces(d)
    if a.dot:
        lines = ["graph faces {"]
        for f in range(len(fm)):
            lines.append(f'  f{f} [label="{f}: {" ".join(map(str, sorted(fm.arcs_of(f))))}"];')
        for f in range(len(fm)):
            for g, arcs in sorted(fm.neighbours(f).items()):
                if f < g:
                    for x in arcs:
                        lines.append(f'  f{f} -- f{g} [label="{x}"];')
        lines.append("}")
        return EXIT_OK, "\n".join(lines)
    rec = [{"face": f, "arcs": [[x, s] for x, s in fm.incidences[f]]} for f in range(len(fm))]
    return EXIT_OK, _dumps(rec)


def cmd_wrap(a) -> tuple[int, str]:
    ad = _annular(a.input)
    w, col = wrapping_number(ad)
    if a.format == "json":
        return EXIT_OK, _dumps({"w": w, "coloring": {str(f): c for f, c in sorted(col.layer.items())}})
    lines = [f"w={w}"] + [f"face {f}: color {c}" for f, c in sorted(col.layer.items())]
    return EXIT_OK, "\n".join(lines)


def cmd_meridian(a) -> tuple[int, str]:
    ad = _annular(a.input)
    paths = all_minimal_meridians(ad) if a.all else [minimal_meridian(ad)]
    rec = [{"faces": list(p.faces), "arcs": list(p.crossed_arcs)} for p in paths]
    if a.format == "text":
        return EXIT_OK, "\n".join(f"faces={r['faces']} arcs={r['arcs']}" for r in rec)
    return EXIT_OK, _dumps(rec)


def cmd_annular_bracket(a) -> tuple[int, str]:
    p = annular_bracket(_annular(a.input), a.engine)
    if a.format == "text":
        return EXIT_OK, str(p)
    return EXIT_OK, _dumps({str(k): str(c) for k, c in p.coefficients().items()})


def cmd_jones_st(a) -> tuple[int, str]:
    p = jones_st(_annular(a.input), a.engine)
    if a.format == "text":
        return EXIT_OK, str(p)
    return EXIT_OK, _dumps({"M": p.z_degree(), "coefficients": {str(k): str(c) for k, c in p.coefficients().items()}})


def _emit(obj) -> tuple[int, str]:
    return EXIT_OK, _dumps(obj.to_json())


def cmd_parallel(a) -> tuple[int, str]:
    data = _data(a.input)
    if "annular" in data:
        return _emit(parallel_annular(parse_annular(data), a.r))
    d, _ = parse_diagram(data)
    return _emit(parallel(d, a.r))


def cmd_cable(a) -> tuple[int, str]:
    return _emit(cable(_diagram(a.input), a.r, force=a.force))


def cmd_torus(a) -> tuple[int, str]:
    return _emit(torus_braid(a.p, a.r))


def cmd_graft(a) -> tuple[int, str]:
    return _emit(graft(_annular(a.rootstock), _annular(a.scion), a.k, force=a.force))


def cmd_sum(a) -> tuple[int, str]:
    return _emit(connected_sum(_diagram(a.first), _diagram(a.second)))


def cmd_satellite(a) -> tuple[int, str]:
    return _emit(satellite(_annular(a.pattern), _diagram(a.companion), force=a.force))


def cmd_satellite_jones(a) -> tuple[int, str]:
    j = satellite_jones(_annular(a.pattern), _diagram(a.companion), force=a.force, engine=a.engine)
    if a.format == "text":
        return EXIT_OK, j.t_string()
    return EXIT_OK, _dumps({"jones": j.t_string(), "breadth_t": str(t_breadth(j))})


def cmd_bounds(a) -> tuple[int, str]:
    kind = a.kind
    if kind in ("parallel", "cable") and a.r is None:
        raise UsageError(f"bounds {kind} needs -r")
    if kind != "satellite" and len(a.inputs) != 1:
        raise UsageError(f"bounds {kind} takes one input")
    if kind == "diagram":
        reps = diagram_bound_reports(_diagram(a.inputs[0]))
    elif kind == "parallel":
        reps = parallel_bound_report(_diagram(a.inputs[0]), a.r)
    elif kind == "cable":
        reps = [cable_vs_parallel_breadth(_diagram(a.inputs[0]), a.r)]
    elif kind == "satellite":
        if len(a.inputs) != 2:
            raise UsageError("bounds satellite needs PATTERN COMPANION")
        reps = satellite_bound_report(_annular(a.inputs[0]), _diagram(a.inputs[1]))
    else:
        reps = [wrap_lower_bound_check(_annular(a.inputs[0]))]
    code = EXIT_OK if all(r.passed for r in reps) else EXIT_BOUND
    if a.format == "json":
        return code, _dumps([r.to_json() for r in reps])
    return code, "\n".join(r.row() for r in reps)


def cmd_corpus(a) -> tuple[int, str]:
    if a.name is None:
        return EXIT_OK, "\n".join(corpus.names())
    if a.name not in corpus.names():
        raise UsageError(f"unknown corpus entry {a.name!r}")
    return EXIT_OK, _dumps(corpus.raw(a.name))


# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="knotforge", description="Kauffman brackets and crossing bounds for knot diagrams")
    sub = ap.add_subparsers(dest="verb", required=True)

    def add(name, fn, *inputs, engine=False, force=False, fmt=True, **kw):
        sp = sub.add_parser(name, **kw)
        for x in inputs:
            sp.add_argument(x)
        if engine:
            sp.add_argument("--engine", choices=("fast", "oracle"), default="fast")
            sp.add_argument("--override", action="store_true", help=f"let the oracle run above {ORACLE_LIMIT} crossings")
        if force:
            sp.add_argument("--force", action="store_true")
        if fmt:
            sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.set_defaults(fn=fn)
        return sp

    add("bracket", cmd_bracket, "input", engine=True)
    add("jones", cmd_jones, "input", engine=True)
    add("adequacy", cmd_adequacy, "input").add_argument("--allow-nonreduced", action="store_true")
    add("faces", cmd_faces, "input", fmt=False).add_argument("--dot", action="store_true")
    add("wrap", cmd_wrap, "input")
    add("meridian", cmd_meridian, "input").add_argument("--all", action="store_true")
    add("annular-bracket", cmd_annular_bracket, "input", engine=True)
    add("jones-st", cmd_jones_st, "input", engine=True)
    add("parallel", cmd_parallel, "input", fmt=False).add_argument("-r", type=int, required=True)
    add("cable", cmd_cable, "input", force=True, fmt=False).add_argument("-r", type=int, required=True)
    sp = add("torus", cmd_torus, fmt=False)
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-r", type=int, required=True)
    add("graft", cmd_graft, "rootstock", "scion", force=True, fmt=False).add_argument("-k", type=int, required=True)
    add("sum", cmd_sum, "first", "second", fmt=False)
    add("satellite", cmd_satellite, "pattern", "companion", force=True, fmt=False)
    add("satellite-jones", cmd_satellite_jones, "pattern", "companion", engine=True, force=True)
    sp = add("bounds", cmd_bounds)
    sp.add_argument("kind", choices=("diagram", "parallel", "cable", "satellite", "wrap"))
    sp.add_argument("inputs", nargs="+")
    sp.add_argument("-r", type=int)
    add("corpus", cmd_corpus, fmt=False).add_argument("name", nargs="?")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NonReducedWarning)
            code, out = a.fn(a)
    except UsageError as e:
        print(f"knotforge: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DiagramError, ValueError, KeyError) as e:
        print(f"knotforge: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    print(out)
    return code
