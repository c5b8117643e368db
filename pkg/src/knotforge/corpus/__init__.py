"""Bundled diagrams: small knot table entries, the Hopf link and lassos."""

from __future__ import annotations

import json
import warnings
from importlib import resources

from ..diagram import Diagram, NonReducedWarning, parse_diagram

__all__ = ["ALTERNATING", "NON_ADEQUATE", "NON_ALTERNATING_ADEQUATE", "load", "load_annular", "names", "raw"]

ALTERNATING = ("3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3")
NON_ADEQUATE = ("8_19", "8_20", "8_21")
NON_ALTERNATING_ADEQUATE = ("10_152", "10_153", "10_154")


def names() -> list[str]:
    return sorted(p.name[:-5] for p in resources.files(__name__).iterdir() if p.name.endswith(".json"))


def raw(name: str) -> dict:
    path = resources.files(__name__) / f"{name}.json"
    if not path.is_file():
        raise KeyError(f"no bundled diagram named {name!r}")
    return json.loads(path.read_text())


def load(name: str) -> Diagram:
    """The bundled diagram (annular data, if any, is dropped)."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonReducedWarning)
        return parse_diagram(raw(name))[0]


def load_annular(name: str):
    from ..annular import parse_annular

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonReducedWarning)
        return parse_annular(raw(name))
