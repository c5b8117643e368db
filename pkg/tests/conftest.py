import random
import warnings

import pytest
from hypothesis import settings

from knotforge import corpus
from knotforge.construct import random_braid_diagram
from knotforge.diagram import NonReducedWarning

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def _quiet_nonreduced():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonReducedWarning)
        yield


@pytest.fixture(scope="session")
def trefoil():
    return corpus.load("3_1")


@pytest.fixture(scope="session")
def figure_eight():
    return corpus.load("4_1")


@pytest.fixture(scope="session")
def hopf():
    return corpus.load("hopf")


@pytest.fixture(scope="session")
def kink():
    return corpus.load("kink")


def random_diagrams(seed: int, count: int, max_n: int = 12):
    """Reproducible random braid closures with random crossing flips."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        strands = rng.randint(2, 4)
        length = rng.randint(strands - 1, max_n)
        out.append(random_braid_diagram(rng, strands, length, flips=0.3))
    return out


# acceptance criteria: one PASS/FAIL line each, printed in the terminal summary

_CRITERIA: dict[int, str] = {}


class _Criterion:
    def __init__(self, number: int, title: str):
        self.number, self.title, self.notes = number, title, []

    def note(self, text: str) -> None:
        self.notes.append(text)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        detail = "; ".join(self.notes)
        if exc_type is not None:
            detail = (detail + "; " if detail else "") + f"{exc_type.__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        _CRITERIA[self.number] = f"criterion {self.number:>2} {status}  {self.title}" + (f"  [{detail}]" if detail else "")
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for k in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[k])
