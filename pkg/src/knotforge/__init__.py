"""Exact Kauffman brackets, Jones polynomials and crossing-number bounds for
planar and annular knot diagrams."""

from .annular import (
    AnnularDiagram,
    all_minimal_meridians,
    annular_bracket,
    essential_circle,
    jones_st,
    minimal_meridian,
    parse_annular,
    wrap_lower_bound_check,
    wrapping_number,
)
from .bounds import (
    BoundReport,
    cable_vs_parallel_breadth,
    crossing_lower_bound,
    diagram_bound_reports,
    parallel_bound_report,
    satellite_bound_report,
)
from .bracket import (
    AdequacyReport,
    adequacy,
    bound_pack,
    bracket,
    extreme_state_circles,
    jones,
    smooth_state,
    unnormalized_bracket,
)
from .construct import (
    braid_closure,
    cable,
    cable_tube,
    connected_sum,
    embed,
    graft,
    lasso,
    parallel,
    parallel_annular,
    planar,
    satellite,
    satellite_jones,
    torus_braid,
)
from .diagram import Diagram, DiagramError, faces, mirror, parse_diagram, writhe
from .laurent import AnnularPoly, LaurentPoly, delta, parse_poly

__version__ = "0.1.0"
