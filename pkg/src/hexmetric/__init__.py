"""Hyperbolic metrics on ideally triangulated bordered surfaces,
parametrized by per-edge coordinates."""

from . import coords, hexgeom, polytope, realize, solver, surface
from .polytope import PolytopeReport, check_feasibility, interior_point
from .solver import HyperbolicMetric, SolveConfig, SolveReport, extract_metric, forward_map, maximize
from .surface import HexComplex, InvalidComplexError, build

__all__ = [
    "coords",
    "hexgeom",
    "polytope",
    "realize",
    "solver",
    "surface",
    "HexComplex",
    "InvalidComplexError",
    "build",
    "PolytopeReport",
    "check_feasibility",
    "interior_point",
    "HyperbolicMetric",
    "SolveConfig",
    "SolveReport",
    "extract_metric",
    "forward_map",
    "maximize",
]
