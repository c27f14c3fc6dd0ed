"""Graph burning: simulation, exact solvers and approximation algorithms."""

from .approx import ApproxResult, approx3, burn_guess
from .bincover import fptas_driver
from .exact import CapExceeded, exact_burning_number, path_dp
from .graph import Graph, GraphFormatError, PathForest, classify, parse_graph, parse_path_forest
from .ptas import ptas_driver
from .schedule import BurningSchedule, simulate, validate_strict
from .tree import NotATreeError, approx2

__all__ = [
    "ApproxResult", "BurningSchedule", "CapExceeded", "Graph", "GraphFormatError", "NotATreeError",
    "PathForest", "approx2", "approx3", "burn_guess", "classify", "exact_burning_number",
    "fptas_driver", "parse_graph", "parse_path_forest", "path_dp", "ptas_driver", "simulate",
    "validate_strict",
]
