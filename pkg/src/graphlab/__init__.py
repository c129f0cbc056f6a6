"""Exact divisor-function graphs, topological indices, and claim verification."""

from .exact import RadicalSum, Value, inv_sqrt, normalize, sqf_decompose, to_decimal
from .graphs import DprimeGraph, Divisor, GeneralDivisorGraph, build_gamma, build_general
from .indices import INDEX_NAMES, compute_index, compute_indices
from .metric import DistanceMatrix, distance_matrix, diameter, mostar_counts, transmissions

__version__ = "0.1.0"

__all__ = [
    "RadicalSum",
    "Value",
    "inv_sqrt",
    "normalize",
    "sqf_decompose",
    "to_decimal",
    "Divisor",
    "DprimeGraph",
    "GeneralDivisorGraph",
    "build_gamma",
    "build_general",
    "INDEX_NAMES",
    "compute_index",
    "compute_indices",
    "DistanceMatrix",
    "distance_matrix",
    "diameter",
    "mostar_counts",
    "transmissions",
    "__version__",
]
