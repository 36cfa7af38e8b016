"""Tanner graph codes as first homology with twisted coefficients, over GF(2)."""

from .codes import LinearCode, min_distance_bruteforce, named_code, rate, relative_distance
from .errors import DimensionMismatch, LocalSystemShapeError, ParseError, ValidationError
from .gf2 import BitMatrix, BitVector, kernel_basis, rank, row_reduce, weight
from .graphs import Graph, girth, named_graph, random_regular, second_eigenvalue
from .homology import (
    LocalSystem,
    SimplicialComplex,
    boundary_matrix,
    gauge_local_system,
    homology,
    homology_code,
    validate_local_system,
)
from .realization import (
    GraphCodeInstance,
    LocalCodeAssignment,
    boundary_evaluate,
    build_graph_code,
    build_local_system,
    distance_bound,
    rate_bound,
    report,
    uniform_assignment,
    verify_proposition,
)

__version__ = "0.1.0"
