"""Degree sequences of triangular multigraphs: decide, construct, verify."""

from .constructors import (
    Branch,
    ConstructionCertificate,
    ConstructionParams,
    SplitInfo,
    construct_cycle_square,
    construct_fan,
    construct_small_n,
    realize,
    replay,
    split_sequences,
)
from .errors import *  # noqa: F401,F403
from .multigraph import (
    Multigraph,
    TriangularityReport,
    check_triangular,
    degree,
    degree_sequence_of,
    union_on_shared_vertex,
)
from .sequence import (
    DegreeSequence,
    ValidationReport,
    alternating_sum,
    canonicalize,
    check_erdos_gallai,
    check_triangular_conditions,
    strip_zeros,
)

__version__ = "0.1.0"
