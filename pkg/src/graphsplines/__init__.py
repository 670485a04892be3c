"""Generalized spline modules on edge-labeled graphs.

The library builds spline modules over multivariate polynomial rings,
decomposes graphs into disjoint cycles by removing interior edges, and
decides freeness of the spline module through rank criteria, projective
dimension and Hilbert series identities.
"""

from .poly import (
    GREVLEX,
    GRLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    PolyParseError,
    Ring,
    ZERO_DEGREE,
    format_poly,
    homogeneous_degree,
    linear_span_dim,
    multivariate_divide,
    parse_poly,
)
from .groebner import (
    FreeResolution,
    GroebnerBasis,
    HomogeneityError,
    ModuleElement,
    RationalSeries,
    Submodule,
    buchberger,
    free_resolution,
    hilbert_series,
    ideal_membership,
    is_regular_sequence,
    kernel_of_matrix,
    normal_form,
    projective_dimension,
    syzygies,
)
from .graphs import (
    BoundaryMatrix,
    Cycle,
    CycleBasis,
    EdgeLabeledGraph,
    GraphFormatError,
    Spline,
    boundary_matrix,
    classify_edges,
    cycle_basis,
    parse_graph,
    parse_spline_file,
    trivial_spline,
    verify_spline,
)
from .decompose import (
    DecompositionResult,
    RemovalStep,
    StaleStepError,
    decompose,
    is_removable,
    remove_edge,
    split_off,
    syzygy_isomorphism,
    syzygy_isomorphism_inverse,
)
from .splines import (
    FreenessCertificate,
    SplineBasis,
    cycle_rank,
    decide_freeness,
    graded_series_report,
    pd_relation_report,
    spline_module_generators,
    syzygy_to_spline,
)

__version__ = "0.1.0"
