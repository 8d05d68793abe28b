"""Recursive max-linear Bayesian networks on directed acyclic graphs.

Max-times matrix algebra, graphical separation queries, Markov equivalence,
sampling, generalized maximum-likelihood estimation of edge weights, and
identification of the minimal network structure from observations.
"""

from .errors import (
    CycleError,
    DimensionMismatch,
    DuplicateEdgeError,
    EmptySample,
    ExtraneousWeight,
    IncompatibleDag,
    InvalidCoefficientMatrix,
    InvalidWeightMatrix,
    MaxLinError,
    MissingEdgeWeight,
    NonDisjointQuery,
    NonPositiveInput,
    NonPositiveSample,
    NonPositiveWeight,
    NotAPath,
    SizeLimitExceeded,
    VertexOutOfRange,
)
from .estimation import (
    DEFAULT_ATOM_RTOL,
    GlrVerdict,
    RatioStatistics,
    ancestor_ratio_coefficients,
    generalized_likelihood_ratio,
    glr_two_node_sample,
    gmle_coefficients,
    gmle_edge_weights,
    identify_coefficients,
    identify_structure,
    ratio_statistics,
)
from .graph import Dag, UndirectedGraph, markov_equivalent
from .model import (
    MaxLinearModel,
    NoiseSpec,
    WeightKind,
    admissible_weights,
    assemble_weight_matrix,
    marginal_rows,
    minimal_dag,
    noise_matrix,
    propagate,
)
from .separation import (
    IndependenceStatement,
    d_separated,
    enumerate_independences,
    m_separated,
    markov_statements,
)
from .tropical import (
    DEFAULT_RTOL,
    brute_force_coefficients,
    closure,
    matrices_close,
    max_times_product,
    path_weight,
    validate_weight_matrix,
    values_close,
)

__version__ = "0.1.0"

__all__ = [
    "Dag",
    "UndirectedGraph",
    "markov_equivalent",
    "MaxLinearModel",
    "NoiseSpec",
    "WeightKind",
    "admissible_weights",
    "assemble_weight_matrix",
    "marginal_rows",
    "minimal_dag",
    "noise_matrix",
    "propagate",
    "IndependenceStatement",
    "d_separated",
    "m_separated",
    "markov_statements",
    "enumerate_independences",
    "DEFAULT_RTOL",
    "DEFAULT_ATOM_RTOL",
    "max_times_product",
    "closure",
    "path_weight",
    "brute_force_coefficients",
    "validate_weight_matrix",
    "values_close",
    "matrices_close",
    "GlrVerdict",
    "RatioStatistics",
    "ratio_statistics",
    "gmle_edge_weights",
    "gmle_coefficients",
    "ancestor_ratio_coefficients",
    "identify_coefficients",
    "identify_structure",
    "generalized_likelihood_ratio",
    "glr_two_node_sample",
    "MaxLinError",
    "CycleError",
    "DuplicateEdgeError",
    "VertexOutOfRange",
    "DimensionMismatch",
    "NonDisjointQuery",
    "SizeLimitExceeded",
    "InvalidWeightMatrix",
    "InvalidCoefficientMatrix",
    "NotAPath",
    "NonPositiveWeight",
    "MissingEdgeWeight",
    "ExtraneousWeight",
    "IncompatibleDag",
    "EmptySample",
    "NonPositiveSample",
    "NonPositiveInput",
    "__version__",
]
