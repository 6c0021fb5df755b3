"""Information fractal dimension of Dempster-Shafer mass functions.

Evidence-theory types (frames, subsets, mass functions, cardinality
profiles), Shannon/Deng entropy, the entropy-over-split-scale dimension,
four parametric families, convergence experiments, and a brute-force
oracle for cross-checking.
"""
from .core import (
    DEFAULT_EXPANSION_LIMIT,
    MASS_TOLERANCE,
    MAX_EXPLICIT_FRAME,
    SYMMETRY_TOLERANCE,
    CardinalityProfile,
    DuplicateLabelError,
    DuplicateSubsetError,
    EmptyFrameError,
    EmptySubsetError,
    EvidenceError,
    Frame,
    FrameTooLargeError,
    MassFunction,
    NegativeMassError,
    NonUnitTotalError,
    NotBayesianError,
    NotCardinalitySymmetricError,
    PartialLayerError,
    ProbabilityDistribution,
    ProfileRow,
    Subset,
    UnknownLabelError,
    mass_from_json,
    mass_to_json,
)
from .dimension import (
    DimensionReport,
    information_dimension,
    information_dimension_profile,
    probability_dimension,
    split_scale,
    split_scale_profile,
)
from .entropy import (
    BASE_2,
    BASE_10,
    BASE_E,
    deng_entropy,
    deng_entropy_profile,
    max_deng_entropy,
    shannon_entropy,
    shannon_max,
)
from .experiments import (
    ConvergenceRow,
    ConvergenceTable,
    ConvergenceVerdict,
    InsufficientRowsError,
    detect_limit,
    render_plot_data,
    render_table,
    run_convergence,
)
from .families import (
    FAMILIES,
    PROFILE_LIMIT,
    UnknownFamilyError,
    family_profile,
    max_deng,
    uniform_bayesian,
    uniform_powerset,
    vacuous,
)
from .oracle import ORACLE_FRAME_LIMIT, brute_force_report, compare_reports

__version__ = "0.1.0"

__all__ = [
    "BASE_2",
    "BASE_10",
    "BASE_E",
    "CardinalityProfile",
    "ConvergenceRow",
    "ConvergenceTable",
    "ConvergenceVerdict",
    "DEFAULT_EXPANSION_LIMIT",
    "DimensionReport",
    "DuplicateLabelError",
    "DuplicateSubsetError",
    "EmptyFrameError",
    "EmptySubsetError",
    "EvidenceError",
    "FAMILIES",
    "Frame",
    "FrameTooLargeError",
    "InsufficientRowsError",
    "MASS_TOLERANCE",
    "MAX_EXPLICIT_FRAME",
    "MassFunction",
    "NegativeMassError",
    "NonUnitTotalError",
    "NotBayesianError",
    "NotCardinalitySymmetricError",
    "ORACLE_FRAME_LIMIT",
    "PROFILE_LIMIT",
    "PartialLayerError",
    "ProbabilityDistribution",
    "ProfileRow",
    "Subset",
    "SYMMETRY_TOLERANCE",
    "UnknownFamilyError",
    "UnknownLabelError",
    "brute_force_report",
    "compare_reports",
    "deng_entropy",
    "deng_entropy_profile",
    "detect_limit",
    "family_profile",
    "information_dimension",
    "information_dimension_profile",
    "mass_from_json",
    "mass_to_json",
    "max_deng",
    "max_deng_entropy",
    "probability_dimension",
    "render_plot_data",
    "render_table",
    "run_convergence",
    "shannon_entropy",
    "shannon_max",
    "split_scale",
    "split_scale_profile",
    "uniform_bayesian",
    "uniform_powerset",
    "vacuous",
]
