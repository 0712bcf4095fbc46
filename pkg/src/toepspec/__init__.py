"""Fredholm data of Toeplitz operators with piecewise continuous symbols.

Essential spectra via p-circular arcs, winding-number indices,
logarithmic-BMO oscillation ladders, an H^1-boundedness verdict, and
finite-section / norm-growth experiment harnesses, plus a CLI emitting
CSV tables and figures.
"""

from .errors import (
    BudgetError,
    DegenerateError,
    DeltaError,
    EmptyError,
    EndpointError,
    GridTooCoarseError,
    HasJumpsError,
    InSpectrumError,
    LengthError,
    NotAnalyticError,
    OverlapError,
    SizeError,
    ToepspecError,
    TooCloseError,
    TruncationError,
    UnderResolvedError,
)
from .experiments import (
    GrowthTable,
    IndexConsistencyReport,
    LindelofReport,
    ProbeTable,
    finite_section_probe,
    h1_growth_experiment,
    index_consistency,
    lindelof_demo,
)
from .families import (
    constant_symbol,
    lip_log_exemplar_symbol,
    lip_log_profile,
    monomial_symbol,
    sgn_symbol,
    step_symbol,
    trig_poly_symbol,
)
from .hardy import (
    SampledCurve,
    ToeplitzSection,
    apply_toeplitz,
    cauchy_singular,
    complementary_project,
    hardy_norm,
    poisson_extension,
    riesz_project,
    toeplitz_section,
    winding_number,
)
from .oscillation import (
    EmbeddingReport,
    GridFunction,
    H1Verdict,
    OscillationReport,
    VerdictKind,
    bmo_log_seminorm,
    bmo_seminorm,
    embedding_check,
    h1_boundedness_verdict,
    lip_log_seminorm,
    mean_oscillation,
    oscillation_ladder,
    vmo_defect,
)
from .spectra import (
    ArcP,
    DouglasEstimate,
    SpectrumDescription,
    SpectrumSegment,
    arc_membership,
    arc_parameter_grid,
    arc_points,
    completed_symbol_curve,
    douglas_spectrum_estimate,
    essential_spectrum,
    essential_spectrum_continuous,
    fredholm_index,
    is_in_essential_spectrum,
)
from .symbols import (
    CoefficientSequence,
    JumpPoint,
    Piece,
    PiecewiseSymbol,
    make_piecewise_symbol,
)

__version__ = "0.1.0"

__all__ = [
    "ArcP",
    "BudgetError",
    "CoefficientSequence",
    "DegenerateError",
    "DeltaError",
    "DouglasEstimate",
    "EmbeddingReport",
    "EmptyError",
    "EndpointError",
    "GridFunction",
    "GridTooCoarseError",
    "GrowthTable",
    "H1Verdict",
    "HasJumpsError",
    "InSpectrumError",
    "IndexConsistencyReport",
    "JumpPoint",
    "LengthError",
    "LindelofReport",
    "NotAnalyticError",
    "OscillationReport",
    "OverlapError",
    "Piece",
    "PiecewiseSymbol",
    "ProbeTable",
    "SampledCurve",
    "SizeError",
    "SpectrumDescription",
    "SpectrumSegment",
    "ToeplitzSection",
    "ToepspecError",
    "TooCloseError",
    "TruncationError",
    "UnderResolvedError",
    "VerdictKind",
    "apply_toeplitz",
    "arc_membership",
    "arc_parameter_grid",
    "arc_points",
    "bmo_log_seminorm",
    "bmo_seminorm",
    "cauchy_singular",
    "complementary_project",
    "completed_symbol_curve",
    "constant_symbol",
    "douglas_spectrum_estimate",
    "embedding_check",
    "essential_spectrum",
    "essential_spectrum_continuous",
    "finite_section_probe",
    "fredholm_index",
    "h1_boundedness_verdict",
    "h1_growth_experiment",
    "hardy_norm",
    "index_consistency",
    "is_in_essential_spectrum",
    "lindelof_demo",
    "lip_log_exemplar_symbol",
    "lip_log_profile",
    "lip_log_seminorm",
    "make_piecewise_symbol",
    "mean_oscillation",
    "monomial_symbol",
    "oscillation_ladder",
    "poisson_extension",
    "riesz_project",
    "sgn_symbol",
    "step_symbol",
    "toeplitz_section",
    "trig_poly_symbol",
    "vmo_defect",
    "winding_number",
]
