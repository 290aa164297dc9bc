"""Exact lower bounds on multihypothesis-testing error probability, plus
tie/no-tie analysis and exponent diagnostics for block codes on the binary
symmetric channel."""

from .bounds import (
    BoundReport,
    GeneralizedVhOptimum,
    StabilizationResult,
    VerduHanBound,
    argmax_uniqueness,
    asymptotic_pv_bound,
    bound_report,
    generalized_pv_bound,
    generalized_pv_bound_real,
    map_equality_set,
    map_error_probability,
    strictly_dominated_atoms,
    theta_stabilization,
    tilted_low_atoms,
    verdu_han_bound,
    generalized_vh_at_optimum,
)
from .bsc import (
    PairwiseBound,
    Theorem1Gap,
    TieReport,
    bec_joint,
    bsc_joint,
    count_dominated,
    count_equidistant,
    omega_exact_probability,
    omega_lower_bound,
    pair_tie_probability,
    pairwise_bound,
    theorem1_gap_check,
    tie_report,
    weight_probabilities,
)
from .codes import BlockCode, BscParams, hamming, parse_code_file, parse_code_text
from .errors import (
    AlphaTooLarge,
    BlocklengthTooLarge,
    DegeneratePe1,
    DuplicateEntry,
    EmptySeries,
    MassNotNormalized,
    NoStabilization,
    ParseError,
    PvlabError,
    RangeError,
    TooManyCodewords,
    ValidationError,
    ZeroMarginal,
)
from .exponent import (
    CSV_HEADER,
    ExponentSeries,
    FamilySpec,
    GapSummary,
    SeriesRow,
    exponent_series,
    generate_family,
    neg_log_rate,
    pair_limiting_rate,
    rate_gap_series,
    series_to_csv,
    zero_rate_exponent_reference,
)
from .joint import (
    JointDistribution,
    PosteriorColumn,
    build_joint,
    dump_distribution,
    information_density,
    joint_from_json_obj,
    joint_to_json_obj,
    load_distribution,
    posterior,
    tilted_posterior,
)

__version__ = "0.1.0"
