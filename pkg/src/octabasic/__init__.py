"""Exact arithmetic for the octabasic Laguerre family.

Moments computed three independent ways (recurrence dynamic program,
weighted Motzkin-path enumeration, permutation-statistic sums), the
path <-> permutation bijection, the little q-Jacobi / sum-of-two /
q-Laguerre specializations, the even/odd split, and the Mahonian
statistic families they induce.
"""

from .polyring import (
    VARIABLES,
    InexactDivision,
    NonInvertibleSubstitution,
    Poly,
)
from .qseries import (
    bracket_q,
    bracket2,
    choose2,
    qbinomial,
    qfactorial,
    qfactorial_coefficients,
    qpochhammer_power,
)
from .orthopoly import (
    DegreeTooHigh,
    MomentSequence,
    RecurrenceCoeffs,
    apply_functional,
    moments_from_recurrence,
    monic_sequence,
    orthogonality_check,
)
from .permstat import (
    CLASSES,
    RUN_TERM_N_MINUS_RUN,
    RUN_TERM_RUN_MINUS_1,
    ClassSums,
    RunDecomposition,
    StatProfile,
    class_sums,
    coefficient_variants,
    decompose,
    distribution,
    distribution_csv,
    distribution_many,
    eval_profile,
    is_mahonian,
    lsg,
    moment_via_permutations,
    octabasic_weight,
    opener_closer_balance,
    parse_profile,
    rsg,
    shifted_profile,
    standard_profile,
)
from .motzkin import (
    BRACKET_PAIR,
    E_DOTTED,
    E_SOLID,
    NE,
    SE,
    MalformedPath,
    Step,
    enumerate_paths,
    format_path,
    insertion_trace,
    moment_via_paths,
    parse_path,
    path_to_perm,
    path_weight,
    perm_to_path,
    validate_path,
)
from .families import (
    DiscreteMeasure,
    Specialization,
    moment_closed_form,
    octabasic_coeffs,
    qjacobi_coeffs,
    qjacobi_explicit,
    qjacobi_measure,
    qjacobi_measure_check,
    qlaguerre_coeffs,
    qlaguerre_explicit,
    specialization,
    sum2_coeffs,
    sum2_explicit,
    sum2_measure,
    sum2_measure_check,
)
from .oddfamily import (
    IDENTIFICATION,
    StarAdjustment,
    SymmetricChain,
    even_coeffs,
    lsg_star,
    odd_coeffs,
    odd_moment_closed_form,
    odd_moments,
    odd_specialization_check,
    restricted_count,
    rsg_star,
    star_adjustment,
    star_distribution,
    star_distributions,
    star_statistic,
    star_sums,
    symmetric_chain,
)

__version__ = "0.1.0"
