"""ordpat: ordinal pattern dependence and multivariate dependence measures.

Estimators for the co-movement of bivariate time series through ordinal
patterns, multivariate Kendall's tau, and the trace-form multivariate
Pearson coefficient, together with closed-form Gaussian reference values,
Monte Carlo orthant oracles, seeded process generators, and an experiment
harness for replicated simulation studies.
"""

from ordpat._version import __version__
from ordpat.errors import (
    DegenerateDenominator,
    DegenerateMarginal,
    InputMismatch,
    InsufficientData,
    InvalidBandwidth,
    InvalidCode,
    InvalidConfig,
    InvalidCorrelation,
    InvalidCovariance,
    InvalidInput,
    NonStationary,
    OrderMismatch,
    OrdpatError,
    SingularCovariance,
    UnsupportedOrder,
)
from ordpat.estimates import DependenceEstimate, McEstimate
from ordpat.patterns import (
    HMAX,
    PatternDistribution,
    codes_for_windows,
    decode_pattern,
    encode_pattern,
    pattern_counts,
    pattern_sequence,
    series_windows,
)
from ordpat.opd import (
    JointPatternTable,
    grad_f,
    joint_pattern_table,
    opd_from_series,
    opd_iid_covariance,
    opd_iid_estimate,
    opd_plugin,
    signed_opd,
)
from ordpat.kendall import (
    DominanceProbabilities,
    HoeffdingTerms,
    dominance_counts,
    grad_psi,
    hoeffding_terms,
    kendall_tau,
    kendall_tau_with_ci,
    longrun_covariance,
    psi,
)
from ordpat.pearson import (
    WindowCovariances,
    pearson_from_covariances,
    pearson_mv,
    principal_sqrt_psd,
    window_covariances,
)
from ordpat.gaussian import (
    GaussianModel,
    ar1_opd1,
    ar1_window_model,
    bivariate_orthant,
    kendall_gaussian,
    mc_orthant,
    opd1_gaussian,
    opd_gaussian_decomposition,
    opd_gaussian_mc,
    pattern_difference_matrix,
    shifted_ar1_opd1,
)
from ordpat.procgen import (
    FAMILIES,
    ProcessSpec,
    gen_biv_ar1,
    gen_biv_ar2,
    gen_block_multinormal,
    gen_iid_ar1_pair,
    gen_shifted_ar1,
    generate,
)
from ordpat.harness import (
    ExperimentConfig,
    ExperimentReport,
    load_config,
    parse_config,
    run_experiment,
    summarize,
)

__all__ = [name for name in dir() if not name.startswith("_")]
