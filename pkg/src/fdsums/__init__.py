"""Exact Fourier-Dedekind sums, their convolution group, and identity checks."""
from .errors import (
    BTooSmall,
    FDError,
    NonIntegerResult,
    NotCoprime,
    NotPairwiseCoprime,
    NotPrime,
    NotZeroMean,
    PeriodMismatch,
)
from .exact import (
    Convention,
    Residue,
    bernoulli,
    bernoulli_table,
    delta_z,
    mod_inverse,
    sawtooth,
    sawtooth_slash,
)
from .fourier_dedekind import (
    FDSpec,
    fd_sum,
    fd_sum_complex,
    fd_sum_linear_comb,
    fd_sum_pair,
    fd_vector,
    gen_func_coefficients,
    reduced_sum,
    s_zero_dim,
)
from .periodic import (
    PeriodicVector,
    SquareMatrix,
    bareiss_det,
    check_convolution_characterization,
    constancy_check,
    convolve,
    difference_op,
    fd_inverse,
    fd_sum_cramer,
    fd_system_matrix,
    prime_constancy_criterion,
    shift,
)
from .reciprocity import (
    PolyCoeffs,
    TriangleSpec,
    lattice_count_brute,
    lattice_count_formula,
    pie_negation,
    pie_shift,
    poly_negation_pie,
    poly_part,
    reciprocal_sum_R,
    restricted_partition,
    verify_rademacher_extended,
)
from .analysis import (
    BoundsCertificate,
    ExtremaResult,
    average_all,
    average_last,
    bounds_2d,
    bounds_recip_corollary,
    concavity_check,
    dedekind_sum,
    extrema_2d,
    negate_first,
    r_shift_bound,
)
from .report import VerificationReport, Witness
from .records import OutputRecord

__version__ = "0.1.0"
