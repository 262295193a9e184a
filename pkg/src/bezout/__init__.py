"""Exact Bezoutian and resultant matrices of polynomial pairs, their nullities and kernels."""

from .errors import BezoutError, ParseError, PreconditionError, TheoremViolation
from .linalg import KernelBasis, kernel_basis, nullity, rank
from .matrix import (
    ExactMatrix,
    hankel_of,
    nilpotent,
    reverse_identity,
    toeplitz_of,
    vandermonde_col,
)
from .poly import (
    ZERO_DEGREE,
    HomogeneousPoly,
    Polynomial,
    cofactors,
    degree,
    euclid_gcd,
    evaluate,
    homogenize,
    parse_poly,
)
from .theory import (
    BezoutPair,
    GcdReport,
    bezoutian_divdiff,
    bezoutian_hankel_toeplitz,
    bezoutian_padding,
    gcd_report,
    homogenized_gcd_degree,
    kernel_param_of_multiplication_operator,
    multiplication_matrix,
    resultant_matrix,
    verify_block_factorization,
    verify_congruence_identity,
    verify_resultant_action,
)

__version__ = "0.1.0"
