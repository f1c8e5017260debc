"""Sharp constants of the discrete Markov-Bernstein inequality in Meixner norms."""

from mbconst._core import (
    BoundsReport,
    ChebRoot,
    DenseMatrix,
    EigenEstimate,
    FactorizationCheck,
    GammaResult,
    MeixnerParams,
    MonotoneReport,
    OracleReport,
    SymTridiag,
    TruncatedSum,
    __version__,
    alpha_ratio,
    bounds_beta1,
    build_A_dense,
    build_B,
    build_C,
    chain_condition_check,
    charpoly_smallest_zero,
    cheb_phi,
    cheb_smallest_root,
    epsilon_bounds,
    extremal_sequence_ratio,
    forward_difference,
    gamma_n,
    inner_product,
    jacobi_eigenvalues,
    meixner_norm,
    meixner_poly,
    monotonicity_scan,
    oracle_gamma,
    orthonormal_meixner,
    pochhammer,
    sequence_bound,
    smallest_eigenvalue,
    sturm_count,
    verify_factorization,
    weight,
)

__all__ = [
    "BoundsReport",
    "ChebRoot",
    "DenseMatrix",
    "EigenEstimate",
    "FactorizationCheck",
    "GammaResult",
    "MeixnerParams",
    "MonotoneReport",
    "OracleReport",
    "SymTridiag",
    "TruncatedSum",
    "__version__",
    "alpha_ratio",
    "bounds_beta1",
    "build_A_dense",
    "build_B",
    "build_C",
    "chain_condition_check",
    "charpoly_smallest_zero",
    "cheb_phi",
    "cheb_smallest_root",
    "epsilon_bounds",
    "extremal_sequence_ratio",
    "forward_difference",
    "gamma_n",
    "inner_product",
    "jacobi_eigenvalues",
    "meixner_norm",
    "meixner_poly",
    "monotonicity_scan",
    "oracle_gamma",
    "orthonormal_meixner",
    "pochhammer",
    "sequence_bound",
    "smallest_eigenvalue",
    "sturm_count",
    "verify_factorization",
    "weight",
]
