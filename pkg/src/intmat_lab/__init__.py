"""Exact counts, Monte Carlo estimates, and limiting-distribution comparisons
for random n-by-n integer matrices with entries uniform in [-k, k]."""

__version__ = "0.1.0"

from .counting import (
    CountRecord,
    GrowthProbe,
    ProductDistribution,
    brute_force_count,
    count_integer_eig_2x2,
    count_integer_eig_any_n,
    count_lambda_eig_2x2,
    count_real_eig_2x2,
    count_singular_2x2,
    count_solutions_linearforms,
    growth_probe,
    product_distribution,
)
from .curves import (
    ConvergenceReport,
    CurveTable,
    TheoryConstants,
    convergence_report,
    curve_table,
    integrate_curve,
    theory_constants,
    u_r,
    u_z,
    v_profile,
    w_profile,
)
from .linalg import (
    GershgorinDisk,
    IntMatrix,
    IntPolynomial,
    LinearForm,
    adjugate,
    char_poly,
    cofactor,
    det,
    gershgorin_disks,
    has_real_eigenvalues_2x2,
    integer_eigenvalues,
    real_eigenvalues_2x2,
    verify_adjugate_identity,
)
from .sampling import (
    EstimateRecord,
    SamplerConfig,
    ScaledHistogram,
    eigenvalue_histogram_exact,
    eigenvalue_histogram_sampled,
    estimate_probability,
    sample_matrix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
