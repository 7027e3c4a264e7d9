"""Exact positivity invariants of bivariate homogeneous forms."""

from .forms import (
    BivariateForm,
    LinearForm,
    OperatorPoly,
    ZeroFormError,
    apply_operator,
    adjoint_pairing_check,
    double_shift,
    from_monomial_coeffs,
    from_normalized_coeffs,
    linear_substitute,
    shift,
)
from .linalg import (
    RatMatrix,
    ResourceLimitError,
    det_exact,
    is_positive_definite,
    kernel_basis,
    minor,
    rank_exact,
)
from .polyroots import UniPoly, count_roots_positive_axis
from .apolarity import (
    GramMatrix,
    HilbertData,
    check_mixed_hrr,
    check_ordinary_hrr,
    hilbert_function,
    lefschetz_gram,
    min_annihilator_degree,
    mixed_lefschetz_gram,
    mixed_primitive_basis,
    monomial_basis,
    primitive_basis,
    sperner_number,
    toeplitz,
)
from .hessian import (
    FormMatrix,
    HessianPoly,
    PartitionData,
    decide_ordinary_hrr_cone,
    hessian_matrix,
    hessian_polynomial,
    path_matrix_identity_check,
    plucker_expansion,
    positive_on_quadrant,
    ssyt_count,
    ssyt_count_bruteforce,
    subset_to_partition,
)
from .totalpos import (
    TPReport,
    all_minors_nonneg,
    classify_max_toeplitz,
    contiguous_s_minors_nonzero,
    corner_minors_nonzero,
    in_open_stratum,
    is_tp_contiguous,
)
from .equivalence import (
    EquivalenceReport,
    HypothesisError,
    PathReport,
    coefficient_positivity_check,
    contiguous_minor_nonvanishing_check,
    decide_hessian_side,
    decide_toeplitz_side,
    generate_forms,
    perturbation_check,
    shift_path_experiment,
    verify_equivalence,
)

__all__ = [name for name in dir() if not name.startswith("_")]
