"""g-circulant and cyclic matrices over GF(2^m): exact construction,
MDS/involutory/orthogonal/semi-involutory/semi-orthogonal checking, and
theorem-pruned exhaustive search."""

from .circulant import (
    CyclicSpec,
    GCirculantSpec,
    build_circulant,
    build_cyclic,
    build_g_circulant,
    build_left_circulant,
    cyclic_to_circulant,
    detect_g_circulant,
    g_shift_cycle,
    inverse_shift_law,
    left_circulant_submatrices,
    permutation_representation,
    product_shift_law,
    rotation_perm,
    satisfies_shift,
    shift_perm,
    shifted_convolution,
    square_structured,
    transpose_shift_law,
)
from .errors import (
    BadDegreeError,
    ConfigError,
    DimensionError,
    GcircError,
    NotCoprimeError,
    NotKCycleError,
    OutOfRangeError,
    ParseError,
    ReducibleModulusError,
    ResumeTokenError,
    SingularMatrixError,
    SpaceTooLargeError,
)
from .field import GF2m, is_irreducible
from .matrix import Matrix, Permutation
from .modular import (
    SqrtOneSolutions,
    crt_sqrt_one_solutions,
    factorize,
    gcd,
    is_complete_residue_system,
    mod_inverse,
    predicted_sqrt_one_count,
    sqrt_one_solutions,
)
from .properties import (
    DiagonalPair,
    PropertyReport,
    detect_semi_involutory,
    detect_semi_orthogonal,
    diagonal_power_scalar,
    full_report,
    involutory_g_filter,
    is_involutory,
    is_mds,
    is_orthogonal,
    left_circulant_involutory_conditions,
    ratio_components,
    rescale_pair,
    scaling_freedom_normalize,
)
from .search import (
    RowSpace,
    RowSpaceKind,
    SearchJob,
    SearchResult,
    Target,
    constrained_left_circulant_rows,
    job_partition,
    run_search,
    target_satisfied,
)

__version__ = "0.1.0"
