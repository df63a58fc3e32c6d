"""Exact-arithmetic construction and certification of Mathieu-Zhao
subspaces of matrix algebras over finite fields and the rationals."""

from .census import (
    CensusReport,
    all_mat_subspaces,
    debondt_sample,
    enumerate_mat_subspaces,
    gaussian_binomial,
    hyperplane_census,
    ms_census,
    oracle_compare,
    random_subspace,
)
from .classify2 import (
    BaseChangeDemo,
    InvertibilityReport,
    PredictedFamily,
    basechange_demo,
    build_cor32_family,
    build_cor34_family,
    char_poly_roots,
    lemma31_check,
    predicted_maximal_families,
    splits_with_distinct_roots,
)
from .constructions import (
    GroupedFrame,
    IdempotentFrame,
    LambdaSpec,
    Thm21Certificate,
    TwoBlockFamily,
    block_subspace,
    build_cor26,
    build_example22,
    build_example23_extension,
    build_example24,
    centralizer_subspace,
    check_sigma_condition,
    cor26_complement_form,
    family_from_idempotents,
    pi0,
    single_part,
    singleton_parts,
    standard_frame,
    thm21_certify,
    weight_project,
)
from .errors import (
    BadBlocks,
    BudgetExceeded,
    ConfigError,
    ExcludedParameter,
    HypothesisFailed,
    ImproperSubspace,
    InternalContractViolation,
    InvalidPart,
    MixedFields,
    MzSpaceError,
    NotAnMS,
    NotNilpotent,
    ParameterViolation,
    ProductZero,
    RankOutOfRange,
    ShapeMismatch,
    SigmaConditionFailed,
    SquareParameter,
    UnsupportedField,
    ZeroInverse,
)
from .fields import FieldSpec, Scalar, is_rational_square
from .literals import (
    field_from_json,
    field_to_json,
    matrix_from_json,
    matrix_to_json,
    subspace_from_json,
    subspace_to_json,
    verdict_to_json,
)
from .matrices import (
    ExactMatrix,
    PowerTail,
    nullspace_vectors,
    power_tail,
    rank_factorization,
    rank_profile,
    rref_vectors,
)
from .maximality import (
    MaximalityCertificate,
    WitnessBundle,
    certify_maximal,
    maximality_witness,
)
from .mscore import (
    MS_FULL,
    MS_PROPER,
    NOT_MS,
    MaximalityVerdict,
    MsVerdict,
    find_idempotent,
    is_maximal_ms,
    ms_by_definition,
    ms_by_idempotent_criterion,
    trace_zero_space,
)
from .subspaces import (
    MatSubspace,
    extension_directions,
    full_algebra,
    intersect,
    span_of,
    subspace_sum,
    trace_orthogonal,
    zero_subspace,
)

__version__ = "1.0.0"
