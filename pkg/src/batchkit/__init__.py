"""Linear batch codes: encoding, planning, verification, bounds, simulation."""

from .batchcode import (
    BatchVerdict,
    LinearBatchCode,
    QueryPlan,
    RecoverySet,
    VerifyCapExceeded,
    certify_max_m,
    check_plan,
    decode,
    encode,
    enumerate_recovery_sets,
    make_recovery_set,
    plan_request,
    verify_batch,
)
from .bounds import (
    BoundReport,
    binary_entropy,
    check_asymptotic_bounds,
    check_finite_bounds,
    full_report,
    max_m_by_finite_bounds,
)
from .constructions import compose, concat_codes, direct_sum, extend_one, subcube_code
from .field import GF2, PrimeField
from .linalg import (
    MatrixFq,
    VectorFq,
    combinations_equal_to,
    mat_vec_encode,
    min_distance,
    rank,
    row_weights,
)
from .simharness import SimTranscript, WorkloadSummary, simulate, workload_stats

__all__ = [
    "BatchVerdict",
    "BoundReport",
    "GF2",
    "LinearBatchCode",
    "MatrixFq",
    "PrimeField",
    "QueryPlan",
    "RecoverySet",
    "SimTranscript",
    "VectorFq",
    "VerifyCapExceeded",
    "WorkloadSummary",
    "binary_entropy",
    "certify_max_m",
    "check_asymptotic_bounds",
    "check_finite_bounds",
    "check_plan",
    "combinations_equal_to",
    "compose",
    "concat_codes",
    "decode",
    "direct_sum",
    "encode",
    "enumerate_recovery_sets",
    "extend_one",
    "full_report",
    "make_recovery_set",
    "mat_vec_encode",
    "max_m_by_finite_bounds",
    "min_distance",
    "plan_request",
    "rank",
    "row_weights",
    "simulate",
    "subcube_code",
    "verify_batch",
    "workload_stats",
]

__version__ = "0.1.0"
