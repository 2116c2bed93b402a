"""Steganographic codes over finite fields.

Construction and verification of stego-coding matrices and partition
stego-codes, syndrome-table embedding and extraction, conversions between
maximum-length-embeddable codes and perfect error-correcting codes, length
bounds, and hiding-redundancy analysis.

The hot enumeration kernels run from a compiled extension when it is built,
with a pure-Python fallback selected at import; ``KERNEL_BACKEND`` names the
active one.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .config import DEFAULT_CONFIG, RunConfig
from .construct import (
    DirectSumPlan,
    bound_direct_sum_eq5,
    bound_entropy_check,
    bound_min_length_eq2,
    direct_sum_construct,
    f5_matrix,
    projective_representatives,
    tth_dimension_bruteforce,
)
from .convert import (
    Classification,
    MleConversionResult,
    classify_mle,
    mle_to_perfect,
    perfect_to_mle,
)
from .field import GF, Word, all_words, distance, mat_vec, weight
from .metrics import (
    KrotovBound,
    RedundancyReport,
    binary_entropy,
    capacity,
    change_density,
    krotov_lower_bound,
    redundancy_curve,
    redundancy_report,
)
from .perfect import (
    LinearCode,
    PerfectnessCertificate,
    golay_binary,
    golay_ternary,
    hamming_code,
    min_distance,
    nonlinearity_witness,
    repetition_code,
    vasilev_code,
    verify_perfect,
)
from .stegocode import (
    BlockCode,
    CodingTable,
    PartitionCode,
    StegoMatrix,
    VerificationReport,
    build_coding_table,
    embed,
    extract,
    is_mle,
    is_stego_matrix,
    is_stego_partition,
    partition_from_matrix,
    roundtrip_check,
    sphere_size,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "DEFAULT_CONFIG",
    "RunConfig",
    "GF",
    "Word",
    "all_words",
    "weight",
    "distance",
    "mat_vec",
    "sphere_size",
    "StegoMatrix",
    "CodingTable",
    "PartitionCode",
    "BlockCode",
    "VerificationReport",
    "is_stego_matrix",
    "build_coding_table",
    "embed",
    "extract",
    "partition_from_matrix",
    "roundtrip_check",
    "is_stego_partition",
    "is_mle",
    "DirectSumPlan",
    "projective_representatives",
    "direct_sum_construct",
    "f5_matrix",
    "bound_min_length_eq2",
    "bound_direct_sum_eq5",
    "tth_dimension_bruteforce",
    "bound_entropy_check",
    "LinearCode",
    "PerfectnessCertificate",
    "hamming_code",
    "golay_binary",
    "golay_ternary",
    "repetition_code",
    "vasilev_code",
    "min_distance",
    "verify_perfect",
    "nonlinearity_witness",
    "MleConversionResult",
    "perfect_to_mle",
    "mle_to_perfect",
    "Classification",
    "classify_mle",
    "RedundancyReport",
    "KrotovBound",
    "binary_entropy",
    "capacity",
    "change_density",
    "redundancy_report",
    "redundancy_curve",
    "krotov_lower_bound",
]
