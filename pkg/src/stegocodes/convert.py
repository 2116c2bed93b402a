"""Bridges between perfect codes and maximum-length-embeddable stego-codes.

A perfect code with q^(n-k) codewords yields an (n, q^k, t) MLE partition:
class i is the code translated by the i-th word of weight <= t (leaders in
weight-then-packed order, leader 0 the zero word, so class 0 is the input
code itself).  Conversely every class of an MLE partition is itself a
perfect code, which this module certifies one class at a time.

Parameter classification follows the known catalogue of perfect codes: apart
from the trivial families, only the two Golay parameter sets and the
Hamming parameter family can carry an MLE code.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .config import DEFAULT_CONFIG, RunConfig
from .errors import (
    BudgetExceededError,
    NotMleError,
    NotPerfectError,
    PartCertificateError,
)
from .field import Word
from .perfect import LinearCode, PerfectnessCertificate, min_distance, verify_perfect
from .stegocode import (
    BlockCode,
    PartitionCode,
    is_stego_partition,
    low_weight_words,
    sphere_size,
)
from ._kernels import cf_add

# Above this universe size, conversions keep the partition in translate form
# rather than materializing every class.
EXPLICIT_LIMIT = 1 << 20


@dataclass
class MleConversionResult:
    """Output of perfect_to_mle: the partition, where the input sits, and
    the leader words that generated the classes."""

    partition: PartitionCode
    part_index_of_input: int
    coset_leaders: list[Word]


def _power_exponent(value: int, base: int):
    """e with base**e == value, or None."""
    e = 0
    v = 1
    while v < value:
        v *= base
        e += 1
    return e if v == value else None


def perfect_to_mle(
    code,
    t: int,
    config: RunConfig = DEFAULT_CONFIG,
    streaming: bool | None = None,
) -> MleConversionResult:
    """Build the MLE partition whose class 0 is the given perfect code.

    The code must pass verify_perfect at radius t (certificate attached to
    the error otherwise).  streaming=None picks translate form automatically
    for universes above EXPLICIT_LIMIT; explicit form is refused beyond the
    enumeration cap, and translate form requires a linear input.
    """
    cert = verify_perfect(code, t, config)
    if not cert.passed:
        raise NotPerfectError(
            f"code is not perfect at t={t}: "
            f"{cert.sphere_packing_lhs} != {cert.total}"
            if not cert.equal
            else f"minimum distance {cert.d} < {2 * t + 1}",
            certificate=cert,
        )
    f = code.field
    q, n = f.q, code.n
    nk = _power_exponent(code.M, q)
    if nk is None:
        raise NotPerfectError(f"codeword count {code.M} is not a power of {q}", certificate=cert)
    k = n - nk
    leaders_packed = low_weight_words(f, n, t)
    assert len(leaders_packed) == sphere_size(n, t, q) == q**k
    leaders = [Word.unpack(f, n, x) for x in leaders_packed]

    qn = q**n
    if streaming is None:
        streaming = qn > EXPLICIT_LIMIT
    if streaming:
        if not isinstance(code, LinearCode):
            raise BudgetExceededError(
                f"streaming conversion needs a linear code; materializing GF({q})^{n} "
                f"({qn} words) was refused",
                required=qn,
                cap=EXPLICIT_LIMIT,
            )
        partition = PartitionCode.from_translates(code, leaders, t)
    else:
        if qn > config.enumeration_cap:
            raise BudgetExceededError(
                f"explicit conversion over GF({q})^{n} needs {qn} words, "
                f"cap is {config.enumeration_cap}",
                required=qn,
                cap=config.enumeration_cap,
            )
        codewords = code.packed() if isinstance(code, BlockCode) else code.codewords_packed(config)
        p, ndig = f.p, n * f.r
        parts = tuple(
            frozenset(cf_add(lead, c, p, ndig) for c in codewords)
            for lead in leaders_packed
        )
        partition = PartitionCode(f, n, t, parts=parts)
    return MleConversionResult(partition=partition, part_index_of_input=0, coset_leaders=leaders)


def mle_to_perfect(
    S: PartitionCode,
    config: RunConfig = DEFAULT_CONFIG,
) -> list[PerfectnessCertificate]:
    """Certify every class of an MLE partition as a perfect code.

    Raises NotMleError when the partition misses the sphere-size equality
    (or fails the stego-code check), and PartCertificateError naming the
    first class whose certificate fails, which would falsify the MLE claim.
    """
    rep = S._verified_report
    if rep is None or not rep.passed:
        rep = is_stego_partition(S, config)
        if not rep.passed:
            w, i = rep.witness
            raise NotMleError(
                f"not a stego-code: word {w.to_text()} is farther than t={S.t} from class {i}"
            )
    if S.M != sphere_size(S.n, S.t, S.field.q):
        raise NotMleError(
            f"M = {S.M} misses the sphere-size bound "
            f"{sphere_size(S.n, S.t, S.field.q)}; not maximum length embeddable"
        )
    certs = []
    if S.is_explicit:
        for i in range(S.M):
            part_code = BlockCode(S.field, S.n, S.part_packed(i))
            cert = verify_perfect(part_code, S.t, config)
            if not cert.passed:
                raise PartCertificateError(
                    f"class {i} fails its perfectness certificate",
                    part_index=i,
                    certificate=cert,
                )
            certs.append(cert)
        return certs
    # translate partition: distances inside a class are translation-invariant,
    # so one base-code distance computation covers every class exactly
    base = S._base
    d = min_distance(base, config)
    for i in range(S.M):
        cert = PerfectnessCertificate(
            n=S.n,
            M=base.M,
            d=d,
            t=S.t,
            t_max=(d - 1) // 2,
            sphere_packing_lhs=base.M * sphere_size(S.n, S.t, S.field.q),
            total=S.field.q**S.n,
            equal=base.M * sphere_size(S.n, S.t, S.field.q) == S.field.q**S.n,
            d_consistent=d >= 2 * S.t + 1,
        )
        if not cert.passed:
            raise PartCertificateError(
                f"class {i} fails its perfectness certificate",
                part_index=i,
                certificate=cert,
            )
        certs.append(cert)
    return certs


class Classification(enum.Enum):
    """Possible parameter classes of an MLE stego-code."""

    TRIVIAL = "TRIVIAL"
    BINARY_GOLAY_TYPE = "BINARY_GOLAY_TYPE"
    TERNARY_GOLAY_TYPE = "TERNARY_GOLAY_TYPE"
    HAMMING_TYPE = "HAMMING_TYPE"
    IMPOSSIBLE = "IMPOSSIBLE"


def classify_mle(n: int, M: int, t: int, q: int) -> Classification:
    """Classify claimed (n, M, t) MLE parameters over GF(q).

    Anything missing the sphere-size equality is IMPOSSIBLE outright.  The
    trivial families (whole space with t = n, single class with t = 0, and
    the binary repetition-derived (2t+1, 2^{2t}, t)) are labeled first, so
    the overlapping binary (3, 4, 1) resolves to TRIVIAL rather than to the
    Hamming family.
    """
    if q < 2 or n < 1 or not 0 <= t <= n or M < 1:
        raise ValueError(f"bad parameters n={n}, M={M}, t={t}, q={q}")
    if M != sphere_size(n, t, q):
        return Classification.IMPOSSIBLE
    if M == q**n and t == n:
        return Classification.TRIVIAL
    if M == 1 and t == 0:
        return Classification.TRIVIAL
    if q == 2 and n == 2 * t + 1 and M == 2 ** (2 * t):
        return Classification.TRIVIAL
    if (q, n, t, M) == (2, 23, 3, 2**11):
        return Classification.BINARY_GOLAY_TYPE
    if (q, n, t, M) == (3, 11, 2, 3**5):
        return Classification.TERNARY_GOLAY_TYPE
    if t == 1:
        r = _power_exponent(M, q)
        if r is not None and r >= 2 and n == (q**r - 1) // (q - 1):
            return Classification.HAMMING_TYPE
    return Classification.IMPOSSIBLE
