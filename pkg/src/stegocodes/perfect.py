"""Perfect error-correcting codes: Hamming, Golay, repetition, Vasil'ev.

A t-error-correcting code with M codewords of length n over GF(q) is perfect
when M times the radius-t sphere count equals q^n exactly.  These codes are
the raw material for the conversions in :mod:`stegocodes.convert`, so every
constructor here self-verifies: the Golay codes are found by searching for
cyclic generator polynomials and are only exposed after their perfectness
certificate checks out, which removes any transcription risk from embedded
constants.

Minimum distances are computed from codeword weights for linear codes and by
the pairwise kernel for nonlinear ones; the two routes are deliberately kept
separate so one can cross-check the other in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ._kernels import cf_add, min_nonzero_weight, min_pairwise_distance
from .config import DEFAULT_CONFIG, RunConfig
from .construct import projective_representatives
from .errors import BudgetExceededError, ConstructionError, DimensionMismatchError
from .field import GF, Word, pack_digits, unpack_digits
from .linalg import nullspace_basis, rank, word_rows
from .stegocode import BlockCode, contrib_from_rows, sphere_size


class LinearCode:
    """A linear code given by a full-row-rank (n-k) x n check matrix.

    Codewords (the nullspace of the check matrix) are materialized lazily and
    cached; membership testing never needs them.
    """

    __slots__ = ("field", "n", "check_rows", "_contrib", "_codewords", "_block")

    def __init__(self, check_rows):
        check_rows = tuple(check_rows)
        if not check_rows:
            raise ValueError("check matrix needs at least one row")
        f = check_rows[0].field
        n = len(check_rows[0])
        for r in check_rows:
            if r.field.q != f.q or len(r) != n:
                raise DimensionMismatchError("check rows must share one field and length")
        if rank(word_rows(check_rows), f) != len(check_rows):
            raise ValueError("check matrix must have full row rank")
        self.field = f
        self.n = n
        self.check_rows = check_rows
        self._contrib = None
        self._codewords = None
        self._block = None

    @property
    def k(self) -> int:
        """Code dimension."""
        return self.n - len(self.check_rows)

    @property
    def M(self) -> int:
        return self.field.q**self.k

    def check_contrib(self):
        if self._contrib is None:
            self._contrib = contrib_from_rows(self.check_rows)
        return self._contrib

    def syndrome(self, x: Word) -> Word:
        from .field import mat_vec

        return mat_vec(self.check_rows, x)

    def contains(self, x) -> bool:
        if isinstance(x, Word):
            return all(e == 0 for e in self.syndrome(x).elems)
        x = Word.unpack(self.field, self.n, x)
        return self.contains(x)

    def codewords_packed(self, config: RunConfig = DEFAULT_CONFIG) -> tuple[int, ...]:
        """All q^k codewords, packed, ascending."""
        if self._codewords is None:
            f = self.field
            q, n = f.q, self.n
            if self.M > config.enumeration_cap:
                raise BudgetExceededError(
                    f"materializing {self.M} codewords exceeds cap {config.enumeration_cap}",
                    required=self.M,
                    cap=config.enumeration_cap,
                )
            basis = nullspace_basis(word_rows(self.check_rows), f)
            p, ndig = f.p, n * f.r
            words = [0]
            for b in basis:
                multiples = [
                    pack_digits([f.mul(v, c) for c in b], q) for v in range(q)
                ]
                words = [cf_add(w, vb, p, ndig) for vb in multiples for w in words]
            words.sort()
            self._codewords = tuple(words)
        return self._codewords

    def codewords(self, config: RunConfig = DEFAULT_CONFIG) -> list[Word]:
        return [Word.unpack(self.field, self.n, x) for x in self.codewords_packed(config)]

    def as_block(self, config: RunConfig = DEFAULT_CONFIG) -> BlockCode:
        if self._block is None:
            self._block = BlockCode(self.field, self.n, self.codewords_packed(config))
        return self._block

    def min_distance(self, config: RunConfig = DEFAULT_CONFIG) -> int:
        """Minimum distance, via the minimum nonzero codeword weight."""
        block = self.as_block(config)
        return min_nonzero_weight(block.rows_bytes(), block.M, self.n)

    def __repr__(self):
        return f"LinearCode(GF({self.field.q}), n={self.n}, k={self.k})"


@dataclass
class PerfectnessCertificate:
    """Evidence for (or against) sphere-packing equality at radius t.

    equal records M * sphere_size(n, t, q) == q^n; d_consistent records
    d >= 2t + 1 (vacuously true for single-codeword codes, where d is None).
    """

    n: int
    M: int
    d: Optional[int]
    t: int
    t_max: Optional[int]
    sphere_packing_lhs: int
    total: int
    equal: bool
    d_consistent: bool

    @property
    def passed(self) -> bool:
        return self.equal and self.d_consistent

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "M": self.M,
            "d": self.d,
            "t": self.t,
            "t_max": self.t_max,
            "sphere_packing_lhs": self.sphere_packing_lhs,
            "total": self.total,
            "equal": self.equal,
            "d_consistent": self.d_consistent,
            "passed": self.passed,
        }


def min_distance(code, config: RunConfig = DEFAULT_CONFIG) -> int:
    """Exact minimum distance of a block or linear code.

    Linear codes use their minimum nonzero weight; block codes compare all
    M(M-1)/2 pairs (guarded by the enumeration cap).
    """
    if isinstance(code, LinearCode):
        return code.min_distance(config)
    if code.M < 2:
        raise ValueError("minimum distance needs at least two codewords")
    pairs = code.M * (code.M - 1) // 2
    if pairs > config.enumeration_cap:
        raise BudgetExceededError(
            f"{pairs} codeword pairs exceed cap {config.enumeration_cap}",
            required=pairs,
            cap=config.enumeration_cap,
        )
    return min_pairwise_distance(code.rows_bytes(), code.M, code.n)


def verify_perfect(code, t: int, config: RunConfig = DEFAULT_CONFIG) -> PerfectnessCertificate:
    """Certificate for the sphere-packing equality at radius t."""
    n = code.n
    q = code.field.q
    M = code.M
    d = None if M == 1 else min_distance(code, config)
    lhs = M * sphere_size(n, min(t, n), q)
    total = q**n
    return PerfectnessCertificate(
        n=n,
        M=M,
        d=d,
        t=t,
        t_max=None if d is None else (d - 1) // 2,
        sphere_packing_lhs=lhs,
        total=total,
        equal=lhs == total,
        d_consistent=(d is None) or d >= 2 * t + 1,
    )


def hamming_code(r: int, f: GF) -> LinearCode:
    """The (q^r - 1)/(q - 1) long Hamming code over GF(q), r >= 2.

    Check matrix columns are the projective representatives of GF(q)^r in
    ascending packed order; for q = 2 that is the natural binary ordering.
    """
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    reps = projective_representatives(r, f)
    rows = [Word(f, [rep.elems[i] for rep in reps]) for i in range(r)]
    return LinearCode(rows)


# --- cyclic code search used by the Golay constructions ---

def _poly_divides(g, n: int, p: int) -> bool:
    """Does the monic polynomial g divide x^n - 1 over GF(p)?"""
    # long division of x^n - 1; remainder must vanish
    rem = {0: (-1) % p, n: 1}
    deg = len(g) - 1
    while rem:
        top = max(rem)
        if top < deg:
            return False
        c = rem[top]
        for i, gc in enumerate(g):
            if gc:
                pos = top - deg + i
                v = (rem.get(pos, 0) - c * gc) % p
                if v:
                    rem[pos] = v
                else:
                    rem.pop(pos, None)
        if not rem:
            return True
        if max(rem) < deg:
            return False
    return True


def _cyclic_code(n: int, p: int, gen_degree: int) -> LinearCode:
    """Cyclic code from the first degree-gen_degree divisor of x^n - 1."""
    f = GF(p)
    gen = None
    for value in range(p**gen_degree):
        coeffs = []
        v = value
        for _ in range(gen_degree):
            v, c = divmod(v, p)
            coeffs.append(c)
        coeffs.append(1)
        if coeffs[0] == 0:
            continue
        if _poly_divides(coeffs, n, p):
            gen = coeffs
            break
    if gen is None:
        raise ConstructionError(f"no degree-{gen_degree} divisor of x^{n}-1 over GF({p})")
    gen_rows = []
    for s in range(n - gen_degree):
        row = [0] * n
        for i, c in enumerate(gen):
            row[s + i] = c
        gen_rows.append(row)
    check = [Word(f, v) for v in nullspace_basis(gen_rows, f)]
    return LinearCode(check)


_GOLAY_CACHE: dict[str, LinearCode] = {}


def golay_binary(config: RunConfig = DEFAULT_CONFIG) -> LinearCode:
    """The binary (23, 2^12, 7) Golay code, self-verified before exposure."""
    code = _GOLAY_CACHE.get("binary")
    if code is None:
        code = _cyclic_code(23, 2, 11)
        cert = verify_perfect(code, 3, config)
        if not (cert.passed and cert.d == 7 and cert.M == 2**12):
            raise ConstructionError(f"binary Golay self-check failed: {cert.to_dict()}")
        _GOLAY_CACHE["binary"] = code
    return code


def golay_ternary(config: RunConfig = DEFAULT_CONFIG) -> LinearCode:
    """The ternary (11, 3^6, 5) Golay code, self-verified before exposure."""
    code = _GOLAY_CACHE.get("ternary")
    if code is None:
        code = _cyclic_code(11, 3, 5)
        cert = verify_perfect(code, 2, config)
        if not (cert.passed and cert.d == 5 and cert.M == 3**6):
            raise ConstructionError(f"ternary Golay self-check failed: {cert.to_dict()}")
        _GOLAY_CACHE["ternary"] = code
    return code


def repetition_code(t: int) -> BlockCode:
    """Binary repetition code of odd length 2t + 1; perfect with radius t."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    n = 2 * t + 1
    return BlockCode(GF(2), n, [0, 2**n - 1])


def vasilev_code(m: int, config: RunConfig = DEFAULT_CONFIG) -> BlockCode:
    """A nonlinear perfect binary code of length 2^(m+1) - 1.

    Doubling construction over the length 2^m - 1 Hamming code: codewords are
    (u | u + v | parity(u) + lam(v)) with u free and v a Hamming codeword.
    The auxiliary function lam(v) = v_1 * v_2 (product of the first two
    coordinates) is not linear on the Hamming code, which is what makes the
    result nonlinear; any lam with lam(0) = 0 failing linearity would do, and
    the nonlinearity witness test is the actual contract.
    """
    if m < 3:
        raise ValueError(f"m must be >= 3, got {m}")
    nh = 2**m - 1
    size = 2 ** (2 * nh - m)
    if size > config.enumeration_cap:
        raise BudgetExceededError(
            f"Vasil'ev code with m={m} has {size} codewords, cap is {config.enumeration_cap}",
            required=size,
            cap=config.enumeration_cap,
        )
    ham = hamming_code(m, GF(2)).codewords_packed(config)
    words = []
    top1 = nh - 1
    top2 = nh - 2
    for u in range(2**nh):
        pu = u.bit_count() & 1
        for v in ham:
            lam = ((v >> top1) & (v >> top2)) & 1
            words.append((u << (nh + 1)) | ((u ^ v) << 1) | (pu ^ lam))
    return BlockCode(GF(2), 2 * nh + 1, words)


def nonlinearity_witness(code: BlockCode):
    """Two codewords whose sum leaves the code, or None if sum-closed.

    For binary codes containing zero, a None result certifies linearity.
    Pairs are scanned in ascending packed order, so the witness is stable.
    """
    packed = code.packed()
    members = set(packed)
    f = code.field
    p, ndig = f.p, code.n * f.r
    for i, a in enumerate(packed):
        for b in packed[i + 1 :]:
            if cf_add(a, b, p, ndig) not in members:
                return (
                    Word.unpack(f, code.n, a),
                    Word.unpack(f, code.n, b),
                )
    return None
