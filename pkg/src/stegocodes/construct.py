"""Constructions of stego-coding matrices and length-bound calculators.

The direct-sum construction splits the message space into t coordinate
blocks, covers each block's subspace with one representative per
1-dimensional subspace, and lays the representatives side by side: any target
syndrome then decomposes blockwise into at most t column multiples.  With a
single block (t = 1) over GF(2) this reproduces the matrix family used by the
F5 embedder, whose column i is the binary representation of i.

Alongside the constructions live the two closed-form length bounds (the
sphere-covering lower bound and the direct-sum upper bound), a brute-force
oracle for the minimum achievable length at toy sizes, and the binary
entropy feasibility test for (n, k, t) over GF(2).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .config import DEFAULT_CONFIG, RunConfig
from .errors import BudgetExceededError
from .field import GF, Word, pack_digits
from .stegocode import StegoMatrix, sphere_size


@dataclass(frozen=True)
class DirectSumPlan:
    """Parameters of a direct-sum construction: q, k, and the block sizes.

    parts lists the t block dimensions k_1..k_t; they must be positive and
    sum to k.
    """

    q: int
    k: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("plan needs at least one block")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"block sizes must be >= 1, got {self.parts}")
        if sum(self.parts) != self.k:
            raise ValueError(f"block sizes {self.parts} do not sum to k={self.k}")

    @property
    def t(self) -> int:
        return len(self.parts)

    @classmethod
    def balanced(cls, q: int, k: int, t: int) -> "DirectSumPlan":
        """Default split into t blocks of size floor(k/t) or ceil(k/t)."""
        if not 1 <= t <= k:
            raise ValueError(f"need 1 <= t <= k, got t={t}, k={k}")
        base, extra = divmod(k, t)
        parts = tuple([base + 1] * extra + [base] * (t - extra))
        return cls(q, k, parts)


def projective_representatives(k: int, f: GF) -> list[Word]:
    """One representative per 1-dimensional subspace of GF(q)^k.

    The canonical choice is the vector whose leading nonzero element is 1;
    representatives are returned in ascending packed order.  Every nonzero
    vector is a scalar multiple of exactly one representative, and any two
    representatives are linearly independent.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    q = f.q
    reps = []
    for value in range(1, q**k):
        digits = []
        v = value
        for _ in range(k):
            v, d = divmod(v, q)
            digits.append(d)
        digits.reverse()
        leading = next(d for d in digits if d)
        if leading == 1:
            reps.append(Word(f, digits))
    return reps


def direct_sum_construct(plan: DirectSumPlan, f: GF | None = None) -> StegoMatrix:
    """Build the k x sum_i (q^{k_i}-1)/(q-1) stego-coding matrix of the plan.

    Block i occupies a contiguous band of rows; its columns are the block's
    projective representatives embedded in those rows, in canonical order.
    """
    f = f or GF(plan.q)
    k = plan.k
    cols: list[list[int]] = []
    offset = 0
    for ki in plan.parts:
        for rep in projective_representatives(ki, f):
            col = [0] * k
            col[offset : offset + ki] = list(rep.elems)
            cols.append(col)
        offset += ki
    rows = [Word(f, [col[i] for col in cols]) for i in range(k)]
    return StegoMatrix(rows, plan.t)


def f5_matrix(k: int) -> StegoMatrix:
    """The binary k x (2^k - 1) matrix whose column i spells i in binary."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    f = GF(2)
    rows = [
        Word(f, [(i >> (k - 1 - r)) & 1 for i in range(1, 2**k)])
        for r in range(k)
    ]
    return StegoMatrix(rows, 1)


def bound_min_length_eq2(q: int, k: int, t: int) -> int:
    """Smallest n whose radius-t sphere count reaches q^k.

    Any (n, k, t) stego-coding matrix over GF(q) must have at least this many
    columns: the weight-<=t words number sphere_size(n, t, q) and their
    syndromes must exhaust GF(q)^k.
    """
    if not 1 <= t <= k:
        raise ValueError(f"need 1 <= t <= k, got t={t}, k={k}")
    target = q**k
    n = t
    while sphere_size(n, t, q) < target:
        n += 1
    return n


def bound_direct_sum_eq5(q: int, k: int, t: int) -> int:
    """Upper bound on the minimum length, from the direct-sum construction.

    Exact integer value of
    ((q^floor(k/t) - 1)(t - 1) + q^(k - floor(k/t)(t-1)) - 1) / (q - 1).
    """
    if not 1 <= t <= k:
        raise ValueError(f"need 1 <= t <= k, got t={t}, k={k}")
    fl = k // t
    num = (q**fl - 1) * (t - 1) + q ** (k - fl * (t - 1)) - 1
    assert num % (q - 1) == 0
    return num // (q - 1)


def _covers_all(cols_packed: list[int], k: int, t: int, f: GF) -> bool:
    """Do the weight-<=t combinations of these columns hit every syndrome?"""
    q = f.q
    target = q**k
    hit = bytearray(target)
    hit[0] = 1
    count = 1
    n = len(cols_packed)
    p, ndig = f.p, k * f.r
    from ._kernels import cf_add

    scaled = [
        [0] + [pack_digits([f.mul(v, d) for d in _unpack(c, q, k)], q) for v in range(1, q)]
        for c in cols_packed
    ]
    for w in range(1, min(t, n) + 1):
        for sup in combinations(range(n), w):
            for coeffs in product(range(1, q), repeat=w):
                s = 0
                for pos, c in zip(sup, coeffs):
                    s = cf_add(s, scaled[pos][c], p, ndig)
                if not hit[s]:
                    hit[s] = 1
                    count += 1
                    if count == target:
                        return True
    return count == target


def _unpack(value: int, q: int, k: int) -> list[int]:
    digits = [0] * k
    for i in range(k - 1, -1, -1):
        value, digits[i] = divmod(value, q)
    return digits


def tth_dimension_bruteforce(
    q: int,
    k: int,
    t: int,
    max_n: int,
    config: RunConfig = DEFAULT_CONFIG,
):
    """Smallest n <= max_n admitting a k x n stego-coding matrix of budget t.

    Searches column subsets drawn from the projective representatives: a
    scalar multiple of a column generates exactly the same combinations, so
    the pruning loses nothing, and duplicate columns never help over a field.
    Candidates are checked from n = 1 upward without any counting shortcut,
    keeping this an oracle independent of the closed-form bounds.  Returns
    None when nothing passes within max_n.
    """
    f = GF(q)
    reps = [w.pack() for w in projective_representatives(k, f)]
    budget = 0
    for n in range(1, max_n + 1):
        if n > len(reps):
            break
        candidates = comb(len(reps), n)
        budget += candidates * sphere_size(n, min(t, n), q)
        if budget > config.enumeration_cap:
            raise BudgetExceededError(
                f"brute-force search through n={n} needs ~{budget} units, "
                f"cap is {config.enumeration_cap}",
                required=budget,
                cap=config.enumeration_cap,
            )
        for cols in combinations(reps, n):
            if _covers_all(list(cols), k, t, f):
                return n
    return None


def bound_entropy_check(n: int, k: int, t: int, tol: float = 1e-12) -> bool:
    """Binary-code feasibility test: is k/n <= H(t/n)?

    Valid for t/n <= 1/2 (raises ValueError above); every verified binary
    (n, k, t) stego-code in that range satisfies it.
    """
    from .metrics import binary_entropy

    if n < 1 or k < 1 or t < 0:
        raise ValueError(f"bad parameters n={n}, k={k}, t={t}")
    ratio = t / n
    if ratio > 0.5:
        raise ValueError(f"t/n = {t}/{n} exceeds 1/2; the bound does not apply")
    return k / n <= binary_entropy(ratio) + tol
