"""Core stego-code machinery.

A k x n matrix H over GF(q) is an (n, k, t) stego-coding matrix when every
syndrome y in GF(q)^k can be written as H z^T for some word z of weight at
most t.  Such a matrix hides a k-symbol message in an n-symbol cover word by
adding the stored minimal-weight solution of H z^T = y - H x^T; the receiver
recovers the message as H x'^T.

The same idea in partition form: an (n, M, t) stego-code is a partition of
GF(q)^n into M classes such that every word lies within Hamming distance t of
every class.  Both views are implemented here, together with the verification
predicates, the encoding-table construction, and the embed/extract pair.

Verification predicates return :class:`VerificationReport` values instead of
raising, so callers (and the CLI) can render witnesses and partial evidence.
Canonical orderings used throughout:

- messages and syndromes are ordered by packed (mixed-radix, leftmost most
  significant) value;
- coset leaders are ordered by weight, then packed value;
- ties among minimal-weight table entries break toward the lexicographically
  smallest word.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Optional, Sequence

from . import linalg
from ._kernels import (
    ball_cover,
    cf_add,
    cf_sub,
    coset_leader_search,
    syndromes_of_words,
    universe_syndromes,
)
from .config import DEFAULT_CONFIG, RunConfig
from .errors import (
    BudgetExceededError,
    DimensionMismatchError,
    MalformedPartitionError,
    NotStegoMatrixError,
)
from .field import GF, Word, mat_vec, pack_digits, unpack_digits


def sphere_size(n: int, t: int, q: int) -> int:
    """Number of words in a Hamming ball of radius t in GF(q)^n.

    Exact integer value of sum_{i=0..t} (q-1)^i C(n, i).
    """
    if q < 2:
        raise ValueError(f"field size must be >= 2, got {q}")
    if not 0 <= t <= n:
        raise ValueError(f"radius must satisfy 0 <= t <= n, got t={t}, n={n}")
    return sum((q - 1) ** i * math.comb(n, i) for i in range(t + 1))


def low_weight_words(f: GF, n: int, t: int) -> list[int]:
    """All packed words of weight <= t, ordered by weight then packed value."""
    from itertools import combinations, product

    q = f.q
    out = [0]
    for w in range(1, min(t, n) + 1):
        layer = []
        for sup in combinations(range(n), w):
            for coeffs in product(range(1, q), repeat=w):
                x = 0
                ci = 0
                for pos in range(n):
                    x *= q
                    if ci < w and sup[ci] == pos:
                        x += coeffs[ci]
                        ci += 1
                layer.append(x)
        layer.sort()
        out.extend(layer)
    return out


@dataclass
class VerificationReport:
    """Outcome of a verification predicate.

    witness is None on a pass; for matrices it is the unreachable syndrome,
    for partitions the pair (word, part_index) violating the distance bound.
    probabilistic marks a sampled (non-exhaustive) verdict; rng_seed is set
    whenever sampling was used, so the run can be reproduced.
    """

    kind: str
    passed: bool
    witness: object = None
    probabilistic: bool = False
    samples: int = 0
    rng_seed: Optional[int] = None
    work: int = 0
    note: str = ""

    def to_dict(self) -> dict:
        w = self.witness
        if isinstance(w, Word):
            w = w.to_text()
        elif isinstance(w, tuple):
            w = [x.to_text() if isinstance(x, Word) else x for x in w]
        return {
            "kind": self.kind,
            "passed": self.passed,
            "witness": w,
            "probabilistic": self.probabilistic,
            "samples": self.samples,
            "rng_seed": self.rng_seed,
            "work": self.work,
            "note": self.note,
        }


def _require_byte_field(f: GF):
    """The enumeration kernels store one element per byte."""
    if f.q > 255:
        raise BudgetExceededError(
            f"byte-level kernels need q <= 255, got q={f.q}", required=f.q, cap=255
        )


def _batch_syndromes(contrib, words, n: int, q: int, p: int, sdigits: int):
    """syndromes_of_words, routed to the pure kernel when packed words can
    exceed the compiled backend's 64-bit range."""
    if q**n > 1 << 63:
        from ._kernels import pure

        return pure.syndromes_of_words(contrib, words, n, q, p, sdigits)
    return syndromes_of_words(contrib, words, n, q, p, sdigits)


def contrib_from_rows(rows: Sequence[Word]) -> list[list[int]]:
    """Per-column scalar syndrome contributions.

    contrib[j][v] is the packed syndrome of v times column j; every syndrome
    computation in the kernels folds these together with carry-free addition.
    """
    f = rows[0].field
    q = f.q
    k = len(rows)
    n = len(rows[0])
    out = []
    for j in range(n):
        col = [rows[i].elems[j] for i in range(k)]
        per = [0] * q
        for v in range(1, q):
            per[v] = pack_digits([f.mul(v, c) for c in col], q)
        out.append(per)
    return out


class StegoMatrix:
    """A k x n matrix over GF(q) with a claimed change budget t.

    Construction checks shape, field consistency, and full row rank (a matrix
    of deficient rank cannot reach every syndrome).  The ``verified`` flag is
    initially False and is set, write-once, by a passing
    :func:`is_stego_matrix` run.
    """

    __slots__ = ("field", "k", "n", "t", "rows", "_verified", "_contrib", "_search")

    def __init__(self, rows: Sequence[Word], t: int):
        rows = tuple(rows)
        if not rows:
            raise ValueError("matrix needs at least one row")
        f = rows[0].field
        n = len(rows[0])
        for r in rows:
            if r.field.q != f.q or len(r) != n:
                raise DimensionMismatchError("matrix rows must share one field and length")
        if t < 1:
            raise ValueError(f"change budget must be >= 1, got {t}")
        k = len(rows)
        if linalg.rank(linalg.word_rows(rows), f) != k:
            raise ValueError(f"matrix rank is below {k}; syndromes are unreachable")
        self.field = f
        self.k = k
        self.n = n
        self.t = t
        self.rows = rows
        self._verified = False
        self._contrib = None
        self._search = None

    @classmethod
    def from_lists(cls, f: GF, rows: Iterable[Iterable[int]], t: int) -> "StegoMatrix":
        return cls([Word(f, r) for r in rows], t)

    @property
    def verified(self) -> bool:
        return self._verified

    @property
    def sdigits(self) -> int:
        return self.k * self.field.r

    def contrib(self) -> list[list[int]]:
        if self._contrib is None:
            self._contrib = contrib_from_rows(self.rows)
        return self._contrib

    def column(self, j: int) -> Word:
        return Word(self.field, (self.rows[i].elems[j] for i in range(self.k)))

    def columns(self) -> list[Word]:
        return [self.column(j) for j in range(self.n)]

    def apply(self, x: Word) -> Word:
        """H x^T as a length-k word."""
        return mat_vec(self.rows, x)

    def __eq__(self, other):
        return (
            isinstance(other, StegoMatrix)
            and other.field.q == self.field.q
            and other.t == self.t
            and other.rows == self.rows
        )

    def __hash__(self):
        return hash((self.field.q, self.t, self.rows))

    def __repr__(self):
        return f"StegoMatrix(GF({self.field.q}), k={self.k}, n={self.n}, t={self.t})"

    def _leader_search(self, config: RunConfig):
        """Run (or reuse) the weight-bounded syndrome search."""
        if self._search is None:
            _require_byte_field(self.field)
            q = self.field.q
            num_syn = q**self.k
            work = sphere_size(self.n, min(self.t, self.n), q) * self.n
            cap = config.enumeration_cap
            if max(work, num_syn) > cap:
                raise BudgetExceededError(
                    f"stego-matrix check needs ~{max(work, num_syn)} units, cap is {cap}",
                    required=max(work, num_syn),
                    cap=cap,
                )
            self._search = coset_leader_search(
                self.contrib(), self.n, q, self.field.p, self.sdigits, self.t, num_syn
            )
        return self._search


def is_stego_matrix(H: StegoMatrix, config: RunConfig = DEFAULT_CONFIG) -> VerificationReport:
    """Decide whether H reaches every syndrome with weight <= t.

    Enumerates all words of weight <= t and marks their syndromes; H passes
    exactly when all q^k syndromes get marked.  On failure the witness is the
    smallest unreached syndrome (by packed value).
    """
    leaders, weights, covered, work = H._leader_search(config)
    num_syn = H.field.q**H.k
    if covered == num_syn:
        H._verified = True
        return VerificationReport(kind="matrix", passed=True, work=work)
    missing = weights.index(255)
    witness = Word.unpack(H.field, H.k, missing)
    return VerificationReport(kind="matrix", passed=False, witness=witness, work=work)


class CodingTable:
    """Map from each syndrome y to a stored minimal-weight solution z.

    The table is complete (q^k entries); entry weights never exceed t and the
    zero syndrome maps to the zero word.  Entries are materialized lazily
    from the leader search byte rows.
    """

    __slots__ = ("matrix", "_leaders", "_weights")

    def __init__(self, matrix: StegoMatrix, leaders: bytearray, weights: bytearray):
        self.matrix = matrix
        self._leaders = leaders
        self._weights = weights

    @classmethod
    def from_entries(cls, matrix: StegoMatrix, pairs) -> "CodingTable":
        """Rebuild a table from (syndrome, solution) pairs, e.g. a parsed file.

        The pairs are untrusted: completeness, the weight bound, and every
        syndrome equation are re-checked here.
        """
        q, k, n, t = matrix.field.q, matrix.k, matrix.n, matrix.t
        num = q**k
        leaders = bytearray(num * n)
        weights = bytearray(b"\xff") * num
        for y, z in pairs:
            if len(y) != k or len(z) != n or y.field.q != q or z.field.q != q:
                raise ValueError("table entry shape does not match the matrix")
            w = sum(1 for e in z.elems if e)
            if w > t:
                raise ValueError(f"table entry for {y.to_text()} has weight {w} > t={t}")
            if matrix.apply(z) != y:
                raise ValueError(f"table entry for {y.to_text()} fails its syndrome equation")
            s = y.pack()
            if weights[s] != 255:
                raise ValueError(f"duplicate table entry for {y.to_text()}")
            weights[s] = w
            leaders[s * n : (s + 1) * n] = bytes(z.elems)
        if 255 in weights:
            missing = Word.unpack(matrix.field, k, weights.index(255))
            raise ValueError(f"table is incomplete: no entry for {missing.to_text()}")
        return cls(matrix, leaders, weights)

    def __len__(self):
        return self.matrix.field.q**self.matrix.k

    def entry(self, y: Word) -> Word:
        if len(y) != self.matrix.k or y.field.q != self.matrix.field.q:
            raise DimensionMismatchError(
                f"syndrome must be length {self.matrix.k} over GF({self.matrix.field.q})"
            )
        return self.entry_packed(y.pack())

    def entry_packed(self, s: int) -> Word:
        n = self.matrix.n
        row = self._leaders[s * n : (s + 1) * n]
        return Word(self.matrix.field, row)

    def entry_weight(self, s: int) -> int:
        return self._weights[s]

    def entries(self):
        """(syndrome, solution) pairs in ascending packed syndrome order."""
        f = self.matrix.field
        for s in range(len(self)):
            yield Word.unpack(f, self.matrix.k, s), self.entry_packed(s)

    def total_weight(self) -> int:
        """Sum of entry weights; exact, feeds the change-density average."""
        return sum(self._weights)

    def entries_packed(self) -> list[int]:
        """Packed solution word per packed syndrome, index-aligned."""
        q, n = self.matrix.field.q, self.matrix.n
        return [
            pack_digits(self._leaders[s * n : (s + 1) * n], q) for s in range(len(self))
        ]

    def weight_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for w in self._weights:
            hist[w] = hist.get(w, 0) + 1
        return hist


def build_coding_table(H: StegoMatrix, config: RunConfig = DEFAULT_CONFIG) -> CodingTable:
    """Construct the complete syndrome -> minimal-weight-solution table."""
    report = is_stego_matrix(H, config)
    if not report.passed:
        raise NotStegoMatrixError(
            f"matrix is not an ({H.n},{H.k},{H.t}) stego-coding matrix; "
            f"unreachable syndrome {report.witness.to_text()}",
            report=report,
        )
    leaders, weights, _, _ = H._search
    return CodingTable(H, leaders, weights)


def embed(H: StegoMatrix, table: CodingTable, x: Word, y: Word) -> Word:
    """Embed message y into cover word x; changes at most t positions.

    Returns x' = x + z where z is the stored solution of H z^T = y - H x^T,
    so that extract(H, x') = y.
    """
    if table.matrix is not H and table.matrix != H:
        raise ValueError("coding table was built for a different matrix")
    if len(x) != H.n or x.field.q != H.field.q:
        raise DimensionMismatchError(f"cover word must be length {H.n} over GF({H.field.q})")
    if len(y) != H.k or y.field.q != H.field.q:
        raise DimensionMismatchError(f"message must be length {H.k} over GF({H.field.q})")
    s = H.apply(x)
    z = table.entry(y - s)
    return x + z


def extract(H: StegoMatrix, x: Word) -> Word:
    """Recover the embedded message: H x^T."""
    if len(x) != H.n or x.field.q != H.field.q:
        raise DimensionMismatchError(f"stego word must be length {H.n} over GF({H.field.q})")
    return H.apply(x)


class BlockCode:
    """A set of M distinct codewords of length n over GF(q)."""

    __slots__ = ("field", "n", "_packed", "_rows_bytes")

    def __init__(self, f: GF, n: int, packed: Iterable[int]):
        packed = sorted(packed)
        if not packed:
            raise ValueError("a block code needs at least one codeword")
        qn = f.q**n
        for i, x in enumerate(packed):
            if not 0 <= x < qn:
                raise ValueError(f"packed codeword {x} out of range for GF({f.q})^{n}")
            if i and packed[i - 1] == x:
                raise ValueError("codewords must be distinct")
        self.field = f
        self.n = n
        self._packed = tuple(packed)
        self._rows_bytes = None

    @classmethod
    def from_words(cls, words: Iterable[Word]) -> "BlockCode":
        words = list(words)
        if not words:
            raise ValueError("a block code needs at least one codeword")
        f = words[0].field
        n = len(words[0])
        for w in words:
            if w.field.q != f.q or len(w) != n:
                raise DimensionMismatchError("codewords must share one field and length")
        return cls(f, n, [w.pack() for w in words])

    @property
    def M(self) -> int:
        return len(self._packed)

    def packed(self) -> tuple[int, ...]:
        return self._packed

    def codewords(self) -> list[Word]:
        return [Word.unpack(self.field, self.n, x) for x in self._packed]

    def contains(self, x) -> bool:
        if isinstance(x, Word):
            x = x.pack()
        # sorted tuple: binary search
        import bisect

        i = bisect.bisect_left(self._packed, x)
        return i < len(self._packed) and self._packed[i] == x

    def rows_bytes(self) -> bytes:
        if self._rows_bytes is None:
            q, n = self.field.q, self.n
            if q > 255:
                raise BudgetExceededError("byte-kernel codeword layout needs q <= 255")
            self._rows_bytes = b"".join(
                bytes(unpack_digits(x, q, n)) for x in self._packed
            )
        return self._rows_bytes

    def __eq__(self, other):
        return (
            isinstance(other, BlockCode)
            and other.field.q == self.field.q
            and other.n == self.n
            and other._packed == self._packed
        )

    def __hash__(self):
        return hash((self.field.q, self.n, self._packed))

    def __repr__(self):
        return f"BlockCode(GF({self.field.q}), n={self.n}, M={self.M})"


class PartitionCode:
    """An ordered M-partition of GF(q)^n with a claimed covering radius t.

    Two storage strategies share this type.  Explicit partitions hold every
    class as a set of packed words.  Translate partitions hold a linear base
    code C and a list of leaders, class i being leader_i + C; they are never
    materialized in full, which keeps length-23 conversions tractable.

    Construction does not check the partition conditions; see
    :func:`is_stego_partition`, which reports malformed inputs with offenders.
    """

    __slots__ = ("field", "n", "t", "_parts", "_base", "_leaders", "_index", "_verified_report")

    def __init__(self, f: GF, n: int, t: int, parts=None, base=None, leaders=None):
        if t < 0 or t > n:
            raise ValueError(f"covering radius must satisfy 0 <= t <= n, got {t}")
        self.field = f
        self.n = n
        self.t = t
        self._parts = parts
        self._base = base
        self._leaders = leaders
        self._index = None
        self._verified_report = None

    @classmethod
    def from_parts(cls, f: GF, n: int, t: int, parts) -> "PartitionCode":
        packed_parts = []
        qn = f.q**n
        for part in parts:
            cur = set()
            for x in part:
                if isinstance(x, Word):
                    if x.field.q != f.q or len(x) != n:
                        raise DimensionMismatchError("partition words must match field and length")
                    x = x.pack()
                if not 0 <= x < qn:
                    raise ValueError(f"packed word {x} out of range for GF({f.q})^{n}")
                cur.add(x)
            packed_parts.append(frozenset(cur))
        return cls(f, n, t, parts=tuple(packed_parts))

    @classmethod
    def from_translates(cls, base, leaders: Sequence[Word], t: int) -> "PartitionCode":
        """Partition with class i = leaders[i] + base; base must be linear."""
        return cls(base.field, base.n, t, base=base, leaders=tuple(w.pack() for w in leaders))

    @property
    def is_explicit(self) -> bool:
        return self._parts is not None

    @property
    def M(self) -> int:
        return len(self._parts) if self.is_explicit else len(self._leaders)

    def part_packed(self, i: int) -> frozenset[int]:
        if self.is_explicit:
            return self._parts[i]
        base = self._base
        lead = self._leaders[i]
        p, nd = self.field.p, self.n * self.field.r
        return frozenset(cf_add(lead, c, p, nd) for c in base.codewords_packed())

    def part_words(self, i: int) -> frozenset[Word]:
        return frozenset(Word.unpack(self.field, self.n, x) for x in self.part_packed(i))

    def parts_packed(self) -> tuple[frozenset[int], ...]:
        if self.is_explicit:
            return self._parts
        return tuple(self.part_packed(i) for i in range(self.M))

    def leaders_packed(self):
        return self._leaders

    def part_index_of(self, x) -> int:
        """Index of the class containing x."""
        if isinstance(x, Word):
            x = x.pack()
        if self.is_explicit:
            if self._index is None:
                self._index = {w: i for i, part in enumerate(self._parts) for w in part}
            return self._index[x]
        if self._index is None:
            syn = self._translate_leader_syndromes()
            self._index = {s: i for i, s in enumerate(syn)}
        s = _batch_syndromes(
            self._base_contrib(), [x], self.n, self.field.q, self.field.p, self._base_sdigits()
        )[0]
        return self._index[s]

    # -- translate-partition internals --

    def _base_contrib(self):
        return self._base.check_contrib()

    def _base_sdigits(self):
        return len(self._base.check_rows) * self.field.r

    def _translate_leader_syndromes(self) -> list[int]:
        return _batch_syndromes(
            self._base_contrib(),
            list(self._leaders),
            self.n,
            self.field.q,
            self.field.p,
            self._base_sdigits(),
        )

    def __repr__(self):
        kind = "explicit" if self.is_explicit else "translate"
        return (
            f"PartitionCode(GF({self.field.q}), n={self.n}, M={self.M}, t={self.t}, {kind})"
        )


def partition_from_matrix(H: StegoMatrix, config: RunConfig = DEFAULT_CONFIG) -> PartitionCode:
    """Partition of GF(q)^n into the q^k syndrome classes of H.

    Class i collects the words whose syndrome has packed value i, so the
    class index doubles as the message value.
    """
    report = is_stego_matrix(H, config)
    if not report.passed:
        raise NotStegoMatrixError(
            f"matrix fails verification; unreachable syndrome {report.witness.to_text()}",
            report=report,
        )
    q, n, k = H.field.q, H.n, H.k
    qn = q**n
    if qn > config.enumeration_cap:
        raise BudgetExceededError(
            f"materializing GF({q})^{n} needs {qn} words, cap is {config.enumeration_cap}",
            required=qn,
            cap=config.enumeration_cap,
        )
    syn = universe_syndromes(H.contrib(), n, q, H.field.p, H.sdigits)
    parts = [set() for _ in range(q**k)]
    for x in range(qn):
        parts[syn[x]].add(x)
    return PartitionCode(H.field, n, H.t, parts=tuple(frozenset(p) for p in parts))


def _structure_check(S: PartitionCode, config: RunConfig):
    """Validate the partition conditions; raise MalformedPartitionError."""
    f, n = S.field, S.n
    qn = f.q**n
    if S.is_explicit:
        seen: dict[int, int] = {}
        total = 0
        for i, part in enumerate(S._parts):
            if not part:
                raise MalformedPartitionError(f"class {i} is empty", offenders=("empty", i))
            for x in part:
                j = seen.get(x)
                if j is not None:
                    w = Word.unpack(f, n, x)
                    raise MalformedPartitionError(
                        f"word {w.to_text()} appears in classes {j} and {i}",
                        offenders=("overlap", w, j, i),
                    )
                seen[x] = i
            total += len(part)
        if total != qn:
            missing = next(x for x in range(qn) if x not in seen)
            w = Word.unpack(f, n, missing)
            raise MalformedPartitionError(
                f"word {w.to_text()} is not covered by any class",
                offenders=("gap", w),
            )
        return
    # translate partition: distinct leader syndromes + counting argument
    base = S._base
    syn = S._translate_leader_syndromes()
    first: dict[int, int] = {}
    for i, s in enumerate(syn):
        if s in first:
            w = Word.unpack(f, n, S._leaders[i])
            raise MalformedPartitionError(
                f"word {w.to_text()} appears in classes {first[s]} and {i}",
                offenders=("overlap", w, first[s], i),
            )
        first[s] = i
    num_syn = f.q ** len(base.check_rows)
    if S.M != num_syn:
        missing = next(s for s in range(num_syn) if s not in first)
        x = linalg.solve(linalg.word_rows(base.check_rows), unpack_digits(missing, f.q, len(base.check_rows)), f)
        w = Word(f, x)
        raise MalformedPartitionError(
            f"word {w.to_text()} is not covered by any class",
            offenders=("gap", w),
        )


def _translate_violations(S: PartitionCode, config: RunConfig):
    """Exact per-syndrome distance analysis for translate partitions.

    Returns (violating, part_syns, leader_weights, work) where violating maps
    each bad x-syndrome to the smallest offending class index.  dist(x, I_i)
    depends on x only through its base-code syndrome, so this is a complete
    check of the distance condition.
    """
    base = S._base
    f, n, t = S.field, S.n, S.t
    _require_byte_field(f)
    q, p = f.q, f.p
    m = len(base.check_rows)
    sdig = m * f.r
    num_syn = q**m
    work_est = sphere_size(n, min(t, n), q) * n
    if max(work_est, num_syn) > config.enumeration_cap:
        raise BudgetExceededError(
            f"coset-weight table needs ~{max(work_est, num_syn)} units, "
            f"cap is {config.enumeration_cap}",
            required=max(work_est, num_syn),
            cap=config.enumeration_cap,
        )
    _, weights, _, work = coset_leader_search(
        base.check_contrib(), n, q, p, sdig, t, num_syn
    )
    overweight = [u for u in range(num_syn) if weights[u] == 255]
    part_syns = S._translate_leader_syndromes()
    violating: dict[int, int] = {}
    for u in overweight:
        for i, ps in enumerate(part_syns):
            s = cf_add(u, ps, p, sdig)
            if s not in violating or violating[s] > i:
                violating[s] = i
    work += len(overweight) * len(part_syns)
    return violating, part_syns, weights, work


def _witness_word_for_syndrome(S: PartitionCode, s: int) -> Word:
    base = S._base
    f = S.field
    m = len(base.check_rows)
    x = linalg.solve(linalg.word_rows(base.check_rows), unpack_digits(s, f.q, m), f)
    return Word(f, x)


def is_stego_partition(
    S: PartitionCode,
    config: RunConfig = DEFAULT_CONFIG,
    mode: str = "auto",
) -> VerificationReport:
    """Check that every word of GF(q)^n is within distance t of every class.

    The partition conditions are validated first and raise
    MalformedPartitionError with the offending words.  Explicit partitions
    are checked exhaustively when q^n is within the cap, otherwise by seeded
    sampling (report flagged probabilistic).  Translate partitions default to
    sampling, matching their streaming construction; mode="exhaustive" forces
    the exact syndrome-space sweep instead.
    """
    if mode not in ("auto", "exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    _structure_check(S, config)
    f, n, t = S.field, S.n, S.t
    q = f.q
    qn = q**n

    if S.is_explicit:
        sph = sphere_size(n, min(t, n), q)
        work_cap = max(config.enumeration_cap, 1 << 26)
        exhaustive_ok = q <= 255 and qn <= config.enumeration_cap and qn * sph <= work_cap
        if mode == "exhaustive" and not exhaustive_ok:
            raise BudgetExceededError(
                f"exhaustive partition check needs ~{qn * sph} marks, cap is {work_cap}",
                required=qn * sph,
                cap=work_cap,
            )
        run_exhaustive = exhaustive_ok if mode == "auto" else (mode == "exhaustive")
        if run_exhaustive:
            best_x, best_i = None, None
            work = 0
            for i, part in enumerate(S._parts):
                marked = ball_cover(sorted(part), n, q, t, qn)
                work += len(part) * sph
                miss = marked.find(0)
                if miss != -1 and (best_x is None or miss < best_x):
                    best_x, best_i = miss, i
            if best_x is None:
                rep = VerificationReport(kind="partition", passed=True, work=work)
                S._verified_report = rep
                return rep
            # smallest failing word, then smallest failing class at that word
            for i, part in enumerate(S._parts):
                if i == best_i:
                    break
                marked = ball_cover(sorted(part), n, q, t, qn)
                if not marked[best_x]:
                    best_i = i
                    break
            witness = (Word.unpack(f, n, best_x), best_i)
            return VerificationReport(kind="partition", passed=False, witness=witness, work=work)
        # sampled, scanning class members per sampled word
        rng = random.Random(config.rng_seed)
        parts_digits = [
            [unpack_digits(x, q, n) for x in sorted(part)] for part in S._parts
        ]
        work = 0
        for _ in range(config.sample_count):
            xd = unpack_digits(rng.randrange(qn), q, n)
            for i, members in enumerate(parts_digits):
                ok = False
                for md in members:
                    work += 1
                    if sum(1 for a, b in zip(xd, md) if a != b) <= t:
                        ok = True
                        break
                if not ok:
                    witness = (Word(f, xd), i)
                    return VerificationReport(
                        kind="partition",
                        passed=False,
                        witness=witness,
                        probabilistic=True,
                        samples=config.sample_count,
                        rng_seed=config.rng_seed,
                        work=work,
                    )
        rep = VerificationReport(
            kind="partition",
            passed=True,
            probabilistic=True,
            samples=config.sample_count,
            rng_seed=config.rng_seed,
            work=work,
        )
        S._verified_report = rep
        return rep

    # translate partition
    violating, part_syns, weights, work = _translate_violations(S, config)
    if mode == "exhaustive":
        if not violating:
            rep = VerificationReport(
                kind="partition", passed=True, work=work, note="syndrome-space sweep"
            )
            S._verified_report = rep
            return rep
        s = min(violating)
        witness = (_witness_word_for_syndrome(S, s), violating[s])
        return VerificationReport(
            kind="partition",
            passed=False,
            witness=witness,
            work=work,
            note="syndrome-space sweep; witness is a coset representative",
        )
    # sampled (default for translate partitions)
    rng = random.Random(config.rng_seed)
    count = config.sample_count
    samples = [rng.randrange(qn) for _ in range(count)]
    contrib = S._base_contrib()
    sdigits = S._base_sdigits()
    syns = _batch_syndromes(contrib, samples, n, q, f.p, sdigits)
    work += count
    for x, s in zip(samples, syns):
        if s in violating:
            witness = (Word.unpack(f, n, x), violating[s])
            return VerificationReport(
                kind="partition",
                passed=False,
                witness=witness,
                probabilistic=True,
                samples=count,
                rng_seed=config.rng_seed,
                work=work,
            )
    rep = VerificationReport(
        kind="partition",
        passed=True,
        probabilistic=True,
        samples=count,
        rng_seed=config.rng_seed,
        work=work,
    )
    S._verified_report = rep
    return rep


def roundtrip_check(
    H: StegoMatrix,
    table: CodingTable,
    config: RunConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Bulk extract-after-embed identity check over (cover, message) pairs.

    Exhaustive over all q^(n+k) pairs when that count is within the cap
    (and at most 2^20); seeded random pairs otherwise.  For every pair the
    embedded word's syndrome is recomputed from scratch and the change count
    is measured positionwise, so the check does not lean on the linearity it
    is probing.  The witness on failure is the offending (cover, message).
    """
    f = H.field
    q, n, k = f.q, H.n, H.k
    p = f.p
    wdigits = n * f.r
    sdigits = H.sdigits
    qn, qk = q**n, q**k
    contrib = H.contrib()
    zp = table.entries_packed()
    zw = [table.entry_weight(s) for s in range(qk)]

    def check_pairs(pairs, sx_of):
        stegos = [cf_add(x, zp[cf_sub(y, sx_of[x], p, sdigits)], p, wdigits) for x, y in pairs]
        got = syndromes_of_words(contrib, stegos, n, q, p, sdigits)
        work = 0
        for (x, y), xp, s in zip(pairs, stegos, got):
            work += 1
            if s != y:
                return (x, y), work
            if q == 2:
                d = (x ^ xp).bit_count()
            else:
                d = sum(
                    1 for a, b in zip(unpack_digits(x, q, n), unpack_digits(xp, q, n)) if a != b
                )
            if d > H.t or d != zw[cf_sub(y, sx_of[x], p, sdigits)]:
                return (x, y), work
        return None, work

    total = qn * qk
    if total <= min(config.enumeration_cap, 1 << 20):
        syn = universe_syndromes(contrib, n, q, p, sdigits)
        pairs = [(x, y) for x in range(qn) for y in range(qk)]
        bad, work = check_pairs(pairs, syn)
        if bad is None:
            return VerificationReport(kind="roundtrip", passed=True, work=work)
        witness = (Word.unpack(f, n, bad[0]), Word.unpack(f, k, bad[1]))
        return VerificationReport(kind="roundtrip", passed=False, witness=witness, work=work)
    rng = random.Random(config.rng_seed)
    pairs = [(rng.randrange(qn), rng.randrange(qk)) for _ in range(config.sample_count)]
    xs = sorted({x for x, _ in pairs})
    sx_of = dict(zip(xs, syndromes_of_words(contrib, xs, n, q, p, sdigits)))
    bad, work = check_pairs(pairs, sx_of)
    if bad is None:
        return VerificationReport(
            kind="roundtrip",
            passed=True,
            probabilistic=True,
            samples=config.sample_count,
            rng_seed=config.rng_seed,
            work=work,
        )
    witness = (Word.unpack(f, n, bad[0]), Word.unpack(f, k, bad[1]))
    return VerificationReport(
        kind="roundtrip",
        passed=False,
        witness=witness,
        probabilistic=True,
        samples=config.sample_count,
        rng_seed=config.rng_seed,
        work=work,
    )


def is_mle(S: PartitionCode, config: RunConfig = DEFAULT_CONFIG) -> bool:
    """True when the partition meets the sphere-size bound with equality.

    Requires a passing stego-code verification (cached from an earlier run if
    available); raises MalformedPartitionError or NotStegoMatrixError-style
    failures through is_stego_partition.
    """
    rep = S._verified_report
    if rep is None or not rep.passed:
        rep = is_stego_partition(S, config)
        if not rep.passed:
            w, i = rep.witness
            raise MalformedPartitionError(
                f"not a stego-code: word {w.to_text()} is farther than t={S.t} "
                f"from class {i}",
                offenders=("distance", w, i),
            )
    return S.M == sphere_size(S.n, S.t, S.field.q)
