"""Exact arithmetic in GF(q), plus words (vectors) over GF(q).

Field elements are plain integers in ``[0, q - 1]``.  For prime q the value is
the residue; multiplication and inverses use modular arithmetic.  For the
supported prime powers (4, 8, 9, 16) the value indexes the polynomial basis:
element ``e`` has coefficient ``(e // p**i) % p`` on ``x**i``.  The
multiplication table is built at construction time from the first irreducible
polynomial found by brute-force search, and the full set of field axioms is
re-checked exhaustively for every field with q <= 16, so a bad table can never
escape the constructor.

Addition in an extension field is carry-free base-p addition of the indices;
for p = 2 that is plain XOR.

Words are immutable sequences of elements.  A word of length n also has a
packed integer form: the mixed-radix value with the leftmost element most
significant.  Packed order therefore coincides with lexicographic order, and
the packed value of a message doubles as its canonical index everywhere a
message ordering is needed.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import ConstructionError, DimensionMismatchError, FormatError

_EXTENSION_SIZES = {4: (2, 2), 8: (2, 3), 9: (3, 2), 16: (2, 4)}

# Fields at most this large get their axioms re-verified at construction.
_AXIOM_CHECK_MAX = 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# --- polynomial helpers over GF(p); coefficient lists are low degree first ---

def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m, over GF(p)."""
    a = list(a)
    dm = len(m) - 1
    while len(_poly_trim(a)) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        c = a[-1]
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
    return a


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree 1..deg//2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for lower in product(range(p), repeat=d):
            cand = list(lower) + [1]
            if not any(_poly_mod(poly, cand, p)):
                return False
    return True


def _find_irreducible(p: int, r: int):
    """First monic irreducible of degree r over GF(p), by ascending coefficients."""
    for lower in product(range(p), repeat=r):
        # lower is high-to-low so that the scan order matches ascending
        # packed value of the coefficient vector
        coeffs = list(reversed(lower)) + [1]
        if _is_irreducible(coeffs, p):
            return coeffs
    raise ConstructionError(f"no irreducible polynomial of degree {r} over GF({p})")


class GF:
    """The finite field with q elements.

    Instances are cached: ``GF(q) is GF(q)``.  All state is immutable after
    construction, so fields are safe to share across threads.
    """

    _instances: dict[int, "GF"] = {}

    __slots__ = ("q", "p", "r", "mul_table", "inv_table", "add_table", "_neg", "_initialized")

    def __new__(cls, q: int):
        inst = cls._instances.get(q)
        if inst is not None:
            return inst
        inst = super().__new__(cls)
        inst._initialized = False
        return inst

    def __init__(self, q: int):
        if self._initialized:
            return
        if q < 2:
            raise ValueError(f"field size must be >= 2, got {q}")
        if _is_prime(q):
            p, r = q, 1
        elif q in _EXTENSION_SIZES:
            p, r = _EXTENSION_SIZES[q]
        else:
            raise ValueError(
                f"unsupported field size {q}: primes and {sorted(_EXTENSION_SIZES)} are available"
            )
        self.q = q
        self.p = p
        self.r = r
        if r == 1:
            self.mul_table = None
            self.inv_table = None
            self.add_table = None
            self._neg = None
        else:
            self._build_extension_tables()
        if q <= _AXIOM_CHECK_MAX:
            self._check_axioms()
        self._initialized = True
        GF._instances[q] = self

    # -- construction --

    def _build_extension_tables(self):
        p, r, q = self.p, self.r, self.q
        modulus = _find_irreducible(p, r)

        def to_poly(e):
            return [(e // p**i) % p for i in range(r)]

        def from_poly(c):
            return sum(ci * p**i for i, ci in enumerate(c[:r]))

        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            pa = to_poly(a)
            for b in range(a, q):
                prod_ = _poly_mod(_poly_mul(pa, to_poly(b), p), modulus, p)
                prod_ += [0] * (r - len(prod_))
                mul[a][b] = mul[b][a] = from_poly(prod_)
        add = [[0] * q for _ in range(q)]
        for a in range(q):
            pa = to_poly(a)
            for b in range(q):
                pb = to_poly(b)
                add[a][b] = from_poly([(x + y) % p for x, y in zip(pa, pb)])
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
            else:
                raise ConstructionError(f"element {a} of GF({q}) has no inverse")
        neg = [0] * q
        for a in range(q):
            neg[a] = from_poly([(-c) % p for c in to_poly(a)])
        self.mul_table = mul
        self.inv_table = inv
        self.add_table = add
        self._neg = neg

    def _check_axioms(self):
        """Exhaustive field-axiom check; cheap for q <= 16 and run only once."""
        q = self.q
        add, mul = self.add, self.mul
        for a in range(q):
            if add(a, 0) != a or mul(a, 1) != a or mul(a, 0) != 0:
                raise ConstructionError(f"GF({q}): identity axiom fails at {a}")
            if add(a, self.neg(a)) != 0:
                raise ConstructionError(f"GF({q}): additive inverse fails at {a}")
            if a and mul(a, self.inv(a)) != 1:
                raise ConstructionError(f"GF({q}): multiplicative inverse fails at {a}")
        for a in range(q):
            for b in range(q):
                if add(a, b) != add(b, a) or mul(a, b) != mul(b, a):
                    raise ConstructionError(f"GF({q}): commutativity fails at ({a},{b})")
                for c in range(q):
                    if add(add(a, b), c) != add(a, add(b, c)):
                        raise ConstructionError(f"GF({q}): additive associativity fails")
                    if mul(mul(a, b), c) != mul(a, mul(b, c)):
                        raise ConstructionError(f"GF({q}): multiplicative associativity fails")
                    if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
                        raise ConstructionError(f"GF({q}): distributivity fails")

    # -- element arithmetic --

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF({self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.q
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.r == 1:
            return (-a) % self.q
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a * b) % self.q
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises ZeroDivisionError on a = 0."""
        if a == 0:
            raise ZeroDivisionError(f"zero has no inverse in GF({self.q})")
        if self.r == 1:
            return pow(a, self.q - 2, self.q)
        return self.inv_table[a]

    def __eq__(self, other):
        return isinstance(other, GF) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    def __repr__(self):
        return f"GF({self.q})"


def unpack_digits(value: int, q: int, n: int) -> tuple[int, ...]:
    """Digits of the packed value, leftmost most significant."""
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        value, digits[i] = divmod(value, q)
    return tuple(digits)


def pack_digits(digits: Sequence[int], q: int) -> int:
    value = 0
    for d in digits:
        value = value * q + d
    return value


class Word:
    """An immutable length-n vector over GF(q).

    Words support elementwise addition/subtraction/negation, scalar
    multiplication, hashing, and a canonical packed integer form.
    """

    __slots__ = ("field", "elems")

    def __init__(self, field: GF, elems: Iterable[int]):
        elems = tuple(elems)
        if not elems:
            raise ValueError("words must have length >= 1")
        q = field.q
        for e in elems:
            if not 0 <= e < q:
                raise ValueError(f"{e} is not an element of GF({q})")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "elems", elems)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self):
        return len(self.elems)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __getitem__(self, i):
        return self.elems[i]

    def __eq__(self, other):
        return (
            isinstance(other, Word)
            and other.field.q == self.field.q
            and other.elems == self.elems
        )

    def __hash__(self):
        return hash((self.field.q, self.elems))

    def _require_compatible(self, other: "Word"):
        if not isinstance(other, Word):
            raise TypeError(f"expected Word, got {type(other).__name__}")
        if other.field.q != self.field.q:
            raise DimensionMismatchError(
                f"words live over different fields GF({self.field.q}) and GF({other.field.q})"
            )
        if len(other) != len(self):
            raise DimensionMismatchError(f"word lengths differ: {len(self)} vs {len(other)}")

    def __add__(self, other: "Word") -> "Word":
        self._require_compatible(other)
        add = self.field.add
        return Word(self.field, (add(a, b) for a, b in zip(self.elems, other.elems)))

    def __sub__(self, other: "Word") -> "Word":
        self._require_compatible(other)
        sub = self.field.sub
        return Word(self.field, (sub(a, b) for a, b in zip(self.elems, other.elems)))

    def __neg__(self) -> "Word":
        neg = self.field.neg
        return Word(self.field, (neg(a) for a in self.elems))

    def scale(self, a: int) -> "Word":
        """Scalar multiple a * self."""
        self.field.check(a)
        mul = self.field.mul
        return Word(self.field, (mul(a, e) for e in self.elems))

    def pack(self) -> int:
        return pack_digits(self.elems, self.field.q)

    @classmethod
    def unpack(cls, field: GF, n: int, value: int) -> "Word":
        if not 0 <= value < field.q**n:
            raise ValueError(f"packed value {value} out of range for GF({field.q})^{n}")
        return cls(field, unpack_digits(value, field.q, n))

    @classmethod
    def zero(cls, field: GF, n: int) -> "Word":
        return cls(field, (0,) * n)

    def to_text(self) -> str:
        """Canonical text form: digit string for q <= 10, comma-separated above."""
        if self.field.q <= 10:
            return "".join(str(e) for e in self.elems)
        return ",".join(str(e) for e in self.elems)

    @classmethod
    def from_text(cls, field: GF, text: str, n: int | None = None) -> "Word":
        text = text.strip()
        if not text:
            raise FormatError("empty word literal")
        if "," in text:
            parts = [s.strip() for s in text.split(",")]
        elif field.q <= 10:
            parts = list(text)
        else:
            parts = [text]
        try:
            elems = [int(s) for s in parts]
        except ValueError as exc:
            raise FormatError(f"bad word literal {text!r}: {exc}") from None
        if any(not 0 <= e < field.q for e in elems):
            raise FormatError(f"word literal {text!r} has elements outside GF({field.q})")
        if n is not None and len(elems) != n:
            raise FormatError(f"word literal {text!r} has length {len(elems)}, expected {n}")
        return cls(field, elems)

    def __repr__(self):
        return f"Word(GF({self.field.q}), {self.to_text()!r})"


def weight(x: Word) -> int:
    """Hamming weight: the number of nonzero positions."""
    return sum(1 for e in x.elems if e)


def distance(x: Word, y: Word) -> int:
    """Hamming distance; equals weight(x - y)."""
    x._require_compatible(y)
    return sum(1 for a, b in zip(x.elems, y.elems) if a != b)


def mat_vec(rows: Sequence[Word], x: Word) -> Word:
    """Matrix-vector product H x^T over GF(q); rows are the k rows of H."""
    if not rows:
        raise DimensionMismatchError("matrix has no rows")
    field = rows[0].field
    n = len(rows[0])
    if x.field.q != field.q:
        raise DimensionMismatchError(
            f"matrix over GF({field.q}) applied to word over GF({x.field.q})"
        )
    if len(x) != n:
        raise DimensionMismatchError(f"matrix has {n} columns but word has length {len(x)}")
    add, mul = field.add, field.mul
    out = []
    for row in rows:
        acc = 0
        for a, b in zip(row.elems, x.elems):
            if a and b:
                acc = add(acc, mul(a, b))
        out.append(acc)
    return Word(field, out)


def all_words(field: GF, n: int) -> Iterator[Word]:
    """All words of GF(q)^n in ascending packed order."""
    for value in range(field.q**n):
        yield Word.unpack(field, n, value)
