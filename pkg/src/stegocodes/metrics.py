"""Performance measures: rate, change density, capacity, hiding redundancy.

The operating point of a code is its average change density, computed in
exact rational arithmetic from the coding table (one entry per syndrome, all
syndromes equally likely) and only converted to floating point at report
boundaries.  Hiding capacity uses the closed-form binary-symmetric case:
C(D) = H(D) for D <= 1/2 and 1 beyond.  Hiding redundancy is the gap
C(D) - k/n; smaller means the code sits closer to capacity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .stegocode import CodingTable, StegoMatrix

COMPARISON_TOL = 1e-12


def binary_entropy(d: float) -> float:
    """H(d) = -d log2 d - (1-d) log2 (1-d), with H(0) = H(1) = 0."""
    if not 0 <= d <= 1:
        raise ValueError(f"entropy argument must be in [0, 1], got {d}")
    if d == 0 or d == 1:
        return 0.0
    return -d * math.log2(d) - (1 - d) * math.log2(1 - d)


def capacity(d: float) -> float:
    """Hiding capacity at distortion d: H(d) up to 1/2, then 1."""
    if d < 0:
        raise ValueError(f"distortion must be >= 0, got {d}")
    if d > 0.5:
        return 1.0
    return binary_entropy(d)


def change_density(table: CodingTable, n: int) -> Fraction:
    """Average fraction of changed positions: (1/q^k) sum_y wt(z_y) / n.

    Exact rational value; the table is complete so the average is over all
    q^k equally likely syndromes.
    """
    if n != table.matrix.n:
        raise ValueError(f"n={n} does not match the table's matrix (n={table.matrix.n})")
    return Fraction(table.total_weight(), len(table) * n)


@dataclass
class RedundancyReport:
    """Rate, density, capacity, and their gap for one verified code.

    message_rate, change_density, and embedding_efficiency are exact
    rationals; capacity and redundancy are floats (entropy is irrational).
    """

    n: int
    k: int
    t: int
    message_rate: Fraction
    change_density: Fraction
    capacity: float
    redundancy: float
    embedding_efficiency: Optional[Fraction]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "t": self.t,
            "message_rate": str(self.message_rate),
            "message_rate_float": float(self.message_rate),
            "change_density": str(self.change_density),
            "change_density_float": float(self.change_density),
            "capacity": self.capacity,
            "redundancy": self.redundancy,
            "embedding_efficiency": (
                None if self.embedding_efficiency is None else str(self.embedding_efficiency)
            ),
            "embedding_efficiency_float": (
                None if self.embedding_efficiency is None else float(self.embedding_efficiency)
            ),
        }


def redundancy_report(H: StegoMatrix, table: CodingTable) -> RedundancyReport:
    """Full report for a verified matrix and its complete coding table."""
    n, k, t = H.n, H.k, H.t
    rate = Fraction(k, n)
    density = change_density(table, n)
    assert 0 <= density <= Fraction(min(t, n), n)
    cap = capacity(float(density))
    return RedundancyReport(
        n=n,
        k=k,
        t=t,
        message_rate=rate,
        change_density=density,
        capacity=cap,
        redundancy=cap - float(rate),
        embedding_efficiency=None if density == 0 else rate / density,
    )


def redundancy_curve(k_max: int, grid_points: int = 101) -> list[dict]:
    """Rows of the capacity-versus-rate picture.

    A uniform grid of distortions D over [0, 1/2] carries the capacity curve
    H(D) and the simple-LSB reference line 2D; the discrete points
    (1/2^k, k/(2^k - 1)) for k = 1..k_max carry the f5_rate column (None on
    grid rows).  Rows are sorted by D, grid row first on ties.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    if grid_points < 2:
        raise ValueError(f"grid_points must be >= 2, got {grid_points}")
    rows = []
    for i in range(grid_points):
        d = 0.5 * i / (grid_points - 1)
        rows.append({"D": d, "capacity": capacity(d), "lsb_rate": 2 * d, "f5_rate": None})
    for k in range(1, k_max + 1):
        d = 1 / 2**k
        rows.append(
            {
                "D": d,
                "capacity": capacity(d),
                "lsb_rate": 2 * d,
                "f5_rate": k / (2**k - 1),
            }
        )
    rows.sort(key=lambda r: (r["D"], r["f5_rate"] is not None))
    return rows


def curve_csv(rows: list[dict]) -> str:
    """Render curve rows as CSV with 9 significant digits."""
    def fmt(v):
        return "" if v is None else format(v, ".9g")

    lines = ["D,capacity,lsb_rate,f5_rate"]
    for r in rows:
        lines.append(f"{fmt(r['D'])},{fmt(r['capacity'])},{fmt(r['lsb_rate'])},{fmt(r['f5_rate'])}")
    return "\n".join(lines) + "\n"


@dataclass
class KrotovBound:
    """Lower bound on the number of binary MLE codes of length n.

    exact is the integer value when it is representable at reasonable size,
    otherwise None; log2 is always present.
    """

    n: int
    exact: Optional[int]
    log2: float

    def to_dict(self) -> dict:
        return {"n": self.n, "exact": self.exact, "log2": self.log2}


# Beyond this many bits the exact integer is pointless to materialize.
_KROTOV_EXACT_BITS = 1_000_000


def krotov_lower_bound(n: int) -> KrotovBound:
    """Evaluate the counting bound at n = 2^r - 1 (r >= 2).

    The number of distinct perfect binary codes of length n is at least
    2^2^((n+1)/2 - log2(n+1)) * 3^2^((n-3)/4) * 2^2^((n+5)/4 - log2(n+1));
    dividing by the n + 1 messages-per-code gives the MLE count bound.
    """
    r = (n + 1).bit_length() - 1
    if n < 3 or (1 << r) != n + 1:
        raise ValueError(f"n must be 2^r - 1 with r >= 2, got {n}")
    e1 = (n + 1) // 2 - r
    e2 = (n - 3) // 4
    e3 = (n + 5) // 4 - r
    # factors are 2^2^e1, 3^2^e2, 2^2^e3, all divided by n + 1 = 2^r
    try:
        log2_value = 2.0**e1 + 2.0**e2 * math.log2(3) + 2.0**e3 - r
    except OverflowError:
        log2_value = math.inf
    exact = None
    if log2_value <= _KROTOV_EXACT_BITS:
        two_exp = 2**e1 + 2**e3 - r
        assert two_exp >= 0
        exact = 2**two_exp * 3 ** (2**e2)
    return KrotovBound(n=n, exact=exact, log2=log2_value)
