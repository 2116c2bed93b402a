"""Pure-Python implementations of the hot kernels.

This module is the reference backend: the compiled extension in ``_native``
implements the same functions with the same semantics, and the package picks
one at import time.  Conventions shared by both backends:

- a word of GF(q)^n is packed as a mixed-radix integer, leftmost element most
  significant; packed order equals lexicographic order;
- because q = p^r, packed addition of field vectors is carry-free base-p
  addition of the packed values (plain XOR when p = 2);
- byte matrices are ``bytes`` of length m*n, row-major, one element per byte;
- ``contrib[j][v]`` is the packed syndrome of v times column j of a k x n
  matrix, so the syndrome of a word is the carry-free sum of the
  contributions of its nonzero positions.
"""

from __future__ import annotations

from array import array
from itertools import combinations, product


def cf_add(a: int, b: int, p: int, ndigits: int) -> int:
    """Carry-free base-p addition (componentwise field vector addition)."""
    if p == 2:
        return a ^ b
    out, shift = 0, 1
    for _ in range(ndigits):
        out += (a % p + b % p) % p * shift
        a //= p
        b //= p
        shift *= p
    return out


def cf_sub(a: int, b: int, p: int, ndigits: int) -> int:
    """Carry-free base-p subtraction."""
    if p == 2:
        return a ^ b
    out, shift = 0, 1
    for _ in range(ndigits):
        out += (a % p - b % p) % p * shift
        a //= p
        b //= p
        shift *= p
    return out


def min_pairwise_distance(rows: bytes, m: int, n: int) -> int:
    """Minimum Hamming distance over all unordered pairs of the m byte rows."""
    if m < 2:
        raise ValueError("need at least two rows")
    ints = [int.from_bytes(rows[i * n : (i + 1) * n], "big") for i in range(m)]
    best = n + 1
    for i in range(m - 1):
        a = ints[i]
        for j in range(i + 1, m):
            # bytes differ exactly where the XOR byte is nonzero
            d = n - (a ^ ints[j]).to_bytes(n, "big").count(0)
            if d < best:
                best = d
                if best == 0:
                    return 0
    return best


def min_nonzero_weight(rows: bytes, m: int, n: int) -> int:
    """Minimum weight among nonzero rows; 0 if every row is zero."""
    best = 0
    for i in range(m):
        w = n - rows[i * n : (i + 1) * n].count(0)
        if w and (best == 0 or w < best):
            best = w
    return best


def universe_syndromes(contrib, n: int, q: int, p: int, sdigits: int):
    """Packed syndrome of every word of GF(q)^n, in packed order."""
    qn = q**n
    out = array("q", bytes(8 * qn))
    if q == 2:
        # subset-sum DP: drop the lowest set bit and add back its column
        bit_contrib = [contrib[n - 1 - b][1] for b in range(n)]
        for x in range(1, qn):
            out[x] = out[x & (x - 1)] ^ bit_contrib[(x & -x).bit_length() - 1]
        return out
    # mixed-radix odometer with prefix sums over the word positions
    digits = [0] * n
    psums = [0] * (n + 1)
    x = 0
    while True:
        out[x] = psums[n]
        x += 1
        if x == qn:
            return out
        j = n - 1
        while digits[j] == q - 1:
            digits[j] = 0
            j -= 1
        digits[j] += 1
        for i in range(j, n):
            psums[i + 1] = cf_add(psums[i], contrib[i][digits[i]], p, sdigits)


def syndromes_of_words(contrib, words, n: int, q: int, p: int, sdigits: int):
    """Packed syndromes of the given packed words."""
    out = []
    for x in words:
        s = 0
        for pos in range(n - 1, -1, -1):
            x, d = divmod(x, q)
            if d:
                s = cf_add(s, contrib[pos][d], p, sdigits)
        out.append(s)
    return out


def coset_leader_search(contrib, n: int, q: int, p: int, sdigits: int, t: int, num_syn: int):
    """Minimal-weight, lexicographically-least solution of H z^T = s per syndrome.

    Enumerates every word of weight <= t, weight classes in ascending order.
    Returns (leaders, weights, covered, work) where leaders is a bytearray of
    num_syn rows of n bytes (valid where weights[s] != 255), weights[s] is the
    leader weight or 255 if no solution of weight <= t exists, covered counts
    reached syndromes and work counts enumerated candidates.
    """
    leaders = bytearray(num_syn * n)
    weights = bytearray(b"\xff") * num_syn
    weights[0] = 0
    covered = 1
    work = 1
    for w in range(1, min(t, n) + 1):
        for sup in combinations(range(n), w):
            for coeffs in product(range(1, q), repeat=w):
                s = 0
                for pos, c in zip(sup, coeffs):
                    s = cf_add(s, contrib[pos][c], p, sdigits)
                work += 1
                seen = weights[s]
                if seen == 255:
                    weights[s] = w
                    covered += 1
                    row = s * n
                    for pos, c in zip(sup, coeffs):
                        leaders[row + pos] = c
                elif seen == w:
                    # same weight: keep the lexicographically smaller word
                    row = s * n
                    ci = 0
                    replace = False
                    for pos in range(n):
                        cd = 0
                        if ci < w and sup[ci] == pos:
                            cd = coeffs[ci]
                            ci += 1
                        sd = leaders[row + pos]
                        if cd != sd:
                            replace = cd < sd
                            break
                    if replace:
                        leaders[row : row + n] = bytes(n)
                        for pos, c in zip(sup, coeffs):
                            leaders[row + pos] = c
    return leaders, weights, covered, work


def ball_cover(members, n: int, q: int, t: int, qn: int) -> bytearray:
    """Mark every packed word within Hamming distance t of some member."""
    marked = bytearray(qn)
    powq = [q ** (n - 1 - i) for i in range(n)]
    tt = min(t, n)
    if q == 2:
        flip_masks = [
            [sum(powq[pos] for pos in sup) for sup in combinations(range(n), dd)]
            for dd in range(tt + 1)
        ]
        for x in members:
            marked[x] = 1
            for dd in range(1, tt + 1):
                for mask in flip_masks[dd]:
                    marked[x ^ mask] = 1
        return marked
    for x in members:
        marked[x] = 1
        digits = []
        v = x
        for i in range(n - 1, -1, -1):
            v, d = divmod(v, q)
            digits.append(d)
        digits.reverse()
        for dd in range(1, tt + 1):
            for sup in combinations(range(n), dd):
                for deltas in product(range(1, q), repeat=dd):
                    y = x
                    for pos, dv in zip(sup, deltas):
                        cur = digits[pos]
                        y += (((cur + dv) % q) - cur) * powq[pos]
                    marked[y] = 1
    return marked
