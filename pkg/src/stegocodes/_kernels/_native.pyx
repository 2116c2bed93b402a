# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``stegocodes._kernels.pure``.

Same functions, same argument conventions, same results; see the pure module
for the documented contract.  Only the inner loops differ.
"""

from array import array

from cpython.bytes cimport PyBytes_AS_STRING

ctypedef long long i64


cdef inline i64 c_cf_add(i64 a, i64 b, int p, int ndigits) nogil:
    cdef i64 out = 0, shift = 1
    cdef int i
    if p == 2:
        return a ^ b
    for i in range(ndigits):
        out += ((a % p) + (b % p)) % p * shift
        a //= p
        b //= p
        shift *= p
    return out


cdef inline i64 c_cf_sub(i64 a, i64 b, int p, int ndigits) nogil:
    cdef i64 out = 0, shift = 1
    cdef int i
    if p == 2:
        return a ^ b
    for i in range(ndigits):
        out += ((a % p) - (b % p) + p) % p * shift
        a //= p
        b //= p
        shift *= p
    return out


def cf_add(a, b, p, ndigits):
    """Carry-free base-p addition (componentwise field vector addition)."""
    return c_cf_add(a, b, p, ndigits)


def cf_sub(a, b, p, ndigits):
    """Carry-free base-p subtraction."""
    return c_cf_sub(a, b, p, ndigits)


def min_pairwise_distance(bytes rows, int m, int n):
    """Minimum Hamming distance over all unordered pairs of the m byte rows."""
    if m < 2:
        raise ValueError("need at least two rows")
    cdef const unsigned char* buf = <const unsigned char*> PyBytes_AS_STRING(rows)
    cdef int best = n + 1
    cdef int i, j, k, d
    cdef const unsigned char* a
    cdef const unsigned char* b
    with nogil:
        for i in range(m - 1):
            a = buf + i * n
            for j in range(i + 1, m):
                b = buf + j * n
                d = 0
                for k in range(n):
                    if a[k] != b[k]:
                        d += 1
                        if d >= best:
                            break
                if d < best:
                    best = d
        # best == 0 cannot improve further but the scan is cheap enough
    return best


def min_nonzero_weight(bytes rows, int m, int n):
    """Minimum weight among nonzero rows; 0 if every row is zero."""
    cdef const unsigned char* buf = <const unsigned char*> PyBytes_AS_STRING(rows)
    cdef int best = 0
    cdef int i, k, w
    with nogil:
        for i in range(m):
            w = 0
            for k in range(n):
                if buf[i * n + k]:
                    w += 1
            if w and (best == 0 or w < best):
                best = w
    return best


cdef _flatten_contrib(contrib, int n, int q):
    flat = array("q", bytes(8 * n * q))
    cdef i64[::1] view = flat
    cdef int j, v
    for j in range(n):
        row = contrib[j]
        for v in range(q):
            view[j * q + v] = row[v]
    return flat


def universe_syndromes(contrib, int n, int q, int p, int sdigits):
    """Packed syndrome of every word of GF(q)^n, in packed order."""
    cdef i64 qn = 1
    cdef int i
    for i in range(n):
        qn *= q
    out_arr = array("q", bytes(8 * qn))
    cdef i64[::1] out = out_arr
    flat = _flatten_contrib(contrib, n, q)
    cdef i64[::1] cview = flat
    cdef i64 x
    cdef int j, b
    if q == 2:
        with nogil:
            out[0] = 0
            for x in range(1, qn):
                b = 0
                while not (x >> b) & 1:
                    b += 1
                out[x] = out[x & (x - 1)] ^ cview[(n - 1 - b) * 2 + 1]
        return out_arr
    digits_b = bytearray(n)
    psums_a = array("q", bytes(8 * (n + 1)))
    cdef unsigned char[::1] digits = digits_b
    cdef i64[::1] psums = psums_a
    cdef i64 xx = 0
    with nogil:
        while True:
            out[xx] = psums[n]
            xx += 1
            if xx == qn:
                break
            j = n - 1
            while digits[j] == q - 1:
                digits[j] = 0
                j -= 1
            digits[j] += 1
            for i in range(j, n):
                psums[i + 1] = c_cf_add(psums[i], cview[i * q + digits[i]], p, sdigits)
    return out_arr


def syndromes_of_words(contrib, words, int n, int q, int p, int sdigits):
    """Packed syndromes of the given packed words."""
    cdef Py_ssize_t m = len(words)
    words_a = array("q", words)
    out_a = array("q", bytes(8 * m))
    cdef i64[::1] wv = words_a
    cdef i64[::1] out = out_a
    flat = _flatten_contrib(contrib, n, q)
    cdef i64[::1] cview = flat
    cdef Py_ssize_t i
    cdef i64 x, s
    cdef int pos, d
    with nogil:
        for i in range(m):
            x = wv[i]
            s = 0
            for pos in range(n - 1, -1, -1):
                d = <int> (x % q)
                x //= q
                if d:
                    s = c_cf_add(s, cview[pos * q + d], p, sdigits)
            out[i] = s
    return list(out_a)


def coset_leader_search(contrib, int n, int q, int p, int sdigits, int t, i64 num_syn):
    """Minimal-weight, lex-least solution per syndrome; see the pure backend."""
    leaders_b = bytearray(num_syn * n)
    weights_b = bytearray(b"\xff") * num_syn
    cdef unsigned char[::1] leaders = leaders_b
    cdef unsigned char[::1] weights = weights_b
    flat = _flatten_contrib(contrib, n, q)
    cdef i64[::1] cview = flat
    weights[0] = 0
    cdef i64 covered = 1, work = 1
    cdef int tt = t if t < n else n
    sup_b = bytearray(4 * (tt + 1))
    coeff_b = bytearray(tt + 1)
    cdef int[::1] sup = memoryview(sup_b).cast("i")
    cdef unsigned char[::1] coeffs = coeff_b
    cdef int w, i, j, pos, ci, cd, sd
    cdef i64 s, row
    cdef bint more, replace
    with nogil:
        for w in range(1, tt + 1):
            for i in range(w):
                sup[i] = i
            while True:
                for i in range(w):
                    coeffs[i] = 1
                while True:
                    s = 0
                    for i in range(w):
                        s = c_cf_add(s, cview[sup[i] * q + coeffs[i]], p, sdigits)
                    work += 1
                    if weights[s] == 255:
                        weights[s] = w
                        covered += 1
                        row = s * n
                        for i in range(w):
                            leaders[row + sup[i]] = coeffs[i]
                    elif weights[s] == w:
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
                            for pos in range(n):
                                leaders[row + pos] = 0
                            for i in range(w):
                                leaders[row + sup[i]] = coeffs[i]
                    # next coefficient tuple, rightmost fastest
                    more = False
                    for i in range(w - 1, -1, -1):
                        if coeffs[i] < q - 1:
                            coeffs[i] += 1
                            for j in range(i + 1, w):
                                coeffs[j] = 1
                            more = True
                            break
                    if not more:
                        break
                # next support combination
                more = False
                for i in range(w - 1, -1, -1):
                    if sup[i] < n - w + i:
                        sup[i] += 1
                        for j in range(i + 1, w):
                            sup[j] = sup[j - 1] + 1
                        more = True
                        break
                if not more:
                    break
    return leaders_b, weights_b, covered, work


def ball_cover(members, int n, int q, int t, i64 qn):
    """Mark every packed word within Hamming distance t of some member."""
    marked_b = bytearray(qn)
    cdef unsigned char[::1] marked = marked_b
    members_a = array("q", list(members))
    cdef i64[::1] mv = members_a
    cdef Py_ssize_t nm = len(members_a)
    powq_a = array("q", bytes(8 * n))
    cdef i64[::1] powq = powq_a
    cdef int i
    powq[n - 1] = 1
    for i in range(n - 2, -1, -1):
        powq[i] = powq[i + 1] * q
    cdef int tt = t if t < n else n
    sup_b = bytearray(4 * (tt + 1))
    delta_b = bytearray(tt + 1)
    digits_b = bytearray(n)
    cdef int[::1] sup = memoryview(sup_b).cast("i")
    cdef unsigned char[::1] deltas = delta_b
    cdef unsigned char[::1] digits = digits_b
    cdef Py_ssize_t mi
    cdef i64 x, y, v
    cdef int dd, j, cur
    cdef bint more
    with nogil:
        for mi in range(nm):
            x = mv[mi]
            marked[x] = 1
            v = x
            for i in range(n - 1, -1, -1):
                digits[i] = <unsigned char> (v % q)
                v //= q
            for dd in range(1, tt + 1):
                for i in range(dd):
                    sup[i] = i
                while True:
                    for i in range(dd):
                        deltas[i] = 1
                    while True:
                        y = x
                        for i in range(dd):
                            cur = digits[sup[i]]
                            y += (((cur + deltas[i]) % q) - cur) * powq[sup[i]]
                        marked[y] = 1
                        more = False
                        for i in range(dd - 1, -1, -1):
                            if deltas[i] < q - 1:
                                deltas[i] += 1
                                for j in range(i + 1, dd):
                                    deltas[j] = 1
                                more = True
                                break
                        if not more:
                            break
                    more = False
                    for i in range(dd - 1, -1, -1):
                        if sup[i] < n - dd + i:
                            sup[i] += 1
                            for j in range(i + 1, dd):
                                sup[j] = sup[j - 1] + 1
                            more = True
                            break
                    if not more:
                        break
    return marked_b
