"""Backend parity: the compiled kernels must match the pure-Python twins."""

import random
from itertools import product

import pytest

from stegocodes import GF, Word, weight
from stegocodes._kernels import BACKEND, pure
from stegocodes.field import unpack_digits
from stegocodes.stegocode import contrib_from_rows

try:
    from stegocodes._kernels import _native as native
except ImportError:
    native = None

needs_native = pytest.mark.skipif(native is None, reason="compiled kernels not built")

FIELDS = [2, 3, 4, 5, 9]


def random_matrix(rng, q, k, n):
    f = GF(q)
    while True:
        rows = [Word(f, [rng.randrange(q) for _ in range(n)]) for _ in range(k)]
        try:
            return contrib_from_rows(rows), rows
        except Exception:  # pragma: no cover
            continue


def test_backend_is_reported():
    assert BACKEND in ("native", "pure")


def test_pure_cf_add_sub_are_field_vector_ops():
    for q in FIELDS:
        f = GF(q)
        p, nd = f.p, 2 * f.r
        for av in range(q**2):
            for bv in range(q**2):
                a, b = Word.unpack(f, 2, av), Word.unpack(f, 2, bv)
                assert pure.cf_add(av, bv, p, nd) == (a + b).pack()
                assert pure.cf_sub(av, bv, p, nd) == (a - b).pack()


def test_pure_min_pairwise_matches_naive():
    rng = random.Random(5)
    for q in (2, 3):
        n, m = 9, 25
        rows = [[rng.randrange(q) for _ in range(n)] for _ in range(m)]
        flat = bytes(e for row in rows for e in row)
        naive = min(
            sum(1 for a, b in zip(r1, r2) if a != b)
            for i, r1 in enumerate(rows)
            for r2 in rows[i + 1 :]
        )
        assert pure.min_pairwise_distance(flat, m, n) == naive


def test_pure_universe_syndromes_match_mat_vec():
    rng = random.Random(11)
    for q in FIELDS:
        f = GF(q)
        k, n = 2, 3
        contrib, rows = random_matrix(rng, q, k, n)
        syn = pure.universe_syndromes(contrib, n, q, f.p, k * f.r)
        from stegocodes.field import mat_vec

        for x in range(q**n):
            w = Word.unpack(f, n, x)
            assert syn[x] == mat_vec(rows, w).pack()


def test_pure_ball_cover_matches_distance_scan():
    f = GF(3)
    n, t = 3, 1
    members = [0, 13]
    marked = pure.ball_cover(members, n, 3, t, 27)
    for x in range(27):
        xd = unpack_digits(x, 3, n)
        d = min(
            sum(1 for a, b in zip(xd, unpack_digits(m, 3, n)) if a != b) for m in members
        )
        assert marked[x] == (1 if d <= t else 0)


def test_pure_coset_leader_search_is_minimal_and_lex_least():
    rng = random.Random(3)
    for q in (2, 3, 4):
        f = GF(q)
        k, n, t = 2, 4, 2
        contrib, rows = random_matrix(rng, q, k, n)
        leaders, weights, covered, work = pure.coset_leader_search(
            contrib, n, q, f.p, k * f.r, t, q**k
        )
        from stegocodes.field import mat_vec

        best: dict[int, list] = {}
        for v in range(q**n):
            w = Word.unpack(f, n, v)
            if weight(w) > t:
                continue
            s = mat_vec(rows, w).pack()
            best.setdefault(s, []).append((weight(w), v))
        for s in range(q**k):
            if s not in best:
                assert weights[s] == 255
                continue
            wmin = min(x[0] for x in best[s])
            vmin = min(v for (wt, v) in best[s] if wt == wmin)
            assert weights[s] == wmin
            row = tuple(leaders[s * n : (s + 1) * n])
            assert row == unpack_digits(vmin, q, n)
        assert covered == len(best)


@needs_native
def test_native_matches_pure_on_random_cases():
    rng = random.Random(99)
    for q in FIELDS:
        f = GF(q)
        p = f.p
        for _ in range(3):
            k = rng.randrange(1, 3)
            n = rng.randrange(2, 5)
            t = rng.randrange(1, n + 1)
            contrib, _ = random_matrix(rng, q, k, n)
            sd = k * f.r
            assert list(native.universe_syndromes(contrib, n, q, p, sd)) == list(
                pure.universe_syndromes(contrib, n, q, p, sd)
            )
            words = [rng.randrange(q**n) for _ in range(40)]
            assert native.syndromes_of_words(contrib, words, n, q, p, sd) == (
                pure.syndromes_of_words(contrib, words, n, q, p, sd)
            )
            nl, nw, nc, nk = native.coset_leader_search(contrib, n, q, p, sd, t, q**k)
            pl, pw, pc, pk = pure.coset_leader_search(contrib, n, q, p, sd, t, q**k)
            assert (bytes(nl), bytes(nw), nc, nk) == (bytes(pl), bytes(pw), pc, pk)
            members = sorted(set(rng.randrange(q**n) for _ in range(4)))
            assert bytes(native.ball_cover(members, n, q, t, q**n)) == bytes(
                pure.ball_cover(members, n, q, t, q**n)
            )


@needs_native
def test_native_matches_pure_pairwise_and_weights():
    rng = random.Random(17)
    for q in (2, 3, 5):
        n, m = 11, 40
        flat = bytes(rng.randrange(q) for _ in range(m * n))
        assert native.min_pairwise_distance(flat, m, n) == pure.min_pairwise_distance(
            flat, m, n
        )
        assert native.min_nonzero_weight(flat, m, n) == pure.min_nonzero_weight(flat, m, n)
    zero = bytes(3 * 4)
    assert native.min_nonzero_weight(zero, 3, 4) == pure.min_nonzero_weight(zero, 3, 4) == 0


@needs_native
def test_native_cf_ops_match_pure():
    for p, nd in [(2, 8), (3, 5), (5, 4)]:
        top = p**nd
        for a, b in product(range(0, top, max(1, top // 23)), repeat=2):
            assert native.cf_add(a, b, p, nd) == pure.cf_add(a, b, p, nd)
            assert native.cf_sub(a, b, p, nd) == pure.cf_sub(a, b, p, nd)
