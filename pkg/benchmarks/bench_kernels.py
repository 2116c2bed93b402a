#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Each workload is a real hot path from the library: nonlinear minimum
distance, full-universe syndrome sweeps, weight-bounded coset searches,
ball-union covering marks, and batched syndrome evaluation.  Run:

    python benchmarks/bench_kernels.py
"""

import random
import time

from stegocodes import GF, f5_matrix, golay_binary, hamming_code, vasilev_code
from stegocodes._kernels import pure
from stegocodes.stegocode import contrib_from_rows

try:
    from stegocodes._kernels import _native as native
except ImportError:
    native = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def workloads():
    rng = random.Random(0)

    vas = vasilev_code(3)
    yield (
        "min_pairwise_distance  Vasil'ev 2048x15",
        "min_pairwise_distance",
        (vas.rows_bytes(), vas.M, vas.n),
    )

    f2 = GF(2)
    rows = [[rng.randrange(2) for _ in range(18)] for _ in range(8)]
    from stegocodes.field import Word

    contrib18 = contrib_from_rows([Word(f2, r) for r in rows])
    yield (
        "universe_syndromes     GF(2)^18, k=8",
        "universe_syndromes",
        (contrib18, 18, 2, 2, 8),
    )

    f3 = GF(3)
    trows = [[rng.randrange(3) for _ in range(11)] for _ in range(5)]
    contrib3 = contrib_from_rows([Word(f3, r) for r in trows])
    yield (
        "universe_syndromes     GF(3)^11, k=5",
        "universe_syndromes",
        (contrib3, 11, 3, 3, 5),
    )

    golay = golay_binary()
    gc = golay.check_contrib()
    yield (
        "coset_leader_search    Golay 11x23, t=3",
        "coset_leader_search",
        (gc, 23, 2, 2, 11, 3, 2**11),
    )

    f5_6 = f5_matrix(6)
    yield (
        "coset_leader_search    F5 6x63, t=1",
        "coset_leader_search",
        (f5_6.contrib(), 63, 2, 2, 6, 1, 2**6),
    )

    ham = hamming_code(4, f2)
    members = list(ham.codewords_packed())
    yield (
        "ball_cover             Hamming(15,11) coset, t=1",
        "ball_cover",
        (members, 15, 2, 1, 2**15),
    )

    words = [rng.randrange(2**23) for _ in range(100_000)]
    yield (
        "syndromes_of_words     1e5 words, Golay check",
        "syndromes_of_words",
        (gc, words, 23, 2, 2, 11),
    )


def main():
    print(f"{'workload':<45} {'pure':>10} {'native':>10} {'speedup':>8}")
    print("-" * 78)
    for label, fname, args in workloads():
        t_pure, r_pure = timed(getattr(pure, fname), *args)
        if native is None:
            print(f"{label:<45} {t_pure * 1e3:>8.1f}ms {'-':>10} {'-':>8}")
            continue
        t_nat, r_nat = timed(getattr(native, fname), *args)
        if fname in ("min_pairwise_distance",):
            assert r_pure == r_nat
        print(
            f"{label:<45} {t_pure * 1e3:>8.1f}ms {t_nat * 1e3:>8.1f}ms "
            f"{t_pure / t_nat:>7.1f}x"
        )
    if native is None:
        print("\ncompiled backend not built; showing pure timings only")


if __name__ == "__main__":
    main()
