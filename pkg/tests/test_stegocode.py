"""Matrices, coding tables, embed/extract, and partition stego-codes."""

import itertools

import pytest

from stegocodes import (
    GF,
    PartitionCode,
    RunConfig,
    StegoMatrix,
    Word,
    build_coding_table,
    distance,
    embed,
    extract,
    f5_matrix,
    is_mle,
    is_stego_matrix,
    is_stego_partition,
    partition_from_matrix,
    roundtrip_check,
    sphere_size,
    weight,
)
from stegocodes.errors import (
    BudgetExceededError,
    DimensionMismatchError,
    MalformedPartitionError,
    NotStegoMatrixError,
)
from stegocodes.stegocode import CodingTable, low_weight_words

F2 = GF(2)
F3 = GF(3)


def w2(text):
    return Word.from_text(F2, text)


# --- sphere_size ---

def test_sphere_size_examples():
    assert sphere_size(7, 1, 2) == 8
    assert sphere_size(23, 3, 2) == 2048
    assert sphere_size(11, 2, 3) == 243


def test_sphere_size_extremes():
    assert sphere_size(5, 0, 2) == 1
    assert sphere_size(5, 5, 2) == 32
    assert sphere_size(4, 4, 3) == 81


def test_sphere_size_range_errors():
    with pytest.raises(ValueError):
        sphere_size(5, 6, 2)
    with pytest.raises(ValueError):
        sphere_size(5, -1, 2)
    with pytest.raises(ValueError):
        sphere_size(5, 1, 1)


def test_sphere_size_matches_enumeration():
    for q, n, t in [(2, 6, 2), (3, 4, 2), (4, 3, 1)]:
        f = GF(q)
        count = sum(
            1 for v in range(q**n) if weight(Word.unpack(f, n, v)) <= t
        )
        assert sphere_size(n, t, q) == count


# --- matrix construction and verification ---

def test_matrix_requires_full_rank():
    with pytest.raises(ValueError):
        StegoMatrix.from_lists(F2, [[1, 0, 1], [1, 0, 1]], 1)


def test_matrix_shape_checks():
    with pytest.raises(DimensionMismatchError):
        StegoMatrix([Word(F2, [1, 0]), Word(F2, [1, 0, 1])], 1)
    with pytest.raises(ValueError):
        StegoMatrix.from_lists(F2, [[1, 0]], 0)


def test_is_stego_matrix_f5_k2():
    H = StegoMatrix.from_lists(F2, [[0, 1, 1], [1, 0, 1]], 1)
    rep = is_stego_matrix(H)
    assert rep.passed and H.verified
    assert not rep.probabilistic


def test_is_stego_matrix_hamming():
    rep = is_stego_matrix(f5_matrix(3))
    assert rep.passed


def test_is_stego_matrix_identity_fails_with_witness():
    H = StegoMatrix.from_lists(F2, [[1, 0], [0, 1]], 1)
    rep = is_stego_matrix(H)
    assert not rep.passed
    assert rep.witness == w2("11")
    assert not H.verified


def test_is_stego_matrix_budget():
    H = f5_matrix(8)  # sphere_size(255,1,2) * 255 > 2^10
    with pytest.raises(BudgetExceededError):
        is_stego_matrix(H, RunConfig(enumeration_cap=1 << 10, sample_count=1))


def test_wide_fields_are_refused_by_kernels():
    # byte-per-element kernels cannot represent q > 255; refuse loudly
    f = GF(257)
    H = StegoMatrix([Word(f, [1, 0]), Word(f, [0, 1])], 2)
    with pytest.raises(BudgetExceededError):
        is_stego_matrix(H)


# --- coding tables ---

def test_coding_table_f5_k2_golden():
    H = StegoMatrix.from_lists(F2, [[0, 1, 1], [1, 0, 1]], 1)
    table = build_coding_table(H)
    got = {y.to_text(): z.to_text() for y, z in table.entries()}
    assert got == {"00": "000", "01": "100", "10": "010", "11": "001"}


def test_coding_table_hamming_third_column():
    H = f5_matrix(3)
    table = build_coding_table(H)
    assert table.entry(w2("011")) == w2("0010000")
    assert table.entry(w2("000")) == Word.zero(F2, 7)


def test_coding_table_lexicographic_tie_break():
    # both e1 and e2 solve the only nonzero syndrome; the smaller word wins
    H = StegoMatrix.from_lists(F2, [[1, 1]], 1)
    table = build_coding_table(H)
    assert table.entry(w2("1")) == w2("01")


def test_coding_table_minimal_weight_against_bruteforce():
    cases = [
        f5_matrix(3),
        StegoMatrix.from_lists(F3, [[0, 1, 1, 1], [1, 0, 1, 2]], 1),
    ]
    for H in cases:
        table = build_coding_table(H)
        q, n, k = H.field.q, H.n, H.k
        best = {}
        for v in range(q**n):
            z = Word.unpack(H.field, n, v)
            s = H.apply(z).pack()
            wz = weight(z)
            if s not in best or wz < best[s]:
                best[s] = wz
        for s in range(q**k):
            y = Word.unpack(H.field, k, s)
            assert weight(table.entry(y)) == best[s] <= H.t


def test_coding_table_rejects_unverifiable_matrix():
    H = StegoMatrix.from_lists(F2, [[1, 0], [0, 1]], 1)
    with pytest.raises(NotStegoMatrixError):
        build_coding_table(H)


def test_coding_table_from_entries_roundtrip_and_tamper():
    H = f5_matrix(2)
    table = build_coding_table(H)
    rebuilt = CodingTable.from_entries(H, list(table.entries()))
    assert [z.to_text() for _, z in rebuilt.entries()] == [
        z.to_text() for _, z in table.entries()
    ]
    bad = [(y, z) for y, z in table.entries()]
    bad[1] = (bad[1][0], w2("110"))  # wrong syndrome
    with pytest.raises(ValueError):
        CodingTable.from_entries(H, bad)
    with pytest.raises(ValueError):
        CodingTable.from_entries(H, bad[:2])  # incomplete


# --- embed / extract ---

def test_embed_extract_hamming_golden():
    H = f5_matrix(3)
    table = build_coding_table(H)
    x = w2("1001000")
    y = w2("110")
    stego = embed(H, table, x, y)
    assert stego == w2("1011000")
    assert distance(x, stego) == 1
    assert extract(H, stego) == y


def test_embed_no_change_when_message_matches():
    H = f5_matrix(3)
    table = build_coding_table(H)
    x = w2("1001000")
    assert embed(H, table, x, extract(H, x)) == x


def test_embed_f5_k2_example():
    H = StegoMatrix.from_lists(F2, [[0, 1, 1], [1, 0, 1]], 1)
    table = build_coding_table(H)
    assert embed(H, table, w2("000"), w2("11")) == w2("001")


def test_extract_examples():
    H = f5_matrix(3)
    assert extract(H, Word.zero(F2, 7)) == Word.zero(F2, 3)
    f5 = StegoMatrix.from_lists(F2, [[0, 1, 1], [1, 0, 1]], 1)
    assert extract(f5, w2("111")) == w2("00")


def test_embed_dimension_errors():
    H = f5_matrix(3)
    table = build_coding_table(H)
    with pytest.raises(DimensionMismatchError):
        embed(H, table, w2("101"), w2("110"))
    with pytest.raises(DimensionMismatchError):
        embed(H, table, w2("1001000"), w2("1100"))
    with pytest.raises(DimensionMismatchError):
        extract(H, w2("10"))


def test_roundtrip_exhaustive_small():
    for H in (f5_matrix(1), f5_matrix(2), f5_matrix(3)):
        table = build_coding_table(H)
        rep = roundtrip_check(H, table)
        assert rep.passed and not rep.probabilistic
        assert rep.work == 2 ** (H.n + H.k)


def test_roundtrip_via_public_api_sampled():
    H = f5_matrix(3)
    table = build_coding_table(H)
    for xv in range(0, 128, 7):
        for yv in range(8):
            x = Word.unpack(F2, 7, xv)
            y = Word.unpack(F2, 3, yv)
            stego = embed(H, table, x, y)
            assert extract(H, stego) == y
            assert distance(x, stego) <= H.t


# --- partitions ---

def test_partition_from_matrix_example1():
    S = partition_from_matrix(f5_matrix(2))
    got = {frozenset(w.to_text() for w in S.part_words(i)) for i in range(S.M)}
    assert got == {
        frozenset({"000", "111"}),
        frozenset({"011", "100"}),
        frozenset({"010", "101"}),
        frozenset({"001", "110"}),
    }
    # class index equals the packed message value
    assert S.part_index_of(w2("101")) == 2


def test_partition_from_matrix_identity_gives_singletons():
    H = StegoMatrix.from_lists(F2, [[1, 0], [0, 1]], 2)
    S = partition_from_matrix(H)
    assert S.M == 4 and all(len(S.part_packed(i)) == 1 for i in range(4))


def test_partition_from_matrix_hamming():
    S = partition_from_matrix(f5_matrix(3))
    assert S.M == 8
    assert all(len(S.part_packed(i)) == 16 for i in range(8))
    assert is_stego_partition(S).passed


def test_partition_from_matrix_budget():
    with pytest.raises(BudgetExceededError):
        partition_from_matrix(f5_matrix(4), RunConfig(enumeration_cap=1 << 10, sample_count=1))


def test_partition_from_matrix_requires_stego_matrix():
    H = StegoMatrix.from_lists(F2, [[1, 0], [0, 1]], 1)
    with pytest.raises(NotStegoMatrixError):
        partition_from_matrix(H)


def test_is_stego_partition_example1():
    S = partition_from_matrix(f5_matrix(2))
    rep = is_stego_partition(S)
    assert rep.passed and not rep.probabilistic


def test_is_stego_partition_singletons_fail_with_witness():
    S = PartitionCode.from_parts(
        F2, 2, 1, [[w2("00")], [w2("01")], [w2("10")], [w2("11")]]
    )
    rep = is_stego_partition(S)
    assert not rep.passed
    word, idx = rep.witness
    assert word == w2("00") and idx == 3


def test_is_stego_partition_parity_classes():
    evens = [v for v in range(8) if bin(v).count("1") % 2 == 0]
    odds = [v for v in range(8) if bin(v).count("1") % 2 == 1]
    S = PartitionCode.from_parts(F2, 3, 1, [evens, odds])
    assert is_stego_partition(S).passed


def test_malformed_partitions_report_offenders():
    with pytest.raises(MalformedPartitionError) as err:
        is_stego_partition(PartitionCode.from_parts(F2, 2, 1, [[0, 1], [1, 2, 3]]))
    assert err.value.offenders[0] == "overlap"
    with pytest.raises(MalformedPartitionError) as err:
        is_stego_partition(PartitionCode.from_parts(F2, 2, 1, [[0, 1], [3]]))
    assert err.value.offenders[0] == "gap"
    with pytest.raises(MalformedPartitionError) as err:
        is_stego_partition(PartitionCode.from_parts(F2, 2, 1, [[0, 1, 2, 3], []]))
    assert err.value.offenders[0] == "empty"


def test_is_stego_partition_sampled_mode_deterministic():
    S = partition_from_matrix(f5_matrix(2))
    cfg = RunConfig(sample_count=500, rng_seed=42)
    r1 = is_stego_partition(S, cfg, mode="sampled")
    r2 = is_stego_partition(S, cfg, mode="sampled")
    assert r1.passed and r1.probabilistic and r1.samples == 500 and r1.rng_seed == 42
    assert r1.to_dict() == r2.to_dict()


def test_is_mle_examples():
    S = partition_from_matrix(f5_matrix(2))
    assert is_mle(S)  # M = 4 = sphere_size(3, 1, 2)
    S2 = partition_from_matrix(f5_matrix(3))
    assert is_mle(S2)  # M = 8 = sphere_size(7, 1, 2)
    # (n, M, n) with M < q^n: one class per word is MLE only at M = q^n
    evens = [v for v in range(8) if bin(v).count("1") % 2 == 0]
    odds = [v for v in range(8) if bin(v).count("1") % 2 == 1]
    S3 = PartitionCode.from_parts(F2, 3, 3, [evens, odds])
    assert is_stego_partition(S3).passed
    assert not is_mle(S3)


def test_mle_sphere_intersection_lemma():
    # radius-t sphere around any word meets every class exactly once
    from stegocodes._kernels import cf_add

    for H in (f5_matrix(2), f5_matrix(3), f5_matrix(4)):
        S = partition_from_matrix(H)
        assert is_mle(S)
        n, t, q = S.n, S.t, S.field.q
        p, nd = S.field.p, n * S.field.r
        offsets = low_weight_words(S.field, n, t)
        part_of = {w: i for i in range(S.M) for w in S.part_packed(i)}
        for xv in range(q**n):
            counts = [0] * S.M
            for off in offsets:
                counts[part_of[cf_add(xv, off, p, nd)]] += 1
            assert counts == [1] * S.M


def test_mle_class_count_is_power_of_q():
    for H in (f5_matrix(2), f5_matrix(3)):
        S = partition_from_matrix(H)
        M = S.M
        while M % S.field.q == 0:
            M //= S.field.q
        assert M == 1


def test_partition_size_bound():
    # every verified partition satisfies M <= sphere_size(n, t, q)
    cases = [partition_from_matrix(f5_matrix(2)), partition_from_matrix(f5_matrix(3))]
    evens = [v for v in range(8) if bin(v).count("1") % 2 == 0]
    odds = [v for v in range(8) if bin(v).count("1") % 2 == 1]
    cases.append(PartitionCode.from_parts(F2, 3, 1, [evens, odds]))
    for S in cases:
        assert is_stego_partition(S).passed
        assert S.M <= sphere_size(S.n, S.t, S.field.q)


def test_partition_from_matrix_ternary():
    from stegocodes import DirectSumPlan, direct_sum_construct

    H = direct_sum_construct(DirectSumPlan(3, 2, (2,)))
    S = partition_from_matrix(H)
    assert S.M == 9 and all(len(S.part_packed(i)) == 9 for i in range(9))
    assert is_stego_partition(S).passed
    assert is_mle(S)


def test_low_weight_words_canonical_order():
    words = low_weight_words(F3, 3, 2)
    assert words[0] == 0
    lifted = [Word.unpack(F3, 3, v) for v in words]
    keys = [(weight(w), w.pack()) for w in lifted]
    assert keys == sorted(keys)
    assert len(words) == sphere_size(3, 2, 3)
    assert len(set(words)) == len(words)
