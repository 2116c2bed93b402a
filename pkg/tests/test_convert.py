"""Conversions between perfect codes and MLE partitions; classification."""

import pytest

from stegocodes import (
    GF,
    BlockCode,
    Classification,
    PartitionCode,
    RunConfig,
    Word,
    classify_mle,
    golay_binary,
    hamming_code,
    is_mle,
    is_stego_partition,
    mle_to_perfect,
    perfect_to_mle,
    repetition_code,
    sphere_size,
    vasilev_code,
    weight,
)
from stegocodes.errors import BudgetExceededError, NotMleError, NotPerfectError
from stegocodes.formats import dump_partition

F2 = GF(2)
F3 = GF(3)


def test_p2m_repetition_reproduces_example_partition():
    res = perfect_to_mle(repetition_code(1), 1)
    S = res.partition
    assert res.part_index_of_input == 0
    assert S.M == 4
    got = {frozenset(w.to_text() for w in S.part_words(i)) for i in range(4)}
    assert got == {
        frozenset({"000", "111"}),
        frozenset({"011", "100"}),
        frozenset({"010", "101"}),
        frozenset({"001", "110"}),
    }
    assert S.part_words(0) == frozenset(repetition_code(1).codewords())
    assert is_stego_partition(S).passed
    assert is_mle(S)


def test_p2m_leaders_canonical():
    res = perfect_to_mle(hamming_code(3, F2), 1)
    leaders = res.coset_leaders
    assert leaders[0] == Word.zero(F2, 7)
    keys = [(weight(w), w.pack()) for w in leaders]
    assert keys == sorted(keys)
    assert len(leaders) == sphere_size(7, 1, 2)


def test_p2m_hamming74():
    res = perfect_to_mle(hamming_code(3, F2), 1)
    S = res.partition
    assert S.M == 8
    assert all(len(S.part_packed(i)) == 16 for i in range(8))
    assert S.part_packed(0) == frozenset(hamming_code(3, F2).codewords_packed())
    assert is_stego_partition(S).passed
    assert is_mle(S)


def test_p2m_whole_space_t0():
    whole = BlockCode(F3, 2, range(9))
    res = perfect_to_mle(whole, 0)
    assert res.partition.M == 1
    assert res.partition.part_packed(0) == frozenset(range(9))
    assert is_stego_partition(res.partition).passed
    assert is_mle(res.partition)


def test_p2m_rejects_non_perfect_code():
    not_perfect = BlockCode(F2, 3, [0, 6])  # distance 2
    with pytest.raises(NotPerfectError) as err:
        perfect_to_mle(not_perfect, 1)
    assert err.value.certificate is not None


def test_m2p_example1_round_trip():
    res = perfect_to_mle(repetition_code(1), 1)
    certs = mle_to_perfect(res.partition)
    assert len(certs) == 4
    for cert in certs:
        assert (cert.n, cert.M, cert.d) == (3, 2, 3)
        assert cert.equal and cert.d_consistent


def test_m2p_hamming_round_trip_and_part0_identity():
    code = hamming_code(3, F2)
    res = perfect_to_mle(code, 1)
    certs = mle_to_perfect(res.partition)
    assert len(certs) == 8
    assert all(c.equal and c.d == 3 for c in certs)
    assert res.partition.part_packed(0) == frozenset(code.codewords_packed())


def test_p2m_deterministic_round_trip():
    res1 = perfect_to_mle(hamming_code(3, F2), 1)
    part0 = BlockCode(F2, 7, sorted(res1.partition.part_packed(0)))
    res2 = perfect_to_mle(part0, 1)
    assert res1.partition.parts_packed() == res2.partition.parts_packed()
    assert [w.pack() for w in res1.coset_leaders] == [w.pack() for w in res2.coset_leaders]


def test_m2p_rejects_non_mle_partition():
    evens = [v for v in range(8) if bin(v).count("1") % 2 == 0]
    odds = [v for v in range(8) if bin(v).count("1") % 2 == 1]
    S = PartitionCode.from_parts(F2, 3, 1, [evens, odds])
    with pytest.raises(NotMleError):
        mle_to_perfect(S)


def test_vasilev_round_trip():
    code = vasilev_code(3)
    res = perfect_to_mle(code, 1)
    S = res.partition
    assert S.is_explicit and S.M == 16
    assert is_stego_partition(S).passed
    assert is_mle(S)
    certs = mle_to_perfect(S)
    assert all(c.equal and c.d == 3 for c in certs)
    assert S.part_packed(0) == frozenset(code.packed())


def test_golay_streaming_partition():
    res = perfect_to_mle(golay_binary(), 3)
    S = res.partition
    assert not S.is_explicit
    assert S.M == 2048 == sphere_size(23, 3, 2)
    sampled = is_stego_partition(S, RunConfig(sample_count=2000, rng_seed=7))
    assert sampled.passed and sampled.probabilistic and sampled.samples == 2000
    exact = is_stego_partition(S, mode="exhaustive")
    assert exact.passed and not exact.probabilistic
    assert is_mle(S)
    certs = mle_to_perfect(S)
    assert len(certs) == 2048
    assert all(c.equal and c.d == 7 for c in certs)
    with pytest.raises(BudgetExceededError):
        dump_partition(S)


def test_golay_forced_explicit_is_refused_below_cap():
    with pytest.raises(BudgetExceededError):
        perfect_to_mle(golay_binary(), 3, RunConfig(enumeration_cap=1 << 20), streaming=False)


def test_classify_examples():
    assert classify_mle(23, 2048, 3, 2) is Classification.BINARY_GOLAY_TYPE
    assert classify_mle(11, 243, 2, 3) is Classification.TERNARY_GOLAY_TYPE
    assert classify_mle(7, 8, 1, 2) is Classification.HAMMING_TYPE
    assert classify_mle(6, 8, 1, 2) is Classification.IMPOSSIBLE
    assert classify_mle(3, 4, 1, 2) is Classification.TRIVIAL
    assert classify_mle(5, 16, 2, 2) is Classification.TRIVIAL
    assert classify_mle(4, 81, 4, 3) is Classification.TRIVIAL
    assert classify_mle(6, 1, 0, 5) is Classification.TRIVIAL
    assert classify_mle(13, 27, 1, 3) is Classification.HAMMING_TYPE
    assert classify_mle(5, 16, 1, 4) is Classification.HAMMING_TYPE


def test_classify_rejects_wrong_sphere_count():
    assert classify_mle(23, 2047, 3, 2) is Classification.IMPOSSIBLE
    assert classify_mle(4, 5, 1, 2) is Classification.IMPOSSIBLE


def test_classify_argument_validation():
    with pytest.raises(ValueError):
        classify_mle(0, 1, 0, 2)
    with pytest.raises(ValueError):
        classify_mle(3, 4, 4, 2)


def test_classified_partitions_from_conversions():
    for S in (
        perfect_to_mle(repetition_code(1), 1).partition,
        perfect_to_mle(hamming_code(3, F2), 1).partition,
        perfect_to_mle(vasilev_code(3), 1).partition,
    ):
        assert is_mle(S)
        kind = classify_mle(S.n, S.M, S.t, S.field.q)
        assert kind is not Classification.IMPOSSIBLE
