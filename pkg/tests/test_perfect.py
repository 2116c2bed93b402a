"""Perfect code constructions and their certificates."""

import pytest

from stegocodes import (
    GF,
    BlockCode,
    LinearCode,
    RunConfig,
    Word,
    golay_binary,
    golay_ternary,
    hamming_code,
    min_distance,
    nonlinearity_witness,
    repetition_code,
    sphere_size,
    vasilev_code,
    verify_perfect,
    weight,
)
from stegocodes.errors import BudgetExceededError

F2 = GF(2)

HAMMING_GRID = [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (2, 5)]


@pytest.mark.parametrize("r,q", HAMMING_GRID)
def test_hamming_code_parameters(r, q):
    f = GF(q)
    code = hamming_code(r, f)
    n = (q**r - 1) // (q - 1)
    assert code.n == n
    assert code.k == n - r
    assert code.M == q ** (n - r)


@pytest.mark.parametrize("r,q", HAMMING_GRID)
def test_hamming_code_is_perfect(r, q):
    code = hamming_code(r, GF(q))
    cert = verify_perfect(code, 1)
    assert cert.equal and cert.d_consistent
    assert cert.d == 3


@pytest.mark.parametrize("r,q", [(2, 2), (3, 2), (2, 3)])
def test_hamming_codewords_have_zero_syndrome(r, q):
    code = hamming_code(r, GF(q))
    words = code.codewords()
    assert len(words) == code.M
    for w in words:
        assert all(e == 0 for e in code.syndrome(w).elems)


def test_hamming_r3_check_matrix_is_natural_binary_order():
    code = hamming_code(3, F2)
    assert [r.to_text() for r in code.check_rows] == ["0001111", "0110011", "1010101"]


def test_hamming_r2_is_repetition():
    code = hamming_code(2, F2)
    assert sorted(w.to_text() for w in code.codewords()) == ["000", "111"]


def test_ternary_hamming_4_2():
    code = hamming_code(2, GF(3))
    assert (code.n, code.k) == (4, 2)
    assert code.M == 9
    assert min_distance(code) == 3
    assert verify_perfect(code, 1).equal  # 9 * 9 == 81


def test_golay_binary():
    code = golay_binary()
    assert (code.n, code.k, code.M) == (23, 12, 4096)
    assert min_distance(code) == 7
    cert = verify_perfect(code, 3)
    assert cert.equal and cert.d_consistent
    assert sphere_size(23, 3, 2) * 2**12 == 2**23
    assert min(weight(w) for w in code.codewords() if w.pack()) == 7


def test_golay_ternary():
    code = golay_ternary()
    assert (code.n, code.k, code.M) == (11, 6, 729)
    assert min_distance(code) == 5
    cert = verify_perfect(code, 2)
    assert cert.equal and cert.d_consistent
    assert sphere_size(11, 2, 3) * 3**6 == 3**11


@pytest.mark.parametrize("t", [0, 1, 2, 3])
def test_repetition_codes(t):
    code = repetition_code(t)
    n = 2 * t + 1
    assert code.n == n and code.M == 2
    assert min_distance(code) == n
    cert = verify_perfect(code, t)
    assert cert.equal and cert.d_consistent


def test_repetition_t1_is_example_class_zero():
    code = repetition_code(1)
    assert sorted(w.to_text() for w in code.codewords()) == ["000", "111"]


def test_vasilev_code():
    code = vasilev_code(3)
    assert code.n == 15 and code.M == 2**11
    assert min_distance(code) == 3
    cert = verify_perfect(code, 1)
    assert cert.equal and cert.d_consistent
    assert sphere_size(15, 1, 2) * 2**11 == 2**15


def test_vasilev_is_nonlinear_with_witness():
    code = vasilev_code(3)
    wit = nonlinearity_witness(code)
    assert wit is not None
    a, b = wit
    assert code.contains(a) and code.contains(b)
    assert not code.contains(a + b)


def test_vasilev_budget():
    with pytest.raises(BudgetExceededError):
        vasilev_code(4)  # 2^26 codewords
    with pytest.raises(ValueError):
        vasilev_code(2)


def test_linear_codes_pass_linearity_probe():
    assert nonlinearity_witness(hamming_code(3, F2).as_block()) is None


def test_min_distance_examples():
    assert min_distance(repetition_code(1)) == 3
    assert min_distance(hamming_code(3, F2)) == 3
    assert min_distance(golay_binary()) == 7


def test_min_distance_needs_two_codewords():
    single = BlockCode(F2, 3, [5])
    with pytest.raises(ValueError):
        min_distance(single)


def test_min_distance_budget():
    code = vasilev_code(3)
    with pytest.raises(BudgetExceededError):
        min_distance(code, RunConfig(enumeration_cap=1 << 10, sample_count=1))


def test_min_distance_pairwise_matches_weight_route():
    for code in (hamming_code(3, F2), hamming_code(2, GF(3))):
        assert min_distance(code) == min_distance(code.as_block())


def test_verify_perfect_failure_cases():
    block = hamming_code(3, F2).as_block()
    cert = verify_perfect(block, 1)
    assert cert.equal and cert.sphere_packing_lhs == 128
    # drop one codeword: the count equality breaks
    smaller = BlockCode(F2, 7, block.packed()[1:])
    cert2 = verify_perfect(smaller, 1)
    assert not cert2.equal and cert2.sphere_packing_lhs == 120
    # radius too ambitious: distance consistency breaks
    cert3 = verify_perfect(block, 2)
    assert not cert3.d_consistent


def test_verify_perfect_single_codeword():
    cert = verify_perfect(BlockCode(F2, 2, [0]), 2)
    assert cert.d is None and cert.equal and cert.d_consistent


def test_verify_perfect_whole_space():
    whole = BlockCode(F2, 2, range(4))
    cert = verify_perfect(whole, 0)
    assert cert.equal and cert.d == 1 and cert.d_consistent


def test_check_matrix_rank_enforced():
    with pytest.raises(ValueError):
        LinearCode([Word(F2, [1, 0, 1]), Word(F2, [1, 0, 1])])


def test_block_code_validation():
    with pytest.raises(ValueError):
        BlockCode(F2, 3, [1, 1])
    with pytest.raises(ValueError):
        BlockCode(F2, 3, [9])
    with pytest.raises(ValueError):
        BlockCode(F2, 3, [])
