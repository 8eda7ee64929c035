import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lrcpack.codes import (
    CodeError,
    Codeword,
    DistanceBudgetExceeded,
    RepairError,
    SystematicCode,
    code_new,
    encode,
    erase,
    erase_and_repair,
    mds_check,
    min_distance,
    rs_systematic,
    update_efficiency,
)
from lrcpack.gf import field_new
from lrcpack.locality import verify_locality

from .conftest import brute_min_distance

GF2 = field_new(2)
GF8 = field_new(2, 3)


def test_code_dimensions(code_16_8, code_14_8):
    assert (code_16_8.n, code_16_8.k) == (16, 8)
    assert (code_14_8.n, code_14_8.k) == (14, 8)
    rep = code_new(GF2, 1, [[1]])
    assert (rep.n, rep.k) == (2, 1)


def test_code_dimension_mismatch():
    with pytest.raises(CodeError):
        code_new(GF2, 2, [[1, 0]])
    with pytest.raises(CodeError):
        code_new(GF2, 2, [[1], [1, 0]])
    with pytest.raises(CodeError, match="n > k"):
        code_new(GF2, 1, [[]])


def test_foreign_elements_rejected():
    with pytest.raises(CodeError):
        code_new(GF2, 1, [[2]])
    with pytest.raises(CodeError):
        code_new(GF2, 1, [[field_new(3).element(1)]])


def test_weights(code_16_8):
    assert code_16_8.column_weights == (3,) * 8
    assert code_16_8.row_weights == (4,) * 8


def test_encode_zero_and_units(code_16_8):
    assert encode(code_16_8, [0] * 8).symbols == (0,) * 16
    G = code_16_8.generator()
    for i in range(8):
        e = [0] * 8
        e[i] = 1
        word = encode(code_16_8, e)
        assert list(word.symbols) == G[i]
        assert sum(word.symbols) == code_16_8.row_weights[i]


def test_encode_first_unit_checks(code_16_8):
    word = encode(code_16_8, [1, 0, 0, 0, 0, 0, 0, 0])
    assert {i + 1 for i, s in enumerate(word.symbols) if s} == {1, 10, 15, 16}


def test_encode_length_mismatch(code_16_8):
    with pytest.raises(CodeError):
        encode(code_16_8, [1, 0])


def test_min_distance_known(code_16_8, code_14_8):
    assert min_distance(code_16_8) == 4
    assert min_distance(code_14_8) == 3
    assert min_distance(code_new(GF2, 1, [[1]])) == 2


def test_min_distance_budget(code_16_8):
    with pytest.raises(DistanceBudgetExceeded):
        min_distance(code_16_8, budget=100)


@pytest.mark.parametrize("q, n, k", [(2, 7, 4), (3, 6, 3), (4, 5, 3), (5, 6, 2), (8, 6, 3), (9, 5, 2)])
def test_min_distance_matches_brute_force_on_random_codes(q, n, k):
    rng = random.Random(q * 100 + n)
    F = field_new(*{2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 8: (2, 3), 9: (3, 2)}[q])
    for _ in range(4):
        code = code_new(F, k, [[rng.randrange(q) for _ in range(n - k)] for _ in range(k)])
        assert min_distance(code) == brute_min_distance(code)


def test_update_efficiency(code_16_8):
    assert update_efficiency(code_16_8) == 4
    assert update_efficiency(code_new(GF2, 1, [[1]])) == 2


def test_rs_gf8_is_mds():
    code = rs_systematic(GF8, 8, 4)
    assert (code.n, code.k) == (8, 4)
    assert brute_min_distance(code) == 5
    assert min_distance(code) == 5
    cert = mds_check(code)
    assert cert.level == "full" and cert.minors_checked == cert.total_minors == 69


def test_rs_binary_parity():
    code = rs_systematic(GF2, 3, 2)
    assert code.P == ((1,), (1,))
    assert min_distance(code) == 2


@pytest.mark.parametrize("q, n, k", [(5, 6, 3), (4, 5, 2), (7, 8, 4), (9, 10, 3), (8, 9, 5)])
def test_rs_extended_lengths_are_mds(q, n, k):
    from lrcpack.gf import field_of_order

    code = rs_systematic(field_of_order(q), n, k)
    assert min_distance(code) == n - k + 1
    assert mds_check(code).level == "full"


def test_rs_gf256_16_8():
    code = rs_systematic(field_new(2, 8), 16, 8)
    assert all(x for row in code.P for x in row)
    cert = mds_check(code, effort=20000)
    assert cert.level == "full"
    assert code.row_weights == (9,) * 8


def test_rs_gf256_sampled_certificate():
    code = rs_systematic(field_new(2, 8), 16, 8)
    cert = mds_check(code, effort=500, seed=3)
    assert cert.level == "partial"
    assert cert.minors_checked == 64 + 28 * 28 + 500


def test_rs_rejects_lengths():
    with pytest.raises(CodeError):
        rs_systematic(GF8, 10, 4)
    with pytest.raises(CodeError):
        rs_systematic(GF8, 4, 4)


def test_mds_check_zero_entry():
    code = code_new(GF8, 2, [[1, 0], [1, 1]])
    cert = mds_check(code)
    assert cert.level == "failed"
    assert cert.witness == ((1,), (2,))


def test_mds_check_binary_code_fails(code_16_8):
    cert = mds_check(code_16_8)
    assert not cert.ok
    rows, cols = cert.witness
    P = code_16_8.P
    assert len(rows) == 1 and P[rows[0] - 1][cols[0] - 1] == 0


def test_mds_check_agrees_with_distance():
    rng = random.Random(11)
    for _ in range(30):
        code = code_new(GF8, 3, [[rng.randrange(8) for _ in range(3)] for _ in range(3)])
        assert mds_check(code).ok == (brute_min_distance(code) == 4)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 7), min_size=4, max_size=4), st.lists(st.integers(0, 7), min_size=4, max_size=4))
def test_encode_is_linear(m1, m2):
    code = rs_systematic(GF8, 8, 4)
    s = [GF8.add(a, b) for a, b in zip(m1, m2)]
    lhs = encode(code, s).symbols
    rhs = tuple(GF8.add(a, b) for a, b in zip(encode(code, m1).symbols, encode(code, m2).symbols))
    assert lhs == rhs


def test_distance_never_exceeds_sampled_weights(code_14_8):
    d = min_distance(code_14_8)
    rng = random.Random(0)
    for _ in range(50):
        m = [rng.randrange(2) for _ in range(8)]
        if any(m):
            assert d <= sum(1 for s in encode(code_14_8, m).symbols if s)


def test_codeword_json_round_trip():
    w = Codeword((1, None, 0, 3))
    assert w.erased == (2,)
    assert Codeword.from_dict(w.to_dict()) == w


def test_code_json_round_trip(code_14_8):
    assert SystematicCode.from_dict(code_14_8.to_dict()) == code_14_8
    code = rs_systematic(field_new(2, 8), 12, 6)
    assert SystematicCode.from_dict(code.to_dict()) == code


@pytest.mark.parametrize("fixture, delta", [("code_16_8", 4), ("code_14_8", 3)])
def test_repair_every_small_erasure_set(request, fixture, delta):
    code = request.getfixturevalue(fixture)
    report = verify_locality(code, 3, delta)
    rng = random.Random(5)
    for size in range(delta):
        for erased in combinations(range(1, code.k + 1), size):
            m = [rng.randrange(2) for _ in range(code.k)]
            word = encode(code, m)
            assert erase_and_repair(code, erase(word, erased), report) == word


def test_repair_mixed_information_and_check_erasures(code_16_8):
    report = verify_locality(code_16_8, 3, 4)
    word = encode(code_16_8, [1, 0, 1, 1, 0, 1, 0, 1])
    for erased in combinations(range(1, 17), 3):
        assert erase_and_repair(code_16_8, erase(word, erased), report) == word


def test_repair_nothing_erased(code_16_8):
    report = verify_locality(code_16_8, 3, 4)
    word = encode(code_16_8, [1] * 8)
    assert erase_and_repair(code_16_8, word, report) == word


def test_repair_too_many_erasures(code_16_8):
    report = verify_locality(code_16_8, 3, 4)
    word = encode(code_16_8, [1] * 8)
    with pytest.raises(RepairError, match="exceed"):
        erase_and_repair(code_16_8, erase(word, [1, 2, 3, 4]), report)


def test_repair_report_mismatch(code_16_8, code_14_8):
    report = verify_locality(code_14_8, 3, 3)
    word = encode(code_16_8, [1] * 8)
    with pytest.raises(RepairError, match="report is for"):
        erase_and_repair(code_16_8, erase(word, [1]), report)


def test_repair_over_large_field():
    from lrcpack import known
    from lrcpack.constructions import construction_b

    res = construction_b(rs_systematic(field_new(2, 8), 16, 8), known.resolvable_8(2))
    rng = random.Random(2)
    m = [rng.randrange(256) for _ in range(8)]
    word = encode(res.code, m)
    for erased in combinations(range(1, 9), 2):
        assert erase_and_repair(res.code, erase(word, erased), res.report) == word
