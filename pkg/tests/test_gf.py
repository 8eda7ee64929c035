import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lrcpack.gf import (
    BINARY_MODULI,
    FieldError,
    field_new,
    field_of_order,
    is_irreducible,
    prime_power,
)


def clmul_mod(a, b, modulus, m):
    """Carry-less product reduced by the modulus, bit by bit."""
    prod = 0
    for i in range(m):
        if b >> i & 1:
            prod ^= a << i
    for bit in range(2 * m - 2, m - 1, -1):
        if prod >> bit & 1:
            prod ^= modulus << (bit - m)
    return prod


def poly_mul_mod_p(a, b, modulus, p, m):
    """Product of base-p encoded polynomials, reduced by a monic modulus."""
    da = [(a // p**i) % p for i in range(m)]
    db = [(b // p**i) % p for i in range(m)]
    mod = [(modulus // p**i) % p for i in range(m + 1)]
    prod = [0] * (2 * m)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    for top in range(2 * m - 1, m - 1, -1):
        c = prod[top]
        if c:
            for i in range(m + 1):
                prod[top - m + i] = (prod[top - m + i] - c * mod[i]) % p
    return sum(prod[i] * p**i for i in range(m))


def test_prime_field_gf2():
    F = field_new(2, 1)
    assert F.q == 2
    assert F.primitive_element == 1
    assert F.add(1, 1) == 0
    assert F.mul(1, 1) == 1


def test_gf256_default_generator_has_full_order():
    F = field_new(2, 8)
    assert F.modulus == 0x11D
    assert F.primitive_element == 2
    seen = set()
    x = 1
    for i in range(1, 255):
        x = F.mul(x, 2)
        assert x != 1, f"beta^{i} == 1"
        seen.add(x)
    assert len(seen) == 254
    assert F.mul(x, 2) == 1


def test_non_prime_characteristic():
    with pytest.raises(FieldError, match="not prime"):
        field_new(4, 1)


def test_reducible_modulus_rejected():
    # x^8 + 1 = (x + 1)^8 over GF(2)
    with pytest.raises(FieldError, match="reducible"):
        field_new(2, 8, 0x101)


def test_order_cap():
    with pytest.raises(FieldError, match="cap"):
        field_new(2, 17)


def test_modulus_wrong_degree():
    with pytest.raises(FieldError, match="degree"):
        field_new(2, 8, 0x13)


def test_modulus_as_coefficients():
    assert field_new(2, 8, [1, 0, 1, 1, 1, 0, 0, 0, 1]).modulus == 0x11D


def test_addition_examples():
    F256 = field_new(2, 8)
    assert F256.add(0x53, 0x53) == 0
    assert F256.add(0x53, 0xCA) == 0x99
    F5 = field_new(5)
    assert (F5.element(3) + F5.element(4)).value == 2


def test_beta_to_the_eighth_is_low_modulus_bits():
    F = field_new(2, 8)
    assert F.pow(F.primitive_element, 8) == 0x11D & 0xFF


def test_inverse_in_gf7():
    F = field_new(7)
    assert F.inv(3) == 5
    assert F.element(3).inv().value == 5


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        field_new(5).inv(0)


def test_field_mismatch():
    a = field_new(5).element(1)
    b = field_new(7).element(1)
    with pytest.raises(FieldError, match="mismatch"):
        a + b


def test_element_range():
    with pytest.raises(FieldError):
        field_new(5).element(5)


@pytest.mark.parametrize("m", sorted(BINARY_MODULI))
def test_binary_default_moduli_are_primitive(m):
    F = field_new(2, m)
    assert F.primitive_element == 2
    values = {F.exp(i) for i in range(F.q - 1)}
    assert values == set(range(1, F.q))


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49, 81, 125, 243])
def test_generator_covers_multiplicative_group(q):
    F = field_of_order(q)
    assert len({F.exp(i) for i in range(q - 1)}) == q - 1
    assert F.order(F.primitive_element) == q - 1


@pytest.mark.parametrize("q", [8, 256])
def test_mul_matches_carryless_oracle(q):
    F = field_of_order(q)
    for a in range(0, q, 7 if q > 8 else 1):
        for b in range(q):
            assert F.mul(a, b) == clmul_mod(a, b, F.modulus, F.m)


@pytest.mark.parametrize("q", [9, 25, 27])
def test_mul_matches_polynomial_oracle_odd(q):
    F = field_of_order(q)
    for a in range(q):
        for b in range(q):
            assert F.mul(a, b) == poly_mul_mod_p(a, b, F.modulus, F.p, F.m)


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(6) is None
    assert prime_power(1) is None


def test_irreducibility():
    assert is_irreducible(0x11D, 2)
    assert not is_irreducible(0x101, 2)
    assert is_irreducible(0b111, 2)


FIELDS = [field_new(2, 8), field_new(3, 2), field_new(7), field_new(5, 2), field_new(2, 1)]


@st.composite
def triples(draw):
    F = draw(st.sampled_from(FIELDS))
    el = st.integers(0, F.q - 1)
    return F, draw(el), draw(el), draw(el)


@settings(max_examples=300, deadline=None)
@given(triples())
def test_field_axioms(t):
    F, a, b, c = t
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
    for v in (F.add(a, b), F.mul(a, b), F.sub(a, c)):
        assert 0 <= v < F.q


@settings(max_examples=100, deadline=None)
@given(triples(), st.integers(-20, 300))
def test_pow_matches_repeated_multiplication(t, e):
    F, a, _, _ = t
    if a == 0 and e <= 0:
        return
    expected = 1
    base = a if e >= 0 else F.inv(a)
    for _ in range(abs(e)):
        expected = F.mul(expected, base)
    assert F.pow(a, e) == expected


def test_array_ops_agree_with_scalar():
    import numpy as np

    for F in FIELDS:
        a = np.arange(F.q)
        for b in range(F.q):
            bb = np.full(F.q, b)
            assert list(F.add_arrays(a, bb)) == [F.add(x, b) for x in range(F.q)]
            assert list(F.mul_arrays(a, bb)) == [F.mul(x, b) for x in range(F.q)]
