"""Cyclotomic scalar arithmetic: frozen oracles, field axioms, parsing."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from taftgal.field import (
    FieldError,
    ParseError,
    ScalarDivisionError,
    arith,
    cyclotomic_polynomial,
    make_field,
    parse_scalar,
    primitive_root,
)

F = Fraction

# frozen from the standard tables of cyclotomic polynomials (little-endian)
KNOWN_CYCLOTOMIC = {
    1: [-1, 1],
    2: [1, 1],
    3: [1, 1, 1],
    4: [1, 0, 1],                # z^2 + 1
    5: [1, 1, 1, 1, 1],          # z^4 + z^3 + z^2 + z + 1
    6: [1, -1, 1],               # z^2 - z + 1
    8: [1, 0, 0, 0, 1],          # z^4 + 1
    9: [1, 0, 0, 1, 0, 0, 1],
    10: [1, -1, 1, -1, 1],
    12: [1, 0, -1, 0, 1],        # z^4 - z^2 + 1
    15: [1, -1, 0, 1, -1, 1, 0, -1, 1],
}


def test_cyclotomic_polynomials_match_tables():
    for N, coeffs in KNOWN_CYCLOTOMIC.items():
        assert list(cyclotomic_polynomial(N)) == [F(c) for c in coeffs], N


def test_cyclotomic_product_recovers_z_pow_N_minus_1():
    # independent identity: prod over d|N of Phi_d = z^N - 1
    from taftgal.field import _poly_mul, ONE, ZERO

    for N in (1, 2, 3, 4, 6, 8, 12, 18, 20, 24):
        prod = [ONE]
        for d in range(1, N + 1):
            if N % d == 0:
                prod = _poly_mul(prod, list(cyclotomic_polynomial(d)))
        target = [ZERO] * (N + 1)
        target[0], target[N] = -ONE, ONE
        assert prod == target, N


def test_make_field_basic():
    K = make_field(4)
    assert K.degree == 2
    assert K.N == 4
    i = K.zeta
    assert i * i == K.from_rational(-1)
    assert (i ** 4) == K.one
    with pytest.raises(FieldError):
        make_field(0)


def test_primitive_root_orders():
    for N in range(1, 25):
        K = make_field(N)
        for n in range(1, N + 1):
            if N % n != 0:
                with pytest.raises(FieldError):
                    primitive_root(K, n)
                continue
            q = primitive_root(K, n)
            assert q ** n == K.one, (N, n)
            for m in range(1, n):
                assert q ** m != K.one, (N, n, m)


def test_inverse_frozen_example():
    # 1/(1 + zeta_3) in Q(zeta_3): (1+z)(-z) = -z - z^2 = 1 since 1+z+z^2=0
    K = make_field(3)
    s = K.one + K.zeta
    inv = s.inverse()
    assert inv == -K.zeta
    assert s * inv == K.one


def test_parse_examples():
    K = make_field(4)
    assert parse_scalar("1/2*z^2 - 3", K) == K.from_rational(F(-7, 2))  # z^2 = -1
    assert parse_scalar("z^-1", K) == -K.zeta  # i^-1 = -i
    assert parse_scalar("(1+z)*(1-z)", K) == K.from_rational(2)
    assert parse_scalar("-z", K) == -K.zeta
    assert parse_scalar("2^3", K) == K.from_rational(8)
    with pytest.raises(ParseError):
        parse_scalar("z +", K)
    with pytest.raises(ParseError):
        parse_scalar("w", K)
    with pytest.raises(ScalarDivisionError):
        parse_scalar("1/(z^2+1)", K)  # dividing by zero element


def test_arith_dispatch():
    K = make_field(5)
    a = K.zeta
    b = K.one + K.zeta
    assert arith(a, b, "add") == a + b
    assert arith(a, b, "sub") == a - b
    assert arith(a, b, "mul") == a * b
    assert arith(a, b, "div") == a / b
    assert arith(a, 3, "pow") == a ** 3
    assert arith(a, a, "eq") is True
    assert arith(a, b, "eq") is False
    with pytest.raises(FieldError):
        arith(a, b, "mod")
    with pytest.raises(FieldError):
        arith(a, a, "pow")
    with pytest.raises(ScalarDivisionError):
        arith(a, K.zero, "div")


def _scalars(K, max_coeff=6):
    coeff = st.integers(-max_coeff, max_coeff).map(
        lambda n: F(n, 2) if n % 3 == 0 else F(n)
    )
    return st.lists(coeff, min_size=K.degree, max_size=K.degree).map(K.scalar)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_field_axioms(data):
    K = make_field(data.draw(st.sampled_from([3, 4, 5, 8, 12])))
    a = data.draw(_scalars(K))
    b = data.draw(_scalars(K))
    c = data.draw(_scalars(K))
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + K.zero == a
    assert a * K.one == a
    assert a - a == K.zero
    if not b.is_zero():
        assert (a / b) * b == a
        assert b * b.inverse() == K.one


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_print_parse_round_trip(data):
    K = make_field(data.draw(st.sampled_from([1, 2, 3, 4, 8, 12])))
    a = data.draw(_scalars(K))
    assert parse_scalar(a.to_string(), K) == a


def test_mixed_field_arithmetic_rejected():
    K3, K4 = make_field(3), make_field(4)
    with pytest.raises(FieldError):
        K3.zeta + K4.zeta
    assert (K3.zeta == K4.zeta) is False


def test_pow_negative_and_zero():
    K = make_field(8)
    a = K.one + K.zeta
    assert a ** 0 == K.one
    assert a ** -2 == (a * a).inverse()
    assert K.zeta ** -1 == K.zeta ** 7
