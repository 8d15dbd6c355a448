import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from octoforge.fields import (RATIONAL, FieldMismatchError, FieldSpec, Fp,
                              is_zero, parse_scalar, render_scalar,
                              scalar_arith)

F5 = FieldSpec.prime(5)
F7 = FieldSpec.prime(7)


def test_parse_reduces_rationals():
    assert parse_scalar("6/4", RATIONAL) == Fraction(3, 2)


def test_parse_normalizes_negative_zero():
    assert parse_scalar("-0", RATIONAL) == Fraction(0)


def test_parse_prime_residue():
    assert parse_scalar("7", F5) == Fp(5, 2)


def test_parse_prime_fraction_uses_inverse():
    # 1/2 = 3 in F_5 since 2*3 = 6 = 1
    assert parse_scalar("1/2", F5) == Fp(5, 3)


@pytest.mark.parametrize("bad", ["", "1/2/3", "a", "1.5", "--2", "1/ 2"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad, RATIONAL)


def test_parse_rejects_zero_denominator():
    with pytest.raises(ValueError, match="denominator"):
        parse_scalar("1/0", RATIONAL)


def test_parse_rejects_denominator_divisible_by_p():
    with pytest.raises(ValueError, match="divisible"):
        parse_scalar("3/10", F5)


def test_arith_examples():
    assert scalar_arith("add", Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert scalar_arith("div", Fraction(1), Fraction(-4)) == Fraction(-1, 4)
    assert scalar_arith("mul", Fp(5, 3), Fp(5, 4)) == Fp(5, 2)


def test_arith_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        scalar_arith("div", Fraction(1), Fraction(0))
    with pytest.raises(ZeroDivisionError):
        scalar_arith("div", Fp(5, 1), Fp(5, 0))


def test_arith_field_mismatch():
    with pytest.raises(FieldMismatchError):
        scalar_arith("add", Fp(5, 1), Fp(7, 1))
    with pytest.raises(FieldMismatchError):
        scalar_arith("add", Fraction(1), Fp(5, 1))
    with pytest.raises(FieldMismatchError):
        Fraction(1) + Fp(5, 1)


def test_is_zero():
    assert is_zero(Fraction(0))
    assert is_zero(Fp(5, 5))
    assert not is_zero(Fraction(-1, 7))


def test_characteristic_two_unconstructible():
    with pytest.raises(ValueError):
        FieldSpec.prime(2)


@pytest.mark.parametrize("p", [1, 0, -3, 9, 15, 21])
def test_non_primes_rejected(p):
    with pytest.raises(ValueError):
        FieldSpec.prime(p)


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        FieldSpec("real")


def test_prime_residues_canonical():
    assert Fp(5, -1).r == 4
    assert Fp(5, 12).r == 2
    assert (Fp(7, 3) - Fp(7, 5)).r == 5


@pytest.mark.parametrize("field", [RATIONAL, F7], ids=["Q", "F7"])
def test_field_axioms_randomized(field):
    # exact equality on 1000 random triples, no tolerance
    rng = random.Random(20240901)
    for _ in range(1000):
        x, y, z = (field.from_int(rng.randint(-50, 50)) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + field.zero == x
        assert x * field.one == x
        assert is_zero(x + (-x))
        if not is_zero(y):
            assert y * (field.one / y) == field.one


@settings(max_examples=300, derandomize=True, database=None)
@given(st.fractions())
def test_rational_render_parse_roundtrip(x):
    assert parse_scalar(render_scalar(x, RATIONAL), RATIONAL) == x


@settings(max_examples=300, derandomize=True, database=None)
@given(st.integers())
def test_prime_render_parse_roundtrip(n):
    x = F7.from_int(n)
    assert parse_scalar(render_scalar(x, F7), F7) == x


def test_render_checks_field():
    with pytest.raises(FieldMismatchError):
        render_scalar(Fp(5, 1), RATIONAL)
    with pytest.raises(FieldMismatchError):
        render_scalar(Fraction(1), F5)


def test_coerce_accepts_int_str_scalar():
    assert RATIONAL.coerce(3) == Fraction(3)
    assert RATIONAL.coerce("-2/6") == Fraction(-1, 3)
    assert F5.coerce("9") == Fp(5, 4)
    with pytest.raises(FieldMismatchError):
        F5.coerce(Fraction(1, 2))
