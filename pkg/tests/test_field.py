import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quivercurves.errors import FieldDivisionError, FieldMismatchError, ParseError
from quivercurves.field import (
    FieldScalar,
    FieldSpec,
    egcd,
    fs_add,
    fs_inv,
    fs_mul,
    fs_neg,
    fs_pow,
    fs_sub,
    is_prime,
    parse_field,
    parse_scalar,
)


def test_examples(F2, F5, QQ):
    F7 = FieldSpec.prime(7)
    assert fs_add(F5(3), F5(4)) == F5(2)
    assert fs_add(QQ(Fraction(1, 2)), QQ(Fraction(1, 3))) == QQ(Fraction(5, 6))
    assert fs_mul(F7(3), F7(5)) == F7(1)
    assert fs_sub(F5(1), F5(3)).value == 3
    assert fs_neg(F5(0)).value == 0


def test_inverse(F2, F5, QQ):
    assert fs_inv(F5(2)) == F5(3)
    assert fs_inv(QQ(Fraction(-2, 3))) == QQ(Fraction(-3, 2))
    assert fs_inv(F2(1)) == F2(1)
    with pytest.raises(FieldDivisionError):
        fs_inv(F5(0))
    with pytest.raises(ZeroDivisionError):
        QQ(0).inverse()


def test_pow(F5, QQ):
    assert fs_pow(F5(2), 4) == F5(1)
    assert fs_pow(F5(0), 0) == F5(1)
    assert fs_pow(QQ(7), 0) == QQ(1)
    assert fs_pow(QQ(Fraction(1, 2)), 3) == QQ(Fraction(1, 8))
    with pytest.raises(ValueError):
        fs_pow(F5(2), -1)


def test_mismatch(F5, F2):
    with pytest.raises(FieldMismatchError):
        F5(1) + F2(1)


def test_spec_validation():
    with pytest.raises(ValueError):
        FieldSpec.prime(4)
    with pytest.raises(ValueError):
        FieldSpec.prime(1)
    assert is_prime(2) and is_prime(2_147_483_647) and not is_prime(91)
    g, s, t = egcd(240, 46)
    assert g == 2 and 240 * s + 46 * t == 2


def test_canonical_forms(F5, QQ):
    assert F5(-1).value == 4
    assert F5(Fraction(1, 2)).value == 3
    q = QQ(Fraction(4, -6))
    assert q.value.numerator == -2 and q.value.denominator == 3
    with pytest.raises(FieldDivisionError):
        F5(Fraction(1, 5))


def test_text_forms(F5, QQ):
    assert parse_scalar("-3/6", QQ).to_text() == "-1/2"
    assert parse_scalar("7", F5).to_text() == "2"
    assert parse_scalar("1/2", F5) == F5(3)
    assert QQ(4).to_text() == "4"
    with pytest.raises(ParseError):
        parse_scalar("abc", F5)
    assert parse_field("p:7") == FieldSpec.prime(7)
    assert parse_field("q") == FieldSpec.rational()
    with pytest.raises(ParseError):
        parse_field("p:9")


def test_immutable(F5):
    a = F5(2)
    with pytest.raises(AttributeError):
        a.value = 3


@pytest.mark.parametrize("p", [2, 3, 5])
def test_axioms_exhaustive(p):
    F = FieldSpec.prime(p)
    els = F.elements()
    zero, one = F.zero(), F.one()
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a and a * b == b * a
    for a in els:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if not a.is_zero():
            assert a * a.inverse() == one
        assert 0 <= a.value < p


rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q.numerator) < 10**9)


@given(rationals, rationals, rationals)
def test_axioms_rational(x, y, z):
    F = FieldSpec.rational()
    a, b, c = F(x), F(y), F(z)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == F.zero()
    if not a.is_zero():
        assert a * a.inverse() == F.one()
    for r in (a + b, a * b, a - c, -b):
        assert r.value.denominator > 0
        assert Fraction(r.value.numerator, r.value.denominator) == r.value


@given(st.integers(min_value=-10**6, max_value=10**6), st.integers(min_value=0, max_value=40))
def test_pow_matches_repeated_product(v, n):
    F = FieldSpec.prime(7)
    a = F(v)
    expect = F.one()
    for _ in range(n):
        expect = expect * a
    assert a**n == expect


def test_scalar_is_field_scalar(F5):
    assert isinstance(F5(3), FieldScalar)
