from fractions import Fraction

import pytest
from hypothesis import given

from cleanring.fields import QQ, PrimeField
from cleanring.parser import ParseError, format_ratfunc, parse_ratfunc, tokenize
from cleanring.poly import Poly
from cleanring.ratfunc import RatFunc

from conftest import GF5, local_elems

t = Poly.t(QQ)


def test_parse_fraction():
    f = parse_ratfunc("t/(1-t)", QQ)
    assert f.num == -t and f.den == t - 1


def test_parse_precedence():
    assert parse_ratfunc("1 + 2*t^2", QQ) == RatFunc(t**2 * 2 + 1)
    assert parse_ratfunc("-t^2", QQ) == RatFunc(-(t**2))
    assert parse_ratfunc("1 - t - t", QQ) == RatFunc(1 - t * 2)
    assert parse_ratfunc("t/2/t", QQ) == RatFunc.constant(QQ, Fraction(1, 2))


def test_parse_canonical():
    assert parse_ratfunc("(1+t^2)/(1+t)", QQ) == RatFunc(t**2 + 1, t + 1)


def test_negative_exponent():
    assert parse_ratfunc("t^-2", QQ) == RatFunc(Poly(QQ, [1]), t**2)


@pytest.mark.parametrize("text", ["1/0", "t/(t-t)", "0^-1"])
def test_zero_denominator(text):
    with pytest.raises(ZeroDivisionError):
        parse_ratfunc(text, QQ)


@pytest.mark.parametrize("text,pos", [("1 + * t", 4), ("(t + 1", 6), ("2x", 1), ("t^t", 2), ("t^2^3", 3), ("", 0)])
def test_syntax_error_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_ratfunc(text, QQ)
    assert info.value.position == pos


def test_tokens():
    kinds = [tok.kind for tok in tokenize("12*t^3")]
    assert kinds == ["int", "op", "t", "op", "int", "end"]


def test_gf_literals_reduce():
    F = PrimeField(5)
    assert parse_ratfunc("7", F) == RatFunc.constant(F, 2)


@pytest.mark.parametrize("field", [QQ, GF5])
def test_print_parse_roundtrip(field):
    @given(local_elems(field))
    def check(f):
        assert parse_ratfunc(format_ratfunc(f), field) == f

    check()


def test_roundtrip_non_integer_coefficients():
    f = RatFunc(Poly(QQ, [QQ(1) / 3, QQ(-5) / 2]), Poly(QQ, [QQ(7) / 4, 0, 1]))
    assert parse_ratfunc(format_ratfunc(f), QQ) == f
