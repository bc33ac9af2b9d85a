from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cleanring.fields import QQ, GFElem, PrimeField, is_prime, parse_field

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)


def gf_elems(p):
    return st.integers(0, p - 1).map(lambda r: GFElem(r, p))


def test_rational_addition():
    assert QQ(Fraction(1, 2)) + QQ(Fraction(1, 3)) == Fraction(5, 6)


def test_gf2_characteristic():
    F = PrimeField(2)
    assert F.one + F.one == F.zero


def test_gf5_inverse_matches_brute_force():
    F = PrimeField(5)
    oracle = next(b for b in range(5) if (2 * b) % 5 == 1)
    assert F.inv(2) == GFElem(oracle, 5) == GFElem(3, 5)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        QQ.inv(0)
    with pytest.raises(ZeroDivisionError):
        PrimeField(7).inv(0)
    with pytest.raises(ZeroDivisionError):
        GFElem(1, 3) / GFElem(0, 3)


@pytest.mark.parametrize("p", [p for p in range(2, 14) if is_prime(p)])
def test_inverse_exhaustive(p):
    F = PrimeField(p)
    for a in F.elements():
        if a:
            assert F.inv(a) * a == F.one


def test_rationals_stay_reduced():
    a = QQ(Fraction(6, -4))
    assert (a.numerator, a.denominator) == (-3, 2)
    assert QQ(0).denominator == 1


def test_residues_reduced():
    assert GFElem(-1, 7).residue == 6
    assert PrimeField(7)(Fraction(1, 2)) == GFElem(4, 7)


def test_mixing_moduli_rejected():
    with pytest.raises(TypeError):
        GFElem(1, 3) + GFElem(1, 5)


@pytest.mark.parametrize("text,expected", [("Q", QQ), ("gf5", PrimeField(5)), ("GF(7)", PrimeField(7))])
def test_parse_field(text, expected):
    assert parse_field(text) == expected


@pytest.mark.parametrize("text", ["gf4", "gf1", "R", ""])
def test_parse_field_rejects(text):
    with pytest.raises(ValueError):
        parse_field(text)


@given(fractions, fractions, fractions)
def test_rational_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    if a:
        assert QQ.inv(a) * a == 1


@pytest.mark.parametrize("p", [2, 3, 5, 13])
def test_prime_field_axioms(p):
    @given(gf_elems(p), gf_elems(p), gf_elems(p))
    def check(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a and a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == 0 and -(-a) == a

    check()
