from fractions import Fraction

import pytest
from hypothesis import given

from cleanring.fields import QQ, PrimeField
from cleanring.poly import NEG_INF, Poly, poly_divmod, poly_gcd

from conftest import polys

t = Poly.t(QQ)


def P(*cs, field=QQ):
    return Poly(field, cs)


def test_divmod_example_checked_by_expansion():
    p, q = t**2 + 1, t + 1
    quot, rem = poly_divmod(p, q)
    assert quot == t - 1 and rem == P(2)
    assert q * quot + rem == p


def test_divide_by_one():
    p = P(3, 0, -1, 5)
    assert poly_divmod(p, P(1)) == (p, P())


def test_degree_too_small():
    assert poly_divmod(t, t**2) == (P(), t)


def test_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_divmod(t, P())


def test_zero_degree_sentinel():
    z = P()
    assert z.degree is NEG_INF
    assert NEG_INF < -10**9 and not (0 < NEG_INF)
    assert (z * t).degree is NEG_INF
    assert P(0, 0, 0) == z


def test_gcd_monic():
    a = (t - 1) * (t + 2) * 3
    b = (t - 1) * (t**2 + 1) * Fraction(1, 2)
    assert poly_gcd(a, b) == t - 1


def test_derivative_char_p():
    F = PrimeField(3)
    s = Poly.t(F)
    assert (s**3 + 1).derivative().is_zero()


@given(polys(QQ), polys(QQ))
def test_divmod_property(p, q):
    if q.is_zero():
        return
    quot, rem = poly_divmod(p, q)
    assert q * quot + rem == p
    assert rem.degree < q.degree


@given(polys(PrimeField(5)), polys(PrimeField(5)))
def test_divmod_property_gf5(p, q):
    if q.is_zero():
        return
    quot, rem = poly_divmod(p, q)
    assert q * quot + rem == p
    assert rem.degree < q.degree
