"""Rational functions ``k(t)``, the local ring ``k[t]_(t)`` and its splitting.

Every element of ``k[t]_(t)`` is a polynomial part plus a proper part
(numerator degree below denominator degree); :func:`split` computes that
decomposition by one long division.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field
from .poly import Poly, poly_divmod, poly_gcd


class NotLocalError(ValueError):
    """Raised when a rational function has a pole at ``t = 0``."""


class RatFunc:
    """Reduced fraction ``num / den`` with ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly(num.field, (1,))
        if num.field != den.field:
            raise TypeError("numerator and denominator over different fields")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = num, Poly(num.field, (1,))
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = num.field.inv(den.lead())
            num, den = num * lead, den * lead
        self.num = num
        self.den = den

    @classmethod
    def make(cls, num: Poly, den: Poly | None = None) -> "RatFunc":
        return cls(num, den)

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls(p)

    @classmethod
    def constant(cls, field: Field, c) -> "RatFunc":
        return cls(Poly(field, (c,)))

    @classmethod
    def t(cls, field: Field) -> "RatFunc":
        return cls(Poly.t(field))

    @property
    def field(self) -> Field:
        return self.num.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_local(self) -> bool:
        return self.den(self.field.zero) != 0

    def is_proper(self) -> bool:
        return self.num.degree < self.den.degree

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise TypeError(f"rational functions over {self.field} and {other.field} do not mix")
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        try:
            return RatFunc(Poly(self.field, (other,)))
        except (TypeError, ValueError):
            return NotImplemented

    # Sums, differences and products of local elements stay local; the
    # subclass hook keeps the result in the most specific class.
    def _ring_result(self, other, value: "RatFunc") -> "RatFunc":
        return value

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            value = RatFunc(self.num + other.num, self.den)
        else:
            value = RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)
        return self._ring_result(other, value)

    __radd__ = __add__

    def __neg__(self):
        return self._ring_result(self, RatFunc(-self.num, self.den))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        value = RatFunc(self.num * other.num, self.den * other.den)
        return self._ring_result(other, value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k >= 0:
            return RatFunc(self.num**k, self.den**k)
        if self.is_zero():
            raise ZeroDivisionError("negative power of zero")
        return RatFunc(self.den ** (-k), self.num ** (-k))

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, RatFunc) else other
        if other is NotImplemented:
            return NotImplemented
        return self.field == other.field and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        from .parser import format_ratfunc

        return format_ratfunc(self)

    def __repr__(self):
        return f"{type(self).__name__}({self.field}, {str(self)!r})"


class LocalElem(RatFunc):
    """Element of ``k[t]_(t)``: reduced denominator does not vanish at 0."""

    __slots__ = ()

    def __init__(self, num, den=None):
        if isinstance(num, RatFunc):
            num, den = num.num, num.den
        super().__init__(num, den)
        if not self.is_local():
            raise NotLocalError(f"{RatFunc.__str__(self)} has a pole at t = 0")

    def _ring_result(self, other, value):
        if other.is_local():
            return LocalElem(value)
        return value


def is_local(f: RatFunc) -> bool:
    return f.is_local()


def to_local(f: RatFunc) -> LocalElem:
    """View a rational function as an element of ``k[t]_(t)``; raises :class:`NotLocalError`."""
    if isinstance(f, LocalElem):
        return f
    return LocalElem(f)


@dataclass(frozen=True)
class SplitPair:
    """Polynomial part ``v0`` and proper part ``v1`` of a local element."""

    v0: Poly
    v1: LocalElem

    def total(self) -> LocalElem:
        return LocalElem(RatFunc(self.v0)) + self.v1


def split(f: RatFunc) -> SplitPair:
    f = to_local(f)
    quot, rem = poly_divmod(f.num, f.den)
    return SplitPair(quot, LocalElem(rem, f.den))


def eval_at_zero(f: RatFunc):
    f = to_local(f)
    zero = f.field.zero
    return f.num(zero) / f.den(zero)


@dataclass(frozen=True)
class Finite:
    value: object

    def __str__(self):
        return str(self.value)


class _Infinite:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinite"

    __str__ = __repr__


INFINITE = _Infinite()


def eval_at_infinity(f: RatFunc):
    """Value at ``t = oo``: ``Finite(c)`` or :data:`INFINITE`."""
    dn, dd = f.num.degree, f.den.degree
    if dn < dd:
        return Finite(f.field.zero)
    if dn == dd:
        return Finite(f.num.lead() / f.den.lead())
    return INFINITE
