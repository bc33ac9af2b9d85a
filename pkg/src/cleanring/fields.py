"""Exact coefficient fields: the rationals and the prime fields GF(p).

Both fields expose the same small interface (``zero``, ``one``, coercion by
calling the field, ``inv``, ``format``, ``random_element``) so that the
polynomial, operator and series code never needs to know which one it got.
Elements themselves use ordinary Python operators.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from functools import total_ordering
from typing import Iterator


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface shared by :class:`RationalField` and :class:`PrimeField`."""

    characteristic: int = 0
    name: str = "?"

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def __call__(self, value):
        raise NotImplementedError

    def inv(self, a):
        a = self(a)
        if a == self.zero:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        return self.one / a

    def is_finite(self) -> bool:
        return self.characteristic != 0

    def format(self, a) -> str:
        raise NotImplementedError

    def random_element(self, rng: random.Random, bound: int = 9):
        raise NotImplementedError

    def __repr__(self):
        return self.name


class RationalField(Field):
    """The field of rational numbers, backed by :class:`fractions.Fraction`."""

    characteristic = 0
    name = "Q"
    _zero = Fraction(0)
    _one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if type(value) is Fraction:
            return value
        if isinstance(value, GFElem):
            raise TypeError("cannot coerce a GF(p) element into Q")
        return Fraction(value)

    def format(self, a) -> str:
        return str(Fraction(a))

    def random_element(self, rng, bound=9):
        return Fraction(rng.randint(-bound, bound))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


QQ = RationalField()


@total_ordering
class GFElem:
    """Residue class modulo a prime ``p``; always stored reduced in ``[0, p)``."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        self.residue = residue % modulus
        self.modulus = modulus

    def _coerce(self, other) -> "GFElem":
        if isinstance(other, GFElem):
            if other.modulus != self.modulus:
                raise TypeError(f"GF({self.modulus}) and GF({other.modulus}) elements do not mix")
            return other
        if isinstance(other, int):
            return GFElem(other, self.modulus)
        if isinstance(other, Fraction):
            return GFElem(other.numerator, self.modulus) / GFElem(other.denominator, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GFElem(self.residue + other.residue, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GFElem(self.residue - other.residue, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GFElem(self.residue * other.residue, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return GFElem(-self.residue, self.modulus)

    def __pos__(self):
        return self

    def inverse(self) -> "GFElem":
        if self.residue == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.modulus})")
        return GFElem(pow(self.residue, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return GFElem(pow(self.residue, k, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, GFElem):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __lt__(self, other):
        # Only used to give containers a deterministic order.
        if isinstance(other, GFElem):
            return self.residue < other.residue
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"GFElem({self.residue}, {self.modulus})"

    def __str__(self):
        return str(self.residue)


class PrimeField(Field):
    """GF(p) for a prime ``p``."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p
        self.name = f"GF({p})"
        self._zero = GFElem(0, p)
        self._one = GFElem(1, p)

    @property
    def p(self) -> int:
        return self.characteristic

    def __call__(self, value) -> GFElem:
        if type(value) is GFElem:
            if value.modulus != self.p:
                raise TypeError(f"element of GF({value.modulus}) is not in {self.name}")
            return value
        if isinstance(value, Fraction):
            num = GFElem(value.numerator, self.p)
            return num / GFElem(value.denominator, self.p)
        return GFElem(int(value), self.p)

    def elements(self) -> Iterator[GFElem]:
        for r in range(self.p):
            yield GFElem(r, self.p)

    def format(self, a) -> str:
        return str(self(a).residue)

    def random_element(self, rng, bound=None):
        return GFElem(rng.randrange(self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


_GF_RE = re.compile(r"^(?:gf|GF|F)\(?(\d+)\)?$")


def parse_field(text: str) -> Field:
    """Parse a field spec: ``Q`` (or ``QQ``) for the rationals, ``gf<p>`` for GF(p)."""
    s = text.strip()
    if s in ("Q", "QQ", "q"):
        return QQ
    m = _GF_RE.match(s)
    if not m:
        raise ValueError(f"unrecognized field {text!r}; expected Q or gf<p>")
    return PrimeField(int(m.group(1)))
