"""Dense univariate polynomials in ``t`` over an exact field."""

from __future__ import annotations

from functools import total_ordering

from .fields import Field


@total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial. Compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __add__(self, other):
        if isinstance(other, (int, _MinusInfinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-inf"


NEG_INF = _MinusInfinity()


class Poly:
    """Polynomial with coefficient list ``coeffs[i]`` = coefficient of ``t**i``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and ``degree is NEG_INF``.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, field: Field, cs: list) -> "Poly":
        # cs already holds field elements; only strip trailing zeros.
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        p.field = field
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def t(cls, field: Field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: Field, c) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field: Field, n: int, c=1) -> "Poly":
        return cls(field, [0] * n + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field is not self.field and other.field != self.field:
                raise TypeError(f"polynomials over {self.field} and {other.field} do not mix")
            return other
        try:
            return Poly(self.field, (other,))
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._raw(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly._raw(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly(self.field, (1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x):
        """Evaluate by Horner's rule."""
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = self.field.inv(self.lead())
        return Poly._raw(self.field, [c * inv for c in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def valuation(self) -> int:
        """Order of vanishing at ``t = 0``; zero polynomial raises."""
        if self.is_zero():
            raise ValueError("valuation of the zero polynomial")
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise AssertionError("unreachable")

    def shift(self, k: int) -> "Poly":
        """Multiply by ``t**k``; for ``k < 0`` the low coefficients must vanish."""
        if k >= 0:
            return Poly(self.field, [0] * k + list(self.coeffs))
        if any(c != 0 for c in self.coeffs[:-k]):
            raise ValueError(f"polynomial not divisible by t^{-k}")
        return Poly(self.field, self.coeffs[-k:])

    def roots(self) -> list:
        """Roots in a finite field, by exhaustive evaluation."""
        if not self.field.is_finite():
            raise ValueError("exhaustive root search needs a finite field")
        return [a for a in self.field.elements() if self(a) == 0]

    def to_str(self) -> str:
        from .parser import format_poly

        return format_poly(self)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({self.field}, {self.to_str()!r})"


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Long division: ``p == q * quot + rem`` with ``deg rem < deg q``."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    field = p.field
    rem = list(p.coeffs)
    dq = q.degree
    if p.degree < dq:
        return Poly(field), p
    inv_lead = field.inv(q.lead())
    quot = [field.zero] * (len(rem) - dq)
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k] * inv_lead
        if not c:
            continue
        quot[k - dq] = c
        for j, b in enumerate(q.coeffs):
            rem[k - dq + j] = rem[k - dq + j] - c * b
    return Poly._raw(field, quot), Poly._raw(field, rem[:dq])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()
