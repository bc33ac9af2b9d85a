"""Truncated Laurent series ``R((t))`` over a field or a matrix ring.

A series is stored as ``t**valuation * (c_0 + c_1 t + ... + c_{L-1} t**(L-1))``
and is only known modulo ``t**(valuation + L)``; ``L`` is the relative
precision and ``valuation + L`` the absolute one (the ``m`` of ``O(t^m)``).
All equality statements are therefore "to precision".

The coefficient ring may be noncommutative; ``t`` is central, so products
keep the order of the coefficient factors.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .fields import QQ, Field, PrimeField, parse_field
from .finite_ring import Mat, is_unit as mat_is_unit, parse_mat
from .parser import format_term, parse_ratfunc
from .ratfunc import RatFunc

DEFAULT_PRECISION = 16


class NotAUnitError(ArithmeticError):
    pass


class FieldBase:
    """A field used as the coefficient ring."""

    commutative = True

    def __init__(self, field: Field):
        self.field = field
        self.zero = field.zero
        self.one = field.one
        self.name = field.name

    def coerce(self, c):
        return self.field(c)

    def is_unit(self, c) -> bool:
        return c != 0

    def inverse(self, c):
        return self.field.inv(c)

    def random_element(self, rng: random.Random):
        return self.field.random_element(rng)

    def __eq__(self, other):
        return isinstance(other, FieldBase) and other.field == self.field

    def __hash__(self):
        return hash(self.field)

    def __repr__(self):
        return self.name


class MatrixBase:
    """The noncommutative coefficient ring M_n(GF(p))."""

    commutative = False

    def __init__(self, n: int, p: int):
        self.n, self.p = n, p
        self.zero = Mat.zero(n, p)
        self.one = Mat.identity(n, p)
        self.name = f"M{n}(GF({p}))"

    def coerce(self, c):
        if isinstance(c, Mat):
            return c
        return Mat.scalar(self.n, self.p, int(c))

    def is_unit(self, c) -> bool:
        return mat_is_unit(c)

    def inverse(self, c):
        return c.inverse()

    def random_element(self, rng: random.Random):
        return Mat.from_flat(self.n, self.p, [rng.randrange(self.p) for _ in range(self.n * self.n)])

    def __eq__(self, other):
        return isinstance(other, MatrixBase) and (other.n, other.p) == (self.n, self.p)

    def __hash__(self):
        return hash((self.n, self.p))

    def __repr__(self):
        return self.name


_MAT_BASE_RE = re.compile(r"^m(\d+)\s*(?:gf|GF)\(?(\d+)\)?$", re.IGNORECASE)


def parse_base(text: str):
    """``Q``, ``gf<p>`` or ``m<n>gf<p>`` (e.g. ``m2gf2``)."""
    m = _MAT_BASE_RE.match(text.strip())
    if m:
        p = int(m.group(2))
        PrimeField(p)  # validates primality
        return MatrixBase(int(m.group(1)), p)
    return FieldBase(parse_field(text))


class TruncatedLaurent:
    __slots__ = ("ring", "valuation", "coeffs")

    def __init__(self, ring, valuation: int, coeffs):
        coeffs = [ring.coerce(c) for c in coeffs]
        if not coeffs:
            raise ValueError("a truncated series needs precision >= 1")
        # Strip leading zeros; the absolute precision stays put.
        k = 0
        while k < len(coeffs) - 1 and coeffs[k] == ring.zero:
            k += 1
        if coeffs[k] == ring.zero:
            k = 0  # zero to precision: keep the given shape
        self.ring = ring
        self.valuation = valuation + k
        self.coeffs = tuple(coeffs[k:])

    @classmethod
    def zero(cls, ring, precision: int = DEFAULT_PRECISION, valuation: int = 0) -> "TruncatedLaurent":
        return cls(ring, valuation, [ring.zero] * precision)

    @classmethod
    def monomial(cls, ring, degree: int, cap: int, coeff=None) -> "TruncatedLaurent":
        """``coeff * t**degree`` known modulo ``t**cap``."""
        if cap <= degree:
            raise ValueError(f"cannot represent t^{degree} modulo t^{cap}")
        c = ring.one if coeff is None else ring.coerce(coeff)
        return cls(ring, degree, [c] + [ring.zero] * (cap - degree - 1))

    @classmethod
    def one(cls, ring, precision: int = DEFAULT_PRECISION) -> "TruncatedLaurent":
        return cls.monomial(ring, 0, precision)

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    @property
    def cap(self) -> int:
        """Absolute precision: the series is known modulo ``t**cap``."""
        return self.valuation + len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == self.ring.zero for c in self.coeffs)

    def leading(self):
        return self.coeffs[0]

    def coeff(self, k: int):
        if k >= self.cap:
            raise ValueError(f"coefficient of t^{k} is beyond the precision O(t^{self.cap})")
        if k < self.valuation:
            return self.ring.zero
        return self.coeffs[k - self.valuation]

    def _same_ring(self, other):
        if not isinstance(other, TruncatedLaurent):
            return False
        if other.ring != self.ring:
            raise TypeError(f"series over {self.ring} and {other.ring} do not mix")
        return True

    def __add__(self, other):
        if not self._same_ring(other):
            return NotImplemented
        v = min(self.valuation, other.valuation)
        cap = min(self.cap, other.cap)
        return TruncatedLaurent(self.ring, v, [self.coeff(k) + other.coeff(k) for k in range(v, cap)])

    def __neg__(self):
        return TruncatedLaurent(self.ring, self.valuation, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not self._same_ring(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not self._same_ring(other):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        length = min(len(a), len(b))
        out = []
        for k in range(length):
            acc = self.ring.zero
            for i in range(k + 1):
                acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncatedLaurent(self.ring, self.valuation + other.valuation, out)

    def agrees_with(self, other: "TruncatedLaurent") -> bool:
        """Equal modulo ``t**min(cap)``."""
        self._same_ring(other)
        cap = min(self.cap, other.cap)
        lo = min(self.valuation, other.valuation)
        return all(self.coeff(k) == other.coeff(k) for k in range(lo, cap))

    def __eq__(self, other):
        if not isinstance(other, TruncatedLaurent) or other.ring != self.ring:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero() and self.cap == other.cap
        return self.valuation == other.valuation and self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_zero():
            return hash(("zero", self.cap))
        return hash((self.valuation, self.coeffs))

    def is_unit(self) -> bool:
        return not self.is_zero() and self.ring.is_unit(self.leading())

    def to_str(self) -> str:
        return format_series(self)

    __str__ = to_str

    def __repr__(self):
        return f"TruncatedLaurent({self.ring}, {self.to_str()!r})"

    def to_dict(self) -> dict:
        return {
            "base": self.ring.name,
            "valuation": self.valuation,
            "precision": self.precision,
            "cap": self.cap,
            "text": self.to_str(),
        }


def lseries_add(a: TruncatedLaurent, b: TruncatedLaurent) -> TruncatedLaurent:
    return a + b


def lseries_mul(a: TruncatedLaurent, b: TruncatedLaurent) -> TruncatedLaurent:
    return a * b


def invert_unit(u: TruncatedLaurent) -> TruncatedLaurent:
    """Two-sided inverse to the precision of ``u``; the leading coefficient must be a unit."""
    ring = u.ring
    if u.is_zero():
        raise NotAUnitError(f"{u} is zero to precision")
    c0 = u.leading()
    if not ring.is_unit(c0):
        raise NotAUnitError(f"leading coefficient {c0} of {u} is not invertible")
    c0_inv = ring.inverse(c0)
    c = u.coeffs
    b = [c0_inv]
    for k in range(1, len(c)):
        acc = ring.zero
        for i in range(1, k + 1):
            acc = acc + c[i] * b[k - i]
        b.append(-(c0_inv * acc))
    return TruncatedLaurent(ring, -u.valuation, b)


@dataclass(frozen=True)
class TwoUnitDecomposition:
    x: TruncatedLaurent
    u: TruncatedLaurent
    u2: TruncatedLaurent
    N: int

    def checks(self) -> dict[str, bool]:
        one = TruncatedLaurent.one(self.x.ring, max(self.u.precision, 1))
        results = {"sum": self.u + self.u2 == self.x}
        results["commute"] = (self.u * self.u2 - self.u2 * self.u).is_zero()
        for name, w in (("u", self.u), ("u2", self.u2)):
            try:
                inv = invert_unit(w)
            except NotAUnitError:
                results[f"{name}_unit"] = False
                continue
            right, left = w * inv, inv * w
            results[f"{name}_unit"] = right.agrees_with(one) and left.agrees_with(one)
        return results

    def verified(self) -> bool:
        return all(self.checks().values())

    def to_dict(self) -> dict:
        return {
            "x": self.x.to_str(),
            "N": self.N,
            "u": self.u.to_str(),
            "u2": self.u2.to_str(),
            "checks": self.checks(),
        }


def two_unit_decompose(x: TruncatedLaurent) -> TwoUnitDecomposition:
    """Write ``x = (t^N + x) + (-t^N)`` with ``x`` in ``t^(N+1) R[[t]]``."""
    ring = x.ring
    if x.is_zero():
        # Any N works; 0 unless the known window ends before t^0.
        N = min(0, x.cap - 1)
    else:
        N = x.valuation - 1
    t_n = TruncatedLaurent.monomial(ring, N, x.cap)
    return TwoUnitDecomposition(x, t_n + x, -t_n, N)


def _from_ratfunc(f: RatFunc, ring: FieldBase, precision: int | None, cap: int | None) -> TruncatedLaurent:
    if f.is_zero():
        if cap is not None:
            return TruncatedLaurent.zero(ring, 1, cap - 1)
        return TruncatedLaurent.zero(ring, precision or DEFAULT_PRECISION)
    a, b = f.num.valuation(), f.den.valuation()
    v = a - b
    num, den = f.num.shift(-a), f.den.shift(-b)
    length = cap - v if cap is not None else (precision or DEFAULT_PRECISION)
    if length < 1:
        return TruncatedLaurent.zero(ring, 1, cap - 1)
    d0_inv = ring.field.inv(den[0])
    out = []
    for k in range(length):
        acc = num[k]
        for i in range(1, min(k, den.degree) + 1):
            acc = acc - den[i] * out[k - i]
        out.append(acc * d0_inv)
    return TruncatedLaurent(ring, v, out)


def laurent_expand(f: RatFunc, precision: int = DEFAULT_PRECISION) -> TruncatedLaurent:
    """Laurent expansion at ``t = 0`` of a rational function, ``precision`` coefficients."""
    return _from_ratfunc(f, FieldBase(f.field), precision, None)


_O_TERM = re.compile(r"(?:^|\+)\s*O\(\s*t\s*(?:\^\s*(-?\d+))?\s*\)\s*$")
_MAT_TERM = re.compile(r"^(\[.*\]|\d+)?\s*(\*)?\s*(t(?:\s*\^\s*(-?\d+))?)?$")


def _split_top_level(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_series(text: str, ring, precision: int = DEFAULT_PRECISION) -> TruncatedLaurent:
    """Read a series in the printed form, e.g. ``t^-1 + 1 + O(t^15)``.

    Over a field the terms may be any rational-function expression in the
    usual grammar. Over a matrix ring each term is ``[[..]]*t^k``, ``c*t^k``
    (``c`` a scalar) or ``t^k``. Without an ``O(...)`` term the series gets
    ``precision`` coefficients.
    """
    text = text.strip()
    cap = None
    m = _O_TERM.search(text)
    if m:
        cap = int(m.group(1)) if m.group(1) is not None else 1
        text = text[:m.start()].strip()
    if isinstance(ring, FieldBase):
        f = parse_ratfunc(text, ring.field) if text else RatFunc.constant(ring.field, 0)
        return _from_ratfunc(f, ring, precision, cap)
    terms: dict[int, Mat] = {}
    for part in _split_top_level(text) if text else []:
        tm = _MAT_TERM.match(part)
        if not part or not tm or (tm.group(1) is None and tm.group(3) is None):
            raise ValueError(f"bad matrix-series term {part!r}")
        if tm.group(2) and not (tm.group(1) and tm.group(3)):
            raise ValueError(f"bad matrix-series term {part!r}")
        coeff = ring.one if tm.group(1) is None else (
            parse_mat(tm.group(1), ring.p) if tm.group(1).startswith("[") else ring.coerce(int(tm.group(1)))
        )
        if tm.group(3) is None:
            k = 0
        else:
            k = int(tm.group(4)) if tm.group(4) is not None else 1
        terms[k] = terms.get(k, ring.zero) + coeff
    nonzero = sorted(k for k, c in terms.items() if c != ring.zero)
    if cap is None:
        v = nonzero[0] if nonzero else 0
        cap = v + precision
    if not nonzero or nonzero[0] >= cap:
        return TruncatedLaurent.zero(ring, 1, cap - 1)
    v = nonzero[0]
    return TruncatedLaurent(ring, v, [terms.get(k, ring.zero) for k in range(v, cap)])


def format_series(s: TruncatedLaurent) -> str:
    ring = s.ring
    parts = []
    for i, c in enumerate(s.coeffs):
        if c == ring.zero:
            continue
        k = s.valuation + i
        if isinstance(ring, FieldBase):
            negative, text = format_term(ring.field, c, 0) if k == 0 else _field_term(ring.field, c, k)
            if not parts:
                parts.append(f"-{text}" if negative else text)
            else:
                parts.append(f"- {text}" if negative else f"+ {text}")
        else:
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            text = c.to_str() + (f"*{mono}" if mono else "")
            parts.append(text if not parts else f"+ {text}")
    big_o = f"O(t^{s.cap})"
    parts.append(big_o if not parts else f"+ {big_o}")
    return " ".join(parts)


def _field_term(field: Field, c, k: int) -> tuple[bool, str]:
    if k > 0:
        return format_term(field, c, k)
    negative, mag = format_term(field, c, 0)
    mono = f"t^{k}"
    return negative, mono if mag == "1" else f"{mag}*{mono}"


def random_series(ring, rng: random.Random, precision: int = DEFAULT_PRECISION,
                  valuation_range: tuple[int, int] = (-3, 3)) -> TruncatedLaurent:
    v = rng.randint(*valuation_range)
    coeffs = [ring.random_element(rng) for _ in range(precision)]
    while coeffs[0] == ring.zero:
        coeffs[0] = ring.random_element(rng)
    return TruncatedLaurent(ring, v, coeffs)


QQ_BASE = FieldBase(QQ)
