"""The five generator endomorphisms of ``V = k[t]_(t)`` and identity checking.

Operators act on :class:`~cleanring.ratfunc.LocalElem` values. A word
``[g1, g2, ..., gm]`` means the composite ``g1 o g2 o ... o gm``: the
rightmost generator is applied first, as for maps written on the left of
their arguments.

Equality of operators is only ever checked pointwise on a finite probe set.
A passing check is evidence on those probes, not a proof.
"""

from __future__ import annotations

import enum
import functools
import random
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .fields import Field
from .parser import format_ratfunc
from .poly import Poly
from .ratfunc import (
    INFINITE,
    LocalElem,
    RatFunc,
    eval_at_infinity,
    eval_at_zero,
    split,
    to_local,
)


class PreconditionError(ValueError):
    pass


class Generator(enum.Enum):
    Y = "y"
    X = "x"
    E = "e"
    INV_Y_MINUS_1 = "iy1"
    INV_X_MINUS_E = "ixe"
    IDENTITY = "id"


def _t(f: LocalElem) -> LocalElem:
    return LocalElem(RatFunc.t(f.field))


def apply_y(f: RatFunc) -> LocalElem:
    """Multiplication by ``t``."""
    f = to_local(f)
    return f * _t(f)


def apply_x(f: RatFunc) -> LocalElem:
    """``f -> (f - f(0)) / t``; exact because ``t`` divides the numerator of ``f - f(0)``."""
    f = to_local(f)
    num = f.num - f.den * eval_at_zero(f)
    return LocalElem(num.shift(-1), f.den)


def apply_e(f: RatFunc) -> LocalElem:
    """Projection onto the polynomial part."""
    return LocalElem(RatFunc(split(f).v0))


def apply_inv_y_minus_1(f: RatFunc) -> LocalElem:
    f = to_local(f)
    t_minus_1 = Poly(f.field, (-1, 1))
    return LocalElem(f.num, f.den * t_minus_1)


def inv_x_on_proper(f: RatFunc) -> LocalElem:
    """Preimage under ``x`` of a proper element, staying inside the proper part.

    With ``c`` the value of ``t*f`` at infinity, ``t*f - c`` is proper and
    ``x`` sends it back to ``f``.
    """
    f = to_local(f)
    if not f.is_proper():
        raise PreconditionError(f"{format_ratfunc(f)} is not proper")
    tf = apply_y(f)
    c = eval_at_infinity(tf)
    assert c is not INFINITE
    return tf - c.value


def _x_on_poly(p: Poly) -> Poly:
    return Poly(p.field, p.coeffs[1:])


def inv_x_minus_1_on_poly(p: Poly) -> Poly:
    # x is nilpotent on polynomials of bounded degree, so the Neumann series ends.
    total = Poly(p.field)
    term = p
    while not term.is_zero():
        total = total + term
        term = _x_on_poly(term)
    return -total


def apply_inv_x_minus_e(f: RatFunc) -> LocalElem:
    parts = split(f)
    on_poly = LocalElem(RatFunc(inv_x_minus_1_on_poly(parts.v0)))
    return on_poly + inv_x_on_proper(parts.v1)


_GENERATOR_MAPS = {
    Generator.Y: apply_y,
    Generator.X: apply_x,
    Generator.E: apply_e,
    Generator.INV_Y_MINUS_1: apply_inv_y_minus_1,
    Generator.INV_X_MINUS_E: apply_inv_x_minus_e,
    Generator.IDENTITY: to_local,
}


@functools.lru_cache(maxsize=4096)
def _apply_cached(g: Generator, f: LocalElem) -> LocalElem:
    return _GENERATOR_MAPS[g](f)


def apply_generator(g: Generator, f: RatFunc) -> LocalElem:
    return _apply_cached(g, to_local(f))


class OperatorExpr:
    """Formal linear combination of words in the generators.

    ``a * b`` composes (``b`` first) when both are operators and scales when
    one side is a scalar.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[object, Sequence[Generator]]] = ()):
        merged: dict[tuple[Generator, ...], object] = {}
        for scalar, word in terms:
            word = tuple(g for g in word if g is not Generator.IDENTITY)
            merged[word] = merged.get(word, 0) + scalar
        self.terms = tuple((c, w) for w, c in merged.items() if c != 0)

    @classmethod
    def word(cls, *gens: Generator) -> "OperatorExpr":
        return cls([(1, gens)])

    @classmethod
    def identity(cls) -> "OperatorExpr":
        return cls([(1, ())])

    def __add__(self, other):
        if not isinstance(other, OperatorExpr):
            other = OperatorExpr.identity() * other
        return OperatorExpr(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return OperatorExpr((-c, w) for c, w in self.terms)

    def __sub__(self, other):
        if not isinstance(other, OperatorExpr):
            other = OperatorExpr.identity() * other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, OperatorExpr):
            return OperatorExpr(
                (a * b, wa + wb) for a, wa in self.terms for b, wb in other.terms
            )
        return OperatorExpr((c * other, w) for c, w in self.terms)

    def __rmul__(self, scalar):
        return OperatorExpr((scalar * c, w) for c, w in self.terms)

    def __call__(self, f: RatFunc) -> LocalElem:
        return apply_operator(self, f)

    def __eq__(self, other):
        # Formal (syntactic) equality only.
        return isinstance(other, OperatorExpr) and set(self.terms) == set(other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for c, w in self.terms:
            word = " ".join(g.value for g in w) or "id"
            parts.append(word if c == 1 else f"{c}*({word})")
        return " + ".join(parts)

    def __repr__(self):
        return f"OperatorExpr({str(self)!r})"


ID = OperatorExpr.identity()
Y = OperatorExpr.word(Generator.Y)
X = OperatorExpr.word(Generator.X)
E = OperatorExpr.word(Generator.E)
IY1 = OperatorExpr.word(Generator.INV_Y_MINUS_1)
IXE = OperatorExpr.word(Generator.INV_X_MINUS_E)


def apply_operator(op: OperatorExpr, f: RatFunc) -> LocalElem:
    f = to_local(f)
    result = LocalElem(RatFunc(Poly(f.field)))
    for scalar, word in op.terms:
        value = f
        for g in reversed(word):
            value = apply_generator(g, value)
        result = result + value * f.field(scalar)
    return result


def parse_word(text: str) -> OperatorExpr:
    """Whitespace-separated generator names (``y x e iy1 ixe id``), leftmost applied last."""
    names = {g.value: g for g in Generator}
    gens = []
    for name in text.split():
        if name not in names:
            raise ValueError(f"unknown generator {name!r}; expected one of {' '.join(names)}")
        gens.append(names[name])
    return OperatorExpr.word(*gens)


def canonical_probes(field: Field) -> list[LocalElem]:
    from .parser import parse_ratfunc

    texts = ["1", "t", "t^2", "t^3", "1/(1-t)", "t/(1-t)", "(1+t^2)/(1+t)", "1/(1+t)"]
    return [to_local(parse_ratfunc(s, field)) for s in texts]


def random_local(field: Field, rng: random.Random, max_degree: int = 4) -> LocalElem:
    num = Poly(field, [field.random_element(rng, 5) for _ in range(rng.randint(0, max_degree) + 1)])
    den_coeffs = [field.random_element(rng, 5) for _ in range(rng.randint(0, max_degree) + 1)]
    while den_coeffs[0] == 0:
        den_coeffs[0] = field.random_element(rng, 5)
    return LocalElem(num, Poly(field, den_coeffs))


@dataclass(frozen=True)
class ProbeSet:
    probes: tuple[LocalElem, ...]
    seed: int = 0

    def __post_init__(self):
        if not self.probes:
            raise ValueError("a probe set must be nonempty")

    @classmethod
    def canonical(cls, field: Field, seed: int = 0, count: int = 20) -> "ProbeSet":
        rng = random.Random(seed)
        extra = [random_local(field, rng) for _ in range(count)]
        return cls(tuple(canonical_probes(field) + extra), seed)

    @property
    def field(self) -> Field:
        return self.probes[0].field

    def __len__(self):
        return len(self.probes)

    def __iter__(self):
        return iter(self.probes)

    def index_of(self, f: RatFunc) -> int | None:
        for i, p in enumerate(self.probes):
            if p == f:
                return i
        return None


@dataclass(frozen=True)
class Failure:
    index: int
    probe: LocalElem
    lhs: LocalElem
    rhs: LocalElem

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "probe": format_ratfunc(self.probe),
            "lhs": format_ratfunc(self.lhs),
            "rhs": format_ratfunc(self.rhs),
        }


@dataclass
class IdentityReport:
    passed: bool
    probes_checked: int
    failures: list[Failure] = dc_field(default_factory=list)


def check_identity(lhs: OperatorExpr, rhs: OperatorExpr, probes: ProbeSet) -> IdentityReport:
    failures = []
    for i, f in enumerate(probes):
        a, b = apply_operator(lhs, f), apply_operator(rhs, f)
        if a != b:
            failures.append(Failure(i, f, a, b))
    failures.sort(key=lambda fl: fl.index)
    return IdentityReport(not failures, len(probes), failures)


PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class CheckResult:
    name: str
    status: str
    probes_checked: int
    failures: list[Failure] = dc_field(default_factory=list)
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "probes_checked": self.probes_checked,
            "failures": [f.to_dict() for f in self.failures],
            "detail": self.detail,
        }


@dataclass
class PropositionReport:
    field: str
    seed: int
    probe_count: int
    checks: list[CheckResult]

    def passed(self, strict: bool = False) -> bool:
        bad = {FAIL, SKIPPED} if strict else {FAIL}
        return not any(c.status in bad for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "field": self.field,
            "seed": self.seed,
            "probe_count": self.probe_count,
            "passed": self.passed(),
            "checks": [c.to_dict() for c in self.checks],
        }

    def format_table(self) -> str:
        width = max(len(c.name) for c in self.checks)
        lines = [f"field {self.field}, {self.probe_count} probes (seed {self.seed})"]
        for c in self.checks:
            note = c.detail or f"on {c.probes_checked} probes"
            lines.append(f"  {c.name:<{width}}  {c.status.upper():<7}  {note}")
            for fl in c.failures[:3]:
                lines.append(f"      probe {fl.index}: {format_ratfunc(fl.lhs)} != {format_ratfunc(fl.rhs)}")
        lines.append("overall: " + ("PASS" if self.passed() else "FAIL"))
        return "\n".join(lines)


def _identity_check(name, lhs, rhs, probes) -> CheckResult:
    rep = check_identity(lhs, rhs, probes)
    return CheckResult(name, PASS if rep.passed else FAIL, rep.probes_checked, rep.failures)


def _witness_check(name, op, witness_text, expected_text, probes, must_equal=True) -> CheckResult:
    """Evaluate ``op`` at one named probe; SKIPPED when that probe is absent."""
    from .parser import parse_ratfunc

    witness = to_local(parse_ratfunc(witness_text, probes.field))
    expected = to_local(parse_ratfunc(expected_text, probes.field))
    idx = probes.index_of(witness)
    if idx is None:
        return CheckResult(name, SKIPPED, 0, detail=f"witness {witness_text} not in probe set")
    value = apply_operator(op, witness)
    ok = (value == expected) if must_equal else (value != expected)
    rel = "=" if value == expected else "!="
    detail = f"at {format_ratfunc(witness)}: {format_ratfunc(value)} {rel} {format_ratfunc(expected)}"
    failures = [] if ok else [Failure(idx, witness, value, expected)]
    return CheckResult(name, PASS if ok else FAIL, 1, failures, detail)


def verify_main_proposition(probes: ProbeSet) -> PropositionReport:
    """Check that ``x`` and ``y`` are strongly clean one-sided inverses, on ``probes``."""
    y_minus_1 = Y - ID
    x_minus_e = X - E
    checks = [
        _identity_check("x y = 1", X * Y, ID, probes),
        _witness_check("y x != 1", Y * X, "1", "1", probes, must_equal=False),
        _witness_check("(y x)(1) = 0", Y * X, "1", "0", probes),
        _identity_check("e e = e", E * E, E, probes),
        _identity_check("e x = x e", E * X, X * E, probes),
        _identity_check("(x - e)(x - e)^-1 = 1", x_minus_e * IXE, ID, probes),
        _identity_check("(x - e)^-1 (x - e) = 1", IXE * x_minus_e, ID, probes),
        _identity_check("(y - 1)(y - 1)^-1 = 1", y_minus_1 * IY1, ID, probes),
        _identity_check("(y - 1)^-1 (y - 1) = 1", IY1 * y_minus_1, ID, probes),
        _identity_check("y = 1 + (y - 1)", Y, ID + y_minus_1, probes),
        _identity_check("1 1 = 1", ID * ID, ID, probes),
        _identity_check("1 (y - 1) = (y - 1) 1", ID * y_minus_1, y_minus_1 * ID, probes),
        _identity_check("x = e + (x - e)", X, E + x_minus_e, probes),
        _identity_check("e (x - e) = (x - e) e", E * x_minus_e, x_minus_e * E, probes),
        # Why the trivial idempotents fail for x.
        _witness_check("x kills 1", X, "1", "0", probes),
        _witness_check("x fixes 1/(1-t)", X, "1/(1-t)", "1/(1-t)", probes),
    ]
    return PropositionReport(str(probes.field), probes.seed, len(probes), checks)
