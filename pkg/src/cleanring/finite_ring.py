"""Brute-force laboratory for the matrix rings M_n(GF(p)).

Everything here is exhaustive: decompositions are found by running over
every idempotent of the ring, and Dedekind-finiteness is checked over all
pairs of elements. Ring sizes are capped by a budget on ``p**(n*n)``.
"""

from __future__ import annotations

import csv
import functools
import io
import itertools
import json
from dataclasses import dataclass, field as dc_field
from typing import Iterator

import numpy as np

from .fields import GFElem, PrimeField, is_prime
from .poly import Poly, poly_gcd

DEFAULT_BUDGET = 2**20


class BudgetExceeded(ValueError):
    pass


class Mat:
    """Square matrix over GF(p); entries stored as ints reduced into ``[0, p)``."""

    __slots__ = ("p", "n", "rows", "_hash")

    def __init__(self, p: int, rows):
        rows = tuple(tuple(int(v) % p for v in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        self.p = p
        self.n = n
        self.rows = rows
        self._hash = hash((p, rows))

    @classmethod
    def identity(cls, n: int, p: int) -> "Mat":
        return cls(p, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int, p: int) -> "Mat":
        return cls(p, [[0] * n for _ in range(n)])

    @classmethod
    def scalar(cls, n: int, p: int, c: int) -> "Mat":
        return cls(p, [[c if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, p: int, values) -> "Mat":
        values = list(values)
        n = len(values)
        return cls(p, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def elementary(cls, n: int, p: int, i: int, j: int) -> "Mat":
        """Matrix unit ``e_ij`` with 1-based indices."""
        rows = [[0] * n for _ in range(n)]
        rows[i - 1][j - 1] = 1
        return cls(p, rows)

    @classmethod
    def from_flat(cls, n: int, p: int, flat) -> "Mat":
        flat = list(flat)
        return cls(p, [flat[i * n:(i + 1) * n] for i in range(n)])

    @classmethod
    def from_columns(cls, p: int, columns) -> "Mat":
        columns = [list(c) for c in columns]
        n = len(columns)
        return cls(p, [[columns[j][i] for j in range(n)] for i in range(n)])

    @classmethod
    def companion(cls, poly: Poly) -> "Mat":
        """Companion matrix of a monic polynomial over GF(p)."""
        p = poly.field.characteristic
        m = poly.monic()
        d = m.degree
        rows = [[0] * d for _ in range(d)]
        for i in range(1, d):
            rows[i][i - 1] = 1
        for i in range(d):
            rows[i][d - 1] = -int(m[i])
        return cls(p, rows)

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def entry(self, i: int, j: int) -> GFElem:
        return GFElem(self.rows[i][j], self.p)

    def _check(self, other: "Mat"):
        if not isinstance(other, Mat):
            return False
        if other.p != self.p or other.n != self.n:
            raise TypeError(f"M_{self.n}(GF({self.p})) and M_{other.n}(GF({other.p})) do not mix")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return Mat(self.p, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return Mat(self.p, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Mat(self.p, [[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, (int, GFElem)):
            c = int(other)
            return Mat(self.p, [[a * c for a in r] for r in self.rows])
        if not self._check(other):
            return NotImplemented
        cols = list(zip(*other.rows))
        return Mat(self.p, [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    def __rmul__(self, other):
        if isinstance(other, (int, GFElem)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Mat.identity(self.n, self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Mat) and self.p == other.p and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def is_zero(self) -> bool:
        return not any(self.flat)

    def det(self) -> int:
        p = self.p
        m = [list(r) for r in self.rows]
        n = self.n
        det = 1
        for c in range(n):
            pivot = next((r for r in range(c, n) if m[r][c]), None)
            if pivot is None:
                return 0
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = -det
            det = det * m[c][c] % p
            inv = pow(m[c][c], -1, p)
            for r in range(c + 1, n):
                f = m[r][c] * inv % p
                if f:
                    m[r] = [(a - f * b) % p for a, b in zip(m[r], m[c])]
        return det % p

    def inverse(self) -> "Mat":
        p, n = self.p, self.n
        aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(self.rows)]
        rref, pivots = _rref(aug, p)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Mat(p, [row[n:] for row in rref[:n]])

    def rank(self) -> int:
        return len(_rref([list(r) for r in self.rows], self.p)[1])

    def kernel_basis(self) -> list[tuple[int, ...]]:
        """Basis of ``{v : A v = 0}``, as column vectors."""
        p, n = self.p, self.n
        rref, pivots = _rref([list(r) for r in self.rows], p)
        free = [j for j in range(n) if j not in pivots]
        basis = []
        for f in free:
            v = [0] * n
            v[f] = 1
            for row_i, pc in enumerate(pivots):
                v[pc] = -rref[row_i][f] % p
            basis.append(tuple(v))
        return basis

    def image_basis(self) -> list[tuple[int, ...]]:
        """Basis of the column space (pivot columns of ``A``)."""
        _, pivots = _rref([list(r) for r in self.rows], self.p)
        cols = list(zip(*self.rows))
        return [tuple(cols[j]) for j in pivots]

    def to_str(self) -> str:
        return "[" + ",".join("[" + ",".join(str(v) for v in r) + "]" for r in self.rows) + "]"

    __str__ = to_str

    def __repr__(self):
        return f"Mat(p={self.p}, {self.to_str()})"


def _rref(m: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    m = [[v % p for v in r] for r in m]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [v * inv % p for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def parse_mat(text: str, p: int) -> Mat:
    """Read the bracketed row-major form ``[[a,b],[c,d]]``."""
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad matrix literal {text!r}") from exc
    return Mat(p, rows)


def ring_size(n: int, p: int) -> int:
    return p ** (n * n)


def _check_ring(n: int, p: int, budget: int):
    if n < 1:
        raise ValueError("matrix dimension must be positive")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    size = ring_size(n, p)
    if size > budget:
        raise BudgetExceeded(f"M_{n}(GF({p})) has {p}^{n * n} = {size} elements, over the budget {budget}")


def enumerate_ring(n: int, p: int, budget: int = DEFAULT_BUDGET) -> Iterator[Mat]:
    """All ``p**(n*n)`` matrices in lexicographic row-major order."""
    _check_ring(n, p, budget)
    return (Mat.from_flat(n, p, flat) for flat in itertools.product(range(p), repeat=n * n))


def is_idempotent(a: Mat) -> bool:
    return a * a == a


def is_unit(a: Mat) -> bool:
    return a.det() != 0


@functools.lru_cache(maxsize=16)
def _tables(n: int, p: int, budget: int) -> tuple[tuple[Mat, ...], frozenset[Mat]]:
    elements = list(enumerate_ring(n, p, budget))
    idempotents = tuple(a for a in elements if is_idempotent(a))
    units = frozenset(a for a in elements if is_unit(a))
    return idempotents, units


def idempotents(n: int, p: int, budget: int = DEFAULT_BUDGET) -> tuple[Mat, ...]:
    return _tables(n, p, budget)[0]


def units(n: int, p: int, budget: int = DEFAULT_BUDGET) -> frozenset[Mat]:
    return _tables(n, p, budget)[1]


@dataclass(frozen=True)
class CleanWitness:
    idempotent: Mat
    unit: Mat
    commuting: bool

    def is_valid_for(self, a: Mat) -> bool:
        e, u = self.idempotent, self.unit
        return (
            is_idempotent(e)
            and is_unit(u)
            and e + u == a
            and self.commuting == (e * u == u * e)
        )

    def to_dict(self) -> dict:
        return {"idempotent": self.idempotent.to_str(), "unit": self.unit.to_str(), "commuting": self.commuting}


def clean_decompositions(a: Mat, budget: int = DEFAULT_BUDGET) -> list[CleanWitness]:
    """All ``a = e + u``, ``e`` idempotent and ``u`` a unit, commuting or not."""
    idem, unit_set = _tables(a.n, a.p, budget)
    out = []
    for e in idem:
        u = a - e
        if u in unit_set:
            out.append(CleanWitness(e, u, e * u == u * e))
    return out


def strongly_clean_decompositions(a: Mat, budget: int = DEFAULT_BUDGET) -> list[CleanWitness]:
    return [w for w in clean_decompositions(a, budget) if w.commuting]


@dataclass(frozen=True)
class ElementRecord:
    element: Mat
    clean_count: int
    strong_count: int

    @property
    def is_clean(self) -> bool:
        return self.clean_count > 0

    @property
    def is_strongly_clean(self) -> bool:
        return self.strong_count > 0

    @property
    def is_uniquely_strongly_clean(self) -> bool:
        return self.strong_count == 1

    def to_dict(self) -> dict:
        return {
            "element": self.element.to_str(),
            "clean_count": self.clean_count,
            "strong_count": self.strong_count,
            "is_clean": self.is_clean,
            "is_strongly_clean": self.is_strongly_clean,
            "is_uniquely_strongly_clean": self.is_uniquely_strongly_clean,
        }


CSV_COLUMNS = ["element", "clean_count", "strong_count", "is_clean", "is_strongly_clean", "is_uniquely_strongly_clean"]


@dataclass
class ClassificationReport:
    n: int
    p: int
    records: list[ElementRecord] = dc_field(default_factory=list)
    dedekind_finite: bool = True

    @property
    def size(self) -> int:
        return len(self.records)

    @property
    def all_clean(self) -> bool:
        return all(r.is_clean for r in self.records)

    @property
    def all_strongly_clean(self) -> bool:
        return all(r.is_strongly_clean for r in self.records)

    @property
    def uniquely_strongly_clean(self) -> bool:
        return all(r.is_uniquely_strongly_clean for r in self.records)

    def record(self, a: Mat) -> ElementRecord:
        for r in self.records:
            if r.element == a:
                return r
        raise KeyError(a.to_str())

    def non_unique(self) -> list[ElementRecord]:
        return [r for r in self.records if r.strong_count > 1]

    def summary(self) -> dict:
        return {
            "ring": f"M_{self.n}(GF({self.p}))",
            "n": self.n,
            "p": self.p,
            "size": self.size,
            "all_clean": self.all_clean,
            "all_strongly_clean": self.all_strongly_clean,
            "uniquely_strongly_clean": self.uniquely_strongly_clean,
            "dedekind_finite": self.dedekind_finite,
            "not_uniquely_strongly_clean_count": len(self.non_unique()),
        }

    def to_dict(self) -> dict:
        return {"summary": self.summary(), "elements": [r.to_dict() for r in self.records]}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for r in self.records:
            writer.writerow(r.to_dict())
        return buf.getvalue()


def classify_ring(n: int, p: int, budget: int = DEFAULT_BUDGET) -> ClassificationReport:
    report = ClassificationReport(n, p)
    for a in enumerate_ring(n, p, budget):
        ws = clean_decompositions(a, budget)
        report.records.append(ElementRecord(a, len(ws), sum(w.commuting for w in ws)))
    report.dedekind_finite = check_dedekind_finite(n, p, budget)
    return report


def _all_matrices(n: int, p: int) -> np.ndarray:
    flat = np.array(list(itertools.product(range(p), repeat=n * n)), dtype=np.int64)
    return flat.reshape(-1, n, n)


def dedekind_counterexample(n: int, p: int, budget: int = DEFAULT_BUDGET):
    """Return ``(a, b)`` with ``ab = 1`` but ``ba != 1``, or None; checks every pair."""
    _check_ring(n, p, budget)
    mats = _all_matrices(n, p)
    total = len(mats)
    eye = np.eye(n, dtype=np.int64)
    chunk = max(1, 2_000_000 // (total * n * n))
    for start in range(0, total, chunk):
        a = mats[start:start + chunk]
        ab = np.einsum("aij,bjk->abik", a, mats) % p
        hits = np.argwhere((ab == eye).all(axis=(2, 3)))
        for ia, ib in hits:
            ba = (mats[ib] @ a[ia]) % p
            if not (ba == eye).all():
                return Mat(p, a[ia].tolist()), Mat(p, mats[ib].tolist())
    return None


def check_dedekind_finite(n: int, p: int, budget: int = DEFAULT_BUDGET) -> bool:
    return dedekind_counterexample(n, p, budget) is None


def fitting_decompose(a: Mat) -> CleanWitness:
    """Strongly clean decomposition from the Fitting splitting ``ker a^n (+) im a^n``.

    ``e`` is the projection onto the kernel part along the image part: ``a``
    is nilpotent on the kernel (so ``a - 1`` is invertible there) and
    invertible on the image.
    """
    n, p = a.n, a.p
    an = a**n
    kernel = an.kernel_basis()
    image = an.image_basis()
    basis = Mat.from_columns(p, kernel + image)
    proj = Mat.diag(p, [1] * len(kernel) + [0] * len(image))
    e = basis * proj * basis.inverse()
    u = a - e
    return CleanWitness(e, u, e * u == u * e)


def poly_at_matrix(f: Poly, a: Mat) -> Mat:
    acc = Mat.zero(a.n, a.p)
    for c in reversed(f.coeffs):
        acc = acc * a + Mat.scalar(a.n, a.p, int(c))
    return acc


def _solve(columns: list[tuple[int, ...]], target: tuple[int, ...], p: int):
    """Coefficients ``c`` with ``sum c_i columns[i] == target``, or None."""
    k = len(columns)
    aug = [[col[i] for col in columns] + [target[i]] for i in range(len(target))]
    rref, pivots = _rref(aug, p)
    if k in pivots:
        return None
    sol = [0] * k
    for row_i, pc in enumerate(pivots):
        sol[pc] = rref[row_i][k]
    return sol


def min_poly(a: Mat) -> Poly:
    """Monic polynomial of least degree annihilating ``a``."""
    field = PrimeField(a.p)
    powers = [Mat.identity(a.n, a.p).flat]
    current = Mat.identity(a.n, a.p)
    while True:
        current = current * a
        sol = _solve(powers, current.flat, a.p)
        if sol is not None:
            return Poly(field, [-c for c in sol] + [1])
        powers.append(current.flat)


def is_squarefree(f: Poly) -> bool:
    df = f.derivative()
    if df.is_zero():
        # Nonconstant with vanishing derivative means a p-th power.
        return f.degree <= 0
    return poly_gcd(f, df).degree == 0


def is_metaidempotent(a: Mat) -> bool:
    """True iff ``a`` is annihilated by a product of distinct linear factors over GF(p)."""
    m = min_poly(a)
    return is_squarefree(m) and len(m.roots()) == m.degree


def spectral_idempotents(a: Mat) -> list[tuple[GFElem, Mat]]:
    """Eigenvalue/projector pairs ``(c_i, e_i)`` with ``a = sum c_i e_i`` for a metaidempotent ``a``."""
    if not is_metaidempotent(a):
        raise ValueError(f"{a.to_str()} is not metaidempotent")
    roots = min_poly(a).roots()
    field = PrimeField(a.p)
    out = []
    for c in roots:
        lagrange = Poly(field, (1,))
        for d in roots:
            if d != c:
                lagrange = lagrange * Poly(field, (-d, 1)) * field.inv(c - d)
        out.append((c, poly_at_matrix(lagrange, a)))
    return out
