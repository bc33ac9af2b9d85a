import csv
import io
import itertools
import json

import pytest

from cleanring.fields import PrimeField
from cleanring.finite_ring import (
    BudgetExceeded,
    CSV_COLUMNS,
    Mat,
    check_dedekind_finite,
    classify_ring,
    clean_decompositions,
    dedekind_counterexample,
    enumerate_ring,
    fitting_decompose,
    idempotents,
    is_idempotent,
    is_metaidempotent,
    is_unit,
    min_poly,
    parse_mat,
    poly_at_matrix,
    spectral_idempotents,
    strongly_clean_decompositions,
)
from cleanring.poly import Poly


def raw_mul(a, b, n, p):
    return tuple(
        sum(a[i * n + k] * b[k * n + j] for k in range(n)) % p for i in range(n) for j in range(n)
    )


def raw_det2(a, p):
    return (a[0] * a[3] - a[1] * a[2]) % p


@pytest.mark.parametrize("n,p,size", [(2, 2, 16), (2, 3, 81), (3, 2, 512)])
def test_enumerate_counts(n, p, size):
    elems = list(enumerate_ring(n, p))
    assert len(elems) == size == len(set(elems))
    assert elems == list(enumerate_ring(n, p))


def test_enumerate_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_ring(4, 3)
    with pytest.raises(BudgetExceeded):
        enumerate_ring(2, 3, budget=80)


def test_idempotent_unit_basics():
    one = Mat.identity(2, 2)
    nil = Mat(2, [[0, 1], [0, 0]])
    assert is_idempotent(one) and is_unit(one)
    assert not is_idempotent(nil) and not is_unit(nil)


def test_idempotent_count_matches_raw_oracle():
    oracle = sum(1 for a in itertools.product(range(2), repeat=4) if raw_mul(a, a, 2, 2) == a)
    assert oracle == 8
    assert len(idempotents(2, 2)) == 8


def test_decompositions_match_raw_oracle():
    # Independent enumeration with tuples for every element of M2(GF(3)).
    n, p = 2, 3
    elems = list(itertools.product(range(p), repeat=4))
    idem = [e for e in elems if raw_mul(e, e, n, p) == e]
    for a in elems:
        expected = set()
        for e in idem:
            u = tuple((x - y) % p for x, y in zip(a, e))
            if raw_det2(u, p) and raw_mul(e, u, n, p) == raw_mul(u, e, n, p):
                expected.add((e, u))
        got = {(w.idempotent.flat, w.unit.flat) for w in strongly_clean_decompositions(Mat.from_flat(n, p, a))}
        assert got == expected


def test_two_decompositions_of_named_element():
    x = Mat.elementary(2, 2, 1, 2) + Mat.elementary(2, 2, 2, 1) + Mat.elementary(2, 2, 2, 2)
    assert x == Mat(2, [[0, 1], [1, 1]])
    one, zero = Mat.identity(2, 2), Mat.zero(2, 2)
    pairs = {(w.idempotent, w.unit) for w in strongly_clean_decompositions(x)}
    assert (zero, x) in pairs and (one, x - one) in pairs


def test_zero_decomposes_only_as_one_minus_one():
    for p in (2, 3):
        ws = strongly_clean_decompositions(Mat.zero(2, p))
        assert [(w.idempotent, w.unit) for w in ws] == [(Mat.identity(2, p), -Mat.identity(2, p))]


def test_identity_has_zero_plus_one():
    one = Mat.identity(2, 3)
    assert (Mat.zero(2, 3), one) in {(w.idempotent, w.unit) for w in strongly_clean_decompositions(one)}


@pytest.mark.parametrize("n,p", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_witness_invariants_exhaustive(n, p):
    for a in enumerate_ring(n, p):
        clean = clean_decompositions(a)
        strong = strongly_clean_decompositions(a)
        assert len(clean) >= len(strong)
        for w in clean:
            assert w.is_valid_for(a)
        assert all(w.commuting for w in strong)


def test_classify_m2_gf2():
    rep = classify_ring(2, 2)
    assert rep.size == 16
    assert rep.all_clean and rep.all_strongly_clean and rep.dedekind_finite
    assert not rep.uniquely_strongly_clean
    assert rep.record(Mat(2, [[0, 1], [1, 1]])).strong_count == 2


def test_classify_gf2():
    rep = classify_ring(1, 2)
    assert rep.all_strongly_clean and rep.uniquely_strongly_clean and rep.dedekind_finite
    assert [r.strong_count for r in rep.records] == [1, 1]


def test_classify_gf3():
    rep = classify_ring(1, 3)
    assert rep.record(Mat(3, [[2]])).strong_count == 2
    assert not rep.uniquely_strongly_clean
    assert [r.strong_count for r in rep.records] == [1, 1, 2]


def test_classification_export():
    rep = classify_ring(2, 2)
    rows = list(csv.DictReader(io.StringIO(rep.to_csv())))
    assert list(rows[0].keys()) == CSV_COLUMNS
    assert len(rows) == 16
    for row in rows:
        a = parse_mat(row["element"], 2)
        assert rep.record(a).strong_count == int(row["strong_count"])
    data = json.loads(rep.to_json())
    assert data["summary"]["all_strongly_clean"] is True
    assert data["summary"]["uniquely_strongly_clean"] is False


@pytest.mark.parametrize("n,p", [(2, 2), (1, 5), (3, 2), (2, 3)])
def test_dedekind_finite(n, p):
    assert check_dedekind_finite(n, p)
    assert dedekind_counterexample(n, p) is None


def test_fitting_nilpotent():
    a = Mat(2, [[0, 1], [0, 0]])
    w = fitting_decompose(a)
    assert w.idempotent == Mat.identity(2, 2)
    assert w.unit == Mat(2, [[1, 1], [0, 1]])
    assert w.is_valid_for(a) and w.commuting


def test_fitting_invertible():
    a = Mat(3, [[1, 2], [0, 1]])
    w = fitting_decompose(a)
    assert w.idempotent == Mat.zero(2, 3) and w.unit == a


def test_fitting_diag():
    a = Mat.diag(2, [1, 0])
    w = fitting_decompose(a)
    assert w.idempotent == Mat.diag(2, [0, 1]) and w.unit == Mat.identity(2, 2)
    assert w.is_valid_for(a)


@pytest.mark.parametrize("n,p", [(2, 2), (2, 3), (3, 2)])
def test_fitting_in_brute_force_list(n, p):
    for a in enumerate_ring(n, p):
        w = fitting_decompose(a)
        assert w.is_valid_for(a) and w.commuting
        assert w in strongly_clean_decompositions(a)


def _annihilates(coeffs, a):
    F = PrimeField(a.p)
    return poly_at_matrix(Poly(F, coeffs), a).is_zero()


def test_min_poly_examples():
    F2, F3 = PrimeField(2), PrimeField(3)
    assert min_poly(Mat.identity(2, 2)) == Poly(F2, [-1, 1])
    assert min_poly(Mat(2, [[0, 1], [0, 0]])) == Poly(F2, [0, 0, 1])
    d = Mat.diag(3, [0, 1, 2])
    m = min_poly(d)
    assert m == Poly(F3, [0, -1, 0, 1])
    assert poly_at_matrix(m, d).is_zero()


@pytest.mark.parametrize("n,p", [(2, 2), (2, 3)])
def test_min_poly_minimal_by_brute_force(n, p):
    for a in enumerate_ring(n, p):
        m = min_poly(a)
        assert m.lead() == 1 and poly_at_matrix(m, a).is_zero()
        for d in range(m.degree):
            for low in itertools.product(range(p), repeat=d):
                assert not _annihilates(list(low) + [1], a)


def test_metaidempotent_examples():
    assert is_metaidempotent(Mat.diag(2, [0, 1]))
    assert not is_metaidempotent(Mat(2, [[0, 1], [0, 0]]))
    F3 = PrimeField(3)
    t2_plus_1 = Poly(F3, [1, 0, 1])
    assert t2_plus_1.roots() == []
    c = Mat.companion(t2_plus_1)
    assert poly_at_matrix(t2_plus_1, c).is_zero()
    assert not is_metaidempotent(c)


def test_pth_power_min_poly_not_squarefree():
    # (t - 1)^2 over GF(2) has derivative 0.
    a = Mat(2, [[1, 1], [0, 1]])
    assert min_poly(a) == Poly(PrimeField(2), [1, 0, 1])
    assert not is_metaidempotent(a)


@pytest.mark.parametrize("n,p", [(2, 2), (2, 3), (3, 2)])
def test_metaidempotent_reconstruction(n, p):
    for a in enumerate_ring(n, p):
        if not is_metaidempotent(a):
            continue
        pieces = spectral_idempotents(a)
        total = Mat.zero(n, p)
        for c, e in pieces:
            assert is_idempotent(e) and e * a == a * e
            total = total + e * int(c)
        assert total == a
        for (_, e1), (_, e2) in itertools.combinations(pieces, 2):
            assert (e1 * e2).is_zero() and e1 * e2 == e2 * e1
        assert sum((e for _, e in pieces), Mat.zero(n, p)) == Mat.identity(n, p)


def test_mat_helpers():
    a = Mat(5, [[1, 2], [3, 4]])
    assert a * a.inverse() == Mat.identity(2, 5)
    assert a.det() == (4 - 6) % 5
    assert parse_mat(a.to_str(), 5) == a
    with pytest.raises(ZeroDivisionError):
        Mat(2, [[1, 1], [1, 1]]).inverse()
