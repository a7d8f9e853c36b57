"""Divisor bookkeeping and the Riemann-Roch cross-check."""

import random
from fractions import Fraction

import pytest

from grasshilb.delpezzo import (
    GRADING_CAP,
    MONOMIAL_ORDER,
    PAIR_ORDER,
    FamilyRankError,
    FitInconsistencyError,
    _solve_exact,
    base_change,
    divisor_family,
    euler_characteristic,
    fit_quadratic_form,
    kapranov_grading,
    quadratic_monomial_values,
    riemann_roch_coefficients,
    verify_against_series,
)
from grasshilb.hilbert import series_by_recursion
from grasshilb.polyring import PrecisionError, TruncatedSeries

HALF = Fraction(1, 2)

# chi as a quadratic form in (1, a01, a02, a03, a04, a12), frozen by hand
RR_EXPANSION = {
    (0, 0): Fraction(1),
    (0, 1): HALF, (0, 2): HALF, (0, 3): HALF, (0, 4): HALF, (0, 5): HALF,
    (1, 1): -HALF, (2, 2): -HALF, (3, 3): -HALF, (4, 4): -HALF, (5, 5): -HALF,
    (1, 5): Fraction(1), (2, 5): Fraction(1),
}


def w5_series():
    if not hasattr(w5_series, "cache"):
        w5_series.cache = series_by_recursion(5, GRADING_CAP)
    return w5_series.cache


def test_pair_order():
    assert len(PAIR_ORDER) == 10
    assert PAIR_ORDER[0] == (0, 1)
    assert PAIR_ORDER[-1] == (3, 4)
    assert all(i < j for i, j in PAIR_ORDER)


def test_base_change_frozen():
    assert base_change((1,) * 10) == (4, 4, -2, -2, 6)
    assert base_change((1, 0, 0, 0, 0, 0, 0, 0, 0, 0)) == (1, 0, 0, 0, 0)
    assert base_change((0,) * 10) == (0, 0, 0, 0, 0)


def test_base_change_linear():
    rng = random.Random(501)
    for _ in range(30):
        a = tuple(rng.randint(-4, 4) for _ in range(10))
        b = tuple(rng.randint(-4, 4) for _ in range(10))
        ab = tuple(x + y for x, y in zip(a, b))
        assert base_change(ab) == tuple(
            x + y for x, y in zip(base_change(a), base_change(b)))


def test_base_change_validation():
    with pytest.raises(ValueError):
        base_change((1, 2, 3))


def test_kapranov_grading_frozen():
    assert kapranov_grading((4, 4, -2, -2, 6)) == (4, 4, 4, 4, 4)
    assert kapranov_grading((1, 0, 0, 0, 0)) == (1, 1, 0, 0, 0)
    assert kapranov_grading((0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0)


def test_euler_characteristic_frozen():
    assert euler_characteristic((0, 0, 0, 0, 0)) == 1
    assert euler_characteristic((1, 0, 0, 0, 0)) == 1
    assert euler_characteristic((4, 4, -2, -2, 6)) == 16


def test_euler_characteristic_always_integer():
    rng = random.Random(502)
    for _ in range(500):
        d = tuple(rng.randint(-6, 6) for _ in range(5))
        assert isinstance(euler_characteristic(d), int)


def test_euler_characteristic_matches_quadratic_expansion():
    rng = random.Random(503)
    rr = dict(zip(MONOMIAL_ORDER, riemann_roch_coefficients()))
    for _ in range(100):
        d = tuple(rng.randint(-5, 5) for _ in range(5))
        values = quadratic_monomial_values(d)
        total = sum(rr[key] * v for key, v in zip(MONOMIAL_ORDER, values))
        assert total == euler_characteristic(d)


def test_riemann_roch_coefficients_frozen():
    named = dict(zip(MONOMIAL_ORDER, riemann_roch_coefficients()))
    for key in MONOMIAL_ORDER:
        assert named[key] == RR_EXPANSION.get(key, Fraction(0))


def test_divisor_family():
    fam = divisor_family()
    assert len(fam) == 220
    assert fam[0] == (3, 1, 1, 1, 1, 1, 1, 1, 1, 1)
    ones = (1,) * 10
    for d in fam:
        deltas = [x - y for x, y in zip(d, ones)]
        assert sum(abs(v) for v in deltas) in (0, 2)


def test_family_gradings_in_box():
    for d10 in divisor_family():
        grading = kapranov_grading(base_change(d10))
        assert all(g >= 0 for g in grading)
        assert sum(grading) <= GRADING_CAP


def test_verify_against_series_passes():
    report = verify_against_series(w5_series())
    assert report.passed
    assert report.pass_count == 220
    entry = report.entries[0]
    data = entry.to_json_dict()
    assert set(data) == {"divisor10", "divisor5", "grading", "chi",
                         "series_coeff", "status"}
    assert data["status"] == "pass"


def test_verify_against_series_guards():
    with pytest.raises(PrecisionError):
        verify_against_series(series_by_recursion(5, GRADING_CAP - 1))
    with pytest.raises(ValueError):
        verify_against_series(series_by_recursion(4, 4))


def test_verify_detects_corrupted_series():
    good = w5_series()
    terms = dict(good.terms)
    key = (4, 4, 4, 4, 4)
    terms[key] = terms[key] + 1
    bad = TruncatedSeries(5, good.max_total_degree, terms)
    report = verify_against_series(bad)
    assert not report.passed
    failing = [e for e in report.entries if e.status == "fail"]
    assert failing
    assert all(e.grading == key for e in failing)
    # -2K + E_k - E_k for every k and sign split hits that grading
    assert len(failing) == 20


def test_fit_quadratic_form_recovers_riemann_roch():
    fitted = fit_quadratic_form(w5_series())
    assert fitted == riemann_roch_coefficients()
    named = dict(zip(MONOMIAL_ORDER, fitted))
    assert named[(0, 0)] == 1
    assert named[(1, 1)] == -HALF


def test_solve_exact_rank_deficient():
    # two proportional rows cannot determine two unknowns
    matrix = [[Fraction(1), Fraction(2), Fraction(3)],
              [Fraction(2), Fraction(4), Fraction(6)]]
    with pytest.raises(FamilyRankError):
        _solve_exact(matrix, 2)


def test_solve_exact_inconsistent():
    matrix = [[Fraction(1), Fraction(0), Fraction(1)],
              [Fraction(0), Fraction(1), Fraction(1)],
              [Fraction(1), Fraction(1), Fraction(3)]]
    with pytest.raises(FitInconsistencyError):
        _solve_exact(matrix, 2)


def test_solve_exact_unique_solution():
    matrix = [[Fraction(2), Fraction(1), Fraction(5)],
              [Fraction(1), Fraction(-1), Fraction(1)]]
    assert _solve_exact(matrix, 2) == [Fraction(2), Fraction(1)]
