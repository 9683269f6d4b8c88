"""Monic OPS construction, recovery, determinantal path, zeros."""

from fractions import Fraction

import pytest

import momentlab as ml
from momentlab.orthopoly import _pmul


def test_p0_is_one():
    spec = ml.make_spec(5, -3, 2, 7)
    polys = ml.ops_from_recurrence(spec, 0)
    assert polys[0].coefficients == (1,)


def test_catalan_low_degrees():
    spec = ml.make_spec(1, 2, 1, 1)
    polys = ml.ops_from_recurrence(spec, 2)
    assert polys[1].coefficients == (-1, 1)          # x - 1
    assert polys[2].coefficients == (1, -3, 1)       # x^2 - 3x + 1


def test_motzkin_p2():
    spec = ml.make_spec(1, 1, 1, 1)
    polys = ml.ops_from_recurrence(spec, 2)
    assert polys[2].coefficients == (0, -2, 1)       # x^2 - 2x


def test_monic_validation():
    with pytest.raises(ValueError):
        ml.MonicPolynomial((1, 2))


def test_determinantal_matches_recurrence():
    for name in ("catalan", "motzkin", "delannoy", "fine"):
        spec, seq = ml.catalog_sequence(name, 13)
        polys = ml.ops_from_recurrence(spec, 6)
        for n in range(7):
            assert ml.ops_determinantal(seq, n).coefficients == polys[n].coefficients


def test_determinantal_low_cases():
    _, cat = ml.catalog_sequence("catalan", 5)
    assert ml.ops_determinantal(cat, 0).coefficients == (1,)
    assert ml.ops_determinantal(cat, 1).coefficients == (-1, 1)
    assert ml.ops_determinantal(cat, 2).coefficients == (1, -3, 1)


def test_orthogonality_under_riesz():
    for name in ("catalan", "delannoy", "schroder_little"):
        spec, seq = ml.catalog_sequence(name, 13)
        polys = ml.ops_from_recurrence(spec, 6)
        for m in range(7):
            for n in range(m):
                prod = _pmul(polys[m].coefficients, polys[n].coefficients)
                assert ml.riesz(seq, prod) == 0
            sq = _pmul(polys[m].coefficients, polys[m].coefficients)
            assert ml.riesz(seq, sq) != 0


def test_recurrence_recovery_catalan():
    _, cat = ml.catalog_sequence("catalan", 19)
    sigma, tau = ml.recurrence_from_moments(cat, 5)
    assert sigma == (1, 2, 2, 2, 2)
    assert tau == (1, 1, 1, 1)


def test_recurrence_recovery_delannoy():
    _, dela = ml.catalog_sequence("delannoy", 10)
    sigma, tau = ml.recurrence_from_moments(dela, 4)
    assert sigma == (3, 3, 3, 3)
    assert tau == (4, 2, 2)


def test_recurrence_recovery_aerated():
    _, cat = ml.catalog_sequence("catalan", 5)
    aerated = []
    for v in cat:
        aerated.extend([v, Fraction(0)])
    sigma, tau = ml.recurrence_from_moments(ml.Sequence(aerated), 3)
    assert sigma == (0, 0, 0)
    assert tau == (1, 1)


def test_recovery_t_formula_against_determinants():
    # t_k = delta_{k-2} delta_k / delta_{k-1}^2 with delta_{-1} = 1
    _, hexa = ml.catalog_sequence("hexagonal", 13)
    _, tau = ml.recurrence_from_moments(hexa, 5)
    deltas = [Fraction(1)] + [ml.hankel_det(hexa, m) for m in range(6)]
    for k in range(1, 5):
        assert tau[k - 1] == deltas[k - 1] * deltas[k + 1] / deltas[k] ** 2


def test_quasi_definite_failure():
    flat = ml.Sequence((1, 1, 1, 1, 1, 1))
    with pytest.raises(ml.QuasiDefiniteFailure) as info:
        ml.recurrence_from_moments(flat, 3)
    assert info.value.order == 1


def test_recovery_needs_data():
    _, cat = ml.catalog_sequence("catalan", 5)
    with pytest.raises(ml.InsufficientData):
        ml.recurrence_from_moments(cat, 4)


def test_round_trip_regenerates_sequence():
    for name in ("motzkin", "schroder_large"):
        spec, seq = ml.catalog_sequence(name, 19)
        sigma, tau = ml.recurrence_from_moments(seq, 5)
        rebuilt = ml.spec_from_prefixes(sigma, sigma[-1], tau, tau[-1])
        assert list(ml.catalan_like(rebuilt, 9)) == list(seq.values[:10])


def test_zeros_simple_cases():
    cat = ml.make_spec(1, 2, 1, 1)
    assert ml.ops_zeros(cat, 1) == pytest.approx([1.0], abs=1e-12)
    golden = (3 - 5 ** 0.5) / 2, (3 + 5 ** 0.5) / 2
    assert ml.ops_zeros(cat, 2) == pytest.approx(golden, abs=1e-12)
    mot = ml.make_spec(1, 1, 1, 1)
    assert ml.ops_zeros(mot, 2) == pytest.approx([0.0, 2.0], abs=1e-12)


def test_zeros_match_polynomial_roots():
    spec, _ = ml.catalog_sequence("delannoy", 5)
    poly = ml.ops_from_recurrence(spec, 4)[4]
    for z in ml.ops_zeros(spec, 4):
        assert abs(poly(float(z))) < 1e-8


def test_zeros_not_positive_case():
    spec = ml.make_spec(1, 1, -1, 1)
    with pytest.raises(ml.NotPositiveCase):
        ml.ops_zeros(spec, 3)


def test_zero_interlacing():
    for name in ("catalan", "motzkin", "hexagonal"):
        spec, _ = ml.catalog_sequence(name, 2)
        for n in (2, 5, 9):
            inner = ml.ops_zeros(spec, n)
            outer = ml.ops_zeros(spec, n + 1)
            for i in range(n):
                assert outer[i] < inner[i] + 1e-9
                assert inner[i] < outer[i + 1] + 1e-9


def test_true_interval_estimates():
    cat = ml.make_spec(1, 2, 1, 1)
    lo, hi = ml.true_interval_estimate(cat, 2)
    assert lo == pytest.approx(0.38196601125, abs=1e-9)
    assert hi == pytest.approx(2.61803398875, abs=1e-9)
    lo, hi = ml.true_interval_estimate(cat, 50)
    assert 0 < lo < 0.05 and 3.95 < hi < 4
    mot = ml.make_spec(1, 1, 1, 1)
    lo, hi = ml.true_interval_estimate(mot, 50)
    assert -1 < lo < -0.95 and 2.95 < hi < 3


def test_positivity_link():
    # positive definite classification forces recovered t_k > 0
    for name in ml.catalog_names():
        _, seq = ml.catalog_sequence(name, 17)
        report = ml.classify(seq, 8)
        assert report.hamburger_ok_up_to == 8
        _, tau = ml.recurrence_from_moments(seq, 8)
        assert all(t > 0 for t in tau)
