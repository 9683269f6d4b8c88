"""Exact Hankel criteria: determinants, definiteness, classification."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import momentlab as ml
from conftest import cofactor_det

entries = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def atomic_moments(pairs, n_terms):
    """Exact moments of a finite atomic measure sum w_i * delta_{x_i}."""
    return [sum(Fraction(w) * Fraction(x) ** n for w, x in pairs)
            for n in range(n_terms)]


def aerated_catalan(n_terms):
    _, cat = ml.catalog_sequence("catalan", n_terms)
    out = []
    for v in cat:
        out.extend([v, Fraction(0)])
    return ml.Sequence(out[:n_terms], label="aerated")


# -- hankel_matrix -------------------------------------------------------

def test_hankel_matrix_entries():
    M = ml.hankel_matrix([1, 1, 2], 1)
    assert M.rows == ((1, 1), (1, 2))
    Mt = ml.hankel_matrix([1, 1, 2, 5], 1, shift=1)
    assert Mt.rows == ((1, 2), (2, 5))
    assert ml.hankel_matrix([7], 0).rows == ((7,),)


def test_hankel_matrix_insufficient():
    with pytest.raises(ml.InsufficientData):
        ml.hankel_matrix([1, 2], 1)
    with pytest.raises(ml.InsufficientData):
        ml.hankel_matrix([1, 2, 3], 1, shift=1)


def test_symmatrix_rejects_asymmetry():
    with pytest.raises(ValueError):
        ml.SymMatrix(((Fraction(1), Fraction(2)), (Fraction(3), Fraction(1))))


# -- determinants --------------------------------------------------------

def test_hankel_det_catalan_is_one():
    _, cat = ml.catalog_sequence("catalan", 12)
    assert all(ml.hankel_det(cat, m) == 1 for m in range(7))


def test_hankel_det_order_zero():
    assert ml.hankel_det([Fraction(5, 3)], 0) == Fraction(5, 3)


def test_hankel_det_negative_witness():
    # moments of the two-atom measure (delta at -1 and at 2, weights 1/2),
    # shifted once: the 2x2 determinant is exactly -9/2
    y = atomic_moments([(Fraction(1, 2), -1), (Fraction(1, 2), 2)], 4)
    shifted = ml.shift(ml.Sequence(y), 1)
    assert list(shifted) == [Fraction(1, 2), Fraction(5, 2), Fraction(7, 2)]
    assert ml.hankel_det(shifted, 1) == Fraction(-9, 2)


@given(st.integers(min_value=1, max_value=4), st.data())
@settings(max_examples=40, deadline=None)
def test_bareiss_matches_cofactor(n, data):
    rows = [[data.draw(entries) for _ in range(n)] for _ in range(n)]
    assert ml.bareiss_det(rows) == cofactor_det([row[:] for row in rows])


# -- definiteness --------------------------------------------------------

def test_psd_positive_definite_pivots():
    v = ml.psd_status(ml.hankel_matrix([1, 1, 2], 1))
    assert v.status == "positive_definite"
    assert v.pivots == (1, 1)
    assert v.is_psd


def test_psd_rank_one_gram():
    v = ml.psd_status(ml.SymMatrix(((Fraction(1), Fraction(2)),
                                    (Fraction(2), Fraction(4)))))
    assert v.status == "positive_semidefinite_singular"
    assert v.pivots == (1, 0)


def test_psd_indefinite_with_witness():
    M = ml.SymMatrix(((Fraction(1, 2), Fraction(5, 2)),
                      (Fraction(5, 2), Fraction(7, 2))))
    v = ml.psd_status(M)
    assert v.status == "indefinite"
    assert M.quadratic_form(v.witness) < 0


def test_psd_zero_diagonal_indefinite():
    M = ml.SymMatrix(((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0))))
    v = ml.psd_status(M)
    assert v.status == "indefinite"
    assert M.quadratic_form(v.witness) < 0


def test_psd_zero_matrix():
    M = ml.SymMatrix(((Fraction(0), Fraction(0)), (Fraction(0), Fraction(0))))
    assert ml.psd_status(M).status == "positive_semidefinite_singular"


@given(st.integers(min_value=1, max_value=4), st.data())
@settings(max_examples=40, deadline=None)
def test_psd_verdicts_reverify(n, data):
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = data.draw(entries)
    M = ml.SymMatrix(tuple(tuple(r) for r in rows))
    v = ml.psd_status(M)
    if v.status == "indefinite":
        assert M.quadratic_form(v.witness) < 0
    else:
        ok, subset, value = ml.hankel._all_principal_minors_nonneg(M.rows)
        assert ok, f"claimed PSD but minor {subset} = {value}"
        if v.status == "positive_definite":
            assert all(p > 0 for p in v.pivots)


# -- total positivity ----------------------------------------------------

def test_total_positivity_catalan():
    _, cat = ml.catalog_sequence("catalan", 7)
    verdict = ml.total_positive_up_to(cat, 3, 4)
    assert verdict.ok


def test_total_positivity_alternating():
    verdict = ml.total_positive_up_to([1, -1, 1, -1], 1, 2)
    assert not verdict.ok
    assert verdict.failing_value < 0
    # a negative entry shows up as a failing 1x1 minor
    assert len(verdict.failing_rows) == 1


def test_total_positivity_order_one_scans_entries():
    verdict = ml.total_positive_up_to([2, 1, 3], 1, 1)
    assert verdict.ok


def test_total_positivity_guard():
    _, cat = ml.catalog_sequence("catalan", 20)
    with pytest.raises(ValueError):
        ml.total_positive_up_to(cat, 8, 2)


# -- shift ---------------------------------------------------------------

def test_shift_examples():
    seq = ml.Sequence((1, 1, 2, 5, 14))
    assert list(ml.shift(seq, 1)) == [1, 2, 5, 14]
    assert list(ml.shift(seq, 0)) == [1, 1, 2, 5, 14]
    assert list(ml.shift(seq, 2)) == [2, 5, 14]
    with pytest.raises(ml.InsufficientData):
        ml.shift(seq, 5)


# -- hausdorff test ------------------------------------------------------

def test_hausdorff_catalan_04_passes():
    _, cat = ml.catalog_sequence("catalan", 9)
    verdict = ml.hausdorff_test(cat, Fraction(0), Fraction(4), 3)
    assert verdict.passed


def test_hausdorff_combination_matches_explicit_sequence():
    # on [0, 4] the combination is the Hankel matrix of 4*Ey - E(Ey)
    _, cat = ml.catalog_sequence("catalan", 9)
    combo = ml.hausdorff_combination(cat, Fraction(0), Fraction(4), 3)
    ey = ml.shift(cat, 1)
    eey = ml.shift(cat, 2)
    explicit = [4 * a - b for a, b in zip(ey, eey)]
    assert combo.rows == ml.hankel_matrix(explicit, 3).rows


def test_hausdorff_motzkin_combination():
    _, mot = ml.catalog_sequence("motzkin", 9)
    verdict = ml.hausdorff_test(mot, Fraction(-1), Fraction(3), 3)
    assert verdict.passed
    combo = ml.hausdorff_combination(mot, Fraction(-1), Fraction(3), 3)
    explicit = [3 * y0 + 2 * y1 - y2
                for y0, y1, y2 in zip(mot, ml.shift(mot, 1), ml.shift(mot, 2))]
    assert combo.rows == ml.hankel_matrix(explicit, 3).rows


def test_hausdorff_catalan_03_fails():
    _, cat = ml.catalog_sequence("catalan", 9)
    verdict = ml.hausdorff_test(cat, Fraction(0), Fraction(3), 2)
    assert not verdict.passed
    assert not verdict.combination.is_psd


def test_hausdorff_surd_endpoints_stay_exact():
    _, dela = ml.catalog_sequence("delannoy", 9)
    lo = ml.Surd(3, -2, 2)
    hi = ml.Surd(3, 2, 2)
    combo = ml.hausdorff_combination(dela, lo, hi, 3)
    # a+b = 6 and ab = 1, so the combination is rational
    assert all(isinstance(v, Fraction) for row in combo.rows for v in row)
    assert ml.hausdorff_test(dela, lo, hi, 3).passed


def test_hausdorff_needs_ordered_interval():
    _, cat = ml.catalog_sequence("catalan", 9)
    with pytest.raises(ValueError):
        ml.hausdorff_test(cat, Fraction(4), Fraction(0), 2)


# -- classify ------------------------------------------------------------

def test_classify_interleaved_hamburger_not_stieltjes():
    seq = aerated_catalan(9)
    report = ml.classify(seq, 2)
    assert report.hamburger_ok_up_to == 2
    assert report.stieltjes_ok_up_to == 0
    fam, order, verdict = report.failure_witnesses[0]
    assert fam == "stieltjes-shifted" and order == 1
    # the failing witness is the negative shifted determinant, exactly -1
    assert ml.hankel_det(ml.shift(seq, 1), 1) == -1
    assert not report.passed


def test_classify_catalan_with_interval():
    _, cat = ml.catalog_sequence("catalan", 13)
    report = ml.classify(cat, 5, interval=(Fraction(0), Fraction(4)))
    assert report.hamburger_ok_up_to == 5
    assert report.stieltjes_ok_up_to == 5
    assert report.hausdorff_ok_up_to == 5
    assert report.determinate
    assert report.passed
    assert report.delta_values == (1,) * 6


def test_classify_two_atoms_hamburger():
    y = [(Fraction(-1) ** k + Fraction(2) ** k) / 2 for k in range(5)]
    report = ml.classify(ml.Sequence(y), 1)
    assert report.hamburger_ok_up_to == 1
    # not Stieltjes: one atom sits at -1
    assert report.stieltjes_ok_up_to == 0


def test_classify_insufficient_data():
    with pytest.raises(ml.InsufficientData):
        ml.classify(ml.Sequence((1, 2)), 2)


def test_classify_log_convexity_consequence():
    # Hamburger up to m forces y_n y_{n+2} >= y_{n+1}^2 while 2n+2 <= 2m
    for name in ("catalan", "motzkin", "delannoy"):
        _, seq = ml.catalog_sequence(name, 13)
        report = ml.classify(seq, 6)
        assert report.hamburger_ok_up_to == 6
        vals = seq.values
        for n in range(5):
            assert vals[n] * vals[n + 2] >= vals[n + 1] ** 2


def test_classify_report_json():
    _, cat = ml.catalog_sequence("catalan", 13)
    report = ml.classify(cat, 3, interval=(Fraction(0), Fraction(4)))
    import json
    data = json.loads(report.to_json())
    assert data["schema"] == "momentlab/classify/v1"
    assert data["delta_values"] == ["1", "1", "1", "1"]
    assert data["hausdorff_interval"] == ["0", "4"]
    assert data["determinate"] is True


def test_positive_definite_catalog_cross_check():
    # every catalog family stays positive definite through order 8
    for name in ml.catalog_names():
        _, seq = ml.catalog_sequence(name, 17)
        report = ml.classify(seq, 8)
        assert report.hamburger_ok_up_to == 8
        assert all(d > 0 for d in report.delta_values)
        assert all(s == "positive_definite" for s in report.hamburger_status)
