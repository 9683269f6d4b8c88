"""Classify a sequence prefix with exact Hankel criteria.

Positive semidefiniteness of the Hankel blocks H_m (entries y_{i+j})
characterises moment sequences on the real line; adding the shifted
blocks characterises measures on [0, inf); the interval combination
(a+b) H_m(Ey) - H_m(E^2 y) - ab H_m(y) characterises measures on [a, b].
Everything below is decided in exact rational arithmetic.

Run:  python3 demos/02_moment_classification.py
"""

from fractions import Fraction

from momentlab import (
    Sequence,
    catalog_sequence,
    classify,
    hankel_det,
    psd_status,
    hankel_matrix,
    shift,
)

print("Catalan numbers on [0, 4], checked through order 5:")
_, cat = catalog_sequence("catalan", 13)
report = classify(cat, 5, interval=(Fraction(0), Fraction(4)))
print("  hamburger_ok_up_to :", report.hamburger_ok_up_to)
print("  stieltjes_ok_up_to :", report.stieltjes_ok_up_to)
print("  hausdorff_ok_up_to :", report.hausdorff_ok_up_to)
print("  Hankel determinants:", [str(d) for d in report.delta_values])

print()
print("Interleaving zeros into the Catalan numbers keeps the real-line")
print("property but destroys the half-line property:")
aerated = []
for v in cat:
    aerated.extend([v, Fraction(0)])
seq = Sequence(aerated[:13], label="aerated catalan")
report = classify(seq, 3)
print("  terms:", ", ".join(str(v) for v in seq))
print("  hamburger_ok_up_to :", report.hamburger_ok_up_to)
print("  stieltjes_ok_up_to :", report.stieltjes_ok_up_to)
print("  first failure      :", report.failure_witnesses[0][:2])
print("  shifted 2x2 det    :", hankel_det(shift(seq, 1), 1), " (exactly -1)")

print()
print("A two-atom measure at -1 and 2 (weights 1/2) is a real-line moment")
print("sequence, but shifting by one step exposes the negative part:")
y = [(Fraction(-1) ** k + Fraction(2) ** k) / 2 for k in range(6)]
print("  moments:", ", ".join(str(v) for v in y))
shifted = y[1:]
M = hankel_matrix(shifted, 1)
verdict = psd_status(M)
print("  shifted block:", M.rows)
print("  det =", hankel_det(shifted, 1), " status =", verdict.status)
print("  witness v =", verdict.witness, " with v^T M v =", M.quadratic_form(verdict.witness))
