"""Subsequences and polynomial combinations of moment sequences.

Two transforms act on a moment sequence and its measure together:

* the affine subsequence k -> y_{dk+l} corresponds to pushing the
  measure forward under x -> x^d (after weighting by x^l), and affine
  patterns are exactly the ones that keep every half-line moment
  sequence a half-line moment sequence;
* (T_g y)_k = sum_j g_j y_{k+j} for a polynomial g >= 0 on the interval
  corresponds to the re-weighted measure g(x) d(mu).

Run:  python3 demos/06_transforms.py
"""

from fractions import Fraction

from momentlab import (
    Sequence,
    TransformSpec,
    catalog_sequence,
    density_catalog,
    linear_combination_transform,
    pattern_is_stieltjes_preserving,
    subsequence_transform,
    transform_support,
    verify_transform_consistency,
)

_, cat = catalog_sequence("catalan", 20)

print("Subsequences of the Catalan numbers:")
print("  every other term :", ", ".join(str(v) for v in subsequence_transform(cat, 2, 0).values[:7]))
print("  shifted by one   :", ", ".join(str(v) for v in subsequence_transform(cat, 1, 1).values[:7]))
print("  support image of [0, 4] under d = 2:", transform_support((Fraction(0), Fraction(4)), 2))

print()
print("Only affine index patterns preserve half-line moment sequences:")
for pattern in ([0, 2, 4, 6], [0, 1, 3], [0, 2, 3]):
    verdict = pattern_is_stieltjes_preserving(pattern)
    if verdict.preserving:
        print(f"  {pattern}  preserving")
    else:
        w = verdict.witness
        print(f"  {pattern}  NOT preserving: atom at {w.epsilon} gives block "
              f"determinant {w.determinant}")

print()
print("Linear combination 4 y_{k+1} - y_{k+2} (from g(x) = 4x - x^2 >= 0 on [0,4]):")
dens = density_catalog("catalan")
seq, tdens = linear_combination_transform(cat, (0, 4, -1), Fraction(0), Fraction(4),
                                          density=dens)
print("  transformed sequence:", ", ".join(str(v) for v in seq.values[:8]))
print("  transformed density :", tdens.label,
      f" exponents ({tdens.left_exponent}, {tdens.right_exponent})")

print()
print("Cross-checking transforms against their densities by quadrature:")
lincomb = TransformSpec(TransformSpec.LINEAR_COMBINATION, g=(0, 4, -1),
                        interval=(Fraction(0), Fraction(4)))
report = verify_transform_consistency(cat, lincomb, dens, 10, tol=1e-6)
print(f"  g d(mu) vs 4C_n+1 - C_n+2 : max rel err {report.max_rel_error:.2e}  "
      f"{'pass' if report.passed else 'FAIL'}")
sub = TransformSpec(TransformSpec.SUBSEQUENCE, d=2)
report = verify_transform_consistency(cat, sub, dens, 8, tol=1e-6)
print(f"  pushforward vs C_2n       : max rel err {report.max_rel_error:.2e}  "
      f"{'pass' if report.passed else 'FAIL'}")

print()
print("The aerated Catalan sequence is not a half-line moment sequence, but")
print("its even-indexed subsequence is Catalan again:")
aerated = []
for v in cat.values[:8]:
    aerated.extend([v, Fraction(0)])
sub_seq = subsequence_transform(Sequence(aerated, label="aerated"), 2, 0)
print("  ", ", ".join(str(v) for v in sub_seq.values))
