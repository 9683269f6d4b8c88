"""Monic orthogonal polynomials: three routes to the same objects.

The recurrence P_{k+1} = (x - s_k) P_k - t_k P_{k-1} builds the monic
OPS directly from (sigma, tau); the bordered Hankel determinant builds
it from raw moments; and the moment functional recovers (sigma, tau)
back from the sequence.  All three agree exactly.

Run:  python3 demos/03_orthogonal_polynomials.py
"""

from momentlab import (
    catalog_sequence,
    make_spec,
    ops_determinantal,
    ops_from_recurrence,
    ops_zeros,
    recurrence_from_moments,
    riesz,
    true_interval_estimate,
)
from momentlab.orthopoly import _pmul

spec, seq = catalog_sequence("catalan", 19)
polys = ops_from_recurrence(spec, 4)
print("Catalan monic OPS from the recurrence:")
for k, poly in enumerate(polys):
    print(f"  P_{k} = {poly}")

print()
print("Bordered-determinant route from the raw moments agrees exactly:")
for n in range(5):
    assert ops_determinantal(seq, n).coefficients == polys[n].coefficients
print("  ops_determinantal(y, n) == ops_from_recurrence(spec, n)[n] for n <= 4")

print()
print("Orthogonality under the moment functional L (x^n -> y_n):")
p2p3 = _pmul(polys[2].coefficients, polys[3].coefficients)
p3p3 = _pmul(polys[3].coefficients, polys[3].coefficients)
print("  L[P_2 P_3] =", riesz(seq, p2p3))
print("  L[P_3 P_3] =", riesz(seq, p3p3))

print()
print("Recovering (sigma, tau) from 19 raw terms:")
sigma, tau = recurrence_from_moments(seq, 5)
print("  sigma prefix:", [str(v) for v in sigma])
print("  tau prefix  :", [str(v) for v in tau])

print()
print("Zeros come from the symmetric tridiagonal (Jacobi) eigenproblem:")
print("  zeros of P_2:", ops_zeros(spec, 2), " (exact: (3 -/+ sqrt(5))/2)")
for n in (5, 20, 60):
    lo, hi = true_interval_estimate(spec, n)
    print(f"  extreme zeros at n = {n:2d}: [{lo:.6f}, {hi:.6f}]  (widening toward [0, 4])")

print()
print("The motzkin family plays the same game on [-1, 3]:")
mot = make_spec(1, 1, 1, 1)
print("  P_2 =", ops_from_recurrence(mot, 2)[2], " zeros:", ops_zeros(mot, 2))
