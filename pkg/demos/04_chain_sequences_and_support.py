"""Chain sequences and exact support certificates.

At the candidate endpoints x = s -/+ 2 sqrt(t) the ratio values
alpha_n(x) = t_{n+1} / ((s_n - x)(s_{n+1} - x)) become the constant 1/4
after one step, so the infinite chain-sequence condition reduces to an
exact finite computation in the quadratic field Q(sqrt(t)).

Run:  python3 demos/04_chain_sequences_and_support.py
"""

from fractions import Fraction

from momentlab import (
    CATALOG,
    HypothesisFailure,
    alpha_sequence,
    certify_support,
    make_spec,
    minimal_parameters,
    support_interval,
)

print("A constant sequence is a chain sequence exactly when c <= 1/4:")
for c in (Fraction(1, 5), Fraction(1, 4), Fraction(26, 100)):
    verdict = minimal_parameters([c] * 400)
    print(f"  c = {str(c):7s} chain = {verdict.ok}"
          + (f"  (escapes at index {verdict.failure_index})" if not verdict.ok else
             f"  (parameters climb toward 1/2: {[str(g) for g in verdict.parameters[:5]]})"))

print()
print("Catalan support certificate:")
report = certify_support(make_spec(1, 2, 1, 1), n_check=200)
cert = report.certificate
print(f"  interval  [{cert.lower}, {cert.upper}]   stieltjes: {cert.stieltjes_flag}")
print(f"  alpha at left endpoint : {[str(a) for a in alpha_sequence(make_spec(1,2,1,1), cert.lower, 3)]}")
print(f"  left tail certificate  : entry {report.left_tail.entry_parameter} <= bound {report.left_tail.bound}")
print(f"  certified: {report.passed}")

print()
print("All catalog families, certified where the hypotheses allow:")
for name, quad in CATALOG.items():
    spec = make_spec(*quad)
    try:
        report = certify_support(spec, n_check=200)
    except HypothesisFailure as exc:
        print(f"  {name:18s} hypothesis fails exactly: {', '.join(exc.failed)}")
        continue
    cert = report.certificate
    mark = "certified" if report.passed else "NOT certifiable"
    print(f"  {name:18s} [{str(cert.lower):14s}, {str(cert.upper):14s}]  {mark}")

print()
print("The schroder_little failure is real: its head chain parameter is")
print("(2 + sqrt(2))/4 > 1/2, so the minimal parameters escape [0, 1):")
spec = make_spec(*CATALOG["schroder_little"])
cert = support_interval(*CATALOG["schroder_little"])
alphas = alpha_sequence(spec, cert.lower, 4)
verdict = minimal_parameters(alphas)
print("  parameters:", [str(g) for g in verdict.parameters])
print("  failure at index:", verdict.failure_index)
print("  (its measure carries an atom at 0, outside the interval)")
