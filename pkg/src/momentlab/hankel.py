"""Exact Hankel linear algebra and moment-sequence classification.

For a sequence y, H_m(y) is the (m+1) x (m+1) matrix with entries
y_{i+j} and the shifted variant has entries y_{i+j+1}.  Classical
criteria tie positive (semi)definiteness of these matrices to the
existence of representing measures:

* all H_m PSD            ->  measure on the whole real line,
* all H_m and shifts PSD ->  measure on [0, inf)   (equivalently H_m
  totally positive),
* H_m and the combination (a+b) H_m(Ey) - H_m(E^2 y) - ab H_m(y) PSD
  ->  measure on [a, b],

where E is the left-shift operator.  A finite prefix can only verify
these up to some order, so every report states the largest order it
actually checked and never claims the infinite statement.

All decisions here are exact: determinants by fraction-free (Bareiss)
elimination, definiteness by pivoted LDL^T over the rationals (or over a
quadratic field when interval endpoints are irrational), and the
semidefinite-singular boundary confirmed by exhaustive principal minors.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InsufficientData
from .exact import Surd, collapse, ensure_fraction, format_rational
from .seqcore import Sequence

__all__ = [
    "SymMatrix",
    "PsdVerdict",
    "HausdorffVerdict",
    "MomentClassReport",
    "TotalPositivityVerdict",
    "hankel_matrix",
    "hankel_det",
    "bareiss_det",
    "psd_status",
    "total_positive_up_to",
    "shift",
    "hausdorff_combination",
    "hausdorff_test",
    "classify",
]


def _values(y):
    if isinstance(y, Sequence):
        return y.values
    out = []
    for v in y:
        if isinstance(v, Surd):
            out.append(v)
        else:
            out.append(ensure_fraction(v))
    return tuple(out)


@dataclass(frozen=True)
class SymMatrix:
    """A symmetric matrix over exact scalars (Fraction or Surd)."""

    rows: tuple

    def __post_init__(self):
        n = len(self.rows)
        rows = tuple(tuple(r) for r in self.rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("matrix must be square")
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"asymmetric at ({i},{j})")
        object.__setattr__(self, "rows", rows)

    @property
    def order(self) -> int:
        """m for an (m+1) x (m+1) matrix."""
        return len(self.rows) - 1

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def quadratic_form(self, v):
        """v^T M v, exactly."""
        n = len(self.rows)
        if len(v) != n:
            raise ValueError("vector length mismatch")
        total = Fraction(0)
        for i in range(n):
            if v[i] == 0:
                continue
            for j in range(n):
                if v[j] != 0:
                    total = total + v[i] * self.rows[i][j] * v[j]
        return collapse(total)


def hankel_matrix(y, m: int, shift: int = 0) -> SymMatrix:
    """H_m(y) for shift 0, the once-shifted Hankel block for shift 1."""
    if shift not in (0, 1):
        raise ValueError("shift must be 0 or 1")
    vals = _values(y)
    need = 2 * m + 1 + shift
    if m < 0:
        raise ValueError("order must be >= 0")
    if len(vals) < need:
        raise InsufficientData(f"need {need} values for order {m}, have {len(vals)}")
    return SymMatrix(tuple(
        tuple(vals[i + j + shift] for j in range(m + 1)) for i in range(m + 1)
    ))


def bareiss_det(rows):
    """Fraction-free determinant (Bareiss elimination), exact."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    M = [list(r) for r in rows]
    zero = M[0][0] - M[0][0]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == zero:
            for i in range(k + 1, n):
                if M[i][k] != zero:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return collapse(zero)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev
            M[i][k] = zero
        prev = M[k][k]
    out = M[n - 1][n - 1]
    return collapse(-out if sign < 0 else out)


def hankel_det(y, m: int):
    """The Hankel determinant det H_m(y), exactly."""
    return bareiss_det(hankel_matrix(y, m).rows)


@dataclass(frozen=True)
class PsdVerdict:
    """Outcome of an exact definiteness check.

    ``pivots`` carries the LDL^T pivot values (zeros padded for a rank
    deficient PSD matrix); for an indefinite matrix ``witness`` is a
    vector v with v^T M v < 0 that re-verifies the verdict.
    """

    status: str
    pivots: tuple = None
    witness: tuple = None

    POSITIVE_DEFINITE = "positive_definite"
    PSD_SINGULAR = "positive_semidefinite_singular"
    INDEFINITE = "indefinite"

    @property
    def is_psd(self) -> bool:
        return self.status in (self.POSITIVE_DEFINITE, self.PSD_SINGULAR)

    def to_dict(self) -> dict:
        out = {"status": self.status}
        if self.pivots is not None:
            out["pivots"] = [str(p) for p in self.pivots]
        if self.witness is not None:
            out["witness"] = [str(v) for v in self.witness]
        return out


def _solve_exact(A, b):
    """Solve A x = b by Gaussian elimination over an exact field."""
    n = len(A)
    M = [list(A[i]) + [b[i]] for i in range(n)]
    zero = b[0] - b[0] if n else Fraction(0)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != zero), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        M[c], M[piv] = M[piv], M[c]
        for r in range(c + 1, n):
            if M[r][c] != zero:
                f = M[r][c] / M[c][c]
                for j in range(c, n + 1):
                    M[r][j] = M[r][j] - f * M[c][j]
    x = [zero] * n
    for i in range(n - 1, -1, -1):
        acc = M[i][n]
        for j in range(i + 1, n):
            acc = acc - M[i][j] * x[j]
        x[i] = acc / M[i][i]
    return x


def _embed(n, positions, local):
    v = [Fraction(0)] * n
    for pos, val in zip(positions, local):
        v[pos] = val
    return tuple(v)


def _schur_witness(rows, chosen, tail, tail_vec):
    """Witness vector for indefiniteness localised on chosen + tail.

    The principal block on ``chosen`` is positive definite and
    ``tail_vec`` makes the Schur complement's quadratic form on ``tail``
    negative.  Completing the square against the original matrix entries
    produces an explicit v with v^T M v < 0.
    """
    k = len(chosen)
    if k == 0:
        return _embed(len(rows), tail, tail_vec)
    A11 = [[rows[a][b] for b in chosen] for a in chosen]
    rhs = []
    for a in chosen:
        acc = rows[0][0] - rows[0][0]
        for tv, tpos in zip(tail_vec, tail):
            acc = acc - tv * rows[a][tpos]
        rhs.append(acc)
    x = _solve_exact(A11, rhs)
    return _embed(len(rows), list(chosen) + list(tail), list(x) + list(tail_vec))


def _int_bareiss(M):
    """Bareiss determinant over plain ints (exact divisions via //)."""
    n = len(M)
    if n == 0:
        return 1
    M = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        mkk = M[k][k]
        row_k = M[k]
        for i in range(k + 1, n):
            row_i = M[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * mkk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = mkk
    return sign * M[-1][-1]


def _all_principal_minors_nonneg(rows):
    """Exhaustive principal-minor check; returns (ok, failing_subset, value).

    Rational matrices are rescaled by the common denominator first: a
    positive scaling multiplies every k-minor by a positive constant, so
    signs survive and the determinants run over plain integers.
    """
    n = len(rows)
    if all(isinstance(rows[i][j], Fraction) for i in range(n) for j in range(n)):
        den = 1
        for i in range(n):
            for j in range(i, n):
                d = rows[i][j].denominator
                den //= math.gcd(den, d)
                den *= d
        scaled = [[int(rows[i][j] * den) for j in range(n)] for i in range(n)]
        for size in range(1, n + 1):
            for subset in itertools.combinations(range(n), size):
                minor = [[scaled[i][j] for j in subset] for i in subset]
                if _int_bareiss(minor) < 0:
                    sub = [[rows[i][j] for j in subset] for i in subset]
                    return False, subset, bareiss_det(sub)
        return True, None, None
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            minor = [[rows[i][j] for j in subset] for i in subset]
            d = bareiss_det(minor)
            if d < 0:
                return False, subset, d
    return True, None, None


# Exhaustive minors get expensive past this size; elimination alone is
# already a proof, so larger singular matrices skip the cross-check.
_MINOR_FALLBACK_LIMIT = 12


def psd_status(M: SymMatrix) -> PsdVerdict:
    """Exact definiteness of a symmetric matrix.

    Pivoted LDL^T over the scalars decides the definite and indefinite
    cases; a rank-deficient nonnegative elimination is confirmed by the
    exhaustive principal-minor criterion before reporting PSD-singular.
    """
    n = M.order + 1
    rows = [list(r) for r in M.rows]
    zero = rows[0][0] - rows[0][0]
    remaining = list(range(n))
    chosen = []
    pivots = []

    while remaining:
        neg = next((i for i in remaining if rows[i][i] < zero), None)
        if neg is not None:
            witness = _schur_witness(M.rows, tuple(chosen), (neg,), (Fraction(1),))
            return PsdVerdict(PsdVerdict.INDEFINITE, witness=witness)
        piv = next((i for i in remaining if rows[i][i] > zero), None)
        if piv is None:
            # all remaining diagonal entries vanish
            offdiag = next(((i, j) for i in remaining for j in remaining
                            if i < j and rows[i][j] != zero), None)
            if offdiag is None:
                break
            i, j = offdiag
            # sign taken from the eliminated matrix, where the Schur
            # block on {i, j} actually lives
            tv = (Fraction(1), Fraction(-1) if rows[i][j] > zero else Fraction(1))
            witness = _schur_witness(M.rows, tuple(chosen), offdiag, tv)
            return PsdVerdict(PsdVerdict.INDEFINITE, witness=witness)
        d = rows[piv][piv]
        pivots.append(collapse(d))
        remaining.remove(piv)
        chosen.append(piv)
        for i in remaining:
            if rows[i][piv] != zero:
                f = rows[i][piv] / d
                for j in remaining:
                    rows[i][j] = rows[i][j] - f * rows[piv][j]
        for i in remaining:
            rows[piv][i] = zero
            rows[i][piv] = zero

    if len(chosen) == n:
        return PsdVerdict(PsdVerdict.POSITIVE_DEFINITE, pivots=tuple(pivots))

    # boundary case: elimination says PSD with rank deficiency; confirm by
    # principal minors while the size stays reasonable
    if n <= _MINOR_FALLBACK_LIMIT:
        ok, subset, value = _all_principal_minors_nonneg(M.rows)
        if not ok:  # pragma: no cover - elimination already proves PSD
            raise RuntimeError(
                f"internal disagreement: minor {subset} = {value} negative")
    padded = tuple(pivots) + (Fraction(0),) * (n - len(chosen))
    return PsdVerdict(PsdVerdict.PSD_SINGULAR, pivots=padded)


@dataclass(frozen=True)
class TotalPositivityVerdict:
    ok: bool
    failing_rows: tuple = None
    failing_cols: tuple = None
    failing_value: Fraction = None


def total_positive_up_to(y, m: int, minor_order: int,
                         force: bool = False) -> TotalPositivityVerdict:
    """Check every minor of H_m(y) of size <= minor_order for nonnegativity.

    Exhaustive enumeration, exponential in m; refuse m > 6 unless forced.
    """
    if m > 6 and not force:
        raise ValueError("minor enumeration above m = 6 needs force=True")
    if minor_order > m + 1:
        raise ValueError("minor_order exceeds the matrix size")
    H = hankel_matrix(y, m).rows
    idx = range(m + 1)
    for size in range(1, minor_order + 1):
        for rsel in itertools.combinations(idx, size):
            for csel in itertools.combinations(idx, size):
                minor = [[H[i][j] for j in csel] for i in rsel]
                d = bareiss_det(minor)
                if d < 0:
                    return TotalPositivityVerdict(False, rsel, csel, d)
    return TotalPositivityVerdict(True)


def shift(y, j: int = 1):
    """The left shift (E^j y)_n = y_{n+j}."""
    vals = _values(y)
    if j < 0:
        raise ValueError("shift must be >= 0")
    if len(vals) <= j:
        raise InsufficientData(f"cannot shift a length-{len(vals)} sequence by {j}")
    if isinstance(y, Sequence):
        label = f"E^{j}({y.label})" if j > 1 else (f"E({y.label})" if j else y.label)
        return Sequence(vals[j:], label=label, origin=y.origin)
    return vals[j:]


def hausdorff_combination(y, a, b, m: int) -> SymMatrix:
    """The matrix (a+b) H_m(Ey) - H_m(E^2 y) - ab H_m(y).

    ``a`` and ``b`` may be Fractions or Surds; for conjugate endpoints
    s -/+ 2 sqrt(t) both a+b and ab collapse to rationals, so the matrix
    stays rational even when the endpoints are irrational.
    """
    vals = _values(y)
    need = 2 * m + 3
    if len(vals) < need:
        raise InsufficientData(f"need {need} values for order {m}, have {len(vals)}")
    asum = collapse(a + b)
    aprod = collapse(a * b)
    return SymMatrix(tuple(
        tuple(collapse(asum * vals[i + j + 1] - vals[i + j + 2] - aprod * vals[i + j])
              for j in range(m + 1))
        for i in range(m + 1)
    ))


@dataclass(frozen=True)
class HausdorffVerdict:
    """Verdicts for H_m(y) and the interval combination matrix."""

    base: PsdVerdict
    combination: PsdVerdict

    @property
    def passed(self) -> bool:
        return self.base.is_psd and self.combination.is_psd

    def to_dict(self) -> dict:
        return {"base": self.base.to_dict(),
                "combination": self.combination.to_dict(),
                "passed": self.passed}


def hausdorff_test(y, a, b, m: int) -> HausdorffVerdict:
    """Order-m test for a representing measure on [a, b]."""
    if not (a < b):
        raise ValueError("need a < b")
    base = psd_status(hankel_matrix(y, m))
    combo = psd_status(hausdorff_combination(y, a, b, m))
    return HausdorffVerdict(base, combo)


@dataclass(frozen=True)
class MomentClassReport:
    """Per-order Hankel verdicts and the orders each criterion survived.

    ``*_ok_up_to`` is the largest order k such that every check of that
    family passed for all orders <= k; -1 means the order-0 check already
    failed.  ``*_checked_up_to`` records how far the data allowed the
    family to be tested at all, because a short prefix can cap the
    shifted and interval checks below ``max_order``.

    ``determinate`` is a derived hint: a sequence of moments on a compact
    interval has a unique representing measure, so it is True when every
    interval check that could be run passed, and None when no interval
    was supplied.  It reports evidence at finite order, never the
    infinite statement.
    """

    max_order: int
    hamburger_ok_up_to: int
    stieltjes_ok_up_to: int
    delta_values: tuple
    hamburger_status: tuple
    shifted_status: tuple
    stieltjes_checked_up_to: int
    hausdorff_interval: tuple = None
    hausdorff_ok_up_to: int = None
    hausdorff_checked_up_to: int = None
    hausdorff_status: tuple = ()
    determinate: bool = None
    failure_witnesses: tuple = ()

    def to_json(self) -> str:
        def endpoint(e):
            return format_rational(e) if isinstance(e, Fraction) else str(e)

        out = {
            "schema": "momentlab/classify/v1",
            "max_order": self.max_order,
            "hamburger_ok_up_to": self.hamburger_ok_up_to,
            "stieltjes_ok_up_to": self.stieltjes_ok_up_to,
            "stieltjes_checked_up_to": self.stieltjes_checked_up_to,
            "delta_values": [format_rational(d) for d in self.delta_values],
            "hamburger_status": list(self.hamburger_status),
            "shifted_status": list(self.shifted_status),
            "failures": [
                {"family": fam, "order": order, **verdict.to_dict()}
                for fam, order, verdict in self.failure_witnesses
            ],
        }
        if self.hausdorff_interval is not None:
            out["hausdorff_interval"] = [endpoint(e) for e in self.hausdorff_interval]
            out["hausdorff_ok_up_to"] = self.hausdorff_ok_up_to
            out["hausdorff_checked_up_to"] = self.hausdorff_checked_up_to
            out["hausdorff_status"] = list(self.hausdorff_status)
            out["determinate"] = self.determinate
        return json.dumps(out)

    @property
    def passed(self) -> bool:
        """True when no check that could be run recorded a failure."""
        return not self.failure_witnesses


def classify(y, m: int, interval=None) -> MomentClassReport:
    """Run the Hankel criteria family by family up to order m.

    The plain Hankel checks require 2m+1 values; the shifted and
    interval checks consume slightly longer prefixes and are capped at
    whatever the data supports.  Checking stops at the first failing
    order of each family since a failure at order k forces failures at
    every higher order.
    """
    vals = _values(y)
    if len(vals) < 2 * m + 1:
        raise InsufficientData(f"need {2 * m + 1} values for order {m}")

    failures = []

    ham_status = []
    ham_ok = m
    for k in range(m + 1):
        verdict = psd_status(hankel_matrix(vals, k))
        ham_status.append(verdict.status)
        if not verdict.is_psd:
            ham_ok = k - 1
            failures.append(("hamburger", k, verdict))
            break

    sh_checked = min(m, (len(vals) - 2) // 2)
    sh_status = []
    sh_ok = sh_checked
    for k in range(sh_checked + 1):
        verdict = psd_status(hankel_matrix(vals, k, shift=1))
        sh_status.append(verdict.status)
        if not verdict.is_psd:
            sh_ok = k - 1
            failures.append(("stieltjes-shifted", k, verdict))
            break

    stieltjes_ok = min(ham_ok, sh_ok)

    deltas = tuple(hankel_det(vals, k) for k in range(m + 1))

    hs_interval = None
    hs_ok = None
    hs_checked = None
    hs_status = ()
    determinate = None
    if interval is not None:
        a, b = interval
        hs_interval = (a, b)
        hs_checked = min(m, (len(vals) - 3) // 2)
        status = []
        hs_ok = hs_checked
        for k in range(hs_checked + 1):
            verdict = hausdorff_test(vals, a, b, k)
            status.append("pass" if verdict.passed else "fail")
            if not verdict.passed:
                hs_ok = k - 1
                bad = verdict.combination if not verdict.combination.is_psd else verdict.base
                failures.append(("hausdorff", k, bad))
                break
        hs_status = tuple(status)
        determinate = hs_ok == hs_checked and hs_checked >= 0

    return MomentClassReport(
        max_order=m,
        hamburger_ok_up_to=ham_ok,
        stieltjes_ok_up_to=stieltjes_ok,
        delta_values=deltas,
        hamburger_status=tuple(ham_status),
        shifted_status=tuple(sh_status),
        stieltjes_checked_up_to=sh_checked,
        hausdorff_interval=hs_interval,
        hausdorff_ok_up_to=hs_ok,
        hausdorff_checked_up_to=hs_checked,
        hausdorff_status=hs_status,
        determinate=determinate,
        failure_witnesses=tuple(failures),
    )
