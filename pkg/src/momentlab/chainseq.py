"""Chain sequences and support certificates for eventually-constant data.

A sequence (a_n) is a chain sequence when a_n = (1 - g_n) g_{n+1} for
some parameters with g_0 in [0, 1) and all later g_n in [0, 1).  The
constructive decision procedure runs the minimal parameter sequence
(g_0 = 0, g_{n+1} = a_n / (1 - g_n)): a chain sequence exists exactly
when these stay inside [0, 1).

For the quadruple (p, s; q, t) with q, t > 0 the candidate support
interval of the representing measure is [s - 2 sqrt(t), s + 2 sqrt(t)].
At either endpoint x the ratio sequence

    alpha_n(x) = t_{n+1} / ((s_n - x)(s_{n+1} - x))

is eventually the constant 1/4 exactly, which turns the infinite chain
condition into a finite check plus a closed-form tail argument: once the
minimal parameter entering the constant-1/4 tail is <= 1/2 every later
parameter stays inside [1/4, 1/2], and once it exceeds 1/2 the
parameters grow strictly and escape [0, 1) after finitely many steps.
Certificates therefore combine an exact finite prefix run with the
exact tail bound, and are decided entirely in Q(sqrt(t)).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisFailure, LengthMismatch, PoleAt, ZeroTau
from .exact import collapse, ensure_fraction, format_rational, is_exact, sqrt_exact
from .orthopoly import true_interval_estimate
from .seqcore import SigmaTauSpec

__all__ = [
    "ChainVerdict",
    "TailCertificate",
    "SupportCertificate",
    "SupportReport",
    "alpha_sequence",
    "minimal_parameters",
    "is_chain_with_parameters",
    "constant_tail_certificate",
    "support_interval",
    "certify_support",
]

#: |a_n - (1-g_n) g_{n+1}| tolerance when verifying float-valued data.
FLOAT_TOL = 1e-12


def alpha_sequence(spec: SigmaTauSpec, x, n_max: int):
    """alpha_0 .. alpha_{n_max} at the point x.

    Exact when x is exact (Fraction or Surd); floats propagate as
    floats.  Raises PoleAt(n) when x collides with some s_n.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    out = []
    diffs = []
    for n in range(n_max + 2):
        d = spec.sigma(n) - x
        if d == 0:
            raise PoleAt(n)
        diffs.append(d)
    for n in range(n_max + 1):
        out.append(collapse(spec.tau(n + 1) / (diffs[n] * diffs[n + 1])))
    return out


@dataclass(frozen=True)
class ChainVerdict:
    """Result of running the minimal parameter recursion.

    ``is_chain_up_to`` is the largest index n such that a_0 .. a_n were
    consumed with every parameter inside [0, 1); -1 if a_0 already
    failed.  ``failure_index`` is the first offending index, or None.
    """

    is_chain_up_to: int
    parameters: tuple
    failure_index: int = None
    mode: str = "minimal_parameters"

    @property
    def ok(self) -> bool:
        return self.failure_index is None

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "is_chain_up_to": self.is_chain_up_to,
            "failure_index": self.failure_index,
            "parameters_head": [str(g) for g in self.parameters[:8]],
        }


def minimal_parameters(a, n_max: int = None) -> ChainVerdict:
    """Run g_0 = 0, g_{n+1} = a_n / (1 - g_n) and watch the range.

    The input may be exact scalars or floats; comparisons are exact in
    the exact case.  A zero a_n is accepted (its parameter is 0), which
    deliberately widens the textbook range (0, 1) for later parameters
    to [0, 1): the all-zero sequence then counts as a chain sequence.
    """
    a = list(a)
    if not a:
        raise ValueError("need at least one value")
    if n_max is not None:
        a = a[:n_max + 1]
    zero = a[0] * 0
    one = zero + 1
    params = [zero]
    failure = None
    for n, an in enumerate(a):
        denom = one - params[-1]
        if denom <= zero:
            failure = n
            break
        g = an / denom
        if g < zero or g >= one:
            params.append(g)
            failure = n
            break
        params.append(g)
    up_to = (failure - 1) if failure is not None else len(a) - 1
    return ChainVerdict(up_to, tuple(params), failure)


def is_chain_with_parameters(a, g, tol: float = FLOAT_TOL) -> bool:
    """Verify an explicitly proposed parameter sequence.

    Checks 0 <= g_0 < 1, 0 < g_{n+1} < 1 and a_n = (1 - g_n) g_{n+1}
    for every n; the product comparison is exact for exact scalars and
    within ``tol`` for floats.
    """
    a = list(a)
    g = list(g)
    if len(g) != len(a) + 1:
        raise LengthMismatch(f"need {len(a) + 1} parameters for {len(a)} values")
    if not (0 <= g[0] < 1):
        return False
    for gk in g[1:]:
        if not (0 < gk < 1):
            return False
    for n, an in enumerate(a):
        prod = (1 - g[n]) * g[n + 1]
        if is_exact(an) and is_exact(prod):
            if prod != an:
                return False
        elif abs(float(prod) - float(an)) > tol:
            return False
    return True


@dataclass(frozen=True)
class TailCertificate:
    """Closed-form chain argument for a constant tail.

    For tail value c <= 1/4 the map g -> c / (1 - g) sends [0, g_plus]
    into itself, where g_plus = (1 + sqrt(1 - 4c)) / 2 is its upper
    fixed point; an entry parameter <= g_plus therefore certifies the
    chain condition for the entire infinite tail.  Above g_plus the
    parameters increase strictly and escape [0, 1).
    """

    ok: bool
    tail_value: object
    entry_parameter: object
    bound: object

    def to_dict(self) -> dict:
        return {"ok": self.ok,
                "tail_value": str(self.tail_value),
                "entry_parameter": str(self.entry_parameter),
                "bound": str(self.bound)}


def constant_tail_certificate(entry_parameter, tail_value) -> TailCertificate:
    """Decide the infinite constant tail exactly."""
    c = tail_value
    if not is_exact(c) or not is_exact(entry_parameter):
        raise TypeError("tail certificates require exact scalars")
    if c < 0 or entry_parameter < 0 or entry_parameter >= 1:
        return TailCertificate(False, c, entry_parameter, None)
    if c == 0:
        return TailCertificate(True, c, entry_parameter, Fraction(1))
    quarter = Fraction(1, 4)
    if c > quarter:
        return TailCertificate(False, c, entry_parameter, None)
    disc = collapse(1 - 4 * c)
    if not isinstance(disc, Fraction):
        raise TypeError("constant tail bounds need a rational tail value")
    g_plus = collapse((1 + sqrt_exact(disc)) / 2)
    ok = entry_parameter <= g_plus
    return TailCertificate(bool(ok), c, entry_parameter, g_plus)


@dataclass(frozen=True)
class SupportCertificate:
    """The interval [s - 2 sqrt(t), s + 2 sqrt(t)] and its hypotheses.

    ``initial_parameter_ok`` records whether the closed-form head
    parameter g_0 = 1 - q / (sqrt(t) (p - s + 2 sqrt(t))) lands in
    [0, 1); the three printed hypotheses do not imply it, so it is
    tracked separately and the chain run in :func:`certify_support` is
    the final arbiter.
    """

    p: Fraction
    s: Fraction
    q: Fraction
    t: Fraction
    lower: object
    upper: object
    p_above_lower: bool
    q_below_upper: bool
    t_below_upper: bool
    stieltjes_flag: bool
    g0: object = None
    initial_parameter_ok: bool = None

    @property
    def hypotheses_ok(self) -> bool:
        return self.p_above_lower and self.q_below_upper and self.t_below_upper

    def interval_floats(self):
        return float(self.lower), float(self.upper)

    def to_json(self) -> str:
        lo, hi = self.interval_floats()
        return json.dumps({
            "schema": "momentlab/support/v1",
            "p": format_rational(self.p), "s": format_rational(self.s),
            "q": format_rational(self.q), "t": format_rational(self.t),
            "interval": {
                "lower": {"exact": "s-2*sqrt(t)", "approx": lo},
                "upper": {"exact": "s+2*sqrt(t)", "approx": hi},
            },
            "hypotheses": {
                "p_above_lower": self.p_above_lower,
                "q_below_upper": self.q_below_upper,
                "t_below_upper": self.t_below_upper,
            },
            "initial_parameter_ok": self.initial_parameter_ok,
            "stieltjes": self.stieltjes_flag,
            "g0": None if self.g0 is None else str(self.g0),
        })


def support_interval(p, s, q, t, strict: bool = True) -> SupportCertificate:
    """Exact certificate data for the (p, s; q, t) support interval.

    All comparisons against s +/- 2 sqrt(t) are decided in Q(sqrt(t)).
    With ``strict`` (the default) a failing hypothesis raises
    HypothesisFailure naming the offending inequalities; pass
    ``strict=False`` to get the certificate with its False flags.
    """
    p, s, q, t = (ensure_fraction(v) for v in (p, s, q, t))
    if q == 0 or t == 0:
        raise ZeroTau("q and t must be nonzero")
    if q < 0 or t < 0:
        raise ValueError("support certificates need q > 0 and t > 0")
    root = sqrt_exact(t)
    lower = collapse(s - 2 * root)
    upper = collapse(s + 2 * root)
    flags = {
        "p > s-2*sqrt(t)": p > lower,
        "q < s+2*sqrt(t)": q < upper,
        "t < s+2*sqrt(t)": t < upper,
    }
    failed = [name for name, ok in flags.items() if not ok]
    if failed and strict:
        raise HypothesisFailure(failed)
    g0 = None
    g0_ok = None
    if p > lower:
        g0 = collapse(1 - q / (root * (p - lower)))
        g0_ok = bool(0 <= g0) and bool(g0 < 1)
    return SupportCertificate(
        p=p, s=s, q=q, t=t, lower=lower, upper=upper,
        p_above_lower=flags["p > s-2*sqrt(t)"],
        q_below_upper=flags["q < s+2*sqrt(t)"],
        t_below_upper=flags["t < s+2*sqrt(t)"],
        stieltjes_flag=bool(lower >= 0),
        g0=g0,
        initial_parameter_ok=g0_ok,
    )


@dataclass(frozen=True)
class SupportReport:
    """Verification record for one (p, s; q, t) support interval."""

    certificate: SupportCertificate
    n_check: int
    s_bounds_ok: bool
    left_chain: ChainVerdict
    left_tail: TailCertificate
    right_chain: ChainVerdict
    right_tail: TailCertificate
    zeros_interval: tuple
    zeros_ok: bool

    @property
    def passed(self) -> bool:
        return (self.certificate.hypotheses_ok and self.s_bounds_ok
                and self.left_chain.ok and self.left_tail.ok
                and self.right_chain.ok and self.right_tail.ok
                and self.zeros_ok)

    def to_json(self) -> str:
        return json.dumps({
            "schema": "momentlab/support-report/v1",
            "certificate": json.loads(self.certificate.to_json()),
            "n_check": self.n_check,
            "s_bounds_ok": self.s_bounds_ok,
            "left_chain": self.left_chain.to_dict(),
            "left_tail": self.left_tail.to_dict(),
            "right_chain": self.right_chain.to_dict(),
            "right_tail": self.right_tail.to_dict(),
            "zeros_interval": list(self.zeros_interval),
            "zeros_ok": self.zeros_ok,
            "passed": self.passed,
        })


# slack for the floating-point eigenvalue cross-check
_ZERO_SLACK = 1e-9


def certify_support(spec: SigmaTauSpec, n_check: int = 200,
                    zeros_order: int = 50) -> SupportReport:
    """Certify [s - 2 sqrt(t), s + 2 sqrt(t)] for a shorthand spec.

    Runs the exact chain recursion at both endpoints for ``n_check``
    steps, closes the infinite tail with the constant-1/4 argument,
    verifies s_n stays strictly between the endpoints, and cross-checks
    that the extreme zeros of the degree-``zeros_order`` polynomial fall
    inside the interval (within floating slack).
    """
    short = spec.shorthand
    if short is None:
        raise ValueError("support certification needs (p, s; q, t) shorthand data")
    p, s, q, t = short
    cert = support_interval(p, s, q, t)
    a, b = cert.lower, cert.upper

    # eventually-constant sigma takes only the values p and s
    s_bounds_ok = all(bool(v > a) and bool(v < b) for v in (p, s))

    def chain_side(x):
        alphas = alpha_sequence(spec, x, max(n_check, 2))
        if alphas[1] != alphas[-1]:
            raise ValueError("alpha tail is not constant; spec is not shorthand")
        verdict = minimal_parameters(alphas)
        if verdict.ok and len(verdict.parameters) >= 2:
            tail = constant_tail_certificate(verdict.parameters[1], alphas[1])
        else:
            tail = TailCertificate(False, Fraction(1, 4), None, None)
        return verdict, tail

    left_chain, left_tail = chain_side(a)
    right_chain, right_tail = chain_side(b)

    lo, hi = true_interval_estimate(spec, zeros_order)
    zeros_ok = (lo >= float(a) - _ZERO_SLACK) and (hi <= float(b) + _ZERO_SLACK)

    return SupportReport(
        certificate=cert,
        n_check=n_check,
        s_bounds_ok=s_bounds_ok,
        left_chain=left_chain,
        left_tail=left_tail,
        right_chain=right_chain,
        right_tail=right_tail,
        zeros_interval=(lo, hi),
        zeros_ok=zeros_ok,
    )
