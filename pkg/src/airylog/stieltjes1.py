"""Generalized Stieltjes transforms of Ai and the three series pipelines
for the first log-Airy integral.

Routes implemented for bigI_k(a) = int_0^inf Ai(x)/(x+a)^k dx:

* ``small_a``  -- the generating-function expansion: bigI_n(a) =
  sum_i xi^(i)/i! I_{i-n}(a) + lambda^(i)/i! I'_{i-n}(a), with every
  incomplete Mellin transform reduced exactly onto {I_0, I_-1, I_-2,
  Ai, Ai'}.  Excellent for a <= 4, still ~1e-10 at a ~ 12.
* ``closed_form`` -- the second-order ODE solution for bigI_1 propagated
  from initial data at a0, with the H+/H- hypergeometric antiderivatives
  (double-double mandatory: the homogeneous/particular split cancels
  ~e^{(2/3)a^{3/2}} of headroom).
* ``recurrence`` -- the three-term ladder in k (ascending from
  I_0 = 1/3 and seeds at k = 1, 2; relative error grows like a^3/k^2 per
  triple step, tracked in err_est).
* ``asymptotic`` -- the moment series in 1/a, near machine accuracy for
  a >= 13 (used for the deep roots of the N = 100 sums).

The pipelines select routes by a: small_a below 4, closed_form on
(4, 13], asymptotic beyond -- each certified against the quadrature
oracle in the validation matrix.
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction

from .airy import airy, jpair
from .ddreal import (
    XReal,
    dd_add,
    dd_div,
    dd_div_f,
    dd_ln,
    dd_mul,
    dd_mul_f,
    dd_powi,
    dd_sub,
    PI,
    SQRT3,
    SQRT_PI,
)
from .errors import AccuracyWarning, DomainError, StabilityError
from .kernel import AI0, AIP0, compensated_sum, hyp
from .mellin1 import BaseValues, reduce_In, reduce_Iprime, xi_lambda_derivs
from .results import TransformResult, TruncationConfig
from .roots import RootTable
from .zeta import zeta_closed, zeta_incomplete

_F13 = Fraction(1, 3)
_F23 = Fraction(2, 3)
_F43 = Fraction(4, 3)
_F53 = Fraction(5, 3)
_F73 = Fraction(7, 3)
_FM13 = Fraction(-1, 3)

#: route boundaries in a
SMALLA_MAX = 4.0
CLOSED_MAX = 13.0


# -- moments of Ai (exact chain) ---------------------------------------------

def _ai_moments(count: int):
    """I_m(0) = int x^m Ai dx for m = 0..count-1, as floats."""
    out = [1.0 / 3.0, -float(AIP0), float(AI0)]
    while len(out) < count:
        m = len(out) - 3
        out.append((m + 1) * (m + 2) * out[m])
    return out[:count]


def bigI_asym(k: int, a: float, max_terms: int = 60) -> TransformResult:
    """bigI_k(a) by the alternating moment series in 1/a, truncated at its
    smallest term (whose size is the error estimate).  Intended for
    a >= 13, where it reaches ~1e-13 relative."""
    if a <= 0.0:
        raise DomainError("bigI_asym needs a > 0")
    mom = _ai_moments(max_terms)
    binom = 1.0
    apow = a ** float(-k)
    best = float("inf")
    total = 0.0
    comp = 0.0
    err = float("inf")
    for m in range(max_terms):
        term = binom * mom[m] * apow * (-1.0 if m % 2 else 1.0)
        if abs(term) > best:
            err = best
            break
        best = abs(term)
        t = total + term
        comp += (total - t) + term if abs(total) >= abs(term) else (term - t) + total
        total = t
        binom *= (k + m) / (m + 1.0)
        apow /= a
    else:
        err = best
    return TransformResult(XReal(total, comp), "asymptotic", err)


def _eq8_term_asym(a: float, max_terms: int = 60) -> float:
    """1/(3a) - bigI_1(a) for large a, summed without the cancelling
    leading term."""
    mom = _ai_moments(max_terms)
    apow = a ** -2.0
    total = 0.0
    best = float("inf")
    for m in range(1, max_terms):
        term = mom[m] * apow * (-1.0 if m % 2 else 1.0)
        if abs(term) > best:
            break
        best = abs(term)
        total += term
        apow /= a
    return -total


def bigI_tail_asym(a: float) -> XReal:
    """Leading estimate of the neglected x >= a remainder of bigI_3:

        exp(-(2/3) a^{3/2}) / (16 sqrt(pi) a^{15/4}).

    The printed form of this estimate lacks the 1/16 Laplace factor and
    carries an extra 1/a; this form matches the oracle split integral
    within a factor ~2 on [4, 13].
    """
    if a < 3.0:
        raise DomainError("tail estimate valid for a >= 3")
    zeta = (2.0 / 3.0) * a ** 1.5
    return XReal(math.exp(-zeta) / (16.0 * math.sqrt(math.pi) * a ** 3.75))


# -- recurrence route ---------------------------------------------------------

def bigI_recurrence(k: int, a: float, seeds) -> TransformResult:
    """bigI_k by the three-term ladder, ascending from I_0 = 1/3 and
    ``seeds = (bigI_1(a), bigI_2(a))``.

    Ascent amplifies seed error by ~a^3/k^2 per triple step; err_est
    tracks the growth and a :class:`StabilityError` is raised when the
    estimate exceeds 10% of the value (deep k at large a should use the
    asymptotic route instead).
    """
    if k < 0:
        raise DomainError("bigI_recurrence needs k >= 0")
    if a <= 0.0:
        raise DomainError("bigI_recurrence needs a > 0")
    if k == 0:
        return TransformResult(XReal(1.0 / 3.0), "recurrence", 0.0)
    vals = {0: XReal(1.0 / 3.0), 1: XReal(seeds[0]), 2: XReal(seeds[1])}
    errs = {0: 0.0, 1: 1e-15 * abs(float(seeds[0])), 2: 1e-15 * abs(float(seeds[1]))}
    A0f, AP0f = float(AI0), float(AIP0)
    for j in range(0, k - 2):
        if j + 3 in vals:
            continue
        rhs = -AP0f / a ** (j + 1) - (j + 1) * A0f / a ** (j + 2)
        nxt = (vals[j] - a * vals[j + 1] - rhs) / ((j + 1) * (j + 2))
        vals[j + 3] = nxt
        # propagated seed error plus the rounding injected at the scale of
        # the cancelling combination (the j-th step subtracts numbers far
        # larger than its result)
        scale = abs(float(vals[j])) + a * abs(float(vals[j + 1])) + abs(rhs)
        errs[j + 3] = (errs[j] + a * errs[j + 1] + 1e-16 * scale) \
            / ((j + 1) * (j + 2))
    val = vals[k]
    err = errs[k]
    if err > 0.1 * max(1e-300, abs(float(val))):
        raise StabilityError(
            f"recurrence to k={k} at a={a} amplifies seed error beyond 10%")
    return TransformResult(val, "recurrence", err)


def ladder_residual(k: int, a: float, Ik, Ik1, Ik3) -> float:
    """Residual of the three-term ladder with externally supplied values."""
    rhs = -float(AIP0) / a ** (k + 1) - (k + 1) * float(AI0) / a ** (k + 2)
    return float(Ik) - a * float(Ik1) - (k + 1) * (k + 2) * float(Ik3) - rhs


# -- closed-form ODE route ----------------------------------------------------

def _H_plus(a: float, tol: float = 1e-20) -> XReal:
    ap = (float(a), 0.0)
    z = XReal.from_pair(dd_div_f(dd_powi(ap, 3), -9.0))
    f1 = hyp((_F13,), (_F43, _F43), z, tol=tol)
    f2 = hyp((_F23,), (_F43, _F53), z, tol=tol)
    f3 = hyp((1, 1), (2, 2, _F73), z, tol=tol)
    t1 = dd_mul(dd_mul(dd_mul(PI.pair, dd_powi(AIP0.pair, 2)), ap), f1.pair)
    t2 = dd_div_f(dd_mul(dd_mul(dd_mul(PI.pair, AIP0.pair), dd_powi(ap, 2)), f2.pair), 6.0)
    t3 = dd_div_f(dd_mul(dd_mul(SQRT3.pair, dd_powi(ap, 3)), f3.pair), 216.0)
    return XReal.from_pair(dd_add(dd_add(t1, t2), t3))


def _H_minus(a: float, tol: float = 1e-20) -> XReal:
    ap = (float(a), 0.0)
    z = XReal.from_pair(dd_div_f(dd_powi(ap, 3), -9.0))
    f1 = hyp((_FM13,), (_F23, _F23), z, tol=tol)
    f2 = hyp((_F13,), (_F23, _F43), z, tol=tol)
    f3 = hyp((1, 1), (2, 2, _F53), z, tol=tol)
    t1 = dd_div(dd_mul(dd_mul(PI.pair, dd_powi(AI0.pair, 2)), f1.pair), ap)
    t2 = dd_div_f(dd_mul(dd_mul(dd_mul(PI.pair, AI0.pair), ap), f2.pair), 3.0)
    t3 = dd_div_f(dd_mul(dd_mul(SQRT3.pair, dd_powi(ap, 3)), f3.pair), 108.0)
    return XReal.from_pair(dd_add(dd_sub(t2, t1), t3))


def bigI1_closed(a: float, a0: float, I1_at_a0, I2_at_a0) -> TransformResult:
    """bigI_1(a) from initial data (bigI_1, bigI_2) at a0, by the
    variation-of-parameters solution of the inhomogeneous Airy ODE.

    Double-double throughout; a cancellation warning is emitted when the
    result is smaller than 1e-6 of the largest intermediate.
    """
    if not (0.0 < a <= CLOSED_MAX and 0.0 < a0 <= CLOSED_MAX):
        raise DomainError("closed form supports a, a0 in (0, 13]")
    ja = jpair(a)
    j0 = jpair(a0)
    pref = PI / (2 * SQRT3)
    hom = pref * (
        XReal(float(I1_at_a0)) * (ja.jminus * j0.jplus_prime - ja.jplus * j0.jminus_prime)
        - XReal(float(I2_at_a0)) * (ja.jminus * j0.jplus - ja.jplus * j0.jminus)
    )
    dHp = _H_plus(a) - _H_plus(a0)
    dHm = _H_minus(a) - _H_minus(a0)
    ai_ma = airy(-a).ai
    dlog = XReal.from_pair(dd_sub(dd_ln((a, 0.0)), dd_ln((a0, 0.0))))
    val = hom + ja.jplus * dHp + ja.jminus * dHm - ai_ma * dlog
    scale = max(abs(float(hom)), abs(float(ja.jplus * dHp)),
                abs(float(ja.jminus * dHm)), abs(float(ai_ma * dlog)))
    # cancellation floor: pFq headroom ~ e^{(2/3)a^{3/2}} over 1e-32
    headroom = math.exp((2.0 / 3.0) * max(a, a0) ** 1.5)
    err = max(scale, headroom * 0.02) * 2e-31 + 1e-16 * abs(float(val))
    if abs(float(val)) < 1e-6 * scale:
        warnings.warn("bigI1_closed lost more than six digits to cancellation",
                      AccuracyWarning)
    return TransformResult(val, "closed_form", err)


def bigI_relations(a: float, I3, I4):
    """(bigI_1, bigI_2) from (bigI_3, bigI_4) by the exact ladder:

        I1 = 1/(3a) + Ai'(0)/a^2 + Ai(0)/a^3 - (2/a) I3
        I2 = 1/(3a^2) + 2Ai'(0)/a^3 + 3Ai(0)/a^4 - (2/a^2) I3 - (6/a) I4

    The I3 coefficient in the printed I2 relation reads 2/a^3; eliminating
    I1 between the k = 0 and k = 1 ladder steps gives 2/a^2, and only that
    version satisfies the ladder with quadrature values substituted (see
    the discrepancy report).
    """
    if a <= 0.0:
        raise DomainError("bigI_relations needs a > 0")
    I3x = I3 if isinstance(I3, XReal) else XReal(float(I3))
    I4x = I4 if isinstance(I4, XReal) else XReal(float(I4))
    ai = (1.0 / (3.0 * a)) + AIP0 / (a * a) + AI0 / a ** 3 - (2.0 / a) * I3x
    bi = XReal(1.0 / (3.0 * a * a)) + 2 * AIP0 / a ** 3 + 3 * AI0 / a ** 4 \
        - (2.0 / (a * a)) * I3x - (6.0 / a) * I4x
    return ai, bi


def bigI3_from_I1(a: float, I1) -> XReal:
    """bigI_3 = 1/6 + Ai'(0)/(2a) + Ai(0)/(2a^2) - (a/2) bigI_1."""
    I1x = I1 if isinstance(I1, XReal) else XReal(float(I1))
    return XReal(1.0 / 6.0) + AIP0 / (2 * a) + AI0 / (2 * a * a) - (a / 2) * I1x


# -- small-a generating-function route ----------------------------------------

def bigI_smalla(n: int, a: float, k_max: int = 10) -> TransformResult:
    """bigI_n(a) assembled from I_0, I_-1, I_-2, Ai, Ai' with the
    xi/lambda derivative ladders, truncated at i = n + 3 k_max + 2.

    Designed for n in [1, 6] and a <= 4, where ten triples already give
    ~1e-12; it degrades gracefully to ~1e-9 around a = 12 with k_max 18.
    """
    if n < 1 or n > 6:
        raise DomainError("bigI_smalla supports n in [1, 6]")
    if a <= 0.0:
        raise DomainError("bigI_smalla needs a > 0")
    i_max = n + 3 * k_max + 2
    xs, ls = xi_lambda_derivs(i_max, a)
    base = BaseValues(a)
    total = (0.0, 0.0)
    tail_mag = 0.0
    fact = 1.0
    for i in range(i_max + 1):
        if i > 0:
            fact *= i
        tx = dd_mul(xs[i].pair, base.eval_reduction(reduce_In(i - n)))
        tl = dd_mul(ls[i].pair, base.eval_reduction(reduce_Iprime(i - n)))
        term = dd_div_f(dd_add(tx, tl), fact)
        total = dd_add(total, term)
        if i > i_max - 3:
            tail_mag = max(tail_mag, abs(term[0]))
    err = 10.0 * tail_mag + 1e-15 * abs(total[0])
    val = XReal.from_pair(total)
    if err > 1e-6 * max(1.0, abs(float(val))):
        warnings.warn(f"bigI_smalla truncation estimate {err:.2e} is large",
                      AccuracyWarning)
    return TransformResult(val, "small_a", err)


# -- route dispatch and the series pipelines ----------------------------------

class StieltjesContext:
    """Initial data and route dispatch for the per-root transforms.

    Seeds bigI_1, bigI_2 at a0 = |a_1'| come from the small-a route by
    default (keeping the whole pipeline analytic); ``seed_source='oracle'``
    switches to quadrature values, which decouples the ODE route from the
    expansion route when cross-validating the two.
    """

    def __init__(self, roots: RootTable, seed_source: str = "small_a"):
        self.roots = roots
        self.a0 = float(roots[1])
        if seed_source == "small_a":
            i3 = bigI_smalla(3, self.a0).value
            i4 = bigI_smalla(4, self.a0).value
        elif seed_source == "oracle":
            from .oracle import oracle_stieltjes

            i3 = oracle_stieltjes("Ai", 3, self.a0).xreal
            i4 = oracle_stieltjes("Ai", 4, self.a0).xreal
        else:
            raise DomainError(f"unknown seed source {seed_source!r}")
        self.I3_a0 = i3
        self.I4_a0 = i4
        self.I1_a0, self.I2_a0 = bigI_relations(self.a0, i3, i4)

    def bigI1(self, a: float) -> TransformResult:
        if a <= SMALLA_MAX:
            res = bigI_smalla(1, a)
        elif a <= CLOSED_MAX:
            res = bigI1_closed(a, self.a0, self.I1_a0, self.I2_a0)
        else:
            res = bigI_asym(1, a)
        return res

    def bigI3(self, a: float) -> TransformResult:
        if a <= SMALLA_MAX:
            return bigI_smalla(3, a)
        if a <= CLOSED_MAX:
            r = self.bigI1(a)
            return TransformResult(bigI3_from_I1(a, r.value), "closed_form",
                                   r.err_est * a)
        return bigI_asym(3, a)

    def eq8_term(self, a: float) -> XReal:
        if a > CLOSED_MAX:
            return XReal(_eq8_term_asym(a))
        return XReal(1.0 / (3.0 * a)) - self.bigI1(a).value


def integral1_series(route: str, N: int, roots: RootTable,
                     ctx: StieltjesContext | None = None) -> XReal:
    """The two plain root-series for the first integral.

    route 'eq3': (2/Ai'(0)) sum bigI_3(|a_n'|)/|a_n'|;
    route 'eq8': (1/Ai'(0)) sum {1/(3|a_n'|) - bigI_1(|a_n'|)}.
    """
    if route not in ("eq3", "eq8"):
        raise DomainError("route must be 'eq3' or 'eq8'")
    if N > roots.n_max:
        raise DomainError("not enough roots tabulated")
    ctx = ctx or StieltjesContext(roots)
    terms = []
    for n in range(1, N + 1):
        r = float(roots[n])
        if route == "eq3":
            terms.append(ctx.bigI3(r).value / r)
        else:
            terms.append(ctx.eq8_term(r))
    total = compensated_sum(terms)
    scale = (2 / AIP0) if route == "eq3" else (1 / AIP0)
    return scale * total


def integral1_accelerated(cfg: TruncationConfig, roots: RootTable,
                          ctx: StieltjesContext | None = None) -> XReal:
    """Zeta-accelerated representation of the first integral:

        (2/Ai'(0)) sum_{n<=N} bigI_3(r_n)/r_n
        + (1/(3 Ai'(0))) sum_{k<=n} (-1)^k (k+2)!/(3^{k/3} Gamma(k/3+1))
                                    {Z_{k+4} - Z_{k+4}(N)}.
    """
    ctx = ctx or StieltjesContext(roots)
    head = integral1_series("eq3", cfg.N, roots, ctx)
    tail_terms = []
    for k in range(cfg.n + 1):
        coeff = math.factorial(k + 2) / (3.0 ** (k / 3.0) * math.gamma(k / 3.0 + 1.0))
        if k % 2:
            coeff = -coeff
        gap = zeta_closed(k + 4) - zeta_incomplete(k + 4, cfg.N, roots)
        tail_terms.append(coeff * gap)
    tail = compensated_sum(tail_terms) / (3 * AIP0)
    return head + tail
