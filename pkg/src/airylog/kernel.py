"""Scalar numerics kernel: gamma, Pochhammer, compensated summation and
the generalized hypergeometric series engine.

Every closed form in the package funnels through :func:`hyp_pfq`.  The
series is summed by forward term-ratio recursion

    t_{k+1} = t_k * prod(a_i + k) / prod(b_j + k) * z / (k + 1),

with parameters kept as exact rationals so each ratio is applied as an
integer multiply / integer divide on the double-double accumulator.  The
alternating series in scope have non-monotone term magnitudes, so
termination requires three consecutive terms below tolerance.

The environment variable ``AIRYLOG_MAX_TERMS`` overrides the term cap.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .ddreal import (
    XReal,
    dd_add,
    dd_div,
    dd_div_f,
    dd_exp,
    dd_ln,
    dd_mul,
    dd_mul_f,
    dd_powi,
    dd_sub,
    PI,
    SQRT3,
    TWO_PI,
)
from .errors import ConvergenceError, DomainError

DEFAULT_MAX_TERMS = 10_000

#: Bernoulli numbers B_2 .. B_26, used by the Stirling series.
_BERNOULLI = [
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
    Fraction(854513, 138),
    Fraction(-236364091, 2730),
    Fraction(8553103, 6),
]


def _max_terms() -> int:
    raw = os.environ.get("AIRYLOG_MAX_TERMS")
    if raw is None:
        return DEFAULT_MAX_TERMS
    try:
        return max(1, int(raw))
    except ValueError:
        return DEFAULT_MAX_TERMS


def _lngamma_dd(z):
    """log Gamma on (0, inf) as a dd pair, via Stirling after an upward
    shift to z + n >= 40 where the Bernoulli tail is below 1e-35."""
    shift = []
    zh = z
    while zh[0] < 40.0:
        shift.append(zh)
        zh = dd_add(zh, (1.0, 0.0))
    # Stirling at zh
    lnz = dd_ln(zh)
    res = dd_mul(dd_sub(zh, (0.5, 0.0)), lnz)
    res = dd_sub(res, zh)
    half_ln2pi = dd_mul_f(dd_ln(TWO_PI.pair), 0.5)
    res = dd_add(res, half_ln2pi)
    zinv2 = dd_powi(zh, -2)
    p = dd_powi(zh, -1)
    acc = (0.0, 0.0)
    for n, b in enumerate(_BERNOULLI, start=1):
        term = dd_mul_f(p, float(b.numerator))
        term = dd_div_f(term, float(b.denominator * (2 * n) * (2 * n - 1)))
        acc = dd_add(acc, term)
        if abs(term[0]) < 1e-36 * max(1.0, abs(res[0])):
            break
        p = dd_mul(p, zinv2)
    res = dd_add(res, acc)
    # undo the recurrence shift: lnGamma(z) = lnGamma(z+n) - sum ln(z+k)
    for zk in shift:
        res = dd_sub(res, dd_ln(zk))
    return res


def gamma(x: Union[int, float, Fraction, XReal], dd: bool = False) -> XReal:
    """Gamma function for real non-pole arguments, |x| <= ~170.

    Relative error <= 1e-15 in binary64 mode; the dd path is accurate to
    ~1e-30 and is used for the high-precision constants of the Airy
    series.  Non-positive integers raise :class:`DomainError`.
    """
    xf = float(x)
    if xf <= 0.0 and xf == math.floor(xf):
        raise DomainError(f"gamma pole at {x}")
    if not dd:
        return XReal(math.gamma(xf))
    if isinstance(x, XReal):
        pair = x.pair
    elif isinstance(x, Fraction):
        pair = XReal.from_fraction(x).pair
    else:
        pair = (float(x), 0.0)
    if pair[0] > 0.0:
        return XReal.from_pair(dd_exp(_lngamma_dd(pair)))
    # reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)); sin through
    # float is the accuracy bottleneck, fine for the |x| < 1 uses here.
    one_minus = dd_sub((1.0, 0.0), pair)
    g = dd_exp(_lngamma_dd(one_minus))
    s = math.sin(math.pi * xf)
    denom = dd_mul_f(g, s)
    return XReal.from_pair(dd_div(PI.pair, denom))


def pochhammer(z: Union[float, Fraction], n: int) -> XReal:
    """(z)_n by direct product.

    Matches Gamma(z+n)/Gamma(z) to <= 1e-13 relative for n <= 30 and
    z in [0.1, 10]; exact (Fraction product) when z is rational.
    """
    if n < 0:
        raise DomainError("pochhammer needs n >= 0")
    if isinstance(z, Fraction):
        acc = Fraction(1)
        for k in range(n):
            acc *= z + k
        return XReal.from_fraction(acc)
    acc = (1.0, 0.0)
    for k in range(n):
        acc = dd_mul_f(acc, z + k)
    return XReal.from_pair(acc)


def compensated_sum(terms: Sequence) -> XReal:
    """Neumaier-compensated total of floats and/or XReals.

    Error <= 2 ulp of the exact sum for up to 1e6 terms; XReal inputs
    contribute both components.
    """
    s = 0.0
    comp = 0.0
    for t in terms:
        if isinstance(t, XReal):
            parts = (t.hi, t.lo)
        else:
            parts = (float(t),)
        for x in parts:
            total = s + x
            if abs(s) >= abs(x):
                comp += (s - total) + x
            else:
                comp += (x - total) + s
            s = total
    return XReal(s, comp)


@dataclass(frozen=True)
class HypSeries:
    """A pFq specification: numerator/denominator parameters and argument.

    Denominator parameters must avoid non-positive integers; only p <= q+1
    occurs in this package (1F2, 2F3, 3F4), for which the series is entire.
    """

    a_params: tuple
    b_params: tuple
    z: Union[float, XReal]

    def __post_init__(self):
        for b in self.b_params:
            bf = Fraction(b)
            if bf <= 0 and bf.denominator == 1:
                raise DomainError(f"denominator parameter {b} is a non-positive integer")
        if len(self.a_params) > len(self.b_params) + 1:
            raise DomainError("p > q + 1 series diverge for z != 0")


def hyp_pfq(
    series: HypSeries,
    tol: float = 1e-16,
    dd: bool = True,
    max_terms: int | None = None,
) -> XReal:
    """Sum the generalized hypergeometric series by term recursion.

    Terminates once |t_k| < tol*|S| holds for three consecutive terms;
    the returned value then carries error <= 10*tol relative (plus the
    intrinsic cancellation floor of the working precision).  Raises
    :class:`ConvergenceError` with the partial sum when the cap (default
    10000 terms, override via AIRYLOG_MAX_TERMS) is hit.
    """
    a = [Fraction(x) for x in series.a_params]
    b = [Fraction(x) for x in series.b_params]
    cap = max_terms if max_terms is not None else _max_terms()

    if isinstance(series.z, XReal):
        zp = series.z.pair
    else:
        zp = (float(series.z), 0.0)
    if zp[0] == 0.0 and zp[1] == 0.0:
        return XReal(1.0)

    if dd:
        term = (1.0, 0.0)
        total = (1.0, 0.0)
        small = 0
        for k in range(cap):
            num = 1
            den = k + 1
            for ai in a:
                num *= ai.numerator + k * ai.denominator
                den *= ai.denominator
            for bj in b:
                num *= bj.denominator
                den *= bj.numerator + k * bj.denominator
            term = dd_mul(term, zp)
            term = dd_mul_f(term, float(num)) if abs(num) <= 2**53 else dd_mul(
                term, XReal.from_fraction(Fraction(num)).pair
            )
            term = dd_div_f(term, float(den)) if abs(den) <= 2**53 else dd_div(
                term, XReal.from_fraction(Fraction(den)).pair
            )
            total = dd_add(total, term)
            if abs(term[0]) < tol * abs(total[0]) + 1e-300:
                small += 1
                if small >= 3:
                    return XReal.from_pair(total)
            else:
                small = 0
        raise ConvergenceError(
            f"pFq did not converge in {cap} terms",
            partial=XReal.from_pair(total),
            terms=cap,
        )

    # binary64 path with Neumaier compensation
    z = zp[0] + zp[1]
    term = 1.0
    s = 1.0
    comp = 0.0
    small = 0
    for k in range(cap):
        num = 1
        den = k + 1
        for ai in a:
            num *= ai.numerator + k * ai.denominator
            den *= ai.denominator
        for bj in b:
            num *= bj.denominator
            den *= bj.numerator + k * bj.denominator
        term *= z * num / den
        total = s + term
        if abs(s) >= abs(term):
            comp += (s - total) + term
        else:
            comp += (term - total) + s
        s = total
        if abs(term) < tol * abs(s) + 1e-300:
            small += 1
            if small >= 3:
                return XReal(s, comp)
        else:
            small = 0
    raise ConvergenceError(
        f"pFq did not converge in {cap} terms", partial=XReal(s, comp), terms=cap
    )


def hyp(a_params, b_params, z, tol: float = 1e-16, dd: bool = True,
        max_terms: int | None = None) -> XReal:
    """Convenience wrapper: hyp((1,3),(2,3,...),z) with Fraction coercion."""
    return hyp_pfq(
        HypSeries(tuple(Fraction(x) for x in a_params),
                  tuple(Fraction(x) for x in b_params), z),
        tol=tol,
        dd=dd,
        max_terms=max_terms,
    )


# -- shared high-precision constants ----------------------------------------

GAMMA_1_3 = gamma(Fraction(1, 3), dd=True)
GAMMA_2_3 = gamma(Fraction(2, 3), dd=True)

# import-time self check: reflection Gamma(1/3)Gamma(2/3) = 2 pi / sqrt(3)
_refl = GAMMA_1_3 * GAMMA_2_3 - TWO_PI / SQRT3
if abs(float(_refl)) > 1e-28:
    raise AssertionError("gamma constants failed the reflection check")

_CBRT3 = XReal.from_pair(dd_exp(dd_div_f(dd_ln((3.0, 0.0)), 3.0)))  # 3**(1/3)
CBRT3 = _CBRT3
#: Ai(0) = 3**(-2/3) / Gamma(2/3)
AI0 = 1 / (_CBRT3 * _CBRT3 * GAMMA_2_3)
#: Ai'(0) = -3**(-1/3) / Gamma(1/3)
AIP0 = -1 / (_CBRT3 * GAMMA_1_3)
#: Bi(0) = sqrt(3) Ai(0)
BI0 = SQRT3 * AI0
#: Bi'(0) = -sqrt(3) Ai'(0)
BIP0 = -SQRT3 * AIP0
#: eta = Ai(0)/Ai'(0)  (negative)
ETA = AI0 / AIP0
