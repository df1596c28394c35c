"""Airy functions Ai, Bi, their derivatives, the Scorer function Gi, and
the sqrt(3)*Ai(-a) +/- Bi(-a) combinations used throughout the package.

Evaluation is by the Maclaurin pair

    Ai(x) = Ai(0) f(x) + Ai'(0) g(x),      Bi(x) = sqrt(3) [Ai(0) f - Ai'(0) g],

summed in double-double arithmetic for |x| <= 16 (the alternating series
cancels ~e^{(2/3)|x|^{3/2}} of headroom, which double-double absorbs up to
that point), and by the standard exponential asymptotic expansions for
x > 9.5 on the positive axis.  Negative-argument oscillatory asymptotics
are not implemented; every consumer stays within the series range on the
negative side.

All functions are pure; no shared mutable state.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ddreal import (
    XReal,
    dd_add,
    dd_div,
    dd_div_f,
    dd_exp,
    dd_mul,
    dd_mul_f,
    dd_neg,
    dd_sqrt,
    dd_sub,
    PI,
    SQRT3,
    SQRT_PI,
)
from .errors import RangeError
from .kernel import AI0, AIP0, BI0, BIP0

#: switch from Maclaurin series to asymptotic expansion on the positive
#: axis; above this the Ai-side cancellation (e^{(4/3)x^{3/2}}) outruns the
#: double-double headroom while the asymptotic tail is already ~1e-15
X_SWITCH = 9.5
#: series supported on [-SERIES_MAX, SERIES_MAX]
SERIES_MAX = 16.0
#: asymptotics supported up to this argument
ASYM_MAX = 30.0

_SERIES_CAP = 400


@dataclass(frozen=True)
class AiryState:
    """Ai, Ai', Bi, Bi' bundled at a point.

    Wronskian identity: ai*bip - aip*bi = 1/pi, held to <= 1e-12 relative
    over |x| <= 15 (far better inside the series range).
    """

    x: float
    ai: XReal
    aip: XReal
    bi: XReal
    bip: XReal

    def wronskian(self) -> XReal:
        return self.ai * self.bip - self.aip * self.bi


@dataclass(frozen=True)
class JPair:
    """The combinations sqrt(3)*Ai(-a) -/+ Bi(-a) and their derivatives.

    ``jminus/jplus`` hold sqrt(3)Ai(-a) -+ Bi(-a); the primed fields hold
    sqrt(3)Ai'(-a) -+ Bi'(-a) (derivatives of the Airy functions, not
    d/da of the combination).
    """

    a: float
    jminus: XReal
    jplus: XReal
    jminus_prime: XReal
    jplus_prime: XReal


def _fg_series(xp):
    """f, g, f', g' of the Airy Maclaurin basis at a dd argument."""
    x3 = dd_mul(dd_mul(xp, xp), xp)
    tf = (1.0, 0.0)
    tg = xp
    f = tf
    g = tg
    fp_acc = (0.0, 0.0)  # sum of 3k * tf     -> f' = fp_acc / x
    gp_acc = tg          # sum of (3k+1) * tg -> g' = gp_acc / x
    peak = 1.0
    for k in range(_SERIES_CAP):
        tf = dd_div_f(dd_mul(tf, x3), float((3 * k + 2) * (3 * k + 3)))
        tg = dd_div_f(dd_mul(tg, x3), float((3 * k + 3) * (3 * k + 4)))
        f = dd_add(f, tf)
        g = dd_add(g, tg)
        fp_acc = dd_add(fp_acc, dd_mul_f(tf, float(3 * k + 3)))
        gp_acc = dd_add(gp_acc, dd_mul_f(tg, float(3 * k + 4)))
        m = max(abs(tf[0]), abs(tg[0]))
        peak = max(peak, m)
        if m < 1e-38 * peak:
            break
    if xp[0] == 0.0:
        return f, g, (0.0, 0.0), (1.0, 0.0)
    return f, g, dd_div(fp_acc, xp), dd_div(gp_acc, xp)


def _asym_uv(zeta, nmax: int = 60):
    """sum (-1)^k u_k zeta^-k and the v-analogue (plus the unsigned sums)
    for the exponential Airy asymptotics; truncated at the smallest term."""
    uk = (1.0, 0.0)
    vk = (1.0, 0.0)
    su_alt = (1.0, 0.0)
    sv_alt = (1.0, 0.0)
    su = (1.0, 0.0)
    sv = (1.0, 0.0)
    zpow = (1.0, 0.0)
    best = float("inf")
    for k in range(1, nmax):
        num = (6 * k - 5) * (6 * k - 3) * (6 * k - 1)
        den = (2 * k - 1) * 216 * k
        uk = dd_div_f(dd_mul_f(uk, float(num)), float(den))
        vk = dd_div_f(dd_mul_f(uk, float(6 * k + 1)), float(1 - 6 * k))
        zpow = dd_div(zpow, zeta)
        tu = dd_mul(uk, zpow)
        tv = dd_mul(vk, zpow)
        if abs(tu[0]) > best:
            break
        best = abs(tu[0])
        sign = -1.0 if k % 2 else 1.0
        su_alt = dd_add(su_alt, dd_mul_f(tu, sign))
        sv_alt = dd_add(sv_alt, dd_mul_f(tv, sign))
        su = dd_add(su, tu)
        sv = dd_add(sv, tv)
        if abs(tu[0]) < 1e-35:
            break
    return su_alt, sv_alt, su, sv


def _airy_asym_pos(x: float) -> AiryState:
    xp = (x, 0.0)
    sq = dd_sqrt(xp)
    zeta = dd_mul_f(dd_mul(xp, sq), 2.0 / 3.0)
    x14 = dd_sqrt(sq)
    em = dd_exp(dd_neg(zeta))
    ep = dd_exp(zeta)
    su_alt, sv_alt, su, sv = _asym_uv(zeta)
    two_sqrt_pi = dd_mul_f(SQRT_PI.pair, 2.0)
    ai = dd_div(dd_mul(em, su_alt), dd_mul(two_sqrt_pi, x14))
    aip = dd_neg(dd_div(dd_mul(dd_mul(em, sv_alt), x14), two_sqrt_pi))
    bi = dd_div(dd_mul(ep, su), dd_mul(SQRT_PI.pair, x14))
    bip = dd_div(dd_mul(dd_mul(ep, sv), x14), SQRT_PI.pair)
    return AiryState(
        x,
        XReal.from_pair(ai),
        XReal.from_pair(aip),
        XReal.from_pair(bi),
        XReal.from_pair(bip),
    )


def airy(x: float) -> AiryState:
    """All four Airy values at a real point, computed in double-double.

    Supported range: -16 <= x <= 30 (series up to |x| = 16, exponential
    asymptotics beyond 12.5 on the positive side).  Relative accuracy is
    ~1e-13 or better at the range edges and near machine precision for
    |x| <= 8.
    """
    x = float(x)
    if x > ASYM_MAX or x < -SERIES_MAX:
        raise RangeError(f"airy argument {x} outside [-16, 30]")
    if x > X_SWITCH:
        return _airy_asym_pos(x)
    xp = (x, 0.0)
    f, g, fp, gp = _fg_series(xp)
    a0, ap0 = AI0.pair, AIP0.pair
    ai = dd_add(dd_mul(a0, f), dd_mul(ap0, g))
    aip = dd_add(dd_mul(a0, fp), dd_mul(ap0, gp))
    bi = dd_mul(SQRT3.pair, dd_sub(dd_mul(a0, f), dd_mul(ap0, g)))
    bip = dd_mul(SQRT3.pair, dd_sub(dd_mul(a0, fp), dd_mul(ap0, gp)))
    return AiryState(
        x,
        XReal.from_pair(ai),
        XReal.from_pair(aip),
        XReal.from_pair(bi),
        XReal.from_pair(bip),
    )


def jpair(a: float) -> JPair:
    """sqrt(3)Ai(-a) -/+ Bi(-a) and the primed counterparts, |a| <= 15."""
    if abs(a) > 15.0:
        raise RangeError(f"jpair argument {a} outside [-15, 15]")
    st = airy(-a)
    sa = SQRT3 * st.ai
    sap = SQRT3 * st.aip
    return JPair(a, sa - st.bi, sa + st.bi, sap - st.bip, sap + st.bip)


#: Gi(0) = Bi(0)/3 and Gi'(0) = Bi'(0)/3
GI0 = BI0 / 3
GIP0 = BIP0 / 3


def scorer_gi(x: float):
    """Scorer Gi and Gi' on [0, 20] by the Maclaurin series of the
    inhomogeneous equation y'' = x y - 1/pi.

    Double-double summation holds ~1e-13 relative accuracy to x ~ 16;
    beyond that the growing-series cancellation erodes it (documented,
    unused by the pipelines, which stay below 13).
    """
    x = float(x)
    if x < 0.0 or x > 20.0:
        raise RangeError(f"scorer_gi argument {x} outside [0, 20]")
    xp = (x, 0.0)
    x3 = dd_mul(dd_mul(xp, xp), xp)
    inv_pi = dd_div((1.0, 0.0), PI.pair)
    # residue classes mod 3 of the coefficient ladder c_{k+3} = c_k/((k+3)(k+2))
    t0 = GI0.pair                      # k = 0 chain
    t1 = dd_mul(GIP0.pair, xp)         # k = 1 chain (times x^k)
    t2 = dd_mul_f(dd_mul(dd_mul(xp, xp), dd_neg(inv_pi)), 0.5)  # k = 2 chain
    gi = dd_add(dd_add(t0, t1), t2)
    gp_acc = dd_add(t1, dd_mul_f(t2, 2.0))  # sum of k * t_k -> Gi' = acc/x
    peak = max(abs(gi[0]), 1.0)
    k = 0
    while k < 3 * _SERIES_CAP:
        t0 = dd_div_f(dd_mul(t0, x3), float((k + 3) * (k + 2)))
        t1 = dd_div_f(dd_mul(t1, x3), float((k + 4) * (k + 3)))
        t2 = dd_div_f(dd_mul(t2, x3), float((k + 5) * (k + 4)))
        gi = dd_add(gi, dd_add(dd_add(t0, t1), t2))
        gp_acc = dd_add(gp_acc, dd_mul_f(t0, float(k + 3)))
        gp_acc = dd_add(gp_acc, dd_mul_f(t1, float(k + 4)))
        gp_acc = dd_add(gp_acc, dd_mul_f(t2, float(k + 5)))
        m = max(abs(t0[0]), abs(t1[0]), abs(t2[0]))
        peak = max(peak, m)
        if m < 1e-38 * peak:
            break
        k += 3
    gip = dd_div(gp_acc, xp) if x != 0.0 else GIP0.pair
    return XReal.from_pair(gi), XReal.from_pair(gip)


def airy_asym(x: float, order: int = 4) -> XReal:
    """Leading exponential asymptotic of Ai(x), truncated at ``order``
    correction terms; requires x >= 4."""
    if x < 4.0:
        raise RangeError("airy_asym requires x >= 4")
    xp = (x, 0.0)
    sq = dd_sqrt(xp)
    zeta = dd_mul_f(dd_mul(xp, sq), 2.0 / 3.0)
    pref = dd_div(dd_exp(dd_neg(zeta)),
                  dd_mul(dd_mul_f(SQRT_PI.pair, 2.0), dd_sqrt(sq)))
    uk = Fraction(1)
    s = (1.0, 0.0)
    zpow = (1.0, 0.0)
    for k in range(1, order + 1):
        uk *= Fraction((6 * k - 5) * (6 * k - 3) * (6 * k - 1),
                       (2 * k - 1) * 216 * k)
        zpow = dd_div(zpow, zeta)
        term = dd_mul_f(zpow, float(uk) * (-1.0 if k % 2 else 1.0))
        s = dd_add(s, term)
    return XReal.from_pair(dd_mul(pref, s))
