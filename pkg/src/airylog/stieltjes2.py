"""Stieltjes transforms of Ai^2 / Ai'^2, the third-order ODE solution for
J_1, the per-root summand of the second log-Airy integral, and its
zeta-accelerated sum.

The ODE (1/2)J''' + 2a J' + J = -(Ai'(0)^2/a + Ai(0)Ai'(0)/a^2 + Ai(0)^2/a^3)
is solved by variation of parameters over the basis Ai(-a)^2, Bi(-a)^2,
Ai(-a)Bi(-a) (Wronskian 2/pi^3):

    J_1(a)/pi^2 = Ai(-a)^2 [c1 - du1] + Bi(-a)^2 [c2 - du2]
                  + Ai(-a)Bi(-a) [c3 + 2 du3],

with du1 = int_a0^a g Bi(-z)^2 dz, du2 = int g Ai(-z)^2, du3 = int g AiBi,
g(z) = Ai'(0)^2/z + Ai(0)Ai'(0)/z^2 + Ai(0)^2/z^3.  The du integrals are
evaluated through nine hypergeometric antiderivative "masters" (argument
-4a^3/9, double-double).  Every printed intermediate of this chain was
re-derived mechanically here and cross-checked against quadrature; the
print discrepancies that surfaced (swapped/scaled u-list, the a^2 Ai Bi
term of the mixed j-bracket, the asymptotic summand coefficient -6/7 vs
-3/7) are catalogued in the discrepancy report.

Per-root evaluation switches from the closed form to the moment
(asymptotic) series at a = 11, where both routes hold ~1e-11; the overlap
agreement is part of the validation matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .airy import airy
from .ddreal import (
    XReal,
    dd_add,
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
from .errors import DomainError
from .kernel import compensated_sum, hyp
from .mellin2 import A2, AAP, AP2
from .results import TransformResult, TruncationConfig
from .roots import RootTable
from .zeta import zeta_closed, zeta_incomplete

_F13 = Fraction(1, 3)
_F16 = Fraction(1, 6)
_F12 = Fraction(1, 2)
_F23 = Fraction(2, 3)
_F43 = Fraction(4, 3)
_F53 = Fraction(5, 3)
_F56 = Fraction(5, 6)
_F73 = Fraction(7, 3)
_F76 = Fraction(7, 6)
_F83 = Fraction(8, 3)
_F32 = Fraction(3, 2)
_F116 = Fraction(11, 6)
_FM13 = Fraction(-1, 3)
_FM23 = Fraction(-2, 3)

#: closed-form route used for root magnitudes up to this; moment series beyond
J_CLOSED_MAX = 11.0


# -- hypergeometric antiderivative masters ------------------------------------

def _masters(a: float, tol: float = 1e-20):
    """Log-free parts of the three master antiderivative combinations

        M_mu(a) = Ai'(0)^2 G1_mu + Ai(0)Ai'(0) G2_mu + Ai(0)^2 G3_mu,

    where Gj_mu is the antiderivative of (mu component of the Airy
    products at -z) / z^j.  Returned in the order (box, I, II); the
    omitted logarithms carry coefficients (Ai'(0)^2, Ai(0)Ai'(0), Ai(0)^2)
    respectively.
    """
    ap = (float(a), 0.0)
    z = XReal.from_pair(dd_mul_f(dd_powi(ap, 3), -4.0 / 9.0))
    a2_, aap_, ap2_ = A2.pair, AAP.pair, AP2.pair
    a1 = ap
    a2p = dd_powi(ap, 2)
    a3 = dd_powi(ap, 3)
    inv_a = dd_powi(ap, -1)
    inv_a2 = dd_powi(ap, -2)

    # box components
    g1 = dd_mul_f(dd_mul(a3, hyp((1, 1, _F76), (_F43, _F53, 2, 2), z, tol=tol).pair), -1.0 / 9.0)
    g2 = dd_mul_f(dd_mul(inv_a, hyp((_FM13, _F16), (_F13, _F23, _F23), z, tol=tol).pair), -1.0)
    g3 = dd_mul_f(dd_mul(inv_a2, hyp((_FM23, _F16), (_F13, _F13, _F23), z, tol=tol).pair), -0.5)
    m_box = dd_add(dd_add(dd_mul(ap2_, g1), dd_mul(aap_, g2)), dd_mul(a2_, g3))

    # I components
    g1 = dd_mul(a1, hyp((_F13, _F12), (_F23, _F43, _F43), z, tol=tol).pair)
    g2 = dd_mul_f(dd_mul(a3, hyp((1, 1, _F32), (2, 2, _F53, _F73), z, tol=tol).pair), -1.0 / 12.0)
    g3 = dd_mul_f(dd_mul(inv_a, hyp((_FM13, _F12), (_F23, _F23, _F43), z, tol=tol).pair), -1.0)
    m_i = dd_add(dd_add(dd_mul(ap2_, g1), dd_mul(aap_, g2)), dd_mul(a2_, g3))

    # II components
    g1 = dd_mul_f(dd_mul(a2p, hyp((_F23, _F56), (_F43, _F53, _F53), z, tol=tol).pair), 0.5)
    g2 = dd_mul(a1, hyp((_F13, _F56), (_F43, _F43, _F53), z, tol=tol).pair)
    g3 = dd_mul_f(dd_mul(a3, hyp((1, 1, _F116), (2, 2, _F73, _F83), z, tol=tol).pair), -1.0 / 18.0)
    m_ii = dd_add(dd_add(dd_mul(ap2_, g1), dd_mul(aap_, g2)), dd_mul(a2_, g3))

    return (XReal.from_pair(m_box), XReal.from_pair(m_i), XReal.from_pair(m_ii))


#: product weights (box, I, II) for the three Airy products at -z
_W_BI2 = (3 * A2, 6 * AAP, 3 * AP2)
_W_AI2 = (A2, -2 * AAP, AP2)
_W_AIBI = (SQRT3 * A2, XReal(0.0), -SQRT3 * AP2)
#: log coefficients of the masters
_LNC = (AP2, AAP, A2)


def _delta_u(masters_a, masters_a0, dlog: XReal):
    """(du1, du2, du3) between a0 and a from precomputed masters."""
    out = []
    for w in (_W_BI2, _W_AI2, _W_AIBI):
        acc = XReal(0.0)
        for wm, ma, m0, lnc in zip(w, masters_a, masters_a0, _LNC):
            acc = acc + wm * (ma - m0 + lnc * dlog)
        out.append(acc)
    return tuple(out)


# -- constants of integration --------------------------------------------------

def constants_c(a0: float, J1, J2, J3, simplified: bool = False):
    """Integration constants of the J_1 solution from initial data
    (J_1, J_2, J_3) at a0.

    ``simplified=True`` uses the at-root forms (valid when a0 is a zero
    of Ai', where Ai(-a0)Bi'(-a0) = 1/pi); both must agree there.
    """
    st = airy(-a0)
    ai, aip, bi, bip = st.ai, st.aip, st.bi, st.bip
    J1x, J2x, J3x = (v if isinstance(v, XReal) else XReal(float(v))
                     for v in (J1, J2, J3))
    if simplified:
        j13 = a0 * J1x + J3x
        c1 = j13 * bi * bi + (J1x * bip - J2x * bi) * bip
        c2 = j13 * ai * ai
        c3 = -2 * j13 * ai * bi + J2x / PI
        return c1, c2, c3
    c1 = J1x * (a0 * bi * bi + bip * bip) - J2x * bi * bip + J3x * bi * bi
    c2 = J1x * (a0 * ai * ai + aip * aip) - J2x * ai * aip + J3x * ai * ai
    c3 = (-2 * J1x * (a0 * ai * bi + aip * bip)
          + J2x * (ai * bip + aip * bi) - 2 * J3x * ai * bi)
    return c1, c2, c3


@dataclass(frozen=True)
class J1Solution:
    """ODE solution data at anchor a0: constants, masters, seeds."""

    a0: float
    c1: XReal
    c2: XReal
    c3: XReal
    masters_a0: tuple
    J1_a0: XReal
    J2_a0: XReal
    J3_a0: XReal

    @classmethod
    def build(cls, a0: float, seed_source: str = "oracle") -> "J1Solution":
        if seed_source == "oracle":
            from .oracle import oracle_stieltjes

            seeds = [oracle_stieltjes("Ai2", n, a0).xreal for n in (1, 2, 3)]
        elif seed_source == "small_a":
            from .mellin2 import Jn_smalla

            seeds = [Jn_smalla(n, a0).value for n in (1, 2, 3)]
        else:
            raise DomainError(f"unknown seed source {seed_source!r}")
        c1, c2, c3 = constants_c(a0, *seeds)
        return cls(float(a0), c1, c2, c3, _masters(a0), *seeds)

    def deltas(self, a: float):
        dlog = XReal.from_pair(dd_sub(dd_ln((float(a), 0.0)),
                                      dd_ln((self.a0, 0.0))))
        return _delta_u(_masters(a), self.masters_a0, dlog)


def solve_J1(a: float, sol: J1Solution) -> TransformResult:
    """J_1(a) from the closed-form ODE solution, a in [0.2, 13]."""
    if not 0.2 <= a <= 13.0:
        raise DomainError("solve_J1 supports a in [0.2, 13]")
    du1, du2, du3 = sol.deltas(a)
    st = airy(-a)
    val = PI * PI * (st.ai * st.ai * (sol.c1 - du1)
                     + st.bi * st.bi * (sol.c2 - du2)
                     + st.ai * st.bi * (sol.c3 + 2 * du3))
    headroom = math.exp((4.0 / 3.0) * max(a, sol.a0) ** 1.5 / 2.0)
    err = max(1.0, headroom * 1e-3) * 1e-30 + 1e-15 * abs(float(val))
    return TransformResult(val, "closed_form", err)


# -- the per-root summand -------------------------------------------------------

def _j_brackets(a: float):
    """The three quadratic brackets of the summand:

        B1 = a^2 Ai^2 - 2 Ai Ai' + a Ai'^2      (arguments -a)
        B2 = same with Bi
        B3 = a^2 Ai Bi + a Ai' Bi' - Ai' Bi - Ai Bi'

    B3's printed form has a^2 Ai Ai' in place of a^2 Ai Bi; the version
    here is the one consistent with 2a^2 J_1 - J_2 + a J_3 (oracle-checked).
    """
    st = airy(-a)
    ai, aip, bi, bip = st.ai, st.aip, st.bi, st.bip
    b1 = a * a * ai * ai - 2 * ai * aip + a * aip * aip
    b2 = a * a * bi * bi - 2 * bi * bip + a * bip * bip
    b3 = a * a * ai * bi + a * aip * bip - aip * bi - ai * bip
    return b1, b2, b3


def d_coefficients(a: float):
    """The bracket combinations multiplying the master differences in the
    regrouped summand (mechanical analogues of the printed d_i):

        j = sum B_i c_i - d1 dM_box - d2 dM_II + d3 dM_I - (B1/pi^2) dln.
    """
    b1, b2, b3 = _j_brackets(a)
    k_box = -A2 * (3 * b1 + b2 - 2 * SQRT3 * b3)
    k_i = -2 * AAP * (3 * b1 - b2)
    k_ii = -AP2 * (3 * b1 + b2 + 2 * SQRT3 * b3)
    return -k_box, -k_ii, k_i


@dataclass(frozen=True)
class BigJTerm:
    """One root's contribution to the second-integral sum."""

    k: int
    value: XReal
    parts: dict


def j_term(a: float, sol: J1Solution, grouped: bool = False) -> XReal:
    """The bracket combination j(a) = 2a^2 J_1 - J_2 + a J_3 (that exact
    identity is oracle-tested).  ``grouped=True`` evaluates through the
    d_i / master-difference regrouping instead; both must agree."""
    du1, du2, du3 = sol.deltas(a)
    b1, b2, b3 = _j_brackets(a)
    if not grouped:
        return b1 * (sol.c1 - du1) + b2 * (sol.c2 - du2) + b3 * (sol.c3 + 2 * du3)
    d1, d2, d3 = d_coefficients(a)
    ma = _masters(a)
    dlog = XReal.from_pair(dd_sub(dd_ln((float(a), 0.0)), dd_ln((sol.a0, 0.0))))
    dm = [x - y for x, y in zip(ma, sol.masters_a0)]
    return (b1 * sol.c1 + b2 * sol.c2 + b3 * sol.c3
            - d1 * dm[0] - d2 * dm[2] + d3 * dm[1]
            - (b1 / (PI * PI)) * dlog)


def bigJ_closed(a: float, sol: J1Solution) -> XReal:
    """Summand by the closed form:
    -2Ai(0)^2/(5a) - (2/3)Ai(0)Ai'(0) - 2a Ai'(0)^2 + pi^2 j(a)."""
    j = j_term(a, sol)
    return (-2 * A2 / (5 * a) - Fraction(2, 3) * AAP - 2 * a * AP2
            + PI * PI * j)


# -- moment asymptotics ---------------------------------------------------------

def _ai2_moments(count: int):
    """int_0^inf x^m Ai^2 dx; chain mu_{m+3} = mu_m (m+1)(m+2)(m+3)/(4m+14)."""
    out = [float(AP2), -float(AAP) / 3.0, float(A2) / 5.0]
    while len(out) < count:
        m = len(out) - 3
        out.append(out[m] * (m + 1) * (m + 2) * (m + 3) / (4 * m + 14))
    return out[:count]


def _aip2_moments(count: int):
    """int_0^inf x^m Ai'^2 dx; chain ratio (m+1)(m+3)(m+5)/(2(2m+9))."""
    out = [-2.0 * float(AAP) / 3.0, 0.3 * float(A2), 4.0 * float(AP2) / 7.0]
    while len(out) < count:
        m = len(out) - 3
        out.append(out[m] * (m + 1) * (m + 3) * (m + 5) / (2.0 * (2 * m + 9)))
    return out[:count]


def bigJ_asym(a: float, max_terms: int = 40):
    """Summand by the moment series
    sum_j (-1)^j [j(j+1)/2 mu_j - 2 mu_{j+3}] a^{-2-j}; ~1e-12 relative
    already at a ~ 8 and machine-level beyond 12."""
    mu = _ai2_moments(max_terms + 3)
    total = 0.0
    comp = 0.0
    best = float("inf")
    apow = a ** -2.0
    err = float("inf")
    for j in range(max_terms):
        c = j * (j + 1) * mu[j] / 2.0 - 2.0 * mu[j + 3]
        term = c * apow * (-1.0 if j % 2 else 1.0)
        if abs(term) > best:
            err = best
            break
        best = abs(term)
        t = total + term
        comp += (total - t) + term if abs(total) >= abs(term) else (term - t) + total
        total = t
        apow /= a
    else:
        err = best
    return XReal(total, comp), err


def Jn_asym_moment(n: int, a: float, primed: bool = False,
                   max_terms: int = 40):
    """J_n(a) (or the Ai'^2 analogue) by the full moment series in 1/a."""
    mom = _aip2_moments(max_terms) if primed else _ai2_moments(max_terms)
    binom = 1.0
    apow = a ** float(-n)
    total = 0.0
    best = float("inf")
    err = float("inf")
    for m in range(max_terms):
        term = binom * mom[m] * apow * (-1.0 if m % 2 else 1.0)
        if abs(term) > best:
            err = best
            break
        best = abs(term)
        total += term
        binom *= (n + m) / (m + 1.0)
        apow /= a
    else:
        err = best
    return XReal(total), err


def J_asym(a: float, n: int, primed: bool = False) -> XReal:
    """The printed three-term large-a expansions (n in {1, 2};
    primed only with n = 1)."""
    if a < 5.0:
        raise DomainError("J_asym needs a >= 5")
    A2f, AAPf, AP2f = float(A2), float(AAP), float(AP2)
    if primed:
        if n != 1:
            raise DomainError("primed expansion printed only for n = 1")
        return XReal(-2 * AAPf / (3 * a) - 3 * A2f / (10 * a * a)
                     + 4 * AP2f / (7 * a ** 3))
    if n == 1:
        return XReal(AP2f / a + AAPf / (3 * a * a) + A2f / (5 * a ** 3))
    if n == 2:
        return XReal(AP2f / a ** 2 + 2 * AAPf / (3 * a ** 3) + 3 * A2f / (5 * a ** 4))
    raise DomainError("J_asym supports n in {1, 2}")


# -- recurrence / relation residuals -------------------------------------------

def J_recurrences(n: int, a: float, J, Jp) -> dict:
    """Residuals of the two integration-by-parts relations and the
    third-order combination, with externally supplied (oracle) values.

    ``J`` maps m -> J_m(a); ``Jp`` maps m -> J'_m(a) (Ai'^2 weight).
    """
    A2f, AAPf, AP2f = float(A2), float(AAP), float(AP2)
    r1 = ((n - 1) * J[n] + AP2f / a ** n - a * n * J[n + 1] - n * Jp[n + 1])
    r2 = (Jp[n] + AAPf / a ** n + n * A2f / (2 * a ** (n + 1)) + J[n - 1]
          - a * J[n] - n * (n + 1) / 2.0 * J[n + 2])
    r3 = ((2 * n - 1) * J[n] - 2 * a * n * J[n + 1]
          - n * (n + 1) * (n + 2) / 2.0 * J[n + 3]
          + AP2f / a ** n + n * AAPf / a ** (n + 1)
          + n * (n + 1) * A2f / (2.0 * a ** (n + 2)))
    return {"parts_first": r1, "parts_second": r2, "third_order": r3}


# -- pipeline --------------------------------------------------------------------

def bigJ_term(k: int, roots: RootTable, sol: J1Solution) -> BigJTerm:
    """Summand at the k-th root; closed form for magnitudes <= 11,
    moment series beyond (both ~1e-11 in the overlap)."""
    a = float(roots[k])
    if a <= J_CLOSED_MAX:
        val = bigJ_closed(a, sol)
        return BigJTerm(k, val, {"route": "closed_form", "j": float(j_term(a, sol))})
    val, err = bigJ_asym(a)
    return BigJTerm(k, val, {"route": "asymptotic", "err": err})


def integral2_series(N: int, roots: RootTable, sol: J1Solution | None = None) -> XReal:
    """Plain partial sum (1/(3 Ai'(0)^2)) sum_{k<=N} bigJ(|a_k'|)."""
    sol = sol or J1Solution.build(float(roots[1]))
    terms = [bigJ_term(k, roots, sol).value for k in range(1, N + 1)]
    return compensated_sum(terms) / (3 * AP2)


def integral2_accelerated(cfg: TruncationConfig, roots: RootTable,
                          sol: J1Solution | None = None) -> XReal:
    """Zeta-accelerated second integral:

        (1/(3 Ai'(0)^2)) sum_{k<=N} bigJ(r_k)
        - (2/(12^{13/6} sqrt(pi) Ai'(0)^2)) *
          sum_{k<=n} (-1)^k (k+4)(k+1)!/(12^{k/3} Gamma(k/3+13/6))
                     {Z_{k+2} - Z_{k+2}(N)}.
    """
    sol = sol or J1Solution.build(float(roots[1]))
    head = integral2_series(cfg.N, roots, sol)
    tail_terms = []
    for k in range(cfg.n + 1):
        coeff = ((k + 4) * math.factorial(k + 1)
                 / (12.0 ** (k / 3.0) * math.gamma(k / 3.0 + 13.0 / 6.0)))
        if k % 2:
            coeff = -coeff
        gap = zeta_closed(k + 2) - zeta_incomplete(k + 2, cfg.N, roots)
        tail_terms.append(coeff * gap)
    tail = compensated_sum(tail_terms)
    pref = 2 / (XReal(12.0 ** (13.0 / 6.0)) * SQRT_PI * AP2)
    return head - pref * tail
