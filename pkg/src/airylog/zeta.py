"""Zeta-like sums over the zeros of Ai': closed forms and incomplete sums.

The closed form extracts Z_k from the Taylor coefficients of
z*Ai(z)/Ai'(z) at the origin:  Z_k = (-1)^(k-1) [z^(k-1)] (z Ai/Ai').
The division is carried out with exact rational coefficients that are
polynomials in eta = Ai(0)/Ai'(0), so the table entries (Z_3 = 1,
Z_4 = eta^2/2, ...) come out exactly in symbolic form and are only
converted to double-double at the end.  This avoids all cancellation and
makes the closed-form values exact regression fixtures.

Z_2 equals -eta (eta is negative); the source table prints it without the
sign, which the series division here adjudicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ddreal import XReal, dd_add, dd_powi
from .errors import DomainError
from .kernel import ETA
from .roots import RootTable

K_MAX = 20


def _eta_poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return out


def _eta_poly_sub(p, q):
    n = max(len(p), len(q))
    return [
        (p[i] if i < len(p) else Fraction(0)) - (q[i] if i < len(q) else Fraction(0))
        for i in range(n)
    ]


def _log_derivative_coeffs(order: int):
    """Taylor coefficients (eta-polynomials) of z*Ai(z)/Ai'(z) at 0."""
    kmax = order // 3 + 2
    F = [Fraction(1)]
    G = [Fraction(1)]
    for k in range(kmax):
        F.append(F[-1] / ((3 * k + 2) * (3 * k + 3)))
        G.append(G[-1] / ((3 * k + 3) * (3 * k + 4)))
    zero = [Fraction(0)]
    num = [list(zero) for _ in range(order + 1)]   # z * (eta f + g)
    den = [list(zero) for _ in range(order + 1)]   # eta f' + g'
    for k in range(kmax):
        if 3 * k + 1 <= order:
            num[3 * k + 1] = [Fraction(0), F[k]]          # eta * F_k z^{3k+1}
        if 3 * k + 2 <= order:
            num[3 * k + 2] = _eta_poly_sub(num[3 * k + 2], [-G[k]])
        if 3 * k - 1 >= 0 and 3 * k - 1 <= order:
            den[3 * k - 1] = _eta_poly_sub(den[3 * k - 1], [Fraction(0), -3 * k * F[k]])
        if 3 * k <= order:
            den[3 * k] = _eta_poly_sub(den[3 * k], [-(3 * k + 1) * G[k]])
    # long division q = num / den with den[0] = [1]
    q = []
    for m in range(order + 1):
        acc = list(num[m])
        for j in range(m):
            acc = _eta_poly_sub(acc, _eta_poly_mul(q[j], den[m - j]))
        q.append(acc)
    return q


_COEFF_CACHE: dict = {}


def zeta_eta_poly(k: int):
    """Z_k as an exact polynomial in eta (list of Fractions, low power
    first)."""
    if k < 2:
        raise DomainError("zeta sums converge only for k >= 2")
    if k > K_MAX:
        raise DomainError(f"zeta closed form capped at k = {K_MAX}")
    if k - 1 not in _COEFF_CACHE:
        q = _log_derivative_coeffs(K_MAX)
        for m, poly in enumerate(q):
            sign = 1 if m % 2 == 0 else -1
            out = [sign * c for c in poly]
            while len(out) > 1 and out[-1] == 0:
                out.pop()
            _COEFF_CACHE[m] = out
    return _COEFF_CACHE[k - 1]


def zeta_closed(k: int) -> XReal:
    """Z_k = sum over root magnitudes of |a_n'|^-k, from the closed form."""
    poly = zeta_eta_poly(k)
    acc = XReal(0.0)
    p = XReal(1.0)
    for c in poly:
        if c:
            acc = acc + p * c
        p = p * ETA
    return acc


def zeta_incomplete(k: int, N: int, roots: RootTable) -> XReal:
    """Finite sum of |a_n'|^-k over the first N roots."""
    if k < 2:
        raise DomainError("zeta sums need k >= 2")
    if N < 0:
        raise DomainError("N must be >= 0")
    if N > roots.n_max:
        raise DomainError(f"root table holds {roots.n_max} roots, need {N}")
    acc = (0.0, 0.0)
    for n in range(N, 0, -1):  # smallest terms first
        acc = dd_add(acc, dd_powi(roots[n].pair, -k))
    return XReal.from_pair(acc)


@dataclass(frozen=True)
class ZetaTable:
    """Memoized closed-form values Z_2..Z_kmax plus eta."""

    k_max: int
    values: dict
    eta: XReal = ETA

    @classmethod
    def build(cls, k_max: int = 10) -> "ZetaTable":
        return cls(k_max, {k: zeta_closed(k) for k in range(2, k_max + 1)})

    def __getitem__(self, k: int) -> XReal:
        return self.values[k]
