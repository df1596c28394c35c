"""Magnitudes |a_n'| of the zeros of Ai', by asymptotic seed plus Newton
refinement.

The seed is the large-n expansion in the variable t = (3/8)pi(4n-3); its
t^-6 coefficient is configurable because the literature value 181223/207360
and a variant 181228/207360 both circulate -- Newton refinement makes the
choice immaterial for refined roots, and for seed-only roots the two differ
below 1e-12 (n >= 15).

Newton iterates on f(r) = Ai'(-r) with the exact derivative from the Airy
equation, f'(r) = r*Ai(-r).  Refinement is performed while the root lies
inside the double-double series range of :func:`airylog.airy.airy`; beyond
that the seed itself is already accurate to ~1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .airy import airy, SERIES_MAX
from .ddreal import XReal
from .errors import DomainError, IterationError

#: t^-6 seed coefficient as printed in the source table ("paper" variant).
T6_PAPER = Fraction(181228, 207360)
#: t^-6 coefficient from the standard asymptotic expansion.
T6_STANDARD = Fraction(181223, 207360)

DEFAULT_T6 = T6_PAPER

_NEWTON_TOL = 1e-13
_NEWTON_MAXIT = 8


def root_seed(n: int, t6: Fraction = DEFAULT_T6) -> float:
    """Asymptotic magnitude of the n-th zero of Ai'.

    t^(2/3) * (1 - 7/48 t^-2 + 35/288 t^-4 - t6 * t^-6), t = (3/8)pi(4n-3).
    Strictly increasing in n; absolute error ~5e-3 at n = 2, ~1e-6 at
    n = 10, below 1e-12 for n >= 15.
    """
    if n < 1:
        raise DomainError("root index must be >= 1")
    t = 0.375 * math.pi * (4 * n - 3)
    t2 = 1.0 / (t * t)
    corr = 1.0 + t2 * (-7.0 / 48.0 + t2 * (35.0 / 288.0 - float(t6) * t2))
    return t ** (2.0 / 3.0) * corr


def refine_root(seed: float) -> XReal:
    """Newton-refine a seed to a zero of Ai'(-x).

    Uses f'(r) = r*Ai(-r) (from Ai'' = x Ai); converges to residual
    |Ai'(-r)| <= 1e-13 * max(1, |r Ai(-r)|) in at most 8 iterations for
    seeds within 0.3 of a true zero.
    """
    r = XReal(float(seed))
    for _ in range(_NEWTON_MAXIT):
        st = airy(-float(r))
        f = st.aip
        fp = r * st.ai
        step = f / fp
        r = r - step
        if abs(float(step)) <= 1e-16 * abs(float(r)):
            break
    st = airy(-float(r))
    scale = max(1.0, abs(float(r * st.ai)))
    if abs(float(st.aip)) > _NEWTON_TOL * scale:
        raise IterationError(
            f"Newton refinement stalled at residual {float(st.aip):.3e}", last=r
        )
    # one extra dd correction using the final state
    r = r - st.aip / (r * st.ai)
    return r


@dataclass(frozen=True)
class RootTable:
    """Ordered magnitudes of the zeros of Ai' with refinement metadata.

    Roots with magnitude <= the Airy series range are Newton-refined
    (residual <= ``refined_tol`` relative to the derivative scale); larger
    ones carry the asymptotic seed, accurate to ~1e-12 there.
    """

    roots: tuple
    n_max: int
    refined_tol: float = _NEWTON_TOL
    refined_upto: int = 0
    t6: Fraction = DEFAULT_T6
    _floats: tuple = field(default=None, repr=False, compare=False)

    def __getitem__(self, n: int) -> XReal:
        """1-based access: table[n] is |a_n'|."""
        if not 1 <= n <= self.n_max:
            raise IndexError(f"root index {n} outside 1..{self.n_max}")
        return self.roots[n - 1]

    def magnitudes(self):
        """Roots as plain floats."""
        if self._floats is None:
            object.__setattr__(self, "_floats",
                               tuple(float(r) for r in self.roots))
        return self._floats


def roots_upto(N: int, t6: Fraction = DEFAULT_T6) -> RootTable:
    """Table of the first N root magnitudes, 1 <= N <= 500."""
    if not 1 <= N <= 500:
        raise DomainError("roots_upto supports 1 <= N <= 500")
    roots = []
    refined_upto = 0
    for n in range(1, N + 1):
        seed = root_seed(n, t6)
        if seed <= SERIES_MAX - 0.5:
            try:
                roots.append(refine_root(seed))
            except IterationError as exc:
                raise IterationError(f"refinement failed at root {n}",
                                     last=exc.last) from exc
            refined_upto = n
        else:
            roots.append(XReal(seed))
    return RootTable(tuple(roots), N, _NEWTON_TOL, refined_upto, t6)
