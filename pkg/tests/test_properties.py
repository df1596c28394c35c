"""Property-based checks across modules."""

import math
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from airylog.airy import airy, jpair
from airylog.kernel import compensated_sum, hyp, pochhammer
from airylog.mellin1 import mellin_closed
from airylog.zeta import zeta_closed, zeta_incomplete
from airylog.roots import roots_upto

ROOTS = roots_upto(40)


@given(st.lists(st.floats(min_value=-1e6, max_value=1e6,
                          allow_nan=False), max_size=60))
def test_compensated_sum_matches_exact(xs):
    exact = sum(Fraction(x) for x in xs)
    got = compensated_sum(xs)
    err = Fraction(got.hi) + Fraction(got.lo) - exact
    bound = max((abs(Fraction(x)) for x in xs), default=Fraction(0))
    assert abs(err) <= bound * len(xs) * Fraction(1, 2 ** 90) + Fraction(1, 2 ** 500)


@given(st.floats(min_value=-14.9, max_value=14.9, allow_nan=False))
@settings(max_examples=40, deadline=None)
def test_wronskian_everywhere(x):
    w = float(airy(x).wronskian())
    assert abs(w - 1.0 / math.pi) <= 1e-12


@given(st.floats(min_value=0.05, max_value=14.9, allow_nan=False))
@settings(max_examples=25, deadline=None)
def test_jpair_reconstruction(a):
    jp = jpair(a)
    st_ = airy(-a)
    assert abs(float(jp.jplus + jp.jminus) / 2
               - math.sqrt(3) * float(st_.ai)) <= 4 * math.ulp(1.0)
    assert abs(float(jp.jplus - jp.jminus) / 2 - float(st_.bi)) \
        <= 4 * math.ulp(max(1.0, abs(float(st_.bi))))


@given(st.integers(min_value=2, max_value=19))
def test_zeta_incomplete_below_closed(k):
    # compared at double-double resolution: the 40th root contributes
    # ~1e-29 at k = 19, below binary64 but inside the dd word
    inc = zeta_incomplete(k, 40, ROOTS)
    clo = zeta_closed(k)
    assert 0.0 < float(inc)
    assert inc <= clo
    assert zeta_incomplete(k, 39, ROOTS) < inc


@given(st.integers(min_value=0, max_value=25),
       st.fractions(min_value=Fraction(1, 10), max_value=10))
@settings(max_examples=30)
def test_pochhammer_shift(n, z):
    # (z)_{n+1} = (z + n)(z)_n
    lhs = float(pochhammer(z, n + 1))
    rhs = float(z + n) * float(pochhammer(z, n))
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))


@given(st.integers(min_value=-8, max_value=12),
       st.floats(min_value=0.3, max_value=6.0, allow_nan=False))
@settings(max_examples=25, deadline=None)
def test_mellin_recurrence_residual(n, a):
    st_ = airy(a)
    lhs = float(mellin_closed(n, a).value)
    rhs = ((n - 1) * (n - 2) * float(mellin_closed(n - 3, a).value)
           - a ** (n - 1) * float(st_.aip)
           + (n - 1) * a ** (n - 2) * float(st_.ai))
    assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))


@given(st.floats(min_value=-40.0, max_value=-1.0, allow_nan=False))
@settings(max_examples=20, deadline=None)
def test_hyp_alternating_consistency(z):
    v_dd = float(hyp((Fraction(1, 3),), (Fraction(2, 3), Fraction(4, 3)),
                     z, tol=1e-20, dd=True))
    v_64 = float(hyp((Fraction(1, 3),), (Fraction(2, 3), Fraction(4, 3)),
                     z, tol=1e-13, dd=False))
    assert abs(v_dd - v_64) <= 1e-11 * max(abs(v_dd), 1e-12)
