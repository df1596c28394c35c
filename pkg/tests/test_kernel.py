"""Kernel: gamma, Pochhammer, compensated summation, pFq engine."""

import math
from fractions import Fraction

import pytest

from airylog.errors import ConvergenceError, DomainError
from airylog.kernel import (
    HypSeries,
    compensated_sum,
    gamma,
    hyp,
    hyp_pfq,
    pochhammer,
)
from airylog.ddreal import XReal


def test_gamma_factorial():
    assert float(gamma(1)) == 1.0
    assert abs(float(gamma(5)) - 24.0) < 1e-13


def test_gamma_half():
    assert abs(float(gamma(0.5)) - math.sqrt(math.pi)) < 1e-15


def test_gamma_reflection_oracle():
    # Gamma(2/3)Gamma(1/3) = 2 pi / sqrt(3)
    lhs = float(gamma(Fraction(2, 3), dd=True) * gamma(Fraction(1, 3), dd=True))
    assert abs(lhs - 2 * math.pi / math.sqrt(3)) < 1e-14


def test_gamma_pole():
    for x in (0, -1, -2.0):
        with pytest.raises(DomainError):
            gamma(x)


def test_gamma_recurrence_ulp():
    # the dd evaluator (the one behind the closed-form constants) meets the
    # 4-ulp bound with margin; the binary64 path is libm-limited (~1e-15)
    # quarter-spaced grid keeps x and x+1 exactly representable
    x = 0.25
    while x < 40.0:
        g1 = float(gamma(x + 1.0, dd=True))
        g0 = float(XReal(x) * gamma(x, dd=True))
        assert abs(g1 - g0) <= 4 * math.ulp(g1)
        gf = float(gamma(x + 1.0))
        assert abs(gf - g1) <= 1e-14 * abs(g1)
        x += 0.75


def test_gamma_negative_noninteger():
    assert abs(float(gamma(-0.5)) + 2 * math.sqrt(math.pi)) < 1e-12


def test_pochhammer_vs_gamma():
    for z in (0.1, 0.5, 2.5, 10.0):
        for n in (0, 1, 5, 30):
            direct = float(pochhammer(z, n))
            via = float(gamma(z + n)) / float(gamma(z))
            assert abs(direct - via) <= 1e-13 * abs(via)


def test_pochhammer_rational_exact():
    assert float(pochhammer(Fraction(1, 2), 3)) == float(Fraction(15, 8))


def test_compensated_sum_trivial():
    assert float(compensated_sum([])) == 0.0
    assert float(compensated_sum([1.0, -1.0])) == 0.0


def test_compensated_sum_small_terms():
    total = compensated_sum([1.0] + [1e-16] * 10_000)
    expect = 1.0 + 1e-12
    assert abs(float(total) - expect) <= math.ulp(expect)


def test_compensated_sum_xreal_inputs():
    total = compensated_sum([XReal(1.0, 1e-20), XReal(-1.0)])
    assert abs(float(total) - 1e-20) < 1e-32


def test_hyp_z_zero():
    assert float(hyp((Fraction(1, 3),), (Fraction(2, 3), Fraction(4, 3)), 0.0)) == 1.0


def _rational_pfq_partial(a_params, b_params, z: Fraction, terms: int) -> Fraction:
    """Exact-rational partial-sum oracle."""
    total = Fraction(0)
    term = Fraction(1)
    for k in range(terms):
        total += term
        num = Fraction(1)
        for a in a_params:
            num *= a + k
        den = Fraction(k + 1)
        for b in b_params:
            den *= b + k
        term *= num / den * z
    return total


def test_hyp_vs_exact_rational_oracle():
    a = (Fraction(1, 3),)
    b = (Fraction(2, 3), Fraction(4, 3))
    z = Fraction(-1, 9)  # -z^3/9 at z = 1
    oracle = _rational_pfq_partial(a, b, z, 60)
    mine = hyp(a, b, XReal.from_fraction(z), tol=1e-25)
    assert abs(float(mine) - float(oracle)) < 1e-15


def test_hyp_dd_vs_binary64_agreement():
    cases = [
        ((Fraction(1, 3),), (Fraction(2, 3), Fraction(4, 3)), -30.0),
        ((Fraction(1, 1), Fraction(1, 1)), (2, 2, Fraction(5, 3)), -20.0),
        ((Fraction(2, 3), Fraction(5, 6)),
         (Fraction(4, 3), Fraction(5, 3), Fraction(5, 3)), -50.0),
    ]
    for a, b, z in cases:
        v_dd = float(hyp(a, b, z, tol=1e-20, dd=True))
        v_64 = float(hyp(a, b, z, tol=1e-13, dd=False))
        assert abs(v_dd - v_64) <= 1e-12 * max(abs(v_dd), 1e-30)


def test_hyp_error_estimate_scales_with_tol():
    a = (Fraction(1, 3),)
    b = (Fraction(2, 3), Fraction(4, 3))
    tight = float(hyp(a, b, -100.0, tol=1e-22))
    loose = float(hyp(a, b, -100.0, tol=1e-10))
    assert abs(tight - loose) <= 10 * 1e-10 * abs(tight) + 1e-18


def test_hyp_nonconvergence_carries_partial():
    with pytest.raises(ConvergenceError) as exc:
        hyp((1,), (2,), 5.0, max_terms=3)
    assert exc.value.partial is not None


def test_hyp_env_cap(monkeypatch):
    monkeypatch.setenv("AIRYLOG_MAX_TERMS", "2")
    with pytest.raises(ConvergenceError):
        hyp((1,), (2,), 5.0)
    monkeypatch.delenv("AIRYLOG_MAX_TERMS")


def test_hypseries_validation():
    with pytest.raises(DomainError):
        HypSeries((Fraction(1),), (Fraction(0),), 1.0)
    with pytest.raises(DomainError):
        HypSeries((Fraction(1), Fraction(1), Fraction(1)), (Fraction(2),), 1.0)
