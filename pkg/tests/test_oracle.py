"""The quadrature oracle: anchors, linearity, tail independence."""

import math

import pytest
from scipy.special import airy as scipy_airy

from airylog.oracle import (
    integrate_halfline,
    oracle_integral1,
    oracle_integral2,
    oracle_j_summand,
    oracle_mellin,
    oracle_stieltjes,
)

AI0 = scipy_airy(0.0)[0]
AIP0 = scipy_airy(0.0)[1]


def test_airy_normalisation():
    res = integrate_halfline(lambda x: scipy_airy(x)[0])
    assert abs(res.value - 1.0 / 3.0) <= 1e-12
    assert res.abs_err_est < 1e-10


def test_exponential():
    res = integrate_halfline(lambda x: math.exp(-x))
    assert abs(res.value - 1.0) <= 1e-12


def test_first_moment():
    res = integrate_halfline(lambda x: x * scipy_airy(x)[0])
    assert abs(res.value + AIP0) <= 1e-12


def test_headline_values():
    r1 = oracle_integral1()
    assert abs(r1.value + 0.81400778) <= 5e-8
    r2 = oracle_integral2()
    assert abs(r2.value + 0.2636317105) <= 5e-9
    assert abs(r2.value) < abs(r1.value)


def test_integrand_signs():
    # ratio in (0,1) on (0,10) makes the log negative
    for x in (0.5, 2.0, 7.5):
        r = scipy_airy(x)[1] / AIP0
        assert 0.0 < r < 1.0


def test_stieltjes_anchors():
    assert abs(oracle_stieltjes("Ai", 3, 1.0187929716).value
               - 0.1045955174) <= 1e-9
    assert abs(oracle_stieltjes("Ai", 0, 5.0).value - 1.0 / 3.0) <= 1e-11
    assert abs(oracle_stieltjes("Ai2", 1, 1.0187929716).value
               - 0.04826441) <= 1e-8


def test_mellin_anchors():
    assert abs(oracle_mellin("AiP", 0, 0.0).value + AI0) <= 1e-12
    assert abs(oracle_mellin("AiAiP", 0, 0.0).value + AI0 ** 2 / 2) <= 1e-12
    # I_3(1) = 2 I_0(1) - Ai'(1) + 2 Ai(1)
    ai1, aip1, _, _ = scipy_airy(1.0)
    i0 = oracle_mellin("Ai", 0, 1.0).value
    ref = 2 * i0 - aip1 + 2 * ai1
    assert abs(oracle_mellin("Ai", 3, 1.0).value - ref) <= 1e-11


def test_linearity():
    import random

    rng = random.Random(3)
    for _ in range(20):
        c1, c2 = rng.uniform(-2, 2), rng.uniform(-2, 2)
        f = lambda x: scipy_airy(x)[0]
        g = lambda x: math.exp(-2 * x)
        both = integrate_halfline(lambda x: c1 * f(x) + c2 * g(x))
        sep = (c1 * integrate_halfline(f).value
               + c2 * integrate_halfline(g).value)
        assert abs(both.value - sep) <= (abs(c1) + abs(c2) + 1) * 1e-12


def test_tail_split_independence():
    f = lambda x: scipy_airy(x)[0] ** 2 / (x + 1.0)
    v15 = integrate_halfline(f, split=15.0).value
    v25 = integrate_halfline(f, split=25.0).value
    assert abs(v15 - v25) <= 1e-13


def test_halving_tol_within_err_est():
    for kind, k, a in (("Ai", 3, 2.0), ("Ai2", 1, 1.0)):
        loose = oracle_stieltjes(kind, k, a, tol=1e-8)
        tight = oracle_stieltjes(kind, k, a, tol=5e-9)
        assert abs(loose.value - tight.value) <= 2 * max(loose.abs_err_est, 1e-15)


def test_j_summand_value():
    # independent reference for the per-root summand at the second root
    v = oracle_j_summand(3.2481975822)
    assert abs(v.value + 0.00433921909165) < 1e-10


def test_argument_validation():
    from airylog.errors import DomainError

    with pytest.raises(DomainError):
        oracle_stieltjes("Ai", 3, -1.0)
    with pytest.raises(DomainError):
        oracle_mellin("Ai2", -1, 0.0)
