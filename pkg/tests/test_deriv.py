import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from _oracle import VALUES as V
from conftest import assert_close
from whittaker import deriv, families
from whittaker.errors import DomainError, PoleError
from whittaker.hypergeom import hyp
from whittaker.kernels import bessel_i, bessel_k, expint_ei, shi_chi
from whittaker.verify import fd_derivative
from whittaker.whittaker import WhittakerParams, m_series

EULER = 0.5772156649015329
SHI1, CHI1 = 1.0572508753757286, 0.8378669409802082


def P(k, mu, x):
    return WhittakerParams(k, mu, x)


@pytest.mark.parametrize("key", [k for k in V if k[0] in ("dMdk", "dMdmu")], ids=str)
def test_series_oracle(key):
    fn = deriv.dm_dkappa if key[0] == "dMdk" else deriv.dm_dmu
    assert_close(fn(P(*key[1:]), route="series").value, V[key], 1e-11)


def test_s1_s2():
    t = deriv.s1_s2(P(-0.5, 0.0, 1.0))
    assert_close(t.s2, 2 * t.s1, 1e-12)
    from whittaker.kernels import digamma, gamma

    t0 = deriv.s1_s2(P(0.3, 0.4, 0.0))
    a, b = 0.6, 1.8
    assert_close(t0.s1, gamma(a) / gamma(b) * digamma(a), 1e-14)
    # Brute force 60 terms at kappa=0, mu=1/2, x=1.
    a, b = 1.0, 2.0
    s1 = sum(gamma(a + n) / gamma(b + n) * digamma(a + n) / math.factorial(n) for n in range(60))
    assert_close(deriv.s1_s2(P(0.0, 0.5, 1.0)).s1, s1, 1e-14)
    with pytest.raises(PoleError):
        deriv.s1_s2(P(1.5, 0.0, 1.0))


def test_dkappa_closed_examples():
    expected = -math.exp(0.5) * (EULER + SHI1 - CHI1)
    assert_close(deriv.dm_dkappa(P(-0.5, 0.0, 1.0), route="closed").value, expected, 1e-13)
    assert_close(expected, -math.exp(0.5) * 0.7965996, 1e-7)
    x = 1.0
    ref = -(x**1.75) * math.exp(x / 2) / 1.5 * hyp((1, 1), (2.5, 2), -x)
    assert_close(deriv.dkm_kappa_minus_mu_half(0.25, x), ref, 1e-13)
    val = math.exp(-0.5) * (-expint_ei(1.0) + EULER - 1) + 2 * math.sinh(0.5)
    assert_close(deriv.dkm_nhalf(1, 1.0), val, 1e-13)
    for k, mu, x in ((0.0, 1.5, 1.0), (-0.75, 0.25, 2.0), (2.0, 0.5, 1.5)):
        closed = deriv.dm_dkappa(P(k, mu, x), route="closed").value
        assert_close(closed, deriv.dm_dkappa(P(k, mu, x), route="series").value, 1e-9)


def test_dmu_closed_examples():
    expected = math.exp(0.5) * (CHI1 - SHI1 - EULER)
    assert_close(deriv.dm_dmu(P(-0.5, 0.0, 1.0), route="closed").value, expected, 1e-13)
    t2 = 2 * (CHI1 - EULER + 2) * math.sinh(0.5) - 2 * SHI1 * math.cosh(0.5)
    assert_close(deriv.dm_dmu(P(0.0, 0.5, 1.0), route="closed").value, t2, 1e-13)
    t00 = (math.log(4) - EULER) * bessel_i(0, 0.5) - bessel_k(0, 0.5)
    assert_close(deriv.dmm_kappa0(0.0, 1.0), t00, 1e-12)
    assert_close(families.dmm_ml(1, 1, 1.0), deriv.dm_dmu(P(0.5, 1.0, 1.0)).value, 1e-9)


def test_f_func_examples():
    shi, chi = shi_chi(1.0)
    assert_close(families.f_func(0, 0, 1.0), -(chi + shi - EULER), 1e-13)
    assert_close(families.f_func(0, 0, -1.0), -0.7965995992970532, 1e-13)
    # Reference values of the defining 2F2 sum, mpmath at 30 digits.
    assert_close(families.f_func(0, 1, 1.0), -0.20113903101392402, 1e-13)
    assert_close(families.f_func(1, 2, -0.5), -0.07841221172930385, 1e-13)
    assert_close(families.f_func(-1, 2, 2.0), -0.027992129173822888, 1e-12)
    with pytest.raises(DomainError):
        families.f_func(0, 0, 0.0)


def test_routes_and_errors():
    res = deriv.dm_dkappa(P(0.0, 1.5, 1.0), route="all")
    routes = res.diagnostics["routes"]
    assert set(routes) == {"series", "closed", "integral"}
    assert res.diagnostics["max_discrepancy"] < 1e-9
    edge = deriv.dm_dkappa(P(-0.75, 0.25, 1.0), route="all")
    assert "integral" in edge.diagnostics["rejected"]
    with pytest.raises(DomainError):
        deriv.dm_dkappa(P(0.3, 0.4, 1.0), route="fast")
    with pytest.raises(DomainError):
        deriv.dm_dmu(P(0.3, 0.4, -1.0))
    with pytest.raises(DomainError):
        deriv.dm_dkappa(P(0.37, 0.91, 1.0), route="closed")


def _admissible(k, mu):
    b = 1 + 2 * mu
    return not (b <= 0 and b == int(b))


kappas = st.floats(-2.0, 2.5)
mus = st.floats(-0.45, 2.5)
xs = st.floats(0.2, 8.0)


@given(kappas, mus, xs)
def test_dkappa_matches_fd(k, mu, x):
    fd = fd_derivative(lambda v: m_series(P(v, mu, x)).value, k)
    scale = max(1.0, abs(m_series(P(k, mu, x)).value))
    assert_close(deriv.dm_dkappa(P(k, mu, x)).value, fd, 1e-6, 1e-9 * scale)


@given(kappas, mus, xs)
def test_dmu_matches_fd(k, mu, x):
    fd = fd_derivative(lambda v: m_series(P(k, v, x)).value, mu)
    scale = max(1.0, abs(m_series(P(k, mu, x)).value))
    assert_close(deriv.dm_dmu(P(k, mu, x)).value, fd, 1e-6, 1e-9 * scale)


@given(st.floats(-0.4, 1.0), st.floats(0.1, 2.0), xs)
def test_integral_route_matches_series(k, mu, x):
    assume(mu - k + 0.5 > 0.05 and mu + k + 0.5 > 0.05)
    p = P(k, mu, x)
    assert_close(deriv.dm_dkappa(p, route="integral").value, deriv.dm_dkappa(p).value, 1e-7, 1e-10)
    assert_close(deriv.dm_dmu(p, route="integral").value, deriv.dm_dmu(p).value, 1e-7, 1e-10)


@given(st.integers(-2, 4), st.integers(0, 4), xs)
def test_ml_derivative_families(ell, m, x):
    assume(m >= max(ell, 0))
    p = P(ell / 2, m + (1 - ell) / 2, x)
    assert_close(families.dkm_ml(ell, m, x), deriv.dm_dkappa(p).value, 1e-9, 1e-12)
    assert_close(families.dmm_ml(ell, m, x), deriv.dm_dmu(p).value, 1e-9, 1e-12)
