import math
import warnings

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from _oracle import VALUES as V
from conftest import assert_close
from whittaker import families, logint
from whittaker.errors import DivergenceError, DomainError
from whittaker.hypergeom import g1
from whittaker.kernels import bessel_i, bessel_k, beta, shi_chi
from whittaker.whittaker import WhittakerParams, m_series

EULER = 0.5772156649015329


@pytest.mark.parametrize("key", [k for k in V if k[0] in ("I", "J")], ids=str)
@pytest.mark.parametrize("route", ["quad", "default"])
def test_ij_oracle(key, route):
    kind, idx, k, mu, x = key
    fn = logint.i_integral if kind == "I" else logint.j_integral
    r = None if route == "default" else route
    assert_close(fn(idx, k, mu, x, route=r).value, V[key], 1e-10)


@pytest.mark.parametrize("key", [k for k in V if k[0] == "H"], ids=str)
@pytest.mark.parametrize("route", ["quad", "relation", "auto"])
def test_h_oracle(key, route):
    _, idx, k, mu, x = key
    assert_close(logint.h_integral(idx, k, mu, x, route=route).value, V[key], 1e-9)


def test_i1_examples():
    assert logint.i_integral(1, 0.0, 0.7, 0.0, route="quad").value == pytest.approx(0.0, abs=1e-15)
    kv, cite = logint.i1_closed(0.0, 0.5, 1.0)
    assert_close(kv.value, -beta(1, 1) * g1(1.0, 2.0, 1.0).value, 1e-13)
    # e F(0,0,-1) - F(0,0,1) with F(0,0,z) = -2F2(1,1;2,2;z)
    assert_close(families.i1_ml(0, 0, 1.0), -math.e * 0.7965995992970532 + 1.3179021514544038, 1e-13)
    # (kappa, mu) = (1/2, 1) is (l, m) = (1, 1).
    assert logint.i1_closed(0.5, 1.0, 2.0)[1] == "I1:(l,m)-family"
    assert_close(families.i1_ml(1, 1, 2.0), logint.i_integral(1, 0.5, 1.0, 2.0, route="quad").value, 1e-8)
    # (1/2, 1/2) is outside the family and uses the general closed form.
    kv, cite = logint.i1_closed(0.5, 0.5, 2.0)
    assert cite == "I1:general"
    assert_close(kv.value, logint.i_integral(1, 0.5, 0.5, 2.0, route="quad").value, 1e-8)


def test_j_examples():
    assert_close(logint.j_integral(1, 0.0, 0.5, 0.0, route="quad").value, -2.0, 1e-13)
    j3 = logint.j_integral(3, 0.5, 1.0, 2.0, route="quad").value
    j4 = logint.j_integral(4, 0.5, 1.0, 2.0, route="quad").value
    assert_close(j4, j3, 1e-10)
    shi, chi = shi_chi(1.0)
    t3b = math.e * (chi - shi - EULER) - chi - shi + EULER
    assert_close(logint.j1_closed(0.0, 0.5, 1.0)[0].value, t3b, 1e-12)
    t00 = -math.pi * math.exp(0.5) * (bessel_k(0, 0.5) + (math.log(4) + EULER) * bessel_i(0, 0.5))
    assert_close(logint.j1_closed(0.0, 0.0, 1.0)[0].value, t00, 1e-12)
    assert_close(t00, V[("J", 1, 0.0, 0.0, 1.0)], 1e-12)


def test_j3_closed_domain():
    assert_close(logint.j3_closed(0.5, 1.0), V[("J", 3, 0.0, 0.5, 1.0)], 1e-11)
    with pytest.raises(DomainError):
        logint.j3_closed(-0.2, 1.0)
    with pytest.raises(DomainError):
        logint.j3_closed(0.5, 0.0)


def test_divergence_and_route_errors():
    with pytest.raises(DivergenceError):
        logint.i_integral(1, 1.0, 0.0, 1.0, route="quad")
    with pytest.raises(DomainError):
        logint.i_integral(5, 0.0, 0.5, 1.0)
    with pytest.raises(DomainError):
        logint.i_integral(1, 0.0, 0.5, 1.0, route="series")
    with pytest.raises(DomainError):
        logint.h_integral(1, 0.37, 0.91, 1.0, route="closed")
    with pytest.raises(DomainError):
        logint.h_integral(1, 0.0, 0.5, 0.0)


def test_h2_quad_warns_for_large_x():
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        try:
            logint.h_integral(2, 0.5, 1.0, 12.0, route="quad")
        except Exception:
            pass
    assert any(issubclass(i.category, RuntimeWarning) for i in w)


@pytest.mark.parametrize("ell,m", [(0, 0), (0, 1), (1, 1), (1, 2)])
@pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
def test_h_closed_forms(ell, m, x):
    k, mu = ell / 2, m + (1 - ell) / 2
    q1 = logint.h_integral(1, k, mu, x, route="quad").value
    q2 = logint.h_integral(2, k, mu, x, route="quad").value
    assert_close(families.hcal1_ml(ell, m, x), q1, 1e-6)
    assert_close(families.hcal2_ml(ell, m, x), q2, 1e-6)


def _admissible(k, mu):
    return mu - k + 0.5 > 0.1 and mu + k + 0.5 > 0.1


@given(st.floats(-0.9, 1.5), st.floats(0.0, 2.0), st.floats(0.1, 4.0))
def test_i_relations(k, mu, x):
    assume(_admissible(k, mu))
    i1 = logint.i_integral(1, k, mu, x, route="quad").value
    assert_close(logint.i_integral(2, k, mu, x, route="quad").value, math.exp(-x) * i1, 1e-9, 1e-14)
    i3 = logint.i_integral(3, k, mu, x, route="quad").value
    assert_close(i3, 4**mu * math.exp(-x / 2) * i1, 1e-9, 1e-14)
    assert_close(logint.i_integral(4, k, mu, x, route="quad").value, i3, 1e-9, 1e-14)


@given(st.floats(-0.9, 1.5), st.floats(0.0, 2.0), st.floats(0.1, 4.0))
def test_j_relations(k, mu, x):
    assume(_admissible(k, mu))
    j1 = logint.j_integral(1, k, mu, x, route="quad").value
    assert_close(logint.j_integral(2, k, mu, x, route="quad").value, math.exp(-x) * j1, 1e-9, 1e-14)
    j3 = logint.j_integral(3, k, mu, x, route="quad").value
    m = m_series(WhittakerParams(k, mu, x)).value
    rhs = 4**mu * (math.exp(-x / 2) * j1 + math.log(4) * beta(mu + k + 0.5, mu - k + 0.5) * m / x ** (mu + 0.5))
    assert_close(j3, rhs, 1e-9, 1e-14)


@given(st.floats(-0.9, 1.5), st.floats(0.0, 2.0), st.floats(0.1, 4.0))
def test_general_closed_forms(k, mu, x):
    assume(_admissible(k, mu))
    assert_close(logint.i1_general(k, mu, x), logint.i_integral(1, k, mu, x, route="quad").value, 1e-8, 1e-13)
    assert_close(logint.j1_general(k, mu, x), logint.j_integral(1, k, mu, x, route="quad").value, 1e-8, 1e-13)


@given(st.floats(0.0, 2.5), st.floats(0.1, 4.0))
def test_kappa0_closed_forms(mu, x):
    assert_close(logint.j1_kappa0(mu, x), logint.j_integral(1, 0.0, mu, x, route="quad").value, 1e-8)
    assert_close(logint.j3_closed(mu, x), logint.j_integral(3, 0.0, mu, x, route="quad").value, 1e-8)
