import math
import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _oracle import VALUES as V
from conftest import assert_close
from whittaker import incgamma as IG
from whittaker.errors import DomainError
from whittaker.kernels import digamma, gamma
from whittaker.verify import fd_derivative, quad_log_gamma

A = IG.IncGammaArgs
F22_M1 = 0.7965995992970532


@pytest.mark.parametrize("nu,x", [k[1:] for k in V if k[0] == "lower"])
def test_oracle(nu, x):
    a = A(nu, x)
    assert_close(IG.lower_gamma(a).value, V[("lower", nu, x)], 1e-14)
    assert_close(IG.upper_gamma(a).value, V[("upper", nu, x)], 1e-12)
    assert_close(IG.dgamma_dnu(a).value, V[("dlower", nu, x)], 1e-12)
    assert_close(IG.dGamma_dnu(a).value, V[("dupper", nu, x)], 1e-11)


def test_examples():
    assert_close(IG.lower_gamma(A(1.0, 1.0)).value, 1 - math.exp(-1), 1e-15)
    assert IG.lower_gamma(A(2.3, 0.0)).value == 0.0
    assert_close(IG.dgamma_dnu(A(1.0, 1.0)).value, -F22_M1, 1e-14)
    assert_close(IG.dGamma_dnu(A(1.0, 1.0)).value, -0.5772156649015329 + F22_M1, 1e-13)
    # Large x: d gamma/dnu tends to Gamma psi and d Gamma/dnu to zero.
    assert_close(IG.dgamma_dnu(A(2.0, 30.0)).value, gamma(2.0) * digamma(2.0), 1e-10)
    assert abs(IG.dGamma_dnu(A(2.0, 30.0)).value) <= 1e-10
    assert_close(IG.log_integral_gamma(1.0, 1.0).value, -F22_M1, 1e-14)
    assert_close(IG.log_integral_gamma(2.0, 1.0).value, quad_log_gamma(2.0, 1.0), 1e-9)


@pytest.mark.parametrize("nu,x", [k[1:] for k in V if k[0] == "logexp"])
def test_log_integral_exp_oracle(nu, x):
    assert_close(IG.log_integral_exp(nu, x).value, V[("logexp", nu, x)], 1e-13)


def test_log_integral_exp_examples():
    assert_close(IG.log_integral_exp(2.0, 0.0).value, -0.25, 1e-15)
    assert_close(IG.log_integral_exp(1.0, 1.0).value, -1.3179021514544038, 1e-14)
    assert_close(IG.log_integral_exp(1.0, -1.0).value, -F22_M1, 1e-14)


def test_domain_errors():
    with pytest.raises(DomainError):
        A(0.0, 1.0)
    with pytest.raises(DomainError):
        A(1.0, -1.0)
    with pytest.raises(DomainError):
        IG.log_integral_gamma(1.0, 0.0)
    with pytest.raises(DomainError):
        IG.log_integral_exp(-1.0, 0.5)


def test_upper_gamma_cancellation_warning():
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        IG.upper_gamma(A(1.0, 30.0))
    assert any(issubclass(i.category, RuntimeWarning) for i in w)


@pytest.mark.parametrize("nu,x", [k[1:] for k in V if k[0] == "upper_any"])
def test_upper_gamma_any(nu, x):
    assert_close(IG.upper_gamma_any(nu, x), V[("upper_any", nu, x)], 1e-12)


def test_spot_derivative_by_fd():
    fd = fd_derivative(lambda v: IG.lower_gamma(A(v, 1.0)).value, 1.0)
    assert_close(fd, -0.7965996, 1e-7)


@given(st.floats(0.2, 6.0), st.floats(0.0, 12.0))
def test_complement(nu, x):
    a = A(nu, x)
    full = gamma(nu)
    assert_close(IG.lower_gamma(a).value + IG.upper_gamma(a).value, full, 1e-12)
    gp = full * digamma(nu)
    assert_close(IG.dgamma_dnu(a).value + IG.dGamma_dnu(a).value, gp, 1e-11, 1e-11 * (1 + abs(gp)))


@given(st.floats(0.3, 5.0), st.floats(0.05, 10.0))
def test_dgamma_matches_quadrature(nu, x):
    assert_close(IG.dgamma_dnu(A(nu, x)).value, quad_log_gamma(nu, x), 1e-9, 1e-13)


@given(st.floats(0.3, 5.0), st.floats(0.05, 10.0))
def test_dgamma_matches_fd(nu, x):
    fd = fd_derivative(lambda v: IG.lower_gamma(A(v, x)).value, nu)
    assert_close(IG.dgamma_dnu(A(nu, x)).value, fd, 1e-7, 1e-10)
