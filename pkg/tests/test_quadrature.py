import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import assert_close
from whittaker.errors import DomainError
from whittaker.quadrature import QuadCtrl, gamma_tail_bound, quad_de, quad_infinite


def test_examples():
    assert_close(quad_de(lambda t: 1.0, 0.0, 1.0).value, 1.0, 1e-15)
    assert_close(quad_de(lambda t, da, db: math.log(da), 0.0, 1.0, gaps=True).value, -1.0, 1e-14)
    beta_half = quad_de(lambda t, da, db: 1 / math.sqrt(da * db), 0.0, 1.0, gaps=True, alpha=-0.5, beta=-0.5)
    assert_close(beta_half.value, math.pi, 1e-12)


def test_reversed_and_empty_interval():
    assert quad_de(math.exp, 1.0, 1.0).value == 0.0
    assert_close(quad_de(math.exp, 1.0, 0.0).value, -(math.e - 1), 1e-14)


def test_non_integrable_endpoint_rejected():
    with pytest.raises(DomainError, match="non-integrable"):
        quad_de(lambda t: 1 / t, 0.0, 1.0, alpha=-1.0)
    with pytest.raises(DomainError):
        quad_de(math.exp, 0.0, math.inf)


@pytest.mark.parametrize("kw", [{"rel_tol": 0.0}, {"max_levels": 20}, {"tail_cut": 5.0}, {"abs_tol": -1.0}])
def test_ctrl_validation(kw):
    with pytest.raises(DomainError):
        QuadCtrl(**kw)


def test_quad_infinite_gamma():
    f = lambda t, da, db: t**1.5 * math.exp(-t)
    kv = quad_infinite(f, gamma_tail_bound(1.0, 1.5), 1.0, gaps=True)
    assert_close(kv.value, math.gamma(2.5), 1e-12)


@given(st.floats(-0.9, 3.0), st.floats(-0.9, 3.0))
def test_beta_integrals(a, b):
    f = lambda t, da, db: da**a * db**b
    ref = math.exp(math.lgamma(a + 1) + math.lgamma(b + 1) - math.lgamma(a + b + 2))
    assert_close(quad_de(f, 0.0, 1.0, gaps=True).value, ref, 1e-10)
