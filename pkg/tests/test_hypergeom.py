import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from _oracle import VALUES as V
from conftest import assert_close
from whittaker import hypergeom as HG
from whittaker.errors import DomainError, PoleError
from whittaker.verify import fd_derivative

E = math.e
F22_M1 = 0.7965995992970532  # 2F2(1,1;2,2;-1)


def _pfq(up, lo, x):
    return HG.pfq(HG.PFQArgs(up, lo, x)).value


@pytest.mark.parametrize(
    "key", [k for k in V if k[0] == "pfq"], ids=lambda k: f"{k[1]}{k[2]}{k[3]}"
)
def test_pfq_oracle(key):
    _, up, lo, x = key
    assert_close(_pfq(up, lo, x), V[key], 1e-13)


def test_pfq_examples():
    assert _pfq((0.7,), (1.3,), 0.0) == 1.0
    assert_close(_pfq((1.0, 1.0), (2.0, 2.0), -1.0), F22_M1, 1e-10)
    assert_close(_pfq((1.0,), (2.0,), 2.0), (math.exp(2) - 1) / 2, 1e-14)


def test_pfq_domain():
    with pytest.raises(DomainError):
        HG.PFQArgs((1, 1, 1), (2,), 0.5)
    with pytest.raises(DomainError):
        HG.PFQArgs((1, 1), (2,), 1.0)
    with pytest.raises(PoleError):
        HG.PFQArgs((1.0,), (-2.0,), 0.5)
    # Terminating before the pole is allowed.
    assert HG.PFQArgs((-1.0,), (-2.0,), 0.5).terminating_degree == 1


def test_pfq_nth_derivative():
    args = HG.PFQArgs((1, 1), (2, 2), 0.3)
    same, pref = HG.pfq_nth_derivative(args, 0)
    assert same == args and pref == 1
    sh1, p1 = HG.pfq_nth_derivative(args, 1)
    assert sh1.upper == (2, 2) and sh1.lower == (3, 3) and p1 == 0.25
    sh2, p2 = HG.pfq_nth_derivative(args, 2)
    assert sh2.upper == (3, 3) and sh2.lower == (4, 4) and p2 == pytest.approx(1 / 9, rel=1e-15)
    fd = fd_derivative(lambda v: _pfq((1, 1), (2, 2), v), 0.3)
    assert_close(p1 * HG.pfq(sh1).value, fd, 1e-9)


@pytest.mark.parametrize("key", [k for k in V if k[0] in ("g1", "h1")], ids=str)
def test_g1_h1_oracle(key):
    fn = HG.g1 if key[0] == "g1" else HG.h1
    assert_close(fn(*key[1:]).value, V[key], 1e-12)


def test_g1_h1_examples():
    assert HG.g1(1.3, 2.1, 0.0).value == 0.0
    assert HG.h1(1.3, 2.1, 0.0).value == 0.0
    assert_close(HG.g1(1.0, 1.0, 1.0).value, E * F22_M1, 1e-13)
    assert_close(HG.h1(1.0, 1.0, 1.0).value, -E * F22_M1, 1e-13)
    assert_close(HG.g1(1.0, 1.0, 1.0).value, 2.1653822153269364, 1e-13)


def test_g1_pole():
    with pytest.raises(PoleError):
        HG.g1(-2.0, 1.5, 1.0)
    with pytest.raises(PoleError):
        HG.g1_kummer(1.0, 1.0, 0.5)


@pytest.mark.parametrize("n,b,x", [(0, 2.0, 1.0), (1, 2.0, 1.0), (2, 1.5, 3.0), (3, 4.0, -2.0)])
def test_g1_pole_limit_matches_nearby_series(n, b, x):
    # The limit at a = -n is the average of the series at -n +- h, to O(h^2).
    h = 1e-5
    near = 0.5 * (HG.g1(-n + h, b, x).value + HG.g1(-n - h, b, x).value)
    assert_close(HG.g1_pole_limit(n, b, x).value, near, 1e-8)


def test_g1_kummer_example():
    assert_close(HG.g1_kummer(2.0, 5.0, 0.5).value, HG.g1(2.0, 5.0, 0.5).value, 1e-10)


def test_s_finite_examples():
    assert HG.s_finite(2, 1) == 1.0
    assert HG.s_finite(3, 1) == 1.5
    assert HG.s_finite(3, 2) == 1.0
    with pytest.raises(DomainError):
        HG.s_finite(3, 3)


def test_s_finite_exact_loop():
    for n in range(2, 13):
        for ell in range(1, n):
            loop = sum(
                (Fraction(math.prod(range(ell, ell + k))) * 2**k / math.prod(range(ell + n, ell + n + k))
                 for k in range(n - ell)),
                Fraction(0),
            )
            assert HG.s_finite(n, ell) == float(loop)


def test_g1_reduced_examples():
    kv, cite = HG.g1_reduced(2.0, 2.0, 1.0)
    assert_close(kv.value, E / 2 * _pfq((1, 1), (3, 2), -1.0), 1e-13)
    kv, _ = HG.g1_reduced(1.0, 4.0, 1.0)
    assert_close(kv.value, HG.g1(1.0, 4.0, 1.0).value, 1e-9)
    kv, _ = HG.g1_reduced(0.0, 2.0, 1.0)
    assert_close(kv.value, HG.g1_pole_limit(0, 2.0, 1.0).value, 1e-12)
    assert HG.g1_reduced(0.37, 1.91, 1.0) is None


def test_h1_reduced_examples():
    kv, _ = HG.h1_reduced(1.0, 3.0, 2.0)
    assert_close(kv.value, -2 * math.exp(2) / 9 * _pfq((3, 3), (4, 4), -2.0), 1e-13)
    assert_close(HG.h1_reduced(1.0, 1.0, 1.0)[0].value, -2.1653822153269364, 1e-13)
    kv, _ = HG.h1_reduced(2.0, 4.0, 1.0)
    assert_close(kv.value, HG.h1(2.0, 4.0, 1.0).value, 1e-9)
    kv, _ = HG.h1_reduced(1.0, 2.0, 1.0)
    assert_close(kv.value, HG.h1(1.0, 2.0, 1.0).value, 1e-10)


def test_g1_one_minus_n_agrees_with_ml_catalog():
    for n in range(1, 5):
        assert_close(HG.g1_one_minus_n(n, 1.5), HG.g1_pole_limit(n - 1, 2.0, 1.5).value, 1e-11)


ab = st.floats(0.2, 4.0)
xs = st.floats(-3.0, 3.0)


@given(ab, ab, xs)
def test_kummer_identity(a, b, x):
    assume(not (b - a <= 0 and b - a == int(b - a)))
    g = HG.g1(a, b, x).value
    assert_close(HG.g1_kummer(a, b, x).value, g, 1e-9, 1e-12 * (1 + abs(g)))


@given(ab, ab, st.floats(-2.0, 2.0))
def test_g1_h1_are_parameter_derivatives(a, b, x):
    fa = fd_derivative(lambda v: _pfq((v,), (b,), x), a)
    fb = fd_derivative(lambda v: _pfq((a,), (v,), x), b)
    assert_close(HG.g1(a, b, x).value, fa, 1e-6, 1e-9)
    assert_close(HG.h1(a, b, x).value, fb, 1e-6, 1e-9)


@given(ab, st.floats(0.3, 4.0), st.floats(-2.0, 2.0))
def test_kummer_transformation_of_1f1(a, b, x):
    assert_close(_pfq((a,), (b,), x), math.exp(x) * _pfq((b - a,), (b,), -x), 1e-11, 1e-14)
