"""Closed forms for the integer family kappa = l/2, mu = m + (1-l)/2.

Everything here is built from the factorial-weighted polynomials P(s,k,z)
and the derivative ladder F(s,k,z). The closed forms cancel heavily in
binary64, so the public evaluators run in extended precision.
"""

from __future__ import annotations

import math

from . import _num as N
from ._registry import op
from .errors import DomainError
from .hypergeom import hyp
from .kernels import harmonic


def _ml_check(ell: int, m: int):
    if int(ell) != ell or int(m) != m:
        raise DomainError(f"(l, m) must be integers, got ({ell}, {m})")
    if m < 0 or m < ell:
        raise DomainError(f"(l, m) family needs m >= max(l, 0), got l={ell}, m={m}")


@op("p_poly", "whittaker-core")
def p_poly(s: int, k: int, z):
    """P(s, k, z) = sum_{n=0}^{k} C(k, n) (2k - s - n)! z^n."""
    if k < 0 or int(k) != k or int(s) != s:
        raise DomainError(f"p_poly needs integer s and k >= 0, got s={s}, k={k}")
    if 2 * k - s - k < 0:
        raise DomainError(f"negative factorial in p_poly(s={s}, k={k})")
    total = N.num(0, z)
    for n in range(k, -1, -1):
        total = total * z + math.comb(k, n) * math.factorial(2 * k - s - n)
    return total


@op("f_func", "whittaker-deriv")
def f_func(s: int, k: int, z):
    """F(s, k, z) = sum_n (-1)^{n+1} C(k,n)/j^2 2F2(j, j; j+1, j+1; z), j = n+k-s+1."""
    if z == 0:
        raise DomainError("f_func is evaluated only for z != 0")
    if k < 0 or int(k) != k or int(s) != s:
        raise DomainError(f"f_func needs integer s and k >= 0, got s={s}, k={k}")
    if k - s < 0:
        raise DomainError(f"negative derivative order in f_func(s={s}, k={k})")
    total = N.num(0, z)
    for n in range(k + 1):
        j = n + k - s + 1
        sign = -1 if n % 2 == 0 else 1
        total += sign * math.comb(k, n) * hyp((j, j), (j + 1, j + 1), z) / (j * j)
    return total


def _parts(ell, m, x):
    pp = p_poly(ell, m, x)
    pm = p_poly(-ell, m - ell, -x)
    fp = f_func(ell, m, x)
    fm = f_func(-ell, m - ell, -x)
    c = (2 * m - ell + 1) * math.comb(2 * m - ell, m)
    sigma = -1 if (m - ell) % 2 else 1
    return pp, pm, fp, fm, c, sigma


def _h(n, like):
    return harmonic(N.num(n, like))


@N.extended("x")
def m_ml(ell: int, m: int, x):
    """M_{l/2, m+(1-l)/2}(x), x > 0."""
    _ml_check(ell, m)
    pp, pm = p_poly(ell, m, x), p_poly(-ell, m - ell, -x)
    c = (2 * m - ell + 1) * math.comb(2 * m - ell, m)
    sigma = -1 if (m - ell) % 2 else 1
    half = N.exp(x / 2)
    return c * sigma * x ** (N.num(ell, x) / 2 - m) * (half * pm - pp / half)


@N.extended("x")
def dkm_ml(ell: int, m: int, x):
    """dM/dkappa on the (l, m) family, x > 0."""
    _ml_check(ell, m)
    pp, pm, fp, fm, c, sigma = _parts(ell, m, x)
    ex = N.exp(x)
    inner = sigma * (_h(m - ell, x) - _h(m, x)) * (ex * pm - pp)
    inner += x ** (2 * m + 1 - ell) * (ex * fm - fp)
    return c * x ** (N.num(ell, x) / 2 - m) * N.exp(-x / 2) * inner


@N.extended("x")
def dmm_ml(ell: int, m: int, x):
    """dM/dmu on the (l, m) family, x > 0."""
    _ml_check(ell, m)
    pp, pm, fp, fm, c, sigma = _parts(ell, m, x)
    ex = N.exp(x)
    w = N.log(x) + 2 * _h(2 * m - ell + 1, x) - _h(m - ell, x) - _h(m, x)
    inner = sigma * w * (ex * pm - pp) + x ** (2 * m + 1 - ell) * (ex * fm + fp)
    return c * x ** (N.num(ell, x) / 2 - m) * N.exp(-x / 2) * inner


@N.extended("x")
def g1_ml(ell: int, m: int, x):
    """G1(m+1-l; 2(m+1)-l; x)."""
    _ml_check(ell, m)
    pp, pm, fp, fm, c, sigma = _parts(ell, m, x)
    ex = N.exp(x)
    pole = sigma * x ** (ell - 2 * m - 1) * (_h(m - ell, x) - _h(m, x)) * (pp - ex * pm)
    return c * (pole + fp - ex * fm)


@N.extended("x")
def h1_ml(ell: int, m: int, x):
    """H1(m+1-l; 2(m+1)-l; x)."""
    _ml_check(ell, m)
    pp, pm, fp, fm, c, sigma = _parts(ell, m, x)
    ex = N.exp(x)
    pole = sigma * x ** (ell - 2 * m - 1) * (_h(2 * m - ell + 1, x) - _h(m, x)) * (ex * pm - pp)
    return c * (pole + ex * fm)


@N.extended("x")
def i1_ml(ell: int, m: int, x):
    """I1(l/2, m+(1-l)/2; x) = e^x F(-l, m-l, -x) - F(l, m, x)."""
    _ml_check(ell, m)
    return N.exp(x) * f_func(-ell, m - ell, -x) - f_func(ell, m, x)


@N.extended("x")
def j1_ml(ell: int, m: int, x):
    """J1(l/2, m+(1-l)/2; x) = e^x F(-l, m-l, -x) + F(l, m, x)."""
    _ml_check(ell, m)
    return N.exp(x) * f_func(-ell, m - ell, -x) + f_func(ell, m, x)


@N.extended("x")
def hcal1_ml(ell: int, m: int, x):
    """Infinite I-kernel log integral on the (l, m) family, x > 0."""
    _ml_check(ell, m)
    pp, pm, fp, fm, _, sigma = _parts(ell, m, x)
    ex = N.exp(x)
    half = N.num(ell - 1, x) / 2
    a = sigma * (_h(m, x) - N.euler(x)) * x ** (half - m) * (ex * pm - pp)
    b = x ** (m - half) * (ex * fm - fp)
    return (a - b) / math.factorial(m)


@N.extended("x")
def hcal2_ml(ell: int, m: int, x):
    """Infinite J-kernel log integral on the (l, m) family, x > 0."""
    _ml_check(ell, m)
    pp, pm, fp, fm, _, sigma = _parts(ell, m, x)
    emx = N.exp(-x)
    half = N.num(ell - 1, x) / 2
    a = sigma * (_h(m - ell, x) - N.euler(x)) * x ** (half - m) * (pm - emx * pp)
    b = x ** (m - half) * (fm - emx * fp)
    return (a + b) / math.factorial(m - ell)


def ml_from_kappa_mu(kappa, mu, tol=1e-12):
    """(l, m) with kappa = l/2, mu = m + (1-l)/2 and m >= max(l, 0), else None."""
    two_k = 2 * float(kappa)
    ell = round(two_k)
    if abs(two_k - ell) > tol:
        return None
    m_f = float(mu) + float(kappa) - 0.5
    m = round(m_f)
    if abs(m_f - m) > tol or m < 0 or m < ell:
        return None
    return ell, m
