"""Incomplete gamma functions, their order derivatives and two log integrals."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from . import _num as N
from ._registry import op
from .errors import DomainError
from .hypergeom import hyp
from .kernels import KernelValue, SeriesCtrl, _sum_until_small, digamma, expint_ei, gamma

_MOD = "incgamma"
CANCEL_RATIO = 1 - 1e-8


@dataclass(frozen=True)
class IncGammaArgs:
    """Order nu > 0 and argument x >= 0 of gamma(nu, x) and Gamma(nu, x)."""

    nu: float
    x: float

    def __post_init__(self):
        if not (math.isfinite(self.nu) and self.nu > 0):
            raise DomainError(f"incomplete gamma needs nu > 0, got nu={self.nu}")
        if not (math.isfinite(self.x) and self.x >= 0):
            raise DomainError(f"incomplete gamma needs x >= 0, got x={self.x}")


def _lower_series(nu, x, ctrl):
    """e^{-x} sum_k x^{k+nu}/(nu)_{k+1}; also valid for x < 0 when x^nu is real."""
    if x == 0:
        return N.num(0, x), 0
    first = N.exp(-x) * _real_power(x, nu) / nu
    total, n, _ = _sum_until_small(first, lambda k, t: t * x / (nu + k), x, ctrl)
    return total, n


def _real_power(x, nu):
    if x > 0:
        return x**nu
    k = round(float(nu))
    if abs(float(nu) - k) > 1e-12:
        raise DomainError(f"x^nu is not real for x < 0 and non-integer nu={nu}")
    return x**k


@op("lower_gamma", _MOD)
def lower_gamma(a: IncGammaArgs, ctrl: SeriesCtrl | None = None) -> KernelValue:
    """gamma(nu, x) = e^{-x} sum_k x^{k+nu}/(nu)_{k+1}."""
    value, n = _lower_series(a.nu, a.x, ctrl or SeriesCtrl())
    return KernelValue(value, 8 * N.eps() * abs(value), n)


@op("upper_gamma", _MOD)
def upper_gamma(a: IncGammaArgs, ctrl: SeriesCtrl | None = None) -> KernelValue:
    """Gamma(nu, x) = Gamma(nu) - gamma(nu, x); warns when the difference cancels."""
    low = lower_gamma(a, ctrl)
    full = gamma(a.nu)
    if low.value > CANCEL_RATIO * full:
        warnings.warn(
            f"upper_gamma({a.nu}, {a.x}) loses digits: gamma(nu,x)/Gamma(nu) > 1 - 1e-8",
            RuntimeWarning,
            stacklevel=2,
        )
    value = full - low.value
    return KernelValue(value, low.abs_err_est + 4 * N.eps() * full, low.terms_used)


def upper_gamma_any(nu, x, ctrl: SeriesCtrl | None = None):
    """Gamma(nu, x) for any real nu and x > 0, by downward recurrence when nu <= 0."""
    if not x > 0:
        raise DomainError(f"upper_gamma_any needs x > 0, got {x}")
    if nu > 0:
        return upper_gamma(IncGammaArgs(nu, x), ctrl).value
    shift = math.floor(-nu) + 1
    top = nu + shift
    if abs(top - 1) < 1e-14:
        # nu is a nonpositive integer: start from Gamma(0, x) = E1(x).
        value, start = -expint_ei(-x, ctrl), 0.0
        shift -= 1
    else:
        value, start = upper_gamma(IncGammaArgs(top, x), ctrl).value, top
    s = start
    for _ in range(shift):
        s -= 1
        value = (value - x**s * math.exp(-x)) / s
    return value


@N.extended("nu", "x")
def _dgamma(nu, x):
    ctrl = SeriesCtrl()
    low, _ = _lower_series(nu, x, ctrl)
    return low * N.log(x) - x**nu / nu**2 * hyp((nu, nu), (nu + 1, nu + 1), -x)


@op("dgamma_dnu", _MOD)
def dgamma_dnu(a: IncGammaArgs) -> KernelValue:
    """d gamma(nu, x)/dnu = gamma(nu,x) ln x - x^nu/nu^2 2F2(nu,nu; nu+1,nu+1; -x)."""
    if a.x == 0:
        return KernelValue(0.0, 0.0)
    v = _dgamma(a.nu, a.x)
    return KernelValue(v, 1e-15 * abs(v) + 1e-300)


@op("dGamma_dnu", _MOD)
def dGamma_dnu(a: IncGammaArgs) -> KernelValue:
    """d Gamma(nu, x)/dnu = Gamma(nu) psi(nu) - d gamma(nu, x)/dnu."""
    full = gamma(a.nu) * digamma(a.nu)
    low = dgamma_dnu(a)
    v = full - low.value
    return KernelValue(v, low.abs_err_est + 4 * N.eps() * abs(full))


@op("log_integral_gamma", _MOD)
def log_integral_gamma(nu, x) -> KernelValue:
    """int_0^x t^{nu-1} e^{-t} ln t dt, nu > 0, x > 0."""
    if not x > 0:
        raise DomainError(f"log_integral_gamma needs x > 0, got {x}")
    return dgamma_dnu(IncGammaArgs(nu, x))


@N.extended("nu", "x")
def _log_exp(nu, x):
    return -hyp((nu, nu), (nu + 1, nu + 1), x) / nu**2


@op("log_integral_exp", _MOD)
def log_integral_exp(nu, x) -> KernelValue:
    """int_0^1 e^{xt} t^{nu-1} ln t dt = -2F2(nu,nu; nu+1,nu+1; x)/nu^2, nu > 0."""
    if not (math.isfinite(nu) and nu > 0):
        raise DomainError(f"log_integral_exp needs nu > 0, got {nu}")
    v = _log_exp(nu, x)
    return KernelValue(v, 1e-15 * abs(v))
