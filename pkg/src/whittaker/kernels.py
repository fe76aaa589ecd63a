"""Scalar special functions shared by every other module.

All kernels are precision-generic: pass floats for binary64 results or
``mpmath.mpf`` values (inside an ``mpmath.workdps`` block) for extended
precision. Only mpmath's number type is used, never its special functions.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath

from . import _num as N
from .errors import ConvergenceError, DomainError, PoleError

DEFAULT_MAX_TERMS = 5000


def _env_max_terms() -> int:
    raw = os.environ.get("WHITTAKER_MAX_TERMS")
    if raw is None:
        return DEFAULT_MAX_TERMS
    try:
        value = int(raw)
    except ValueError as exc:
        raise DomainError(f"WHITTAKER_MAX_TERMS must be an integer, got {raw!r}") from exc
    if value < 3:
        raise DomainError("WHITTAKER_MAX_TERMS must be at least 3")
    return value


@dataclass(frozen=True)
class SeriesCtrl:
    """Truncation policy for power series."""

    rel_tol: float = 1e-17
    max_terms: int = field(default_factory=_env_max_terms)
    min_terms: int = 3

    def __post_init__(self):
        if not 0 < self.rel_tol < 1e-3:
            raise DomainError(f"rel_tol must lie in (0, 1e-3), got {self.rel_tol}")
        if self.min_terms < 3:
            raise DomainError("min_terms must be >= 3")
        if self.max_terms < self.min_terms:
            raise DomainError("max_terms must be >= min_terms")

    def tol(self, like) -> float:
        """Effective relative tolerance for the precision of ``like``."""
        return N.eps(like) / 4 if N.is_mp(like) else self.rel_tol


@dataclass(frozen=True)
class KernelValue:
    """A computed value with an absolute error estimate and the work spent."""

    value: float
    abs_err_est: float = 0.0
    terms_used: int = 0

    def __float__(self):
        return float(self.value)


@dataclass(frozen=True)
class EvalResult:
    """Value of a multi-route quantity with the route that produced it."""

    value: float
    abs_err_est: float
    route: str
    citations: tuple[str, ...] = ()
    diagnostics: dict = field(default_factory=dict)

    def __float__(self):
        return float(self.value)


def is_nonpos_int(z) -> bool:
    return z <= 0 and z == int(z)


def _check_pole(z, what="argument"):
    if is_nonpos_int(z):
        raise PoleError(f"pole: {what} {z} is a nonpositive integer")


# ----------------------------------------------------------------------------
# Gamma family
# ----------------------------------------------------------------------------


def lngamma(z):
    """Return ``(ln|Gamma(z)|, sign of Gamma(z))``."""
    _check_pole(z, "Gamma argument")
    if z > 0:
        return N.lgamma(z), 1
    # Gamma alternates sign between consecutive negative integers.
    sign = -1 if int(math.floor(float(z))) % 2 else 1
    return N.lgamma(z), sign


def gamma(z):
    """Gamma(z) for real z away from poles."""
    _check_pole(z, "Gamma argument")
    if N.is_mp(z):
        return mpmath.gamma(z)
    if z == int(z) and z <= 171:
        return float(math.factorial(int(z) - 1))
    return math.gamma(z)


def rgamma(z):
    """1/Gamma(z), zero at the poles."""
    if is_nonpos_int(z):
        return N.num(0, z)
    return 1 / gamma(z)


def beta(a, b):
    """Euler Beta function B(a, b) for a, b not at Gamma poles."""
    la, sa = lngamma(a)
    lb, sb = lngamma(b)
    lc, sc = lngamma(a + b)
    return sa * sb * sc * N.exp(la + lb - lc)


def gamma_ratio(a, b):
    """Gamma(a)/Gamma(b) without overflow."""
    la, sa = lngamma(a)
    if is_nonpos_int(b):
        return N.num(0, a)
    lb, sb = lngamma(b)
    return sa * sb * N.exp(la - lb)


@lru_cache(maxsize=None)
def _bernoulli_even(count: int) -> tuple[Fraction, ...]:
    """B_2, B_4, ..., B_{2*count} via the Akiyama-Tanigawa algorithm."""
    nmax = 2 * count
    a = [Fraction(0)] * (nmax + 1)
    out = []
    for m in range(nmax + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        if m >= 2 and m % 2 == 0:
            out.append(a[0])
    return tuple(out)


def digamma(z):
    """psi(z) by upward recurrence and the asymptotic Bernoulli series."""
    _check_pole(z, "digamma argument")
    mp = N.is_mp(z)
    shift_to = 30 if mp else 8
    acc = N.num(0, z)
    w = z
    while w < shift_to:
        acc -= 1 / w
        w += 1
    res = N.log(w) - 1 / (2 * w)
    w2inv = 1 / (w * w)
    power = w2inv
    tol = N.eps(z)
    for k, b2k in enumerate(_bernoulli_even(40 if mp else 12), start=1):
        term = N.num(b2k.numerator, z) / N.num(b2k.denominator, z) / (2 * k) * power
        res -= term
        if abs(term) < tol * abs(res):
            break
        power *= w2inv
    return res + acc


def harmonic(z):
    """Generalized harmonic number H_z = psi(z+1) + gamma_E."""
    if z <= -1:
        raise DomainError(f"harmonic requires z > -1, got {z}")
    if z == int(z) and z <= 30:
        h = sum((Fraction(1, k) for k in range(1, int(z) + 1)), Fraction(0))
        return N.num(h.numerator, z) / N.num(h.denominator, z) if N.is_mp(z) else float(h)
    return digamma(z + 1) + N.euler(z)


def pochhammer(a, n: int):
    """Rising factorial (a)_n."""
    if n < 0 or n != int(n):
        raise DomainError(f"pochhammer needs integer n >= 0, got {n}")
    out = N.num(1, a) if isinstance(a, float) or N.is_mp(a) else 1
    for k in range(int(n)):
        out *= a + k
    return out


# ----------------------------------------------------------------------------
# Exponential and hyperbolic integrals
# ----------------------------------------------------------------------------


def _sum_until_small(first, step, like, ctrl: SeriesCtrl, start=0):
    """Sum ``first + step(1, t) + ...`` with the three-small-terms stop rule."""
    tol = ctrl.tol(like)
    total = first
    term = first
    small = 0
    k = start
    while True:
        k += 1
        if k > ctrl.max_terms:
            raise ConvergenceError(f"series did not converge in {ctrl.max_terms} terms")
        term = step(k, term)
        total += term
        if abs(term) <= tol * abs(total):
            small += 1
            if small >= 3 and k >= ctrl.min_terms:
                return total, k, term
        else:
            small = 0


def shi_chi(x, ctrl: SeriesCtrl | None = None):
    """Return ``(Shi(x), Chi(x))``; Chi uses the real convention Chi(-x) = Chi(x)."""
    ctrl = ctrl or SeriesCtrl()
    if x == 0:
        raise DomainError("Chi has a logarithmic singularity at x = 0")
    y = abs(x)
    # Odd and even Taylor terms y^{2k+1}/(2k+1)!, y^{2k}/(2k)!.
    shi_sum = y
    chi_sum = N.num(0, y)
    odd = y
    even = N.num(1, y)
    tol = ctrl.tol(y)
    small = 0
    k = 0
    while True:
        k += 1
        if k > ctrl.max_terms:
            raise ConvergenceError("Shi/Chi series did not converge")
        even = odd * y / (2 * k)
        odd = even * y / (2 * k + 1)
        t_chi = even / (2 * k)
        t_shi = odd / (2 * k + 1)
        chi_sum += t_chi
        shi_sum += t_shi
        if t_chi <= tol * abs(chi_sum) and t_shi <= tol * shi_sum:
            small += 1
            if small >= 3:
                break
        else:
            small = 0
    shi = shi_sum if x > 0 else -shi_sum
    chi = N.euler(y) + N.log(y) + chi_sum
    return shi, chi


def _e1_cf(y, ctrl: SeriesCtrl):
    """E1(y), y > 0, by the modified Lentz continued fraction."""
    tol = ctrl.tol(y)
    tiny = N.tiny(y)
    b = y + 1
    c = 1 / tiny
    d = 1 / b
    h = d
    for i in range(1, ctrl.max_terms + 1):
        an = -N.num(i * i, y)
        b += 2
        d = 1 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1) <= tol:
            return h * N.exp(-y)
    raise ConvergenceError("E1 continued fraction did not converge")


def expint_ei(x, ctrl: SeriesCtrl | None = None):
    """Exponential integral Ei(x), principal value for x > 0."""
    ctrl = ctrl or SeriesCtrl()
    if x == 0:
        raise DomainError("Ei has a logarithmic singularity at x = 0")
    if x < 0 and -x > 2:
        return -_e1_cf(-x, ctrl)
    y = abs(x)
    total, _, _ = _sum_until_small(x, lambda k, t: t * x * k / ((k + 1) * (k + 1)), x, ctrl)
    return N.euler(x) + N.log(y) + total


# ----------------------------------------------------------------------------
# Bessel functions
# ----------------------------------------------------------------------------


def _bessel_series(nu, x, sign, ctrl):
    """sum_k sign^k (x/2)^{2k+nu} / (k! Gamma(nu+k+1)) for nu not a negative integer."""
    if x == 0:
        if nu == 0:
            return N.num(1, x)
        if nu > 0:
            return N.num(0, x)
        raise DomainError(f"Bessel function of order {nu} is singular at x = 0")
    h = x / 2
    q = sign * h * h
    first = N.exp(nu * N.log(h)) * rgamma(nu + 1)
    if first == 0:
        raise DomainError("leading Bessel term underflows")
    total, _, _ = _sum_until_small(first, lambda k, t: t * q / (k * (nu + k)), x, ctrl)
    if not _finite(total):
        raise ConvergenceError("Bessel series overflowed")
    return total


def _finite(v) -> bool:
    return mpmath.isfinite(v) if N.is_mp(v) else math.isfinite(v)


def _bessel_order(nu, x):
    if x < 0:
        raise DomainError(f"Bessel functions require x >= 0, got {x}")
    if nu < 0 and nu == int(nu):
        return -nu, (-1) ** int(-nu)
    return nu, 1


def bessel_i(nu, x, ctrl: SeriesCtrl | None = None):
    """Modified Bessel function I_nu(x) by its ascending series."""
    ctrl = ctrl or SeriesCtrl()
    order, _ = _bessel_order(nu, x)
    return _bessel_series(order, x, 1, ctrl)


def bessel_j(nu, x, ctrl: SeriesCtrl | None = None):
    """Bessel function J_nu(x) by its ascending series."""
    ctrl = ctrl or SeriesCtrl()
    order, sign = _bessel_order(nu, x)
    return sign * _bessel_series(order, x, -1, ctrl)


def bessel_k(nu, x, ctrl: SeriesCtrl | None = None):
    """Modified Bessel function K_nu(x), x > 0.

    Evaluated with enough extra digits to absorb the cancellation between
    the growing I-type series.
    """
    if x <= 0:
        raise DomainError(f"bessel_k requires x > 0, got {x}")
    ctrl = ctrl or SeriesCtrl()
    base_dps = mpmath.mp.dps if N.is_mp(x) else 15
    with mpmath.workdps(base_dps + int(0.87 * float(x)) + 10):
        xm, num = mpmath.mpf(x), abs(mpmath.mpf(nu))
        if num == int(num):
            out = _bessel_k_int(int(num), xm, ctrl)
        else:
            pi = N.pi(xm)
            out = pi / 2 * (bessel_i(-num, xm, ctrl) - bessel_i(num, xm, ctrl)) / N.sin(num * pi)
    return +out if N.is_mp(x) else float(out)


def _bessel_k_int(n: int, x, ctrl):
    h = x / 2
    q = h * h
    finite = N.num(0, x)
    if n > 0:
        t = N.num(math.factorial(n - 1), x)
        finite = t
        for k in range(1, n):
            t = t * (-q) / (k * (n - k))
            finite += t
        finite = finite / (2 * h**n)
    first = h**n / math.factorial(n) * (digamma(N.num(1, x)) + digamma(N.num(n + 1, x)))
    tail = _series_with_weights(first, q, n, x, ctrl)
    return finite + (-1) ** (n + 1) * N.log(h) * bessel_i(n, x, ctrl) + (-1) ** n / 2 * tail


def _series_with_weights(first, q, n, like, ctrl):
    """sum_k [psi(k+1)+psi(n+k+1)] q^k (x/2)^n / (k!(n+k)!) given the k=0 term."""
    tol = ctrl.tol(like)
    psi_a = digamma(N.num(1, like))
    psi_b = digamma(N.num(n + 1, like))
    base = first / (psi_a + psi_b)
    total = first
    small = 0
    for k in range(1, ctrl.max_terms + 1):
        base = base * q / (k * (n + k))
        psi_a += N.num(1, like) / k
        psi_b += N.num(1, like) / (n + k)
        term = base * (psi_a + psi_b)
        total += term
        if abs(term) <= tol * abs(total):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise ConvergenceError("K_n series did not converge")


def dbessel_i_dnu(nu, x, ctrl: SeriesCtrl | None = None):
    """Order derivative dI_nu(x)/dnu by term-wise differentiation, nu > -1."""
    ctrl = ctrl or SeriesCtrl()
    if nu <= -1:
        raise DomainError(f"dbessel_i_dnu requires nu > -1, got {nu}")
    if x <= 0:
        raise DomainError(f"dbessel_i_dnu requires x > 0, got {x}")
    h = x / 2
    q = h * h
    base = N.exp(nu * N.log(h)) * rgamma(nu + 1)
    psi = digamma(nu + 1)
    total = psi * base
    tol = ctrl.tol(x)
    small = 0
    for k in range(1, ctrl.max_terms + 1):
        base = base * q / (k * (nu + k))
        psi += 1 / (nu + k)
        term = psi * base
        total += term
        if abs(term) <= tol * abs(total):
            small += 1
            if small >= 3:
                return N.log(h) * bessel_i(nu, x, ctrl) - total
        else:
            small = 0
    raise ConvergenceError("dI/dnu series did not converge")


# ----------------------------------------------------------------------------
# Dawson and Laguerre
# ----------------------------------------------------------------------------


def dawson(x, ctrl: SeriesCtrl | None = None):
    """Dawson's integral F(x) = exp(-x^2) * int_0^x exp(t^2) dt."""
    ctrl = ctrl or SeriesCtrl()
    if x == 0:
        return N.num(0, x) if isinstance(x, float) or N.is_mp(x) else 0.0
    y = abs(x)
    if y > 25 and not N.is_mp(x):
        # Asymptotic series; e^{y^2} overflows binary64 here.
        inv = 1 / (2 * y * y)
        total, term = 1.0, 1.0
        for k in range(1, 30):
            term *= (2 * k - 1) * inv
            total += term
            if term < 1e-17:
                break
        out = total / (2 * y)
    else:
        y2 = y * y
        # e^{-y^2} sum_k y^{2k+1} / (k! (2k+1)), all terms positive.
        total, _, _ = _sum_until_small(
            y, lambda k, t: t * y2 * (2 * k - 1) / (k * (2 * k + 1)), y, ctrl
        )
        out = N.exp(-y2) * total
    return out if x > 0 else -out


def laguerre(n: int, alpha, x):
    """Generalized Laguerre polynomial L_n^{(alpha)}(x) by its explicit finite sum."""
    if n < 0 or n != int(n):
        raise DomainError(f"laguerre degree must be a nonnegative integer, got {n}")
    n = int(n)
    # sum_m (m+alpha+1)_{n-m} (-x)^m / (m! (n-m)!)
    total = N.num(0, x) if isinstance(x, float) or N.is_mp(x) else 0.0
    for m in range(n + 1):
        coef = pochhammer(m + alpha + 1, n - m) / (math.factorial(m) * math.factorial(n - m))
        total += coef * (-x) ** m
    return total
