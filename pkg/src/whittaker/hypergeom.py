"""Generalized hypergeometric series and the parameter derivatives G1, H1 of 1F1."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _num as N
from ._registry import op
from .errors import ConvergenceError, DomainError, PoleError
from .kernels import (
    KernelValue,
    SeriesCtrl,
    bessel_i,
    digamma,
    expint_ei,
    gamma,
    harmonic,
    is_nonpos_int,
    laguerre,
)

_MOD = "hypergeom"


@dataclass(frozen=True)
class PFQArgs:
    """Parameters of pFq(upper; lower; x)."""

    upper: tuple
    lower: tuple
    x: float

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        p, q = len(self.upper), len(self.lower)
        if p > q + 1:
            raise DomainError(f"{p}F{q} diverges for every x != 0 (need p <= q+1)")
        if p == q + 1 and abs(self.x) >= 1:
            raise DomainError(f"{p}F{q} requires |x| < 1, got x={self.x}")
        stop = self.terminating_degree
        for b in self.lower:
            if is_nonpos_int(b) and (stop is None or stop > -int(b)):
                raise PoleError(f"lower parameter {b} is a nonpositive integer")

    @property
    def terminating_degree(self):
        """Polynomial degree if some upper parameter is a nonpositive integer."""
        degs = [-int(a) for a in self.upper if is_nonpos_int(a)]
        return min(degs) if degs else None


@dataclass(frozen=True)
class GH1Args:
    """Arguments of G1(a;b;x) and H1(a;b;x)."""

    a: float
    b: float
    x: float

    def __post_init__(self):
        if is_nonpos_int(self.b):
            raise PoleError(f"b = {self.b} is a nonpositive integer")


def _series(coef_step, x, ctrl: SeriesCtrl, weight_step=None, degree=None):
    """Sum c_n w_n with c_{n+1} = c_n * coef_step(n) and w_{n+1} = weight_step(n, w_n).

    Returns ``(sum, abs_err_est, terms)``. Without ``weight_step`` all w_n are 1.
    """
    tol = ctrl.tol(x)
    c = N.num(1, x)
    w = N.num(0, c) if weight_step else N.num(1, c)
    total = c * w
    biggest = abs(total)
    small = 0
    n = 0
    last = total
    while True:
        if degree is not None and n >= degree:
            break
        ratio = coef_step(n)
        c = c * ratio
        if weight_step:
            w = weight_step(n, w)
        n += 1
        if n > ctrl.max_terms:
            raise ConvergenceError(f"series did not converge within {ctrl.max_terms} terms")
        last = c * w
        total += last
        biggest = max(biggest, abs(last))
        if degree is None and abs(last) <= tol * abs(total) and abs(ratio) < 1:
            small += 1
            if small >= 3 and n >= ctrl.min_terms:
                break
        else:
            small = 0
    err = 10 * abs(last) + N.eps(x) * biggest * math.sqrt(n + 1)
    return total, err, n


def _pfq_raw(upper, lower, x, ctrl):
    def step(n):
        r = x / (n + 1)
        for a in upper:
            r *= a + n
        for b in lower:
            r /= b + n
        return r

    degs = [-int(a) for a in upper if is_nonpos_int(a)]
    return _series(step, x, ctrl, degree=min(degs) if degs else None)


@op("pfq", _MOD)
def pfq(args: PFQArgs, ctrl: SeriesCtrl | None = None) -> KernelValue:
    """Evaluate pFq(a_1..a_p; b_1..b_q; x) by its power series."""
    ctrl = ctrl or SeriesCtrl()
    value, err, n = _pfq_raw(args.upper, args.lower, args.x, ctrl)
    return KernelValue(value, err, n)


def hyp(upper, lower, x, ctrl: SeriesCtrl | None = None):
    """Shorthand returning only the value of pFq; precision follows ``x``."""
    args = PFQArgs(upper, lower, x)
    return _pfq_raw(args.upper, args.lower, x, ctrl or SeriesCtrl())[0]


@op("pfq_nth_derivative", _MOD)
def pfq_nth_derivative(args: PFQArgs, n: int):
    """Return ``(shifted_args, prefactor)`` with d^n/dx^n pFq = prefactor * pFq(shifted)."""
    if n < 0 or n != int(n):
        raise DomainError(f"derivative order must be a nonnegative integer, got {n}")
    pref = Fraction(1)
    for a in args.upper:
        for k in range(n):
            pref *= Fraction(a + k) if isinstance(a, int) else a + k
    for b in args.lower:
        for k in range(n):
            pref /= Fraction(b + k) if isinstance(b, int) else b + k
    shifted = PFQArgs(tuple(a + n for a in args.upper), tuple(b + n for b in args.lower), args.x)
    return shifted, (float(pref) if isinstance(pref, Fraction) else pref)


def _gh1_series(a, b, x, ctrl, shift):
    """sum (a)_n/(b)_n x^n/n! * sum_{j<n} 1/(shift+j)."""

    def coef(n):
        return (a + n) * x / ((b + n) * (n + 1))

    def weight(n, w):
        return w + 1 / (shift + n)

    degree = -int(a) if is_nonpos_int(a) else None
    return _series(coef, x, ctrl, weight_step=weight, degree=degree)


@op("g1", _MOD)
def g1(a, b, x, ctrl: SeriesCtrl | None = None) -> KernelValue:
    """G1(a;b;x) = d/da 1F1(a;b;x) from the digamma-weighted series."""
    GH1Args(a, b, x)
    if is_nonpos_int(a):
        raise PoleError(f"g1 series has a digamma pole at a = {a}; use g1_reduced")
    value, err, n = _gh1_series(a, b, x, ctrl or SeriesCtrl(), a)
    return KernelValue(value, err, n)


def g1_pole_limit(n: int, b, x, ctrl: SeriesCtrl | None = None) -> KernelValue:
    """G1(-n; b; x), the a-derivative of 1F1 at a nonpositive integer a = -n.

    Terms k <= n carry the finite digamma difference; for k > n the vanishing
    factor (a+n) cancels and leaves (-1)^n n! (k-n-1)! x^k/((b)_k k!).
    """
    ctrl = ctrl or SeriesCtrl()
    GH1Args(-n, b, x)
    head, term, w = 0.0, 1.0, 0.0
    for k in range(1, n + 1):
        term *= (k - 1 - n) * x / ((b + k - 1) * k)
        w += 1 / (k - 1 - n)
        head += term * w
    first = (-1) ** n * math.factorial(n) * x ** (n + 1)
    for k in range(n + 1):
        first /= (b + k) * (k + 1)
    tail, err, used = _series(lambda j: (j + 1) * x / ((b + n + 1 + j) * (n + 2 + j)), x, ctrl)
    value = head + first * tail
    return KernelValue(value, abs(first) * err + N.eps() * abs(head) * (n + 1), n + used)


@op("h1", _MOD)
def h1(a, b, x, ctrl: SeriesCtrl | None = None) -> KernelValue:
    """H1(a;b;x) = d/db 1F1(a;b;x) from the digamma-weighted series."""
    GH1Args(a, b, x)
    value, err, n = _gh1_series(a, b, x, ctrl or SeriesCtrl(), b)
    return KernelValue(-value, err, n)


@op("g1_kummer", _MOD)
def g1_kummer(a, b, x, ctrl: SeriesCtrl | None = None) -> KernelValue:
    """G1(a;b;x) through the Kummer transformation -e^x G1(b-a; b; -x)."""
    if is_nonpos_int(b - a):
        raise PoleError(f"Kummer route needs b - a not a nonpositive integer, got {b - a}")
    inner = g1(b - a, b, -x, ctrl)
    scale = N.exp(x)
    return KernelValue(-scale * inner.value, scale * inner.abs_err_est, inner.terms_used)


def s_finite_exact(n: int, ell: int) -> Fraction:
    """S(n, l) = sum_{k=0}^{n-l-1} (l)_k 2^k / (l+n)_k as an exact rational."""
    if not (isinstance(n, int) and isinstance(ell, int)) or not 1 <= ell < n:
        raise DomainError(f"s_finite needs integers 1 <= l < n, got n={n}, l={ell}")
    total = Fraction(0)
    term = Fraction(1)
    for k in range(n - ell):
        total += term
        term *= Fraction(2 * (ell + k), ell + n + k)
    return total


@op("s_finite", _MOD)
def s_finite(n: int, ell: int) -> float:
    """S(n, l) rounded once from its exact rational value."""
    return float(s_finite_exact(n, ell))


# ----------------------------------------------------------------------------
# Closed-form catalog for G1 and H1
# ----------------------------------------------------------------------------


@N.extended("a", "x")
def g1_a_eq_b(a, x):
    """G1(a;a;x) = (x e^x / a) 2F2(1,1; a+1,2; -x)."""
    return x * N.exp(x) / a * hyp((1, 1), (a + 1, 2), -x)


@N.extended("b", "x")
def h1_one_b(b, x):
    """H1(1;b;x) = -(x e^x / b^2) 2F2(b,b; b+1,b+1; -x)."""
    return -x * N.exp(x) / (b * b) * hyp((b, b), (b + 1, b + 1), -x)


def nhalf_bracket(n: int, x):
    """Bracket shared by dM/dkappa at (n, 1/2) and G1(1-n; 2; x), x > 0."""
    one = N.num(1, x)
    out = (N.log(x) + N.euler(x) - harmonic(N.num(n, x)) - expint_ei(x)) * laguerre(n - 1, 1, x)
    ex = N.exp(x)
    for ell in range(1, n):
        s = s_finite_exact(n, ell)
        s_val = N.num(s.numerator, x) / N.num(s.denominator, x)
        coef = one * (n + ell) / (n - ell) - ex * s_val
        out += coef * laguerre(ell - 1, 1, x) / ell
    return out


@N.extended("x")
def g1_one_minus_n(n: int, x):
    """G1(1-n; 2; x) for integer n >= 1 and x > 0."""
    if n < 1 or x <= 0:
        raise DomainError("G1(1-n;2;x) closed form needs n >= 1 and x > 0")
    return ((1 - N.exp(x)) / x - nhalf_bracket(n, x)) / n


def _snap_int(v, tol=1e-12):
    r = round(float(v))
    return r if abs(float(v) - r) <= tol else None


def ml_from_ab(a, b):
    """(l, m) with a = m+1-l, b = 2(m+1)-l and m >= max(l, 0), else None."""
    ai, bi = _snap_int(a), _snap_int(b)
    if ai is None or bi is None:
        return None
    m = bi - ai - 1
    ell = bi - 2 * ai
    if m < 0 or m < ell:
        return None
    return ell, m


@op("g1_reduced", _MOD)
def g1_reduced(a, b, x):
    """Closed-form G1(a;b;x) when (a, b) matches a catalog pattern, else None.

    Returns ``(KernelValue, citation)``.
    """
    from . import families

    x = float(x)
    if abs(a - b) <= 1e-12 and not is_nonpos_int(a):
        return KernelValue(g1_a_eq_b(float(a), x), 1e-15), "g1:a=b"
    ml = ml_from_ab(a, b)
    if ml is not None:
        return KernelValue(families.g1_ml(ml[0], ml[1], x), 1e-15), "g1:(l,m)-family"
    ai = _snap_int(a)
    if ai is not None and ai <= 0 and _snap_int(b) == 2 and x > 0:
        return KernelValue(g1_one_minus_n(1 - ai, x), 1e-15), "g1:(1-n;2)"
    return None


@op("h1_reduced", _MOD)
def h1_reduced(a, b, x):
    """Closed-form H1(a;b;x) when (a, b) matches a catalog pattern, else None."""
    from . import families

    x = float(x)
    if abs(a - b) <= 1e-12 and not is_nonpos_int(a):
        return KernelValue(-g1_a_eq_b(float(a), x), 1e-15), "h1:a=b"
    if abs(a - 1) <= 1e-12 and not is_nonpos_int(b):
        return KernelValue(h1_one_b(float(b), x), 1e-15), "h1:a=1"
    ml = ml_from_ab(a, b)
    if ml is not None:
        return KernelValue(families.h1_ml(ml[0], ml[1], x), 1e-15), "h1:(l,m)-family"
    return None


def laguerre_general(nu, x, ctrl: SeriesCtrl | None = None):
    """L_nu(x) = 1F1(-nu; 1; x) for real degree nu."""
    return hyp((-nu,), (1,), x, ctrl)


def dbessel_i_dnu_hyper(nu, x):
    """dI_nu(x)/dnu from its 3F4/2F3 representation; nu not an integer."""
    if nu == int(nu):
        raise DomainError("hypergeometric order-derivative form excludes integer orders")
    pi = N.pi(x)
    x2 = x * x
    lead = x2 / (4 * (1 - nu * nu)) * hyp((1, 1, 1.5), (2, 2, 2 - nu, 2 + nu), x2)
    bracket = lead + N.log(x / 2) - digamma(nu) - 1 / (2 * nu)
    tail = (
        bessel_i(-nu, x) * pi / N.sin(pi * nu) / (2 * gamma(nu + 1) ** 2)
        * (x / 2) ** (2 * nu) * hyp((nu, nu + 0.5), (nu + 1, nu + 1, 2 * nu + 1), x2)
    )
    return bessel_i(nu, x) * bracket - tail
