"""The Whittaker function M_{kappa,mu}(x): series route, reflection and reductions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import _num as N
from . import families
from ._registry import op
from .errors import BranchError, DomainError, PoleError
from .hypergeom import _pfq_raw, hyp, laguerre_general
from .kernels import (
    KernelValue,
    SeriesCtrl,
    bessel_i,
    dawson,
    gamma,
    is_nonpos_int,
    laguerre,
    pochhammer,
)

_MOD = "whittaker-core"
SNAP_TOL = 1e-12


def snap(v, max_den: int = 12, tol: float = SNAP_TOL):
    """Return the Fraction within ``tol`` of ``v`` with denominator <= max_den, else None."""
    f = Fraction(float(v)).limit_denominator(max_den)
    return f if abs(float(f) - float(v)) <= tol else None


def _terminates_before_pole(a, b) -> bool:
    """True if 1F1(a; b; x) is a polynomial that stops before the (b)_n zero."""
    return is_nonpos_int(a) and is_nonpos_int(b) and -a <= -b


@dataclass(frozen=True)
class WhittakerParams:
    """Parameters of M_{kappa,mu}(x)."""

    kappa: float
    mu: float
    x: float

    def __post_init__(self):
        for name in ("kappa", "mu", "x"):
            v = getattr(self, name)
            if not math.isfinite(float(v)):
                raise DomainError(f"{name} must be finite, got {v}")
        if is_nonpos_int(2 * self.mu + 1) and not _terminates_before_pole(self.a, self.b):
            raise PoleError(
                f"2*mu must not be a negative integer (2mu != -1, -2, ...), got mu={self.mu}"
            )

    @property
    def a(self):
        return 0.5 + self.mu - self.kappa

    @property
    def b(self):
        return 1 + 2 * self.mu

    @property
    def integral_ok(self) -> bool:
        """The Beta-integral representation needs mu +- kappa + 1/2 > 0."""
        return self.mu - self.kappa + 0.5 > 0 and self.mu + self.kappa + 0.5 > 0


@dataclass(frozen=True)
class ClosedForm:
    """Catalog entry: exact (kappa, mu) pattern, evaluator of x, and citation tag."""

    kappa: Fraction
    mu: Fraction
    evaluator: Callable[[float], float]
    citation: str
    x_domain: str = "x > 0"

    def matches(self, kappa, mu) -> bool:
        return abs(float(kappa) - self.kappa) <= SNAP_TOL and abs(float(mu) - self.mu) <= SNAP_TOL


def _power(x, p):
    """x**p for x > 0, or for x < 0 when p is an integer."""
    if x > 0:
        return x**p
    if x == 0:
        if p > 0:
            return N.num(0, x)
        if p == 0:
            return N.num(1, x)
        raise DomainError(f"x^{p} is singular at x = 0")
    pi = round(float(p))
    if abs(float(p) - pi) > SNAP_TOL:
        raise BranchError(f"x^{p} is not real for x < 0 (mu + 1/2 must be an integer)")
    return x**pi


@op("m_series", _MOD)
def m_series(p: WhittakerParams, ctrl: SeriesCtrl | None = None) -> KernelValue:
    """M_{kappa,mu}(x) = x^{mu+1/2} e^{-x/2} 1F1(1/2+mu-kappa; 1+2mu; x)."""
    ctrl = ctrl or SeriesCtrl()
    x = float(p.x)
    pref = _power(x, p.mu + 0.5) * math.exp(-x / 2)
    if pref == 0:
        return KernelValue(0.0, 0.0, 0)
    value, err, n = _pfq_raw((p.a,), (p.b,), x, ctrl)
    return KernelValue(pref * value, abs(pref) * err, n)


@op("m_reflect", _MOD)
def m_reflect(p: WhittakerParams, ctrl: SeriesCtrl | None = None) -> KernelValue:
    """M_{kappa,mu}(x) through M_{kappa,mu}(x) = (-1)^{-sign(x)(mu+1/2)} M_{-kappa,mu}(-x).

    For x > 0 the phase and the power of -x combine into x^{mu+1/2}; for x < 0
    the phase is real only when mu + 1/2 is an integer.
    """
    ctrl = ctrl or SeriesCtrl()
    if snap(2 * p.mu, 1) is None:
        raise BranchError(f"reflection phase is not real: 2*mu must be an integer, got mu={p.mu}")
    if is_nonpos_int(p.b):
        raise PoleError("reflection does not hold when 1 + 2mu is a nonpositive integer")
    x = float(p.x)
    a = 0.5 + p.mu + p.kappa
    if x >= 0:
        pref = _power(x, p.mu + 0.5) * math.exp(x / 2)
        value, err, n = _pfq_raw((a,), (p.b,), -x, ctrl)
        return KernelValue(pref * value, abs(pref) * err, n)
    q = snap(p.mu + 0.5, 1)
    if q is None:
        raise BranchError("for x < 0 the reflected value is real only when mu + 1/2 is an integer")
    inner = m_series(WhittakerParams(-p.kappa, p.mu, -x), ctrl)
    sign = -1 if int(q) % 2 else 1
    return KernelValue(sign * inner.value, inner.abs_err_est, inner.terms_used)


# ----------------------------------------------------------------------------
# Reduction families
# ----------------------------------------------------------------------------


@N.extended("x")
def m_bessel(mu, x):
    """M_{0,mu}(x) = 4^mu Gamma(1+mu) sqrt(x) I_mu(x/2), x > 0."""
    mu = N.num(mu, x)
    return 4**mu * gamma(1 + mu) * N.sqrt(x) * bessel_i(mu, x / 2)


@N.extended("x")
def m_laguerre(kappa0, n: int, x):
    """M_{kappa0+n, kappa0-1/2}(x) = n! e^{-x/2} x^{kappa0} L_n^{(2kappa0-1)}(x) / (2kappa0)_n."""
    k0 = N.num(kappa0, x)
    return math.factorial(n) * N.exp(-x / 2) * x**k0 * laguerre(n, 2 * k0 - 1, x) / pochhammer(2 * k0, n)


@N.extended("x")
def m_laguerre_negated(kappa0, n: int, x):
    """M_{-kappa0-n, kappa0-1/2}(x) = n! e^{x/2} x^{kappa0} L_n^{(2kappa0-1)}(-x) / (2kappa0)_n, x > 0."""
    k0 = N.num(kappa0, x)
    return math.factorial(n) * N.exp(x / 2) * x**k0 * laguerre(n, 2 * k0 - 1, -x) / pochhammer(2 * k0, n)


def _i(nu, x):
    return bessel_i(nu, x / 2)


def _third(k, x):
    return N.num(k, x) / 3


_T5_ROWS = [
    ((-1, 4), (1, 4), lambda x: N.exp(x / 2) * x ** N.num(0.25, x) * N.sqrt(x) * hyp((0.5,), (1.5,), -x)),
    ((-1, 2), (1, 2), lambda x: x * (_i(0, x) + _i(1, x))),
    ((-1, 2), (1, 6), lambda x: 2 ** (-2 * _third(1, x)) * x * gamma(2 * _third(1, x))
     * (_i(-_third(1, x), x) + _i(2 * _third(1, x), x))),
    ((-1, 2), (1, 1), lambda x: (2 * N.exp(x) * (x - 1) + 2) * N.exp(-x / 2) / N.sqrt(x)),
    ((0, 1), (0, 1), lambda x: N.sqrt(x) * _i(0, x)),
    ((0, 1), (1, 2), lambda x: 2 * N.sinh(x / 2)),
    ((0, 1), (1, 1), lambda x: 4 * N.sqrt(x) * _i(1, x)),
    ((0, 1), (3, 2), lambda x: 12 * (N.cosh(x / 2) - 2 / x * N.sinh(x / 2))),
    ((0, 1), (5, 2), lambda x: 120 / (x * x) * ((x * x + 12) * N.sinh(x / 2) - 6 * x * N.cosh(x / 2))),
    ((1, 6), (0, 1), lambda x: N.sqrt(x) * N.exp(-x / 2) * laguerre_general(-_third(1, x), x)),
    ((1, 4), (-1, 4), lambda x: x ** N.num(0.25, x) * N.exp(-x / 2)),
    ((1, 4), (1, 4), lambda x: x ** N.num(0.25, x) * N.exp(x / 2) * dawson(N.sqrt(x))),
    ((1, 3), (0, 1), lambda x: N.sqrt(x) * N.exp(-x / 2) * laguerre_general(-_third(1, x) / 2, x)),
    ((1, 2), (1, 6), lambda x: 2 ** (-2 * _third(1, x)) * x * gamma(2 * _third(1, x))
     * (_i(-_third(1, x), x) - _i(2 * _third(1, x), x))),
    ((1, 2), (1, 4), lambda x: x * gamma(N.num(0.75, x)) / N.sqrt(N.num(2, x))
     * (_i(N.num(-0.25, x), x) - _i(N.num(0.75, x), x))),
    ((1, 2), (1, 2), lambda x: x * (_i(0, x) - _i(1, x))),
    ((1, 2), (1, 1), lambda x: 2 * N.exp(-x / 2) * (N.exp(x) - x - 1) / N.sqrt(x)),
    ((1, 2), (2, 1), lambda x: 12 * N.exp(-x / 2) * (2 * N.exp(x) * (x - 3) + x * x + 4 * x + 6)
     / (x * N.sqrt(x))),
    ((1, 1), (-3, 2), lambda x: N.exp(-x / 2) * (x / 2 + 1 + 1 / x)),
    ((1, 1), (1, 1), lambda x: 4 * N.sqrt(x) / 3 * (x * _i(0, x) - (x + 1) * _i(1, x))),
    ((1, 1), (3, 2), lambda x: N.exp(-x / 2) * (6 * N.exp(x) - 3 * x * x - 6 * x - 6) / x),
    ((1, 1), (2, 1), lambda x: N.num(32, x) / 5 / N.sqrt(x)
     * ((x * x + 4 * x + 12) * _i(1, x) - (x * x + 3 * x) * _i(0, x))),
    ((2, 1), (2, 1), lambda x: N.num(32, x) / 35 / N.sqrt(x)
     * (x * (2 * x * x + 2 * x + 3) * _i(0, x) - 2 * (x**3 + 2 * x * x + 4 * x + 6) * _i(1, x))),
]


def _wrap_row(fn):
    @N.extended("x")
    def evaluate(x):
        return fn(x)

    return evaluate


TABLE5: tuple[ClosedForm, ...] = tuple(
    ClosedForm(
        Fraction(*k),
        Fraction(*m),
        _wrap_row(fn),
        f"M:T5({Fraction(*k)},{Fraction(*m)})",
    )
    for k, m, fn in _T5_ROWS
)


def table5_row(kappa, mu) -> ClosedForm | None:
    for row in TABLE5:
        if row.matches(kappa, mu):
            return row
    return None


def match_family(kappa, mu):
    """Classify (kappa, mu) into a reduction family.

    Returns ``(family, data)`` with family one of "table5", "ml", "laguerre",
    "laguerre-negated", "bessel", or ``None``.
    """
    row = table5_row(kappa, mu)
    if row is not None:
        return "table5", row
    ml = families.ml_from_kappa_mu(kappa, mu)
    if ml is not None:
        return "ml", ml
    k0 = float(mu) + 0.5
    if k0 > 0:
        n = float(kappa) - k0
        if abs(n - round(n)) <= SNAP_TOL and round(n) >= 0:
            return "laguerre", (k0, int(round(n)))
        n = -float(kappa) - k0
        if abs(n - round(n)) <= SNAP_TOL and round(n) >= 0:
            return "laguerre-negated", (k0, int(round(n)))
    if abs(float(kappa)) <= SNAP_TOL and not is_nonpos_int(2 * float(mu) + 1):
        return "bessel", float(mu)
    return None


@op("m_reduced", _MOD)
def m_reduced(p: WhittakerParams):
    """Closed-form M_{kappa,mu}(x) from the reduction catalog.

    Returns ``(KernelValue, citation)`` or None when no pattern matches or
    x lies outside the pattern's domain (x > 0 for every family).
    """
    if p.x <= 0:
        return None
    hit = match_family(p.kappa, p.mu)
    if hit is None:
        return None
    family, data = hit
    x = float(p.x)
    if family == "table5":
        value, cite = data.evaluator(x), data.citation
    elif family == "ml":
        value, cite = families.m_ml(data[0], data[1], x), "M:(l,m)-family"
    elif family == "laguerre":
        value, cite = m_laguerre(data[0], data[1], x), "M:laguerre"
    elif family == "laguerre-negated":
        value, cite = m_laguerre_negated(data[0], data[1], x), "M:laguerre-negated"
    else:
        value, cite = m_bessel(data, x), "M:bessel"
    return KernelValue(value, 1e-15 * abs(value)), cite
