"""Finite logarithmic Beta-type integrals I1..I4, J1..J4 and the infinite Bessel-kernel integrals."""

from __future__ import annotations

import math
import warnings

from . import _num as N
from . import families
from ._registry import op
from .errors import DivergenceError, DomainError, PoleError
from .hypergeom import g1, h1, hyp
from .kernels import (
    KernelValue,
    beta,
    bessel_i,
    dbessel_i_dnu,
    digamma,
    gamma,
    rgamma,
)
from .quadrature import QuadCtrl, quad_de, quad_infinite
from .whittaker import SNAP_TOL, WhittakerParams, m_series

_MOD = "log-integrals"
I_ROUTES = ("quad", "closed", "relation")
H_ROUTES = ("auto", "relation", "closed", "quad")
J_KERNEL_WARN_X = 10.0


def _check_id(idx, top):
    if idx not in range(1, top + 1):
        raise DomainError(f"integral id must be in 1..{top}, got {idx}")


def _check_route(route, allowed):
    if route not in allowed:
        raise DomainError(f"route must be one of {allowed}, got {route!r}")


def _exponents(kappa, mu):
    """Endpoint exponents p = mu - kappa - 1/2 and q = mu + kappa - 1/2."""
    p, q = mu - kappa - 0.5, mu + kappa - 0.5
    if p <= -1 or q <= -1:
        raise DivergenceError(
            f"integral diverges: needs mu +- kappa + 1/2 > 0, got kappa={kappa}, mu={mu}"
        )
    return p, q


def _integrand(kind, idx, kappa, mu, x):
    """Integrand f(t, da, db) of the requested integral on (0,1) or (-1,1)."""
    p, q = _exponents(kappa, mu)
    finite_unit = idx in (1, 2)
    if idx in (2, 4):
        p, q, sx = q, p, -1.0
    else:
        sx = 1.0
    scale = x if finite_unit else x / 2

    def f(t, da, db):
        la, lb = math.log(da), math.log(db)
        body = math.exp(sx * scale * t + p * la + q * lb)
        if kind == "I":
            # I1, I3: ln(db/da); I2, I4: ln(da/db) with swapped exponents.
            lg = (lb - la) if idx in (1, 3) else (la - lb)
        else:
            lg = la + lb
        return body * lg

    return f, (0.0, 1.0) if finite_unit else (-1.0, 1.0)


def _quad(kind, idx, kappa, mu, x, ctrl):
    f, (a, b) = _integrand(kind, idx, kappa, mu, float(x))
    return quad_de(f, a, b, ctrl, gaps=True)


# ----------------------------------------------------------------------------
# I integrals
# ----------------------------------------------------------------------------


@N.extended("kappa", "mu", "x")
def i1_general(kappa, mu, x):
    """B{[psi(1/2+mu+kappa) - psi(1/2+mu-kappa)] 1F1(a;b;x) - G1(a;b;x)}, a = 1/2+mu-kappa."""
    a, b = 0.5 + mu - kappa, 1 + 2 * mu
    bb = beta(mu + kappa + 0.5, mu - kappa + 0.5)
    w = digamma(0.5 + mu + kappa) - digamma(a)
    return bb * (w * hyp((a,), (b,), x) - g1(a, b, x).value)


@op("i1_closed", _MOD)
def i1_closed(kappa, mu, x):
    """Closed-form I1 as ``(KernelValue, citation)``, or None when no form applies."""
    _exponents(kappa, mu)
    ml = families.ml_from_kappa_mu(kappa, mu)
    if ml is not None:
        v = families.i1_ml(ml[0], ml[1], x)
        return KernelValue(v, 1e-15 * abs(v) + 1e-300), "I1:(l,m)-family"
    v = i1_general(kappa, mu, x)
    tag = "I1:kappa=0" if abs(float(kappa)) <= SNAP_TOL else "I1:general"
    return KernelValue(v, 1e-14 * abs(v) + 1e-300), tag


def _i1_value(kappa, mu, x, ctrl):
    hit = i1_closed(kappa, mu, x)
    if hit is not None:
        return hit
    return _quad("I", 1, kappa, mu, x, ctrl), "I1:quad"


@op("i_integral", _MOD)
def i_integral(idx: int, kappa, mu, x, route: str | None = None, ctrl: QuadCtrl | None = None) -> KernelValue:
    """I_idx(kappa, mu; x) for idx in 1..4.

    ``route`` defaults to ``closed`` for I1 and ``relation`` for I2..I4. The
    relation route expresses I2 = e^{-x} I1 and I3 = I4 = 4^mu e^{-x/2} I1.
    """
    _check_id(idx, 4)
    route = route or ("closed" if idx == 1 else "relation")
    _check_route(route, I_ROUTES)
    _exponents(kappa, mu)
    ctrl = ctrl or QuadCtrl()
    x = float(x)
    if route == "quad":
        return _quad("I", idx, kappa, mu, x, ctrl)
    base, _ = _i1_value(kappa, mu, x, ctrl)
    if idx == 1:
        return base
    factor = math.exp(-x) if idx == 2 else 4.0**mu * math.exp(-x / 2)
    return KernelValue(factor * base.value, abs(factor) * base.abs_err_est, base.terms_used)


# ----------------------------------------------------------------------------
# J integrals
# ----------------------------------------------------------------------------


@N.extended("kappa", "mu", "x")
def j1_general(kappa, mu, x):
    """B{[psi(1/2+mu+kappa) + psi(1/2+mu-kappa) - 2 psi(2mu+1)] 1F1 + G1 + 2 H1}."""
    a, b = 0.5 + mu - kappa, 1 + 2 * mu
    bb = beta(mu + kappa + 0.5, mu - kappa + 0.5)
    w = digamma(0.5 + mu + kappa) + digamma(a) - 2 * digamma(b)
    return bb * (w * hyp((a,), (b,), x) + g1(a, b, x).value + 2 * h1(a, b, x).value)


@N.extended("mu", "x")
def j1_kappa0(mu, x):
    """J1(0, mu; x) through I_mu and its order derivative, mu >= 0, x != 0."""
    ax = abs(x)
    h = ax / 2
    bb = beta(mu + 0.5, mu + 0.5)
    inner = bessel_i(mu, h) * (digamma(mu + 0.5) - N.log(ax)) + dbessel_i_dnu(mu, h)
    return bb * (4 / ax) ** mu * N.exp(x / 2) * gamma(1 + mu) * inner


@op("j1_closed", _MOD)
def j1_closed(kappa, mu, x):
    """Closed-form J1 as ``(KernelValue, citation)``, or None when no form applies."""
    _exponents(kappa, mu)
    ml = families.ml_from_kappa_mu(kappa, mu)
    if ml is not None:
        v = families.j1_ml(ml[0], ml[1], x)
        return KernelValue(v, 1e-15 * abs(v) + 1e-300), "J1:(l,m)-family"
    if abs(float(kappa)) <= SNAP_TOL and mu >= 0 and x != 0:
        v = j1_kappa0(mu, x)
        return KernelValue(v, 1e-13 * abs(v)), "J1:kappa=0"
    v = j1_general(kappa, mu, x)
    return KernelValue(v, 1e-14 * abs(v) + 1e-300), "J1:general"


@op("j3_closed", _MOD)
@N.extended("mu", "x")
def j3_closed(mu, x):
    """J3(0, mu; x), even in x; needs mu >= 0 and x != 0."""
    if mu < 0:
        raise DomainError(f"j3_closed needs mu >= 0, got {mu}")
    if x == 0:
        raise DomainError("j3_closed needs x != 0")
    ax = abs(x)
    h = ax / 2
    bb = beta(mu + 0.5, mu + 0.5)
    inner = bessel_i(mu, h) * (digamma(mu + 0.5) + N.log(4 / ax)) + dbessel_i_dnu(mu, h)
    return bb * gamma(1 + mu) * (16 / ax) ** mu * inner


@op("j_integral", _MOD)
def j_integral(idx: int, kappa, mu, x, route: str | None = None, ctrl: QuadCtrl | None = None) -> KernelValue:
    """J_idx(kappa, mu; x) for idx in 1..4.

    The relation route uses J2 = e^{-x} J1, J4 = J3 and
    J3 = 4^mu [e^{-x/2} J1 + ln4 x^{-mu-1/2} B(mu+kappa+1/2, mu-kappa+1/2) M_{kappa,mu}(x)].
    """
    _check_id(idx, 4)
    route = route or ("closed" if idx == 1 else "relation")
    _check_route(route, I_ROUTES)
    _exponents(kappa, mu)
    ctrl = ctrl or QuadCtrl()
    x = float(x)
    if route == "quad":
        return _quad("J", idx, kappa, mu, x, ctrl)
    hit = j1_closed(kappa, mu, x)
    base = hit[0] if hit is not None else _quad("J", 1, kappa, mu, x, ctrl)
    if idx == 1:
        return base
    if idx == 2:
        f = math.exp(-x)
        return KernelValue(f * base.value, f * base.abs_err_est, base.terms_used)
    if not x > 0:
        raise DomainError(f"J3/J4 relation needs x > 0, got {x}")
    m = m_series(WhittakerParams(kappa, mu, x))
    bb = beta(mu + kappa + 0.5, mu - kappa + 0.5)
    c = math.log(4) * bb / x ** (mu + 0.5)
    s = 4.0**mu
    value = s * (math.exp(-x / 2) * base.value + c * m.value)
    err = s * (math.exp(-x / 2) * base.abs_err_est + abs(c) * m.abs_err_est)
    return KernelValue(value, err, base.terms_used)


# ----------------------------------------------------------------------------
# Infinite Bessel-kernel integrals
# ----------------------------------------------------------------------------


def _h_exponent(idx, kappa):
    """Power of t multiplying the Bessel kernel in the H integrand."""
    return -kappa - 0.5 if idx == 1 else kappa - 0.5


def _bessel_reduced(nu, q, sign):
    """sum_k sign^k q^k/(k! Gamma(nu+k+1)), so I_nu(2 sqrt q) = q^{nu/2} times this (sign=+1)."""
    term = rgamma(nu + 1)
    total = term
    k = 0
    small = 0
    while True:
        k += 1
        term *= sign * q / (k * (nu + k))
        total += term
        if abs(term) <= 1e-17 * abs(total) and k > q ** 0.5:
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
        if k > 100000:
            raise DomainError("Bessel kernel series did not converge")


def _h_quad(idx, kappa, mu, x, ctrl):
    nu = 2 * mu
    if nu <= -1 and nu == int(nu):
        raise PoleError(f"2mu = {nu} is a negative integer")
    power = _h_exponent(idx, kappa) + mu
    if power <= -1:
        raise DivergenceError(f"integrand t^{power} ln t is not integrable at 0")
    sign = 1.0
    if idx == 2:
        sign = -1.0
    lx = mu * math.log(x)

    def f(t, da, db):
        if t <= 0:
            return 0.0
        lt = math.log(t)
        q = x * t
        return math.exp(-t + power * lt + lx) * _bessel_reduced(nu, q, sign) * lt

    p = _h_exponent(idx, kappa)

    def tail(big_t):
        # |kernel| <= 2 e^{2 sqrt(xt)} <= 2 e^{t/2} for t >= 16x, and |ln t| <= t.
        qq = max(p + 1, 0.0)
        if big_t <= 2 * qq:
            return math.inf
        return 4 * math.exp(-big_t / 2) * big_t**qq / (1 - 2 * qq / big_t)

    return quad_infinite(f, tail, 16 * x, ctrl, gaps=True)


def _h_relation(idx, kappa, mu, x, ctrl):
    p = WhittakerParams(kappa, mu, x)
    m = m_series(p).value
    i1, _ = _i1_value(kappa, mu, x, ctrl)
    gb = gamma(1 + 2 * mu)
    if idx == 1:
        lead = gamma(mu - kappa + 0.5) * digamma(mu + kappa + 0.5) * math.exp(x / 2) * m / (gb * math.sqrt(x))
        tail = -(x**mu) * i1.value * rgamma(mu + kappa + 0.5)
        terr = abs(x**mu * rgamma(mu + kappa + 0.5)) * i1.abs_err_est
    else:
        lead = gamma(mu + kappa + 0.5) * digamma(mu - kappa + 0.5) * math.exp(-x / 2) * m / (gb * math.sqrt(x))
        tail = math.exp(-x) * x**mu * i1.value * rgamma(mu - kappa + 0.5)
        terr = abs(math.exp(-x) * x**mu * rgamma(mu - kappa + 0.5)) * i1.abs_err_est
    value = lead + tail
    return KernelValue(value, terr + 1e-14 * (abs(lead) + abs(tail)))


def _h_closed(idx, kappa, mu, x):
    ml = families.ml_from_kappa_mu(kappa, mu)
    if ml is None:
        return None
    fn = families.hcal1_ml if idx == 1 else families.hcal2_ml
    v = fn(ml[0], ml[1], x)
    return KernelValue(v, 1e-14 * abs(v)), f"H{idx}:(l,m)-family"


@op("h_integral", _MOD)
def h_integral(idx: int, kappa, mu, x, route: str = "auto", ctrl: QuadCtrl | None = None) -> KernelValue:
    """Infinite integrals with e^{-t} and a Bessel kernel, x > 0.

    idx=1: int_0^inf e^{-t} t^{-kappa-1/2} I_{2mu}(2 sqrt(xt)) ln t dt;
    idx=2: int_0^inf e^{-t} t^{kappa-1/2} J_{2mu}(2 sqrt(xt)) ln t dt.
    Routes: ``relation`` combines I1 with M_{kappa,mu}(x); ``closed`` is the
    (l, m) family form; ``auto`` takes ``closed`` where it applies and
    ``relation`` otherwise; ``quad`` truncates with an analytic tail bound.
    """
    _check_id(idx, 2)
    _check_route(route, H_ROUTES)
    x = float(x)
    if not x > 0:
        raise DomainError(f"h_integral needs x > 0, got {x}")
    ctrl = ctrl or QuadCtrl()
    if route == "quad":
        if idx == 2 and x > J_KERNEL_WARN_X:
            warnings.warn(
                f"oscillatory J kernel at x={x} > {J_KERNEL_WARN_X}: series cancellation may cost accuracy",
                RuntimeWarning,
                stacklevel=2,
            )
        return _h_quad(idx, kappa, mu, x, ctrl)
    _exponents(kappa, mu)
    if route == "relation":
        return _h_relation(idx, kappa, mu, x, ctrl)
    hit = _h_closed(idx, kappa, mu, x)
    if hit is not None:
        return hit[0]
    if route == "closed":
        raise DomainError(f"no closed form for H{idx} at kappa={kappa}, mu={mu}")
    return _h_relation(idx, kappa, mu, x, ctrl)
