"""First parameter derivatives dM/dkappa and dM/dmu by series, closed forms and integrals."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _num as N
from . import families
from ._registry import op
from .errors import DomainError, PoleError, WhittakerError
from .hypergeom import g1_pole_limit, h1, hyp, nhalf_bracket
from .kernels import (
    EvalResult,
    KernelValue,
    SeriesCtrl,
    bessel_i,
    dbessel_i_dnu,
    digamma,
    gamma,
    gamma_ratio,
    is_nonpos_int,
)
from .whittaker import SNAP_TOL, WhittakerParams, m_series

_MOD = "whittaker-deriv"
ROUTES = ("series", "closed", "integral", "all")


@dataclass(frozen=True)
class S1S2Terms:
    """Values of the digamma-weighted series S1 and S2."""

    s1: float
    s2: float
    terms_used: int


@op("s1_s2", _MOD)
def s1_s2(p: WhittakerParams, ctrl: SeriesCtrl | None = None) -> S1S2Terms:
    """S1 = sum Gamma(a+n)/Gamma(b+n) psi(a+n) x^n/n!, S2 = 2 sum ... psi(b+n) ... ."""
    ctrl = ctrl or SeriesCtrl()
    a, b, x = p.a, p.b, float(p.x)
    if is_nonpos_int(a):
        raise PoleError(f"1/2 + mu - kappa = {a} is a digamma pole")
    if is_nonpos_int(b):
        raise PoleError(f"1 + 2mu = {b} is a Gamma pole")
    r = gamma_ratio(a, b)
    psi_a, psi_b = digamma(a), digamma(b)
    s1, s2 = r * psi_a, r * psi_b
    tol = ctrl.tol(x)
    small = 0
    n = 0
    while True:
        ratio = (a + n) * x / ((b + n) * (n + 1))
        r *= ratio
        psi_a += 1 / (a + n)
        psi_b += 1 / (b + n)
        n += 1
        if n > ctrl.max_terms:
            raise WhittakerError(f"S1/S2 series did not converge in {ctrl.max_terms} terms")
        t1, t2 = r * psi_a, r * psi_b
        s1 += t1
        s2 += t2
        if abs(t1) <= tol * abs(s1) and abs(t2) <= tol * abs(s2) and abs(ratio) < 1:
            small += 1
            if small >= 3 and n >= ctrl.min_terms:
                break
        else:
            small = 0
    return S1S2Terms(s1, 2 * s2, n)


def _require_positive_x(p: WhittakerParams):
    if not p.x > 0:
        raise DomainError(f"parameter derivatives are evaluated for x > 0, got x={p.x}")


def _pole_parts(p, ctrl):
    """Prefactor x^{mu+1/2} e^{-x/2} and G1 at the nonpositive integer a = 1/2 + mu - kappa."""
    g = g1_pole_limit(-round(p.a), p.b, p.x, ctrl)
    return p.x ** (p.mu + 0.5) * math.exp(-p.x / 2), g


def _series_dk(p, ctrl):
    if is_nonpos_int(p.a):
        pref, g = _pole_parts(p, ctrl)
        return KernelValue(-pref * g.value, pref * g.abs_err_est, g.terms_used)
    s = s1_s2(p, ctrl)
    m = m_series(p, ctrl)
    pref = p.x ** (p.mu + 0.5) * math.exp(-p.x / 2) / gamma_ratio(p.a, p.b)
    value = digamma(p.a) * m.value - pref * s.s1
    err = abs(digamma(p.a)) * m.abs_err_est + 64 * N.eps() * (abs(digamma(p.a) * m.value) + abs(pref * s.s1))
    return KernelValue(value, err, s.terms_used)


def _series_dm(p, ctrl):
    if is_nonpos_int(p.a):
        pref, g = _pole_parts(p, ctrl)
        hh = h1(p.a, p.b, p.x, ctrl)
        m = m_series(p, ctrl)
        value = math.log(p.x) * m.value + pref * (g.value + 2 * hh.value)
        err = abs(math.log(p.x)) * m.abs_err_est + pref * (g.abs_err_est + 2 * hh.abs_err_est)
        return KernelValue(value, err + 64 * N.eps() * abs(value), g.terms_used)
    s = s1_s2(p, ctrl)
    m = m_series(p, ctrl)
    pref = p.x ** (p.mu + 0.5) * math.exp(-p.x / 2) / gamma_ratio(p.a, p.b)
    w = math.log(p.x) + 2 * digamma(p.b) - digamma(p.a)
    value = w * m.value + pref * (s.s1 - s.s2)
    err = abs(w) * m.abs_err_est + 64 * N.eps() * (abs(w * m.value) + abs(pref) * (abs(s.s1) + abs(s.s2)))
    return KernelValue(value, err, s.terms_used)


def _integral_dk(p):
    from .logint import i_integral
    from .kernels import beta

    if not p.integral_ok:
        raise DomainError("integral route needs mu +- kappa + 1/2 > 0")
    i1 = i_integral(1, p.kappa, p.mu, p.x, route="quad")
    m = m_series(p)
    k, mu, x = p.kappa, p.mu, p.x
    b = beta(mu + k + 0.5, mu - k + 0.5)
    pref = x ** (mu + 0.5) * math.exp(-x / 2) / b
    value = (digamma(mu - k + 0.5) - digamma(mu + k + 0.5)) * m.value + pref * i1.value
    return KernelValue(value, abs(pref) * i1.abs_err_est + 1e-15 * abs(value))


def _integral_dm(p):
    from .logint import j_integral
    from .kernels import beta

    if not p.integral_ok:
        raise DomainError("integral route needs mu +- kappa + 1/2 > 0")
    j1 = j_integral(1, p.kappa, p.mu, p.x, route="quad")
    m = m_series(p)
    k, mu, x = p.kappa, p.mu, p.x
    b = beta(mu + k + 0.5, mu - k + 0.5)
    pref = x ** (mu + 0.5) * math.exp(-x / 2) / b
    w = math.log(x) - digamma(mu - k + 0.5) - digamma(mu + k + 0.5) + 2 * digamma(2 * mu + 1)
    value = w * m.value + pref * j1.value
    return KernelValue(value, abs(pref) * j1.abs_err_est + 1e-15 * abs(value))


def _dispatch(p, route, ctrl, series_fn, closed_fn, integral_fn, name):
    if route not in ROUTES:
        raise DomainError(f"route must be one of {ROUTES}, got {route!r}")
    _require_positive_x(p)
    if route == "series":
        kv = series_fn(p, ctrl)
        return EvalResult(kv.value, kv.abs_err_est, "series", (f"{name}:series",))
    if route == "closed":
        hit = closed_fn(p)
        if hit is None:
            raise DomainError(f"no closed form for {name} at kappa={p.kappa}, mu={p.mu}")
        kv, cite = hit
        return EvalResult(kv.value, kv.abs_err_est, "closed", (cite,))
    if route == "integral":
        kv = integral_fn(p)
        return EvalResult(kv.value, kv.abs_err_est, "integral", (f"{name}:integral",))
    values, cites, errors = {}, [], {}
    for tag, fn in (("series", lambda: series_fn(p, ctrl)), ("closed", lambda: closed_fn(p)),
                    ("integral", lambda: integral_fn(p))):
        try:
            out = fn()
        except WhittakerError as exc:
            errors[tag] = str(exc)
            continue
        if out is None:
            continue
        if isinstance(out, tuple):
            out, cite = out
            cites.append(cite)
        else:
            cites.append(f"{name}:{tag}")
        values[tag] = out
    if not values:
        raise DomainError(f"no admissible route for {name}: {errors}")
    chosen = "series" if "series" in values else next(iter(values))
    vals = [v.value for v in values.values()]
    spread = max(vals) - min(vals)
    diag = {"routes": {k: v.value for k, v in values.items()}, "max_discrepancy": spread,
            "rejected": errors}
    kv = values[chosen]
    return EvalResult(kv.value, kv.abs_err_est, chosen, tuple(cites), diag)


@op("dm_dkappa", _MOD)
def dm_dkappa(p: WhittakerParams, route: str = "series", ctrl: SeriesCtrl | None = None) -> EvalResult:
    """dM_{kappa,mu}(x)/dkappa; ``route`` is series, closed, integral or all."""
    return _dispatch(p, route, ctrl or SeriesCtrl(), _series_dk, dm_dkappa_closed, _integral_dk, "dMdk")


@op("dm_dmu", _MOD)
def dm_dmu(p: WhittakerParams, route: str = "series", ctrl: SeriesCtrl | None = None) -> EvalResult:
    """dM_{kappa,mu}(x)/dmu; ``route`` is series, closed, integral or all."""
    return _dispatch(p, route, ctrl or SeriesCtrl(), _series_dm, dm_dmu_closed, _integral_dm, "dMdmu")


# ----------------------------------------------------------------------------
# Closed forms
# ----------------------------------------------------------------------------


@N.extended("mu", "x")
def dkm_kappa_minus_mu_half(mu, x):
    """dM/dkappa at kappa = -mu - 1/2: -x^{mu+3/2} e^{x/2} 2F2(1,1; 2mu+2,2; -x)/(2mu+1)."""
    return -(x ** (mu + 1.5)) / (2 * mu + 1) * N.exp(x / 2) * hyp((1, 1), (2 * mu + 2, 2), -x)


@N.extended("x")
def dkm_nhalf(n: int, x):
    """dM/dkappa at kappa = n (integer >= 1), mu = 1/2, x > 0."""
    return 2 * N.sinh(x / 2) / n + x * N.exp(-x / 2) / n * nhalf_bracket(n, x)


@N.extended("mu", "x")
def dmm_kappa_minus_mu_half(mu, x):
    """dM/dmu at kappa = -mu - 1/2: x^{mu+1/2} e^{x/2} [ln x - x 2F2(1,1; 2mu+2,2; -x)/(1+2mu)]."""
    return x ** (mu + 0.5) * N.exp(x / 2) * (
        N.log(x) - x / (1 + 2 * mu) * hyp((1, 1), (2 * mu + 2, 2), -x)
    )


@N.extended("mu", "x")
def dmm_kappa0(mu, x):
    """dM/dmu at kappa = 0 from the Bessel form; mu > -1."""
    h = x / 2
    return 4**mu * N.sqrt(x) * gamma(1 + mu) * (
        bessel_i(mu, h) * (N.log(N.num(4, x)) + digamma(1 + mu)) + dbessel_i_dnu(mu, h)
    )


def _near(v, target):
    return abs(float(v) - target) <= SNAP_TOL


def _nhalf_n(kappa, mu):
    if not _near(mu, 0.5):
        return None
    n = round(float(kappa))
    return n if n >= 1 and _near(kappa, n) else None


@op("dm_dkappa_closed", _MOD)
def dm_dkappa_closed(p: WhittakerParams):
    """Closed-form dM/dkappa, as ``(KernelValue, citation)``, or None without a match."""
    if not p.x > 0:
        return None
    k, mu, x = p.kappa, p.mu, float(p.x)
    if _near(k, -mu - 0.5) and not is_nonpos_int(2 * mu + 1) and not is_nonpos_int(2 * mu + 2):
        v = dkm_kappa_minus_mu_half(mu, x)
        return KernelValue(v, 1e-15 * abs(v)), "dMdk:kappa=-mu-1/2"
    n = _nhalf_n(k, mu)
    if n is not None:
        v = dkm_nhalf(n, x)
        return KernelValue(v, 1e-15 * abs(v)), "dMdk:(n,1/2)"
    ml = families.ml_from_kappa_mu(k, mu)
    if ml is not None:
        v = families.dkm_ml(ml[0], ml[1], x)
        return KernelValue(v, 1e-15 * abs(v)), "dMdk:(l,m)-family"
    return None


@op("dm_dmu_closed", _MOD)
def dm_dmu_closed(p: WhittakerParams):
    """Closed-form dM/dmu, as ``(KernelValue, citation)``, or None without a match."""
    if not p.x > 0:
        return None
    k, mu, x = p.kappa, p.mu, float(p.x)
    if _near(k, -mu - 0.5) and not is_nonpos_int(2 * mu + 1) and not is_nonpos_int(2 * mu + 2):
        v = dmm_kappa_minus_mu_half(mu, x)
        return KernelValue(v, 1e-15 * abs(v)), "dMdmu:kappa=-mu-1/2"
    ml = families.ml_from_kappa_mu(k, mu)
    if ml is not None:
        v = families.dmm_ml(ml[0], ml[1], x)
        return KernelValue(v, 1e-15 * abs(v)), "dMdmu:(l,m)-family"
    if _near(k, 0) and mu > -1:
        v = dmm_kappa0(mu, x)
        return KernelValue(v, 1e-13 * abs(v)), "dMdmu:kappa=0"
    return None
