"""Integral Whittaker functions Mi (lower) and mi (upper) with their reduction formulas."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._registry import op
from .errors import BranchError, DivergenceError, DomainError, PoleError
from .incgamma import IncGammaArgs, lower_gamma, upper_gamma_any
from .kernels import KernelValue, gamma, is_nonpos_int, pochhammer
from .quadrature import QuadCtrl, quad_de
from .whittaker import SNAP_TOL, WhittakerParams, m_reflect, m_series

_MOD = "integral-whittaker"


@dataclass(frozen=True)
class IntWhittakerArgs:
    """Parameters of Mi_{kappa,mu}(x) = int_0^x M(t)/t dt and mi = int_x^inf M(t)/t dt."""

    kappa: float
    mu: float
    x: float

    def __post_init__(self):
        if not self.mu > -0.5:
            raise DomainError(f"M(t)/t is integrable at 0 only for mu > -1/2, got mu={self.mu}")
        if not (math.isfinite(self.x) and self.x > 0):
            raise DomainError(f"x must be > 0, got {self.x}")
        if not math.isfinite(self.kappa):
            raise DomainError(f"kappa must be finite, got {self.kappa}")


def _m_over_t(kappa, mu):
    def f(t, da, db):
        p = WhittakerParams(kappa, mu, t)
        m = m_series(p) if t > 0 else m_reflect(p)
        return m.value / t

    return f


def mi_lower_quad(kappa, mu, x, ctrl: QuadCtrl | None = None) -> KernelValue:
    """int_0^x M(t)/t dt by quadrature; x < 0 evaluates M through reflection (2mu integer)."""
    if not mu > -0.5:
        raise DomainError(f"M(t)/t is integrable at 0 only for mu > -1/2, got mu={mu}")
    if x == 0:
        return KernelValue(0.0, 0.0, 0)
    return quad_de(_m_over_t(kappa, mu), 0.0, float(x), ctrl, gaps=True)


@op("mi_lower", _MOD)
def mi_lower(a: IntWhittakerArgs, ctrl: QuadCtrl | None = None) -> KernelValue:
    """Mi_{kappa,mu}(x) = int_0^x M_{kappa,mu}(t)/t dt by double-exponential quadrature."""
    return mi_lower_quad(a.kappa, a.mu, a.x, ctrl)


def _poly_degree(kappa, mu):
    a = 0.5 + mu - kappa
    if abs(a - round(a)) <= SNAP_TOL:
        a = float(round(a))
    if not is_nonpos_int(a):
        raise DivergenceError(
            f"mi diverges: M(t)/t grows like e^(t/2) unless 1/2 + mu - kappa is a nonpositive "
            f"integer, got {a}"
        )
    return -round(a)


@op("mi_upper", _MOD)
def mi_upper(a: IntWhittakerArgs, ctrl: QuadCtrl | None = None) -> KernelValue:
    """mi_{kappa,mu}(x) = int_x^inf M(t)/t dt, truncated with an exponential tail bound.

    Admissible only when 1F1 is a polynomial of degree n, so M(t)/t decays like
    t^{mu-1/2+n} e^{-t/2}.
    """
    ctrl = ctrl or QuadCtrl()
    n = _poly_degree(a.kappa, a.mu)
    b = 1 + 2 * a.mu
    # 1F1(-n; b; t) = sum_k c_k t^k; built explicitly so rounding in kappa cannot
    # turn the polynomial into a divergent series.
    signed = [pochhammer(-n, k) / (pochhammer(b, k) * math.factorial(k)) for k in range(n + 1)]
    coefs = [abs(c) for c in signed]

    def tail(big_t):
        total = 0.0
        for k, c in enumerate(coefs):
            q = max(a.mu - 0.5 + k, 0.0)
            if big_t <= 4 * q:
                return math.inf
            total += c * 2 * math.exp(-big_t / 2) * big_t**q / (1 - 2 * q / big_t)
        return total

    big_t = max(ctrl.tail_cut, 2 * a.x + 20)
    while tail(big_t) > ctrl.tail_tol:
        big_t += 10
        if big_t > 5000:
            raise DivergenceError("mi tail bound did not fall below tolerance")
    edges = [a.x]
    while edges[-1] < big_t:
        edges.append(min(big_t, max(edges[-1] + 1, 2 * edges[-1])))
    def f(t, da, db):
        poly = 0.0
        for c in reversed(signed):
            poly = poly * t + c
        return t ** (a.mu - 0.5) * math.exp(-t / 2) * poly

    total, err, count = 0.0, tail(big_t), 0
    for lo, hi in zip(edges, edges[1:]):
        kv = quad_de(f, lo, hi, ctrl, gaps=True)
        total += kv.value
        err += kv.abs_err_est
        count += kv.terms_used
    return KernelValue(total, err, count)


def _weights(kappa, n, sign):
    """C(n,m) sign^m / (2kappa)_m for m = 0..n."""
    out = []
    for m in range(n + 1):
        p = pochhammer(2 * kappa, m)
        if p == 0:
            raise PoleError(f"(2kappa)_{m} vanishes at kappa={kappa}")
        out.append(math.comb(n, m) * sign**m / p)
    return out


def _check_n(n):
    if not (isinstance(n, int) and n >= 0):
        raise DomainError(f"n must be a nonnegative integer, got {n}")


@op("mi_lower_reduced", _MOD)
def mi_lower_reduced(kappa, n: int, x) -> KernelValue:
    """Mi_{kappa+n, kappa-1/2}(x) = 2^kappa sum_m C(n,m)(-2)^m/(2kappa)_m gamma(kappa+m, x/2)."""
    _check_n(n)
    if not kappa > 0:
        raise DomainError(f"mi_lower_reduced needs kappa > 0, got {kappa}")
    if not x > 0:
        raise DomainError(f"mi_lower_reduced needs x > 0, got {x}")
    terms = [w * lower_gamma(IncGammaArgs(kappa + m, x / 2)).value for m, w in enumerate(_weights(kappa, n, -2))]
    value = 2**kappa * math.fsum(terms)
    scale = 2**kappa * sum(abs(t) for t in terms)
    return KernelValue(value, 1e-15 * scale, n + 1)


@op("mi_upper_reduced", _MOD)
def mi_upper_reduced(kappa, n: int, x) -> KernelValue:
    """mi_{kappa+n, kappa-1/2}(x) = 2^kappa sum_m C(n,m)(-2)^m/(2kappa)_m Gamma(kappa+m, x/2)."""
    _check_n(n)
    if not x > 0:
        raise DomainError(f"mi_upper_reduced needs x > 0, got {x}")
    terms = [w * upper_gamma_any(kappa + m, x / 2) for m, w in enumerate(_weights(kappa, n, -2))]
    value = 2**kappa * math.fsum(terms)
    scale = 2**kappa * sum(abs(t) for t in terms)
    return KernelValue(value, 1e-14 * scale, n + 1)


def mi_complete(kappa, n: int) -> float:
    """Mi + mi for the reduction family: 2^kappa sum_m C(n,m)(-2)^m/(2kappa)_m Gamma(kappa+m)."""
    _check_n(n)
    return 2**kappa * math.fsum(w * gamma(kappa + m) for m, w in enumerate(_weights(kappa, n, -2)))


def _exp_gamma(nu, y):
    """int_0^y s^{nu-1} e^{s} ds = y^nu sum_k y^k/(k!(nu+k)), y >= 0."""
    total = 1 / nu
    term = 1.0
    k = 0
    while True:
        k += 1
        term *= y / k
        add = term / (nu + k)
        total += add
        if add <= 1e-17 * total and k > y:
            return y**nu * total


@op("mi_lower_reflected", _MOD)
def mi_lower_reflected(kappa, n: int, x) -> KernelValue:
    """Mi_{-kappa-n, kappa-1/2}(x) for kappa > 0.

    x > 0: 2^kappa sum_m C(n,m) 2^m/(2kappa)_m int_0^{x/2} s^{kappa+m-1} e^s ds.
    x < 0 (kappa integer): (-1)^kappa 2^kappa sum_m C(n,m)(-2)^m/(2kappa)_m gamma(kappa+m, |x|/2).
    """
    _check_n(n)
    if not kappa > 0:
        raise DomainError(f"mi_lower_reflected needs kappa > 0, got {kappa}")
    if x == 0:
        return KernelValue(0.0, 0.0, 0)
    if x > 0:
        y = x / 2
        terms = [w * _exp_gamma(kappa + m, y) for m, w in enumerate(_weights(kappa, n, 2))]
        phase = 1.0
    else:
        k = round(kappa)
        if abs(kappa - k) > 1e-12:
            raise BranchError(
                f"Mi_(-kappa-n, kappa-1/2)(x) is not real for x < 0 unless kappa is an integer, got {kappa}"
            )
        y = -x / 2
        terms = [w * lower_gamma(IncGammaArgs(kappa + m, y)).value for m, w in enumerate(_weights(kappa, n, -2))]
        phase = (-1.0) ** k
    value = phase * 2**kappa * math.fsum(terms)
    scale = 2**kappa * sum(abs(t) for t in terms)
    return KernelValue(value, 1e-15 * scale, n + 1)
