"""Double-exponential (tanh-sinh) quadrature with accurate endpoint distances."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from ._registry import op
from .errors import ConvergenceError, DomainError
from .kernels import KernelValue

T_MAX = 6.5
MIN_GAP = 1e-300


@dataclass(frozen=True)
class QuadCtrl:
    """Quadrature tolerances and limits."""

    abs_tol: float = 1e-15
    rel_tol: float = 1e-13
    max_levels: int = 10
    tail_cut: float = 40.0
    tail_tol: float = 1e-12

    def __post_init__(self):
        if self.abs_tol < 0:
            raise DomainError("abs_tol must be >= 0")
        if not 0 < self.rel_tol < 1:
            raise DomainError("rel_tol must lie in (0, 1)")
        if not 1 <= self.max_levels <= 12:
            raise DomainError("max_levels must lie in [1, 12]")
        if self.tail_cut < 30:
            raise DomainError("tail_cut must be >= 30")
        if not self.tail_tol > 0:
            raise DomainError("tail_tol must be > 0")


def _nodes(level: int):
    """Yield (t, u-weights) for the nodes new at ``level`` (h = 2^-level)."""
    h = 2.0**-level
    k_max = int(T_MAX / h)
    step = 1 if level == 0 else 2
    start = 0 if level == 0 else 1
    for k in range(start, k_max + 1, step):
        yield k * h, h


def _sum_level(f, a, b, level):
    width = b - a
    total = 0.0
    count = 0
    for t, h in _nodes(level):
        u = 0.5 * math.pi * math.sinh(t)
        e = math.exp(-2.0 * u)
        sech2 = 4.0 * e / (1.0 + e) ** 2
        w = h * 0.5 * width * sech2 * 0.5 * math.pi * math.cosh(t)
        if w == 0.0:
            continue
        near = width * e / (1.0 + e)  # distance to the nearer endpoint
        far = width - near
        if t == 0.0:
            total += w * f(a + 0.5 * width, 0.5 * width, 0.5 * width)
            count += 1
            continue
        if near < MIN_GAP * max(1.0, width):
            continue
        # Node close to b, then its mirror close to a.
        total += w * f(b - near, far, near)
        total += w * f(a + near, near, far)
        count += 2
    return total, count


@op("quad_de", "log-integrals")
def quad_de(
    f: Callable,
    a: float,
    b: float,
    ctrl: QuadCtrl | None = None,
    alpha: float | None = None,
    beta: float | None = None,
    gaps: bool = False,
) -> KernelValue:
    """Integrate ``f`` over the finite interval (a, b).

    With ``gaps=True`` the integrand is called as ``f(t, t - a, b - t)`` with
    both endpoint distances computed without cancellation. ``alpha`` and
    ``beta`` are optional endpoint exponents, t^alpha near a and (b-t)^beta
    near b. They are checked for integrability only.
    """
    ctrl = ctrl or QuadCtrl()
    for name, v in (("alpha", alpha), ("beta", beta)):
        if v is not None and v <= -1:
            raise DomainError(f"non-integrable endpoint: {name} = {v} <= -1")
    if a == b:
        return KernelValue(0.0, 0.0, 0)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("quad_de needs a finite interval")
    sign = 1.0
    if b < a:
        a, b, sign = b, a, -1.0
    g = f if gaps else (lambda t, da, db: f(t))
    total, count = _sum_level(g, a, b, 0)
    prev = total
    err = math.inf
    for level in range(1, ctrl.max_levels + 1):
        part, n = _sum_level(g, a, b, level)
        count += n
        # Halving h: old nodes keep their values with half the weight.
        total = 0.5 * total + part
        err = abs(total - prev)
        if not math.isfinite(total):
            raise ConvergenceError("quadrature produced a non-finite value")
        if level >= 3 and err <= max(ctrl.abs_tol, ctrl.rel_tol * abs(total)):
            return KernelValue(sign * total, err + 1e-16 * abs(total), count)
        prev = total
    raise ConvergenceError(
        f"quadrature did not converge in {ctrl.max_levels} levels (last difference {err:.3e})"
    )


def quad_infinite(
    f: Callable,
    tail_bound: Callable[[float], float],
    scale: float,
    ctrl: QuadCtrl | None = None,
    gaps: bool = False,
) -> KernelValue:
    """Integrate ``f`` over (0, inf) by truncation at T with an analytic tail bound.

    ``tail_bound(T)`` must bound |int_T^inf f|. T starts at max(tail_cut, scale)
    and grows until the bound drops below ``ctrl.tail_tol``.
    """
    ctrl = ctrl or QuadCtrl()
    big_t = max(ctrl.tail_cut, scale)
    tail = tail_bound(big_t)
    while tail > ctrl.tail_tol:
        big_t += 10.0
        if big_t > 2000:
            raise ConvergenceError("tail bound did not fall below tolerance")
        tail = tail_bound(big_t)
    edges = [0.0, 1.0, 4.0, 16.0]
    while edges[-1] * 2 < big_t:
        edges.append(edges[-1] * 2)
    edges.append(big_t)
    total, err, count = 0.0, tail, 0
    for lo, hi in zip(edges, edges[1:]):
        kv = quad_de(f, lo, hi, ctrl, gaps=gaps)
        total += kv.value
        err += kv.abs_err_est
        count += kv.terms_used
    return KernelValue(total, err, count)


def gamma_tail_bound(rate: float, power: float) -> Callable[[float], float]:
    """Bound of int_T^inf e^{-rate t} t^power dt, valid for T > power/rate."""

    def bound(big_t: float) -> float:
        q = max(power, 0.0)
        if big_t * rate <= 2 * q:
            return math.inf
        return math.exp(-rate * big_t) * big_t**q / (rate - q / big_t)

    return bound
