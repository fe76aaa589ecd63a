"""Float / mpmath.mpf dispatch so kernels can run in either precision."""

from __future__ import annotations

import functools
import inspect
import math
from fractions import Fraction

import mpmath

EXTENDED_DPS = 40


def is_mp(x) -> bool:
    return isinstance(x, mpmath.mpf)


def exp(x):
    return mpmath.exp(x) if is_mp(x) else math.exp(x)


def log(x):
    return mpmath.log(x) if is_mp(x) else math.log(x)


def sqrt(x):
    return mpmath.sqrt(x) if is_mp(x) else math.sqrt(x)


def sin(x):
    return mpmath.sin(x) if is_mp(x) else math.sin(x)


def cos(x):
    return mpmath.cos(x) if is_mp(x) else math.cos(x)


def sinh(x):
    return mpmath.sinh(x) if is_mp(x) else math.sinh(x)


def cosh(x):
    return mpmath.cosh(x) if is_mp(x) else math.cosh(x)


def lgamma(x):
    """ln|Gamma(x)|."""
    if is_mp(x):
        return mpmath.re(mpmath.loggamma(x)) if x > 0 else mpmath.log(abs(mpmath.gamma(x)))
    return math.lgamma(x)


def pi(like=0.0):
    return +mpmath.pi if is_mp(like) else math.pi


def euler(like=0.0):
    return +mpmath.euler if is_mp(like) else 0.57721566490153286061


def eps(like=0.0):
    return mpmath.mp.eps if is_mp(like) else 2.220446049250313e-16


def tiny(like=0.0):
    return mpmath.mpf(10) ** (-300) if is_mp(like) else 1e-300


def num(v, like):
    """Convert a Python number (Fraction included) to the precision of ``like``."""
    if not is_mp(like):
        return float(v)
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpf(v)


def extended(*real: str):
    """Decorator: run with floats and the named real parameters promoted to mpf.

    Evaluation happens at EXTENDED_DPS digits; mpf results come back as floats.
    Integer parameters not listed in ``real`` stay integers.
    """

    def deco(fn):
        sig = inspect.signature(fn)

        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            bound = sig.bind(*args, **kwargs)
            with mpmath.workdps(EXTENDED_DPS):
                for name, v in bound.arguments.items():
                    if isinstance(v, float) or (name in real and isinstance(v, (int, float))):
                        bound.arguments[name] = mpmath.mpf(v)
                out = fn(*bound.args, **bound.kwargs)
            return _to_float(out)

        return wrapper

    return deco


def _to_float(v):
    if is_mp(v):
        return float(v)
    if isinstance(v, tuple):
        return tuple(_to_float(u) for u in v)
    return v
