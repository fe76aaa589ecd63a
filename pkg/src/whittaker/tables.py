"""Tabulated closed forms for dM/dkappa, dM/dmu, I1, J1 and M, each paired with an independent route."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import mpmath

from . import _num as N
from .hypergeom import g1, h1, hyp, laguerre_general
from .kernels import bessel_i, bessel_k, dawson, digamma, gamma, shi_chi
from .whittaker import TABLE5, WhittakerParams, m_bessel, m_series

TABLE_IDS = ("T1", "TDkM", "T2A", "T2", "T3A", "T3", "T3B", "T4", "T5")


@dataclass(frozen=True)
class TableRow:
    """One tabulated closed form; ``closed`` is None for skipped rows."""

    table: str
    kappa: Fraction
    mu: Fraction
    closed: Callable[[float], float] | None
    citation: str
    skip_reason: str = ""


@dataclass(frozen=True)
class RowResult:
    table: str
    kappa: float
    mu: float
    x: float
    closed_value: float
    independent_value: float
    rel_diff: float
    status: str
    independent_route: str
    citation: str
    reason: str = ""
    extra: dict = field(default_factory=dict)


def _ext(fn):
    @N.extended("x")
    def evaluate(x):
        return fn(x)

    return evaluate


def _q(n, d, x):
    return N.num(n, x) / d


def _f22(a1, a2, b1, b2, z):
    return hyp((a1, a2), (b1, b2), z)


def _sc(x):
    return shi_chi(x)


def _lg(x):
    return N.log(x), N.euler(x)


# ----------------------------------------------------------------------------
# dM/dkappa rows
# ----------------------------------------------------------------------------


def _t1_m34(x):
    return -_q(2, 3, x) * x ** _q(7, 4, x) * N.exp(x / 2) * _f22(1, 1, _q(5, 2, x), 2, -x)


def _t1_m12(x):
    s, c = _sc(x)
    lx, g = _lg(x)
    return -N.sqrt(x) * N.exp(x / 2) * (g + lx + s - c)


def _t1_m14(x):
    return -2 * x ** _q(5, 4, x) * N.exp(x / 2) * _f22(1, 1, _q(3, 2, x), 2, -x)


def _t1_m16(x):
    return -3 * x ** _q(7, 6, x) * N.exp(x / 2) * _f22(1, 1, _q(4, 3, x), 2, -x)


def _t1_0(x):
    s, c = _sc(x)
    lx, g = _lg(x)
    return N.exp(-x / 2) * (s + c - lx - g) - N.exp(x / 2) * (s - c + lx + g)


def _t1_16(x):
    return 3 * x ** _q(5, 6, x) * N.exp(x / 2) * _f22(1, 1, _q(2, 3, x), 2, -x)


def _t1_12(x):
    s, c = _sc(x)
    lx, g = _lg(x)
    return -2 / N.sqrt(x) * (
        N.exp(x / 2) * (g + 1 + lx + s - c) + N.exp(-x / 2) * (x + 1) * (g - 1 + lx - s - c)
    )


def _t1_1(x):
    s, c = _sc(x)
    lx, g = _lg(x)
    return -3 / x * (
        N.exp(-x / 2) * ((x * x + 2 * x + 2) * (lx - s - c + g) - _q(3, 2, x) * x * x - 4 * x - 3)
        + N.exp(x / 2) * (2 * lx + 2 * s - 2 * c + x + 2 * g + 3)
    )


def _tdk(n):
    def row(x):
        lx, g = _lg(x)
        s, c = _sc(x)
        base = lx - (s + c) + g  # Ei(x) = Shi(x) + Chi(x)
        ex = N.exp(x)
        if n == 1:
            return x * N.exp(-x / 2) * (base - 1) + 2 * N.sinh(x / 2)
        if n == 2:
            return x / 2 * N.exp(-x / 2) * ((2 - x) * (base - _q(3, 2, x)) - ex + 3) + N.sinh(x / 2)
        return x / 6 * N.exp(-x / 2) * (
            (x * x - 6 * x + 6) * (base - _q(11, 6, x)) + (ex - 5) * (x - 2) - 3 * ex + 4
        ) + _q(2, 3, x) * N.sinh(x / 2)

    return row


def _t3_m32_2(x):
    s, c = _sc(x)
    lx, g = _lg(x)
    return -4 / x ** _q(3, 2, x) * (
        N.exp(x / 2) * ((x**3 - 3 * x * x + 6 * x - 6) * (s - c + lx + g)
                        - _q(11, 6, x) * x**3 + _q(15, 2, x) * x * x - 15 * x + 11)
        + N.exp(-x / 2) * (6 * (c + s - lx - g) - x * x + 4 * x - 11)
    )


def _t3_m1_32(x):
    s, c = _sc(x)
    lx, g = _lg(x)
    return 3 / (2 * x) * (
        N.exp(x / 2) * ((2 * x * x - 4 * x + 4) * (c - s - lx - g) + 3 * x * x - 8 * x + 6)
        + 2 * N.exp(-x / 2) * (2 * c + 2 * s + x - 2 * lx - 2 * g - 3)
    )


def _t3_m12_1(x):
    s, c = _sc(x)
    lx, g = _lg(x)
    return 2 / N.sqrt(x) * (
        N.exp(x / 2) * (x - 1) * (c - s - lx - g + 1) + N.exp(-x / 2) * (lx - c - s + g + 1)
    )


def _t3_m12_2(x):
    s, c = _sc(x)
    lx, g = _lg(x)
    return 6 / x ** _q(3, 2, x) * (
        N.exp(x / 2) * ((x * x - 4 * x + 6) * (2 * c - 2 * s - 2 * lx - 2 * g + 3) - 12)
        + N.exp(-x / 2) * (6 * (x - 1) - 4 * (x + 3) * (lx - c - s + g))
    )


def _t3_0_32(x):
    s, c = _sc(x)
    lx, g = _lg(x)
    return 6 / x * (
        N.exp(x / 2) * ((x - 2) * (c - s - lx - g) + x) + N.exp(-x / 2) * ((x + 2) * (lx - c - s + g) - x)
    )


def _t3_12_2(x):
    s, c = _sc(x)
    lx, g = _lg(x)
    return 6 / x ** _q(3, 2, x) * (
        N.exp(x / 2) * (6 * (x + 1) - 4 * (x - 3) * (lx + s - c + g))
        + N.exp(-x / 2) * ((x * x + 4 * x + 6) * (2 * lx - 2 * c - 2 * s + 2 * g - 3) + 12)
    )


# ----------------------------------------------------------------------------
# dM/dmu rows
# ----------------------------------------------------------------------------


def _t2a_m32_1(x):
    s, c = _sc(x)
    _, g = _lg(x)
    return 1 / N.sqrt(x) * (
        N.exp(x / 2) * (x * x * (c - s - g) + _q(3, 2, x) * x * x - 2 * x + 1) + N.exp(-x / 2) * (x - 1)
    )


def _t2a_m1_12(x):
    s, c = _sc(x)
    _, g = _lg(x)
    return x * N.exp(x / 2) * (c - s - g + 1) - 2 * N.sinh(x / 2)


def _t2a_m34(x):
    lx, _ = _lg(x)
    return N.exp(x / 2) * x ** _q(3, 4, x) * (lx - _q(2, 3, x) * x * _f22(1, 1, 2, _q(5, 2, x), -x))


def _t2a_m12(x):
    s, c = _sc(x)
    _, g = _lg(x)
    return N.exp(x / 2) * N.sqrt(x) * (c - s - g)


def _t2a_m14(x):
    lx, _ = _lg(x)
    return N.exp(x / 2) * x ** _q(1, 4, x) * (lx - 2 * x * _f22(1, 1, 2, _q(3, 2, x), -x))


def _t2a_m16(x):
    lx, _ = _lg(x)
    return N.exp(x / 2) * x ** _q(1, 6, x) * (lx - 3 * x * _f22(1, 1, 2, _q(4, 3, x), -x))


def _t2a_16(x):
    lx, _ = _lg(x)
    return N.exp(x / 2) * x ** (-_q(1, 6, x)) * (lx + 3 * x * _f22(1, 1, 2, _q(2, 3, x), -x))


def _t2_mhalf(x):
    s, c = _sc(x)
    _, g = _lg(x)
    return (c - g) * N.cosh(x / 2) - s * N.sinh(x / 2)


def _t2_0(x):
    _, g = _lg(x)
    return N.sqrt(x) * ((N.log(N.num(4, x)) - g) * bessel_i(0, x / 2) - bessel_k(0, x / 2))


def _t2_14(x):
    z = x * x
    q = _q(1, 4, x)
    lx, _ = _lg(x)
    return x ** (3 * q) / 15 * hyp((), (5 * q,), z / 16) * (
        z * hyp((1, 1, 2 * q * 3), (7 * q, 2, 2, 9 * q), z / 4) + 15 * (lx + 2)
    ) - 2 * N.pi(x) * x / gamma(q) * bessel_i(-q, x / 2) * hyp((q, 3 * q), (5 * q, 5 * q, 6 * q), z / 4)


def _t2_13(x):
    z = x * x
    t = _q(1, 3, x)
    lx, _ = _lg(x)
    return x ** (5 * t / 2) / 128 * (
        hyp((), (4 * t,), z / 16) * (9 * z * hyp((1, 1, _q(3, 2, x)), (5 * t, 2, 2, 7 * t), z / 4)
                                    + 64 * (2 * lx + 3))
        - 192 * hyp((), (2 * t,), z / 16) * hyp((t, 5 * t / 2), (4 * t, 4 * t, 5 * t), z / 4)
    )


def _t2_23(x):
    z = x * x
    t = _q(1, 3, x)
    lx, _ = _lg(x)
    return x ** (7 * t / 2) / 80 * (
        hyp((), (5 * t,), z / 16) * (9 * z * hyp((1, 1, _q(3, 2, x)), (4 * t, 2, 2, 8 * t), z / 4)
                                    + 80 * lx + 60)
        - 60 * hyp((), (t,), z / 16) * hyp((2 * t, 7 * t / 2), (5 * t, 5 * t, 7 * t), z / 4)
    )


def _t2_34(x):
    z = x * x
    q = _q(1, 4, x)
    lx, _ = _lg(x)
    return x ** (5 * q) / 21 * hyp((), (7 * q,), z / 16) * (
        3 * z * hyp((1, 1, 6 * q), (5 * q, 2, 2, 11 * q), z / 4) + 21 * lx + 14
    ) - N.pi(x) * z / (4 * gamma(7 * q)) * bessel_i(-3 * q, x / 2) * hyp(
        (3 * q, 5 * q), (7 * q, 7 * q, 10 * q), z / 4
    )


def _t2_12(x):
    s, c = _sc(x)
    _, g = _lg(x)
    return 2 * (c - g + 2) * N.sinh(x / 2) - 2 * s * N.cosh(x / 2)


def _t2_32(x):
    s, c = _sc(x)
    _, g = _lg(x)
    return 4 / x * (
        N.sinh(x / 2) * (6 * g - 6 * c - 3 * x * s - 28) + N.cosh(x / 2) * ((3 * c + 8 - 3 * g) * x + 6 * s)
    )


def _t4_m32_2(x):
    s, c = _sc(x)
    _, g = _lg(x)
    return 4 / x ** _q(3, 2, x) * (
        N.exp(x / 2) * ((x**3 - 3 * x * x + 6 * x - 6) * (c - s - g)
                        + _q(7, 3, x) * x**3 - 11 * x * x + 28 * x - 36)
        + N.exp(-x / 2) * (6 * (c + s - g) + x * x - 4 * x + 36)
    )


def _t4_m1_32(x):
    s, c = _sc(x)
    _, g = _lg(x)
    return 1 / x * (
        N.exp(x / 2) * (3 * (x * x - 2 * x + 2) * (c - s - g) + _q(13, 2, x) * x * x - 22 * x + 31)
        + N.exp(-x / 2) * (3 * (x - 2 * c - 2 * s + 2 * g) - 31)
    )


def _t4_m12_1(x):
    s, c = _sc(x)
    _, g = _lg(x)
    return 2 / N.sqrt(x) * (
        N.exp(x / 2) * ((x - 1) * (c - s - g + 2) - 2) + N.exp(-x / 2) * (c + s - g + 4)
    )


def _t4_m12_2(x):
    s, c = _sc(x)
    _, g = _lg(x)
    return 8 / x ** _q(3, 2, x) * (
        N.exp(x / 2) * (3 * (x * x / 2 - 2 * x + 3) * (c - s - g) + 4 * x * x - 22 * x + 48)
        - N.exp(-x / 2) * (3 * (x + 3) * (c + s - g) + 8 * (x + 6))
    )


def _t4_12_1(x):
    s, c = _sc(x)
    _, g = _lg(x)
    return 2 / N.sqrt(x) * (
        N.exp(x / 2) * (c - s - g + 4) - N.exp(-x / 2) * ((x + 1) * (c + s - g + 2) + 2)
    )


def _t4_12_2(x):
    s, c = _sc(x)
    _, g = _lg(x)
    return 4 / x ** _q(3, 2, x) * (
        N.exp(x / 2) * (6 * (x - 3) * (c - s - g) + 16 * (x - 6))
        + N.exp(-x / 2) * (3 * (x * x + 4 * x + 6) * (c + s - g) + 8 * x * x + 44 * x + 96)
    )


# ----------------------------------------------------------------------------
# I1 and J1 rows
# ----------------------------------------------------------------------------


def _t3a_m12_1(x):
    s, c = _sc(x)
    lx, g = _lg(x)
    return (N.exp(x) * (1 - x) * (lx + g + s - c) + lx + g - c - s) / (x * x)


def _t3a_m12_mu(mu):
    def row(x):
        m = N.num(mu, x)
        h = x / 2
        return -N.sqrt(N.pi(x)) / 2 * gamma(m) * (
            N.exp(h) * x ** (_q(1, 2, x) - m) / m * (bessel_i(m - _q(1, 2, x), h) + bessel_i(m + _q(1, 2, x), h))
            + 2 ** (1 - 2 * m) / gamma(m + _q(1, 2, x)) * g1(m + 1, 2 * m + 1, x).value
        )

    return row


def _t3a_12_1(x):
    s, c = _sc(x)
    lx, g = _lg(x)
    ex = N.exp(x)
    return ((x + ex + 1) * (c - lx - g) + (x - ex + 1) * s) / (x * x)


def _t3a_12_mu(mu):
    def row(x):
        m = N.num(mu, x)
        h = x / 2
        return N.sqrt(N.pi(x)) / 2 * gamma(m) * (
            N.exp(h) * x ** (_q(1, 2, x) - m) / m * (bessel_i(m - _q(1, 2, x), h) - bessel_i(m + _q(1, 2, x), h))
            - 2 ** (1 - 2 * m) / gamma(m + _q(1, 2, x)) * g1(m, 2 * m + 1, x).value
        )

    return row


def _t3a_1_mu(mu):
    def row(x):
        m = N.num(mu, x)
        h = x / 2
        half = _q(1, 2, x)
        lead = 4 * N.sqrt(N.pi(x)) * m * N.exp(h) * x ** (-m) / (4 * m * m - 1) * (
            (2 * m - x + 1) * bessel_i(m, h) + x * bessel_i(m + 1, h)
        )
        return gamma(m - half) * (lead - gamma(m + 3 * half) / gamma(2 * m + 1) * g1(m - half, 2 * m + 1, x).value)

    return row


def _t3a_k_0(kappa):
    def row(x):
        k = N.num(kappa, x)
        pk = N.pi(x) * k
        sec = 1 / N.cos(pk)
        tan = N.sin(pk) / N.cos(pk)
        return N.pi(x) * sec * (
            N.pi(x) * tan * laguerre_general(k - _q(1, 2, x), x) - g1(_q(1, 2, x) - k, 1, x).value
        )

    return row


def _t3a_k_half(kappa):
    def row(x):
        k = N.num(kappa, x)
        pk = N.pi(x) * k
        cot = N.cos(pk) / N.sin(pk)
        return -N.pi(x) / N.sin(pk) * (
            (pk * cot - 1) * hyp((1 - k,), (2,), x) + k * g1(1 - k, 2, x).value
        )

    return row


def _t3a_k_k(kappa):
    def row(x):
        k = N.num(kappa, x)
        half = _q(1, 2, x)
        harm = digamma(2 * k - half + 1) + N.euler(x)
        b = 2 * k + 1
        return N.sqrt(N.pi(x)) * gamma(2 * k + half) / gamma(b) * (
            (harm + 2 * N.log(N.num(2, x))) * hyp((half,), (b,), x) - g1(half, b, x).value
        )

    return row


def _t3a_14_14(x):
    r = N.sqrt(x)
    return 4 * N.exp(x) * N.log(N.num(2, x)) / r * dawson(r) - 2 * g1(_q(1, 2, x), _q(3, 2, x), x).value


def _t3b_m1_0(x):
    h = x / 2
    a = _q(3, 2, x)
    return N.pi(x) * (
        2 * N.exp(h) * (N.log(N.num(4, x)) - 2) * ((x + 1) * bessel_i(0, h) + x * bessel_i(1, h))
        - g1(a, 1, x).value - 2 * h1(a, 1, x).value
    )


def _t3b_m12_1(x):
    s, c = _sc(x)
    lx, g = _lg(x)
    return (N.exp(x) * ((x - 1) * (c - s - lx - g) - 2) + c + s - lx - g + 2) / (x * x)


def _t3b_third(a_num, nu_num):
    def row(x):
        a = _q(a_num, 6, x)
        return 2 * N.pi(x) * (
            g1(a, 1, x).value + 2 * h1(a, 1, x).value
            - N.log(N.num(432, x)) * laguerre_general(_q(nu_num, 6, x), x)
        )

    return row


def _t3b_0_0(x):
    ax = abs(x)
    _, g = _lg(ax)
    return -N.pi(x) * N.exp(x / 2) * (bessel_k(0, ax / 2) + (N.log(4 * ax) + g) * bessel_i(0, ax / 2))


def _t3b_0_12(x):
    s, c = _sc(x)
    lx, g = _lg(x)
    return (N.exp(x) * (c - s - lx - g) - c - s + lx + g) / x


def _t3b_12_12(x):
    h = x / 2
    half = _q(1, 2, x)
    return N.pi(x) / 2 * (
        g1(half, 2, x).value + 2 * h1(half, 2, x).value
        - 2 * N.exp(h) * N.log(N.num(4, x)) * (bessel_i(0, h) - bessel_i(1, h))
    )


def _t3b_12_1(x):
    s, c = _sc(x)
    lx, g = _lg(x)
    return (N.exp(x) * (c - s - lx - g + 2) - (x + 1) * (c + s - lx - g) - 2) / (x * x)


# ----------------------------------------------------------------------------
# Catalog
# ----------------------------------------------------------------------------

F = Fraction
MEIJER = "contains a Meijer-G function, which is not implemented"


def _rows():
    entries = [
        ("T1", F(-3, 4), F(1, 4), _t1_m34),
        ("T1", F(-1, 2), F(0), _t1_m12),
        ("T1", F(-1, 4), F(-1, 4), _t1_m14),
        ("T1", F(-1, 6), F(-1, 3), _t1_m16),
        ("T1", F(0), F(1, 2), _t1_0),
        ("T1", F(1, 6), F(-2, 3), _t1_16),
        ("T1", F(1, 2), F(1), _t1_12),
        ("T1", F(1), F(3, 2), _t1_1),
        ("TDkM", F(1), F(1, 2), _tdk(1)),
        ("TDkM", F(2), F(1, 2), _tdk(2)),
        ("TDkM", F(3), F(1, 2), _tdk(3)),
        ("T2A", F(-3, 2), F(1), _t2a_m32_1),
        ("T2A", F(-1), F(1, 2), _t2a_m1_12),
        ("T2A", F(-3, 4), F(1, 4), _t2a_m34),
        ("T2A", F(-1, 2), F(0), _t2a_m12),
        ("T2A", F(-1, 4), F(-1, 4), _t2a_m14),
        ("T2A", F(-1, 6), F(-1, 3), _t2a_m16),
        ("T2A", F(1, 6), F(-2, 3), _t2a_16),
        ("T2", F(0), F(-1, 2), _t2_mhalf),
        ("T2", F(0), F(0), _t2_0),
        ("T2", F(0), F(1, 4), _t2_14),
        ("T2", F(0), F(1, 3), _t2_13),
        ("T2", F(0), F(1, 2), _t2_12),
        ("T2", F(0), F(2, 3), _t2_23),
        ("T2", F(0), F(3, 4), _t2_34),
        ("T2", F(0), F(1), None),
        ("T2", F(0), F(3, 2), _t2_32),
        ("T2", F(0), F(2), None),
        ("T3", F(-3, 2), F(2), _t3_m32_2),
        ("T3", F(-1), F(3, 2), _t3_m1_32),
        ("T3", F(-1, 2), F(1), _t3_m12_1),
        ("T3", F(-1, 2), F(2), _t3_m12_2),
        ("T3", F(0), F(3, 2), _t3_0_32),
        ("T3", F(1, 2), F(2), _t3_12_2),
        ("T4", F(-3, 2), F(2), _t4_m32_2),
        ("T4", F(-1), F(3, 2), _t4_m1_32),
        ("T4", F(-1, 2), F(1), _t4_m12_1),
        ("T4", F(-1, 2), F(2), _t4_m12_2),
        ("T4", F(1, 2), F(1), _t4_12_1),
        ("T4", F(1, 2), F(2), _t4_12_2),
        ("T3A", F(-1, 2), F(1), _t3a_m12_1),
        ("T3A", F(1, 2), F(1), _t3a_12_1),
        ("T3A", F(1, 4), F(1, 4), _t3a_14_14),
        ("T3B", F(-1), F(0), _t3b_m1_0),
        ("T3B", F(-1, 2), F(1), _t3b_m12_1),
        ("T3B", F(-1, 3), F(0), _t3b_third(5, -5)),
        ("T3B", F(0), F(0), _t3b_0_0),
        ("T3B", F(0), F(1, 2), _t3b_0_12),
        ("T3B", F(0), F(1), None),
        ("T3B", F(1, 3), F(0), _t3b_third(1, -1)),
        ("T3B", F(1, 2), F(1, 2), _t3b_12_12),
        ("T3B", F(1, 2), F(1), _t3b_12_1),
    ]
    # Parametric rows of Table 3A, instantiated at sample parameters.
    for mu in (F(3, 4), F(2)):
        entries.append(("T3A", F(-1, 2), mu, _t3a_m12_mu(mu)))
        entries.append(("T3A", F(1, 2), mu, _t3a_12_mu(mu)))
        entries.append(("T3A", F(1), mu, _t3a_1_mu(mu)))
    for k in (F(1, 4), F(-1, 3)):
        entries.append(("T3A", k, F(0), _t3a_k_0(k)))
        entries.append(("T3A", k, F(1, 2), _t3a_k_half(k)))
    for k in (F(1, 3), F(3, 4)):
        entries.append(("T3A", k, k, _t3a_k_k(k)))
    rows = []
    for table, k, m, fn in entries:
        cite = f"{table}({k},{m})"
        if fn is None:
            rows.append(TableRow(table, k, m, None, cite, MEIJER))
        else:
            rows.append(TableRow(table, k, m, _ext(fn), cite))
    for cf in TABLE5:
        rows.append(TableRow("T5", cf.kappa, cf.mu, cf.evaluator, cf.citation))
    return tuple(rows)


ROWS: tuple[TableRow, ...] = _rows()


def table_rows(table_id: str) -> tuple[TableRow, ...]:
    if table_id not in TABLE_IDS:
        raise ValueError(f"table_id must be one of {TABLE_IDS}, got {table_id!r}")
    return tuple(r for r in ROWS if r.table == table_id)


def _fd_extended(f, v0):
    """Richardson central difference of f at v0, evaluated at 40 digits (h = 1e-8)."""
    with mpmath.workdps(N.EXTENDED_DPS):
        v0 = mpmath.mpf(v0)
        h = mpmath.mpf(10) ** -8

        def central(step):
            return (f(v0 + step) - f(v0 - step)) / (2 * step)

        return float((4 * central(h / 2) - central(h)) / 3)


def _dmu_bessel_fd(mu, x):
    """dM_{0,mu}/dmu from the Bessel form 4^mu Gamma(1+mu) sqrt(x) I_mu(x/2)."""
    with mpmath.workdps(N.EXTENDED_DPS):
        xm = mpmath.mpf(x)
        return _fd_extended(lambda m: m_bessel.__wrapped__(m, xm), mu)


def independent_value(row: TableRow, x: float) -> tuple[float, str]:
    """Value of the tabulated quantity by a route that does not use the closed form."""
    from .deriv import dm_dkappa, dm_dmu
    from .logint import i_integral, j1_general, j_integral

    k, mu = float(row.kappa), float(row.mu)
    if row.table in ("T1", "TDkM", "T3"):
        return dm_dkappa(WhittakerParams(k, mu, x), route="series").value, "dMdk:series"
    if row.table in ("T2A", "T2", "T4"):
        if mu == -0.5:
            return _dmu_bessel_fd(mu, x), "dMdmu:fd-extended-bessel-form"
        return dm_dmu(WhittakerParams(k, mu, x), route="series").value, "dMdmu:series"
    if row.table == "T3A":
        return i_integral(1, k, mu, x, route="quad").value, "I1:quad"
    if row.table == "T3B":
        if mu + k + 0.5 <= 0 or mu - k + 0.5 <= 0:
            # The defining integral diverges; compare with the continued series form.
            return j1_general(k, mu, x), "J1:general-series"
        return j_integral(1, k, mu, x, route="quad").value, "J1:quad"
    return m_series(WhittakerParams(k, mu, x)).value, "M:series"


def rel_diff(a: float, b: float) -> float:
    if b == 0:
        return abs(a - b)
    return abs(a - b) / abs(b)


def evaluate_row(row: TableRow, x: float) -> RowResult:
    k, mu = float(row.kappa), float(row.mu)
    if row.closed is None:
        return RowResult(row.table, k, mu, x, math.nan, math.nan, math.nan, "skipped", "", row.citation,
                         row.skip_reason)
    closed = row.closed(x)
    ind, route = independent_value(row, x)
    return RowResult(row.table, k, mu, x, closed, ind, rel_diff(closed, ind), "ok", route, row.citation)
