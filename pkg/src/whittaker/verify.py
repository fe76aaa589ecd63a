"""Cross-route verification harness: finite differences, quadrature oracles, relations and tables."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Iterable

from . import deriv, families, hypergeom, incgamma, intwhittaker, logint, tables
from ._registry import OPERATIONS, op, track
from .errors import DomainError, WhittakerError
from .kernels import beta, digamma, gamma
from .quadrature import quad_de
from .whittaker import WhittakerParams, m_bessel, m_laguerre, m_laguerre_negated, m_reduced, m_reflect, m_series

SUITES = (
    "series_vs_fd",
    "catalog_vs_series",
    "integral_relations",
    "closed_vs_quad",
    "incgamma",
    "int_whittaker",
    "tables",
    "hypergeom",
    "reductions",
)
COVERED_MODULES = (
    "hypergeom",
    "whittaker-core",
    "whittaker-deriv",
    "log-integrals",
    "incgamma",
    "integral-whittaker",
)
_MOD = "verify"


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one check; passes when either the absolute or the relative difference is within tolerance."""

    check_id: str
    lhs: float
    rhs: float
    abs_diff: float
    rel_diff: float
    tol: float
    passed: bool
    routes: tuple[str, str]
    citation: str
    tol_abs: float = 0.0

    def as_dict(self) -> dict:
        return asdict(self)


def make_report(check_id, lhs, rhs, tol, routes, citation, tol_abs=0.0) -> VerifyReport:
    lhs, rhs = float(lhs), float(rhs)
    diff = abs(lhs - rhs)
    rel = diff / abs(rhs) if rhs != 0 else (0.0 if diff == 0 else math.inf)
    passed = bool(diff <= tol_abs or rel <= tol) and math.isfinite(lhs) and math.isfinite(rhs)
    return VerifyReport(check_id, lhs, rhs, diff, rel, tol, passed, tuple(routes), citation, tol_abs)


def _failed(check_id, exc, citation) -> VerifyReport:
    return VerifyReport(check_id, math.nan, math.nan, math.nan, math.nan, 0.0, False,
                        ("error", type(exc).__name__), f"{citation}: {exc}")


@dataclass(frozen=True)
class GridSpec:
    """Parameter grid; ``points`` applies an admissibility filter and refuses an empty result."""

    kappa_values: tuple = ()
    mu_values: tuple = ()
    x_values: tuple = ()

    def points(self, admissible: Callable[[float, float, float], bool] = lambda k, m, x: True):
        pts = [
            (float(k), float(m), float(x))
            for k in self.kappa_values
            for m in self.mu_values
            for x in self.x_values
            if admissible(float(k), float(m), float(x))
        ]
        if not pts:
            raise DomainError("grid is empty after the admissibility filter (must be nonempty)")
        return pts


HALF_GRID = (-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0)
DEFAULT_GRIDS = {
    "series_vs_fd": GridSpec(HALF_GRID, HALF_GRID, (0.5, 1.0, 2.0, 5.0)),
    "integral_relations": GridSpec((-0.5, 0.0, 0.5, 1.0), (0.5, 1.0, 1.5, 2.0), (0.5, 1.0, 2.0)),
}
X3 = (0.5, 1.0, 2.0)


@op("fd_derivative", _MOD)
def fd_derivative(f: Callable[[float], float], x0: float, scale: float = 1.0) -> float:
    """Fourth-order Richardson central difference with h = 1e-4 * scale and h/2."""
    h = 1e-4 * scale

    def central(step):
        return (f(x0 + step) - f(x0 - step)) / (2 * step)

    return (4 * central(h / 2) - central(h)) / 3


def _guard(out: list, check_id: str, citation: str, fn: Callable[[], VerifyReport | Iterable[VerifyReport]]):
    try:
        res = fn()
    except WhittakerError as exc:
        out.append(_failed(check_id, exc, citation))
        return
    if isinstance(res, VerifyReport):
        out.append(res)
    else:
        out.extend(res)


def _fmt(*vals):
    return ",".join(f"{float(v):g}" for v in vals)


# ----------------------------------------------------------------------------
# Suites
# ----------------------------------------------------------------------------


def _series_admissible(k, m, x):
    try:
        p = WhittakerParams(k, m, x)
    except WhittakerError:
        return False
    return x > 0 and not (p.b <= 0 and p.b == int(p.b))


def suite_series_vs_fd(grid: GridSpec, tol: float = 1e-6) -> list[VerifyReport]:
    out = []
    for k, m, x in grid.points(_series_admissible):
        def dk(k=k, m=m, x=x):
            s = deriv.dm_dkappa(WhittakerParams(k, m, x), route="series").value
            fd = fd_derivative(lambda kk: m_series(WhittakerParams(kk, m, x)).value, k)
            return make_report(f"fd:dMdk({_fmt(k, m, x)})", s, fd, tol, ("series", "fd"), "dMdk:series",
                               tol_abs=1e-9 * max(1.0, abs(m_series(WhittakerParams(k, m, x)).value)))

        def dm(k=k, m=m, x=x):
            s = deriv.dm_dmu(WhittakerParams(k, m, x), route="series").value
            fd = fd_derivative(lambda mm: m_series(WhittakerParams(k, mm, x)).value, m)
            return make_report(f"fd:dMdmu({_fmt(k, m, x)})", s, fd, tol, ("series", "fd"), "dMdmu:series",
                               tol_abs=1e-9 * max(1.0, abs(m_series(WhittakerParams(k, m, x)).value)))

        _guard(out, f"fd:dMdk({_fmt(k, m, x)})", "dMdk:series", dk)
        _guard(out, f"fd:dMdmu({_fmt(k, m, x)})", "dMdmu:series", dm)
    return out


def _closed_form_points():
    """(label, which, kappa, mu, evaluator(x), tol) for every derivative closed form."""
    pts = []
    for mu in (0.25, 0.3, 1.0, 1.5):
        k = -mu - 0.5
        pts.append(("dMdk:kappa=-mu-1/2", "k", k, mu, lambda x, mu=mu: deriv.dkm_kappa_minus_mu_half(mu, x), 1e-9))
        pts.append(("dMdmu:kappa=-mu-1/2", "m", k, mu, lambda x, mu=mu: deriv.dmm_kappa_minus_mu_half(mu, x), 1e-9))
    for n in range(1, 5):
        pts.append(("dMdk:(n,1/2)", "k", float(n), 0.5, lambda x, n=n: deriv.dkm_nhalf(n, x), 1e-9))
    for ell in range(-2, 4):
        for m in range(max(ell, 0), 4):
            k, mu = ell / 2, m + (1 - ell) / 2
            pts.append(("dMdk:(l,m)-family", "k", k, mu, lambda x, e=ell, m=m: families.dkm_ml(e, m, x), 1e-9))
            pts.append(("dMdmu:(l,m)-family", "m", k, mu, lambda x, e=ell, m=m: families.dmm_ml(e, m, x), 1e-9))
    for mu in (0.25, 0.3, 0.5, 1.0, 1.5, 2.0, 2.5):
        tol = 1e-7 if mu == int(mu) else 1e-9
        pts.append(("dMdmu:kappa=0", "m", 0.0, mu, lambda x, mu=mu: deriv.dmm_kappa0(mu, x), tol))
    return pts


def suite_catalog_vs_series(xs=X3, tol: float | None = None) -> list[VerifyReport]:
    out = []
    for label, which, k, mu, fn, t in _closed_form_points():
        for x in xs:
            def check(label=label, which=which, k=k, mu=mu, fn=fn, t=t, x=x):
                p = WhittakerParams(k, mu, x)
                s = (deriv.dm_dkappa if which == "k" else deriv.dm_dmu)(p, route="series").value
                return make_report(f"catalog:{label}({_fmt(k, mu, x)})", fn(x), s, tol or t,
                                   ("closed", "series"), label)

            _guard(out, f"catalog:{label}({_fmt(k, mu, x)})", label, check)
    # The dispatching entry points, all routes at once.
    for k, mu, which, fn in ((-0.75, 0.25, "k", deriv.dm_dkappa), (-0.75, 0.25, "m", deriv.dm_dmu),
                             (1.0, 0.5, "k", deriv.dm_dkappa), (0.5, 1.0, "k", deriv.dm_dkappa),
                             (0.5, 1.0, "m", deriv.dm_dmu), (0.0, 1.5, "m", deriv.dm_dmu)):
        def check(k=k, mu=mu, fn=fn, which=which):
            res = fn(WhittakerParams(k, mu, 1.0), route="all")
            vals = res.diagnostics["routes"]
            closed = vals.get("closed", math.nan)
            return make_report(f"catalog:dispatch-{which}({_fmt(k, mu)})", closed, vals["series"], tol or 1e-9,
                               ("closed", "series"), ";".join(res.citations))

        _guard(out, f"catalog:dispatch-{which}({_fmt(k, mu)})", "dispatch", check)
    for tid in ("T1", "TDkM", "T2A", "T2", "T3", "T4"):
        out.extend(_table_reports(tid, xs, tol or 1e-9))
    return out


def _admissible_integral(k, m, x):
    return m - k + 0.5 > 0 and m + k + 0.5 > 0 and x > 0


def suite_integral_relations(grid: GridSpec, tol: float = 1e-9) -> list[VerifyReport]:
    out = []
    for k, m, x in grid.points(_admissible_integral):
        tag = _fmt(k, m, x)

        def rel_checks(k=k, m=m, x=x, tag=tag):
            iq = [logint.i_integral(i, k, m, x, route="quad").value for i in (1, 2, 3, 4)]
            jq = [logint.j_integral(i, k, m, x, route="quad").value for i in (1, 2, 3, 4)]
            f3 = 4.0**m * math.exp(-x / 2)
            mval = m_series(WhittakerParams(k, m, x)).value
            j3_rhs = 4.0**m * (math.exp(-x / 2) * jq[0]
                               + math.log(4) / x ** (m + 0.5) * beta(m + k + 0.5, m - k + 0.5) * mval)
            q = ("quad", "quad")
            return [
                make_report(f"rel:I2=e^-x I1({tag})", iq[1], math.exp(-x) * iq[0], tol, q, "I2->I1"),
                make_report(f"rel:I3=4^mu e^-x/2 I1({tag})", iq[2], f3 * iq[0], tol, q, "I3->I1"),
                make_report(f"rel:I4=I3({tag})", iq[3], iq[2], tol, q, "I4=I3"),
                make_report(f"rel:J2=e^-x J1({tag})", jq[1], math.exp(-x) * jq[0], tol, q, "J2->J1"),
                make_report(f"rel:J4=J3({tag})", jq[3], jq[2], tol, q, "J4=J3"),
                make_report(f"rel:J3<-J1,M({tag})", jq[2], j3_rhs, tol, q, "J3->J1"),
                make_report(f"rel:I3-route({tag})", logint.i_integral(3, k, m, x).value, iq[2], tol,
                            ("relation", "quad"), "I3->I1"),
                make_report(f"rel:J3-route({tag})", logint.j_integral(3, k, m, x).value, jq[2], tol,
                            ("relation", "quad"), "J3->J1"),
            ]

        def recon(k=k, m=m, x=x, tag=tag):
            p = WhittakerParams(k, m, x)
            return [
                make_report(f"recon:dMdk<-I1({tag})", deriv.dm_dkappa(p, route="integral").value,
                            deriv.dm_dkappa(p, route="series").value, 1e-7, ("integral", "series"), "dMdk:I1"),
                make_report(f"recon:dMdmu<-J1({tag})", deriv.dm_dmu(p, route="integral").value,
                            deriv.dm_dmu(p, route="series").value, 1e-7, ("integral", "series"), "dMdmu:J1"),
            ]

        _guard(out, f"rel({tag})", "relations", rel_checks)
        _guard(out, f"recon({tag})", "reconstruction", recon)
    return out


_GENERIC_I = ((0.3, 0.9), (-0.2, 0.4), (0.0, 0.75), (0.25, 1.1), (0.5, 0.5), (-0.5, 1.0))
_ML_SMALL = ((0, 0), (0, 1), (1, 1), (1, 2), (-1, 0), (-1, 2), (2, 2))
_H_ML = ((0, 0), (0, 1), (1, 1), (1, 2))


def suite_closed_vs_quad(xs=X3, tol: float = 1e-8, tol_inf: float = 1e-6) -> list[VerifyReport]:
    out = []
    for x in xs:
        for k, m in _GENERIC_I:
            tag = _fmt(k, m, x)
            _guard(out, f"cq:I1general({tag})", "I1:general", lambda k=k, m=m, x=x, tag=tag: make_report(
                f"cq:I1general({tag})", logint.i1_general(k, m, x),
                logint.i_integral(1, k, m, x, route="quad").value, tol, ("closed", "quad"), "I1:general"))
            _guard(out, f"cq:J1general({tag})", "J1:general", lambda k=k, m=m, x=x, tag=tag: make_report(
                f"cq:J1general({tag})", logint.j1_general(k, m, x),
                logint.j_integral(1, k, m, x, route="quad").value, tol, ("closed", "quad"), "J1:general"))
            _guard(out, f"cq:I1closed({tag})", "I1:closed", lambda k=k, m=m, x=x, tag=tag: make_report(
                f"cq:I1closed({tag})", logint.i1_closed(k, m, x)[0].value,
                logint.i_integral(1, k, m, x, route="quad").value, tol, ("closed", "quad"),
                logint.i1_closed(k, m, x)[1]))
            _guard(out, f"cq:J1closed({tag})", "J1:closed", lambda k=k, m=m, x=x, tag=tag: make_report(
                f"cq:J1closed({tag})", logint.j1_closed(k, m, x)[0].value,
                logint.j_integral(1, k, m, x, route="quad").value, tol, ("closed", "quad"),
                logint.j1_closed(k, m, x)[1]))
        for ell, m in _ML_SMALL:
            k, mu = ell / 2, m + (1 - ell) / 2
            tag = f"{ell},{m},{x:g}"
            _guard(out, f"cq:I1ml({tag})", "I1:(l,m)", lambda ell=ell, m=m, k=k, mu=mu, x=x, tag=tag: make_report(
                f"cq:I1ml({tag})", families.i1_ml(ell, m, x),
                logint.i_integral(1, k, mu, x, route="quad").value, tol, ("closed", "quad"), "I1:(l,m)-family"))
            _guard(out, f"cq:J1ml({tag})", "J1:(l,m)", lambda ell=ell, m=m, k=k, mu=mu, x=x, tag=tag: make_report(
                f"cq:J1ml({tag})", families.j1_ml(ell, m, x),
                logint.j_integral(1, k, mu, x, route="quad").value, tol, ("closed", "quad"), "J1:(l,m)-family"))
        for mu in (0.0, 0.25, 0.5, 1.0, 1.5):
            tag = _fmt(mu, x)
            _guard(out, f"cq:J1kappa0({tag})", "J1:kappa=0", lambda mu=mu, x=x, tag=tag: make_report(
                f"cq:J1kappa0({tag})", logint.j1_kappa0(mu, x),
                logint.j_integral(1, 0.0, mu, x, route="quad").value, tol, ("closed", "quad"), "J1:kappa=0"))
            _guard(out, f"cq:J3kappa0({tag})", "J3:kappa=0", lambda mu=mu, x=x, tag=tag: make_report(
                f"cq:J3kappa0({tag})", logint.j3_closed(mu, x),
                logint.j_integral(3, 0.0, mu, x, route="quad").value, tol, ("closed", "quad"), "J3:kappa=0"))
        for ell, m in _H_ML:
            k, mu = ell / 2, m + (1 - ell) / 2
            for idx in (1, 2):
                tag = f"{idx};{ell},{m},{x:g}"

                def hchk(idx=idx, k=k, mu=mu, x=x, tag=tag):
                    q = logint.h_integral(idx, k, mu, x, route="quad").value
                    return [
                        make_report(f"cq:H{idx}ml({tag})", logint.h_integral(idx, k, mu, x, route="closed").value,
                                    q, tol_inf, ("closed", "quad"), f"H{idx}:(l,m)-family"),
                        make_report(f"cq:H{idx}rel({tag})", logint.h_integral(idx, k, mu, x, route="relation").value,
                                    q, tol_inf, ("relation", "quad"), f"H{idx}->I1"),
                    ]

                _guard(out, f"cq:H{idx}({tag})", "H", hchk)
    for tid in ("T3A", "T3B"):
        out.extend(_table_reports(tid, xs, tol))
    return out


INC_NU = (0.5, 1.0, 1.5, 2.0, 3.5)
INC_X = (0.5, 1.0, 2.0, 5.0)


def quad_log_gamma(nu, x):
    """int_0^x t^{nu-1} e^{-t} ln t dt by quadrature."""
    return quad_de(lambda t, da, db: math.exp((nu - 1) * math.log(da) - t) * math.log(da), 0.0, x, gaps=True).value


def suite_incgamma(tol: float = 1e-9) -> list[VerifyReport]:
    from .incgamma import IncGammaArgs

    out = []
    for nu in INC_NU:
        for x in INC_X:
            a = IncGammaArgs(nu, x)
            tag = _fmt(nu, x)
            g = gamma(nu)

            def comp(a=a, g=g, tag=tag, nu=nu):
                lo, up = incgamma.lower_gamma(a).value, incgamma.upper_gamma(a).value
                dl, du = incgamma.dgamma_dnu(a).value, incgamma.dGamma_dnu(a).value
                gp = g * digamma(nu)
                return [
                    make_report(f"inc:complement({tag})", lo + up, g, 1e-12, ("lower+upper", "Gamma"),
                                "Gamma+gamma", tol_abs=1e-12 * g),
                    make_report(f"inc:dcomplement({tag})", dl + du, gp, 1e-11, ("d lower+d upper", "Gamma psi"),
                                "dgamma+dGamma:complement", tol_abs=1e-11 * (1 + abs(gp))),
                ]

            _guard(out, f"inc:complement({tag})", "complement", comp)
            _guard(out, f"inc:fd({tag})", "dgamma:closed", lambda a=a, nu=nu, x=x, tag=tag: make_report(
                f"inc:fd({tag})", incgamma.dgamma_dnu(a).value,
                fd_derivative(lambda v: incgamma.lower_gamma(incgamma.IncGammaArgs(v, x)).value, nu),
                1e-7, ("closed", "fd"), "dgamma:closed"))
            _guard(out, f"inc:quad({tag})", "logint-gamma:closed", lambda nu=nu, x=x, tag=tag: make_report(
                f"inc:quad({tag})", incgamma.log_integral_gamma(nu, x).value, quad_log_gamma(nu, x), tol,
                ("closed", "quad"), "logint-gamma:closed"))
    for nu in (0.5, 1.0, 2.5):
        for x in (-3.0, -1.0, 0.0, 1.0, 3.0):
            tag = _fmt(nu, x)
            _guard(out, f"inc:logexp({tag})", "logint-exp:closed", lambda nu=nu, x=x, tag=tag: make_report(
                f"inc:logexp({tag})", incgamma.log_integral_exp(nu, x).value,
                quad_de(lambda t, da, db: math.exp(x * t + (nu - 1) * math.log(da)) * math.log(da), 0.0, 1.0,
                        gaps=True).value, tol, ("closed", "quad"), "logint-exp:closed"))
    _guard(out, "inc:spot(1,1)", "dgamma:closed", lambda: make_report(
        "inc:spot(1,1)", incgamma.dgamma_dnu(incgamma.IncGammaArgs(1.0, 1.0)).value, quad_log_gamma(1.0, 1.0),
        tol, ("closed", "quad"), "dgamma:closed"))
    _guard(out, "inc:large-x(2,30)", "dGamma:closed", lambda: make_report(
        "inc:large-x(2,30)", incgamma.dGamma_dnu(incgamma.IncGammaArgs(2.0, 30.0)).value, 0.0, 0.0,
        ("closed", "limit 0"), "dGamma:closed", tol_abs=1e-10))
    return out


MI_KAPPA = (0.5, 1.0, 1.5)
MI_X = (0.5, 1.0, 2.0, 4.0)


def suite_int_whittaker(tol: float = 1e-8) -> list[VerifyReport]:
    from .intwhittaker import IntWhittakerArgs

    out = []
    for k in MI_KAPPA:
        for n in range(4):
            full = intwhittaker.mi_complete(k, n)
            for x in MI_X:
                tag = _fmt(k, n, x)
                a = IntWhittakerArgs(k + n, k - 0.5, x)

                def chk(a=a, k=k, n=n, x=x, tag=tag, full=full):
                    lo, up = intwhittaker.mi_lower_reduced(k, n, x).value, intwhittaker.mi_upper_reduced(k, n, x).value
                    ql, qu = intwhittaker.mi_lower(a).value, intwhittaker.mi_upper(a).value
                    qr = intwhittaker.mi_lower_quad(-k - n, k - 0.5, x).value
                    rr = intwhittaker.mi_lower_reflected(k, n, x).value
                    return [
                        make_report(f"mi:lower({tag})", lo, ql, tol, ("reduced", "quad"), "Mi:reduced",
                                    tol_abs=tol * (1 + abs(ql))),
                        make_report(f"mi:upper({tag})", up, qu, tol, ("reduced", "quad"), "mi:reduced",
                                    tol_abs=tol * (1 + abs(qu))),
                        make_report(f"mi:complement({tag})", lo + up, full, 1e-12, ("lower+upper", "complete"),
                                    "Gamma+gamma", tol_abs=1e-12 * (1 + abs(full))),
                        make_report(f"mi:reflected({tag})", rr, qr, tol, ("reduced", "quad"), "Mi:reflected",
                                    tol_abs=tol * (1 + abs(qr))),
                    ]

                _guard(out, f"mi({tag})", "Mi", chk)
    for n in range(3):
        for x in (-0.5, -1.0, -2.0):
            tag = _fmt(1, n, x)
            _guard(out, f"mi:reflected-neg({tag})", "Mi:reflected", lambda n=n, x=x, tag=tag: make_report(
                f"mi:reflected-neg({tag})", intwhittaker.mi_lower_reflected(1.0, n, x).value,
                intwhittaker.mi_lower_quad(-1.0 - n, 0.5, x).value, tol, ("reduced", "quad via reflection"),
                "Mi:reflected", tol_abs=tol))
    for k in MI_KAPPA:
        for x1, x2 in ((0.5, 1.0), (1.0, 2.0), (2.0, 4.0)):
            tag = _fmt(k, x1, x2)

            def mono(k=k, x1=x1, x2=x2, tag=tag):
                from .intwhittaker import IntWhittakerArgs as A

                v1, v2 = intwhittaker.mi_lower(A(k, k - 0.5, x1)).value, intwhittaker.mi_lower(A(k, k - 0.5, x2)).value
                return make_report(f"mi:monotone({tag})", float(v2 >= v1), 1.0, 0.0, ("order", "expected"),
                                   "Mi monotone")

            _guard(out, f"mi:monotone({tag})", "Mi monotone", mono)
    return out


def table_tolerance(tid: str) -> float:
    """Default relative tolerance used for a table's closed-vs-independent comparison."""
    return {"T5": 1e-10, "T3A": 1e-8, "T3B": 1e-8}.get(tid, 1e-9)


def _table_reports(tid, xs, tol=None):
    out = []
    for row in tables.table_rows(tid):
        if row.closed is None:
            continue
        for x in xs:
            cid = f"table:{row.citation}@{x:g}"

            def chk(row=row, x=x, cid=cid):
                r = tables.evaluate_row(row, x)
                return make_report(cid, r.closed_value, r.independent_value, tol or table_tolerance(tid),
                                   ("closed", r.independent_route), row.citation)

            _guard(out, cid, row.citation, chk)
    return out


def suite_tables(xs=X3, tol: float | None = None) -> list[VerifyReport]:
    out = []
    for tid in tables.TABLE_IDS:
        out.extend(_table_reports(tid, xs, tol))
    return out


HG_AB = (0.5, 1.0, 1.5, 2.0, 3.5)
HG_X = (-2.0, -0.5, 0.5, 1.0, 3.0)


def suite_hypergeom(tol: float = 1e-6) -> list[VerifyReport]:
    out = []
    for a in HG_AB:
        for b in HG_AB:
            for x in HG_X:
                tag = _fmt(a, b, x)

                def chk(a=a, b=b, x=x, tag=tag):
                    g = hypergeom.g1(a, b, x).value
                    h = hypergeom.h1(a, b, x).value
                    fa = fd_derivative(lambda v: hypergeom.pfq(hypergeom.PFQArgs((v,), (b,), x)).value, a)
                    fb = fd_derivative(lambda v: hypergeom.pfq(hypergeom.PFQArgs((a,), (v,), x)).value, b)
                    res = [
                        make_report(f"hg:g1-fd({tag})", g, fa, tol, ("series", "fd"), "G1_def", tol_abs=1e-10),
                        make_report(f"hg:h1-fd({tag})", h, fb, tol, ("series", "fd"), "h1:series", tol_abs=1e-10),
                    ]
                    if not (b - a <= 0 and b - a == int(b - a)):
                        kum = hypergeom.g1_kummer(a, b, x).value
                        res.append(make_report(f"hg:kummer({tag})", g, kum, 1e-9, ("series", "kummer"),
                                               "G1 Kummer", tol_abs=1e-9 * (1 + abs(g))))
                    return res

                _guard(out, f"hg({tag})", "G1/H1", chk)
    for n in range(2, 13):
        for ell in range(1, n):
            exact = sum(
                (Fraction(_poch(ell, k)) * 2**k / _poch(ell + n, k) for k in range(n - ell)), Fraction(0)
            )
            out.append(make_report(f"hg:s_finite({n},{ell})", hypergeom.s_finite(n, ell), float(exact), 0.0,
                                   ("finite sum", "k-loop"), "S(n,l)", tol_abs=0.0))
    # Derivative shift of pFq against finite differences.
    for n in (1, 2):
        for x in (0.5, -1.0):
            def dchk(n=n, x=x):
                args = hypergeom.PFQArgs((1.0, 1.0), (2.0, 2.0), x)
                shifted, pref = hypergeom.pfq_nth_derivative(args, n)
                val = pref * hypergeom.pfq(shifted).value
                if n == 1:
                    fd = fd_derivative(lambda v: hypergeom.pfq(hypergeom.PFQArgs((1.0, 1.0), (2.0, 2.0), v)).value, x)
                else:
                    sh1, p1 = hypergeom.pfq_nth_derivative(args, 1)
                    fd = fd_derivative(lambda v: p1 * hypergeom.pfq(hypergeom.PFQArgs(sh1.upper, sh1.lower, v)).value, x)
                return make_report(f"hg:pfq-deriv({n},{x:g})", val, fd, tol, ("shift", "fd"), "pFq derivative")

            _guard(out, f"hg:pfq-deriv({n},{x:g})", "pFq derivative", dchk)
    # Catalog forms against the series.
    cat = [(1.0, 1.0), (2.0, 2.0), (2.5, 2.5), (1.0, 3.0), (1.0, 4.0), (2.0, 4.0), (1.0, 2.0), (3.0, 6.0), (2.0, 3.0)]
    for a, b in cat:
        for x in (0.5, 1.0, 2.0, -1.0):
            tag = _fmt(a, b, x)

            def cchk(a=a, b=b, x=x, tag=tag):
                res = []
                gr = hypergeom.g1_reduced(a, b, x)
                if gr is not None:
                    res.append(make_report(f"hg:g1cat({tag})", gr[0].value, hypergeom.g1(a, b, x).value, 1e-9,
                                           ("closed", "series"), gr[1]))
                hr = hypergeom.h1_reduced(a, b, x)
                if hr is not None:
                    res.append(make_report(f"hg:h1cat({tag})", hr[0].value, hypergeom.h1(a, b, x).value, 1e-9,
                                           ("closed", "series"), hr[1]))
                return res

            _guard(out, f"hg:cat({tag})", "catalog", cchk)
    for n in range(1, 6):
        for x in (0.5, 1.0, 2.0):
            tag = _fmt(n, x)
            _guard(out, f"hg:g1(1-n;2)({tag})", "g1:(1-n;2)", lambda n=n, x=x, tag=tag: make_report(
                f"hg:g1(1-n;2)({tag})", hypergeom.g1_one_minus_n(n, x), hypergeom.g1_pole_limit(n - 1, 2.0, x).value,
                1e-9, ("closed", "limit series"), "g1:(1-n;2)"))
    return out


def _poch(a, k):
    out = 1
    for j in range(k):
        out *= a + j
    return out


def suite_reductions(xs=X3, tol: float = 1e-10) -> list[VerifyReport]:
    out = []

    def add(cid, cite, kappa, mu, fn):
        for x in xs:
            def chk(x=x):
                # Absolute floor covers zeros of the polynomial families.
                return make_report(f"{cid}@{x:g}", fn(x), m_series(WhittakerParams(kappa, mu, x)).value, tol,
                                   ("closed", "series"), cite, tol_abs=1e-14)

            _guard(out, f"{cid}@{x:g}", cite, chk)

    for ell in range(-3, 7):
        for m in range(max(ell, 0), 7):
            k, mu = ell / 2, m + (1 - ell) / 2
            add(f"red:ml({ell},{m})", "M:(l,m)-family", k, mu, lambda x, e=ell, m=m: families.m_ml(e, m, x))
    for k0 in (0.5, 1.0, 1.5, 2.0):
        for n in range(6):
            add(f"red:laguerre({k0:g},{n})", "M:laguerre", k0 + n, k0 - 0.5,
                lambda x, k0=k0, n=n: m_laguerre(k0, n, x))
            add(f"red:laguerre-neg({k0:g},{n})", "M:laguerre-negated", -k0 - n, k0 - 0.5,
                lambda x, k0=k0, n=n: m_laguerre_negated(k0, n, x))
    for mu in (0.25, 0.5, 1.0, 1.5, 2.0, -0.25):
        add(f"red:bessel({mu:g})", "M:bessel", 0.0, mu, lambda x, mu=mu: m_bessel(mu, x))
    for k, mu in ((0.5, 1.0), (-1.0, 0.5), (0.0, 1.5)):
        add(f"red:dispatch({k:g},{mu:g})", "m_reduced", k, mu,
            lambda x, k=k, mu=mu: m_reduced(WhittakerParams(k, mu, x))[0].value)
    for k, mu in ((0.25, 0.5), (-1.0, 1.0), (0.5, 1.5), (0.3, 0.0)):
        add(f"red:reflect({k:g},{mu:g})", "m_reflect", k, mu,
            lambda x, k=k, mu=mu: m_reflect(WhittakerParams(k, mu, x)).value)
    out.extend(_table_reports("T5", xs, tol))
    return out


# ----------------------------------------------------------------------------
# Entry points
# ----------------------------------------------------------------------------


def _run_one(name, grid, tol):
    kw = {} if tol is None else {"tol": tol}
    if name == "series_vs_fd":
        return suite_series_vs_fd(grid or DEFAULT_GRIDS[name], **kw)
    if name == "integral_relations":
        return suite_integral_relations(grid or DEFAULT_GRIDS[name], **kw)
    if name == "catalog_vs_series":
        return suite_catalog_vs_series(**kw)
    if name == "closed_vs_quad":
        return suite_closed_vs_quad(**kw)
    if name == "incgamma":
        return suite_incgamma(**kw)
    if name == "int_whittaker":
        return suite_int_whittaker(**kw)
    if name == "tables":
        return suite_tables(**kw)
    if name == "hypergeom":
        return suite_hypergeom(**kw)
    if name == "reductions":
        return suite_reductions(**kw)
    raise DomainError(f"unknown suite {name!r}; choose from {SUITES + ('all',)}")


def coverage_report(touched: set[str]) -> VerifyReport:
    required = sorted(n for n, mod in OPERATIONS.items() if mod in COVERED_MODULES)
    missing = [n for n in required if n not in touched]
    return VerifyReport("coverage:operations", float(len(required) - len(missing)), float(len(required)),
                        float(len(missing)), 0.0, 0.0, not missing, ("touched", "registered"),
                        "missing: " + ",".join(missing) if missing else "all operations exercised")


@op("run_suite", _MOD)
def run_suite(name: str, grid: GridSpec | None = None, tol: float | None = None) -> list[VerifyReport]:
    """Run one suite (or ``all``) and return its reports in a deterministic order.

    ``all`` runs every suite and appends a coverage report that fails unless
    each registered operation of the library modules was called.
    """
    if name != "all":
        return _run_one(name, grid, tol)
    out: list[VerifyReport] = []
    with track() as touched:
        for s in SUITES:
            out.extend(_run_one(s, None, tol))
    out.append(coverage_report(touched))
    return out


@op("reproduce_table", _MOD)
def reproduce_table(table_id: str, xs: Iterable[float]) -> list[tables.RowResult]:
    """Evaluate every row of a table by its closed form and by an independent route."""
    xs = [float(x) for x in xs]
    for x in xs:
        if not 0 < x <= 50:
            raise DomainError(f"table x values must lie in (0, 50], got {x}")
    if table_id not in tables.TABLE_IDS:
        raise DomainError(f"table must be one of {tables.TABLE_IDS}, got {table_id!r}")
    out = []
    for row in tables.table_rows(table_id):
        for x in xs:
            out.append(tables.evaluate_row(row, x))
    return out


def summarize(reports: list[VerifyReport]) -> dict:
    failed = [r.check_id for r in reports if not r.passed]
    return {"total": len(reports), "passed": len(reports) - len(failed), "failed": failed}
