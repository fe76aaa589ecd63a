"""Command-line frontend: ``eval``, ``table`` and ``verify``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
CSV columns for ``eval``: target, kappa, mu, a, b, nu, n, x, value, abs_err_est, route, citations.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

from . import deriv, hypergeom, incgamma, intwhittaker, logint, verify
from .errors import WhittakerError
from .incgamma import IncGammaArgs
from .intwhittaker import IntWhittakerArgs
from .kernels import EvalResult, KernelValue
from .whittaker import WhittakerParams, m_reduced, m_reflect, m_series

TARGETS = (
    "m", "dmdk", "dmdmu", "g1", "h1",
    "i1", "i2", "i3", "i4", "j1", "j2", "j3", "j4",
    "h1inf", "h2inf", "gammainc-dnu", "Gammainc-dnu", "mi", "mi-upper",
)
PARAM_NAMES = ("kappa", "mu", "a", "b", "nu", "n")
CSV_COLUMNS = ("target",) + PARAM_NAMES + ("x", "value", "abs_err_est", "route", "citations")
REQUIRED = {
    "m": ("kappa", "mu"), "dmdk": ("kappa", "mu"), "dmdmu": ("kappa", "mu"),
    "g1": ("a", "b"), "h1": ("a", "b"),
    "gammainc-dnu": ("nu",), "Gammainc-dnu": ("nu",),
    "mi": ("kappa", "mu"), "mi-upper": ("kappa", "mu"),
}
ROUTES = {
    "m": ("series", "closed", "reflect"),
    "dmdk": deriv.ROUTES, "dmdmu": deriv.ROUTES,
    "g1": ("series", "kummer", "closed"), "h1": ("series", "closed"),
    "h1inf": logint.H_ROUTES, "h2inf": logint.H_ROUTES,
    "gammainc-dnu": ("closed", "quad"), "Gammainc-dnu": ("closed",),
    "mi": ("quad", "reduced"), "mi-upper": ("quad", "reduced"),
}
for _t in ("i1", "i2", "i3", "i4", "j1", "j2", "j3", "j4"):
    REQUIRED[_t] = ("kappa", "mu")
    ROUTES[_t] = logint.I_ROUTES
for _t in ("h1inf", "h2inf"):
    REQUIRED[_t] = ("kappa", "mu")


MU_TARGETS = ("m", "dmdk", "dmdmu") + tuple(f"{c}{i}" for c in "ij" for i in range(1, 5)) + ("h1inf", "h2inf")


class UsageError(Exception):
    """Bad command-line input (exit code 2)."""


@dataclass
class Record:
    target: str
    params: dict
    x: float
    value: float
    abs_err_est: float
    route: str
    citations: list = field(default_factory=list)


def parse_xs(spec: str) -> list[float]:
    """Parse ``v``, ``v1,v2,...`` or an inclusive range ``start:stop:step``."""
    try:
        if ":" in spec:
            parts = [float(p) for p in spec.split(":")]
            if len(parts) != 3:
                raise UsageError(f"range spec must be start:stop:step, got {spec!r}")
            start, stop, step = parts
            if step <= 0 or stop < start:
                raise UsageError(f"range spec needs step > 0 and stop >= start, got {spec!r}")
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            return [start + i * step for i in range(count)]
        return [float(p) for p in spec.split(",") if p.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse --x {spec!r}: {exc}") from None


def _n_of(p):
    n = p.get("n")
    if n is None:
        return None
    if n != int(n) or n < 0:
        raise UsageError(f"--n must be a nonnegative integer, got {n}")
    return int(n)


def _reduction_index(kappa, mu):
    """Split (kappa, mu) = (k0 + n, k0 - 1/2) into (k0, n), else None."""
    k0 = mu + 0.5
    n = kappa - k0
    if k0 > 0 and abs(n - round(n)) < 1e-12 and round(n) >= 0:
        return k0, int(round(n))
    return None


def _eval_m(p, x, route):
    wp = WhittakerParams(p["kappa"], p["mu"], x)
    route = route or ("series" if x > 0 else "reflect")
    if route == "series":
        if x < 0:
            raise WhittakerError("the series route needs x >= 0; use --route reflect for x < 0")
        return m_series(wp), "series", ["M:series"]
    if route == "reflect":
        return m_reflect(wp), "reflect", ["M:reflection"]
    hit = m_reduced(wp)
    if hit is None:
        raise WhittakerError(f"no closed form for M at kappa={p['kappa']}, mu={p['mu']}, x={x}")
    return hit[0], "closed", [hit[1]]


def _eval_g1h1(target, p, x, route):
    a, b = p["a"], p["b"]
    route = route or "series"
    if route == "series":
        kv = (hypergeom.g1 if target == "g1" else hypergeom.h1)(a, b, x)
        return kv, "series", [f"{target.upper()}:series"]
    if route == "kummer":
        return hypergeom.g1_kummer(a, b, x), "kummer", ["G1:kummer"]
    hit = (hypergeom.g1_reduced if target == "g1" else hypergeom.h1_reduced)(a, b, x)
    if hit is None:
        raise WhittakerError(f"no closed form for {target} at a={a}, b={b}")
    return hit[0], "closed", [hit[1]]


def _eval_mi(target, p, x, route):
    kappa, mu = p["kappa"], p["mu"]
    route = route or "quad"
    if route == "quad":
        args = IntWhittakerArgs(kappa, mu, x)
        kv = intwhittaker.mi_lower(args) if target == "mi" else intwhittaker.mi_upper(args)
        return kv, "quad", [f"{target}:quad"]
    split = _reduction_index(kappa, mu)
    if split is None:
        raise WhittakerError(
            f"the reduced route needs kappa = k0 + n and mu = k0 - 1/2 with k0 > 0, n >= 0; got "
            f"kappa={kappa}, mu={mu}"
        )
    fn = intwhittaker.mi_lower_reduced if target == "mi" else intwhittaker.mi_upper_reduced
    return fn(split[0], split[1], x), "reduced", [f"{target}:incomplete-gamma"]


def evaluate(target: str, params: dict, x: float, route: str | None = None) -> Record:
    """Evaluate one target at one x and wrap it in a schema-stable record."""
    if route is not None and route not in ROUTES[target]:
        raise UsageError(f"route for {target} must be one of {ROUTES[target]}, got {route!r}")
    p = params
    mu = p.get("mu")
    if mu is not None and target in MU_TARGETS and mu < 0 and (2 * mu) == int(2 * mu):
        raise UsageError(f"M_(kappa,mu) needs 1 + 2mu off the poles (2mu != -1, -2, ...), got mu={mu}")
    if target == "m":
        kv, used, cites = _eval_m(p, x, route)
    elif target in ("dmdk", "dmdmu"):
        fn = deriv.dm_dkappa if target == "dmdk" else deriv.dm_dmu
        res: EvalResult = fn(WhittakerParams(p["kappa"], p["mu"], x), route=route or "series")
        kv, used, cites = KernelValue(res.value, res.abs_err_est), res.route, list(res.citations)
    elif target in ("g1", "h1"):
        kv, used, cites = _eval_g1h1(target, p, x, route)
    elif target[0] in "ij" and target[1:].isdigit():
        idx = int(target[1])
        fn = logint.i_integral if target[0] == "i" else logint.j_integral
        kv = fn(idx, p["kappa"], p["mu"], x, route=route)
        used = route or ("closed" if idx == 1 else "relation")
        cites = [f"{target.upper()}:{used}"]
    elif target in ("h1inf", "h2inf"):
        idx = int(target[1])
        kv = logint.h_integral(idx, p["kappa"], p["mu"], x, route=route or "auto")
        used, cites = route or "auto", [f"H{idx}:{route or 'auto'}"]
    elif target == "gammainc-dnu":
        if route == "quad":
            kv, used = KernelValue(verify.quad_log_gamma(p["nu"], x)), "quad"
        else:
            kv, used = incgamma.dgamma_dnu(IncGammaArgs(p["nu"], x)), "closed"
        cites = ["dgamma:closed"]
    elif target == "Gammainc-dnu":
        kv, used, cites = incgamma.dGamma_dnu(IncGammaArgs(p["nu"], x)), "closed", ["dGamma:closed"]
    else:
        kv, used, cites = _eval_mi(target, p, x, route)
    shown = {k: v for k, v in p.items() if v is not None}
    return Record(target, shown, float(x), float(kv.value), float(kv.abs_err_est), used, cites)


# ----------------------------------------------------------------------------
# Formatting
# ----------------------------------------------------------------------------


def _g(v, digits):
    if isinstance(v, float):
        if math.isnan(v) or math.isinf(v):
            return str(v)
        return float(f"{v:.{digits}g}")
    return v


def _json_obj(obj, digits=17):
    if isinstance(obj, dict):
        return {k: _json_obj(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_obj(v, digits) for v in obj]
    return _g(obj, digits)


def _text(v):
    return f"{v:.10g}" if isinstance(v, float) else str(v)


def format_records(records: list[Record], fmt: str) -> str:
    if fmt == "json":
        rows = [_json_obj(r.__dict__) for r in records]
        return json.dumps(rows[0] if len(rows) == 1 else rows, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in records:
            w.writerow([r.target] + [repr(float(r.params[k])) if k in r.params else "" for k in PARAM_NAMES]
                       + [repr(r.x), repr(r.value), repr(r.abs_err_est), r.route, ";".join(r.citations)])
        return buf.getvalue().rstrip("\n")
    lines = []
    for r in records:
        ps = " ".join(f"{k}={_text(v)}" for k, v in r.params.items())
        lines.append(f"{r.target}({ps}, x={_text(r.x)}) = {_text(r.value)} "
                     f"+- {r.abs_err_est:.2g} [{r.route}; {', '.join(r.citations)}]")
    return "\n".join(lines)


TABLE_COLUMNS = ("table", "kappa", "mu", "x", "closed_value", "independent_value", "rel_diff", "tol",
                 "status", "independent_route", "citation", "reason")


def _table_rows(rows, fmt):
    if fmt == "json":
        return json.dumps([_json_obj(r) for r in rows], indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(TABLE_COLUMNS)
        for r in rows:
            w.writerow([repr(r[c]) if isinstance(r[c], float) else r[c] for c in TABLE_COLUMNS])
        return buf.getvalue().rstrip("\n")
    lines = []
    for r in rows:
        if r["status"] == "skipped":
            lines.append(f"{r['table']} ({_text(r['kappa'])}, {_text(r['mu'])}) x={_text(r['x'])}: "
                         f"SKIPPED ({r['reason']})")
        else:
            lines.append(f"{r['table']} ({_text(r['kappa'])}, {_text(r['mu'])}) x={_text(r['x'])}: "
                         f"closed={_text(r['closed_value'])} {r['independent_route']}="
                         f"{_text(r['independent_value'])} rel_diff={r['rel_diff']:.2e} {r['status'].upper()}")
    return "\n".join(lines)


def _reports(reports, fmt):
    if fmt == "json":
        return json.dumps({"summary": verify.summarize(reports),
                           "reports": [_json_obj(r.as_dict()) for r in reports]}, indent=2)
    if fmt == "csv":
        cols = ("check_id", "lhs", "rhs", "abs_diff", "rel_diff", "tol", "passed", "routes", "citation")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in reports:
            d = r.as_dict()
            d["routes"] = "|".join(d["routes"])
            w.writerow([repr(d[c]) if isinstance(d[c], float) else d[c] for c in cols])
        return buf.getvalue().rstrip("\n")
    s = verify.summarize(reports)
    lines = [f"FAIL {r.check_id}: lhs={_text(r.lhs)} rhs={_text(r.rhs)} rel={r.rel_diff:.2e} "
             f"tol={r.tol:g} [{r.citation}]" for r in reports if not r.passed]
    lines.append(f"{s['passed']}/{s['total']} checks passed")
    return "\n".join(lines)


# ----------------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------------


def _parser():
    ap = argparse.ArgumentParser(prog="whittaker", description="Whittaker M, its parameter derivatives "
                                 "and related log integrals.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default=None)
        p.add_argument("--out", help="write results to this file instead of standard output")

    e = sub.add_parser("eval", help="evaluate a quantity on a grid of x")
    e.add_argument("target", choices=TARGETS)
    for name in PARAM_NAMES:
        e.add_argument(f"--{name}", type=float)
    e.add_argument("--x", required=True, help="value, comma list, or inclusive start:stop:step")
    e.add_argument("--route", help="; ".join(f"{t}: {'/'.join(r)}" for t, r in ROUTES.items()))
    common(e)

    t = sub.add_parser("table", help="reproduce a table by closed form and an independent route")
    t.add_argument("table_id", choices=verify.tables.TABLE_IDS)
    t.add_argument("--x", default="1", help="value, comma list, or inclusive start:stop:step in (0, 50]")
    t.add_argument("--tol", type=float, help="override the per-table relative tolerance")
    common(t)

    v = sub.add_parser("verify", help="run cross-route verification suites")
    v.add_argument("--suite", default="all", choices=verify.SUITES + ("all",))
    v.add_argument("--tol", type=float, help="override the suite tolerance")
    common(v)
    return ap


def _cmd_eval(ns):
    missing = [k for k in REQUIRED[ns.target] if getattr(ns, k) is None]
    if missing:
        raise UsageError(f"{ns.target} needs " + ", ".join(f"--{k}" for k in missing))
    params = {k: getattr(ns, k) for k in PARAM_NAMES if getattr(ns, k) is not None}
    _n_of(params)
    records = [evaluate(ns.target, params, x, ns.route) for x in parse_xs(ns.x)]
    return format_records(records, ns.format or "json"), 0


def _cmd_table(ns):
    xs = parse_xs(ns.x)
    tol = ns.tol if ns.tol is not None else verify.table_tolerance(ns.table_id)
    rows = []
    for r in verify.reproduce_table(ns.table_id, xs):
        d = {c: getattr(r, c, None) for c in TABLE_COLUMNS if c != "tol"}
        d["tol"] = tol
        if r.status != "skipped":
            d["status"] = "pass" if r.rel_diff < tol else "fail"
        rows.append(d)
    code = 1 if any(d["status"] == "fail" for d in rows) else 0
    return _table_rows(rows, ns.format or "text"), code


def _cmd_verify(ns):
    reports = verify.run_suite(ns.suite, tol=ns.tol)
    code = 0 if all(r.passed for r in reports) else 1
    return _reports(reports, ns.format or "text"), code


def main(argv: list[str] | None = None) -> int:
    ap = _parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = {"eval": _cmd_eval, "table": _cmd_table, "verify": _cmd_verify}[ns.command](ns)
    except (UsageError, WhittakerError) as exc:
        print(f"whittaker: error: {exc}", file=sys.stderr)
        return 2
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
