"""Compare the independent routes for M derivatives and the I/J integrals on a grid.

Usage: python3 scripts/route_agreement.py
Prints the largest relative spread between routes for each quantity.
"""

import itertools

from whittaker import WhittakerError, WhittakerParams, dm_dkappa, dm_dmu, i_integral, j_integral
from whittaker.tables import rel_diff
from whittaker.logint import I_ROUTES

KAPPAS = (-0.5, 0.0, 0.25, 0.5, 1.0)
MUS = (0.5, 1.0, 1.5, 2.0)
XS = (0.5, 1.0, 2.0, 5.0)


def spread(values):
    vals = list(values)
    return max((rel_diff(a, b) for a, b in itertools.combinations(vals, 2)), default=0.0)


def main():
    worst = {}
    for k, mu, x in itertools.product(KAPPAS, MUS, XS):
        p = WhittakerParams(k, mu, x)
        for name, fn in (("dM/dkappa", dm_dkappa), ("dM/dmu", dm_dmu)):
            res = fn(p, route="all")
            s = spread(res.diagnostics["routes"].values())
            worst[name] = max(worst.get(name, (0.0, None)), (s, (k, mu, x)), key=lambda t: t[0])
        for idx, (kind, fn) in itertools.product((1, 2, 3, 4), (("I", i_integral), ("J", j_integral))):
            vals = []
            for route in I_ROUTES:
                try:
                    vals.append(fn(idx, k, mu, x, route=route).value)
                except WhittakerError:
                    pass
            if len(vals) > 1:
                name = f"{kind}{idx}"
                s = spread(vals)
                worst[name] = max(worst.get(name, (0.0, None)), (s, (k, mu, x)), key=lambda t: t[0])
    for name, (s, at) in worst.items():
        print(f"{name:10s} max_rel_spread={s:.2e} at (kappa, mu, x)={at}")


if __name__ == "__main__":
    main()
