"""Regenerate tests/_oracle.py: reference values from mpmath at 30 digits."""
from mpmath import *
mp.dps = 30
h = mpf(1)/2
def M(k,m,x): return x**(m+h)*exp(-x/2)*hyp1f1(h+m-k,1+2*m,x)
def q(f, pts): return quad(f, pts, maxdegree=12)

O = {}
def put(key, v): O[key] = float(v)

# kernels
put(("lngamma", 7.3), loggamma(7.3))
for z in (0.5, 2.7, 5.0, -1.5): put(("digamma", z), digamma(z))
put(("harmonic", 1.5), harmonic(1.5))
for x in (1.0, 2.5, 0.1): put(("shi", x), shi(x)); put(("chi", x), chi(x))
for x in (1.0, -1.0, -3.5, 10.0, 0.2): put(("ei", x), ei(x))
for nu, x in ((0.5,1.0),(1.3,2.0),(0.0,5.0),(-0.4,1.5)): put(("bessel_i", nu, x), besseli(nu, x))
for nu, x in ((1.5,3.0),(0.0,1.0),(2.0,7.5)): put(("bessel_j", nu, x), besselj(nu, x))
for nu, x in ((0.5,2.0),(1.0,1.5),(0.3,0.7),(0.0,0.5),(2.0,3.0)): put(("bessel_k", nu, x), besselk(nu, x))
for nu, x in ((0.5,1.0),(1.0,2.0),(0.3,4.0),(0.0,0.5)): put(("dbessel_i", nu, x), diff(lambda v: besseli(v, x), nu))
for x in (1.0, 3.0, -0.5): put(("dawson", x), sqrt(pi)/2*exp(-x*x)*erfi(x))
put(("laguerre", 3, 0.5, 1.7), laguerre(3, 0.5, 1.7))
put(("laguerre", 5, 1.0, 4.0), laguerre(5, 1.0, 4.0))

# hypergeom
put(("pfq", (1.0,1.0),(2.0,2.0), -1.0), hyp2f2(1,1,2,2,-1))
put(("pfq", (1.0,),(2.0,), 2.0), hyp1f1(1,2,2))
put(("pfq", (0.5,),(1.5,), -3.0), hyp1f1(0.5,1.5,-3))
put(("pfq", (2.5,1.5),(3.5,0.7), 1.2), hyp2f2(2.5,1.5,3.5,0.7,1.2))
put(("pfq", (),(1.5,), 2.0), hyp0f1(1.5,2.0))
put(("pfq", (-3.0,),(2.0,), 1.5), hyp1f1(-3,2,1.5))
for a,b,x in ((1.0,1.0,1.0),(1.0,2.0,1.0),(2.5,3.5,-2.0),(0.3,1.7,4.0),(2.0,5.0,0.5),(-0.5,1.5,2.0)):
    put(("g1", a,b,x), diff(lambda v: hyp1f1(v,b,x), a))
    put(("h1", a,b,x), diff(lambda v: hyp1f1(a,v,x), b))

# M and derivatives
MP = [(0.0,0.5,2.0),(0.25,-0.25,1.0),(0.3,0.7,1.5),(-1.2,0.4,3.0),(1.0,1.5,10.0),(-0.5,2.0,30.0),(2.0,0.5,0.5),(1.5,-0.25,2.0)]
for k,m,x in MP:
    put(("M", k,m,x), M(k,m,x))
    put(("dMdk", k,m,x), diff(lambda v: M(v,m,x), k))
    put(("dMdmu", k,m,x), diff(lambda v: M(k,v,x), m))
# pole-limit points of the series derivatives
for k,m,x in ((2.0,0.5,1.0),(1.5,0.0,2.0),(3.0,0.5,0.7)):
    put(("dMdk", k,m,x), diff(lambda v: M(v,m,x), k))
    put(("dMdmu", k,m,x), diff(lambda v: M(k,v,x), m))
put(("M", 0.5, 0.5, -1.0), M(0.5, 0.5, mpf(-1)))
put(("M", 0.0, 1.5, -2.0), M(0.0, 1.5, mpf(-2)))

# log integrals
def Iq(idx,k,m,x):
    p, r = m-k-h, m+k-h
    if idx == 1: return q(lambda t: exp(x*t)*t**p*(1-t)**r*log((1-t)/t), [0,h,1])
    if idx == 2: return q(lambda t: exp(-x*t)*t**r*(1-t)**p*log(t/(1-t)), [0,h,1])
    if idx == 3: return q(lambda t: exp(x*t/2)*(1+t)**p*(1-t)**r*log((1-t)/(1+t)), [-1,0,1])
    return q(lambda t: exp(-x*t/2)*(1+t)**r*(1-t)**p*log((1+t)/(1-t)), [-1,0,1])
def Jq(idx,k,m,x):
    p, r = m-k-h, m+k-h
    if idx == 1: return q(lambda t: exp(x*t)*t**p*(1-t)**r*log(t*(1-t)), [0,h,1])
    if idx == 2: return q(lambda t: exp(-x*t)*t**r*(1-t)**p*log(t*(1-t)), [0,h,1])
    if idx == 3: return q(lambda t: exp(x*t/2)*(1+t)**p*(1-t)**r*log(1-t*t), [-1,0,1])
    return q(lambda t: exp(-x*t/2)*(1+t)**r*(1-t)**p*log(1-t*t), [-1,0,1])
for k,m,x in ((0.0,0.5,1.0),(0.5,1.0,2.0),(0.3,0.9,1.0),(-0.2,0.4,0.5),(0.0,0.0,1.0)):
    for idx in (1,2,3,4):
        put(("I", idx,k,m,x), Iq(idx,k,m,x)); put(("J", idx,k,m,x), Jq(idx,k,m,x))
def Hq(idx,k,m,x):
    if idx == 1:
        f = lambda t: exp(-t)*t**(-k-h)*besseli(2*m, 2*sqrt(x*t))*log(t)
    else:
        f = lambda t: exp(-t)*t**(k-h)*besselj(2*m, 2*sqrt(x*t))*log(t)
    return quad(f, [0,1,4,16,64,inf], maxdegree=12)
for idx in (1,2):
    for k,m,x in ((0.0,0.5,1.0),(0.5,1.0,2.0),(0.0,1.5,0.5),(0.3,0.9,1.0)):
        put(("H", idx,k,m,x), Hq(idx,k,m,x))

# incomplete gamma
for nu,x in ((1.0,1.0),(2.0,1.0),(0.5,2.0),(3.5,5.0),(1.5,0.1)):
    put(("lower", nu,x), gammainc(nu,0,x)); put(("upper", nu,x), gammainc(nu,x,inf))
    put(("dlower", nu,x), diff(lambda v: gammainc(v,0,x), nu)); put(("dupper", nu,x), diff(lambda v: gammainc(v,x,inf), nu))
for nu,x in ((1.0,1.0),(1.0,-1.0),(2.5,3.0),(0.5,-2.0)):
    put(("logexp", nu,x), quad(lambda t: exp(x*t)*t**(nu-1)*log(t), [0,1]))
put(("upper_any", -1.5, 2.0), gammainc(-1.5, 2.0, inf))
put(("upper_any", 0.0, 1.0), gammainc(0, 1.0, inf))
put(("upper_any", -2.0, 0.7), gammainc(-2, 0.7, inf))

# integral Whittaker
for k,m,x in ((0.5,0.0,2.0),(2.0,0.5,2.0),(0.3,0.7,1.5),(1.5,1.0,4.0),(-1.0,0.5,1.0)):
    put(("Mi", k,m,x), quad(lambda t: M(k,m,t)/t, [0,x]))
for k,m,x in ((0.5,0.0,2.0),(2.0,0.5,2.0),(3.0,0.5,1.0),(3.5,1.0,3.0)):
    put(("mi", k,m,x), quad(lambda t: M(k,m,t)/t, [x, x+10, x+40, inf]))
put(("Mi", -2.0, 0.5, -2.0), quad(lambda t: M(-2.0, 0.5, t)/t, [0, -2.0]))

import pprint, sys
OUT = sys.argv[1] if len(sys.argv) > 1 else "tests/_oracle.py"
with open(OUT,"w") as fh:
    fh.write('"""Reference values computed once with mpmath at 30 significant digits.\n\n'
             'Sources: hyp1f1/hyp2f2/besseli/besselj/besselk/shi/chi/ei/gammainc,\n'
             'numerical differentiation (mpmath.diff) and tanh-sinh quadrature (mpmath.quad).\n'
             'Regenerate with scripts/make_oracle.py.\n"""\n\n')
    fh.write("VALUES = " + pprint.pformat(O, width=110) + "\n")
print(len(O))
