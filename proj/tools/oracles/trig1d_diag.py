#!/usr/bin/env python3
"""Diagnostics: W-averaged nu product formula variants; rational-limit conventions."""
import mpmath as mp
from trig1d_oracle import Gtrig, Ftrig, nu_pair_integral, rho

mp.mp.dps = 25

lam = mp.mpf('0.9')
x, y = mp.mpf(1), mp.mpf('0.7')
k1, k2 = 0, 1

a = Gtrig(lam, x, k1, k2)      # G(x)
b = Gtrig(lam, -x, k1, k2)     # G(-x)
c = Gtrig(lam, y, k1, k2)      # G(y)
d = Gtrig(lam, -y, k1, k2)     # G(-y)
F2 = Ftrig(lam, x, k1, k2) * Ftrig(lam, y, k1, k2)
print("G(x),G(-x),G(y),G(-y) =", [mp.nstr(v, 12) for v in (a, b, c, d)])
print("F(x)F(y)      =", mp.nstr(F2, 18))
print("(ac+ad+bc+bd)/4 =", mp.nstr((a*c + a*d + b*c + b*d)/4, 18))
print("(ac+bd)/2     =", mp.nstr((a*c + b*d)/2, 18))

Gfun = lambda z: Gtrig(lam, z, k1, k2)
Gneg = lambda z: Gtrig(lam, -z, k1, k2)
Ffun = lambda z: Ftrig(lam, z, k1, k2)

t_pp_G = nu_pair_integral(x, y, k1, k2, Gfun)
t_mm_G = nu_pair_integral(-x, -y, k1, k2, Gfun)
t_pm_G = nu_pair_integral(x, -y, k1, k2, Gfun)
t_mp_G = nu_pair_integral(-x, y, k1, k2, Gfun)
print("<nu_{x,y},G>     =", mp.nstr(t_pp_G, 18), " vs ac =", mp.nstr(a*c, 18))
print("<nu_{-x,-y},G>   =", mp.nstr(t_mm_G, 18), " vs bd =", mp.nstr(b*d, 18))
print("<nu_{x,-y},G>    =", mp.nstr(t_pm_G, 18), " vs ad =", mp.nstr(a*d, 18))
print("<nu_{-x,y},G>    =", mp.nstr(t_mp_G, 18), " vs bc =", mp.nstr(b*c, 18))
print("<nu_{x,y},G(-.)> =", mp.nstr(nu_pair_integral(x, y, k1, k2, Gneg), 18))

four = (nu_pair_integral(x, y, k1, k2, Ffun)
        + nu_pair_integral(-x, -y, k1, k2, Ffun)
        + nu_pair_integral(x, -y, k1, k2, Ffun)
        + nu_pair_integral(-x, y, k1, k2, Ffun)) / 4
two = (nu_pair_integral(x, y, k1, k2, Ffun)
       + nu_pair_integral(-x, -y, k1, k2, Ffun)) / 2
print("quad-average <.,F> =", mp.nstr(four, 18))
print("diag-average <.,F> =", mp.nstr(two, 18))

print("== rational limit conventions, (lam,x,k)=(1,1,1) ==")
Erat = mp.e ** (-1) * mp.hyp1f1(2, 3, 2)
for eps in ('0.1', '0.01', '0.001'):
    e = mp.mpf(eps)
    va = Gtrig(1 / e, e, 1, 0)          # (k1,k2)=(k,0)
    vb = Gtrig(1 / e, e, 0, 1)          # (k1,k2)=(0,k)
    print(f"eps={eps}: (k,0) err={mp.nstr(abs(va-Erat),10)}   "
          f"(0,k) err={mp.nstr(abs(vb-Erat),10)}")
