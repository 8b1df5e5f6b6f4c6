#!/usr/bin/env python3
"""Check: symmetric (W-invariant) Cherednik pair uses the same c_trig constant."""
import mpmath as mp
import numpy as np
from trig1d_oracle import Ftrig, cfun, c0const, delta_weight, rho

mp.mp.dps = 16
nodes, weights = np.polynomial.legendre.leggauss(60)

def sym_roundtrip(k1, k2, x0):
    ctrig2 = 2 ** (4 * (mp.mpf(k1) + mp.mpf(k2)) + 1) \
        * mp.gamma(mp.mpf(k1) + mp.mpf(k2) + mp.mpf(1) / 2) ** 2
    f = lambda x: mp.e ** (-x ** 2) * (1 + mp.mpf('0.3') * x ** 2)   # even bump
    def Hf(lam):
        return mp.quad(lambda x: delta_weight(x, k1, k2) * f(x)
                       * Ftrig(1j * lam, x, k1, k2), [-6, 0, 6])
    def dens_sym(lam):
        ci = cfun(1j * lam, k1, k2)
        return c0const(k1, k2) ** 2 / (ci * mp.conj(ci))
    panels = [(-22, -8), (-8, 0), (0, 8), (8, 22)]
    I = mp.mpf(0)
    for a, b in panels:
        mid, half = (a + b) / 2, (b - a) / 2
        for t, w in zip(nodes, weights):
            l = mp.mpf(mid) + mp.mpf(half) * mp.mpf(t)
            if abs(l) < 1e-9:
                continue
            I += mp.mpf(half) * mp.mpf(w) * dens_sym(l) * Hf(l) * Ftrig(1j * l, x0, k1, k2)
    return I / ctrig2, f(x0)

for kc in ((1, mp.mpf('0.5')), (0, 1)):
    got, want = sym_roundtrip(kc[0], kc[1], mp.mpf('0.4'))
    print(f"k={kc}: inverse={mp.nstr(got, 16)} f(x0)={mp.nstr(want, 16)} "
          f"ratio={mp.nstr(got / want, 16)}")
