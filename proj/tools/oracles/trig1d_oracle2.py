#!/usr/bin/env python3
"""Supplementary oracle pins for the trigonometric 1D module:
large-argument branches, resonant spectral parameters, forward transform."""
import mpmath as mp
from trig1d_oracle import Ftrig, Gtrig, cfun, delta_weight

mp.mp.dps = 25
f18 = lambda v: mp.nstr(v, 20)

k1, k2 = 1, mp.mpf('0.5')
print("G0(12)  =", f18(Gtrig(0, 12, k1, k2)))
print("G0(20)  =", f18(Gtrig(0, 20, k1, k2)))
print("F(0.7,30) =", f18(Ftrig(mp.mpf('0.7'), 30, k1, k2)))
print("c(0.7)  =", f18(cfun(mp.mpf('0.7'), k1, k2)))
print("ratio F(40)/e^{-0.3*40} =",
      f18(Ftrig(mp.mpf('0.7'), 40, k1, k2) / mp.e ** (mp.mpf('-0.3') * 40)))
print("G(0.5,10) =", f18(Gtrig(mp.mpf('0.5'), 10, k1, k2)))      # 2 lam = 1
print("G(0.5,-9.5) =", f18(Gtrig(mp.mpf('0.5'), mp.mpf('-9.5'), k1, k2)))
print("F(0.25,50) =", f18(Ftrig(mp.mpf('0.25'), 50, k1, k2)))
print("F(1.3,50)  =", f18(Ftrig(mp.mpf('1.3'), 50, k1, k2)))

f = lambda x: mp.e ** (-x ** 2) * (1 + mp.mpf('0.4') * x)
def Hf(lam):
    return mp.quad(lambda x: delta_weight(x, k1, k2) * f(x)
                   * Gtrig(1j * lam, -x, k1, k2), [-6, 0, 6])
v = Hf(mp.mpf('1.1'))
print("Hf(1.1) re =", f18(mp.re(v)))
print("Hf(1.1) im =", f18(mp.im(v)))
v0 = Hf(mp.mpf(0))
print("Hf(0) re =", f18(mp.re(v0)), " im =", f18(mp.im(v0)))
