#!/usr/bin/env python3
"""Reference values for the numerics layer, computed with mpmath at 30 digits.

Run:  python3 tools/oracles/numerics_oracle.py
Paste the printed constants into tests/test_numerics.cpp.
"""
import mpmath as mp

mp.mp.dps = 30


def show(label, v):
    if isinstance(v, mp.mpc):
        print(f"{label:<44s} {mp.nstr(v.real, 20):>24s}  {mp.nstr(v.imag, 20):>24s}")
    else:
        print(f"{label:<44s} {mp.nstr(v, 20):>24s}")


print("# gamma")
show("gamma(0.5)", mp.gamma("0.5"))
show("gamma(10.3)", mp.gamma("10.3"))
show("gamma(-2.5)", mp.gamma("-2.5"))
show("gamma(1e-3)", mp.gamma("0.001"))
show("loggamma(120.7)", mp.loggamma("120.7"))
show("gamma(0.5+1.5i)", mp.gamma(mp.mpc("0.5", "1.5")))
show("gamma(-1.5+0.5i)", mp.gamma(mp.mpc("-1.5", "0.5")))
show("|gamma(2.5i)|", abs(mp.gamma(mp.mpc(0, "2.5"))))

print("# normalized modified bessel j_nu(z) = 0F1(nu+1; z^2/4)")
show("j_{1/2}(1) = sinh(1)/1", mp.hyp0f1(mp.mpf(3) / 2, mp.mpf(1) / 4))
show("sinh(1)", mp.sinh(1))
show("j_{-1/2}(2) = cosh(2)", mp.hyp0f1(mp.mpf(1) / 2, 1))
show("cosh(2)", mp.cosh(2))
show("j_{0.8}(1.7)", mp.hyp0f1("1.8", mp.mpf("1.7") ** 2 / 4))
show("j_{0.8}(1.7i)", mp.hyp0f1("1.8", -mp.mpf("1.7") ** 2 / 4))
show("j_{2.3}(40)", mp.hyp0f1("3.3", mp.mpf("40") ** 2 / 4))

print("# 1F1")
show("1F1(1;3;-4)", mp.hyp1f1(1, 3, -4))
show("1F1(2;5;-30)", mp.hyp1f1(2, 5, -30))
show("e^{0.7}*1F1(1;3;-1.4)", mp.e**mp.mpf("0.7") * mp.hyp1f1(1, 3, "-1.4"))

print("# 2F1")
show("2F1(0.3,0.7;1.1;0.4)", mp.hyp2f1("0.3", "0.7", "1.1", "0.4"))
show("2F1(0.3,0.7;1.1;-3)", mp.hyp2f1("0.3", "0.7", "1.1", -3))
show("2F1(-4,2.2;3.3;3)", mp.hyp2f1(-4, "2.2", "3.3", 3))
show("2F1(1.5+2i,1.5-2i;2;-9)",
     mp.hyp2f1(mp.mpc("1.5", 2), mp.mpc("1.5", -2), 2, -9))
show("2F1(1.5+2i,1.5-2i;2;-2000)",
     mp.hyp2f1(mp.mpc("1.5", 2), mp.mpc("1.5", -2), 2, -2000))
show("2F1(0.3,0.7;1.1;0.9)", mp.hyp2f1("0.3", "0.7", "1.1", "0.9"))

print("# quadrature / fourier")
show("int_{-5}^{5} exp(-x^2)", mp.quad(lambda x: mp.exp(-x * x), [-5, 5]))
show("int_0^pi sin", mp.quad(mp.sin, [0, mp.pi]))
show("FT[e^{-x^2/2}](1) = sqrt(2pi)e^{-1/2}", mp.sqrt(2 * mp.pi) * mp.exp(-mp.mpf(1) / 2))
show("int_0^1 x^{-1/2} cos x", mp.quad(lambda x: mp.cos(x) / mp.sqrt(x), [0, 1]))
