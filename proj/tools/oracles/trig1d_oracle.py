#!/usr/bin/env python3
"""Independent oracle values for the 1D trigonometric Dunkl module.

Computes reference values with mpmath:
  * Heckman-Opdam F and Opdam G closed forms (Gauss 2F1 combinations)
  * Harish-Chandra c-function, Plancherel density (two product forms)
  * Harish-Chandra series with the 1D Gamma_l recurrence
  * mu density (generic / limit / halving cases): mass and reconstruction
  * nu density (three cases): mass and product formulae
  * rational limit towards the rational kernel
  * calibration of the inverse-transform constant c_trig
"""
import sys
import mpmath as mp

mp.mp.dps = 30


def rho(k1, k2):
    return mp.mpf(k1) / 2 + mp.mpf(k2)


def jacobi_phi(lam, t, a, b):
    """phi_lam^{(a,b)}(t) = 2F1((a+b+1-i lam)/2, (a+b+1+i lam)/2; a+1; -sinh^2 t)."""
    s = mp.sinh(t) ** 2
    return mp.hyp2f1((a + b + 1 - 1j * mp.mpmathify(lam)) / 2,
                     (a + b + 1 + 1j * mp.mpmathify(lam)) / 2, a + 1, -s)


def Ftrig(lam, x, k1, k2):
    r = rho(k1, k2)
    s = mp.sinh(mp.mpf(x) / 2) ** 2
    return mp.hyp2f1(r + lam, r - lam, mp.mpf(k1) + mp.mpf(k2) + mp.mpf(1) / 2, -s)


def Gtrig(lam, x, k1, k2):
    r = rho(k1, k2)
    x = mp.mpf(x)
    s = mp.sinh(x / 2) ** 2
    t1 = mp.hyp2f1(r + lam, r - lam, mp.mpf(k1) + mp.mpf(k2) + mp.mpf(1) / 2, -s)
    t2 = mp.hyp2f1(r + 1 + lam, r + 1 - lam,
                   mp.mpf(k1) + mp.mpf(k2) + mp.mpf(3) / 2, -s)
    return t1 + (r + lam) / (2 * mp.mpf(k1) + 2 * mp.mpf(k2) + 1) * mp.sinh(x) * t2


def c0const(k1, k2):
    if k1 == 0 and k2 == 0:
        return mp.mpf(1)
    return mp.gamma(2 * mp.mpf(k1) + 2 * mp.mpf(k2)) / mp.gamma(mp.mpf(k1) + mp.mpf(k2))


def cfun(lam, k1, k2):
    if k1 == 0 and k2 == 0:
        return mp.mpf(1)
    k1 = mp.mpf(k1); k2 = mp.mpf(k2)
    return (c0const(k1, k2) * mp.gamma(2 * lam) * mp.gamma(lam + k1 / 2)
            / (mp.gamma(2 * lam + k1) * mp.gamma(lam + k1 / 2 + k2)))


def dens_form1(lam, k1, k2):
    """c0^2/|c(i lam)|^2 * (-i lam + rho)/(-i lam)   [R~+ = {2e1}]."""
    r = rho(k1, k2)
    ci = cfun(1j * mp.mpf(lam), k1, k2)
    return (c0const(k1, k2) ** 2 / (ci * mp.conj(ci))
            * (-1j * mp.mpf(lam) + r) / (-1j * mp.mpf(lam)))


def dens_form2(lam, k1, k2):
    """Gamma-quotient form over R+ = {e1, 2e1}."""
    k1 = mp.mpf(k1); k2 = mp.mpf(k2); il = 1j * mp.mpf(lam)
    p1 = (mp.gamma(2 * il + k1) / mp.gamma(2 * il)
          * mp.gamma(-2 * il + k1 + 1) / mp.gamma(-2 * il + 1))
    p2 = (mp.gamma(il + k1 / 2 + k2) / mp.gamma(il + k1 / 2)
          * mp.gamma(-il + k1 / 2 + k2 + 1) / mp.gamma(-il + k1 / 2 + 1))
    return p1 * p2


def hc_gammas(lam, k1, k2, L):
    r = rho(k1, k2)
    k1 = mp.mpf(k1); k2 = mp.mpf(k2)
    G = [mp.mpf(1)]
    for l in range(1, L + 1):
        s = mp.mpf(0)
        for j in range(1, l + 1):
            s += -2 * k1 * (lam - r - l + j) * G[l - j]
        for j in range(1, l // 2 + 1):
            s += -4 * k2 * (lam - r - l + 2 * j) * G[l - 2 * j]
        G.append(s / (l * (l - 2 * lam)))
    return G


def hc_phi(lam, x, k1, k2, L=40):
    r = rho(k1, k2)
    G = hc_gammas(lam, k1, k2, L)
    return mp.fsum(G[l] * mp.e ** ((lam - r - l) * mp.mpf(x)) for l in range(L + 1))


def hc_F(lam, x, k1, k2, L=40):
    return (cfun(lam, k1, k2) * hc_phi(lam, x, k1, k2, L)
            + cfun(-lam, k1, k2) * hc_phi(-lam, x, k1, k2, L))


def delta_weight(x, k1, k2):
    x = mp.mpf(x)
    return (mp.fabs(2 * mp.sinh(x / 2)) ** (2 * mp.mpf(k1))
            * mp.fabs(2 * mp.sinh(x)) ** (2 * mp.mpf(k2)))


# ---- mu densities ---------------------------------------------------------

def mu_limit(x, y, k2):
    """k1 = 0, k2 > 0."""
    x = mp.mpf(x); y = mp.mpf(y); k2 = mp.mpf(k2)
    if abs(y) >= abs(x):
        return mp.mpf(0)
    return (2 ** (k2 - 1) * mp.gamma(k2 + mp.mpf(1) / 2)
            / (mp.sqrt(mp.pi) * mp.gamma(k2))
            * mp.fabs(mp.sinh(x)) ** (-2 * k2)
            * (mp.cosh(x) - mp.cosh(y)) ** (k2 - 1)
            * mp.sign(x) * (mp.e ** x - mp.e ** (-y)))


def mu_half(x, y, k1):
    """k1 > 0, k2 = 0: half of mu_limit with k2->k1, x->x/2, y->y/2."""
    return mu_limit(mp.mpf(x) / 2, mp.mpf(y) / 2, k1) / 2


def mu_generic(x, y, k1, k2):
    x = mp.mpf(x); y = mp.mpf(y); k1 = mp.mpf(k1); k2 = mp.mpf(k2)
    if abs(y) >= abs(x):
        return mp.mpf(0)
    pref = (2 ** (k1 + k2 - 2) * mp.gamma(k1 + k2 + mp.mpf(1) / 2)
            / (mp.sqrt(mp.pi) * mp.gamma(k1) * mp.gamma(k2))
            * mp.fabs(mp.sinh(x / 2)) ** (-2 * k1)
            * mp.fabs(mp.sinh(x)) ** (-2 * k2) * mp.sign(x))
    def inner(z):
        return (mp.sinh(z / 2)
                * (mp.cosh(z / 2) - mp.cosh(y / 2)) ** (k1 - 1)
                * (mp.cosh(x) - mp.cosh(z)) ** (k2 - 1)
                * (mp.e ** (x / 2) * 2 * mp.cosh(x / 2)
                   - mp.e ** (-y / 2) * 2 * mp.cosh(z / 2)))
    return pref * mp.quad(inner, [abs(y), abs(x)])


# ---- nu densities ---------------------------------------------------------

def in_shell(x, y, z):
    return abs(abs(x) - abs(y)) < abs(z) < abs(x) + abs(y)


def nu_limit(x, y, z, k2):
    """k1 = 0, k2 > 0."""
    x = mp.mpf(x); y = mp.mpf(y); z = mp.mpf(z); k2 = mp.mpf(k2)
    if not in_shell(x, y, z):
        return mp.mpf(0)
    quad4 = (mp.sinh((x + y + z) / 2) * mp.sinh((-x + y + z) / 2)
             * mp.sinh((x - y + z) / 2) * mp.sinh((x + y - z) / 2))
    return (2 ** (2 * k2 - 1) * mp.gamma(k2 + mp.mpf(1) / 2)
            / (mp.sqrt(mp.pi) * mp.gamma(k2))
            * mp.sign(x * y * z)
            * mp.fabs(mp.sinh(x) * mp.sinh(y)) ** (-2 * k2)
            * quad4 ** k2 / mp.sinh((x + y - z) / 2)
            * mp.e ** ((x + y - z) / 2))


def nu_half(x, y, z, k1):
    return nu_limit(mp.mpf(x) / 2, mp.mpf(y) / 2, mp.mpf(z) / 2, k1) / 2


def nu_generic(x, y, z, k1, k2):
    x = mp.mpf(x); y = mp.mpf(y); z = mp.mpf(z)
    k1 = mp.mpf(k1); k2 = mp.mpf(k2)
    if not in_shell(x, y, z):
        return mp.mpf(0)
    pref = (2 ** (k1 - 2) * mp.gamma(k1 + k2 + mp.mpf(1) / 2)
            / (mp.sqrt(mp.pi) * mp.gamma(k1) * mp.gamma(k2))
            * mp.sign(x * y * z)
            * mp.fabs(mp.sinh(x / 2) * mp.sinh(y / 2)) ** (-2 * k1 - 2 * k2)
            * mp.cosh(z / 2) ** (2 * k2))
    A = mp.cosh(x / 2) * mp.cosh(y / 2) * mp.cosh(z / 2)
    B = (1 + mp.cosh(x) + mp.cosh(y) + mp.cosh(z)) / 4
    def inner(chi):
        base = A * mp.cos(chi) - B
        if base <= 0:
            return mp.mpf(0)
        bracket = (mp.sinh((x + y + z) / 2)
                   - 2 * mp.cosh(x / 2) * mp.cosh(y / 2) * mp.sinh(z / 2)
                   + (k1 + 2 * k2) / k2 * A * mp.sin(chi) ** 2
                   + (mp.sinh(z) - mp.sinh(x) - mp.sinh(y)) / 2 * mp.cos(chi))
        return mp.sin(chi) ** (2 * k2 - 1) * base ** (k1 - 1) * bracket
    # the positive part lives on chi in (0, chi_max)
    if B / A < 1:
        chimax = mp.acos(B / A)
        return pref * mp.quad(inner, [0, chimax])
    return mp.mpf(0)


def nu_any(x, y, z, k1, k2):
    if k1 > 0 and k2 > 0:
        return nu_generic(x, y, z, k1, k2)
    if k1 == 0:
        return nu_limit(x, y, z, k2)
    return nu_half(x, y, z, k1)


def mu_any(x, y, k1, k2):
    if k1 > 0 and k2 > 0:
        return mu_generic(x, y, k1, k2)
    if k1 == 0:
        return mu_limit(x, y, k2)
    return mu_half(x, y, k1)


def nu_pair_integral(x, y, k1, k2, g):
    """integral of g against nu_{x,y} over both signed shells."""
    A = abs(abs(mp.mpf(x)) - abs(mp.mpf(y)))
    B = abs(mp.mpf(x)) + abs(mp.mpf(y))
    pos = mp.quad(lambda z: nu_any(x, y, z, k1, k2) * g(z), [A, B])
    neg = mp.quad(lambda z: nu_any(x, y, z, k1, k2) * g(z), [-B, -A])
    return pos + neg


def fmt(v):
    return mp.nstr(v, 20)


def main():
    k1, k2 = mp.mpf(1), mp.mpf('0.5')
    r = rho(k1, k2)
    print("== closed forms ==")
    print("rho(1,0.5) =", fmt(r))
    print("F(0.7,1.2) =", fmt(Ftrig(mp.mpf('0.7'), mp.mpf('1.2'), k1, k2)))
    print("G(0.7,1.2) =", fmt(Gtrig(mp.mpf('0.7'), mp.mpf('1.2'), k1, k2)))
    print("G(0.7,-1.2) =", fmt(Gtrig(mp.mpf('0.7'), mp.mpf('-1.2'), k1, k2)))
    avg = (Gtrig(mp.mpf('0.7'), mp.mpf('1.2'), k1, k2)
           + Gtrig(mp.mpf('0.7'), mp.mpf('-1.2'), k1, k2)) / 2
    print("avg-G vs F  =", fmt(avg - Ftrig(mp.mpf('0.7'), mp.mpf('1.2'), k1, k2)))
    print("G(-rho,1.2) =", fmt(Gtrig(-r, mp.mpf('1.2'), k1, k2)))
    print("G(i0.9,1.2) =", fmt(Gtrig(1j * mp.mpf('0.9'), mp.mpf('1.2'), k1, k2)))
    print("G0(1.2)     =", fmt(Gtrig(0, mp.mpf('1.2'), k1, k2)))
    print("k=0: G(0.8,1.1) - e^{0.88} =",
          fmt(Gtrig(mp.mpf('0.8'), mp.mpf('1.1'), 0, 0) - mp.e ** mp.mpf('0.88')))
    print("jacobi H3: phi_1(1) =", fmt(jacobi_phi(1, 1, mp.mpf(1)/2, -mp.mpf(1)/2)),
          " sin1/sinh1 =", fmt(mp.sin(1) / mp.sinh(1)))
    print("jacobi (1.3,0.4) lam=0.9 t=0.8 =",
          fmt(jacobi_phi(mp.mpf('0.9'), mp.mpf('0.8'), mp.mpf('1.3'), mp.mpf('0.4'))))

    print("== c-function and density ==")
    print("c(rho) =", fmt(cfun(r, k1, k2)))
    print("c(0.8) =", fmt(cfun(mp.mpf('0.8'), k1, k2)))
    print("c(0.8; k=(0,1)) =", fmt(cfun(mp.mpf('0.8'), 0, 1)))
    d1 = dens_form1(mp.mpf('1.3'), 2, mp.mpf('0.5'))
    d2 = dens_form2(mp.mpf('1.3'), 2, mp.mpf('0.5'))
    print("dens form1 (1.3; 2,0.5) =", fmt(d1))
    print("dens form2 (1.3; 2,0.5) =", fmt(d2))
    print("forms diff =", fmt(abs(d1 - d2)))
    print("dens form2 (0.8; 1,0.5) =", fmt(dens_form2(mp.mpf('0.8'), 1, mp.mpf('0.5'))))
    print("dens k=0 (0.9) =", fmt(dens_form2(mp.mpf('0.9'), 0, 0)))

    print("== Harish-Chandra expansion ==")
    for x in (5, 8):
        exact = Ftrig(mp.mpf('0.7'), x, k1, k2)
        approx = hc_F(mp.mpf('0.7'), x, k1, k2, L=40)
        print(f"x={x}: F={fmt(exact)} hc_resid={fmt(abs(exact - approx))}")
    print("Gamma_l l=1..4 (lam=0.7):",
          [fmt(g) for g in hc_gammas(mp.mpf('0.7'), k1, k2, 4)[1:]])

    print("== mu densities ==")
    # limit case (0,1)
    m = mp.quad(lambda y: mu_limit(1, y, 1), [-1, 1])
    print("mu_limit mass x=1 (0,1) =", fmt(m), " G0(1) =", fmt(Gtrig(0, 1, 0, 1)))
    rec = mp.quad(lambda y: mu_limit(1, y, 1) * mp.e ** (mp.mpf('0.5') * y), [-1, 1])
    print("mu_limit rec lam=0.5 =", fmt(rec), " G(0.5,1) =", fmt(Gtrig(mp.mpf('0.5'), 1, 0, 1)))
    m = mp.quad(lambda y: mu_limit(mp.mpf('-1.3'), y, mp.mpf('0.8')), [mp.mpf('-1.3'), mp.mpf('1.3')])
    print("mu_limit mass x=-1.3 (0,0.8) =", fmt(m), " G0(-1.3) =",
          fmt(Gtrig(0, mp.mpf('-1.3'), 0, mp.mpf('0.8'))))
    # halving case (1.5, 0)
    m = mp.quad(lambda y: mu_half(1, y, mp.mpf('1.5')), [-1, 1])
    print("mu_half mass x=1 (1.5,0) =", fmt(m), " G0(1) =", fmt(Gtrig(0, 1, mp.mpf('1.5'), 0)))
    rec = mp.quad(lambda y: mu_half(1, y, mp.mpf('1.5')) * mp.e ** (mp.mpf('0.7') * y), [-1, 1])
    print("mu_half rec lam=0.7 =", fmt(rec), " G(0.7,1) =",
          fmt(Gtrig(mp.mpf('0.7'), 1, mp.mpf('1.5'), 0)))
    # generic case (1,1)
    m = mp.quad(lambda y: mu_generic(1, y, 1, 1), [-1, 0, 1])
    print("mu_gen mass x=1 (1,1) =", fmt(m), " G0(1) =", fmt(Gtrig(0, 1, 1, 1)))
    rec = mp.quad(lambda y: mu_generic(1, y, 1, 1) * mp.e ** (mp.mpf('0.5') * y), [-1, 0, 1])
    print("mu_gen rec lam=0.5 =", fmt(rec), " G(0.5,1) =", fmt(Gtrig(mp.mpf('0.5'), 1, 1, 1)))
    print("mu_gen value (1,0.3,1,1) =", fmt(mu_generic(1, mp.mpf('0.3'), 1, 1)))
    print("mu_gen value (1,0.3,1,0.5) =", fmt(mu_generic(1, mp.mpf('0.3'), 1, mp.mpf('0.5'))))
    print("mu_limit value (1,0.3,0,1) =", fmt(mu_limit(1, mp.mpf('0.3'), 1)))
    print("mu_half value (1,0.3,1.5,0) =", fmt(mu_half(1, mp.mpf('0.3'), mp.mpf('1.5'))))

    print("== nu densities ==")
    # limit case (0,1) at (1, 0.7)
    m = nu_pair_integral(1, mp.mpf('0.7'), 0, 1, lambda z: 1)
    print("nu_limit mass (1,0.7;0,1) =", fmt(m))
    lam = mp.mpf('0.9')
    prod = nu_pair_integral(1, mp.mpf('0.7'), 0, 1, lambda z: Gtrig(lam, z, 0, 1))
    print("nu_limit <nu,G_0.9> =", fmt(prod), " G*G =",
          fmt(Gtrig(lam, 1, 0, 1) * Gtrig(lam, mp.mpf('0.7'), 0, 1)))
    print("nu_limit value (1,0.7,1.2;0,1) =", fmt(nu_limit(1, mp.mpf('0.7'), mp.mpf('1.2'), 1)))
    print("nu_limit value (1,0.7,-0.5;0,1) =", fmt(nu_limit(1, mp.mpf('0.7'), mp.mpf('-0.5'), 1)))
    # generic case (1,0.5) at (1, 0.7)
    m = nu_pair_integral(1, mp.mpf('0.7'), 1, mp.mpf('0.5'), lambda z: 1)
    print("nu_gen mass (1,0.7;1,0.5) =", fmt(m))
    prod = nu_pair_integral(1, mp.mpf('0.7'), 1, mp.mpf('0.5'),
                            lambda z: Gtrig(lam, z, 1, mp.mpf('0.5')))
    print("nu_gen <nu,G_0.9> =", fmt(prod), " G*G =",
          fmt(Gtrig(lam, 1, 1, mp.mpf('0.5')) * Gtrig(lam, mp.mpf('0.7'), 1, mp.mpf('0.5'))))
    print("nu_gen value (1,0.7,1.2;1,0.5) =",
          fmt(nu_generic(1, mp.mpf('0.7'), mp.mpf('1.2'), 1, mp.mpf('0.5'))))
    # halving case (1,0) at (1, 0.7)
    m = nu_pair_integral(1, mp.mpf('0.7'), 1, 0, lambda z: 1)
    print("nu_half mass (1,0.7;1,0) =", fmt(m))
    prod = nu_pair_integral(1, mp.mpf('0.7'), 1, 0, lambda z: Gtrig(lam, z, 1, 0))
    print("nu_half <nu,G_0.9> =", fmt(prod), " G*G =",
          fmt(Gtrig(lam, 1, 1, 0) * Gtrig(lam, mp.mpf('0.7'), 1, 0)))
    # W-averaged product formula with F at lam=0.9, (0,1)
    nuW = (nu_pair_integral(1, mp.mpf('0.7'), 0, 1, lambda z: Ftrig(lam, z, 0, 1))
           + nu_pair_integral(-1, mp.mpf('-0.7'), 0, 1, lambda z: Ftrig(lam, z, 0, 1))) / 2
    print("nu^W <.,F_0.9> (0,1) =", fmt(nuW), " F*F =",
          fmt(Ftrig(lam, 1, 0, 1) * Ftrig(lam, mp.mpf('0.7'), 0, 1)))

    print("== rational limit (k1,k2)=(k,0), k=1 ==")
    Erat = mp.e ** (-1) * mp.hyp1f1(2, 3, 2)   # E_1(1) at k=1
    print("E_1(1) k=1 =", fmt(Erat))
    for eps in ('0.1', '0.03', '0.01', '0.003', '0.001'):
        e = mp.mpf(eps)
        val = Gtrig(1 / e, e, 1, 0)
        print(f"eps={eps}: |G - E| = {fmt(abs(val - Erat))}")

    print("== c_trig calibration ==")
    mp.mp.dps = 16
    import numpy as np
    nodes, weights = np.polynomial.legendre.leggauss(60)
    def ctrig2_for(k1c, k2c):
        pred = 2 ** (4 * (mp.mpf(k1c) + mp.mpf(k2c)) + 1) \
            * mp.gamma(mp.mpf(k1c) + mp.mpf(k2c) + mp.mpf(1) / 2) ** 2
        f = lambda x: mp.e ** (-x ** 2) * (1 + mp.mpf('0.4') * x)
        def Hf(lam):
            return mp.quad(lambda x: delta_weight(x, k1c, k2c) * f(x)
                           * Gtrig(1j * lam, -x, k1c, k2c), [-6, 0, 6])
        # composite Gauss-Legendre over [-22,22]
        panels = [(-22, -8), (-8, 0), (0, 8), (8, 22)]
        lam_nodes, lam_w = [], []
        for a, b in panels:
            mid, half = (a + b) / 2, (b - a) / 2
            for t, w in zip(nodes, weights):
                lam_nodes.append(mp.mpf(mid) + mp.mpf(half) * mp.mpf(t))
                lam_w.append(mp.mpf(half) * mp.mpf(w))
        hvals = [Hf(l) for l in lam_nodes]
        out = []
        for x0 in (mp.mpf('0.3'), mp.mpf('-0.7')):
            I = mp.fsum(w * dens_form2(l, k1c, k2c) * h * Gtrig(1j * l, x0, k1c, k2c)
                        for l, w, h in zip(lam_nodes, lam_w, hvals))
            out.append(I / f(x0))
        return out, pred
    for kc in ((1, mp.mpf('0.5')), (0, 1)):
        vals, pred = ctrig2_for(*kc)
        print(f"k={kc}: ctrig^2 at x0=0.3 -> {fmt(vals[0])}, x0=-0.7 -> {fmt(vals[1])}, "
              f"predicted {fmt(pred)}")
    mp.mp.dps = 30


if __name__ == '__main__':
    sys.exit(main())
