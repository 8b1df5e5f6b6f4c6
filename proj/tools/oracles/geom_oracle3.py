#!/usr/bin/env python3
"""Remaining reference values for the geometry module: Schrodinger modulus,
wave-at-origin pins (n=2), duality specialization, sphere-limit rate."""
import mpmath as mp

mp.mp.dps = 25


def pin(label, v):
    print(f"{label} = {mp.nstr(v, 21)}")


# ---------- Schrodinger n=2, t=1, r=0.8 ----------
# h_{-it}(r) = (2pi)^{-3/2} e^{i pi/4} |t|^{-1/2} e^{-i rho^2 t} * I,
# I = int_r^inf (cosh s - cosh r)^{-1/2} (-d/ds) e^{-i s^2/4t} ds
#   = i e^{-i r^2/4t} int_0^inf (cosh s - cosh r)^{-1/2} e^{-i sigma} dsigma,
#   s = sqrt(r^2 + 4 t sigma).
# Stable difference: cosh s - cosh r = 2 sinh((s+r)/2) sinh((s-r)/2),
# s - r = 4 t sigma / (s + r).
print("== schrodinger n=2 t=1 r=0.8 ==")
t = mp.mpf(1)
r = mp.mpf("0.8")


def coshdiff(sigma):
    s = mp.sqrt(r * r + 4 * t * sigma)
    sm = 4 * t * sigma / (s + r)
    return 2 * mp.sinh((s + r) / 2) * mp.sinh(sm / 2)


def integrand(u):
    # sigma = u^2 removes the endpoint singularity
    sigma = u * u
    return coshdiff(sigma) ** mp.mpf("-0.5") * mp.e ** (-1j * sigma) * 2 * u


pts = [0] + [mp.sqrt(k * mp.pi) for k in range(1, 400)]
J = mp.quad(integrand, pts)
mod = (2 * mp.pi) ** mp.mpf("-1.5") * abs(J)
pin("|h_{-i}(0.8)| n=2", mod)
# n=3 closed-form modulus sanity: (4 pi |t|)^{-3/2} (r/sinh r)
m3 = (4 * mp.pi) ** mp.mpf("-1.5") * (r / mp.sinh(r))
pin("|h_{-i}(0.8)| n=3 closed", m3)

# ---------- wave at origin, n=2 ----------
# u_f(0,t) = 2^{-1/2} d/dt B_f(t),  u_g(0,t) = 2^{-1/2} B_g(t),
# B_h(t) = int_0^t sinh s h(s) (cosh t - cosh s)^{-1/2} ds
#        = 2 int_0^{sqrt(cosh t - 1)} h(arccosh(cosh t - u^2)) du.
print("== wave n=2 ==")


def B(h, tt):
    umax = mp.sqrt(mp.cosh(tt) - 1)
    return 2 * mp.quad(lambda u: h(mp.acosh(mp.cosh(tt) - u * u)), [0, umax])


f = lambda s: mp.e ** (-2 * s * s)
g = lambda s: mp.e ** (-3 * s * s)
uf = lambda tt: mp.sqrt(mp.mpf(2)) / 2 * mp.diff(lambda x: B(f, x), tt)
ug = lambda tt: mp.sqrt(mp.mpf(2)) / 2 * B(g, tt)
pin("u_f(0,1.0) n=2", uf(mp.mpf(1)))
pin("u_g(0,1.0) n=2", ug(mp.mpf(1)))
# initial-condition sanity
pin("u_f(0,0.02)-f(0)", uf(mp.mpf("0.02")) - 1)
h = mp.mpf("0.05")
pin("FD d/dt u_g at 0 vs g(0)=1", ug(h) / h - 1)

# ---------- duality specialization ----------
# sphere_phi(l, theta, n) == 2F1(-l/2, (l+n-1)/2; n/2; sin^2 theta)
print("== duality specialization ==")


def sphere_phi(l, x, n):
    # recurrence phi_l = ((2l+n-3) x phi_{l-1} - (l-1) phi_{l-2})/(l+n-2)
    pm, p = mp.mpf(1), x
    if l == 0:
        return mp.mpf(1)
    for j in range(2, l + 1):
        pm, p = p, ((2 * j + n - 3) * x * p - (j - 1) * pm) / (j + n - 2)
    return p


for (l, n, th) in [(2, 3, mp.mpf("0.6")), (3, 2, mp.mpf("0.8")), (4, 4, mp.mpf("1.0"))]:
    lhs = sphere_phi(l, mp.cos(th), n)
    rhs = mp.hyp2f1(-mp.mpf(l) / 2, mp.mpf(l + n - 1) / 2, mp.mpf(n) / 2,
                    mp.sin(th) ** 2)
    print(f"  l={l} n={n} theta={th}: resid = {mp.nstr(abs(lhs - rhs), 5)}")

# ---------- sphere-to-euclid limit rate ----------
# phi_l^{S^n}(cos(lambda r / l)) -> phi_lambda^{R^n}(r); expect O(1/l)
print("== sphere limit rate (n=3, lambda=1.5, r=2.0) ==")
lam, rr, n = mp.mpf("1.5"), mp.mpf(2), 3
target = mp.hyp0f1(mp.mpf(n) / 2, -(lam * rr / 2) ** 2)
for l in (100, 300, 1000):
    err = abs(sphere_phi(l, mp.cos(lam * rr / l), n) - target)
    print(f"  l={l}: err = {mp.nstr(err, 6)}")

# ---------- dual Abel pins (independent quadrature) ----------
# A*g(r) = cA (sinh r)^{2-n} int_0^r (cosh r - cosh s)^{(n-3)/2} g(s) ds,
# cA = 2^{(n-1)/2} Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2))
print("== dual abel pins ==")
gg = lambda s: mp.e ** (-s * s)
for n in (2, 4):
    cA = 2 ** (mp.mpf(n - 1) / 2) * mp.gamma(mp.mpf(n) / 2) / (
        mp.sqrt(mp.pi) * mp.gamma(mp.mpf(n - 1) / 2))
    rr = mp.mpf("1.1")
    if n == 2:
        # substitution cosh s = cosh rr - u^2 removes the endpoint singularity
        umax = mp.sqrt(mp.cosh(rr) - 1)

        def ig(u):
            w = mp.cosh(rr) - u * u
            s = mp.acosh(w)
            return gg(s) / mp.sqrt(w * w - 1) * 2

        val = cA * mp.quad(ig, [0, umax * (1 - mp.mpf(10) ** -12)])
    else:
        val = cA * mp.sinh(rr) ** (2 - n) * mp.quad(
            lambda s: (mp.cosh(rr) - mp.cosh(s)) ** (mp.mpf(n - 3) / 2) * gg(s),
            [0, rr])
    pin(f"A*exp(-s^2)(1.1) n={n}", val)

# identity check: A*(cos 0.7 s)(1.2) vs phi_{0.7}(1.2), n=2
n = 2
rho = mp.mpf(n - 1) / 2
cA = 2 ** (mp.mpf(n - 1) / 2) * mp.gamma(mp.mpf(n) / 2) / (
    mp.sqrt(mp.pi) * mp.gamma(mp.mpf(n - 1) / 2))
rr = mp.mpf("1.2")
lam = mp.mpf("0.7")
umax = mp.sqrt(mp.cosh(rr) - 1)


def ig2(u):
    w = mp.cosh(rr) - u * u
    s = mp.acosh(w)
    return mp.cos(lam * s) / mp.sqrt(w * w - 1) * 2


lhs = cA * mp.quad(ig2, [0, umax * (1 - mp.mpf(10) ** -14)])
rhs = mp.hyp2f1((rho + 1j * lam) / 2, (rho - 1j * lam) / 2, mp.mpf(n) / 2,
                -mp.sinh(rr) ** 2).real
print(f"  A*(cos .7s)(1.2) vs phi n=2: resid = {mp.nstr(abs(lhs - rhs), 5)}")
print("done")
