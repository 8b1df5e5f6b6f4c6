# Independent reference values for the rank-one spherical analysis module
# (Euclidean / sphere / hyperbolic).  Run: python3 geom_oracle.py
import mpmath as mp

mp.mp.dps = 30


def P(label, v, digits=21):
    print(f"{label} = {mp.nstr(v, digits)}")


# ---------------------------------------------------------------- Euclidean
def euclid_phi(lam, r, n):
    # normalized Bessel 0F1(n/2; -(lam r)^2/4)
    return mp.hyp0f1(mp.mpf(n) / 2, -(lam * r) ** 2 / 4)


print("== euclid_phi ==")
P("phi(1.3, 2.1, n=2)", euclid_phi(mp.mpf("1.3"), mp.mpf("2.1"), 2))
P("phi(0.9, 3.0, n=4)", euclid_phi(mp.mpf("0.9"), mp.mpf("3.0"), 4))
P("phi(2.2, 1.4, n=6)", euclid_phi(mp.mpf("2.2"), mp.mpf("1.4"), 6))
P("phi(9.0, 4.0, n=2)", euclid_phi(mp.mpf("9.0"), mp.mpf("4.0"), 2))
# integral representation cross-check (n=2, must equal series)
lam, r = mp.mpf("1.3"), mp.mpf("2.1")
ir = mp.quad(lambda th: mp.e ** (1j * lam * r * mp.cos(th)), [0, mp.pi]) / mp.pi
print("  integral-branch check (n=2):", mp.nstr(abs(ir - euclid_phi(lam, r, 2)), 5))

# ---------------------------------------------------------------- Hankel
print("== hankel ==")


def hankel_fwd(f, lam, n, R=mp.inf):
    c = 2 * mp.pi ** (mp.mpf(n) / 2) / mp.gamma(mp.mpf(n) / 2)
    return c * mp.quad(lambda rr: rr ** (n - 1) * f(rr) * euclid_phi(lam, rr, n),
                       [0, 1, 2, 4, 8, 16])


f3 = lambda rr: mp.e ** (-rr * rr) * (1 + rr * rr)
P("Hf(1.7), n=3, f=e^{-r^2}(1+r^2)", hankel_fwd(f3, mp.mpf("1.7"), 3))
f2 = lambda rr: mp.e ** (-rr * rr)
P("Hf(0.9), n=2, f=e^{-r^2}", hankel_fwd(f2, mp.mpf("0.9"), 2))
# Gaussian self-reciprocity: f=e^{-r^2/2} -> (2 pi)^{n/2} e^{-lam^2/2}
g = lambda rr: mp.e ** (-rr * rr / 2)
got = hankel_fwd(g, mp.mpf("1.1"), 3)
want = (2 * mp.pi) ** mp.mpf("1.5") * mp.e ** (-mp.mpf("1.21") / 2)
print("  gaussian check (n=3):", mp.nstr(abs(got - want), 5))

# ---------------------------------------------------------------- Sphere
print("== sphere ==")


def sphere_phi(l, theta, n):
    a = mp.mpf(n) / 2 - 1
    x = mp.cos(theta)
    pj = mp.jacobi(l, a, a, x)
    return pj * mp.gamma(l + 1) * mp.gamma(mp.mpf(n) / 2) / mp.gamma(mp.mpf(n) / 2 + l)


P("phi_4(0.8), n=3", sphere_phi(4, mp.mpf("0.8"), 3))
P("phi_5(1.1), n=2", sphere_phi(5, mp.mpf("1.1"), 2))
P("phi_3(2.0), n=4", sphere_phi(3, mp.mpf("2.0"), 4))
P("phi_2(0.5), n=5", sphere_phi(2, mp.mpf("0.5"), 5))


def dl(l, n):
    return mp.mpf(n) * (n + 2 * l - 1) * mp.factorial(n + l - 2) / (
        mp.factorial(n) * mp.factorial(l))


def coeff(f, l, n):
    c = mp.gamma((mp.mpf(n) + 1) / 2) / (mp.sqrt(mp.pi) * mp.gamma(mp.mpf(n) / 2))
    return c * mp.quad(lambda th: mp.sin(th) ** (n - 1) * f(th) * sphere_phi(l, th, n),
                       [0, mp.pi / 2, mp.pi])


fs = lambda th: mp.e ** (mp.cos(th))
for l in range(4):
    P(f"<e^cos, phi_{l}> n=2", coeff(fs, l, 2))
# synthesis check at theta=0.7 with lmax=25
th0 = mp.mpf("0.7")
syn = mp.nsum(lambda l: dl(int(l), 2) * coeff(fs, int(l), 2) * sphere_phi(int(l), th0, 2),
              [0, 20])
print("  synth check:", mp.nstr(abs(syn - fs(th0)), 5))

# sphere -> euclid limit: phi_l(cos(lam r/l)) -> euclid_phi(lam,r)
lam, r, n, L = mp.mpf("1.5"), mp.mpf("2.0"), 3, 100
lim = sphere_phi(L, lam * r / L, n)
print("  sphere-limit err at l=100:", mp.nstr(abs(lim - euclid_phi(lam, r, n)), 5))

# ---------------------------------------------------------------- hyp_phi
print("== hyp_phi ==")


def hyp_phi(lam, r, n):
    rho = (mp.mpf(n) - 1) / 2
    return mp.hyp2f1((rho + 1j * lam) / 2, (rho - 1j * lam) / 2, mp.mpf(n) / 2,
                     -mp.sinh(r) ** 2)


P("phi(1.5, 2.0, n=2)", hyp_phi(mp.mpf("1.5"), mp.mpf("2.0"), 2))
P("phi(0.6, 0.3, n=2)", hyp_phi(mp.mpf("0.6"), mp.mpf("0.3"), 2))
P("phi(0, 0.9, n=2)", hyp_phi(mp.mpf(0), mp.mpf("0.9"), 2))
P("phi(1.2, 1.5, n=4)", hyp_phi(mp.mpf("1.2"), mp.mpf("1.5"), 4))
P("phi(1.0, 1.5, n=4)", hyp_phi(mp.mpf("1.0"), mp.mpf("1.5"), 4))
P("phi(2.0, 5.0, n=3)", hyp_phi(mp.mpf("2.0"), mp.mpf("5.0"), 3))
# n=3 closed form sin(lam r)/(lam sinh r)
lam, r = mp.mpf("2.0"), mp.mpf("5.0")
print("  n=3 closed check:",
      mp.nstr(abs(hyp_phi(lam, r, 3) - mp.sin(lam * r) / (lam * mp.sinh(r))), 5))
# integral branch check n=4
lam, r, n = mp.mpf("1.2"), mp.mpf("1.5"), 4
rho = (mp.mpf(n) - 1) / 2
c = mp.gamma(mp.mpf(n) / 2) / (mp.sqrt(mp.pi) * mp.gamma((mp.mpf(n) - 1) / 2))
ib = c * mp.quad(lambda th: mp.sin(th) ** (n - 2) *
                 (mp.cosh(r) - mp.sinh(r) * mp.cos(th)) ** (1j * lam - rho),
                 [0, mp.pi / 2, mp.pi])
print("  integral-branch check (n=4):", mp.nstr(abs(ib - hyp_phi(lam, r, n)), 5))

# curvature limit
lam, r, eps = mp.mpf("1.5"), mp.mpf("2.0"), mp.mpf("0.01")
print("  curvature-limit err (n=3, eps=1e-2):",
      mp.nstr(abs(hyp_phi(lam / eps, eps * r, 3) - euclid_phi(lam, r, 3)), 5))

# ---------------------------------------------------------------- c, Plancherel
print("== c-function / density ==")


def c_hyp(lam, n):
    rho = (mp.mpf(n) - 1) / 2
    return (mp.gamma(2 * rho) / mp.gamma(rho)) * mp.gamma(1j * lam) / mp.gamma(1j * lam + rho)


for n in (2, 3, 4, 5, 6):
    v = c_hyp(mp.mpf("1.3"), n)
    P(f"c(1.3) n={n}", v)
    P(f"|c(1.3)|^-2 n={n}", 1 / (v * mp.conj(v)).real)
P("c(0.5) n=3", c_hyp(mp.mpf("0.5"), 3))

# ---------------------------------------------------------------- Abel
print("== abel ==")


def abel(f, r, n):
    c = (2 * mp.pi) ** ((mp.mpf(n) - 1) / 2) / mp.gamma((mp.mpf(n) - 1) / 2)
    # substitution cosh s = cosh r + u^2
    def g(u):
        s = mp.acosh(mp.cosh(r) + u * u)
        if n == 2:
            return 2 * f(s)
        return 2 * f(s) * u ** (n - 2)
    return c * mp.quad(g, [0, 1, 2, 4, 8])


fA = lambda s: mp.e ** (-s * s)
P("A f(0.8), n=2, f=e^{-s^2}", abel(fA, mp.mpf("0.8"), 2))
P("A f(0.8), n=4, f=e^{-s^2}", abel(fA, mp.mpf("0.8"), 4))
# n=3 closed: f=cosh^-3 -> pi/cosh^2 r
fc = lambda s: mp.cosh(s) ** -3
print("  n=3 closed check:",
      mp.nstr(abs(abel(fc, mp.mpf("0.8"), 3) - mp.pi / mp.cosh(mp.mpf("0.8")) ** 2), 5))

# ---------------------------------------------------------------- spherical transform
print("== spherical transform Hn ==")


def hyp_H(f, lam, n):
    c = 2 * mp.pi ** (mp.mpf(n) / 2) / mp.gamma(mp.mpf(n) / 2)
    return c * mp.quad(lambda rr: mp.sinh(rr) ** (n - 1) * f(rr) * hyp_phi(lam, rr, n),
                       [0, 1, 2, 4, 8])


fH = lambda rr: mp.e ** (-rr * rr)
P("Hf(1.1), n=2, f=e^{-r^2}", hyp_H(fH, mp.mpf("1.1"), 2))
P("Hf(0.3), n=2", hyp_H(fH, mp.mpf("0.3"), 2))
P("Hf(1.7), n=3", hyp_H(fH, mp.mpf("1.7"), 3))

# diagram H = F o A at lam=1.1, n=2
lamd = mp.mpf("1.1")
FA = mp.quad(lambda rr: abel(fH, rr, 2) * mp.cos(lamd * rr), [-8, -4, -1, 0, 1, 4, 8])
print("  diagram check n=2:", mp.nstr(abs(FA - hyp_H(fH, lamd, 2)), 5))

# inversion constant check: f_rec(0.7) vs f(0.7), n=2 and n=3
for n in (2, 3):
    cinv = 2 ** (n - 3) * mp.pi ** (-mp.mpf(n) / 2 - 1) * mp.gamma(mp.mpf(n) / 2)
    frec = cinv * mp.quad(
        lambda l: (1 / (c_hyp(l, n) * mp.conj(c_hyp(l, n))).real) * hyp_H(fH, l, n) *
        hyp_phi(l, mp.mpf("0.7"), n), [0, 2, 5, 10, 20, 30])
    print(f"  inversion check n={n}:", mp.nstr(abs(frec - fH(mp.mpf("0.7"))), 5))

# duality pairing: int_Hn f A*g = int_R Af g, n=2
gD = lambda s: mp.e ** (-s * s / 2)


def dual_abel(g, r, n):
    if r == 0:
        return g(0)
    c = 2 ** ((mp.mpf(n) - 1) / 2) * mp.gamma(mp.mpf(n) / 2) / (
        mp.sqrt(mp.pi) * mp.gamma((mp.mpf(n) - 1) / 2))
    # substitution cosh s = cosh r - u^2, s: 0..r <-> u: sqrt(cosh r-1)..0
    um = mp.sqrt(mp.cosh(r) - 1)
    def h(u):
        s = mp.acosh(mp.cosh(r) - u * u)
        w = 2 / mp.sinh(s)
        if n != 2:
            w = w * u ** (n - 2)
        return w * g(s) * mp.sinh(s)
    return c * mp.sinh(r) ** (2 - n) * mp.quad(lambda u: h(u), [0, um / 2, um])


lhs = 2 * mp.pi * mp.quad(lambda rr: mp.sinh(rr) * fH(rr) * dual_abel(gD, rr, 2),
                          [0, 1, 2, 4, 8])
rhs = mp.quad(lambda rr: abel(fH, rr, 2) * gD(rr), [-8, -4, 0, 4, 8])
print("  duality pairing n=2:", mp.nstr(abs(lhs - rhs), 5))

# dual abel of cosine = phi, n=4, lam=1.0, r=1.5
lam = mp.mpf("1.0")
da = dual_abel(lambda s: mp.cos(lam * s), mp.mpf("1.5"), 4)
print("  A*(cos) vs phi n=4:", mp.nstr(abs(da - hyp_phi(lam, mp.mpf("1.5"), 4)), 5))

# ---------------------------------------------------------------- heat
print("== heat ==")


def heat_odd(t, r, n):
    m = (n - 1) // 2
    rho = (mp.mpf(n) - 1) / 2
    pref = 2 ** (-(mp.mpf(n) + 1) / 2) * mp.pi ** (-mp.mpf(n) / 2) * t ** mp.mpf("-0.5") * mp.e ** (-rho * rho * t)
    def it(s, k):
        if k == 0:
            return mp.e ** (-s * s / (4 * t))
        return -mp.diff(lambda x: it(x, k - 1), s) / mp.sinh(s)
    return pref * it(r, m)


def heat_even(t, r, n):
    m = n // 2 - 1
    rho = (mp.mpf(n) - 1) / 2
    pref = (2 * mp.pi) ** (-(mp.mpf(n) + 1) / 2) * t ** mp.mpf("-0.5") * mp.e ** (-rho * rho * t)
    def inner(s, k):
        if k == 0:
            return mp.e ** (-s * s / (4 * t))
        return -mp.diff(lambda x: inner(x, k - 1), s) / mp.sinh(s)
    def core(s):
        return -mp.diff(lambda x: inner(x, m), s)
    def g(u):
        s = mp.acosh(mp.cosh(r) + u * u)
        return 2 * core(s) / mp.sinh(s)
    return pref * mp.quad(g, [0, 1, 2, 4, 8])


P("h_1(0.7), n=2", heat_even(mp.mpf(1), mp.mpf("0.7"), 2))
P("h_0.8(1.1), n=4", heat_even(mp.mpf("0.8"), mp.mpf("1.1"), 4))
P("h_1(1.3), n=5", heat_odd(mp.mpf(1), mp.mpf("1.3"), 5))
# n=3 closed check
t, r = mp.mpf(1), mp.mpf("1.3")
h3 = (4 * mp.pi * t) ** mp.mpf("-1.5") * (r / mp.sinh(r)) * mp.e ** (-t - r * r / (4 * t))
print("  n=3 closed check:", mp.nstr(abs(heat_odd(t, r, 3) - h3), 5))
# masses
mp.mp.dps = 20
for n, t in ((2, mp.mpf(1)), (4, mp.mpf("0.8"))):
    hm = lambda rr: heat_even(t, rr, n)
    mass = 2 * mp.pi ** (mp.mpf(n) / 2) / mp.gamma(mp.mpf(n) / 2) * mp.quad(
        lambda rr: mp.sinh(rr) ** (n - 1) * hm(rr), [0, 1, 2, 4, 8, 12])
    print(f"  mass n={n}, t={t}:", mp.nstr(mass, 12))
n, t = 5, mp.mpf(1)
mass = 2 * mp.pi ** (mp.mpf(n) / 2) / mp.gamma(mp.mpf(n) / 2) * mp.quad(
    lambda rr: mp.sinh(rr) ** (n - 1) * heat_odd(t, rr, n), [0, 1, 2, 4, 8, 12])
print(f"  mass n=5, t=1:", mp.nstr(mass, 12))
mp.mp.dps = 30

# ---------------------------------------------------------------- schrodinger
print("== schrodinger ==")
# n=2, t=1, r=0.8:  (2 pi)^{-3/2} |t|^{-1/2} * | int_r^inf (cosh s - cosh r)^{-1/2} (i s/2t) e^{-i s^2/4t} ds |
# substitute s^2 = r^2 + 4 t sigma:  (s/2t) ds = d sigma
t, r = mp.mpf(1), mp.mpf("0.8")


def gsig(sig):
    s = mp.sqrt(r * r + 4 * t * sig)
    return (mp.cosh(s) - mp.cosh(r)) ** mp.mpf("-0.5")


I = mp.quad(lambda u: gsig(u * u) * 2 * u * mp.e ** (-1j * u * u), [0, 1, 2, 3]) \
    + mp.quadosc(lambda s_: gsig(s_) * mp.e ** (-1j * s_), [9, mp.inf], period=2 * mp.pi)
val = (2 * mp.pi) ** mp.mpf("-1.5") * abs(I)
P("|h_{-i}(0.8)|, n=2", val)

# ---------------------------------------------------------------- wave
print("== wave ==")
# n=2: u(0,t) = c0 d/dt int_0^t 2 pi sinh s f(s) (cosh t - cosh s)^{-1/2} ds + sign * c0 int ... g
fW = lambda s: mp.e ** (-2 * s * s)
gW = lambda s: mp.e ** (-3 * s * s)
c0 = 1 / (2 ** mp.mpf("1.5") * mp.pi)


def ball_int(h, tt):
    um = mp.sqrt(mp.cosh(tt) - 1)
    return mp.quad(lambda u: 2 * 2 * mp.pi * h(mp.acosh(mp.cosh(tt) - u * u)), [0, um / 2, um])


t0 = mp.mpf("1.0")
uf = c0 * mp.diff(lambda tt: ball_int(fW, tt), t0)
ug = c0 * ball_int(gW, t0)
P("u_f(0, 1.0) n=2", uf)
P("u_g(0, 1.0) n=2", ug)
P("u(0, 1.0) n=2", uf + ug)
