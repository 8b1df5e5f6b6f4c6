# Second batch of reference values: heat/schrodinger/wave kernels, Abel tail
# fix, inversion-constant verification, duality specialization.
import mpmath as mp

mp.mp.dps = 25


def P(label, v, digits=21):
    print(f"{label} = {mp.nstr(v, digits)}", flush=True)


def hyp_phi(lam, r, n):
    rho = (mp.mpf(n) - 1) / 2
    return mp.hyp2f1((rho + 1j * lam) / 2, (rho - 1j * lam) / 2, mp.mpf(n) / 2,
                     -mp.sinh(r) ** 2)


def c_hyp(lam, n):
    rho = (mp.mpf(n) - 1) / 2
    return (mp.gamma(2 * rho) / mp.gamma(rho)) * mp.gamma(1j * lam) / mp.gamma(1j * lam + rho)


def dens(lam, n):
    v = c_hyp(lam, n)
    return 1 / (v * mp.conj(v)).real


# ---- Abel n=3 closed check with full tail
print("== abel tail fix ==", flush=True)
fc = lambda s: mp.cosh(s) ** -3
r = mp.mpf("0.8")
val = 2 * mp.pi * mp.quad(lambda u: 2 * fc(mp.acosh(mp.cosh(r) + u * u)) * u,
                          [0, 1, 2, 4, 8, mp.inf])
print("  n=3 closed check:", mp.nstr(abs(val - mp.pi / mp.cosh(r) ** 2), 5), flush=True)

# ---- heat kernels
print("== heat ==", flush=True)


def heat_odd(t, r, n):
    m = (n - 1) // 2
    rho = (mp.mpf(n) - 1) / 2
    pref = 2 ** (-(mp.mpf(n) + 1) / 2) * mp.pi ** (-mp.mpf(n) / 2) \
        * t ** mp.mpf("-0.5") * mp.e ** (-rho * rho * t)
    def it(s, k):
        if k == 0:
            return mp.e ** (-s * s / (4 * t))
        return -mp.diff(lambda x: it(x, k - 1), s) / mp.sinh(s)
    return pref * it(r, m)


def heat_even(t, r, n):
    m = n // 2 - 1
    rho = (mp.mpf(n) - 1) / 2
    pref = (2 * mp.pi) ** (-(mp.mpf(n) + 1) / 2) * t ** mp.mpf("-0.5") \
        * mp.e ** (-rho * rho * t)
    def inner(s, k):
        if k == 0:
            return mp.e ** (-s * s / (4 * t))
        return -mp.diff(lambda x: inner(x, k - 1), s) / mp.sinh(s)
    def core(s):
        return -mp.diff(lambda x: inner(x, m), s)
    def g(u):
        s = mp.acosh(mp.cosh(r) + u * u)
        return 2 * core(s) / mp.sinh(s)
    return pref * mp.quad(g, [0, 1, 2, 4, mp.inf])


P("h_1(0.7), n=2", heat_even(mp.mpf(1), mp.mpf("0.7"), 2))
P("h_0.8(1.1), n=4", heat_even(mp.mpf("0.8"), mp.mpf("1.1"), 4))
P("h_1(1.3), n=5", heat_odd(mp.mpf(1), mp.mpf("1.3"), 5))

# spectral cross-check: h_t(r) = 2^{n-3} pi^{-n/2-1} Gamma(n/2)
#                                 * int |c|^-2 e^{-(l^2+rho^2)t} phi_l(r) dl
mp.mp.dps = 18
for (n, t, r, direct) in ((2, mp.mpf(1), mp.mpf("0.7"), None),
                          (4, mp.mpf("0.8"), mp.mpf("1.1"), None),
                          (5, mp.mpf(1), mp.mpf("1.3"), None)):
    rho = (mp.mpf(n) - 1) / 2
    C = 2 ** (n - 3) * mp.pi ** (-mp.mpf(n) / 2 - 1) * mp.gamma(mp.mpf(n) / 2)
    spec = C * mp.quad(lambda l: dens(l, n) * mp.e ** (-(l * l + rho * rho) * t) *
                       hyp_phi(l, r, n), [0, 2, 5, 10])
    d = heat_even(t, r, n) if n % 2 == 0 else heat_odd(t, r, n)
    print(f"  spectral-vs-direct n={n}:", mp.nstr(abs(spec - d), 5), flush=True)
mp.mp.dps = 25

# ---- inversion constant, n=3 (everything elementary)
print("== inversion n=3 ==", flush=True)
fH = lambda rr: mp.e ** (-rr * rr)


def H3(lam):
    return 4 * mp.pi / lam * mp.quad(lambda rr: mp.sinh(rr) * mp.sin(lam * rr) * fH(rr),
                                     [0, 2, 4, 8])


x0 = mp.mpf("0.7")
C3 = 2 ** 0 * mp.pi ** mp.mpf("-2.5") * mp.gamma(mp.mpf("1.5"))
frec = C3 * mp.quad(lambda l: l * l * H3(l) * mp.sin(l * x0) / (l * mp.sinh(x0)),
                    [0, 2, 5, 10, 20])
print("  inversion check n=3:", mp.nstr(abs(frec - fH(x0)), 5), flush=True)

# ---- Plancherel constant, n=2 (same constant as inversion)
print("== plancherel n=2 ==", flush=True)
mp.mp.dps = 15


def H2(lam):
    return 2 * mp.pi * mp.quad(lambda rr: mp.sinh(rr) * fH(rr) * hyp_phi(lam, rr, 2),
                               [0, 1, 2, 4])


lhs = 2 * mp.pi * mp.quad(lambda rr: mp.sinh(rr) * fH(rr) ** 2, [0, 2, 4])
C2 = 2 ** -1 * mp.pi ** -2 * mp.gamma(mp.mpf(1))
rhs = C2 * mp.quad(lambda l: H2(l) ** 2 * mp.pi * l * mp.tanh(mp.pi * l), [0, 2, 5, 9])
print("  plancherel check n=2:", mp.nstr(abs(lhs - rhs), 5), flush=True)
mp.mp.dps = 25

# ---- schrodinger modulus pin, n=2
print("== schrodinger ==", flush=True)
t, r = mp.mpf(1), mp.mpf("0.8")


def gsig(sig):
    s = mp.sqrt(r * r + 4 * t * sig)
    return (mp.cosh(s) - mp.cosh(r)) ** mp.mpf("-0.5")


I = mp.quad(lambda u: gsig(u * u) * 2 * u * mp.e ** (-1j * u * u), [0, 1, 2, 3]) \
    + mp.quadosc(lambda s_: gsig(s_) * mp.e ** (-1j * s_), [9, mp.inf],
                 period=2 * mp.pi)
P("|h_{-i}(0.8)|, n=2", (2 * mp.pi) ** mp.mpf("-1.5") * abs(I))

# ---- wave pins, n=2
print("== wave ==", flush=True)
fW = lambda s: mp.e ** (-2 * s * s)
gW = lambda s: mp.e ** (-3 * s * s)
c0 = 1 / (2 ** mp.mpf("1.5") * mp.pi)


def ball_int(h, tt):
    um = mp.sqrt(mp.cosh(tt) - 1)
    return mp.quad(lambda u: 4 * mp.pi * h(mp.acosh(mp.cosh(tt) - u * u)),
                   [0, um / 2, um])


t0 = mp.mpf("1.0")
uf = c0 * mp.diff(lambda tt: ball_int(fW, tt), t0)
ug = c0 * ball_int(gW, t0)
P("u_f(0, 1.0) n=2", uf)
P("u_g(0, 1.0) n=2", ug)

# ---- duality specialization sphere <-> hyperbolic
print("== duality specialization ==", flush=True)


def sphere_phi(l, theta, n):
    a = mp.mpf(n) / 2 - 1
    return mp.jacobi(l, a, a, mp.cos(theta)) * mp.gamma(l + 1) * \
        mp.gamma(mp.mpf(n) / 2) / mp.gamma(mp.mpf(n) / 2 + l)


for (l, n, th) in ((2, 3, mp.mpf("0.6")), (3, 2, mp.mpf("0.8")), (4, 4, mp.mpf("1.0"))):
    rho = (mp.mpf(n) - 1) / 2
    other = mp.hyp2f1(-mp.mpf(l) / 2, rho + mp.mpf(l) / 2, mp.mpf(n) / 2,
                      mp.sin(th) ** 2)
    print(f"  spec l={l} n={n}:", mp.nstr(abs(sphere_phi(l, th, n) - other), 5),
          flush=True)
