#!/usr/bin/env python3
"""Reference values for the 1D rational kernel/transform module (mpmath, 30 digits).

Conventions under test:
  E_lam(x)         = j_{k-1/2}(lam x) + (lam x/(2k+1)) j_{k+1/2}(lam x)
                   = e^{lam x} 1F1(k; 2k+1; -2 lam x),   j_nu(z) = 0F1(nu+1; z^2/4)
  dmu_x(y)         = G(k) |x|^{-2k} (|x|+sgn(x) y)(x^2-y^2)^{k-1} dy on (-|x|,|x|),
                     G(k) = Gamma(k+1/2)/(sqrt(pi) Gamma(k))
  dnu_{x,y}(z)     = nu(x,y,z) |z|^{2k} dz with the three-factor density
  Hf(lam)          = int |x|^{2k} f(x) E_{-i lam}(x) dx
  c                = 2^{k+1/2} Gamma(k+1/2)
  h_t(x,y)         = c^{-1} (2t)^{-1/2-k} e^{-(x^2+y^2)/4t} E_{x/sqrt(2t)}(y/sqrt(2t))
"""
import mpmath as mp

mp.mp.dps = 30


def jmod(nu, z):
    return mp.hyp0f1(nu + 1, z * z / 4)


def kernel_E(lam, x, k):
    z = lam * x
    return jmod(k - mp.mpf(1) / 2, z) + z / (2 * k + 1) * jmod(k + mp.mpf(1) / 2, z)


def kernel_E_1f1(lam, x, k):
    return mp.e**(lam * x) * mp.hyp1f1(k, 2 * k + 1, -2 * lam * x)


def mu_prefac(k):
    return mp.gamma(k + mp.mpf(1) / 2) / (mp.sqrt(mp.pi) * mp.gamma(k))


def mu_density(x, y, k):
    if abs(y) >= abs(x):
        return mp.mpf(0)
    return mu_prefac(k) * abs(x)**(-2 * k) * (abs(x) + mp.sign(x) * y) * (x * x - y * y)**(k - 1)


def mu_int(x, k, g):
    return mp.quad(lambda y: mu_density(x, y, k) * g(y), [-abs(x), 0, abs(x)])


def nu_density(x, y, z, k):
    A, B = abs(abs(x) - abs(y)), abs(x) + abs(y)
    if not (A < abs(z) < B):
        return mp.mpf(0)
    num = (z + x + y) * (z + x - y) * (z - x + y)
    sing = ((z * z - A * A)**(k - 1)) * ((B * B - z * z)**(k - 1))
    return mu_prefac(k) * num / (2 * x * y * z) * sing / (2 * abs(x) * abs(y) * abs(z))**(2 * k - 1)


def nu_int(x, y, k, g):
    A, B = abs(abs(x) - abs(y)), abs(x) + abs(y)
    f = lambda z: nu_density(x, y, z, k) * abs(z)**(2 * k) * g(z)
    return mp.quad(f, [A, (A + B) / 2, B]) + mp.quad(f, [-B, -(A + B) / 2, -A])


def mehta_c(k):
    return 2**(k + mp.mpf(1) / 2) * mp.gamma(k + mp.mpf(1) / 2)


def heat(t, x, y, k):
    c = mehta_c(k)
    return (1 / c) * (2 * t)**(-mp.mpf(1) / 2 - k) * mp.e**(-(x * x + y * y) / (4 * t)) \
        * kernel_E(x / mp.sqrt(2 * t), y / mp.sqrt(2 * t), k)


def show(tag, v):
    print(f"{tag:58s} {mp.nstr(v, 20)}")


# --- kernel ---
show("E_2(1), k=1 (bessel comb)", kernel_E(2, 1, 1))
show("E_2(1), k=1 (e^.. 1F1)", kernel_E_1f1(2, 1, 1))
show("E_2(1), k=1 fixed by e^2*1F1(1;3;-4)", mp.e**2 * mp.hyp1f1(1, 3, -4))
show("E_{-3.2}(1.1), k=0.3", kernel_E(mp.mpf("-3.2"), mp.mpf("1.1"), mp.mpf("0.3")))
show("E_{i*1.3}(0.7), k=0.6 re", mp.re(kernel_E(1.3j, mp.mpf("0.7"), mp.mpf("0.6"))))
show("E_{i*1.3}(0.7), k=0.6 im", mp.im(kernel_E(1.3j, mp.mpf("0.7"), mp.mpf("0.6"))))
show("J: j_{k-1/2}(2*1), k=1 = sin/ z? j_{1/2}(2)", jmod(mp.mpf(1) / 2, 2))
show("E_5(4.9), k=2.5 (large arg)", kernel_E(5, mp.mpf("4.9"), mp.mpf("2.5")))

# --- mu ---
show("mu mass, x=0.8, k=0.6", mu_int(mp.mpf("0.8"), mp.mpf("0.6"), lambda y: 1))
show("mu mass, x=-1.3, k=1.7", mu_int(mp.mpf("-1.3"), mp.mpf("1.7"), lambda y: 1))
show("E recon: int e^{1.5 y} dmu_{0.8}, k=0.6", mu_int(mp.mpf("0.8"), mp.mpf("0.6"), lambda y: mp.e**(mp.mpf("1.5") * y)))
show("E_{1.5}(0.8), k=0.6 direct", kernel_E(mp.mpf("1.5"), mp.mpf("0.8"), mp.mpf("0.6")))

# --- nu ---
show("nu mass, (1,0.7), k=1.5", nu_int(1, mp.mpf("0.7"), mp.mpf("1.5"), lambda z: 1))
show("nu mass, (1.2,-0.5), k=0.8", nu_int(mp.mpf("1.2"), mp.mpf("-0.5"), mp.mpf("0.8"), lambda z: 1))
tv = nu_int(1, mp.mpf("0.7"), 1, lambda z: mp.sign(nu_density(1, mp.mpf("0.7"), z, 1)))


def nu_tv(x, y, k):
    A, B = abs(abs(x) - abs(y)), abs(x) + abs(y)
    f = lambda z: abs(nu_density(x, y, z, k)) * abs(z)**(2 * k)
    return mp.quad(f, [A, (A + B) / 2, B]) + mp.quad(f, [-B, -(A + B) / 2, -A])


show("nu TV, (1,0.7), k=1", nu_tv(1, mp.mpf("0.7"), 1))
show("nu TV, (1,-1.001), k=0.5", nu_tv(1, mp.mpf("-1.001"), mp.mpf("0.5")))
for kk in ("0.5", "1", "2"):
    k = mp.mpf(kk)
    M = mp.sqrt(2) * mp.gamma(k + mp.mpf(1) / 2)**2 / (mp.gamma(k + mp.mpf(1) / 4) * mp.gamma(k + mp.mpf(3) / 4))
    show(f"M closed form, k={kk}", M)
# product formula
lhs = kernel_E(mp.mpf("1.3"), 1, 1) * kernel_E(mp.mpf("1.3"), mp.mpf("0.7"), 1)
rhs = nu_int(1, mp.mpf("0.7"), 1, lambda z: kernel_E(mp.mpf("1.3"), z, 1))
show("E_l(x)E_l(y) lhs, l=1.3,k=1", lhs)
show("int E_l dnu rhs", rhs)

# --- transform ---
k = mp.mpf(1)
c = mehta_c(k)
lam = mp.mpf("0.9")
Hf = mp.quad(lambda x: abs(x)**(2 * k) * mp.e**(-x * x / 2) * kernel_E(-1j * lam, x, k), [-mp.inf, 0, mp.inf])
show("H[e^{-x^2/2}](0.9), k=1", mp.re(Hf))
show("c*e^{-lam^2/2}", c * mp.e**(-lam * lam / 2))

# --- mehta ---
for kk in ("0", "0.5", "1", "2"):
    k = mp.mpf(kk)
    q = mp.quad(lambda x: abs(x)**(2 * k) * mp.e**(-x * x / 2), [-mp.inf, 0, mp.inf])
    show(f"mehta quad k={kk}", q)
    show(f"mehta closed k={kk}", mehta_c(k))

# --- heat ---
show("h_t(0,0), t=0.5, k=1", heat(mp.mpf("0.5"), 0, 0, 1))
show("c^{-1}(2t)^{-k-1/2}, t=0.5, k=1", 1 / mehta_c(1) * mp.mpf(1)**(-mp.mpf(3) / 2))
show("h_{0.5}(1.2,-0.4), k=1", heat(mp.mpf("0.5"), mp.mpf("1.2"), mp.mpf("-0.4"), 1))
mass = mp.quad(lambda y: abs(y)**2 * heat(mp.mpf("0.5"), mp.mpf("1.2"), y, 1), [-mp.inf, 0, mp.inf])
show("heat mass t=0.5, x=1.2, k=1", mass)
sg = mp.quad(lambda z: abs(z)**2 * heat(mp.mpf("0.3"), mp.mpf("0.9"), z, 1) * heat(mp.mpf("0.2"), z, mp.mpf("-0.4"), 1), [-mp.inf, 0, mp.inf])
show("semigroup int, s=0.3,t=0.2", sg)
show("h_{0.5}(0.9,-0.4) direct", heat(mp.mpf("0.5"), mp.mpf("0.9"), mp.mpf("-0.4"), 1))

# --- asymptotics ---
k = mp.mpf(1)
for t in (50, 200, 800):
    v = (1j * t)**k * mp.e**(-1j * t) * kernel_E(1j * t, 1, k)
    show(f"(it)^k e^-itE_it(1) t={t} re", mp.re(v))
    show(f"  im", mp.im(v))
show("target (2pi)^-1/2 c, k=1,l=x=1", mehta_c(1) / mp.sqrt(2 * mp.pi))
for t in (20, 60):
    v = t**(k + 1) * mp.e**(-t) * kernel_E(t, -1, k)
    show(f"t^2 e^-t E_t(-1) t={t}", v)
show("opp target 2^{k-1}k G(k+1/2)/sqrt(pi)", 2**(k - 1) * k * mp.gamma(k + mp.mpf(1) / 2) / mp.sqrt(mp.pi))

# --- translate radial ---
# tau_y f(x) = int dmu_{sgn y}(z) 'f(sqrt(x^2+y^2+2 x z |y|)), f gaussian profile e^{-r^2/2}
x0, y0, k = mp.mpf("0.8"), mp.mpf("0.5"), mp.mpf(1)
prof = lambda r: mp.e**(-r * r / 2)
tr = mu_int(1, k, lambda z: prof(mp.sqrt(x0 * x0 + y0 * y0 + 2 * x0 * z * y0)))
show("translate_radial gauss (x=0.8,y=0.5,k=1)", tr)
# transform-based definition: tau_y f(x) = c^-2 int |l|^2k Hf(l) E_il(x) E_il(y) dl
c = mehta_c(k)
Hg = lambda l: mp.quad(lambda x: abs(x)**(2 * k) * prof(abs(x)) * kernel_E(-1j * l, x, k), [-mp.inf, 0, mp.inf])
tr2 = c**(-2) * mp.quad(lambda l: abs(l)**(2 * k) * Hg(l) * kernel_E(1j * l, x0, k) * kernel_E(1j * l, y0, k), [-8, 0, 8])
show("translate via transform (same)", mp.re(tr2))

# --- three-regime envelope ratios (sanity that ratios are bounded) ---
def env(t, x, y, k):
    if abs(x * y) <= t:
        return t**(-k - mp.mpf(1) / 2) * mp.e**(-(x * x + y * y) / (4 * t))
    if x * y >= t:
        return t**(-mp.mpf(1) / 2) * (x * y)**(-k) * mp.e**(-(x - y)**2 / (4 * t))
    return t**(mp.mpf(1) / 2) * (-x * y)**(-k - 1) * mp.e**(-(x + y)**2 / (4 * t))


rats = []
for t in (mp.mpf("0.01"), mp.mpf("0.1"), 1, 10):
    for x in (mp.mpf("-6"), mp.mpf("-2"), mp.mpf("0.5"), mp.mpf("3"), 6):
        for y in (mp.mpf("-5"), mp.mpf("-0.3"), 1, mp.mpf("4.5")):
            rats.append(heat(t, x, y, 1) / env(t, x, y, 1))
show("heat/env min over grid (k=1)", min(rats))
show("heat/env max over grid (k=1)", max(rats))
