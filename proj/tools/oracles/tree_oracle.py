# Reference values for the homogeneous-tree module: inverse-transform
# constant, sample transform values, singular-branch continuity.
import mpmath as mp

mp.mp.dps = 25


def P(label, v, digits=21):
    print(f"{label} = {mp.nstr(v, digits)}", flush=True)


def c_tree(lam, q):
    q = mp.mpf(q)
    num = q ** (mp.mpf("0.5") + 1j * lam) - q ** (-mp.mpf("0.5") - 1j * lam)
    den = q ** (1j * lam) - q ** (-1j * lam)
    return num / (den * (mp.sqrt(q) + 1 / mp.sqrt(q)))


def tree_phi(lam, r, q):
    qm = mp.mpf(q)
    tau = 2 * mp.pi / mp.log(qm)
    # generic branch only (lam not in (tau/2) Z)
    return c_tree(lam, q) * qm ** ((-mp.mpf("0.5") + 1j * lam) * r) + \
        c_tree(-lam, q) * qm ** ((-mp.mpf("0.5") - 1j * lam) * r)


def H_tree(fvals, lam, q):
    # fvals: list of radial values f(0), f(1), ...
    qm = mp.mpf(q)
    s = mp.mpf(fvals[0])
    for r in range(1, len(fvals)):
        s += (mp.sqrt(qm) + 1 / mp.sqrt(qm)) / mp.sqrt(qm) * qm ** r * \
            mp.mpf(fvals[r]) * tree_phi(lam, r, q)
    return s


q = 3
tau = 2 * mp.pi / mp.log(mp.mpf(q))
P("tau (q=3)", tau)
P("gamma0 (q=3)", 2 / (mp.sqrt(mp.mpf(q)) + 1 / mp.sqrt(mp.mpf(q))))
P("c(0.37)+c(-0.37) (q=3)", c_tree(mp.mpf("0.37"), q) + c_tree(-mp.mpf("0.37"), q))
P("phi_0.37(3) (q=3)", tree_phi(mp.mpf("0.37"), 3, q))

# singular branch continuity at lam -> tau/2, r = 4
r = 4
sing = (-1) ** r * (1 + (mp.sqrt(3) - 1 / mp.sqrt(3)) / (mp.sqrt(3) + 1 / mp.sqrt(3)) * r) \
    * mp.mpf(3) ** (-mp.mpf(r) / 2)
lim = tree_phi(tau / 2 - mp.mpf("1e-9"), r, q)
print("  singular continuity:", mp.nstr(abs(lim - sing), 5), flush=True)

# sample transform: f(r) = 2^{-r} for r <= 3, q = 3
fv = [mp.mpf(1), mp.mpf("0.5"), mp.mpf("0.25"), mp.mpf("0.125")]
P("Hf(0.37)", H_tree(fv, mp.mpf("0.37"), q))
P("Hf(1.1)", H_tree(fv, mp.mpf("1.1"), q))

# inverse transform: f(r) = q/(q+1) * (1/tau) int_0^{tau/2} |c|^-2 Hf phi dl
def dens(lam):
    cv = c_tree(lam, q)
    return 1 / (cv * mp.conj(cv)).real


for r in range(4):
    rec = mp.mpf(q) / (q + 1) / tau * mp.quad(
        lambda l: dens(l) * H_tree(fv, l, q) * tree_phi(l, r, q),
        [0, tau / 8, tau / 4, 3 * tau / 8, tau / 2])
    print(f"  inverse check r={r}:", mp.nstr(abs(rec - fv[r]), 5), flush=True)

# delta at origin: Hf == 1, recover f(0)=1, f(1)=0
for r in range(2):
    rec = mp.mpf(q) / (q + 1) / tau * mp.quad(
        lambda l: dens(l) * tree_phi(l, r, q),
        [0, tau / 8, tau / 4, 3 * tau / 8, tau / 2])
    print(f"  delta inverse r={r}:", mp.nstr(rec, 12), flush=True)

# Abel transform of delta-origin and of f, plus diagram at lam = 0.3, 1.1
def abel(fvals, h, q):
    qm = mp.mpf(q)
    s = qm ** (mp.mpf(abs(h)) / 2) * (fvals[abs(h)] if abs(h) < len(fvals) else mp.mpf(0))
    j = 1
    while abs(h) + 2 * j < len(fvals):
        s += (qm - 1) / qm * qm ** (mp.mpf(abs(h)) / 2 + j) * fvals[abs(h) + 2 * j]
        j += 1
    return s


for lam in (mp.mpf("0.3"), mp.mpf("1.1")):
    qm = mp.mpf(q)
    FA = mp.mpf(0)
    for h in range(-10, 11):
        FA += qm ** (1j * lam * h) * abel(fv, h, q)
    print(f"  diagram check lam={lam}:", mp.nstr(abs(FA - H_tree(fv, lam, q)), 5),
          flush=True)

# heat estimate psi at sample points
psi = lambda z: (1 + z) / 2 * mp.log(1 + z) - (1 - z) / 2 * mp.log(1 - z)
P("psi(0.5)", psi(mp.mpf("0.5")))
