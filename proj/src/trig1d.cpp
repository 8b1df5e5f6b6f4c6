#include "dunkl/trig1d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "dunkl/dunkl1d.hpp"

namespace dunkl {
namespace t1 {

using num::gamma_fn;
using num::pi;

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void require_mult(TrigMult1D k, const char* who) {
  if (!k.valid())
    throw num_error(errc::domain,
                    std::string(who) + ": multiplicities must be >= 0");
}

void require_nonzero_mult(TrigMult1D k, const char* who) {
  require_mult(k, who);
  if (k.zero())
    throw num_error(errc::domain,
                    std::string(who) +
                        ": degenerate multiplicity (0,0), the measure is a "
                        "point mass");
}

// Closed Gauss forms at argument z = -sinh^2(x/2).
KernelEval closed_F(cplx lam, double x, TrigMult1D k,
                    const ToleranceProfile& tol) {
  double sh = std::sinh(0.5 * x);
  double r = k.rho();
  return num::gauss_2f1(r + lam, r - lam, k.k1 + k.k2 + 0.5, -sh * sh, tol);
}

KernelEval closed_G(cplx lam, double x, TrigMult1D k,
                    const ToleranceProfile& tol) {
  double sh = std::sinh(0.5 * x);
  double z = -sh * sh;
  double r = k.rho();
  KernelEval first = num::gauss_2f1(r + lam, r - lam, k.k1 + k.k2 + 0.5, z, tol);
  KernelEval second =
      num::gauss_2f1(r + 1.0 + lam, r + 1.0 - lam, k.k1 + k.k2 + 1.5, z, tol);
  cplx coef = (r + lam) / (2.0 * k.k1 + 2.0 * k.k2 + 1.0) * std::sinh(x);
  KernelEval out;
  out.value = first.value + coef * second.value;
  out.err_est = first.err_est + std::abs(coef) * second.err_est;
  out.terms_used = first.terms_used + second.terms_used;
  out.branch_note = "closed:" + first.branch_note;
  return out;
}

// Richardson average over lam +- h, +- 2h (kills the O(h^2) term); used when
// the Gauss evaluation rejects a resonant spectral parameter (a - b integral)
// at very negative argument.  The shifted parameters are non-resonant.
template <typename F>
KernelEval richardson_lam(const F& eval, cplx lam, double xscale) {
  const double h = 1e-3;
  KernelEval p1 = eval(lam + h), m1 = eval(lam - h);
  KernelEval p2 = eval(lam + 2.0 * h), m2 = eval(lam - 2.0 * h);
  KernelEval out;
  out.value = (4.0 * (p1.value + m1.value) - (p2.value + m2.value)) / 6.0;
  double hx = h * std::abs(xscale);
  out.err_est = p1.err_est + m1.err_est + p2.err_est + m2.err_est +
                hx * hx * hx * hx * std::abs(out.value);
  out.terms_used =
      p1.terms_used + m1.terms_used + p2.terms_used + m2.terms_used;
  out.branch_note = "resonant-interpolation";
  return out;
}

template <typename F>
KernelEval eval_with_fallback(const F& eval, cplx lam, double xscale) {
  try {
    return eval(lam);
  } catch (const num_error& e) {
    if (e.code != errc::unsupported) throw;
    return richardson_lam(eval, lam, xscale);
  }
}

// Far from the real spectral axis the Gauss forms cancel catastrophically
// (the series peak grows like e^{2 |Im lam| sinh(|x|/2)}), while the
// Harish-Chandra series is uniformly benign: the recurrence denominators
// l (l - 2 lam) stay bounded away from zero.  Its coefficients only grow
// polynomially, so the series needs |x| bounded away from 0 for the
// e^{-l x} tail to die; below the argument threshold the Gauss series is
// safe precisely because e^{2 |Im lam| sinh(|x|/2)} stays moderate.
constexpr double kHcImagThreshold = 3.5;
constexpr double kHcArgThreshold = 0.4;

struct HcFG {
  cplx F;         // symmetric kernel at |x|
  cplx Fprime;    // its x-derivative at |x|
  double err;
  int terms;
};

HcFG hc_far_fg(cplx lam, double ax, TrigMult1D k) {
  // single-slot cache: transforms evaluate many x at one spectral parameter
  struct Slot {
    bool valid = false;
    cplx lam;
    double k1, k2;
    int L;
    std::vector<cplx> gp, gm;
    cplx cp, cm;
  };
  thread_local Slot slot;
  // coefficient growth is ~ l^{2(k1+k2)-2}; size the expansion so the tail
  // l^p e^{-l |x|} is negligible from |x| = kHcArgThreshold on
  int L = 120 + 48 * static_cast<int>(std::ceil(2.0 * (k.k1 + k.k2)));
  if (!slot.valid || slot.lam != lam || slot.k1 != k.k1 || slot.k2 != k.k2 ||
      slot.L != L) {
    slot.lam = lam;
    slot.k1 = k.k1;
    slot.k2 = k.k2;
    slot.L = L;
    slot.gp = hc_coefficients(lam, k, L);
    slot.gm = hc_coefficients(-lam, k, L);
    slot.cp = c_function(lam, k);
    slot.cm = c_function(-lam, k);
    slot.valid = true;
  }
  double r = k.rho();
  cplx ep = std::exp((lam - r) * ax), em = std::exp((-lam - r) * ax);
  double ex = std::exp(-ax);
  cplx Fp = 0.0, Fm = 0.0, Dp = 0.0, Dm = 0.0;
  double absum = 0.0;
  double f = 1.0;
  int used = 0;
  double last = 0.0, prev = 0.0;
  for (int l = 0; l <= L; ++l) {
    cplx tp = slot.gp[l] * f, tm = slot.gm[l] * f;
    Fp += tp;
    Fm += tm;
    Dp += tp * (lam - r - static_cast<double>(l));
    Dm += tm * (-lam - r - static_cast<double>(l));
    prev = last;
    last = std::abs(tp) + std::abs(tm);
    absum += last;
    f *= ex;
    used = l + 1;
    // break only on two consecutive negligible terms: when one multiplicity
    // vanishes, every other coefficient is exactly zero and a single small
    // term says nothing about the tail
    if (l > 12 && std::max(last, prev) <= 1e-18 * absum) break;
  }
  HcFG out;
  out.F = slot.cp * ep * Fp + slot.cm * em * Fm;
  out.Fprime = slot.cp * ep * Dp + slot.cm * em * Dm;
  double cscale = std::max(std::abs(slot.cp * ep), std::abs(slot.cm * em));
  out.err = cscale * (last + 1e-15 * absum);
  out.terms = 2 * used;
  return out;
}

KernelEval hc_far_F(cplx lam, double x, TrigMult1D k) {
  if (x == 0.0) {
    KernelEval r;
    r.value = 1.0;
    r.branch_note = "harish-chandra-far";
    return r;
  }
  HcFG fg = hc_far_fg(lam, std::abs(x), k);
  KernelEval r;
  r.value = fg.F;
  r.err_est = fg.err;
  r.terms_used = fg.terms;
  r.branch_note = "harish-chandra-far";
  return r;
}

// G from the symmetric kernel:  G_lam = F_lam + F_lam' / (lam - rho),
// with F even and F' odd in x.
KernelEval hc_far_G(cplx lam, double x, TrigMult1D k) {
  if (x == 0.0) {
    KernelEval r;
    r.value = 1.0;
    r.branch_note = "harish-chandra-far";
    return r;
  }
  HcFG fg = hc_far_fg(lam, std::abs(x), k);
  cplx fprime = (x >= 0.0) ? fg.Fprime : -fg.Fprime;
  KernelEval r;
  r.value = fg.F + fprime / (lam - k.rho());
  r.err_est = fg.err * 2.0;
  r.terms_used = fg.terms;
  r.branch_note = "harish-chandra-far";
  return r;
}

}  // namespace

KernelEval jacobi_phi(cplx lam, double t, double alpha, double beta,
                      const ToleranceProfile& tol) {
  if (!(alpha > -1.0))
    throw num_error(errc::domain,
                    "jacobi_phi: alpha must exceed -1 (parameter pole)");
  double sh = std::sinh(t);
  double z = -sh * sh;
  auto eval = [&](cplx l) {
    cplx il = cplx(0.0, 1.0) * l;
    return num::gauss_2f1(0.5 * (alpha + beta + 1.0 - il),
                          0.5 * (alpha + beta + 1.0 + il), alpha + 1.0, z, tol);
  };
  return eval_with_fallback(eval, lam, 2.0 * t);
}

KernelEval ho_F(cplx lam, double x, TrigMult1D k, const ToleranceProfile& tol) {
  require_mult(k, "ho_F");
  if (k.zero()) {
    KernelEval r;
    r.value = std::cosh(lam * x);
    r.branch_note = "classical-cosh";
    return r;
  }
  if (std::abs(lam.imag()) >= kHcImagThreshold &&
      std::abs(x) >= kHcArgThreshold)
    return hc_far_F(lam, x, k);
  auto eval = [&](cplx l) { return closed_F(l, x, k, tol); };
  return eval_with_fallback(eval, lam, x);
}

KernelEval opdam_G(cplx lam, double x, TrigMult1D k,
                   const ToleranceProfile& tol) {
  require_mult(k, "opdam_G");
  if (k.zero()) {
    KernelEval r;
    r.value = std::exp(lam * x);
    r.branch_note = "classical-exponential";
    return r;
  }
  if (std::abs(lam.imag()) >= kHcImagThreshold &&
      std::abs(x) >= kHcArgThreshold)
    return hc_far_G(lam, x, k);
  auto eval = [&](cplx l) { return closed_G(l, x, k, tol); };
  return eval_with_fallback(eval, lam, x);
}

double c0_constant(TrigMult1D k) {
  require_mult(k, "c0_constant");
  // continuity value: Gamma(2s)/Gamma(s) -> 1/2 as s -> 0
  if (k.zero()) return 0.5;
  return gamma_fn(2.0 * (k.k1 + k.k2)) / gamma_fn(k.k1 + k.k2);
}

cplx c_function(cplx lam, TrigMult1D k) {
  require_mult(k, "c_function");
  if (k.zero()) return 0.5;
  cplx v = c0_constant(k) * gamma_fn(2.0 * lam) * gamma_fn(lam + 0.5 * k.k1) /
           (gamma_fn(2.0 * lam + k.k1) * gamma_fn(lam + 0.5 * k.k1 + k.k2));
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw num_error(errc::domain,
                    "c_function: gamma pole at this spectral parameter");
  return v;
}

cplx plancherel_density(double lam, TrigMult1D k) {
  require_mult(k, "plancherel_density");
  if (k.zero()) return 1.0;
  if (lam == 0.0) return 0.0;  // vanishes linearly at the spectral origin
  cplx il(0.0, lam);
  cplx p1 = gamma_fn(2.0 * il + k.k1) / gamma_fn(2.0 * il) *
            gamma_fn(-2.0 * il + k.k1 + 1.0) / gamma_fn(-2.0 * il + 1.0);
  cplx p2 = gamma_fn(il + 0.5 * k.k1 + k.k2) / gamma_fn(il + 0.5 * k.k1) *
            gamma_fn(-il + 0.5 * k.k1 + k.k2 + 1.0) /
            gamma_fn(-il + 0.5 * k.k1 + 1.0);
  return p1 * p2;
}

cplx plancherel_density_ratio_form(double lam, TrigMult1D k) {
  require_mult(k, "plancherel_density_ratio_form");
  if (k.zero()) return 1.0;
  if (lam == 0.0) return 0.0;
  cplx il(0.0, lam);
  cplx c = c_function(il, k);
  double c0 = c0_constant(k);
  return c0 * c0 / (c * std::conj(c)) * (k.rho() - il) / (-il);
}

double plancherel_density_sym(double lam, TrigMult1D k) {
  require_mult(k, "plancherel_density_sym");
  if (k.zero()) return 1.0;
  if (lam == 0.0) return 0.0;
  cplx c = c_function(cplx(0.0, lam), k);
  double c0 = c0_constant(k);
  return c0 * c0 / (c * std::conj(c)).real();
}

CPlancherel c_and_plancherel(double lam, TrigMult1D k) {
  return {c_function(cplx(lam, 0.0), k), plancherel_density(lam, k)};
}

std::vector<cplx> hc_coefficients(cplx lam, TrigMult1D k, int L) {
  require_mult(k, "hc_coefficients");
  if (L < 0) throw num_error(errc::domain, "hc_coefficients: L >= 0 required");
  double r = k.rho();
  std::vector<cplx> G(static_cast<size_t>(L) + 1);
  G[0] = 1.0;
  for (int l = 1; l <= L; ++l) {
    cplx denom = static_cast<double>(l) * (static_cast<double>(l) - 2.0 * lam);
    if (std::abs(denom) < 1e-9)
      throw num_error(errc::domain,
                      "hc_coefficients: resonant spectral parameter (2 lam = " +
                          fmt(static_cast<double>(l)) + ")");
    cplx s = 0.0;
    for (int j = 1; j <= l; ++j)
      s += -2.0 * k.k1 * (lam - r - static_cast<double>(l - j)) * G[l - j];
    for (int j = 1; j <= l / 2; ++j)
      s += -4.0 * k.k2 * (lam - r - static_cast<double>(l - 2 * j)) * G[l - 2 * j];
    G[l] = s / denom;
  }
  return G;
}

KernelEval hc_series_F(cplx lam, double x, TrigMult1D k, int L,
                       const ToleranceProfile& tol) {
  (void)tol;
  std::vector<cplx> gp = hc_coefficients(lam, k, L);
  std::vector<cplx> gm = hc_coefficients(-lam, k, L);
  double r = k.rho();
  cplx phi_p = 0.0, phi_m = 0.0;
  for (int l = 0; l <= L; ++l) {
    phi_p += gp[l] * std::exp((lam - r - static_cast<double>(l)) * x);
    phi_m += gm[l] * std::exp((-lam - r - static_cast<double>(l)) * x);
  }
  cplx cp = c_function(lam, k), cm = c_function(-lam, k);
  KernelEval out;
  out.value = cp * phi_p + cm * phi_m;
  out.terms_used = 2 * (L + 1);
  out.err_est =
      (std::abs(cp * gp[L]) * std::exp((lam.real() - r - L) * x) +
       std::abs(cm * gm[L]) * std::exp((-lam.real() - r - L) * x));
  out.branch_note = "harish-chandra";
  return out;
}

double delta_weight(double x, TrigMult1D k) {
  require_mult(k, "delta_weight");
  return std::pow(std::abs(2.0 * std::sinh(0.5 * x)), 2.0 * k.k1) *
         std::pow(std::abs(2.0 * std::sinh(x)), 2.0 * k.k2);
}

double inv_norm2(TrigMult1D k) {
  require_mult(k, "inv_norm2");
  double g = gamma_fn(k.k1 + k.k2 + 0.5);
  return std::pow(2.0, 4.0 * (k.k1 + k.k2) + 1.0) * g * g;
}

namespace {

// Shared forward body; `kernel` evaluates the trigonometric kernel at
// (i lam, x).
KernelEval transform_forward(const std::function<double(double)>& f, double R,
                             cplx lam, TrigMult1D k,
                             const std::function<cplx(cplx, double)>& kernel,
                             const char* who, const ToleranceProfile& tol) {
  require_mult(k, who);
  if (!(R > 0.0))
    throw num_error(errc::domain,
                    std::string(who) + ": support must be positive");
  double edge = delta_weight(R, k) * (std::abs(f(R)) + std::abs(f(-R)));
  if (edge > 1e-5)
    throw num_error(errc::domain,
                    std::string(who) +
                        ": insufficient decay at the declared support "
                        "(weighted edge " +
                        fmt(edge) + " at |x| = " + fmt(R) + ")");
  cplx il = cplx(0.0, 1.0) * lam;
  auto integrand = [&](double x) -> cplx {
    return delta_weight(x, k) * f(x) * kernel(il, x);
  };
  // split at 0 (the weight has an algebraic kink there); locally adaptive
  // panels stay honest on the oscillation at large spectral parameter
  KernelEval left = num::quad_c(integrand, -R, 0.0, num::QuadMode::adaptive, tol);
  KernelEval right = num::quad_c(integrand, 0.0, R, num::QuadMode::adaptive, tol);
  KernelEval out;
  out.value = left.value + right.value;
  out.err_est = left.err_est + right.err_est;
  out.terms_used = std::max(left.terms_used, right.terms_used);
  out.branch_note = "forward";
  return out;
}

KernelEval transform_inverse(const std::function<cplx(double)>& fhat, double L,
                             double x, TrigMult1D k,
                             const std::function<cplx(double)>& spectral,
                             const char* who, const ToleranceProfile& tol) {
  require_mult(k, who);
  if (!(L > 0.0))
    throw num_error(errc::domain, std::string(who) + ": cutoff must be positive");
  double edge = (std::abs(plancherel_density(L, k)) + 1.0) *
                (std::abs(fhat(L)) + std::abs(fhat(-L)));
  if (edge > 1e-5)
    throw num_error(errc::domain,
                    std::string(who) +
                        ": insufficient spectral decay at the declared cutoff "
                        "(weighted edge " +
                        fmt(edge) + " at |lam| = " + fmt(L) + ")");
  KernelEval out = num::quad_c(spectral, -L, L, num::QuadMode::adaptive, tol);
  double n2 = inv_norm2(k);
  out.value /= n2;
  out.err_est /= n2;
  out.branch_note = "inverse";
  (void)x;
  return out;
}

}  // namespace

KernelEval cherednik_transform(const std::function<double(double)>& f,
                               double support, cplx lam, TrigMult1D k,
                               const ToleranceProfile& tol) {
  auto kernel = [&](cplx il, double x) -> cplx {
    return opdam_G(il, -x, k, tol).value;
  };
  return transform_forward(f, support, lam, k, kernel, "cherednik_transform",
                           tol);
}

KernelEval cherednik_inverse(const std::function<cplx(double)>& fhat,
                             double cutoff, double x, TrigMult1D k,
                             const ToleranceProfile& tol) {
  auto spectral = [&](double lam) -> cplx {
    return plancherel_density(lam, k) * fhat(lam) *
           opdam_G(cplx(0.0, lam), x, k, tol).value;
  };
  return transform_inverse(fhat, cutoff, x, k, spectral, "cherednik_inverse",
                           tol);
}

KernelEval cherednik_transform_sym(const std::function<double(double)>& f,
                                   double support, cplx lam, TrigMult1D k,
                                   const ToleranceProfile& tol) {
  auto kernel = [&](cplx il, double x) -> cplx {
    return ho_F(il, x, k, tol).value;
  };
  return transform_forward(f, support, lam, k, kernel,
                           "cherednik_transform_sym", tol);
}

KernelEval cherednik_inverse_sym(const std::function<cplx(double)>& fhat,
                                 double cutoff, double x, TrigMult1D k,
                                 const ToleranceProfile& tol) {
  auto spectral = [&](double lam) -> cplx {
    return plancherel_density_sym(lam, k) * fhat(lam) *
           ho_F(cplx(0.0, lam), x, k, tol).value;
  };
  return transform_inverse(fhat, cutoff, x, k, spectral,
                           "cherednik_inverse_sym", tol);
}

double pw_gauge_sup(const std::function<double(double)>& f, double support,
                    int N, const std::vector<double>& lam_grid,
                    const std::vector<double>& mu_grid, TrigMult1D k,
                    const ToleranceProfile& tol) {
  if (N < 0) throw num_error(errc::domain, "pw_gauge_sup: N >= 0 required");
  double sup = 0.0;
  for (double mu : mu_grid) {
    for (double l : lam_grid) {
      cplx v = cherednik_transform(f, support, cplx(l, mu), k, tol).value;
      double gauge = std::abs(v) * std::pow(1.0 + std::abs(l), N) *
                     std::exp(-support * std::abs(mu));
      sup = std::max(sup, gauge);
    }
  }
  return sup;
}

namespace {

// k1 = 0 closed-form prefactor (kappa = multiplicity on the long root).
double mu_limit_pref(double x, double kappa) {
  return std::pow(2.0, kappa - 1.0) * gamma_fn(kappa + 0.5) /
         (std::sqrt(pi) * gamma_fn(kappa)) *
         std::pow(std::abs(std::sinh(x)), -2.0 * kappa);
}

double mu_generic_pref(double x, TrigMult1D k) {
  return std::pow(2.0, k.k1 + k.k2 - 2.0) * gamma_fn(k.k1 + k.k2 + 0.5) /
         (std::sqrt(pi) * gamma_fn(k.k1) * gamma_fn(k.k2)) *
         std::pow(std::abs(std::sinh(0.5 * x)), -2.0 * k.k1) *
         std::pow(std::abs(std::sinh(x)), -2.0 * k.k2);
}

// Inner integral of the generic case over z in (ay, ax):
//   sinh(z/2) (cosh(z/2)-cosh(y/2))^{k1-1} (cosh x - cosh z)^{k2-1}
//   * (e^{x/2} 2 cosh(x/2) - e^{-y/2} 2 cosh(z/2))
// with both singular cosh differences written as products of sinh's of the
// exact endpoint distances.
double mu_generic_inner(double x, double y, double ay, double ax,
                        TrigMult1D k, const ToleranceProfile& tol) {
  double lead = std::exp(0.5 * x) * 2.0 * std::cosh(0.5 * x);
  double eym = std::exp(-0.5 * y);
  auto inner = [&](double z, double dza, double dzb) {
    double f1 = 2.0 * std::sinh(0.25 * (z + ay)) * std::sinh(0.25 * dza);
    double f2 = 2.0 * std::sinh(0.5 * (ax + z)) * std::sinh(0.5 * dzb);
    return std::sinh(0.5 * z) * std::pow(f1, k.k1 - 1.0) *
           std::pow(f2, k.k2 - 1.0) *
           (lead - eym * 2.0 * std::cosh(0.5 * z));
  };
  return num::quad_de_sing(inner, ay, ax, tol).re();
}

template <typename T>
T de_sing(const std::function<T(double, double, double)>& f, double a,
          double b, const ToleranceProfile& tol) {
  if constexpr (std::is_same_v<T, double>)
    return num::quad_de_sing(f, a, b, tol).re();
  else
    return num::quad_de_sing_c(f, a, b, tol).value;
}

template <typename T>
T mu_integrate_impl(double x, TrigMult1D k,
                    const std::function<T(double)>& g,
                    const ToleranceProfile& tol) {
  require_mult(k, "mu_trig_integrate");
  if (k.zero()) return g(x);  // identity intertwiner: Dirac mass at x
  if (x == 0.0) return g(0.0);
  double ax = std::abs(x);
  double sgn = x > 0.0 ? 1.0 : -1.0;
  std::function<T(double, double, double)> integrand;
  if (k.k1 == 0.0) {
    double pref = mu_limit_pref(x, k.k2);
    double ex = std::exp(x);
    integrand = [=](double y, double da, double db) -> T {
      double f = 2.0 * std::sinh(0.5 * da) * std::sinh(0.5 * db);
      return pref * std::pow(f, k.k2 - 1.0) * sgn * (ex - std::exp(-y)) * g(y);
    };
  } else if (k.k2 == 0.0) {
    double pref = 0.5 * mu_limit_pref(0.5 * x, k.k1);
    double exh = std::exp(0.5 * x);
    integrand = [=](double y, double da, double db) -> T {
      double f = 2.0 * std::sinh(0.25 * da) * std::sinh(0.25 * db);
      return pref * std::pow(f, k.k1 - 1.0) * sgn *
             (exh - std::exp(-0.5 * y)) * g(y);
    };
  } else {
    double pref = mu_generic_pref(x, k);
    integrand = [=, &tol](double y, double da, double db) -> T {
      double ay = ax - std::min(da, db);
      if (ay < 0.0) ay = 0.0;
      // deep double-exponential nodes sit closer to +-x than one ulp; the
      // inner interval collapses and the contribution is below noise
      if (!(ay < ax)) return T{};
      return pref * sgn * mu_generic_inner(x, y, ay, ax, k, tol) * g(y);
    };
  }
  return de_sing<T>(integrand, -ax, ax, tol);
}

}  // namespace

double mu_trig_density(double x, double y, TrigMult1D k,
                       const ToleranceProfile& tol) {
  require_nonzero_mult(k, "mu_trig_density");
  if (x == 0.0)
    throw num_error(errc::domain,
                    "mu_trig_density: x = 0 gives the Dirac mass at 0");
  double ax = std::abs(x);
  if (std::abs(y) >= ax) return 0.0;
  double sgn = x > 0.0 ? 1.0 : -1.0;
  if (k.k1 == 0.0)
    return mu_limit_pref(x, k.k2) *
           std::pow(std::cosh(x) - std::cosh(y), k.k2 - 1.0) * sgn *
           (std::exp(x) - std::exp(-y));
  if (k.k2 == 0.0)
    return 0.5 * mu_limit_pref(0.5 * x, k.k1) *
           std::pow(std::cosh(0.5 * x) - std::cosh(0.5 * y), k.k1 - 1.0) *
           sgn * (std::exp(0.5 * x) - std::exp(-0.5 * y));
  return mu_generic_pref(x, k) * sgn *
         mu_generic_inner(x, y, std::abs(y), ax, k, tol);
}

double mu_trig_integrate(double x, TrigMult1D k,
                         const std::function<double(double)>& g,
                         const ToleranceProfile& tol) {
  return mu_integrate_impl<double>(x, k, g, tol);
}

cplx mu_trig_integrate_c(double x, TrigMult1D k,
                         const std::function<cplx(double)>& g,
                         const ToleranceProfile& tol) {
  return mu_integrate_impl<cplx>(x, k, g, tol);
}

namespace {

double sign3(double x, double y, double z) {
  int n = (x < 0.0) + (y < 0.0) + (z < 0.0);
  return (n % 2 == 0) ? 1.0 : -1.0;
}

// Direct (pointwise) k1 = 0 density.
double nu_limit_direct(double x, double y, double z, double kappa) {
  double t1 = 0.5 * (x + y + z), t2 = 0.5 * (-x + y + z);
  double t3 = 0.5 * (x - y + z), t4 = 0.5 * (x + y - z);
  double q4 = std::sinh(t1) * std::sinh(t2) * std::sinh(t3) * std::sinh(t4);
  if (q4 < 0.0) q4 = 0.0;
  double C = std::pow(2.0, 2.0 * kappa - 1.0) * gamma_fn(kappa + 0.5) /
             (std::sqrt(pi) * gamma_fn(kappa));
  return C * sign3(x, y, z) *
         std::pow(std::abs(std::sinh(x) * std::sinh(y)), -2.0 * kappa) *
         std::pow(q4, kappa) * std::exp(t4) / std::sinh(t4);
}

// Generic density (k1, k2 > 0) via the angular integral over
// chi in (0, arccos(B/A)), where the integrand's positive part lives.
double nu_generic_direct(double x, double y, double z, TrigMult1D k,
                         const ToleranceProfile& tol) {
  double A = std::cosh(0.5 * x) * std::cosh(0.5 * y) * std::cosh(0.5 * z);
  double B = 0.25 * (1.0 + std::cosh(x) + std::cosh(y) + std::cosh(z));
  double ratio = B / A;
  if (!(ratio < 1.0)) return 0.0;
  double chimax = std::acos(ratio);
  double c1 = std::sinh(0.5 * (x + y + z)) -
              2.0 * std::cosh(0.5 * x) * std::cosh(0.5 * y) * std::sinh(0.5 * z);
  double c2 = (k.k1 + 2.0 * k.k2) / k.k2 * A;
  double c3 = 0.5 * (std::sinh(z) - std::sinh(x) - std::sinh(y));
  auto inner = [&](double chi, double dca, double dcb) {
    (void)dca;  // chi itself is the exact distance to the left endpoint
    double base = 2.0 * A * std::sin(0.5 * (chi + chimax)) * std::sin(0.5 * dcb);
    double schi = std::sin(chi);
    double bracket = c1 + c2 * schi * schi + c3 * std::cos(chi);
    return std::pow(schi, 2.0 * k.k2 - 1.0) * std::pow(base, k.k1 - 1.0) *
           bracket;
  };
  double I = num::quad_de_sing(inner, 0.0, chimax, tol).re();
  double pref =
      std::pow(2.0, k.k1 - 2.0) * gamma_fn(k.k1 + k.k2 + 0.5) /
      (std::sqrt(pi) * gamma_fn(k.k1) * gamma_fn(k.k2)) * sign3(x, y, z) *
      std::pow(std::abs(std::sinh(0.5 * x) * std::sinh(0.5 * y)),
               -2.0 * k.k1 - 2.0 * k.k2) *
      std::pow(std::cosh(0.5 * z), 2.0 * k.k2);
  return pref * I;
}

// Stable difference z - beta along a shell component: z = sgn * r with
// r in (a, b), da = r - a, db = b - r.  When beta coincides with a component
// endpoint the difference is taken from the exact quadrature distances.
double shell_diff(double r, double sgn, double beta, double a, double da,
                  double b, double db) {
  double sb = sgn * beta;
  double scale = 1.0 + std::abs(beta);
  if (std::abs(sb - a) <= 1e-12 * scale) return sgn * da;
  if (std::abs(sb - b) <= 1e-12 * scale) return sgn * (-db);
  return sgn * (r - sb);
}

// k1 = 0 density evaluated with endpoint-stable half-sum arguments.
double nu_limit_stable(double x, double y, double sgn, double r, double da,
                       double db, double a, double b, double kappa) {
  double t1 = 0.5 * shell_diff(r, sgn, -(x + y), a, da, b, db);
  double t2 = 0.5 * shell_diff(r, sgn, x - y, a, da, b, db);
  double t3 = 0.5 * shell_diff(r, sgn, y - x, a, da, b, db);
  double t4 = -0.5 * shell_diff(r, sgn, x + y, a, da, b, db);
  double q4 = std::sinh(t1) * std::sinh(t2) * std::sinh(t3) * std::sinh(t4);
  if (q4 < 0.0) q4 = 0.0;
  double C = std::pow(2.0, 2.0 * kappa - 1.0) * gamma_fn(kappa + 0.5) /
             (std::sqrt(pi) * gamma_fn(kappa));
  return C * sign3(x, y, sgn) *
         std::pow(std::abs(std::sinh(x) * std::sinh(y)), -2.0 * kappa) *
         std::pow(q4, kappa) * std::exp(t4) / std::sinh(t4);
}

double nu_shell_integral(double x, double y, TrigMult1D k, double sgn,
                         const std::function<double(double)>& g,
                         const ToleranceProfile& tol) {
  double a = std::abs(std::abs(x) - std::abs(y));
  double b = std::abs(x) + std::abs(y);
  auto integrand = [&](double r, double da, double db) -> double {
    double z = sgn * r;
    double dens;
    if (k.k1 == 0.0)
      dens = nu_limit_stable(x, y, sgn, r, da, db, a, b, k.k2);
    else if (k.k2 == 0.0)
      dens = 0.5 * nu_limit_stable(0.5 * x, 0.5 * y, sgn, 0.5 * r, 0.5 * da,
                                   0.5 * db, 0.5 * a, 0.5 * b, k.k1);
    else
      dens = nu_generic_direct(x, y, z, k, tol);
    return dens * g(z);
  };
  return num::quad_de_sing(integrand, a, b, tol).re();
}

}  // namespace

double nu_trig_density(double x, double y, double z, TrigMult1D k,
                       const ToleranceProfile& tol) {
  require_nonzero_mult(k, "nu_trig_density");
  if (x == 0.0 || y == 0.0)
    throw num_error(errc::domain,
                    "nu_trig_density: x = 0 or y = 0 gives a point mass");
  double s = std::abs(std::abs(x) - std::abs(y));
  double S = std::abs(x) + std::abs(y);
  double az = std::abs(z);
  if (!(s < az && az < S)) return 0.0;
  if (k.k1 == 0.0) return nu_limit_direct(x, y, z, k.k2);
  if (k.k2 == 0.0)
    return 0.5 * nu_limit_direct(0.5 * x, 0.5 * y, 0.5 * z, k.k1);
  return nu_generic_direct(x, y, z, k, tol);
}

double nu_trig_integrate(double x, double y, TrigMult1D k,
                         const std::function<double(double)>& g,
                         const ToleranceProfile& tol) {
  require_mult(k, "nu_trig_integrate");
  if (k.zero()) return g(x + y);  // classical translation
  if (x == 0.0) return g(y);
  if (y == 0.0) return g(x);
  return nu_shell_integral(x, y, k, +1.0, g, tol) +
         nu_shell_integral(x, y, k, -1.0, g, tol);
}

double nu_trig_integrate_W(double x, double y, TrigMult1D k,
                           const std::function<double(double)>& g,
                           const ToleranceProfile& tol) {
  return 0.25 * (nu_trig_integrate(x, y, k, g, tol) +
                 nu_trig_integrate(-x, y, k, g, tol) +
                 nu_trig_integrate(x, -y, k, g, tol) +
                 nu_trig_integrate(-x, -y, k, g, tol));
}

std::vector<double> rational_limit(double lam, double x, double k,
                                   const std::vector<double>& eps_seq,
                                   const ToleranceProfile& tol) {
  if (!(k >= 0.0))
    throw num_error(errc::domain, "rational_limit: k >= 0 required");
  double target = d1::kernel_E(cplx(lam, 0.0), x, k, false, tol).re();
  TrigMult1D tk{k, 0.0};
  std::vector<double> errs;
  errs.reserve(eps_seq.size());
  for (double eps : eps_seq) {
    if (!(eps > 0.0))
      throw num_error(errc::domain, "rational_limit: eps > 0 required");
    double v = opdam_G(cplx(lam / eps, 0.0), eps * x, tk, tol).re();
    errs.push_back(std::abs(v - target));
  }
  return errs;
}

}  // namespace t1
}  // namespace dunkl
