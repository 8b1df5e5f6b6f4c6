#include "dunkl/dunkl1d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dunkl {
namespace d1 {

using num::gamma_fn;
using num::pi;

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void require_mult(double k) {
  if (!(k >= 0.0) || !std::isfinite(k))
    throw num_error(errc::domain, "multiplicity must satisfy k >= 0, got " + fmt(k));
}

void require_positive_mult(double k, const char* who) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw num_error(errc::domain,
                    std::string(who) + ": density defined for k > 0 only "
                    "(k = 0 degenerates to a point mass)");
}

bool purely_imaginary(cplx z) {
  return std::abs(z.real()) <= 1e-12 * std::abs(z.imag());
}

// One-parameter even factor j_{nu}(z), stable for purely imaginary z of any
// size (classical oscillatory evaluation) and by power series otherwise.
KernelEval jfactor(double nu, cplx z, const ToleranceProfile& tol) {
  if (purely_imaginary(z) && std::abs(z.imag()) > 14.0) {
    double y = std::abs(z.imag());
    KernelEval J = num::bessel_J_real(nu, y, tol);
    KernelEval r;
    r.value = gamma_fn(nu + 1.0) * std::pow(y / 2.0, -nu) * J.value;
    r.err_est = gamma_fn(nu + 1.0) * std::pow(y / 2.0, -nu) * J.err_est;
    r.terms_used = J.terms_used;
    r.branch_note = "oscillatory";
    return r;
  }
  return num::bessel_j_mod(nu, z, tol);
}

// Branch (a): combination of normalized one-parameter series.
KernelEval kernel_via_bessel(cplx z, double k, const ToleranceProfile& tol) {
  KernelEval even = jfactor(k - 0.5, z, tol);
  KernelEval odd = jfactor(k + 0.5, z, tol);
  KernelEval r;
  r.value = even.value + z / (2.0 * k + 1.0) * odd.value;
  r.err_est = even.err_est + std::abs(z) / (2.0 * k + 1.0) * odd.err_est;
  r.terms_used = std::max(even.terms_used, odd.terms_used);
  r.branch_note = even.branch_note;
  return r;
}

// Branch (b): confluent form.  The raw series 1F1(k; 2k+1; -2z) cancels
// catastrophically for large positive Re z, so apply the Kummer reflection
// to keep the series argument in the right half plane.
KernelEval kernel_via_1f1(cplx z, double k, const ToleranceProfile& tol) {
  KernelEval h;
  if (z.real() >= 0.0)
    h = num::pfq_series({cplx(k + 1.0)}, {cplx(2.0 * k + 1.0)}, 2.0 * z, 200000, tol);
  else
    h = num::pfq_series({cplx(k)}, {cplx(2.0 * k + 1.0)}, -2.0 * z, 200000, tol);
  double damp = std::abs(std::exp(z.real() >= 0.0 ? -z : z));
  h.value *= std::exp(z.real() >= 0.0 ? -z : z);
  h.err_est *= damp;
  return h;
}

}  // namespace

KernelEval kernel_E(cplx lam, double x, double k, bool symmetrize,
                    const ToleranceProfile& tol) {
  require_mult(k);
  cplx z = lam * x;
  if (symmetrize) {
    KernelEval r = jfactor(k - 0.5, z, tol);
    r.branch_note = "symmetrized-" + r.branch_note;
    return r;
  }
  KernelEval a = kernel_via_bessel(z, k, tol);
  KernelEval r;
  r.value = a.value;
  r.err_est = a.err_est;
  r.terms_used = a.terms_used;
  r.branch_note = (a.branch_note == "oscillatory") ? "oscillatory"
                                                   : "bessel+confluent";
  // Deep in the oscillatory regime the confluent series is pure cancellation
  // noise; the classical-asymptotic branch above stands alone there.  For
  // very large real parts the reflected confluent series overflows double
  // range long before the kernel itself does, so it is skipped as well.
  if (purely_imaginary(z) && std::abs(z.imag()) > 30.0) return r;
  if (std::abs(z.real()) > 330.0) return r;
  KernelEval b = kernel_via_1f1(z, k, tol);
  // Both branches carry honest conditioning estimates; for real z the terms
  // are positive and the comparison is tight (compare_tol), while oscillatory
  // arguments relax it by the tracked cancellation level.
  double scale = std::max({1.0, std::abs(a.value), std::abs(b.value)});
  double tol_eff = std::max(tol.compare_tol * scale, 30.0 * (a.err_est + b.err_est));
  double diff = std::abs(a.value - b.value);
  bool b_degenerate = b.err_est > 0.01 * std::max(std::abs(b.value), 1e-30);
  if (diff > tol_eff && !b_degenerate)
    throw num_error(errc::disagreement,
                    "kernel_E: evaluation branches differ by " + fmt(diff / scale) +
                        " (relative) at |z| = " + fmt(std::abs(z)));
  r.err_est = std::max(a.err_est, b_degenerate ? a.err_est : diff);
  r.terms_used = std::max(a.terms_used, b.terms_used);
  return r;
}

double mu_density(double x, double y, double k) {
  require_positive_mult(k, "mu_density");
  if (x == 0.0)
    throw num_error(errc::domain, "mu_density: x = 0 gives the Dirac mass at 0");
  double ax = std::abs(x);
  if (std::abs(y) >= ax) return 0.0;
  double pref = gamma_fn(k + 0.5) / (std::sqrt(pi) * gamma_fn(k));
  double sgn = (x > 0.0) ? 1.0 : -1.0;
  return pref * std::pow(ax, -2.0 * k) * (ax + sgn * y) *
         std::pow(x * x - y * y, k - 1.0);
}

namespace {

// Shared implementation: integrate g against mu_x using endpoint-exact
// distances for the (x^2 - y^2)^{k-1} = (da * db)^{k-1} factor, da = y+|x|,
// db = |x|-y.
template <typename T>
T mu_integrate_impl(double x, double k, const std::function<T(double)>& g,
                    const ToleranceProfile& tol) {
  require_positive_mult(k, "mu_integrate");
  if (x == 0.0) return g(0.0);
  double ax = std::abs(x);
  double pref = gamma_fn(k + 0.5) / (std::sqrt(pi) * gamma_fn(k)) *
                std::pow(ax, -2.0 * k);
  double sgn = (x > 0.0) ? 1.0 : -1.0;
  auto integrand = [&](double y, double da, double db) -> T {
    double linear = (sgn > 0.0) ? da : db;  // |x| + sign(x) y
    return pref * linear * std::pow(da * db, k - 1.0) * g(y);
  };
  if constexpr (std::is_same_v<T, double>)
    return num::quad_de_sing(integrand, -ax, ax, tol).re();
  else
    return num::quad_de_sing_c(integrand, -ax, ax, tol).value;
}

}  // namespace

double mu_integrate(double x, double k, const std::function<double(double)>& g,
                    const ToleranceProfile& tol) {
  return mu_integrate_impl<double>(x, k, g, tol);
}

cplx mu_integrate_c(double x, double k, const std::function<cplx(double)>& g,
                    const ToleranceProfile& tol) {
  return mu_integrate_impl<cplx>(x, k, g, tol);
}

double nu_density(double x, double y, double z, double k) {
  require_positive_mult(k, "nu_density");
  if (x == 0.0 || y == 0.0)
    throw num_error(errc::domain,
                    "nu_density: x = 0 or y = 0 gives a point mass");
  double A = std::abs(std::abs(x) - std::abs(y)), B = std::abs(x) + std::abs(y);
  double az = std::abs(z);
  if (!(A < az && az < B)) return 0.0;
  double pref = gamma_fn(k + 0.5) / (std::sqrt(pi) * gamma_fn(k));
  double num3 = (z + x + y) * (z + x - y) * (z - x + y);
  double sing = std::pow(z * z - A * A, k - 1.0) * std::pow(B * B - z * z, k - 1.0);
  double denom = std::pow(2.0 * std::abs(x) * std::abs(y) * az, 2.0 * k - 1.0);
  return pref * num3 / (2.0 * x * y * z) * sing / denom;
}

namespace {

// One component of the support shell, [zlo, zhi] in |z|, with orientation
// sgn in {+1,-1}.  The singularity-aware form factors out
//   {z^2 - A^2}^{k-1} {B^2 - z^2}^{k-1} = ((|z|-A)(|z|+A))^{k-1} ((B-|z|)(B+|z|))^{k-1}
// with |z|-A = da, B-|z| = db along the component.
double nu_shell(double x, double y, double k, double sgn,
                const std::function<double(double)>& g, bool absolute,
                const ToleranceProfile& tol) {
  double A = std::abs(std::abs(x) - std::abs(y)), B = std::abs(x) + std::abs(y);
  double pref = gamma_fn(k + 0.5) / (std::sqrt(pi) * gamma_fn(k));
  auto integrand = [&](double r, double da, double db) -> double {
    double z = sgn * r;
    double num3 = (z + x + y) * (z + x - y) * (z - x + y);
    double sing = std::pow(da * (r + A), k - 1.0) * std::pow(db * (B + r), k - 1.0);
    double denom = std::pow(2.0 * std::abs(x) * std::abs(y) * r, 2.0 * k - 1.0);
    double dens = pref * num3 / (2.0 * x * y * z) * sing / denom;
    double v = dens * std::pow(r, 2.0 * k) * g(z);
    return absolute ? std::abs(v) : v;
  };
  return num::quad_de_sing(integrand, A, B, tol).re();
}

}  // namespace

double nu_integrate(double x, double y, double k,
                    const std::function<double(double)>& g,
                    const ToleranceProfile& tol) {
  require_positive_mult(k, "nu_integrate");
  if (x == 0.0) return g(y);
  if (y == 0.0) return g(x);
  if (std::abs(std::abs(x) - std::abs(y)) == 0.0)
    throw num_error(errc::unsupported,
                    "nu_integrate: |x| = |y| exactly (degenerate shell); "
                    "perturb the arguments");
  return nu_shell(x, y, k, +1.0, g, false, tol) +
         nu_shell(x, y, k, -1.0, g, false, tol);
}

double nu_total_variation(double x, double y, double k,
                          const ToleranceProfile& tol) {
  require_positive_mult(k, "nu_total_variation");
  if (x == 0.0 || y == 0.0) return 1.0;
  if (std::abs(std::abs(x) - std::abs(y)) == 0.0)
    throw num_error(errc::unsupported,
                    "nu_total_variation: |x| = |y| exactly (degenerate shell)");
  auto one = [](double) { return 1.0; };
  return nu_shell(x, y, k, +1.0, one, true, tol) +
         nu_shell(x, y, k, -1.0, one, true, tol);
}

double nu_tv_bound(double k) {
  require_positive_mult(k, "nu_tv_bound");
  double g = gamma_fn(k + 0.5);
  return std::sqrt(2.0) * g * g / (gamma_fn(k + 0.25) * gamma_fn(k + 0.75));
}

double translate_radial(const std::function<double(double)>& f_radial,
                        double y, double x, double k,
                        const ToleranceProfile& tol) {
  require_positive_mult(k, "translate_radial");
  if (y == 0.0) return f_radial(std::abs(x));
  double sy = (y > 0.0) ? 1.0 : -1.0;
  double ay = std::abs(y);
  return mu_integrate(sy, k, [&](double z) {
    double arg2 = x * x + y * y + 2.0 * x * z * ay;
    return f_radial(std::sqrt(std::max(arg2, 0.0)));
  }, tol);
}

KernelEval transform(const std::function<cplx(double)>& f,
                     double support_radius, double lam, double k, bool inverse,
                     const ToleranceProfile& tol) {
  require_mult(k);
  if (!(support_radius > 0.0))
    throw num_error(errc::domain, "transform: support radius must be positive");
  double R = support_radius;
  // decay check: the weighted tail must already be negligible at the edge;
  // the gate only rejects clearly non-decaying inputs -- smooth images decay
  // slowly (stretched-exponentially) and remain legitimate integrands
  double edge = std::max(std::abs(f(R)), std::abs(f(-R))) * std::pow(R, 2.0 * k);
  if (edge > 1e-5)
    throw num_error(errc::domain,
                    "transform: insufficient decay at declared support radius (" +
                        fmt(edge) + " weighted at |x| = " + fmt(R) + ")");
  cplx sign_i = inverse ? cplx(0.0, 1.0) : cplx(0.0, -1.0);
  auto integrand = [&](double x) -> cplx {
    double w = std::pow(std::abs(x), 2.0 * k);
    return w * f(x) * kernel_E(sign_i * lam, x, k, false, tol).value;
  };
  // split at 0: |x|^{2k} has a kink (and for k < 1/2 unbounded derivative)
  KernelEval left = num::quad_de_c(integrand, -R, 0.0, tol);
  KernelEval right = num::quad_de_c(integrand, 0.0, R, tol);
  KernelEval r;
  r.value = left.value + right.value;
  r.err_est = left.err_est + right.err_est;
  r.terms_used = std::max(left.terms_used, right.terms_used);
  r.branch_note = inverse ? "inverse" : "forward";
  if (inverse) {
    double c = mehta_constant(k);
    r.value /= c * c;
  }
  return r;
}

double mehta_constant(double k, bool by_quadrature,
                      const ToleranceProfile& tol) {
  require_mult(k);
  if (!by_quadrature) return std::pow(2.0, k + 0.5) * gamma_fn(k + 0.5);
  // integrand is even; substitute u = x^2/2 only mentally -- the direct
  // integral over (0, R) with DE handles the |x|^{2k} kink at 0
  double R = std::sqrt(2.0 * 700.0);  // e^{-x^2/2} underflows past here
  auto g = [&](double x) { return std::pow(x, 2.0 * k) * std::exp(-x * x / 2.0); };
  return 2.0 * num::quad_de(g, 0.0, R, tol).re();
}

namespace {

// Truncated asymptotic tail sum S = sum_j (p)_j (q)_j s^j / j!, stopped at
// the smallest term.  Terminates exactly when q is a nonpositive integer.
double asymp_tail(double p, double q, double s) {
  double term = 1.0, sum = 1.0, best = 1.0;
  for (int j = 1; j <= 200; ++j) {
    term *= (p + j - 1.0) * (q + j - 1.0) * s / j;
    double m = std::abs(term);
    if (m >= best) break;  // asymptotic series started diverging
    sum += term;
    best = m;
    if (m < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double heat_kernel(double t, double x, double y, double k,
                   const ToleranceProfile& tol) {
  require_mult(k);
  if (!(t > 0.0)) throw num_error(errc::domain, "heat_kernel: need t > 0");
  double c = mehta_constant(k);
  double pref = 1.0 / c * std::pow(2.0 * t, -0.5 - k);
  double z = x * y / (2.0 * t);
  if (std::abs(z) > 40.0) {
    // Combine the Gaussian with the exponential factor of the confluent
    // large-argument expansion; the product stays finite long after each
    // factor alone overflows or underflows.
    double w = 2.0 * std::abs(z);
    if (z > 0.0)
      return pref * std::exp(-(x - y) * (x - y) / (4.0 * t)) *
             gamma_fn(2.0 * k + 1.0) / gamma_fn(k + 1.0) * std::pow(w, -k) *
             asymp_tail(k, -k, 1.0 / w);
    if (k == 0.0) return pref * std::exp(-(x - y) * (x - y) / (4.0 * t));
    return pref * std::exp(-(x + y) * (x + y) / (4.0 * t)) *
           gamma_fn(2.0 * k + 1.0) / gamma_fn(k) * std::pow(w, -k - 1.0) *
           asymp_tail(k + 1.0, 1.0 - k, 1.0 / w);
  }
  double gauss = std::exp(-(x * x + y * y) / (4.0 * t));
  if (gauss == 0.0) return 0.0;  // |z| small: the kernel factor cannot rescue it
  double s = std::sqrt(2.0 * t);
  return pref * gauss * kernel_E(cplx(x / s, 0.0), y / s, k, false, tol).re();
}

double heat_envelope(double t, double x, double y, double k) {
  require_mult(k);
  if (!(t > 0.0)) throw num_error(errc::domain, "heat_envelope: need t > 0");
  double xy = x * y;
  if (std::abs(xy) <= t)
    return std::pow(t, -k - 0.5) * std::exp(-(x * x + y * y) / (4.0 * t));
  if (xy >= t)
    return std::pow(t, -0.5) * std::pow(xy, -k) *
           std::exp(-(x - y) * (x - y) / (4.0 * t));
  return std::pow(t, 0.5) * std::pow(-xy, -k - 1.0) *
         std::exp(-(x + y) * (x + y) / (4.0 * t));
}

double heat_upper_bound(double t, double x, double y, double k) {
  require_mult(k);
  if (!(t > 0.0)) throw num_error(errc::domain, "heat_upper_bound: need t > 0");
  double c = mehta_constant(k);
  double best = std::max(std::exp(-(x - y) * (x - y) / (4.0 * t)),
                         std::exp(-(x + y) * (x + y) / (4.0 * t)));
  return 1.0 / c * std::pow(2.0 * t, -0.5 - k) * best;
}

std::vector<cplx> asym_sequence(double lam, double x, double k,
                                const std::vector<double>& t_seq,
                                const ToleranceProfile& tol) {
  require_mult(k);
  if (!(lam > 0.0 && x > 0.0))
    throw num_error(errc::domain, "asym_sequence: need lam > 0 and x > 0");
  std::vector<cplx> out;
  out.reserve(t_seq.size());
  for (double t : t_seq) {
    cplx it(0.0, t);
    cplx pref = std::pow(it, cplx(k, 0.0)) * std::exp(cplx(0.0, -t * lam * x));
    out.push_back(pref * kernel_E(it * lam, x, k, false, tol).value);
  }
  return out;
}

double asym_target(double lam, double x, double k) {
  require_mult(k);
  // (2 pi)^{-1/2} c  * delta(lam)^{-1/2} delta(x)^{-1/2}, delta(s) = |s|^{2k}
  return mehta_constant(k) / std::sqrt(2.0 * pi) * std::pow(lam * x, -k);
}

std::vector<double> asym_opposite_sequence(double lam, double x, double k,
                                           const std::vector<double>& t_seq,
                                           const ToleranceProfile& tol) {
  require_mult(k);
  if (!(lam > 0.0 && x > 0.0))
    throw num_error(errc::domain, "asym_opposite_sequence: need lam, x > 0");
  std::vector<double> out;
  out.reserve(t_seq.size());
  for (double t : t_seq) {
    double pref = std::pow(t, k + 1.0) * std::exp(-t * lam * x);
    out.push_back(pref * kernel_E(cplx(t * lam, 0.0), -x, k, false, tol).re());
  }
  return out;
}

double asym_opposite_target(double lam, double x, double k) {
  require_mult(k);
  return std::pow(2.0, k - 1.0) * k * gamma_fn(k + 0.5) / std::sqrt(pi) *
         std::pow(lam, -k - 1.0) * std::pow(x, -k - 1.0);
}

KernelEval kernel_E_product(const std::vector<cplx>& lam,
                            const std::vector<double>& x,
                            const std::vector<double>& k,
                            const ToleranceProfile& tol) {
  if (lam.size() != x.size() || x.size() != k.size() || x.empty())
    throw num_error(errc::domain, "kernel_E_product: mismatched factor counts");
  KernelEval r;
  r.value = 1.0;
  r.branch_note = "product";
  for (size_t i = 0; i < x.size(); ++i) {
    KernelEval f = kernel_E(lam[i], x[i], k[i], false, tol);
    r.value *= f.value;
    r.err_est += f.err_est;
    r.terms_used = std::max(r.terms_used, f.terms_used);
  }
  return r;
}

double heat_kernel_product(double t, const std::vector<double>& x,
                           const std::vector<double>& y,
                           const std::vector<double>& k,
                           const ToleranceProfile& tol) {
  if (x.size() != y.size() || y.size() != k.size() || x.empty())
    throw num_error(errc::domain, "heat_kernel_product: mismatched factor counts");
  double v = 1.0;
  for (size_t i = 0; i < x.size(); ++i) v *= heat_kernel(t, x[i], y[i], k[i], tol);
  return v;
}

}  // namespace d1
}  // namespace dunkl
