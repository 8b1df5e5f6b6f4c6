#include "dunkl/geom.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/trig1d.hpp"

namespace dunkl {
namespace ge {

using num::QuadMode;

namespace {

constexpr double kPi = num::pi;

double srho(int n) { return 0.5 * (n - 1); }

void require_dim(int n, int min_n, const char* what) {
  if (n < min_n) {
    throw num_error(errc::domain, std::string(what) + ": dimension n = " +
                                      std::to_string(n) + " below minimum " +
                                      std::to_string(min_n));
  }
}

void require_radius(double r, const char* what) {
  if (!(r >= 0.0)) {
    throw num_error(errc::domain, std::string(what) + ": radius must be >= 0");
  }
}

// sinh(arccosh(v)) for v >= 1 without cancellation.

// Full surface constant of the unit sphere in R^n.
double surface_const(int n) {
  return 2.0 * std::pow(kPi, 0.5 * n) / num::gamma_fn(0.5 * n);
}

// --- Fornberg finite-difference weights -----------------------------------
// Weights w_i with sum_i w_i f(x_i) ~ f^{(m)}(x0) for arbitrary distinct
// nodes x_i; classic recurrence, exact in rational arithmetic, stable for
// the short stencils used here.
std::vector<double> fornberg(const std::vector<double>& x, double x0, int m) {
  const int nd = static_cast<int>(x.size());
  std::vector<std::vector<double>> C(nd, std::vector<double>(m + 1, 0.0));
  C[0][0] = 1.0;
  double c1 = 1.0;
  double c4 = x[0] - x0;
  for (int i = 1; i < nd; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          C[i][k] = c1 * (k * C[i - 1][k - 1] - c5 * C[i - 1][k]) / c2;
        }
        C[i][0] = -c1 * c5 * C[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        C[j][k] = (c4 * C[j][k] - k * C[j][k - 1]) / c3;
      }
      C[j][0] = c4 * C[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(nd);
  for (int i = 0; i < nd; ++i) w[i] = C[i][m];
  return w;
}

// m-th derivative with respect to v = cosh(radial variable), evaluated at
// v >= 1, of a profile defined on [1, infinity).  An 11-point stencil of
// spacing H is centered at v when possible and otherwise shifted right so
// that every node stays >= 1 (the evaluation point x0 = v is kept exact,
// which Fornberg weights support for any interior location).
template <class T>
T vderiv(const std::function<T(double)>& G, int m, double v, double H) {
  constexpr int kPts = 11;
  const double half = 0.5 * (kPts - 1);
  const double center = std::max(v, 1.0 + half * H);
  std::vector<double> nodes(kPts);
  for (int i = 0; i < kPts; ++i) nodes[i] = center + (i - half) * H;
  const std::vector<double> w = fornberg(nodes, v, m);
  T acc{};
  for (int i = 0; i < kPts; ++i) acc += w[i] * G(nodes[i]);
  return acc;
}

// Step size for v-derivatives: the base step shrinks near v = 1 so that the
// stencil stays centered (profiles built from sinh have square-root branch
// behavior at v = 1), and never collapses below a roundoff-safe floor.
double vstep(double v, double base = 0.045) {
  return std::min(base, std::max(5e-4, (v - 1.0) / 5.2));
}

// Integral over [0, umax] where umax can be exponentially large (it comes
// from u = sqrt(cosh s - cosh r)) while the mass sits near the origin:
// geometrically growing panels keep the adaptive rule from missing the
// feature, and the loop stops once panels stop contributing.
KernelEval quad_geom(const std::function<double(double)>& f, double umax,
                     const ToleranceProfile& tol) {
  KernelEval total;
  double a = 0.0;
  double b = std::min(1.0, umax);
  int quiet = 0;
  while (a < umax && quiet < 2) {
    KernelEval p = num::quad(f, a, b, QuadMode::adaptive, tol);
    total.value += p.value;
    total.err_est += p.err_est;
    quiet = std::abs(p.value) <= 1e-15 * std::abs(total.value) + 1e-300
                ? quiet + 1
                : 0;
    a = b;
    b = std::min(umax, 4.0 * b);
  }
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------
// Euclidean
// ---------------------------------------------------------------------------

KernelEval euclid_phi(cplx lam, double r, int n, EuclidBranch branch,
                      const ToleranceProfile& tol) {
  require_dim(n, 1, "euclid_phi");
  require_radius(r, "euclid_phi");
  const double nu = 0.5 * n - 1.0;
  if (branch == EuclidBranch::integral) {
    require_dim(n, 2, "euclid_phi integral branch");
    const double cst =
        num::gamma_fn(0.5 * n) /
        (std::sqrt(kPi) * num::gamma_fn(0.5 * (n - 1)));
    KernelEval q = num::quad_c(
        [&](double th) {
          const cplx e = std::exp(cplx(0.0, 1.0) * lam * (r * std::cos(th)));
          return std::pow(std::sin(th), n - 2) * e;
        },
        0.0, kPi, QuadMode::adaptive, tol);
    q.value *= cst;
    q.err_est *= cst;
    q.branch_note = "plane-wave average";
    return q;
  }
  // Series branch.  For large real spectral parameter the power series of
  // 0F1 cancels badly; switch to the classical oscillatory Bessel function.
  const double y = std::abs(lam.real()) * r;
  if (std::abs(lam.imag()) < 1e-14 * (1.0 + std::abs(lam.real())) && y >= 1.0) {
    KernelEval J = num::bessel_J_real(nu, y, tol);
    const double scale = num::gamma_fn(0.5 * n) * std::pow(0.5 * y, -nu);
    J.value *= scale;
    J.err_est = std::abs(J.err_est * scale) + 1e-15 * std::abs(J.value);
    J.branch_note = "oscillatory Bessel";
    return J;
  }
  KernelEval out = num::bessel_j_mod(nu, cplx(0.0, 1.0) * lam * r, tol);
  out.branch_note = "normalized Bessel series";
  return out;
}

KernelEval hankel_pair(const RadialFn& f, double s, int n, Direction dir,
                       double support, const ToleranceProfile& tol) {
  require_dim(n, 1, "hankel_pair");
  require_radius(s, "hankel_pair");
  if (!(support > 0.0)) {
    throw num_error(errc::domain, "hankel_pair: support must be positive");
  }
  const double cst =
      dir == Direction::forward
          ? surface_const(n)
          : 1.0 / (std::pow(2.0, n - 1) * std::pow(kPi, 0.5 * n) *
                   num::gamma_fn(0.5 * n));
  const double edge =
      cst * std::abs(f(support)) * std::pow(support, n - 1);
  if (edge > 1e-5) {
    throw num_error(errc::domain,
                    "hankel_pair: profile has not decayed at the declared "
                    "support radius");
  }
  KernelEval q = num::quad(
      [&](double x) {
        const double ker = euclid_phi(cplx(s, 0.0), x, n,
                                      EuclidBranch::series, tol)
                               .re();
        return std::pow(x, n - 1) * f(x) * ker;
      },
      0.0, support, QuadMode::adaptive, tol);
  q.value *= cst;
  q.err_est *= cst;
  q.branch_note = dir == Direction::forward ? "hankel forward" : "hankel inverse";
  return q;
}

// ---------------------------------------------------------------------------
// Sphere
// ---------------------------------------------------------------------------

double sphere_phi(int ell, double theta, int n) {
  require_dim(n, 2, "sphere_phi");
  if (ell < 0) throw num_error(errc::domain, "sphere_phi: degree must be >= 0");
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw num_error(errc::domain, "sphere_phi: angle outside [0, pi]");
  }
  const double x = std::cos(theta);
  if (ell == 0) return 1.0;
  double pm = 1.0, p = x;
  for (int j = 2; j <= ell; ++j) {
    const double next = ((2.0 * j + n - 3.0) * x * p - (j - 1.0) * pm) /
                        (j + n - 2.0);
    pm = p;
    p = next;
  }
  return p;
}

double sphere_weight(int ell, int n) {
  require_dim(n, 2, "sphere_weight");
  if (ell < 0) {
    throw num_error(errc::domain, "sphere_weight: degree must be >= 0");
  }
  // d_ell = n (n + 2 ell - 1) (n + ell - 2)! / (n! ell!)
  double ratio = 1.0;  // (n + ell - 2)! / ell! = prod_{m=ell+1}^{ell+n-2} m
  for (int m = ell + 1; m <= ell + n - 2; ++m) ratio *= m;
  double nfact = 1.0;
  for (int m = 2; m <= n; ++m) nfact *= m;
  return n * (n + 2.0 * ell - 1.0) * ratio / nfact;
}

std::vector<double> sphere_expand(const RadialFn& f_of_theta, int lmax, int n,
                                  const ToleranceProfile& tol) {
  require_dim(n, 2, "sphere_expand");
  if (lmax < 0) {
    throw num_error(errc::domain, "sphere_expand: lmax must be >= 0");
  }
  const double cst = num::gamma_fn(0.5 * (n + 1)) /
                     (std::sqrt(kPi) * num::gamma_fn(0.5 * n));
  std::vector<double> out(lmax + 1);
  for (int l = 0; l <= lmax; ++l) {
    KernelEval q = num::quad(
        [&](double th) {
          return std::pow(std::sin(th), n - 1) * f_of_theta(th) *
                 sphere_phi(l, th, n);
        },
        0.0, kPi, QuadMode::adaptive, tol);
    out[l] = cst * q.re();
  }
  return out;
}

double sphere_synth(const std::vector<double>& coeffs, double theta, int n) {
  require_dim(n, 2, "sphere_synth");
  double acc = 0.0;
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    acc += sphere_weight(static_cast<int>(l), n) * coeffs[l] *
           sphere_phi(static_cast<int>(l), theta, n);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Hyperbolic spherical functions, c-function, transform pair
// ---------------------------------------------------------------------------

KernelEval hyp_phi(cplx lam, double r, int n, HypBranch branch,
                   const ToleranceProfile& tol) {
  require_dim(n, 2, "hyp_phi");
  require_radius(r, "hyp_phi");
  if (r == 0.0) {
    KernelEval out;
    out.value = 1.0;
    out.branch_note = "base point";
    return out;
  }
  const double rho = srho(n);
  if (branch == HypBranch::integral) {
    const double cst = num::gamma_fn(0.5 * n) /
                       (std::sqrt(kPi) * num::gamma_fn(0.5 * (n - 1)));
    const double ch = std::cosh(r), sh = std::sinh(r);
    const cplx expo = cplx(0.0, 1.0) * lam - rho;
    KernelEval q = num::quad_c(
        [&](double th) {
          const double base = ch - sh * std::cos(th);
          return std::pow(std::sin(th), n - 2) *
                 std::exp(expo * std::log(base));
        },
        0.0, kPi, QuadMode::adaptive, tol);
    q.value *= cst;
    q.err_est *= cst;
    q.branch_note = "horocyclic-wave average";
    return q;
  }
  // Jacobi-function representation with alpha = n/2 - 1, beta = -1/2:
  // alpha + beta + 1 = rho, and the 2F1 argument is -sinh^2 r.
  return t1::jacobi_phi(lam, r, 0.5 * n - 1.0, -0.5, tol);
}

CDensity hyp_c_plancherel(double lam, int n) {
  require_dim(n, 2, "hyp_c_plancherel");
  if (lam == 0.0) {
    throw num_error(errc::domain, "hyp_c_plancherel: pole at lam = 0");
  }
  const double rho = srho(n);
  CDensity out;
  const cplx ilam(0.0, lam);
  out.c_value = num::gamma_fn(2.0 * rho) / num::gamma_fn(rho) *
                num::gamma_fn(ilam) / num::gamma_fn(ilam + rho);
  const double pref =
      kPi / (std::pow(2.0, 2.0 * n - 4.0) * std::pow(num::gamma_fn(0.5 * n), 2));
  double prod = 1.0;
  if (n % 2 == 1) {
    for (int j = 0; j <= (n - 3) / 2; ++j) prod *= lam * lam + j * j;
    out.density = pref * prod;
  } else {
    for (int j = 0; j <= n / 2 - 2; ++j) {
      prod *= lam * lam + (j + 0.5) * (j + 0.5);
    }
    out.density = pref * lam * std::tanh(kPi * lam) * prod;
  }
  return out;
}

KernelEval hyp_spherical(const RadialFn& f, double lam, int n, double support,
                         const ToleranceProfile& tol) {
  require_dim(n, 2, "hyp_spherical");
  if (!(support > 0.0)) {
    throw num_error(errc::domain, "hyp_spherical: support must be positive");
  }
  const double cst = surface_const(n);
  const double phi0_edge =
      hyp_phi(cplx(0.0, 0.0), support, n, HypBranch::gauss2f1, tol).re();
  const double edge = cst * std::abs(f(support)) *
                      std::pow(std::sinh(support), n - 1) * phi0_edge;
  if (edge > 1e-5) {
    throw num_error(errc::domain,
                    "hyp_spherical: profile has not decayed at the declared "
                    "support radius");
  }
  KernelEval q = num::quad(
      [&](double x) {
        const double ker =
            hyp_phi(cplx(lam, 0.0), x, n, HypBranch::gauss2f1, tol).re();
        return f(x) * std::pow(std::sinh(x), n - 1) * ker;
      },
      0.0, support, QuadMode::adaptive, tol);
  q.value *= cst;
  q.err_est *= cst;
  q.branch_note = "spherical transform";
  return q;
}

KernelEval hyp_spherical_inverse(const RadialFn& fhat, double r, int n,
                                 double lam_max, const ToleranceProfile& tol) {
  require_dim(n, 2, "hyp_spherical_inverse");
  require_radius(r, "hyp_spherical_inverse");
  if (!(lam_max > 0.0)) {
    throw num_error(errc::domain,
                    "hyp_spherical_inverse: lam_max must be positive");
  }
  const double cst = std::pow(2.0, n - 3.0) * std::pow(kPi, -0.5 * n - 1.0) *
                     num::gamma_fn(0.5 * n);
  const double edge =
      cst * std::abs(fhat(lam_max)) * hyp_c_plancherel(lam_max, n).density;
  if (edge > 1e-5) {
    throw num_error(errc::domain,
                    "hyp_spherical_inverse: spectral profile has not decayed "
                    "at the declared cutoff");
  }
  KernelEval q = num::quad(
      [&](double l) {
        if (l == 0.0) return 0.0;  // density vanishes at the origin
        const double ker =
            hyp_phi(cplx(l, 0.0), r, n, HypBranch::gauss2f1, tol).re();
        return fhat(l) * hyp_c_plancherel(l, n).density * ker;
      },
      0.0, lam_max, QuadMode::adaptive, tol);
  q.value *= cst;
  q.err_est *= cst;
  q.branch_note = "inverse spherical transform";
  return q;
}

// ---------------------------------------------------------------------------
// Abel machinery
// ---------------------------------------------------------------------------

KernelEval hyp_abel(const RadialFn& f, double r, int n, double support,
                    const ToleranceProfile& tol) {
  require_dim(n, 2, "hyp_abel");
  const double rr = std::abs(r);
  if (!(support > rr)) {
    throw num_error(errc::domain, "hyp_abel: support must exceed |r|");
  }
  const double rho = srho(n);
  if (std::abs(f(support)) * std::exp(rho * support) > 1e-5) {
    throw num_error(errc::domain,
                    "hyp_abel: profile has not decayed at the declared "
                    "support radius");
  }
  const double cst =
      std::pow(2.0 * kPi, 0.5 * (n - 1)) / num::gamma_fn(0.5 * (n - 1));
  // Substitution cosh s = cosh r + u^2 flattens the (n-3)/2 power and keeps
  // the integrand smooth on [0, umax].
  const double chr = std::cosh(rr);
  const double umax = std::sqrt(std::cosh(support) - chr);
  KernelEval q = quad_geom(
      [&](double u) {
        const double s = std::acosh(chr + u * u);
        return 2.0 * std::pow(u, n - 2) * f(s);
      },
      umax, tol);
  q.value *= cst;
  q.err_est *= cst;
  q.branch_note = "abel forward";
  return q;
}

KernelEval hyp_abel_inverse(const RadialFn& g, double r, int n, double support,
                            const ToleranceProfile& tol) {
  require_dim(n, 2, "hyp_abel_inverse");
  const double rr = std::abs(r);
  KernelEval out;
  std::function<double(double)> gtil = [&](double v) {
    return g(std::acosh(v));
  };
  if (n % 2 == 1) {
    // (2 pi)^{-(n-1)/2} (-(1/sinh r) d_r)^{(n-1)/2} g  ==  (-d_v)^{m} with
    // v = cosh r.
    const int m = (n - 1) / 2;
    const double v = std::cosh(rr);
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    out.value = std::pow(2.0 * kPi, -0.5 * (n - 1)) * sgn *
                vderiv<double>(gtil, m, v, vstep(v));
    out.branch_note = "abel inverse (odd derivative form)";
    return out;
  }
  if (!(support > rr)) {
    throw num_error(errc::domain, "hyp_abel_inverse: support must exceed |r|");
  }
  if (std::abs(g(support)) > 1e-5) {
    throw num_error(errc::domain,
                    "hyp_abel_inverse: profile has not decayed at the "
                    "declared support radius");
  }
  // Even dimension: the half-integral
  //   1/(2^{(n-1)/2} pi^{n/2}) int_{|r|}^inf (cosh s - cosh r)^{-1/2}
  //     (-d_s)(-(1/sinh s) d_s)^{n/2-1} g(s) ds
  // becomes, via w = cosh s and then w = cosh r + u^2,
  //   2/(2^{(n-1)/2} pi^{n/2}) int_0^umax (-1)^{n/2} (d_v^{n/2} gtil)(cosh r + u^2) du.
  const int m = n / 2;
  const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
  const double chr = std::cosh(rr);
  const double umax = std::sqrt(std::cosh(support) - chr);
  KernelEval q = quad_geom(
      [&](double u) {
        const double v = chr + u * u;
        return vderiv<double>(gtil, m, v, vstep(v));
      },
      umax, tol);
  const double cst = 2.0 * sgn / (std::pow(2.0, 0.5 * (n - 1)) *
                                  std::pow(kPi, 0.5 * n));
  out.value = cst * q.value;
  out.err_est = std::abs(cst) * q.err_est;
  out.branch_note = "abel inverse (even half-integral form)";
  return out;
}

KernelEval hyp_dual_abel(const RadialFn& g, double r, int n,
                         const ToleranceProfile& tol) {
  require_dim(n, 2, "hyp_dual_abel");
  require_radius(r, "hyp_dual_abel");
  KernelEval out;
  if (r == 0.0) {
    out.value = g(0.0);
    out.branch_note = "base point";
    return out;
  }
  const double cst = std::pow(2.0, 0.5 * (n - 1)) * num::gamma_fn(0.5 * n) /
                     (std::sqrt(kPi) * num::gamma_fn(0.5 * (n - 1)));
  const double pw = 0.5 * (n - 3);
  const double chr = std::cosh(r);
  KernelEval q;
  if (n % 2 == 1) {
    q = num::quad([&](double s) { return std::pow(chr - std::cosh(s), pw) * g(s); },
                  0.0, r, QuadMode::adaptive, tol);
  } else {
    // Half-integer power: evaluate cosh r - cosh s from the exact distance
    // db = r - s to keep the endpoint factor accurate.
    q = num::quad_de_sing(
        [&](double s, double /*da*/, double db) {
          const double diff =
              2.0 * std::sinh(0.5 * (r + s)) * std::sinh(0.5 * db);
          return std::pow(diff, pw) * g(s);
        },
        0.0, r, tol);
  }
  const double scale = cst * std::pow(std::sinh(r), 2.0 - n);
  out.value = scale * q.value;
  out.err_est = std::abs(scale) * q.err_est;
  out.branch_note = "dual abel";
  return out;
}

KernelEval hyp_dual_abel_inverse(const RadialFn& f, double r, int n,
                                 const ToleranceProfile& tol) {
  require_dim(n, 2, "hyp_dual_abel_inverse");
  require_radius(r, "hyp_dual_abel_inverse");
  KernelEval out;
  if (r == 0.0) {
    out.value = f(0.0);
    out.branch_note = "base point";
    return out;
  }
  const double v = std::cosh(r);
  if (n % 2 == 1) {
    // sqrt(pi)/(2^{(n-1)/2} Gamma(n/2)) d_r ((1/sinh r) d_r)^{(n-3)/2}
    //   { sinh^{n-2} r f(r) }  ==  cst sinh r d_v^{(n-1)/2} W(cosh r).
    const double cst = std::sqrt(kPi) / (std::pow(2.0, 0.5 * (n - 1)) *
                                         num::gamma_fn(0.5 * n));
    std::function<double(double)> W = [&](double w) {
      return std::pow((w - 1.0) * (w + 1.0), 0.5 * (n - 2)) *
             f(std::acosh(w));
    };
    out.value = cst * std::sinh(r) *
                vderiv<double>(W, (n - 1) / 2, v, vstep(v));
    out.branch_note = "dual abel inverse (odd)";
    return out;
  }
  // Even dimension:
  //   1/(2^{(n-1)/2} (n/2-1)!) d_r ((1/sinh r) d_r)^{n/2-1} R(cosh r),
  //   R(v) = 2 int_0^{sqrt(v-1)} ((v-u^2)^2 - 1)^{(n-2)/2} f(acosh(v-u^2)) du.
  const double cst =
      std::pow(2.0, -0.5 * (n - 1)) / num::gamma_fn(0.5 * n);
  std::function<double(double)> R = [&](double w) {
    if (w <= 1.0) return 0.0;
    const double um = std::sqrt(w - 1.0);
    KernelEval q = num::quad(
        [&](double u) {
          const double y = w - u * u;
          return std::pow(y * y - 1.0, 0.5 * (n - 2)) * f(std::acosh(y));
        },
        0.0, um, QuadMode::adaptive, tol);
    return 2.0 * q.re();
  };
  out.value = cst * std::sinh(r) * vderiv<double>(R, n / 2, v, vstep(v));
  out.branch_note = "dual abel inverse (even)";
  return out;
}

// ---------------------------------------------------------------------------
// Heat kernel
// ---------------------------------------------------------------------------

KernelEval hyp_heat(double t, double r, int n, const ToleranceProfile& tol) {
  require_dim(n, 2, "hyp_heat");
  if (!(t > 0.0)) {
    throw num_error(errc::domain, "hyp_heat: nonpositive time");
  }
  const double rr = std::abs(r);
  const double rho = srho(n);
  const double v0 = std::cosh(rr);
  std::function<double(double)> gauss = [&](double v) {
    const double s = std::acosh(v);
    return std::exp(-s * s / (4.0 * t));
  };
  const double H = std::min(vstep(v0), 0.6 * t);
  KernelEval out;
  if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    const double pref = std::pow(2.0, -0.5 * (n + 1)) *
                        std::pow(kPi, -0.5 * n) / std::sqrt(t) *
                        std::exp(-rho * rho * t);
    out.value = pref * sgn * vderiv<double>(gauss, m, v0, H);
    out.branch_note = "heat (odd derivative form)";
    return out;
  }
  const int m = n / 2;
  const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
  const double pref = std::pow(2.0 * kPi, -0.5 * (n + 1)) / std::sqrt(t) *
                      std::exp(-rho * rho * t);
  // The Gaussian factor is negligible beyond s_cut (relative 1e-18).
  const double s_cut = std::sqrt(rr * rr + 166.0 * t) + 1.0;
  const double umax = std::sqrt(std::cosh(s_cut) - v0);
  KernelEval q = quad_geom(
      [&](double u) {
        const double v = v0 + u * u;
        return vderiv<double>(gauss, m, v, std::min(vstep(v), 0.6 * t));
      },
      umax, tol);
  out.value = pref * sgn * 2.0 * q.value;
  out.err_est = std::abs(pref) * 2.0 * q.err_est;
  out.branch_note = "heat (even half-integral form)";
  return out;
}

// ---------------------------------------------------------------------------
// Schrodinger modulus and envelope
// ---------------------------------------------------------------------------

SchrodingerBound hyp_schrodinger_bound(double t, double r, int n,
                                       const ToleranceProfile& tol) {
  require_dim(n, 2, "hyp_schrodinger_bound");
  if (t == 0.0) {
    throw num_error(errc::domain, "hyp_schrodinger_bound: time must be nonzero");
  }
  const double rr = std::abs(r);
  const double at = std::abs(t);
  const double rho = srho(n);
  SchrodingerBound out;
  out.envelope = std::exp(-rho * rr) *
                 (at >= 1.0 + rr
                      ? std::pow(at, -1.5) * (1.0 + rr)
                      : std::pow(at, -0.5 * n) *
                            std::pow(1.0 + rr, 0.5 * (n - 1)));
  const double v0 = std::cosh(rr);
  std::function<cplx(double)> osc = [&](double v) {
    const double s = std::acosh(v);
    return std::exp(cplx(0.0, -s * s / (4.0 * at)));
  };
  // Keep the phase change per stencil step small: d(phase)/dv <= 1/(2t).
  const double H = std::min(std::min(0.02, 0.5 * at), vstep(v0, 0.02));
  if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    const cplx d = vderiv<cplx>(osc, m, v0, H);
    out.modulus = std::pow(2.0, -0.5 * (n + 1)) * std::pow(kPi, -0.5 * n) /
                  std::sqrt(at) * std::abs(d);
    return out;
  }
  // Even dimension: after s^2 = r^2 + 4 t sigma the kernel integral becomes
  // int_0^inf G(sigma) e^{-i sigma} dsigma with G ~ sigma^{-1/2} at 0 and
  // exponential decay; integrate the singular head by double-exponential
  // quadrature and the oscillatory tail by fixed panels of length 2 pi.
  const int m = n / 2;
  const double msgn = (m % 2 == 0) ? 1.0 : -1.0;
  auto amplitude = [&](double s) -> cplx {
    // (d_v^m osc)(cosh s) with the carrier phase divided out: slowly varying.
    const double v = std::cosh(s);
    const double Hs = std::min(std::min(0.02, 0.5 * at), vstep(v, 0.02));
    const cplx d = vderiv<cplx>(osc, m, v, Hs);
    return d * std::exp(cplx(0.0, s * s / (4.0 * at)));
  };
  auto G = [&](double sigma, double exact_sigma) -> cplx {
    const double s = std::sqrt(rr * rr + 4.0 * at * exact_sigma);
    const double smr = 4.0 * at * exact_sigma / (s + rr);
    const double diff = 2.0 * std::sinh(0.5 * (s + rr)) * std::sinh(0.5 * smr);
    const double ws = std::sinh(s) * (2.0 * at / s) / std::sqrt(diff);
    return ws * msgn * amplitude(s) * std::exp(cplx(0.0, -sigma));
  };
  KernelEval head = num::quad_de_sing_c(
      [&](double sig, double da, double /*db*/) { return G(sig, da); }, 0.0,
      1.0, tol);
  cplx acc = head.value;
  // Tail: |G| decays like e^{-(n-1) s / 2}; stop once panels are negligible.
  const double s_stop = rr + 90.0 / (n - 1);
  const double sigma_max = (s_stop * s_stop - rr * rr) / (4.0 * at);
  int quiet = 0;
  for (double a = 1.0; a < sigma_max && quiet < 3;) {
    const double b = a + 2.0 * kPi;
    KernelEval panel = num::quad_c([&](double sig) { return G(sig, sig); }, a,
                                   b, QuadMode::fixed, tol);
    acc += panel.value;
    quiet = std::abs(panel.value) < 1e-14 * std::abs(acc) + 1e-300 ? quiet + 1
                                                                   : 0;
    a = b;
  }
  out.modulus =
      std::pow(2.0 * kPi, -0.5 * (n + 1)) / std::sqrt(at) * std::abs(acc);
  return out;
}

// ---------------------------------------------------------------------------
// Wave at the base point
// ---------------------------------------------------------------------------

KernelEval hyp_wave_radial(const RadialFn& f, const RadialFn& g, double t,
                           int n, const ToleranceProfile& tol) {
  require_dim(n, 2, "hyp_wave_radial");
  KernelEval out;
  if (t == 0.0) {
    out.value = f(0.0);
    out.branch_note = "initial time";
    return out;
  }
  const double at = std::abs(t);
  const double sg = t > 0.0 ? 1.0 : -1.0;
  const double v = std::cosh(at);
  const double H = vstep(v);
  const double surfc = surface_const(n);
  if (n % 2 == 1) {
    // u(0,t) = pref [ d_t (S f / sinh)-chain + (S g / sinh)-chain ] with
    // ((1/sinh t) d_t)^m {W(cosh t)} = (d_v^m W)(cosh t).
    const double pref =
        std::pow(2.0, -0.5 * (n + 1)) * std::pow(kPi, -0.5 * (n - 1));
    std::function<double(double)> Wf = [&](double w) {
      return surfc * std::pow((w - 1.0) * (w + 1.0), 0.5 * (n - 2)) *
             f(std::acosh(w));
    };
    std::function<double(double)> Wg = [&](double w) {
      return surfc * std::pow((w - 1.0) * (w + 1.0), 0.5 * (n - 2)) *
             g(std::acosh(w));
    };
    const double uf =
        std::sinh(at) * vderiv<double>(Wf, (n - 1) / 2, v, H);
    const double ug = sg * vderiv<double>(Wg, (n - 3) / 2, v, H);
    out.value = pref * (uf + ug);
    out.branch_note = "wave (odd)";
    return out;
  }
  // Even dimension: ball integrals with the inverse-square-root kernel;
  // Q_h(v) = 2 int_0^{sqrt(v-1)} S_h(v - u^2) du, S_h(w) = surfc
  // (w^2-1)^{(n-2)/2} h(acosh w), and
  //   u(0,t) = pref [ sinh|t| (d_v^{n/2} Q_f)(cosh t)
  //                   + sign(t) (d_v^{n/2-1} Q_g)(cosh t) ].
  const double pref = std::pow(2.0, -0.5 * (n + 1)) * std::pow(kPi, -0.5 * n);
  auto makeQ = [&](const RadialFn& h) {
    return std::function<double(double)>([&, h](double w) {
      if (w <= 1.0) return 0.0;
      const double um = std::sqrt(w - 1.0);
      KernelEval q = num::quad(
          [&](double u) {
            const double y = w - u * u;
            return surfc * std::pow(y * y - 1.0, 0.5 * (n - 2)) *
                   h(std::acosh(y));
          },
          0.0, um, QuadMode::adaptive, tol);
      return 2.0 * q.re();
    });
  };
  const std::function<double(double)> Qf = makeQ(f);
  const std::function<double(double)> Qg = makeQ(g);
  const double uf = std::sinh(at) * vderiv<double>(Qf, n / 2, v, H);
  const double ug = sg * vderiv<double>(Qg, n / 2 - 1, v, H);
  out.value = pref * (uf + ug);
  out.branch_note = "wave (even)";
  return out;
}

// ---------------------------------------------------------------------------
// Models
// ---------------------------------------------------------------------------

namespace {

double sqnorm(const std::vector<double>& c, std::size_t from, std::size_t to) {
  double s = 0.0;
  for (std::size_t i = from; i < to; ++i) s += c[i] * c[i];
  return s;
}

}  // namespace

void hyp_model_check(const HypPoint& p, double slack) {
  const std::size_t sz = p.coords.size();
  switch (p.model) {
    case HypModel::hyperboloid: {
      if (sz < 2) {
        throw num_error(errc::domain, "hyperboloid point needs n+1 coords");
      }
      const double x0 = p.coords[0];
      const double q = -x0 * x0 + sqnorm(p.coords, 1, sz);
      if (!(x0 >= 1.0 - slack) ||
          std::abs(q + 1.0) > slack * (1.0 + x0 * x0)) {
        throw num_error(errc::domain,
                        "hyperboloid invariant -x0^2 + |x'|^2 = -1 violated");
      }
      return;
    }
    case HypModel::halfspace: {
      if (sz < 1 || !(p.coords.back() > 0.0)) {
        throw num_error(errc::domain, "halfspace invariant y_n > 0 violated");
      }
      return;
    }
    case HypModel::ball: {
      if (sz < 1 || !(sqnorm(p.coords, 0, sz) < 1.0)) {
        throw num_error(errc::domain, "ball invariant |z| < 1 violated");
      }
      return;
    }
  }
  throw num_error(errc::internal, "unknown model");
}

HypPoint model_convert(const HypPoint& p, HypModel target) {
  hyp_model_check(p);
  if (p.model == target) return p;
  const std::size_t sz = p.coords.size();
  HypPoint out;
  out.model = target;
  if (p.model == HypModel::hyperboloid) {
    const std::size_t n = sz - 1;
    const double x0 = p.coords[0];
    const double xn = p.coords[sz - 1];
    out.coords.resize(n);
    if (target == HypModel::halfspace) {
      for (std::size_t j = 0; j + 1 < n; ++j) {
        out.coords[j] = p.coords[j + 1] / (x0 + xn);
      }
      out.coords[n - 1] = 1.0 / (x0 + xn);
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        out.coords[j] = p.coords[j + 1] / (1.0 + x0);
      }
    }
  } else if (p.model == HypModel::halfspace) {
    const std::size_t n = sz;
    const double yn = p.coords[n - 1];
    const double y2 = sqnorm(p.coords, 0, n);
    if (target == HypModel::hyperboloid) {
      out.coords.resize(n + 1);
      out.coords[0] = (1.0 + y2) / (2.0 * yn);
      for (std::size_t j = 0; j + 1 < n; ++j) {
        out.coords[j + 1] = p.coords[j] / yn;
      }
      out.coords[n] = (1.0 - y2) / (2.0 * yn);
    } else {
      const double den = 1.0 + y2 + 2.0 * yn;
      out.coords.resize(n);
      for (std::size_t j = 0; j + 1 < n; ++j) {
        out.coords[j] = 2.0 * p.coords[j] / den;
      }
      out.coords[n - 1] = (1.0 - y2) / den;
    }
  } else {
    const std::size_t n = sz;
    const double z2 = sqnorm(p.coords, 0, n);
    if (target == HypModel::hyperboloid) {
      out.coords.resize(n + 1);
      out.coords[0] = (1.0 + z2) / (1.0 - z2);
      for (std::size_t j = 0; j < n; ++j) {
        out.coords[j + 1] = 2.0 * p.coords[j] / (1.0 - z2);
      }
    } else {
      const double zn = p.coords[n - 1];
      const double den = 1.0 + z2 + 2.0 * zn;
      out.coords.resize(n);
      for (std::size_t j = 0; j + 1 < n; ++j) {
        out.coords[j] = 2.0 * p.coords[j] / den;
      }
      out.coords[n - 1] = (1.0 - z2) / den;
    }
  }
  hyp_model_check(out, 1e-7);
  return out;
}

double hyp_distance(const HypPoint& p) {
  hyp_model_check(p);
  switch (p.model) {
    case HypModel::hyperboloid:
      return std::acosh(std::max(1.0, p.coords[0]));
    case HypModel::ball:
      return 2.0 * std::atanh(std::sqrt(sqnorm(p.coords, 0, p.coords.size())));
    case HypModel::halfspace: {
      const double y2 = sqnorm(p.coords, 0, p.coords.size());
      const double x0 = (1.0 + y2) / (2.0 * p.coords.back());
      return std::acosh(std::max(1.0, x0));
    }
  }
  throw num_error(errc::internal, "unknown model");
}

}  // namespace ge
}  // namespace dunkl
