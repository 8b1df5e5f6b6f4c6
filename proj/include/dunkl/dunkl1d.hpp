#pragma once
// Numeric rational theory in dimension one and finite products: the kernel
// E_lam(x) (two independent evaluation branches), the symmetrized Bessel-type
// kernel, intertwining density mu_x, product-formula density nu_{x,y},
// generalized radial translation, the weighted integral transform with its
// inverse, the Gaussian normalization constant, the heat kernel with its
// sharp three-regime envelope, and large-parameter asymptotics.
//
// Reference measure throughout: |x|^{2k} dx on the line.

#include <complex>
#include <functional>
#include <vector>

#include "dunkl/numerics.hpp"

namespace dunkl {
namespace d1 {

// Multiplicity parameter of the one-dimensional theory (per factor in the
// product case).  gamma = k; the weight is |x|^{2k}.
struct Mult1D {
  double k = 0.0;
  bool valid() const { return k >= 0.0; }
};

// E_lam(x), normalized so E_lam(0) = 1.  Evaluates two independent branches:
//   (a) j_{k-1/2}(lam x) + (lam x)/(2k+1) j_{k+1/2}(lam x)
//   (b) e^{-lam x} 1F1(k+1; 2k+1; 2 lam x)   (Kummer-stable confluent form)
// and fails with errc::disagreement if they differ beyond compare_tol.
// symmetrize = true returns the even part j_{k-1/2}(lam x) instead.
KernelEval kernel_E(cplx lam, double x, double k, bool symmetrize = false,
                    const ToleranceProfile& tol = {});

// Probability density of mu_x at y (zero outside |y| < |x|):
//   Gamma(k+1/2)/(sqrt(pi) Gamma(k)) |x|^{-2k} (|x|+sign(x) y)(x^2-y^2)^{k-1}.
// Requires k > 0 and x != 0 (at k = 0 the measure is the Dirac mass at x).
double mu_density(double x, double y, double k);

// int g(y) dmu_x(y), singularity-aware quadrature; exact distances to the
// endpoints -|x|, |x| are used for the (x^2-y^2)^{k-1} factor.
double mu_integrate(double x, double k, const std::function<double(double)>& g,
                    const ToleranceProfile& tol = {});
cplx mu_integrate_c(double x, double k, const std::function<cplx(double)>& g,
                    const ToleranceProfile& tol = {});

// Signed product-formula density nu(x,y,z) (the measure is nu |z|^{2k} dz),
// supported on ||x|-|y|| < |z| < |x|+|y|.  Requires k > 0, x,y != 0.
double nu_density(double x, double y, double z, double k);

// int g(z) dnu_{x,y}(z) over both components of the support shell.
double nu_integrate(double x, double y, double k,
                    const std::function<double(double)>& g,
                    const ToleranceProfile& tol = {});

// Total variation int |dnu_{x,y}| and its closed-form uniform bound
//   M = sqrt(2) Gamma(k+1/2)^2 / (Gamma(k+1/4) Gamma(k+3/4)).
double nu_total_variation(double x, double y, double k,
                          const ToleranceProfile& tol = {});
double nu_tv_bound(double k);

// Generalized translation of a radial profile f(|.|):
//   (tau_y f)(x) = int dmu_{sign(y)}(z) f(sqrt(x^2 + y^2 + 2 x z |y|)).
// y = 0 returns f(|x|).  Positivity-preserving.
double translate_radial(const std::function<double(double)>& f_radial,
                        double y, double x, double k,
                        const ToleranceProfile& tol = {});

// Weighted integral transform against the kernel.
//   forward:  Hf(lam) = int |x|^{2k} f(x) E_{-i lam}(x) dx
//   inverse:  f(x)    = c^{-2} int |lam|^{2k} Hf(lam) E_{+i lam}(x) dlam
// The integrand must be negligible at the declared support radius; the
// sampled tail is checked and errc::domain is raised on insufficient decay.
KernelEval transform(const std::function<cplx(double)>& f,
                     double support_radius, double lam, double k, bool inverse,
                     const ToleranceProfile& tol = {});

// Gaussian moment constant c = int |x|^{2k} e^{-x^2/2} dx.
// Closed form 2^{k+1/2} Gamma(k+1/2); by_quadrature recomputes it
// numerically (used to validate the closed form).
double mehta_constant(double k, bool by_quadrature = false,
                      const ToleranceProfile& tol = {});

// Heat kernel for the weighted Laplacian, t > 0:
//   h_t(x,y) = c^{-1} (2t)^{-1/2-k} e^{-(x^2+y^2)/(4t)} E_{x/sqrt(2t)}(y/sqrt(2t)).
double heat_kernel(double t, double x, double y, double k,
                   const ToleranceProfile& tol = {});

// Sharp-estimate envelope (no constants): three regimes split by the sign
// and size of x*y relative to t.
double heat_envelope(double t, double x, double y, double k);

// Gaussian upper bound c^{-1} (2t)^{-1/2-k} max(e^{-(x-y)^2/4t}, e^{-(x+y)^2/4t}).
double heat_upper_bound(double t, double x, double y, double k);

// Oscillatory normalization sequence (it)^k e^{-it lam x} E_{it lam}(x) along
// t_seq; converges to (2 pi)^{-1/2} c (lam x)^{-k} as t -> infinity.
std::vector<cplx> asym_sequence(double lam, double x, double k,
                                const std::vector<double>& t_seq,
                                const ToleranceProfile& tol = {});
double asym_target(double lam, double x, double k);

// Opposite-ray decay sequence t^{k+1} e^{-t lam x} E_{t lam}(-x) along real
// t_seq; converges to 2^{k-1} k Gamma(k+1/2)/sqrt(pi) (lam x)^{-k-1}.
std::vector<double> asym_opposite_sequence(double lam, double x, double k,
                                           const std::vector<double>& t_seq,
                                           const ToleranceProfile& tol = {});
double asym_opposite_target(double lam, double x, double k);

// Product case: kernels and heat kernels tensorize factorwise.
KernelEval kernel_E_product(const std::vector<cplx>& lam,
                            const std::vector<double>& x,
                            const std::vector<double>& k,
                            const ToleranceProfile& tol = {});
double heat_kernel_product(double t, const std::vector<double>& x,
                           const std::vector<double>& y,
                           const std::vector<double>& k,
                           const ToleranceProfile& tol = {});

}  // namespace d1
}  // namespace dunkl
