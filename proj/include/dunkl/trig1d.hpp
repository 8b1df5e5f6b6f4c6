#pragma once
// Numeric trigonometric theory in dimension one: Jacobi functions, the
// symmetric hypergeometric function F_lam and its non-symmetric companion
// G_lam, the Harish-Chandra c-function with series expansion, spectral
// (Plancherel) densities, the Cherednik transform pair (asymmetric and
// W-invariant flavors), the intertwining density mu_x, the signed
// product-formula density nu_{x,y}, and the scaling limit that recovers
// the rational kernel.
//
// Conventions: multiplicities (k1, k2) sit on the root pair (alpha, 2 alpha),
// rho = k1/2 + k2, and the reference weight on the line is
//   delta(x) = |2 sinh(x/2)|^{2 k1} |2 sinh(x)|^{2 k2}.

#include <complex>
#include <functional>
#include <vector>

#include "dunkl/numerics.hpp"

namespace dunkl {
namespace t1 {

// Multiplicity data of the one-dimensional trigonometric theory.
struct TrigMult1D {
  double k1 = 0.0;  // multiplicity on the root alpha
  double k2 = 0.0;  // multiplicity on the root 2 alpha
  double rho() const { return 0.5 * k1 + k2; }
  bool valid() const { return k1 >= 0.0 && k2 >= 0.0; }
  bool zero() const { return k1 == 0.0 && k2 == 0.0; }
};

// Jacobi function phi_lam^{(alpha,beta)}(t), alpha > -1; even in lam,
// phi(0) = 1.  Terminating parameter choices (lam = +-i(alpha+beta+1))
// are summed exactly.
KernelEval jacobi_phi(cplx lam, double t, double alpha, double beta,
                      const ToleranceProfile& tol = {});

// Symmetric hypergeometric function F_lam(x) (even in x and lam) and the
// non-symmetric G_lam(x) with G_lam(0) = 1 and F = (G(x) + G(-x))/2.
// Both reduce to e^{lam x} (resp. cosh(lam x)) when k1 = k2 = 0 and are
// strictly positive for real lam.  Very negative Gauss arguments at
// resonant spectral parameters (2 lam integral) fall back to a Richardson
// average over lam +- h, reported in branch_note.
KernelEval ho_F(cplx lam, double x, TrigMult1D k,
                const ToleranceProfile& tol = {});
KernelEval opdam_G(cplx lam, double x, TrigMult1D k,
                   const ToleranceProfile& tol = {});

// Harish-Chandra c-function, normalized so c(rho) = 1, and the constant
// c0 = Gamma(2 k1 + 2 k2)/Gamma(k1 + k2) it is built from.
cplx c_function(cplx lam, TrigMult1D k);
double c0_constant(TrigMult1D k);

// Spectral densities on the real axis.
//   plancherel_density:    Gamma-quotient form (complex valued), the density
//                          of the asymmetric inversion formula;
//   plancherel_density_ratio_form: the same density written as
//                          c0^2/|c(i lam)|^2 * (rho - i lam)/(- i lam);
//   plancherel_density_sym: c0^2/|c(i lam)|^2, the W-invariant density.
cplx plancherel_density(double lam, TrigMult1D k);
cplx plancherel_density_ratio_form(double lam, TrigMult1D k);
double plancherel_density_sym(double lam, TrigMult1D k);

// Convenience bundle: c(lam) together with the asymmetric density.
struct CPlancherel {
  cplx c_value;
  cplx density;
};
CPlancherel c_and_plancherel(double lam, TrigMult1D k);

// Coefficients Gamma_l(lam) (Gamma_0 = 1) of the Harish-Chandra series
//   Phi_lam(x) = sum_{l >= 0} Gamma_l(lam) e^{(lam - rho - l) x},
// and the truncated two-term approximation
//   F_lam(x) ~ c(lam) Phi_lam(x) + c(-lam) Phi_{-lam}(x),  x -> +infinity.
// Resonant lam (2 lam a positive integer <= L) raises errc::domain.
std::vector<cplx> hc_coefficients(cplx lam, TrigMult1D k, int L);
KernelEval hc_series_F(cplx lam, double x, TrigMult1D k, int L = 40,
                       const ToleranceProfile& tol = {});

// Reference weight and the squared normalization constant of the inverse
// transform, 2^{4(k1+k2)+1} Gamma(k1+k2+1/2)^2 (calibrated numerically via
// round-trip identity, then frozen; reduces to 2 pi at k = 0).
double delta_weight(double x, TrigMult1D k);
double inv_norm2(TrigMult1D k);

// Cherednik transform pair.
//   forward:  Hf(lam)  = int_{-R}^{R} delta(x) f(x) G_{i lam}(-x) dx
//   inverse:  f(x) = inv_norm2^{-1} int_{-L}^{L} dens(lam) Hf(lam) G_{i lam}(x) dlam
// The W-invariant flavor replaces G_{i lam} by F_{i lam} and dens by the
// symmetric density.  lam may be complex in the forward direction
// (Paley-Wiener sweeps).  The weighted integrand must be negligible at the
// declared cutoff; errc::domain is raised on insufficient decay.
KernelEval cherednik_transform(const std::function<double(double)>& f,
                               double support, cplx lam, TrigMult1D k,
                               const ToleranceProfile& tol = {});
KernelEval cherednik_inverse(const std::function<cplx(double)>& fhat,
                             double cutoff, double x, TrigMult1D k,
                             const ToleranceProfile& tol = {});
KernelEval cherednik_transform_sym(const std::function<double(double)>& f,
                                   double support, cplx lam, TrigMult1D k,
                                   const ToleranceProfile& tol = {});
KernelEval cherednik_inverse_sym(const std::function<cplx(double)>& fhat,
                                 double cutoff, double x, TrigMult1D k,
                                 const ToleranceProfile& tol = {});

// Geometric gauge sweep: max over the grid of
//   |Hf(lam + i mu)| (1 + |lam|)^N e^{-R |mu|},
// the quantity that stays bounded for every N when f is smooth and
// supported in [-R, R].
double pw_gauge_sup(const std::function<double(double)>& f, double support,
                    int N, const std::vector<double>& lam_grid,
                    const std::vector<double>& mu_grid, TrigMult1D k,
                    const ToleranceProfile& tol = {});

// Intertwining density mu_x(y), supported on |y| < |x|, nonnegative, with
//   int mu_x(y) e^{lam y} dy = G_lam(x)      (so the total mass is G_0(x)).
// Cases: generic k1,k2 > 0 (inner integral), k1 = 0 (closed form), k2 = 0
// (half of the closed form at halved arguments).  Requires x != 0 and
// (k1,k2) != (0,0).
double mu_trig_density(double x, double y, TrigMult1D k,
                       const ToleranceProfile& tol = {});
double mu_trig_integrate(double x, TrigMult1D k,
                         const std::function<double(double)>& g,
                         const ToleranceProfile& tol = {});
cplx mu_trig_integrate_c(double x, TrigMult1D k,
                         const std::function<cplx(double)>& g,
                         const ToleranceProfile& tol = {});

// Signed product-formula density nu_{x,y}(z), supported on the shell
// ||x|-|y|| < |z| < |x|+|y|, with unit mass and
//   int nu_{x,y}(z) G_lam(z) dz = G_lam(x) G_lam(y).
// Same three multiplicity cases as mu.  Requires x, y != 0.
double nu_trig_density(double x, double y, double z, TrigMult1D k,
                       const ToleranceProfile& tol = {});
// int g(z) dnu_{x,y}(z); x = 0 or y = 0 degenerate to point evaluations,
// k = (0,0) to the classical translation g(x+y).
double nu_trig_integrate(double x, double y, TrigMult1D k,
                         const std::function<double(double)>& g,
                         const ToleranceProfile& tol = {});
// Average over both sign orbits {+-x} x {+-y}; applied to F_lam it
// produces the symmetric product F_lam(x) F_lam(y).
double nu_trig_integrate_W(double x, double y, TrigMult1D k,
                           const std::function<double(double)>& g,
                           const ToleranceProfile& tol = {});

// Scaling limit towards the rational kernel: the error sequence
//   |G_{lam/eps}(eps x) - E_lam(x)|
// along eps_seq, with trigonometric data (k1, k2) = (k, 0) matching the
// rational multiplicity k on the reduced root pair.
std::vector<double> rational_limit(double lam, double x, double k,
                                   const std::vector<double>& eps_seq,
                                   const ToleranceProfile& tol = {});

}  // namespace t1
}  // namespace dunkl
