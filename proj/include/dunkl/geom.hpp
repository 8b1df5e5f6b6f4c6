#pragma once
// Rank-one spherical Fourier analysis on the three model geometries:
// radial eigenfunctions on R^n (normalized Bessel), S^n (normalized
// ultraspherical polynomials) and H^n (hyperbolic spherical functions),
// the Hankel and Harish-Chandra transform pairs with their inversions,
// the Abel and dual-Abel machinery, heat / Schrodinger / wave propagators
// on H^n, and conversions between the hyperboloid, half-space and ball
// models of hyperbolic space.
//
// Conventions: rho = (n-1)/2 on H^n; all spherical functions are
// normalized to 1 at the base point; volume measures carry the full
// surface constant 2 pi^{n/2} / Gamma(n/2).

#include <complex>
#include <functional>
#include <vector>

#include "dunkl/numerics.hpp"

namespace dunkl {
namespace ge {

// Radial profile: a scalar function of the (non-negative) radial variable.
using RadialFn = std::function<double(double)>;

// ---------------------------------------------------------------------------
// Euclidean space R^n
// ---------------------------------------------------------------------------

// phi_lam(r) = 0F1(n/2; -(lam r)^2 / 4): the smooth radial eigenfunction of
// the Laplacian with eigenvalue -lam^2 and phi(0) = 1.  `series` evaluates
// the normalized-Bessel power series (with the classical oscillatory J for
// large real arguments); `integral` averages plane waves over the unit
// sphere (requires n >= 2).
enum class EuclidBranch { series, integral };
KernelEval euclid_phi(cplx lam, double r, int n,
                      EuclidBranch branch = EuclidBranch::series,
                      const ToleranceProfile& tol = {});

// Radial Fourier (Hankel) pair on R^n.  Forward maps a radial profile f(r)
// to  2 pi^{n/2}/Gamma(n/2) * int_0^support r^{n-1} f(r) phi_s(r) dr; the
// inverse carries the dual constant 1 / (2^{n-1} pi^{n/2} Gamma(n/2)).
// `support` bounds the quadrature window; insufficient decay of the profile
// at the window edge raises a domain error.
enum class Direction { forward, inverse };
KernelEval hankel_pair(const RadialFn& f, double s, int n, Direction dir,
                       double support, const ToleranceProfile& tol = {});

// ---------------------------------------------------------------------------
// Sphere S^n (n >= 2)
// ---------------------------------------------------------------------------

// Normalized ultraspherical polynomial phi_ell(cos theta), phi_ell(1) = 1,
// eigenfunction of the spherical Laplacian with eigenvalue -ell(ell+n-1).
double sphere_phi(int ell, double theta, int n);

// Dimension weight d_ell of the expansion f = sum_ell d_ell <f,phi_ell> phi_ell;
// d_0 = 1 and d_ell = 2 ell + 1 on S^2.
double sphere_weight(int ell, int n);

// Pairings <f, phi_ell> against the normalized surface measure
// Gamma((n+1)/2) / (sqrt(pi) Gamma(n/2)) sin^{n-1}(theta) d theta,
// ell = 0..lmax.
std::vector<double> sphere_expand(const RadialFn& f_of_theta, int lmax, int n,
                                  const ToleranceProfile& tol = {});

// Synthesis sum_ell d_ell coeffs[ell] phi_ell(cos theta) from the pairings
// returned by sphere_expand.
double sphere_synth(const std::vector<double>& coeffs, double theta, int n);

// ---------------------------------------------------------------------------
// Hyperbolic space H^n (n >= 2), rho = (n-1)/2
// ---------------------------------------------------------------------------

// Hyperbolic spherical function phi_lam(r), the radial eigenfunction of the
// Laplace-Beltrami operator with eigenvalue -(lam^2 + rho^2), phi(0) = 1.
// `gauss2f1` evaluates the Jacobi-function representation
// 2F1((rho+i lam)/2, (rho-i lam)/2; n/2; -sinh^2 r); `integral` averages
// horocyclic waves (cosh r - sinh r cos theta)^{i lam - rho} over the sphere.
enum class HypBranch { gauss2f1, integral };
KernelEval hyp_phi(cplx lam, double r, int n,
                   HypBranch branch = HypBranch::gauss2f1,
                   const ToleranceProfile& tol = {});

// Harish-Chandra c-function c(lam) = Gamma(2 rho)/Gamma(rho) *
// Gamma(i lam)/Gamma(i lam + rho) and the Plancherel density |c(lam)|^{-2}
// in its closed polynomial (odd n) / lam tanh(pi lam) (even n) form.
// lam = 0 is a pole of c and raises a domain error.
struct CDensity {
  cplx c_value{0.0, 0.0};
  double density = 0.0;
};
CDensity hyp_c_plancherel(double lam, int n);

// Spherical (Harish-Chandra) transform of a radial profile,
//   Hf(lam) = 2 pi^{n/2}/Gamma(n/2) int_0^support f(r) phi_lam(r) sinh^{n-1} r dr,
// and its inverse
//   f(r) = 2^{n-3} pi^{-n/2-1} Gamma(n/2)
//          int_0^lam_max Hf(lam) phi_lam(r) |c(lam)|^{-2} d lam.
// Both raise a domain error when the integrand has not decayed at the
// declared window edge.
KernelEval hyp_spherical(const RadialFn& f, double lam, int n, double support,
                         const ToleranceProfile& tol = {});
KernelEval hyp_spherical_inverse(const RadialFn& fhat, double r, int n,
                                 double lam_max,
                                 const ToleranceProfile& tol = {});

// Abel transform of a radial profile (an even profile of the horocyclic
// variable) and its inverse; rho-weighted decay is required up to `support`.
//   Af(r) = (2 pi)^{(n-1)/2}/Gamma((n-1)/2)
//           int_{|r|}^inf f(s) (cosh s - cosh r)^{(n-3)/2} sinh s ds.
KernelEval hyp_abel(const RadialFn& f, double r, int n, double support,
                    const ToleranceProfile& tol = {});
KernelEval hyp_abel_inverse(const RadialFn& g, double r, int n, double support,
                            const ToleranceProfile& tol = {});

// Dual Abel transform of an even profile g,
//   A*g(r) = 2^{(n-1)/2} Gamma(n/2)/(sqrt(pi) Gamma((n-1)/2)) (sinh r)^{2-n}
//            int_0^r g(s) (cosh r - cosh s)^{(n-3)/2} ds,
// with A*g(0) = g(0), and its inverse.  A*(cos(lam .))(r) = phi_lam(r).
KernelEval hyp_dual_abel(const RadialFn& g, double r, int n,
                         const ToleranceProfile& tol = {});
KernelEval hyp_dual_abel_inverse(const RadialFn& f, double r, int n,
                                 const ToleranceProfile& tol = {});

// Heat kernel h_t(r) on H^n (t > 0), from the closed odd-dimension
// derivative formula resp. the even-dimension half-integral formula;
// positive, with unit mass against the full volume measure.
KernelEval hyp_heat(double t, double r, int n,
                    const ToleranceProfile& tol = {});

// Modulus of the Schrodinger kernel |h_{-it}(r)| together with the
// two-regime envelope
//   e^{-rho r} * { |t|^{-3/2} (1+r)              if |t| >= 1 + r
//                { |t|^{-n/2} (1+r)^{(n-1)/2}    if |t| <  1 + r.
struct SchrodingerBound {
  double modulus = 0.0;
  double envelope = 0.0;
};
SchrodingerBound hyp_schrodinger_bound(double t, double r, int n,
                                       const ToleranceProfile& tol = {});

// Value at the base point of the solution of the shifted wave equation
// (d_t^2 = Delta + rho^2) with radial Cauchy data u(.,0) = f, d_t u(.,0) = g.
KernelEval hyp_wave_radial(const RadialFn& f, const RadialFn& g, double t,
                           int n, const ToleranceProfile& tol = {});

// ---------------------------------------------------------------------------
// Models of H^n
// ---------------------------------------------------------------------------

// hyperboloid: x in R^{n+1}, -x_0^2 + |x'|^2 = -1, x_0 >= 1  (n+1 coords)
// halfspace:   y in R^n, y_n > 0                              (n coords)
// ball:        z in R^n, |z| < 1                              (n coords)
enum class HypModel { hyperboloid, halfspace, ball };

struct HypPoint {
  HypModel model = HypModel::ball;
  std::vector<double> coords;  // dimension n (ball/halfspace) or n+1
};

// Throws a domain error when the model invariant fails (slack is relative).
void hyp_model_check(const HypPoint& p, double slack = 1e-9);

// Exact printed bijections between the three models; validates the input
// invariant and the output invariant.
HypPoint model_convert(const HypPoint& p, HypModel target);

// Geodesic distance to the base point: arccosh(x_0) on the hyperboloid,
// 2 artanh|z| on the ball; the half-space value goes through x_0.
double hyp_distance(const HypPoint& p);

}  // namespace ge
}  // namespace dunkl
