#pragma once
// Special-function and quadrature engine: gamma, normalized Bessel, pFq,
// Gauss 2F1 (with transformations for very negative argument), Gauss-Legendre
// quadrature (fixed and adaptive), and a line Fourier transform helper.
// Everything downstream builds on these primitives.

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl {

using cplx = std::complex<double>;

// Error taxonomy shared by all modules; the C API maps `code` to its
// integer error codes.
enum class errc {
  ok = 0,
  domain = 1,        // pole, invalid parameter, outside supported range
  convergence = 2,   // series/quadrature failed to reach tolerance
  disagreement = 3,  // independent evaluation branches disagree
  unsupported = 4,   // valid input, but outside implemented scope
  internal = 5,
};

class num_error : public std::runtime_error {
 public:
  num_error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
  errc code;
};

struct ToleranceProfile {
  double series_rel_tol = 1e-15;  // series truncation, relative
  int quad_order = 64;            // Gauss-Legendre node count (fixed mode)
  double quad_abs_tol = 1e-11;    // adaptive quadrature target
  double compare_tol = 1e-10;     // default assertion tolerance
  bool valid() const {
    return series_rel_tol > 0.0 && quad_order >= 2 && quad_abs_tol > 0.0 &&
           compare_tol > 0.0;
  }
};

// Tagged result of a special-function evaluation.
struct KernelEval {
  cplx value{0.0, 0.0};
  double err_est = 0.0;
  int terms_used = 0;
  std::string branch_note;
  double re() const { return value.real(); }
  double im() const { return value.imag(); }
};

namespace num {

inline constexpr double pi = 3.14159265358979323846264338327950288;

// --- gamma ---------------------------------------------------------------
// Lanczos approximation with reflection for Re z < 1/2.  Relative error
// ~1e-13 over the ranges used here.
double gamma_fn(double x);
cplx gamma_fn(cplx z);
double log_gamma(double x);  // x > 0
KernelEval gamma_eval(double x, bool log_mode = false);

// --- series --------------------------------------------------------------
// Normalized modified Bessel: j_nu(z) = 0F1(nu+1; z^2/4), j_nu(0) = 1.
// Even in z, entire; real for real or purely imaginary z.
KernelEval bessel_j_mod(double nu, cplx z, const ToleranceProfile& tol = {});

// Generalized hypergeometric sum_{l>=0} prod(a)_l / prod(b)_l z^l / l!.
// Stops when |term| < series_rel_tol*|sum| three times in a row.
KernelEval pfq_series(const std::vector<cplx>& a, const std::vector<cplx>& b,
                      cplx z, int cap = 200000, const ToleranceProfile& tol = {});

// Classical oscillatory Bessel J_nu(y) for real y >= 0, nu >= -1/2:
// power series below the crossover, Hankel asymptotic (P,Q) expansion above.
KernelEval bessel_J_real(double nu, double y, const ToleranceProfile& tol = {});

// Gauss 2F1 at real argument z <= ~0.94: direct series on [0, 0.94],
// Pfaff z -> z/(z-1) on moderate z < 0, and the 1/(1-z) connection
// formula for very negative z.  Terminating cases summed exactly.
KernelEval gauss_2f1(cplx a, cplx b, cplx c, double z,
                     const ToleranceProfile& tol = {});

// --- quadrature ----------------------------------------------------------
enum class QuadMode { fixed, adaptive };

// Nodes/weights on [-1,1]; computed by Newton iteration and cached.
void gauss_legendre(int order, std::vector<double>& nodes,
                    std::vector<double>& weights);

KernelEval quad(const std::function<double(double)>& f, double a, double b,
                QuadMode mode = QuadMode::adaptive,
                const ToleranceProfile& tol = {});
KernelEval quad_c(const std::function<cplx(double)>& f, double a, double b,
                  QuadMode mode = QuadMode::adaptive,
                  const ToleranceProfile& tol = {});

// int_a^b f(x) e^{-i lam x} dx for f supported in [a,b].
cplx fourier_line(const std::function<double(double)>& f, double a, double b,
                  double lam, const ToleranceProfile& tol = {});

// Tanh-sinh (double-exponential) quadrature on (a,b).  Converges at
// spectral rate even with integrable endpoint singularities such as
// (x-a)^{p}, p > -1, which Gauss panels handle poorly.  Level doubling
// until successive estimates agree within quad_abs_tol (relative to scale).
//
// The _sing flavors pass the integrand its exact distances (da, db) to the
// endpoints a and b; factors like (x-a)^{p} must be computed from those to
// avoid cancellation once x is within ~1e-16 of an endpoint.
KernelEval quad_de(const std::function<double(double)>& f, double a, double b,
                   const ToleranceProfile& tol = {});
KernelEval quad_de_c(const std::function<cplx(double)>& f, double a, double b,
                     const ToleranceProfile& tol = {});
KernelEval quad_de_sing(
    const std::function<double(double, double, double)>& f, double a, double b,
    const ToleranceProfile& tol = {});
KernelEval quad_de_sing_c(
    const std::function<cplx(double, double, double)>& f, double a, double b,
    const ToleranceProfile& tol = {});

// --- small helpers used across modules ------------------------------------
inline bool near_nonpositive_int(double x, double eps = 1e-12) {
  if (x > 0.5) return false;
  double r = std::round(x);
  return r <= 0.0 && std::abs(x - r) < eps;
}
bool near_nonpositive_int(cplx z, double eps = 1e-12);
// If a in the parameter list triggers termination, degree of the polynomial.
int terminating_degree(const std::vector<cplx>& a, double eps = 1e-12);

}  // namespace num
}  // namespace dunkl
