// Numeric 1D rational module: kernel branches, intertwining and
// product-formula densities, transform round trips, heat kernel, and
// large-parameter asymptotics.  Reference values from an independent
// 30-digit arbitrary-precision script (tools/oracles/dunkl1d_oracle.py).
#include <cmath>
#include <complex>

#include "doctest.h"
#include "dunkl/dunkl1d.hpp"

using namespace dunkl;
using namespace dunkl::d1;
using dunkl::num::pi;

namespace {
void check_rel(double got, double want, double rtol = 1e-10) {
  CHECK(std::abs(got - want) <= rtol * std::max(1.0, std::abs(want)));
}
void check_c(cplx got, cplx want, double rtol = 1e-10) {
  CHECK(std::abs(got - want) <= rtol * std::max(1.0, std::abs(want)));
}
// smooth compactly supported bump on (c-w, c+w)
double bump(double x, double c, double w) {
  double u = (x - c) / w;
  if (std::abs(u) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - u * u));
}
}  // namespace

TEST_CASE("kernel_E: normalization, oracle values, branch machinery") {
  check_rel(kernel_E(2.0, 1.0, 1.0).re(), 2.7878129475035704217, 1e-11);
  check_rel(kernel_E(cplx(0.0, 0.0), 0.0, 0.7).re(), 1.0, 1e-14);
  check_rel(kernel_E(3.3, 0.0, 0.7).re(), 1.0, 1e-14);
  // k = 0 collapses to the exponential
  check_rel(kernel_E(1.3, -0.7, 0.0).re(), std::exp(-1.3 * 0.7), 1e-12);
  check_rel(kernel_E(-3.2, 1.1, 0.3).re(), 0.96642820078859913315, 1e-11);
  check_rel(kernel_E(5.0, 4.9, 2.5).re(), 82490786.532569755638, 1e-10);
  // imaginary argument, series regime
  check_c(kernel_E(cplx(0.0, 1.3), 0.7, 0.6).value,
          cplx(0.82086844498163895888, 0.37419763725070557265), 1e-11);
  // imaginary argument, oscillatory-asymptotic regime
  KernelEval big = kernel_E(cplx(0.0, 4.0), 6.0, 1.0);
  CHECK(big.branch_note == "oscillatory");
  check_c(big.value, cplx(-0.037732431750275993547, -0.019246309961969707062),
          1e-11);
  check_c(kernel_E(cplx(0.0, 5.0), 5.5, 0.3).value,
          cplx(-0.094514021076473316855, 0.28287493556356378973), 1e-11);
  // symmetrized kernel is the even factor
  check_rel(kernel_E(2.0, 1.0, 1.0, true).re(), 1.8134302039235093838, 1e-11);
  CHECK_THROWS_AS(kernel_E(1.0, 1.0, -0.2), num_error);
}

TEST_CASE("kernel_E: symmetry, scaling, positivity, derivative bound") {
  ToleranceProfile tp;
  for (double k : {0.3, 1.0, 2.5}) {
    for (double lam : {-4.0, -1.1, 0.5, 3.0, 5.0}) {
      for (double x : {-5.0, -0.7, 0.2, 2.4, 4.8}) {
        double exy = kernel_E(lam, x, k).re();
        // symmetry in (lam, x) and scaling E_lam(t x) = E_{t lam}(x)
        check_rel(exy, kernel_E(x, lam, k).re(), 1e-10);
        check_rel(kernel_E(lam, 0.7 * x, k).re(),
                  kernel_E(0.7 * lam, x, k).re(), 1e-10);
        // positivity and the global bound e^{<lam+, x+>} with dominant
        // representatives: |lam| |x| on the line
        CHECK(exy > 0.0);
        CHECK(exy <= std::exp(std::abs(lam) * std::abs(x)) * (1.0 + 1e-12));
        // derivative bound |d/dx E| <= |lam| e^{<lam+, x+>} (finite differences)
        double h = 1e-5;
        double der =
            (kernel_E(lam, x + h, k).re() - kernel_E(lam, x - h, k).re()) /
            (2.0 * h);
        CHECK(std::abs(der) <=
              std::abs(lam) * std::exp(std::abs(lam) * std::abs(x)) + 1e-6);
      }
    }
  }
  (void)tp;
}

TEST_CASE("kernel_E: dual-branch agreement grid (acceptance criterion scope)") {
  for (double k : {0.3, 1.0, 2.5}) {
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        double lam = -5.0 + 10.0 * i / 19.0;
        double x = -5.0 + 10.0 * j / 19.0;
        KernelEval r = kernel_E(lam, x, k);  // throws on branch disagreement
        CHECK(r.err_est <= 1e-10 * std::max(1.0, std::abs(r.value)));
      }
    }
  }
}

TEST_CASE("mu density: normalization, reconstruction, support") {
  // closed form at k=1: (x+y)/(2x^2) on (-x, x)
  check_rel(mu_density(2.0, 0.5, 1.0), (2.0 + 0.5) / 8.0, 1e-12);
  CHECK(mu_density(2.0, 2.0, 1.0) == 0.0);
  CHECK(mu_density(2.0, -2.5, 1.0) == 0.0);
  CHECK(mu_density(-1.0, 0.3, 0.7) >= 0.0);
  CHECK_THROWS_AS(mu_density(1.0, 0.0, 0.0), num_error);
  CHECK_THROWS_AS(mu_density(0.0, 0.0, 1.0), num_error);

  auto one = [](double) { return 1.0; };
  check_rel(mu_integrate(0.8, 0.6, one), 1.0, 1e-9);
  check_rel(mu_integrate(-1.3, 1.7, one), 1.0, 1e-9);
  check_rel(mu_integrate(2.0, 1.0, one), 1.0, 1e-9);
  // kernel reconstruction E_lam(x) = int e^{lam y} dmu_x(y)
  check_rel(mu_integrate(0.8, 0.6, [](double y) { return std::exp(1.5 * y); }),
            2.000986928933427103, 1e-9);
  check_rel(mu_integrate(0.8, 0.6, [](double y) { return std::exp(1.5 * y); }),
            kernel_E(1.5, 0.8, 0.6).re(), 1e-9);
  // reflection-equivariance d mu_{-x}(-y) = d mu_x(y)
  check_rel(mu_density(-1.2, -0.4, 0.9), mu_density(1.2, 0.4, 0.9), 1e-12);
}

TEST_CASE("nu density: support shell, mass, TV bound, product formula") {
  double x = 1.0, y = 0.7, k = 1.5;
  CHECK(nu_density(x, y, 0.2, k) == 0.0);   // inside the inner radius
  CHECK(nu_density(x, y, 1.8, k) == 0.0);   // outside the outer radius
  CHECK(nu_density(x, y, 1.0, k) != 0.0);
  CHECK_THROWS_AS(nu_density(0.0, y, 1.0, k), num_error);
  CHECK_THROWS_AS(nu_density(x, y, 1.0, 0.0), num_error);

  auto one = [](double) { return 1.0; };
  check_rel(nu_integrate(1.0, 0.7, 1.5, one), 1.0, 1e-8);
  check_rel(nu_integrate(1.2, -0.5, 0.8, one), 1.0, 1e-8);
  // signed measure: TV exceeds 1 but respects the closed-form bound
  check_rel(nu_total_variation(1.0, 0.7, 1.0), 1.3033333333333333333, 1e-8);
  check_rel(nu_tv_bound(0.5), 1.2732395447351626862, 1e-12);
  check_rel(nu_tv_bound(1.0), 1.3333333333333333333, 1e-12);
  check_rel(nu_tv_bound(2.0), 1.3714285714285714286, 1e-12);
  CHECK(nu_total_variation(1.0, 0.7, 1.0) <= nu_tv_bound(1.0) + 1e-6);
  check_rel(nu_total_variation(1.0, -1.001, 0.5), 1.0, 1e-8);
  CHECK(nu_total_variation(1.0, -1.001, 0.5) <= nu_tv_bound(0.5) + 1e-6);
  // product formula E_lam(x) E_lam(y) = <nu_{x,y}, E_lam>
  double lhs = kernel_E(1.3, 1.0, 1.0).re() * kernel_E(1.3, 0.7, 1.0).re();
  check_rel(lhs, 2.6773837564077167068, 1e-10);
  double rhs = nu_integrate(1.0, 0.7, 1.0, [](double z) {
    return kernel_E(1.3, z, 1.0).re();
  });
  check_rel(rhs, lhs, 1e-8);
  CHECK_THROWS_AS(nu_integrate(1.0, -1.0, 1.0, one), num_error);
}

TEST_CASE("translate_radial: identity at y=0, positivity, transform oracle") {
  auto prof = [](double r) { return std::exp(-r * r / 2.0); };
  check_rel(translate_radial(prof, 0.0, -1.7, 1.0), prof(1.7), 1e-12);
  // against the generalized-translation definition via the transform
  check_rel(translate_radial(prof, 0.5, 0.8, 1.0), 0.57123199079302949995, 1e-8);
  // positivity on a grid
  for (double yy : {-2.0, -0.3, 0.9, 3.0})
    for (double xx : {-1.5, 0.0, 0.4, 2.2})
      CHECK(translate_radial(prof, yy, xx, 0.8) >= 0.0);
  // symmetry tau_y f(x) = tau_x f(y) (both equal the symmetric definition)
  check_rel(translate_radial(prof, 0.5, 0.8, 1.0),
            translate_radial(prof, 0.8, 0.5, 1.0), 1e-8);
}

TEST_CASE("transform: gaussian eigenfunction, k=0 Fourier, round trip, scaling") {
  double k = 1.0;
  double c = mehta_constant(k);
  auto gauss = [](double x) -> cplx { return std::exp(-x * x / 2.0); };
  // H[e^{-x^2/2}](lam) = c e^{-lam^2/2}
  KernelEval g = transform(gauss, 12.0, 0.9, k, false);
  check_rel(g.re(), 1.6718629326210648466, 1e-9);
  check_rel(g.re(), c * std::exp(-0.9 * 0.9 / 2.0), 1e-9);
  CHECK(std::abs(g.im()) < 1e-10);
  // k = 0: classical Fourier of the Gaussian
  check_rel(transform(gauss, 12.0, 1.0, 0.0, false).re(),
            std::sqrt(2.0 * pi) * std::exp(-0.5), 1e-9);
  // round trip on a compact bump; the image decays stretched-exponentially,
  // so the inverse needs a wide window (slowest point is x = 0, where the
  // kernel does not oscillate and truncation bites hardest)
  ToleranceProfile fast;
  fast.quad_abs_tol = 1e-9;
  auto f = [](double x) -> cplx { return bump(x, 0.6, 1.4); };
  auto fhat = [&](double lam) -> cplx {
    return transform(f, 2.5, lam, k, false, fast).value;
  };
  for (double x0 : {-1.1, 0.0, 0.6, 1.5}) {
    cplx back = transform(fhat, 140.0, x0, k, true, fast).value;
    CHECK(std::abs(back - f(x0)) < 1e-6);
  }
  // scaling law H[f(t.)](lam) = |t|^{-1-2k} H f(lam/t)
  double t = 1.7;
  auto fs = [&](double x) -> cplx { return bump(t * x, 0.6, 1.4); };
  cplx left = transform(fs, 2.5, 1.1, k, false).value;
  cplx right = std::pow(std::abs(t), -1.0 - 2.0 * k) *
               transform(f, 2.5, 1.1 / t, k, false).value;
  CHECK(std::abs(left - right) < 1e-9);
  // insufficient decay at the declared radius
  auto slow = [](double x) -> cplx { return 1.0 / (1.0 + x * x); };
  CHECK_THROWS_AS(transform(slow, 5.0, 0.3, k, false), num_error);
}

TEST_CASE("mehta_constant: closed form vs quadrature") {
  check_rel(mehta_constant(0.0), 2.5066282746310005024, 1e-12);
  check_rel(mehta_constant(0.5), 2.0, 1e-12);
  check_rel(mehta_constant(1.0), 2.5066282746310005024, 1e-12);
  check_rel(mehta_constant(2.0), 7.5198848238930015072, 1e-12);
  for (double k : {0.0, 0.5, 1.0, 2.0})
    check_rel(mehta_constant(k, true), mehta_constant(k), 1e-10);
}

TEST_CASE("heat kernel: values, mass, semigroup, bounds, heat equation") {
  // diagonal value h_t(0,0) = c^{-1} (2t)^{-k-1/2}
  check_rel(heat_kernel(0.5, 0.0, 0.0, 1.0), 0.39894228040143267794, 1e-11);
  check_rel(heat_kernel(0.5, 1.2, -0.4, 1.0), 0.15687221525553351456, 1e-11);
  CHECK_THROWS_AS(heat_kernel(0.0, 1.0, 1.0, 1.0), num_error);
  // symmetry and positivity
  check_rel(heat_kernel(0.3, 0.9, -0.4, 1.0), heat_kernel(0.3, -0.4, 0.9, 1.0),
            1e-12);
  for (double xx : {-3.0, -0.5, 0.0, 1.0, 4.0})
    CHECK(heat_kernel(0.7, xx, 1.3, 0.6) > 0.0);
  // mass 1 against the weight
  auto mass = num::quad([&](double y) {
    return std::pow(std::abs(y), 2.0) * heat_kernel(0.5, 1.2, y, 1.0);
  }, -14.0, 14.0);
  check_rel(mass.re(), 1.0, 1e-8);
  // semigroup
  auto sg = num::quad([&](double z) {
    return z * z * heat_kernel(0.3, 0.9, z, 1.0) * heat_kernel(0.2, z, -0.4, 1.0);
  }, -14.0, 14.0);
  check_rel(sg.re(), heat_kernel(0.5, 0.9, -0.4, 1.0), 1e-7);
  check_rel(sg.re(), 0.22110859738453249922, 1e-7);
  // Gaussian upper bound
  for (double tt : {0.05, 0.4, 2.0})
    for (double xx : {-2.0, 0.3, 1.7})
      for (double yy : {-1.2, 0.0, 2.5})
        CHECK(heat_kernel(tt, xx, yy, 1.0) <=
              heat_upper_bound(tt, xx, yy, 1.0) * (1.0 + 1e-10));
  // three-regime envelope: two-sided ratio over the acceptance grid;
  // points where the envelope itself underflows double range are skipped
  // (both sides are exact zeros there, so no ratio is measurable)
  double lo = 1e300, hi = 0.0;
  int measured = 0;
  for (double tt : {0.01, 0.1, 1.0, 10.0}) {
    for (double xx = -6.0; xx <= 6.0; xx += 1.5) {
      for (double yy = -6.0; yy <= 6.0; yy += 1.5) {
        double env = heat_envelope(tt, xx, yy, 1.0);
        if (env < 1e-280) continue;
        double ratio = heat_kernel(tt, xx, yy, 1.0) / env;
        CHECK(std::isfinite(ratio));
        CHECK(ratio > 0.0);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        ++measured;
      }
    }
  }
  CHECK(measured > 300);  // the skip must stay an edge case, not the rule
  // empirical constants observed ~[0.124, 0.283]; assert sane enclosure
  CHECK(lo > 0.05);
  CHECK(hi < 1.0);
  // heat equation: d/dt h = h'' + (2k/x) h' - (k/x^2)(h - h(-x))
  double t0 = 0.8, y0 = 0.7, k0 = 1.0, x0 = 1.1, h = 1e-4;
  auto u = [&](double tt, double xx) { return heat_kernel(tt, xx, y0, k0); };
  double dt = (u(t0 + h, x0) - u(t0 - h, x0)) / (2.0 * h);
  double uxx = (u(t0, x0 + h) - 2.0 * u(t0, x0) + u(t0, x0 - h)) / (h * h);
  double ux = (u(t0, x0 + h) - u(t0, x0 - h)) / (2.0 * h);
  double refl = u(t0, x0) - u(t0, -x0);
  double lap = uxx + 2.0 * k0 / x0 * ux - k0 / (x0 * x0) * refl;
  CHECK(std::abs(dt - lap) < 1e-5);
}

TEST_CASE("asymptotics: chamber limit and opposite-ray decay") {
  // k = 0: the normalized quantity is exactly 1 for every t
  auto flat = asym_sequence(1.0, 1.0, 0.0, {3.0, 17.0});
  CHECK(std::abs(flat[0] - cplx(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(flat[1] - cplx(1.0, 0.0)) < 1e-12);
  // k = 1, lam = x = 1: target (2 pi)^{-1/2} c = 1
  check_rel(asym_target(1.0, 1.0, 1.0), 1.0, 1e-12);
  auto seq = asym_sequence(1.0, 1.0, 1.0, {10.0, 100.0, 1000.0});
  double e0 = std::abs(seq[0] - asym_target(1.0, 1.0, 1.0));
  double e2 = std::abs(seq[2] - asym_target(1.0, 1.0, 1.0));
  CHECK(e2 < 5e-3);
  CHECK(e2 < e0);
  // weight-normalized target at other (lam, x)
  check_rel(asym_target(2.0, 0.5, 1.0), 1.0, 1e-12);  // delta(lam x)=1 again
  // opposite ray: fast convergence to the printed constant
  check_rel(asym_opposite_target(1.0, 1.0, 1.0), 0.5, 1e-12);
  auto opp = asym_opposite_sequence(1.0, 1.0, 1.0, {20.0, 60.0});
  check_rel(opp[0], 0.49999999999999991291, 1e-9);
  check_rel(opp[1], 0.5, 1e-10);
}

TEST_CASE("product case: kernels and heat kernels tensorize") {
  std::vector<cplx> lam = {cplx(2.0, 0.0), cplx(0.0, 1.3)};
  std::vector<double> x = {1.0, 0.7}, kk = {1.0, 0.6};
  cplx v = kernel_E_product(lam, x, kk).value;
  cplx w = kernel_E(lam[0], x[0], kk[0]).value * kernel_E(lam[1], x[1], kk[1]).value;
  CHECK(std::abs(v - w) < 1e-12);
  double hp = heat_kernel_product(0.5, {0.0, 1.2}, {0.0, -0.4}, {1.0, 1.0});
  check_rel(hp, 0.39894228040143267794 * 0.15687221525553351456, 1e-10);
  CHECK_THROWS_AS(kernel_E_product({cplx(1.0, 0.0)}, {1.0, 2.0}, {1.0, 1.0}),
                  num_error);
}
