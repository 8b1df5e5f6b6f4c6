#include "dunkl/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace dunkl {
namespace num {

namespace {

// Lanczos coefficients, g = 7, 9 terms.
constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

template <class T>
T lanczos_core(T z) {
  // valid for Re z >= 0.5; z here is the argument itself (not shifted)
  z -= 1.0;
  T x = lanczos_c[0];
  for (int i = 1; i < 9; ++i) x += lanczos_c[i] / (z + static_cast<double>(i));
  T t = z + lanczos_g + 0.5;
  using std::exp;
  using std::pow;
  using std::sqrt;
  return sqrt(2.0 * pi) * pow(t, z + 0.5) * exp(-t) * x;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

bool near_nonpositive_int(cplx z, double eps) {
  return std::abs(z.imag()) < eps && near_nonpositive_int(z.real(), eps);
}

int terminating_degree(const std::vector<cplx>& a, double eps) {
  int deg = -1;
  for (const auto& ai : a) {
    if (near_nonpositive_int(ai, eps)) {
      int d = static_cast<int>(-std::round(ai.real()));
      if (deg < 0 || d < deg) deg = d;
    }
  }
  return deg;
}

double gamma_fn(double x) {
  if (near_nonpositive_int(x))
    throw num_error(errc::domain, "gamma_fn: pole at nonpositive integer x=" + fmt(x));
  if (x < 0.5) {
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
  }
  return lanczos_core(x);
}

cplx gamma_fn(cplx z) {
  if (near_nonpositive_int(z))
    throw num_error(errc::domain, "gamma_fn: pole at nonpositive integer z=" + fmt(z.real()));
  if (z.real() < 0.5) {
    return pi / (std::sin(pi * z) * gamma_fn(cplx(1.0) - z));
  }
  return lanczos_core(z);
}

double log_gamma(double x) {
  if (x <= 0.0) throw num_error(errc::domain, "log_gamma: requires x > 0, got " + fmt(x));
  if (x < 0.5) return std::log(pi / std::sin(pi * x)) - log_gamma(1.0 - x);
  double z = x - 1.0;
  double s = lanczos_c[0];
  for (int i = 1; i < 9; ++i) s += lanczos_c[i] / (z + i);
  double t = z + lanczos_g + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(s);
}

KernelEval gamma_eval(double x, bool log_mode) {
  KernelEval r;
  if (log_mode) {
    r.value = log_gamma(x);
    r.branch_note = "log";
  } else {
    r.value = gamma_fn(x);
    r.branch_note = x < 0.5 ? "reflection" : "lanczos";
  }
  r.err_est = 1e-13 * (1.0 + std::abs(r.value));
  return r;
}

KernelEval pfq_series(const std::vector<cplx>& a, const std::vector<cplx>& b,
                      cplx z, int cap, const ToleranceProfile& tol) {
  for (const auto& bi : b) {
    if (near_nonpositive_int(bi)) {
      int dn = terminating_degree(a);
      int bp = static_cast<int>(-std::round(bi.real()));
      if (dn < 0 || dn > bp)
        throw num_error(errc::domain,
                        "pfq_series: lower parameter at nonpositive integer");
    }
  }
  int term_deg = terminating_degree(a);
  if (term_deg < 0) {
    if (a.size() > b.size() + 1 && std::abs(z) > 0.0)
      throw num_error(errc::domain, "pfq_series: divergent (p > q+1)");
    if (a.size() == b.size() + 1 && std::abs(z) >= 1.0)
      throw num_error(errc::domain,
                      "pfq_series: |z| >= 1 outside convergence disk");
  }
  KernelEval r;
  cplx term = 1.0, sum = 1.0;
  int small_run = 0;
  double last_mag = 1.0, peak = 1.0;
  for (int l = 0;; ++l) {
    if (term_deg >= 0 && l >= term_deg) break;  // all later terms vanish
    if (l >= cap)
      throw num_error(errc::convergence,
                      "pfq_series: term cap reached, |last term| ~ " + fmt(last_mag));
    cplx ratio = z / static_cast<double>(l + 1);
    for (const auto& ai : a) ratio *= ai + static_cast<double>(l);
    for (const auto& bi : b) ratio /= bi + static_cast<double>(l);
    term *= ratio;
    sum += term;
    r.terms_used = l + 2;
    last_mag = std::abs(term);
    peak = std::max(peak, last_mag);
    if (last_mag < tol.series_rel_tol * std::max(std::abs(sum), 1e-300)) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
  }
  r.value = sum;
  // truncation plus cancellation: when terms grow before they shrink
  // (oscillatory argument), the roundoff floor is eps * peak term
  r.err_est = std::max(last_mag, 2.2e-16 * peak);
  r.branch_note = term_deg >= 0 ? "terminating" : "series";
  return r;
}

KernelEval bessel_j_mod(double nu, cplx z, const ToleranceProfile& tol) {
  if (nu <= -1.0)
    throw num_error(errc::domain, "bessel_j_mod: requires nu > -1, got " + fmt(nu));
  cplx arg = z * z / 4.0;
  KernelEval r = pfq_series({}, {cplx(nu + 1.0)}, arg, 200000, tol);
  r.branch_note = "0F1";
  return r;
}

KernelEval bessel_J_real(double nu, double y, const ToleranceProfile& tol) {
  if (nu < -0.5 || !(y >= 0.0))
    throw num_error(errc::domain, "bessel_J_real: need nu >= -1/2 and y >= 0");
  KernelEval r;
  if (y < 14.0) {
    KernelEval s = bessel_j_mod(nu, cplx(0.0, y), tol);
    r = s;
    r.value = std::pow(y / 2.0, nu) / gamma_fn(nu + 1.0) * s.value;
    r.branch_note = "series";
    return r;
  }
  // Hankel expansion: J = sqrt(2/(pi y)) (P cos chi - Q sin chi),
  // chi = y - nu pi/2 - pi/4, a_j = prod_{i<=j} (4nu^2-(2i-1)^2)/(8 i),
  // P = sum_{j even} (-1)^{j/2} a_j y^{-j}, Q = sum_{j odd} ...
  double mu4 = 4.0 * nu * nu;
  double P = 1.0, Q = 0.0, term = 1.0, prev_mag = 1.0;
  for (int j = 1; j <= 60; ++j) {
    double odd = 2.0 * j - 1.0;
    term *= (mu4 - odd * odd) / (8.0 * j * y);
    double mag = std::abs(term);
    if (mag > prev_mag) break;  // asymptotic series started diverging
    double signp = ((j / 2) % 2 == 0) ? 1.0 : -1.0;
    if (j % 2 == 1)
      Q += signp * term;
    else
      P += signp * term;
    r.terms_used = j;
    prev_mag = mag;
    if (mag < 1e-17) break;
  }
  double chi = y - nu * pi / 2.0 - pi / 4.0;
  r.value = std::sqrt(2.0 / (pi * y)) * (P * std::cos(chi) - Q * std::sin(chi));
  r.err_est = std::sqrt(2.0 / (pi * y)) * prev_mag;
  r.branch_note = "hankel";
  return r;
}

KernelEval gauss_2f1(cplx a, cplx b, cplx c, double z, const ToleranceProfile& tol) {
  int term_deg = terminating_degree({a, b});
  if (near_nonpositive_int(c)) {
    int cp = static_cast<int>(-std::round(c.real()));
    if (term_deg < 0 || term_deg > cp)
      throw num_error(errc::domain, "gauss_2f1: pole, c is a nonpositive integer");
  }
  if (term_deg >= 0 || (z >= 0.0 && z <= 0.94)) {
    KernelEval r = pfq_series({a, b}, {c}, cplx(z), 200000, tol);
    if (term_deg < 0) r.branch_note = "series";
    return r;
  }
  if (z > 0.94)
    throw num_error(errc::domain,
                    "gauss_2f1: argument too close to 1 (z=" + fmt(z) + ")");
  // z < 0 from here on
  double w = z / (z - 1.0);  // in (0,1)
  cplx amb = a - b;
  bool degenerate =
      std::abs(amb.imag()) < 1e-6 &&
      std::abs(amb.real() - std::round(amb.real())) < 1e-6;
  if (w <= 0.995 || (degenerate && w <= 0.9995)) {
    // Pfaff: (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
    KernelEval r = pfq_series({a, c - b}, {c}, cplx(w), 200000, tol);
    r.value *= std::exp(-a * std::log1p(-z));
    r.err_est *= std::exp(-a.real() * std::log1p(-z));
    r.branch_note = "pfaff";
    return r;
  }
  if (degenerate)
    throw num_error(errc::unsupported,
                    "gauss_2f1: a-b integral and z too negative for Pfaff "
                    "(z=" + fmt(z) + ")");
  // connection formula in u = 1/(1-z), valid for a-b not an integer
  double u = 1.0 / (1.0 - z);
  cplx ga = gamma_fn(a), gb = gamma_fn(b), gc = gamma_fn(c);
  cplx gcma = gamma_fn(c - a), gcmb = gamma_fn(c - b);
  cplx gbma = gamma_fn(b - a), gamb = gamma_fn(amb);
  KernelEval f1 = pfq_series({a, c - b, }, {a - b + 1.0}, cplx(u), 200000, tol);
  KernelEval f2 = pfq_series({b, c - a}, {b - a + 1.0}, cplx(u), 200000, tol);
  double l1mz = std::log1p(-z);
  cplx t1 = gc * gbma / (gb * gcma) * std::exp(-a * l1mz) * f1.value;
  cplx t2 = gc * gamb / (ga * gcmb) * std::exp(-b * l1mz) * f2.value;
  KernelEval r;
  r.value = t1 + t2;
  r.err_est = f1.err_est + f2.err_est +
              1e-14 * (std::abs(t1) + std::abs(t2));
  r.terms_used = f1.terms_used + f2.terms_used;
  r.branch_note = "connection";
  return r;
}

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  if (order < 2) throw num_error(errc::domain, "gauss_legendre: order >= 2 required");
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  static std::mutex cache_mu;
  {
    std::lock_guard<std::mutex> lk(cache_mu);
    auto it = cache.find(order);
    if (it != cache.end()) {
      nodes = it->second.first;
      weights = it->second.second;
      return;
    }
  }
  int n = order;
  std::vector<double> x(n), w(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double xi = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence for P_n(xi) and P'_n(xi)
      double p0 = 1.0, p1 = xi;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
      double dx = p1 / dp;
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // one polishing pass for the weight
    double p0 = 1.0, p1 = xi;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
    x[i] = -xi;
    x[n - 1 - i] = xi;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
  }
  {
    std::lock_guard<std::mutex> lk(cache_mu);
    cache[order] = {x, w};
  }
  nodes = std::move(x);
  weights = std::move(w);
}

namespace {

template <class T>
T gl_panel(const std::function<T(double)>& f, double a, double b, int order) {
  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  T s{};
  for (size_t i = 0; i < x.size(); ++i) s += w[i] * f(mid + half * x[i]);
  return s * half;
}

template <class T>
T adaptive_panel(const std::function<T(double)>& f, double a, double b,
                 double tol_abs, int depth, double& err_acc) {
  T whole = gl_panel(f, a, b, 16);
  double m = 0.5 * (a + b);
  T left = gl_panel(f, a, m, 16), right = gl_panel(f, m, b, 16);
  double err = std::abs(whole - (left + right));
  if (err < tol_abs || depth >= 48) {
    err_acc += err;
    return left + right;
  }
  return adaptive_panel(f, a, m, 0.5 * tol_abs, depth + 1, err_acc) +
         adaptive_panel(f, m, b, 0.5 * tol_abs, depth + 1, err_acc);
}

template <class T>
KernelEval quad_impl(const std::function<T(double)>& f, double a, double b,
                     QuadMode mode, const ToleranceProfile& tol) {
  if (!tol.valid()) throw num_error(errc::domain, "quad: invalid ToleranceProfile");
  KernelEval r;
  if (a == b) return r;
  if (mode == QuadMode::fixed) {
    r.value = gl_panel(f, a, b, tol.quad_order);
    r.terms_used = tol.quad_order;
    r.branch_note = "gauss-legendre";
    return r;
  }
  double err_acc = 0.0;
  r.value = adaptive_panel(f, a, b, tol.quad_abs_tol, 0, err_acc);
  r.err_est = err_acc;
  r.branch_note = "adaptive";
  if (err_acc > 10.0 * tol.quad_abs_tol)
    throw num_error(errc::convergence,
                    "quad: tolerance not reached, best estimate " +
                        fmt(std::abs(r.value)) + " +/- " + fmt(err_acc));
  return r;
}

}  // namespace

KernelEval quad(const std::function<double(double)>& f, double a, double b,
                QuadMode mode, const ToleranceProfile& tol) {
  return quad_impl<double>(f, a, b, mode, tol);
}

KernelEval quad_c(const std::function<cplx(double)>& f, double a, double b,
                  QuadMode mode, const ToleranceProfile& tol) {
  return quad_impl<cplx>(f, a, b, mode, tol);
}

cplx fourier_line(const std::function<double(double)>& f, double a, double b,
                  double lam, const ToleranceProfile& tol) {
  auto g = [&](double x) -> cplx {
    return f(x) * std::exp(cplx(0.0, -lam * x));
  };
  return quad_c(g, a, b, QuadMode::adaptive, tol).value;
}

namespace {

// Tanh-sinh rule on (a,b): x = m + h2*tanh((pi/2) sinh(u)), trapezoid in u
// with step halving.  Abscissae cluster double-exponentially at the
// endpoints, so integrable endpoint singularities cost nothing extra.
template <typename T>
KernelEval quad_de_impl(const std::function<T(double, double, double)>& f,
                        double a, double b, const ToleranceProfile& tol) {
  if (!(a < b)) throw num_error(errc::domain, "quad_de: need a < b");
  const double h2 = 0.5 * (b - a);
  const double umax = 5.0;  // sigma(umax) ~ 1e-101: deep into any p > -1 tail

  // raw_sum accumulates w(u)*f(x(u)) with no step factor; the estimate at
  // step h is h2 * h * raw_sum.  Nodes are computed from the nearer
  // endpoint (1 - tanh T = 2/(e^{2T}+1)) so that singular integrands see an
  // accurate endpoint distance instead of cancellation in m + h2*tanh(T).
  T raw_sum{};
  auto eval_at = [&](double u) {
    const double t = num::pi / 2.0 * std::sinh(std::abs(u));
    const double c = std::cosh(t);
    double sigma = 1.0;  // 1 - tanh(t), never allowed to underflow to 0
    if (t > 0.0) {
      double e2t = std::exp(std::min(2.0 * t, 700.0));
      sigma = 2.0 / (e2t + 1.0);
      if (sigma <= 0.0) sigma = 5e-324;
    }
    const double near = h2 * sigma, far = h2 * (2.0 - sigma);
    const double x = (u >= 0.0) ? b - near : a + near;
    const double da = (u >= 0.0) ? far : near;
    const double db = (u >= 0.0) ? near : far;
    const double w = num::pi / 2.0 * std::cosh(u) / (c * c);
    T v = f(x, da, db);
    if (std::isfinite(std::abs(v))) raw_sum += w * v;
  };

  double h = 1.0;
  eval_at(0.0);
  for (double u = h; u <= umax; u += h) {
    eval_at(u);
    eval_at(-u);
  }
  T prev = h2 * h * raw_sum;
  KernelEval r;
  for (int level = 1; level <= 12; ++level) {
    h *= 0.5;
    for (double u = h; u <= umax; u += 2.0 * h) {  // new odd-index nodes
      eval_at(u);
      eval_at(-u);
    }
    T now = h2 * h * raw_sum;
    double diff = std::abs(now - prev);
    double scale = std::max(1.0, std::abs(now));
    r.terms_used = level;
    if (diff < tol.quad_abs_tol * scale && level >= 3) {
      r.err_est = diff;
      r.branch_note = "tanh-sinh";
      if constexpr (std::is_same_v<T, double>)
        r.value = cplx(now, 0.0);
      else
        r.value = now;
      return r;
    }
    prev = now;
  }
  throw num_error(errc::convergence,
                  "quad_de: no convergence, last estimate " +
                      fmt(std::abs(prev)));
}

}  // namespace

KernelEval quad_de(const std::function<double(double)>& f, double a, double b,
                   const ToleranceProfile& tol) {
  return quad_de_impl<double>(
      [&](double x, double, double) { return f(x); }, a, b, tol);
}

KernelEval quad_de_c(const std::function<cplx(double)>& f, double a, double b,
                     const ToleranceProfile& tol) {
  return quad_de_impl<cplx>(
      [&](double x, double, double) { return f(x); }, a, b, tol);
}

KernelEval quad_de_sing(const std::function<double(double, double, double)>& f,
                        double a, double b, const ToleranceProfile& tol) {
  return quad_de_impl<double>(f, a, b, tol);
}

KernelEval quad_de_sing_c(const std::function<cplx(double, double, double)>& f,
                          double a, double b, const ToleranceProfile& tol) {
  return quad_de_impl<cplx>(f, a, b, tol);
}

}  // namespace num
}  // namespace dunkl
