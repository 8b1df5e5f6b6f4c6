#include "dunkl/dunklops.hpp"

#include <algorithm>
#include <cmath>

namespace dunkl {

namespace {

bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

long to_long(const Rat& r) {
  return static_cast<long>(boost::multiprecision::numerator(r));
}

QVec vec_sub_scaled(const QVec& mu, const QVec& alpha, long j) {
  QVec r(mu.size());
  for (size_t i = 0; i < mu.size(); ++i) r[i] = mu[i] - Rat(j) * alpha[i];
  return r;
}

std::vector<QVec> reflection_matrix(const QVec& alpha) {
  int d = static_cast<int>(alpha.size());
  Rat n2 = inner(alpha, alpha);
  std::vector<QVec> m(d, QVec(d, Rat(0)));
  for (int i = 0; i < d; ++i) {
    m[i][i] = 1;
    for (int j = 0; j < d; ++j) m[i][j] -= 2 * alpha[i] * alpha[j] / n2;
  }
  return m;
}

}  // namespace

// --- MultiPoly -------------------------------------------------------------

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
  MultiPoly p{nvars, {}};
  if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
  return p;
}

MultiPoly MultiPoly::monomial(const std::vector<int>& e, const Rat& c) {
  MultiPoly p{static_cast<int>(e.size()), {}};
  if (c != 0) p.terms[e] = c;
  return p;
}

void MultiPoly::add_term(const std::vector<int>& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) {
    int t = 0;
    for (int ei : e) t += ei;
    d = std::max(d, t);
  }
  return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r = zero(nvars);
  std::vector<int> e(nvars);
  for (const auto& [ea, ca] : terms)
    for (const auto& [eb, cb] : o.terms) {
      for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::scale(const Rat& c) const {
  MultiPoly r = zero(nvars);
  if (c == 0) return r;
  for (const auto& [e, v] : terms) r.terms[e] = v * c;
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r = zero(nvars);
  for (const auto& [e, c] : terms) {
    if (e[var] == 0) continue;
    std::vector<int> e2 = e;
    e2[var] -= 1;
    r.add_term(e2, c * e[var]);
  }
  return r;
}

MultiPoly MultiPoly::compose_linear(const std::vector<QVec>& mat) const {
  // rows of mat are linear forms substituted for the variables
  std::vector<MultiPoly> rows;
  for (const auto& row : mat) {
    MultiPoly l = zero(nvars);
    for (int j = 0; j < nvars; ++j) {
      std::vector<int> e(nvars, 0);
      e[j] = 1;
      l.add_term(e, row[j]);
    }
    rows.push_back(std::move(l));
  }
  MultiPoly out = zero(nvars);
  for (const auto& [e, c] : terms) {
    MultiPoly prod = constant(nvars, c);
    for (int i = 0; i < nvars; ++i)
      for (int p = 0; p < e[i]; ++p) prod = prod * rows[i];
    out = out + prod;
  }
  return out;
}

Rat MultiPoly::eval(const QVec& x) const {
  Rat s = 0;
  for (const auto& [e, c] : terms) {
    Rat t = c;
    for (int i = 0; i < nvars; ++i)
      for (int p = 0; p < e[i]; ++p) t *= x[i];
    s += t;
  }
  return s;
}

double MultiPoly::eval_num(const std::vector<double>& x) const {
  double s = 0;
  for (const auto& [e, c] : terms) {
    double t = static_cast<double>(c);
    for (int i = 0; i < nvars; ++i) t *= std::pow(x[i], e[i]);
    s += t;
  }
  return s;
}

Rat MultiPoly::max_abs_coeff() const {
  Rat m = 0;
  for (const auto& [e, c] : terms) m = std::max(m, static_cast<Rat>(abs(c)));
  return m;
}

// --- LaurentWeightPoly -------------------------------------------------------

LaurentWeightPoly LaurentWeightPoly::exp_weight(const QVec& mu, const Rat& c) {
  LaurentWeightPoly f{static_cast<int>(mu.size()), {}};
  if (c != 0) f.terms[mu] = c;
  return f;
}

void LaurentWeightPoly::add_term(const QVec& mu, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(mu);
  if (it == terms.end()) {
    terms.emplace(mu, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

LaurentWeightPoly LaurentWeightPoly::operator+(const LaurentWeightPoly& o) const {
  LaurentWeightPoly r = *this;
  for (const auto& [m, c] : o.terms) r.add_term(m, c);
  return r;
}

LaurentWeightPoly LaurentWeightPoly::operator-(const LaurentWeightPoly& o) const {
  LaurentWeightPoly r = *this;
  for (const auto& [m, c] : o.terms) r.add_term(m, -c);
  return r;
}

LaurentWeightPoly LaurentWeightPoly::scale(const Rat& c) const {
  LaurentWeightPoly r = zero(dim);
  if (c == 0) return r;
  for (const auto& [m, v] : terms) r.terms[m] = v * c;
  return r;
}

LaurentWeightPoly LaurentWeightPoly::compose_linear(const std::vector<QVec>& mat) const {
  LaurentWeightPoly r = zero(dim);
  for (const auto& [mu, c] : terms) {
    QVec nu(dim, Rat(0));  // nu = M^T mu
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) nu[j] += mat[i][j] * mu[i];
    r.add_term(nu, c);
  }
  return r;
}

double LaurentWeightPoly::eval_num(const std::vector<double>& x) const {
  double s = 0;
  for (const auto& [mu, c] : terms) {
    double ip = 0;
    for (int i = 0; i < dim; ++i) ip += static_cast<double>(mu[i]) * x[i];
    s += static_cast<double>(c) * std::exp(ip);
  }
  return s;
}

Rat LaurentWeightPoly::max_abs_coeff() const {
  Rat m = 0;
  for (const auto& [mu, c] : terms) m = std::max(m, static_cast<Rat>(abs(c)));
  return m;
}

// --- reflections and division ------------------------------------------------

MultiPoly poly_reflect(const QVec& alpha, const MultiPoly& p) {
  return p.compose_linear(reflection_matrix(alpha));
}

LaurentWeightPoly weight_reflect(const QVec& alpha, const LaurentWeightPoly& f) {
  LaurentWeightPoly r = LaurentWeightPoly::zero(f.dim);
  for (const auto& [mu, c] : f.terms) r.add_term(reflect(alpha, mu), c);
  return r;
}

MultiPoly divide_by_linear(const MultiPoly& p, const QVec& alpha) {
  int v = -1;
  for (size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] != 0) {
      v = static_cast<int>(i);
      break;
    }
  if (v < 0) throw num_error(errc::domain, "divide_by_linear: zero form");

  MultiPoly rem = p, q = MultiPoly::zero(p.nvars);
  MultiPoly lin = MultiPoly::zero(p.nvars);
  for (int j = 0; j < p.nvars; ++j) {
    std::vector<int> e(p.nvars, 0);
    e[j] = 1;
    lin.add_term(e, alpha[j]);
  }
  while (true) {
    int dmax = 0;
    for (const auto& [e, c] : rem.terms) dmax = std::max(dmax, e[v]);
    if (dmax == 0) break;
    MultiPoly qpart = MultiPoly::zero(p.nvars);
    for (const auto& [e, c] : rem.terms)
      if (e[v] == dmax) {
        std::vector<int> e2 = e;
        e2[v] -= 1;
        qpart.add_term(e2, c / alpha[v]);
      }
    q = q + qpart;
    rem = rem - lin * qpart;
  }
  if (!rem.is_zero())
    throw num_error(errc::internal,
                    "divide_by_linear: nonzero remainder (operator bug)");
  return q;
}

std::vector<MultiPoly> monomials_up_to(int nvars, int deg) {
  std::vector<MultiPoly> out;
  std::vector<int> e(nvars, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == nvars) {
      out.push_back(MultiPoly::monomial(e));
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[pos] = d;
      rec(pos + 1, left - d);
    }
    e[pos] = 0;
  };
  rec(0, deg);
  return out;
}

std::vector<LaurentWeightPoly> weight_monomials(const RootSystem& R, int height) {
  // integer ambient vectors lie in the weight lattice for every
  // crystallographic family here
  std::vector<LaurentWeightPoly> out;
  QVec mu(R.dim, Rat(0));
  std::function<void(int)> rec = [&](int pos) {
    if (pos == R.dim) {
      out.push_back(LaurentWeightPoly::exp_weight(mu));
      return;
    }
    for (int v = -height; v <= height; ++v) {
      mu[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

// --- operators -----------------------------------------------------------

MultiPoly dunkl_apply(const RootSystem& R, const Multiplicity& k, const QVec& xi,
                      const MultiPoly& p) {
  if (R.family == Family::I2)
    throw num_error(errc::unsupported,
                    "dunkl_apply: exact arithmetic needs rational root coordinates");
  validate_multiplicity(R, k);
  if (static_cast<int>(xi.size()) != R.dim || p.nvars != R.dim)
    throw num_error(errc::domain, "dunkl_apply: dimension mismatch");

  MultiPoly out = MultiPoly::zero(R.dim);
  for (int i = 0; i < R.dim; ++i)
    if (xi[i] != 0) out = out + p.derivative(i).scale(xi[i]);
  for (int idx : R.positive) {
    const QVec& alpha = R.roots[idx];
    Rat coef = k.k[R.orbit[idx]] * inner(alpha, xi);
    if (coef == 0) continue;
    MultiPoly diff = p - poly_reflect(alpha, p);
    if (diff.is_zero()) continue;
    out = out + divide_by_linear(diff, alpha).scale(coef);
  }
  return out;
}

MultiPoly laplacian_apply(const RootSystem& R, const Multiplicity& k,
                          const MultiPoly& p) {
  MultiPoly out = MultiPoly::zero(R.dim);
  for (int i = 0; i < R.dim; ++i) {
    QVec ei(R.dim, Rat(0));
    ei[i] = 1;
    out = out + dunkl_apply(R, k, ei, dunkl_apply(R, k, ei, p));
  }
  return out;
}

namespace {

void check_lattice_weight(const RootSystem& R, const QVec& mu) {
  for (int idx : R.positive) {
    if (!is_integer(inner(coroot(R.roots[idx]), mu)))
      throw num_error(errc::domain,
                      "weight not in the lattice P (pairing with a coroot "
                      "is not an integer)");
  }
}

}  // namespace

LaurentWeightPoly cherednik_apply(const RootSystem& R, const Multiplicity& k,
                                  const QVec& xi, const LaurentWeightPoly& f) {
  if (!R.crystallographic || R.family == Family::I2)
    throw num_error(errc::domain, "cherednik_apply: crystallographic R required");
  validate_multiplicity(R, k);
  if (static_cast<int>(xi.size()) != R.dim || f.dim != R.dim)
    throw num_error(errc::domain, "cherednik_apply: dimension mismatch");
  for (const auto& [mu, c] : f.terms) check_lattice_weight(R, mu);

  auto [rho, gam] = rho_gamma(R, k);
  (void)gam;
  Rat rho_xi = inner(rho, xi);

  LaurentWeightPoly out = LaurentWeightPoly::zero(R.dim);
  for (const auto& [mu, c] : f.terms) {
    out.add_term(mu, c * (inner(mu, xi) - rho_xi));
    for (int idx : R.positive) {
      const QVec& alpha = R.roots[idx];
      Rat coef = c * k.k[R.orbit[idx]] * inner(alpha, xi);
      if (coef == 0) continue;
      long m = to_long(inner(coroot(alpha), mu));
      if (m > 0)
        for (long j = 0; j < m; ++j) out.add_term(vec_sub_scaled(mu, alpha, j), coef);
      else if (m < 0)
        for (long j = 1; j <= -m; ++j)
          out.add_term(vec_sub_scaled(mu, alpha, -j), -coef);
    }
  }
  return out;
}

LaurentWeightPoly heckman_prime_apply(const RootSystem& R, const Multiplicity& k,
                                      const QVec& xi, const LaurentWeightPoly& f) {
  if (!R.crystallographic || R.family == Family::I2)
    throw num_error(errc::domain, "heckman_prime_apply: crystallographic R required");
  validate_multiplicity(R, k);
  for (const auto& [mu, c] : f.terms) check_lattice_weight(R, mu);

  LaurentWeightPoly out = LaurentWeightPoly::zero(R.dim);
  for (const auto& [mu, c] : f.terms) {
    out.add_term(mu, c * inner(mu, xi));
    for (int idx : R.positive) {
      const QVec& alpha = R.roots[idx];
      Rat coef = c * k.k[R.orbit[idx]] * inner(alpha, xi) / 2;
      if (coef == 0) continue;
      long m = to_long(inner(coroot(alpha), mu));
      if (m == 0) continue;
      long p = std::abs(m);
      Rat sgn = m > 0 ? 1 : -1;
      long dir = m > 0 ? 1 : -1;
      out.add_term(mu, sgn * coef);
      for (long j = 1; j < p; ++j)
        out.add_term(vec_sub_scaled(mu, alpha, dir * j), 2 * sgn * coef);
      out.add_term(vec_sub_scaled(mu, alpha, dir * p), sgn * coef);
    }
  }
  return out;
}

LaurentWeightPoly trig_laplacian_apply(const RootSystem& R, const Multiplicity& k,
                                       const LaurentWeightPoly& f) {
  LaurentWeightPoly out = LaurentWeightPoly::zero(R.dim);
  for (int i = 0; i < R.dim; ++i) {
    QVec ei(R.dim, Rat(0));
    ei[i] = 1;
    out = out + cherednik_apply(R, k, ei, cherednik_apply(R, k, ei, f));
  }
  return out;
}

}  // namespace dunkl
