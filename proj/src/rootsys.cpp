#include "dunkl/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"

namespace dunkl {

namespace {

QVec basis_vec(int dim, int i, const Rat& scale = 1) {
  QVec v(dim, Rat(0));
  v[i] = scale;
  return v;
}

QVec vec_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec vec_sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec vec_scale(const QVec& a, const Rat& s) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

int i2_reflect_index(int m, int j, int a) {
  // reflection in root e^{i pi j/m} sends root index a to 2j - a + m (mod 2m)
  int r = (2 * j - a + m) % (2 * m);
  return r < 0 ? r + 2 * m : r;
}

}  // namespace

std::string family_to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::BC: return "BC";
    case Family::D: return "D";
    case Family::I2: return "I2";
    case Family::A1prod: return "A1prod";
    case Family::BC1prod: return "BC1prod";
  }
  throw num_error(errc::internal, "family_to_string: bad enum");
}

Family family_from_string(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "BC") return Family::BC;
  if (s == "D") return Family::D;
  if (s == "I2") return Family::I2;
  if (s == "A1prod") return Family::A1prod;
  if (s == "BC1prod") return Family::BC1prod;
  throw num_error(errc::unsupported, "unsupported root-system family: " + s);
}

Rat inner(const QVec& a, const QVec& b) {
  if (a.size() != b.size())
    throw num_error(errc::domain, "inner: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec coroot(const QVec& alpha) {
  Rat n2 = inner(alpha, alpha);
  if (n2 == 0) throw num_error(errc::domain, "coroot: zero vector");
  return vec_scale(alpha, Rat(2) / n2);
}

QVec reflect(const QVec& alpha, const QVec& x) {
  Rat n2 = inner(alpha, alpha);
  if (n2 == 0) throw num_error(errc::domain, "reflect: zero root");
  Rat c = 2 * inner(alpha, x) / n2;
  return vec_sub(x, vec_scale(alpha, c));
}

long long RootSystem::weyl_order() const {
  auto fact = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (family) {
    case Family::A: return fact(param + 1);
    case Family::B:
    case Family::C:
    case Family::BC: return (1LL << param) * fact(param);
    case Family::D: return (1LL << (param - 1)) * fact(param);
    case Family::I2: return 2LL * param;
    case Family::A1prod:
    case Family::BC1prod: return 1LL << param;
  }
  throw num_error(errc::internal, "weyl_order: bad family");
}

RootSystem build_root_system(Family fam, int n_or_m) {
  RootSystem R;
  R.family = fam;
  R.param = n_or_m;
  int n = n_or_m;

  auto range_error = [&](const char* need) {
    throw num_error(errc::domain, std::string("build_root_system: ") +
                                      family_to_string(fam) + " requires " + need);
  };

  std::vector<QVec> pos;   // positive roots, in documented order
  std::vector<QVec> simp;  // simple roots

  switch (fam) {
    case Family::A: {
      if (n < 1) range_error("n >= 1");
      R.dim = n + 1;
      R.rank = n;
      for (int i = 0; i < n + 1; ++i)
        for (int j = i + 1; j < n + 1; ++j)
          pos.push_back(vec_sub(basis_vec(R.dim, i), basis_vec(R.dim, j)));
      for (int i = 0; i < n; ++i)
        simp.push_back(vec_sub(basis_vec(R.dim, i), basis_vec(R.dim, i + 1)));
      R.chamber.resize(R.dim);
      for (int i = 0; i < R.dim; ++i) R.chamber[i] = R.dim - i;
      break;
    }
    case Family::B:
    case Family::C:
    case Family::BC: {
      if (fam == Family::BC ? n < 1 : n < 2)
        range_error(fam == Family::BC ? "n >= 1" : "n >= 2");
      R.dim = R.rank = n;
      for (int i = 0; i < n; ++i) {
        if (fam != Family::C) pos.push_back(basis_vec(n, i));
        if (fam != Family::B) pos.push_back(basis_vec(n, i, 2));
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          pos.push_back(vec_sub(basis_vec(n, i), basis_vec(n, j)));
          pos.push_back(vec_add(basis_vec(n, i), basis_vec(n, j)));
        }
      for (int i = 0; i + 1 < n; ++i)
        simp.push_back(vec_sub(basis_vec(n, i), basis_vec(n, i + 1)));
      simp.push_back(basis_vec(n, n - 1, fam == Family::C ? 2 : 1));
      R.chamber.resize(n);
      for (int i = 0; i < n; ++i) R.chamber[i] = n - i;
      R.reduced = (fam != Family::BC);
      break;
    }
    case Family::D: {
      if (n < 3) range_error("n >= 3");
      R.dim = R.rank = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          pos.push_back(vec_sub(basis_vec(n, i), basis_vec(n, j)));
          pos.push_back(vec_add(basis_vec(n, i), basis_vec(n, j)));
        }
      for (int i = 0; i + 1 < n; ++i)
        simp.push_back(vec_sub(basis_vec(n, i), basis_vec(n, i + 1)));
      simp.push_back(vec_add(basis_vec(n, n - 2), basis_vec(n, n - 1)));
      R.chamber.resize(n);
      for (int i = 0; i < n; ++i) R.chamber[i] = n - i;
      break;
    }
    case Family::A1prod:
    case Family::BC1prod: {
      if (n < 1) range_error("n >= 1");
      R.dim = R.rank = n;
      for (int i = 0; i < n; ++i) {
        pos.push_back(basis_vec(n, i));
        if (fam == Family::BC1prod) pos.push_back(basis_vec(n, i, 2));
        simp.push_back(basis_vec(n, i));
      }
      R.chamber.assign(n, Rat(1));
      R.reduced = (fam == Family::A1prod);
      break;
    }
    case Family::I2: {
      if (n < 3) range_error("m >= 3");
      R.dim = R.rank = 2;
      int m = n;
      R.i2_index.resize(2 * m);
      std::iota(R.i2_index.begin(), R.i2_index.end(), 0);
      for (int j = 0; j < m; ++j) R.positive.push_back(j);
      R.simple = {0, m - 1};
      // orbits: reflections flip index parity iff m is odd
      if (m % 2 == 0) {
        R.norbits = 2;
        R.orbit.resize(2 * m);
        for (int j = 0; j < 2 * m; ++j) R.orbit[j] = j % 2;
      } else {
        R.norbits = 1;
        R.orbit.assign(2 * m, 0);
      }
      // 2<a,b>/|a|^2 = 2 cos(pi d/m) is an integer for every d only when m=3
      R.crystallographic = (m == 3);
      return R;
    }
  }

  // assemble the full root list: positives first, then their negatives
  R.roots = pos;
  for (const auto& p : pos) R.roots.push_back(vec_scale(p, -1));
  R.positive.resize(pos.size());
  std::iota(R.positive.begin(), R.positive.end(), 0);

  std::map<QVec, int> index_of;
  for (size_t i = 0; i < R.roots.size(); ++i) index_of[R.roots[i]] = static_cast<int>(i);
  if (index_of.size() != R.roots.size())
    throw num_error(errc::internal, "build_root_system: duplicate roots");

  for (const auto& s : simp) {
    auto it = index_of.find(s);
    if (it == index_of.end())
      throw num_error(errc::internal, "build_root_system: simple root missing");
    R.simple.push_back(it->second);
  }

  // invariants: positivity on the chamber, closure, crystallographic test
  for (int p : R.positive)
    if (inner(R.roots[p], R.chamber) <= 0)
      throw num_error(errc::internal, "build_root_system: chamber functional");

  UnionFind uf(static_cast<int>(R.roots.size()));
  bool crys = true;
  for (size_t i = 0; i < R.roots.size(); ++i) {
    Rat n2 = inner(R.roots[i], R.roots[i]);
    for (size_t j = 0; j < R.roots.size(); ++j) {
      QVec im = reflect(R.roots[i], R.roots[j]);
      auto it = index_of.find(im);
      if (it == index_of.end())
        throw num_error(errc::internal, "build_root_system: not reflection-closed");
      uf.unite(static_cast<int>(j), it->second);
      if (!is_integer(2 * inner(R.roots[i], R.roots[j]) / n2)) crys = false;
    }
  }
  R.crystallographic = crys;

  // orbit ids in order of first appearance
  R.orbit.assign(R.roots.size(), -1);
  std::map<int, int> rep_to_id;
  for (size_t i = 0; i < R.roots.size(); ++i) {
    int rep = uf.find(static_cast<int>(i));
    auto [it, fresh] = rep_to_id.try_emplace(rep, static_cast<int>(rep_to_id.size()));
    (void)fresh;
    R.orbit[i] = it->second;
  }
  R.norbits = static_cast<int>(rep_to_id.size());

  if (R.reduced) {
    for (const auto& r : R.roots)
      if (index_of.count(vec_scale(r, 2)))
        throw num_error(errc::internal, "build_root_system: reduced flag wrong");
  }
  return R;
}

QVec apply_elem(const WeylElem& w, const QVec& x) {
  if (w.mat.empty())
    throw num_error(errc::unsupported, "apply_elem: no exact matrix for I2 elements");
  QVec r(w.mat.size(), Rat(0));
  for (size_t i = 0; i < w.mat.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) r[i] += w.mat[i][j] * x[j];
  return r;
}

std::vector<double> apply_elem_num(const RootSystem& R, const WeylElem& w,
                                   const std::vector<double>& x) {
  if (R.family == Family::I2) {
    int m = R.param;
    double c, s;
    if (!w.i2_ref) {
      double th = 2.0 * num::pi * w.i2_s / m;
      c = std::cos(th), s = std::sin(th);
      return {c * x[0] - s * x[1], s * x[0] + c * x[1]};
    }
    double phi = num::pi * w.i2_s / m;  // reflection in root (cos phi, sin phi)
    c = std::cos(phi), s = std::sin(phi);
    double d = 2.0 * (c * x[0] + s * x[1]);
    return {x[0] - d * c, x[1] - d * s};
  }
  std::vector<double> r(w.mat.size(), 0.0);
  for (size_t i = 0; i < w.mat.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      r[i] += static_cast<double>(w.mat[i][j]) * x[j];
  return r;
}

namespace {

std::vector<QVec> identity_mat(int d) {
  std::vector<QVec> m(d, QVec(d, Rat(0)));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

std::vector<QVec> reflection_mat(const QVec& alpha) {
  int d = static_cast<int>(alpha.size());
  Rat n2 = inner(alpha, alpha);
  std::vector<QVec> m = identity_mat(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m[i][j] -= 2 * alpha[i] * alpha[j] / n2;
  return m;
}

std::vector<QVec> mat_mul(const std::vector<QVec>& a, const std::vector<QVec>& b) {
  int d = static_cast<int>(a.size());
  std::vector<QVec> c(d, QVec(d, Rat(0)));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// indivisible positive roots (alpha with alpha/2 not a root)
std::vector<int> indivisible_positive(const RootSystem& R) {
  std::vector<int> out;
  if (R.family == Family::I2) return R.positive;
  std::set<QVec> all(R.roots.begin(), R.roots.end());
  for (int p : R.positive) {
    QVec half = vec_scale(R.roots[p], Rat(1, 2));
    if (!all.count(half)) out.push_back(p);
  }
  return out;
}

}  // namespace

WeylGroup weyl_group(const RootSystem& R) {
  if (R.rank > 6)
    throw num_error(errc::unsupported,
                    "weyl_group: rank above enumeration bound 6");
  WeylGroup W;
  if (R.family == Family::I2) {
    int m = R.param;
    // identity first, then all rotations, then all reflections
    for (int s = 0; s < m; ++s) W.elements.push_back({{}, false, s});
    for (int j = 0; j < m; ++j) W.elements.push_back({{}, true, j});
    W.generators = {m + 0, m + (m - 1)};  // reflections in the simple roots
    auto act = [&](const WeylElem& w, int a) {
      return w.i2_ref ? i2_reflect_index(m, w.i2_s, a) : (a + 2 * w.i2_s) % (2 * m);
    };
    W.length.resize(W.elements.size());
    int maxlen = -1;
    for (size_t e = 0; e < W.elements.size(); ++e) {
      int len = 0;
      for (int j = 0; j < m; ++j)
        if (act(W.elements[e], j) >= m) ++len;
      W.length[e] = len;
      if (len > maxlen) {
        maxlen = len;
        W.longest = static_cast<int>(e);
      }
    }
    return W;
  }

  // BFS closure; elements are distinguished by their action on the interior
  // chamber point (trivial stabilizer), which is much cheaper than comparing
  // whole matrices.
  std::map<QVec, int> seen;
  std::vector<std::vector<QVec>> mats;
  std::vector<QVec> keys;
  mats.push_back(identity_mat(R.dim));
  keys.push_back(R.chamber);
  seen[R.chamber] = 0;
  std::vector<std::vector<QVec>> gens;
  std::vector<QVec> gen_roots;
  for (int s : R.simple) {
    gens.push_back(reflection_mat(R.roots[s]));
    gen_roots.push_back(R.roots[s]);
  }
  for (size_t head = 0; head < mats.size(); ++head) {
    QVec cur_key = keys[head];  // copy: vectors may reallocate
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      QVec nxt_key = reflect(gen_roots[gi], cur_key);
      if (seen.try_emplace(nxt_key, static_cast<int>(mats.size())).second) {
        mats.push_back(mat_mul(gens[gi], mats[head]));
        keys.push_back(std::move(nxt_key));
      }
    }
    if (mats.size() > 100000)
      throw num_error(errc::unsupported, "weyl_group: closure exceeds size cap");
  }
  if (static_cast<long long>(mats.size()) != R.weyl_order())
    throw num_error(errc::internal, "weyl_group: order mismatch");

  W.elements.reserve(mats.size());
  for (auto& mmat : mats) W.elements.push_back({std::move(mmat), false, 0});
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    auto it = seen.find(reflect(gen_roots[gi], R.chamber));
    W.generators.push_back(it->second);
  }

  std::map<QVec, int> index_of;
  for (size_t i = 0; i < R.roots.size(); ++i) index_of[R.roots[i]] = static_cast<int>(i);
  std::set<int> posset(R.positive.begin(), R.positive.end());
  auto indiv = indivisible_positive(R);
  W.length.resize(W.elements.size());
  int maxlen = -1;
  for (size_t e = 0; e < W.elements.size(); ++e) {
    int len = 0;
    for (int p : indiv) {
      QVec im = apply_elem(W.elements[e], R.roots[p]);
      if (!posset.count(index_of.at(im))) ++len;
    }
    W.length[e] = len;
    if (len > maxlen) {
      maxlen = len;
      W.longest = static_cast<int>(e);
    }
  }
  return W;
}

std::pair<QVec, int> dominant(const RootSystem& R, const WeylGroup& W, const QVec& x) {
  if (R.family == Family::I2)
    throw num_error(errc::unsupported, "dominant: use dominant_i2 for I2");
  int best = -1;
  QVec best_img;
  for (size_t e = 0; e < W.elements.size(); ++e) {
    QVec img = apply_elem(W.elements[e], x);
    bool dom = true;
    for (int s : R.simple)
      if (inner(R.roots[s], img) < 0) {
        dom = false;
        break;
      }
    if (!dom) continue;
    if (best < 0 || W.length[e] < W.length[best] ||
        (W.length[e] == W.length[best] &&
         W.elements[e].mat < W.elements[best].mat)) {
      best = static_cast<int>(e);
      best_img = img;
    }
  }
  if (best < 0) throw num_error(errc::internal, "dominant: no chamber representative");
  return {best_img, best};
}

std::pair<std::array<double, 2>, int> dominant_i2(const RootSystem& R, const WeylGroup& W,
                                                  const std::array<double, 2>& x) {
  if (R.family != Family::I2)
    throw num_error(errc::domain, "dominant_i2: I2 systems only");
  int m = R.param;
  double lo = (0.5 - 1.0 / m) * num::pi, hi = 0.5 * num::pi;
  int best = -1;
  std::array<double, 2> best_img{0.0, 0.0};
  if (std::hypot(x[0], x[1]) < 1e-300) return {x, 0};
  for (size_t e = 0; e < W.elements.size(); ++e) {
    auto img = apply_elem_num(R, W.elements[e], {x[0], x[1]});
    double ang = std::atan2(img[1], img[0]);
    if (ang < lo - 1e-12 || ang > hi + 1e-12) continue;
    if (best < 0 || W.length[e] < W.length[best] ||
        (W.length[e] == W.length[best] &&
         std::make_pair(W.elements[e].i2_ref, W.elements[e].i2_s) <
             std::make_pair(W.elements[best].i2_ref, W.elements[best].i2_s))) {
      best = static_cast<int>(e);
      best_img = {img[0], img[1]};
    }
  }
  if (best < 0) throw num_error(errc::internal, "dominant_i2: no chamber representative");
  return {best_img, best};
}

std::vector<double> root_coords_num(const RootSystem& R, int root_index) {
  if (R.family == Family::I2) {
    double phi = num::pi * R.i2_index[root_index] / R.param;
    return {std::cos(phi), std::sin(phi)};
  }
  std::vector<double> v(R.dim);
  for (int i = 0; i < R.dim; ++i) v[i] = static_cast<double>(R.roots[root_index][i]);
  return v;
}

double inner_num(const RootSystem& R, int root_index, const std::vector<double>& x) {
  auto a = root_coords_num(R, root_index);
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

void validate_multiplicity(const RootSystem& R, const Multiplicity& k, bool require_nonneg) {
  if (static_cast<int>(k.k.size()) != R.norbits)
    throw num_error(errc::domain, "multiplicity: need one value per orbit (" +
                                      std::to_string(R.norbits) + ")");
  if (require_nonneg && !k.nonneg())
    throw num_error(errc::domain, "multiplicity: negative value not allowed here");
}

double delta_weight(const RootSystem& R, const Multiplicity& k,
                    const std::vector<double>& x, bool trigonometric) {
  validate_multiplicity(R, k, true);
  if (static_cast<int>(x.size()) != R.dim)
    throw num_error(errc::domain, "delta_weight: point dimension mismatch");
  double prod = 1.0;
  for (int p : R.positive) {
    double kk = static_cast<double>(k.k[R.orbit[p]]);
    if (kk == 0.0) continue;
    double ip = inner_num(R, p, x);
    double base = trigonometric ? std::abs(2.0 * std::sinh(ip / 2.0)) : std::abs(ip);
    prod *= std::pow(base, 2.0 * kk);
  }
  return prod;
}

Rat gamma_sum(const RootSystem& R, const Multiplicity& k) {
  validate_multiplicity(R, k);
  Rat g = 0;
  for (int p : R.positive) g += k.k[R.orbit[p]];
  return g;
}

std::pair<QVec, Rat> rho_gamma(const RootSystem& R, const Multiplicity& k) {
  validate_multiplicity(R, k);
  if (R.family == Family::I2)
    throw num_error(errc::unsupported,
                    "rho_gamma: exact rho not representable for I2; use rho_numeric");
  QVec rho(R.dim, Rat(0));
  for (int p : R.positive)
    rho = vec_add(rho, vec_scale(R.roots[p], k.k[R.orbit[p]] / 2));
  if (k.nonneg()) {
    for (int s : R.simple)
      if (inner(R.roots[s], rho) < 0)
        throw num_error(errc::internal, "rho_gamma: rho not dominant");
  }
  return {rho, gamma_sum(R, k)};
}

std::vector<double> rho_numeric(const RootSystem& R, const Multiplicity& k) {
  validate_multiplicity(R, k);
  std::vector<double> rho(R.dim, 0.0);
  for (int p : R.positive) {
    auto a = root_coords_num(R, p);
    double kk = static_cast<double>(k.k[R.orbit[p]]);
    for (int i = 0; i < R.dim; ++i) rho[i] += 0.5 * kk * a[i];
  }
  return rho;
}

std::string root_system_json(const RootSystem& R) {
  nlohmann::json j;
  j["family"] = family_to_string(R.family);
  j["param"] = R.param;
  j["dim"] = R.dim;
  j["rank"] = R.rank;
  j["crystallographic"] = R.crystallographic;
  j["reduced"] = R.reduced;
  j["weyl_order"] = R.weyl_order();
  j["norbits"] = R.norbits;
  j["orbit"] = R.orbit;
  j["positive"] = R.positive;
  j["simple"] = R.simple;
  if (R.family == Family::I2) {
    j["i2_index"] = R.i2_index;
  } else {
    std::vector<std::vector<std::string>> rts;
    for (const auto& r : R.roots) {
      std::vector<std::string> row;
      for (const auto& c : r) row.push_back(c.str());
      rts.push_back(std::move(row));
    }
    j["roots"] = rts;
  }
  return j.dump();
}

}  // namespace dunkl
