#pragma once
// Exact root systems for the classical families A/B/C/BC/D, dihedral I2(m),
// and rank-one products (A1^n, BC1^n): roots, positive/simple systems, Weyl
// groups as exact orthogonal matrices (index arithmetic for I2), orbit
// multiplicities, weight functions and (rho, gamma).
//
// Coordinates are exact rationals (boost::multiprecision). A_n lives inside
// R^{n+1} on the sum-zero hyperplane. I2(m) roots are the 2m unit vectors
// e^{i pi j/m}; their group law uses index arithmetic only, numeric modules
// get floating-point coordinates on demand.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/numerics.hpp"

namespace dunkl {

using Rat = boost::multiprecision::cpp_rational;
using QVec = std::vector<Rat>;

enum class Family { A, B, C, BC, D, I2, A1prod, BC1prod };

std::string family_to_string(Family f);
Family family_from_string(const std::string& s);

// One multiplicity value per root orbit, in orbit-id order.
struct Multiplicity {
  std::vector<Rat> k;
  bool nonneg() const {
    for (const auto& v : k)
      if (v < 0) return false;
    return true;
  }
};

// Exact orthogonal transformation. Rational families store a matrix
// ((w x)_i = sum_j mat[i][j] x_j); I2 stores (i2_ref, i2_s):
// rotation z -> e^{2 pi i s/m} z, or reflection in the root e^{i pi s/m}.
struct WeylElem {
  std::vector<QVec> mat;
  bool i2_ref = false;
  int i2_s = 0;
};

struct WeylGroup {
  std::vector<WeylElem> elements;  // elements[0] is the identity
  std::vector<int> generators;     // indices of the simple reflections
  std::vector<int> length;         // #(positive indivisible roots sent negative)
  int longest = 0;                 // index of w0
};

struct RootSystem {
  Family family{};
  int param = 0;  // n, or m for I2
  int dim = 0;    // ambient dimension
  int rank = 0;   // dimension of the span
  bool crystallographic = true;
  bool reduced = true;
  // rational-coordinate families; empty for I2
  std::vector<QVec> roots;
  // I2 only: root j is e^{i pi j/m}
  std::vector<int> i2_index;
  std::vector<int> positive;  // indices into roots / i2_index
  std::vector<int> simple;    // subset of positive
  std::vector<int> orbit;     // orbit id per root
  int norbits = 0;
  QVec chamber;  // interior chamber point (rational families)

  int nroots() const {
    return family == Family::I2 ? static_cast<int>(i2_index.size())
                                : static_cast<int>(roots.size());
  }
  // |W| from the classical order formulas
  long long weyl_order() const;
};

RootSystem build_root_system(Family fam, int n_or_m);

// exact linear algebra helpers
Rat inner(const QVec& a, const QVec& b);
QVec coroot(const QVec& alpha);             // 2 alpha / <alpha,alpha>
QVec reflect(const QVec& alpha, const QVec& x);
QVec apply_elem(const WeylElem& w, const QVec& x);
std::vector<double> apply_elem_num(const RootSystem& R, const WeylElem& w,
                                   const std::vector<double>& x);

WeylGroup weyl_group(const RootSystem& R);

// (x_plus, index of w in W.elements) with w x = x_plus dominant; the w of
// minimal length (ties broken lexicographically) is returned.
// Rational-coordinate families only; use dominant_i2 for I2.
std::pair<QVec, int> dominant(const RootSystem& R, const WeylGroup& W, const QVec& x);
std::pair<std::array<double, 2>, int> dominant_i2(const RootSystem& R, const WeylGroup& W,
                                                  const std::array<double, 2>& x);

// numeric root coordinates (works for every family; I2 via cos/sin)
std::vector<double> root_coords_num(const RootSystem& R, int root_index);
double inner_num(const RootSystem& R, int root_index, const std::vector<double>& x);

// delta(x) = prod_{alpha>0} |<alpha,x>|^{2 k_alpha}            (rational mode)
//          = prod_{alpha>0} |2 sinh(<alpha,x>/2)|^{2 k_alpha}  (trigonometric)
double delta_weight(const RootSystem& R, const Multiplicity& k,
                    const std::vector<double>& x, bool trigonometric);

// rho = sum_{alpha>0} (k_alpha/2) alpha (exact; unsupported for I2),
// gamma = sum_{alpha>0} k_alpha (exact for every family)
std::pair<QVec, Rat> rho_gamma(const RootSystem& R, const Multiplicity& k);
Rat gamma_sum(const RootSystem& R, const Multiplicity& k);
std::vector<double> rho_numeric(const RootSystem& R, const Multiplicity& k);

void validate_multiplicity(const RootSystem& R, const Multiplicity& k,
                           bool require_nonneg = false);

std::string root_system_json(const RootSystem& R);

}  // namespace dunkl
