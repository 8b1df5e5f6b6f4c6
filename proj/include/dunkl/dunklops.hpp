#pragma once
// Exact symbolic action of Dunkl operators on polynomials and of
// Cherednik/Heckman operators on weight-lattice exponential polynomials.
// Coefficients are exact rationals throughout: commutativity and the
// structural identities are verified exactly, not to numeric tolerance.

#include <functional>
#include <map>
#include <vector>

#include "dunkl/rootsys.hpp"

namespace dunkl {

// Polynomial in dim variables: exponent multi-index -> coefficient.
struct MultiPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rat> terms;  // zero coefficients never stored

  static MultiPoly zero(int nvars) { return MultiPoly{nvars, {}}; }
  static MultiPoly constant(int nvars, const Rat& c);
  static MultiPoly monomial(const std::vector<int>& e, const Rat& c = 1);

  void add_term(const std::vector<int>& e, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  int degree() const;  // total degree; -1 for the zero polynomial
  bool operator==(const MultiPoly& o) const {
    return nvars == o.nvars && terms == o.terms;
  }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scale(const Rat& c) const;

  MultiPoly derivative(int var) const;
  // p(Mx) for an exact matrix M (rows act on x)
  MultiPoly compose_linear(const std::vector<QVec>& mat) const;
  Rat eval(const QVec& x) const;
  double eval_num(const std::vector<double>& x) const;
  Rat max_abs_coeff() const;
};

// Exponential polynomial sum_mu c_mu e^{<mu,x>}, mu rational vectors.
struct LaurentWeightPoly {
  int dim = 0;
  std::map<QVec, Rat> terms;

  static LaurentWeightPoly zero(int dim) { return LaurentWeightPoly{dim, {}}; }
  static LaurentWeightPoly exp_weight(const QVec& mu, const Rat& c = 1);

  void add_term(const QVec& mu, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const LaurentWeightPoly& o) const {
    return dim == o.dim && terms == o.terms;
  }

  LaurentWeightPoly operator+(const LaurentWeightPoly& o) const;
  LaurentWeightPoly operator-(const LaurentWeightPoly& o) const;
  LaurentWeightPoly scale(const Rat& c) const;

  // f(Mx): e^{<mu,Mx>} = e^{<M^T mu, x>}
  LaurentWeightPoly compose_linear(const std::vector<QVec>& mat) const;
  double eval_num(const std::vector<double>& x) const;
  Rat max_abs_coeff() const;
};

// p with p(x) = p0(r_alpha x)
MultiPoly poly_reflect(const QVec& alpha, const MultiPoly& p);
LaurentWeightPoly weight_reflect(const QVec& alpha, const LaurentWeightPoly& f);

// Exact division p = q * <alpha,x> with zero remainder required.
MultiPoly divide_by_linear(const MultiPoly& p, const QVec& alpha);

// All monomials with total degree <= deg (the default operator test set).
std::vector<MultiPoly> monomials_up_to(int nvars, int deg);
std::vector<LaurentWeightPoly> weight_monomials(const RootSystem& R, int height);

// D_xi p = d_xi p + sum_{alpha>0} k_alpha <alpha,xi> (p - p o r_alpha)/<alpha,x>
MultiPoly dunkl_apply(const RootSystem& R, const Multiplicity& k, const QVec& xi,
                      const MultiPoly& p);

// sum_j D_{e_j}^2 over the ambient coordinate directions
MultiPoly laplacian_apply(const RootSystem& R, const Multiplicity& k,
                          const MultiPoly& p);

// Cherednik D_xi f = d_xi f
//   + sum_{alpha>0} k_alpha <alpha,xi> (f - f o r_alpha)/(1 - e^{-alpha})
//   - <rho,xi> f,   with the middle term expanded as a finite geometric sum
//   in integer steps of alpha (weights must lie in the lattice P).
LaurentWeightPoly cherednik_apply(const RootSystem& R, const Multiplicity& k,
                                  const QVec& xi, const LaurentWeightPoly& f);

// Heckman 'D_xi f = d_xi f
//   + sum_{alpha>0} (k_alpha/2) <alpha,xi> coth(<alpha,x>/2) (f - f o r_alpha),
// equivalently D_xi + sum_{alpha>0} (k_alpha/2) <alpha,xi> f o r_alpha.
LaurentWeightPoly heckman_prime_apply(const RootSystem& R, const Multiplicity& k,
                                      const QVec& xi, const LaurentWeightPoly& f);

// sum_j D_{e_j}^2 (Cherednik squares); on W-invariants this is the
// Heckman-Opdam Laplacian shifted by |rho|^2.
LaurentWeightPoly trig_laplacian_apply(const RootSystem& R, const Multiplicity& k,
                                       const LaurentWeightPoly& f);

// max |coefficient| of (A(B(f)) - B(A(f))) over the test set; exact.
template <class P>
Rat commutator_residual(const std::function<P(const P&)>& A,
                        const std::function<P(const P&)>& B,
                        const std::vector<P>& test_set) {
  Rat worst = 0;
  for (const auto& f : test_set) {
    P diff = A(B(f)) - B(A(f));
    Rat m = diff.max_abs_coeff();
    if (m > worst) worst = m;
  }
  return worst;
}

}  // namespace dunkl
