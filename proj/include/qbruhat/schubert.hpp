#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qbruhat/permutation.hpp"
#include "qbruhat/poly.hpp"

namespace qbruhat {

/// Exponent vector (beta_1, ..., beta_{n-1}) indexing the product
/// e_{beta_1}(x_1) e_{beta_2}(x_1,x_2) ... e_{beta_{n-1}}(x_1..x_{n-1}).
using ElementaryIndex = std::vector<int>;

/// e_i(v_1, ..., v_k).
Poly elementary_symmetric(int i, int k, Var block = Var::x);
/// h_i(v_1, ..., v_k).
Poly complete_homogeneous(int i, int k, Var block = Var::x);

/// The Schubert polynomial of w in S_n, by divided differences from
/// x_1^{n-1} x_2^{n-2} ... x_{n-1}.
Poly schubert_polynomial(const Permutation& w, int n);

/// All Schubert polynomials of S_n, computed once. Immutable afterwards.
class SchubertBasis {
 public:
  explicit SchubertBasis(int n);

  int n() const { return n_; }
  /// S_w(x_1, ..., x_n).
  const Poly& operator()(const Permutation& w) const { return x_.at(w); }
  /// S_w in the variables of a block.
  const Poly& in(Var block, const Permutation& w) const;

 private:
  int n_;
  std::map<Permutation, Poly> x_;
  std::map<Permutation, Poly> y_;
};

/// Writes p = sum_w c_w S_w(v), v the variables of `block`, with c_w
/// polynomials in the remaining blocks. Requires deg_{v_i} p <= n - i.
std::map<Permutation, Poly> expand_in_schubert(const Poly& p, const SchubertBasis& basis, Var block = Var::y);
std::map<Permutation, Poly> expand_in_schubert(const Poly& p, int n, Var block = Var::y);

/// The standard elementary monomials of S_n, a Z-basis of the span of
/// {x^c : c_i <= n - i}, with the inverse transition matrix precomputed.
/// Immutable after construction.
class ElementaryBasis {
 public:
  explicit ElementaryBasis(int n);
  int n() const { return n_; }
  const Poly& operator()(const ElementaryIndex& beta) const { return products_.at(beta); }

  /// Coefficients of p (a polynomial in x only) in this basis.
  std::map<ElementaryIndex, std::int64_t> expand(const Poly& p) const;

 private:
  int n_;
  std::map<ElementaryIndex, Poly> products_;
  // x^c = sum_beta inverse_[c][beta] * products_[beta]
  std::map<Monomial, std::map<ElementaryIndex, std::int64_t>> inverse_;
};

std::map<ElementaryIndex, std::int64_t> expand_in_elementary_basis(const Poly& p, int n);

/// Normal form of p modulo <e_1(x), ..., e_n(x)> in the span of
/// {x^c : c_i <= n - i}. Other blocks ride along as coefficients.
Poly reduce_modulo_symmetric(const Poly& p, int n);

/// Structure constants of H*(Fl_n): S_u S_v = sum_w c_w S_w mod the ideal.
std::map<Permutation, std::int64_t> classical_product(const Permutation& u, const Permutation& v,
                                                      const SchubertBasis& basis);
std::map<Permutation, std::int64_t> classical_product(const Permutation& u, const Permutation& v, int n);

/// prod_{i+j<=n} (x_i + y_j).
Poly cauchy_product(int n);
/// prod_{k=1}^{n-1} sum_{i=0}^{k} y_{n-k}^{k-i} e_i(x_1..x_k).
Poly cauchy_elementary_form(int n);

}  // namespace qbruhat
