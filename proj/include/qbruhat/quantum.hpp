#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "qbruhat/bruhat_graph.hpp"
#include "qbruhat/permutation.hpp"
#include "qbruhat/poly.hpp"
#include "qbruhat/qdegree.hpp"
#include "qbruhat/root_system.hpp"
#include "qbruhat/schubert.hpp"

namespace qbruhat {

/// A finite Z-combination of terms q^d sigma_w. `Basis` is Permutation for
/// QH*(Fl_n), or a WeylGroup element index for general G/B.
///
/// Terms are ordered by (|d|, lex d, basis), so iteration lists the lowest
/// quantum degree first.
template <class Basis>
class BasicQHElement {
 public:
  struct Key {
    QDegree degree;
    Basis basis;
    friend bool operator<(const Key& a, const Key& b) {
      if (a.degree != b.degree) return GradedLess{}(a.degree, b.degree);
      return a.basis < b.basis;
    }
    friend bool operator==(const Key&, const Key&) = default;
  };
  using Terms = std::map<Key, std::int64_t>;

  BasicQHElement() = default;
  explicit BasicQHElement(int rank) : rank_(rank) {}
  /// sigma_w.
  static BasicQHElement basis_element(const Basis& w, int rank, std::int64_t coeff = 1) {
    BasicQHElement el(rank);
    el.add(w, QDegree(rank), coeff);
    return el;
  }

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Basis& w, const QDegree& d, std::int64_t coeff) {
    if (coeff == 0) return;
    if (d.rank() != rank_) throw std::invalid_argument("QH element: degree rank mismatch");
    auto [it, inserted] = terms_.try_emplace(Key{d, w}, coeff);
    if (inserted) return;
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }

  std::int64_t coefficient(const Basis& w, const QDegree& d) const {
    const auto it = terms_.find(Key{d, w});
    return it == terms_.end() ? 0 : it->second;
  }

  BasicQHElement& operator+=(const BasicQHElement& other) {
    for (const auto& [k, c] : other.terms_) add(k.basis, k.degree, c);
    return *this;
  }
  friend BasicQHElement operator+(BasicQHElement a, const BasicQHElement& b) { return a += b; }
  friend BasicQHElement operator-(BasicQHElement a, const BasicQHElement& b) {
    for (const auto& [k, c] : b.terms_) a.add(k.basis, k.degree, checked_mul(c, -1));
    return a;
  }
  /// Multiply by c q^d.
  BasicQHElement scaled(std::int64_t c, const QDegree& d) const {
    BasicQHElement out(rank_);
    for (const auto& [k, v] : terms_) out.add(k.basis, k.degree + d, checked_mul(v, c));
    return out;
  }

  friend bool operator==(const BasicQHElement&, const BasicQHElement&) = default;

 private:
  int rank_ = 0;
  Terms terms_;
};

using QHElement = BasicQHElement<Permutation>;
using WeylQHElement = BasicQHElement<std::size_t>;

/// sigma_w in QH*(Fl_n).
inline QHElement schubert_class(const Permutation& w) {
  return QHElement::basis_element(w, w.size() - 1);
}

/// T_ij, extended Z[q]-linearly.
QHElement t_op(int i, int j, const QHElement& el, int n);
/// sigma_{s_k} * el = sum_{i <= k < j} T_ij(el).
QHElement monk_multiply(int k, const QHElement& el, int n);
/// Quantum multiplication by e_i(x_1..x_k) and by h_i(x_1..x_k).
QHElement pieri_E(int i, int k, const QHElement& el, int n);
QHElement pieri_H(int i, int k, const QHElement& el, int n);

/// sigma_{s_i} * el in QH*(G/B) for a general root system (i is 1-based):
/// sum over positive roots of lambda_i(h_alpha) T_alpha(el).
WeylQHElement chevalley_general(const WeylGroup& group, int i, const WeylQHElement& el);

/// Row u of the operator H(y): v -> S_{u,v}(y, q).
std::map<Permutation, Poly> apply_H_operator(const Permutation& u, int n);
Poly path_schubert_polynomial(const Permutation& u, const Permutation& v, int n);

/// The coefficients of sigma_u * sigma_v: (w, d) -> <sigma_u, sigma_v, sigma_{w_o w}>_d.
class GWTable {
 public:
  GWTable(Permutation u, Permutation v, QHElement product);

  const Permutation& u() const { return u_; }
  const Permutation& v() const { return v_; }
  int n() const { return u_.size(); }
  /// Zero for absent keys.
  std::int64_t operator()(const Permutation& w, const QDegree& d) const { return product_.coefficient(w, d); }
  const QHElement& product() const { return product_; }
  std::size_t size() const { return product_.size(); }

  friend bool operator==(const GWTable&, const GWTable&) = default;

 private:
  Permutation u_;
  Permutation v_;
  QHElement product_;
};

/// sigma_u * sigma_v via the Schubert expansion of S_{u, w_o v}.
GWTable gw_invariants(const Permutation& u, const Permutation& v, int n);
GWTable gw_invariants(const Permutation& u, const Permutation& v, const std::map<Permutation, Poly>& h_row,
                      const SchubertBasis& basis);

/// sigma_u * sigma_v via the elementary-monomial expansion of S_v and the
/// operators E_i^(k).
QHElement quantum_product_ebasis(const Permutation& u, const Permutation& v, int n);
QHElement quantum_product_ebasis(const Permutation& u, const Permutation& v, const ElementaryBasis& ebasis,
                                 const SchubertBasis& basis);

/// q^d sigma_w -> q^{reverse(d)} sigma_{w_o w w_o}.
QHElement omega(const QHElement& el, int n);

/// d_min(u, w_o v).
QDegree minimal_monomial(const Permutation& u, const Permutation& v, int n);
QDegree minimal_monomial(const QBGraph& graph, const Permutation& u, const Permutation& v);

/// All products sigma_u * sigma_v for u, v in S_n, computed once.
/// Immutable afterwards and safe for concurrent reads.
class ProductTable {
 public:
  explicit ProductTable(int n);
  int n() const { return n_; }
  const GWTable& operator()(const Permutation& u, const Permutation& v) const { return table_.at({u, v}); }
  /// Bilinear extension of the Schubert products.
  QHElement multiply(const QHElement& a, const QHElement& b) const;

 private:
  int n_;
  std::map<std::pair<Permutation, Permutation>, GWTable> table_;
};

}  // namespace qbruhat
