#include "qbruhat/quantum.hpp"

#include <functional>
#include <stdexcept>

#include "qbruhat/error.hpp"

namespace qbruhat {

namespace {

void check_element(const QHElement& el, int n) {
  if (el.rank() != n - 1) throw std::invalid_argument("QH element does not live in QH*(Fl_n)");
}

}  // namespace

QHElement t_op(int i, int j, const QHElement& el, int n) {
  if (i < 1 || j > n || i >= j) throw std::invalid_argument("t_op needs 1 <= i < j <= n");
  check_element(el, n);
  QHElement out(n - 1);
  const QDegree q_ij = QDegree::range(n - 1, i, j);
  for (const auto& [key, c] : el.terms()) {
    const Permutation v = key.basis.times_transposition(i, j);
    const int lw = key.basis.length();
    const int lv = v.length();
    if (lv == lw + 1)
      out.add(v, key.degree, c);
    else if (lv == lw + 1 - 2 * (j - i))
      out.add(v, key.degree + q_ij, c);
  }
  return out;
}

QHElement monk_multiply(int k, const QHElement& el, int n) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("monk_multiply needs 1 <= k <= n-1");
  QHElement out(n - 1);
  for (int i = 1; i <= k; ++i)
    for (int j = k + 1; j <= n; ++j) out += t_op(i, j, el, n);
  return out;
}

QHElement pieri_E(int i, int k, const QHElement& el, int n) {
  if (k < 1 || k > n - 1 || i < 0 || i > k) throw std::invalid_argument("pieri_E needs 0 <= i <= k <= n-1");
  check_element(el, n);
  QHElement out(n - 1);
  // The written product T_{a_1 b_1} ... T_{a_i b_i} acts right to left, so
  // the factor with the largest b is applied first.
  std::function<void(int, const QHElement&, int, std::uint32_t)> rec = [&](int m, const QHElement& cur, int max_b,
                                                                           std::uint32_t used_a) {
    if (m == 0) {
      out += cur;
      return;
    }
    for (int b = k + 1; b <= max_b; ++b)
      for (int a = 1; a <= k; ++a) {
        if (used_a & (1u << a)) continue;
        const QHElement next = t_op(a, b, cur, n);
        if (next.is_zero()) continue;
        rec(m - 1, next, b, used_a | (1u << a));
      }
  };
  rec(i, el, n, 0);
  return out;
}

QHElement pieri_H(int i, int k, const QHElement& el, int n) {
  if (k < 1 || k > n - 1 || i < 0 || i > n - k)
    throw std::invalid_argument("pieri_H needs 1 <= k <= n-1 and 0 <= i <= n-k");
  check_element(el, n);
  QHElement out(n - 1);
  // T_{c_1 d_1} ... T_{c_i d_i}: the factor with the largest c acts first.
  std::function<void(int, const QHElement&, int, std::uint32_t)> rec = [&](int m, const QHElement& cur, int max_c,
                                                                           std::uint32_t used_d) {
    if (m == 0) {
      out += cur;
      return;
    }
    for (int c = 1; c <= max_c; ++c)
      for (int d = k + 1; d <= n; ++d) {
        if (used_d & (1u << d)) continue;
        const QHElement next = t_op(c, d, cur, n);
        if (next.is_zero()) continue;
        rec(m - 1, next, c, used_d | (1u << d));
      }
  };
  rec(i, el, k, 0);
  return out;
}

WeylQHElement chevalley_general(const WeylGroup& group, int i, const WeylQHElement& el) {
  const RootSystem& rs = group.root_system();
  if (i < 1 || i > rs.rank()) throw std::invalid_argument("chevalley_general: simple index out of range");
  if (el.rank() != rs.rank()) throw std::invalid_argument("chevalley_general: element rank mismatch");
  WeylQHElement out(rs.rank());
  for (const auto& [key, c] : el.terms()) {
    const int lw = group[key.basis].length();
    for (int a = 0; a < rs.positive_count(); ++a) {
      const int lambda = rs.coroot(a)[i - 1];
      if (lambda == 0) continue;
      const std::size_t v = group.reflect_right(key.basis, a);
      const int lv = group[v].length();
      if (lv == lw + 1)
        out.add(v, key.degree, checked_mul(c, lambda));
      else if (lv == lw + 1 - 2 * rs.height(a))
        out.add(v, key.degree + rs.coroot(a), checked_mul(c, lambda));
    }
  }
  return out;
}

std::map<Permutation, Poly> apply_H_operator(const Permutation& u, int n) {
  if (u.size() != n) throw std::invalid_argument("apply_H_operator: size mismatch");
  std::map<Permutation, Poly> row;
  // H(y) = sum_beta y^{delta-beta} H^(1)_{beta_1} ... H^(n-1)_{beta_{n-1}};
  // H^(n-1) acts first.
  std::function<void(int, const QHElement&, const Monomial&)> rec = [&](int k, const QHElement& cur,
                                                                         const Monomial& ymono) {
    if (k == 0) {
      for (const auto& [key, c] : cur.terms()) {
        Monomial m = ymono;
        for (int i = 0; i < key.degree.rank(); ++i) m.set_exponent(Var::q, i + 1, key.degree[i]);
        row[key.basis].add_term(m, c);
      }
      return;
    }
    for (int b = 0; b <= n - k; ++b) {
      const QHElement next = b == 0 ? cur : pieri_H(b, k, cur, n);
      if (next.is_zero()) continue;
      Monomial m = ymono;
      m.set_exponent(Var::y, k, n - k - b);
      rec(k - 1, next, m);
    }
  };
  rec(n - 1, schubert_class(u), Monomial{});
  std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
  return row;
}

Poly path_schubert_polynomial(const Permutation& u, const Permutation& v, int n) {
  if (v.size() != n) throw std::invalid_argument("path_schubert_polynomial: size mismatch");
  const auto row = apply_H_operator(u, n);
  const auto it = row.find(v);
  return it == row.end() ? Poly() : it->second;
}

GWTable::GWTable(Permutation u, Permutation v, QHElement product)
    : u_(std::move(u)), v_(std::move(v)), product_(std::move(product)) {
  for (const auto& [key, c] : product_.terms())
    if (c <= 0)
      throw InvariantViolation("negative Gromov-Witten coefficient in sigma_" + u_.to_string() + " * sigma_" +
                               v_.to_string());
}

GWTable gw_invariants(const Permutation& u, const Permutation& v, const std::map<Permutation, Poly>& h_row,
                      const SchubertBasis& basis) {
  const int n = basis.n();
  if (u.size() != n || v.size() != n) throw std::invalid_argument("gw_invariants: size mismatch");
  QHElement product(n - 1);
  const auto it = h_row.find(compose(Permutation::longest(n), v));
  if (it != h_row.end()) {
    for (const auto& [w, coeff] : expand_in_schubert(it->second, basis, Var::y)) {
      for (const auto& [m, c] : coeff.terms()) {
        if (m.block_degree(Var::q) != m.degree())
          throw InvariantViolation("gw_invariants: Schubert coefficient not in Z[q]");
        QDegree d(n - 1);
        for (int i = 1; i < n; ++i) d.set(i - 1, m.exponent(Var::q, i));
        product.add(w, d, c);
      }
    }
  }
  return GWTable(u, v, std::move(product));
}

GWTable gw_invariants(const Permutation& u, const Permutation& v, int n) {
  return gw_invariants(u, v, apply_H_operator(u, n), SchubertBasis(n));
}

QHElement quantum_product_ebasis(const Permutation& u, const Permutation& v, const ElementaryBasis& ebasis,
                                 const SchubertBasis& basis) {
  const int n = basis.n();
  if (u.size() != n || v.size() != n) throw std::invalid_argument("quantum_product_ebasis: size mismatch");
  QHElement out(n - 1);
  for (const auto& [beta, c] : ebasis.expand(basis(v))) {
    QHElement el = schubert_class(u);
    for (int k = 1; k < n && !el.is_zero(); ++k) {
      const int i = beta[static_cast<std::size_t>(k - 1)];
      if (i > 0) el = pieri_E(i, k, el, n);
    }
    out += el.scaled(c, QDegree(n - 1));
  }
  return out;
}

QHElement quantum_product_ebasis(const Permutation& u, const Permutation& v, int n) {
  return quantum_product_ebasis(u, v, ElementaryBasis(n), SchubertBasis(n));
}

QHElement omega(const QHElement& el, int n) {
  check_element(el, n);
  const Permutation w0 = Permutation::longest(n);
  QHElement out(n - 1);
  for (const auto& [key, c] : el.terms()) out.add(w0 * key.basis * w0, key.degree.reversed(), c);
  return out;
}

QDegree minimal_monomial(const QBGraph& graph, const Permutation& u, const Permutation& v) {
  const Permutation target = compose(Permutation::longest(v.size()), v);
  return min_degree(graph, u, target).degree;
}

QDegree minimal_monomial(const Permutation& u, const Permutation& v, int n) {
  return minimal_monomial(build_graph(n), u, v);
}

ProductTable::ProductTable(int n) : n_(n) {
  const SchubertBasis basis(n);
  const auto perms = all_permutations(n);
  for (const auto& u : perms) {
    const auto row = apply_H_operator(u, n);
    for (const auto& v : perms) table_.emplace(std::make_pair(u, v), gw_invariants(u, v, row, basis));
  }
}

QHElement ProductTable::multiply(const QHElement& a, const QHElement& b) const {
  QHElement out(n_ - 1);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out += (*this)(ka.basis, kb.basis).product().scaled(checked_mul(ca, cb), ka.degree + kb.degree);
  return out;
}

}  // namespace qbruhat
