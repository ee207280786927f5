#include "qbruhat/schubert.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <boost/rational.hpp>

#include "qbruhat/error.hpp"

namespace qbruhat {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("n out of range");
}

Poly staircase(int n) {
  Monomial m;
  for (int i = 1; i < n; ++i) m.set_exponent(Var::x, i, n - i);
  return Poly::monomial(m);
}

std::vector<int> block_exponents(const Monomial& m, Var block, int n) {
  std::vector<int> e;
  for (int i = 1; i <= n; ++i) e.push_back(m.exponent(block, i));
  return e;
}

void check_degree_bound(const Poly& p, Var block, int n) {
  for (const auto& [m, c] : p.terms()) {
    for (int i = 1; i <= kMaxN; ++i) {
      const int bound = i <= n ? n - i : 0;
      if (m.exponent(block, i) > bound)
        throw std::invalid_argument("expand_in_schubert: degree in variable " + std::to_string(i) +
                                    " exceeds n - i");
    }
  }
}

}  // namespace

Poly elementary_symmetric(int i, int k, Var block) {
  if (i < 0 || k < 0) throw std::invalid_argument("elementary_symmetric: negative index");
  if (i > k) return Poly();
  Poly out;
  // Enumerate i-subsets of {1..k}.
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(chosen.size()) == i) {
      Monomial m;
      for (int v : chosen) m.set_exponent(block, v, 1);
      out.add_term(m, 1);
      return;
    }
    for (int v = next; v <= k; ++v) {
      chosen.push_back(v);
      rec(v + 1);
      chosen.pop_back();
    }
  };
  rec(1);
  return out;
}

Poly complete_homogeneous(int i, int k, Var block) {
  if (i < 0 || k < 0) throw std::invalid_argument("complete_homogeneous: negative index");
  if (i == 0) return Poly(1);
  if (k == 0) return Poly();
  Poly out;
  std::vector<int> exps(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == k - 1) {
      exps[static_cast<std::size_t>(var)] = left;
      Monomial m;
      for (int v = 0; v < k; ++v) m.set_exponent(block, v + 1, exps[static_cast<std::size_t>(v)]);
      out.add_term(m, 1);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      exps[static_cast<std::size_t>(var)] = e;
      rec(var + 1, left - e);
    }
  };
  rec(0, i);
  return out;
}

Poly schubert_polynomial(const Permutation& w, int n) {
  check_n(n);
  if (w.size() != n) throw std::invalid_argument("schubert_polynomial: size mismatch");
  // Climb to w_o through ascents, then descend by divided differences.
  std::vector<int> word;
  Permutation v = w;
  const Permutation top = Permutation::longest(n);
  while (v != top) {
    int k = 1;
    while (v(k) > v(k + 1)) ++k;
    word.push_back(k);
    v = v.times_transposition(k, k + 1);
  }
  Poly p = staircase(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = divided_difference(p, *it);
  return p;
}

SchubertBasis::SchubertBasis(int n) : n_(n) {
  check_n(n);
  auto perms = all_permutations(n);
  std::stable_sort(perms.begin(), perms.end(),
                   [](const Permutation& a, const Permutation& b) { return a.length() > b.length(); });
  for (const auto& w : perms) {
    if (w == Permutation::longest(n)) {
      x_.emplace(w, staircase(n));
      continue;
    }
    int k = 1;
    while (w(k) > w(k + 1)) ++k;
    x_.emplace(w, divided_difference(x_.at(w.times_transposition(k, k + 1)), k));
  }
  for (const auto& [w, p] : x_) y_.emplace(w, p.rename(Var::x, Var::y));
}

const Poly& SchubertBasis::in(Var block, const Permutation& w) const {
  switch (block) {
    case Var::x:
      return x_.at(w);
    case Var::y:
      return y_.at(w);
    default:
      throw std::invalid_argument("Schubert basis is kept in x and y only");
  }
}

std::map<Permutation, Poly> expand_in_schubert(const Poly& p, const SchubertBasis& basis, Var block) {
  const int n = basis.n();
  check_degree_bound(p, block, n);
  std::map<Monomial, Poly> rest;
  for (const auto& [m, c] : p.terms()) rest[m.restrict_to(block)].add_term(m.without(block), c);

  // x^code(w) is the lex-smallest monomial of S_w, so peel off the smallest
  // remaining monomial; it strictly increases every round.
  std::map<Permutation, Poly> out;
  while (!rest.empty()) {
    const auto lead = rest.begin();
    const Monomial lead_mono = lead->first;
    const Poly coeff = lead->second;
    const auto code = block_exponents(lead_mono, block, n);
    const Permutation w = Permutation::from_code(n, code);
    out[w] += coeff;
    if (out[w].is_zero()) out.erase(w);
    for (const auto& [m, c] : basis.in(block, w).terms()) {
      Poly& slot = rest[m];
      slot -= coeff * c;
      if (slot.is_zero()) rest.erase(m);
    }
    if (rest.contains(lead_mono) || (!rest.empty() && rest.begin()->first < lead_mono))
      throw InvariantViolation("expand_in_schubert: lowest term did not cancel");
  }
  return out;
}

std::map<Permutation, Poly> expand_in_schubert(const Poly& p, int n, Var block) {
  return expand_in_schubert(p, SchubertBasis(n), block);
}

ElementaryBasis::ElementaryBasis(int n) : n_(n) {
  check_n(n);
  ElementaryIndex beta(static_cast<std::size_t>(n - 1), 0);
  std::function<void(int, const Poly&)> rec = [&](int k, const Poly& acc) {
    if (k == n) {
      products_.emplace(beta, acc);
      return;
    }
    for (int i = 0; i <= k; ++i) {
      beta[static_cast<std::size_t>(k - 1)] = i;
      rec(k + 1, acc * elementary_symmetric(i, k));
    }
  };
  rec(1, Poly(1));

  // No monomial order makes these products unitriangular, so invert the
  // transition matrix exactly, one degree block at a time.
  std::map<int, std::vector<ElementaryIndex>> rows;
  for (const auto& [b, p] : products_) rows[p.leading_monomial().degree()].push_back(b);
  std::map<int, std::vector<Monomial>> cols;
  for (const auto& c : all_permutations(n)) {
    Monomial m;
    const auto code = c.code();
    for (int i = 1; i <= n; ++i) m.set_exponent(Var::x, i, code[static_cast<std::size_t>(i - 1)]);
    cols[m.degree()].push_back(m);
  }
  using Q = boost::rational<std::int64_t>;
  for (const auto& [deg, betas] : rows) {
    const auto& monos = cols.at(deg);
    const std::size_t size = betas.size();
    if (monos.size() != size) throw InvariantViolation("elementary basis block is not square");
    // Augmented [A^T | I]: column r of A^T holds the coefficients of product r,
    // so reducing A^T to I leaves (A^T)^{-1} = (A^{-1})^T on the right.
    std::vector<std::vector<Q>> m(size, std::vector<Q>(2 * size));
    for (std::size_t c = 0; c < size; ++c) {
      for (std::size_t r = 0; r < size; ++r) m[c][r] = Q(products_.at(betas[r]).coefficient(monos[c]));
      m[c][size + c] = Q(1);
    }
    for (std::size_t col = 0; col < size; ++col) {
      std::size_t pivot = col;
      while (pivot < size && m[pivot][col] == Q(0)) ++pivot;
      if (pivot == size) throw InvariantViolation("elementary monomials are linearly dependent");
      std::swap(m[pivot], m[col]);
      const Q inv = Q(1) / m[col][col];
      for (auto& v : m[col]) v *= inv;
      for (std::size_t r = 0; r < size; ++r) {
        if (r == col || m[r][col] == Q(0)) continue;
        const Q f = m[r][col];
        for (std::size_t c = 0; c < 2 * size; ++c) m[r][c] -= f * m[col][c];
      }
    }
    // Row c of (A^T)^{-1} = column c of A^{-1}: x^{mono_c} = sum_r A^{-1}[c][r] e_r.
    for (std::size_t c = 0; c < size; ++c) {
      auto& out = inverse_[monos[c]];
      for (std::size_t r = 0; r < size; ++r) {
        const Q v = m[r][size + c];
        if (v.denominator() != 1) throw InvariantViolation("elementary basis is not unimodular");
        if (v.numerator() != 0) out.emplace(betas[r], v.numerator());
      }
    }
  }
}

std::map<ElementaryIndex, std::int64_t> ElementaryBasis::expand(const Poly& p) const {
  std::map<ElementaryIndex, std::int64_t> out;
  for (const auto& [m, c] : p.terms()) {
    if (m.block_degree(Var::x) != m.degree())
      throw std::invalid_argument("expand_in_elementary_basis: polynomial must be in x only");
    const auto it = inverse_.find(m);
    if (it == inverse_.end())
      throw InvariantViolation("expand_in_elementary_basis: nonzero remainder at " + Poly::monomial(m).to_string());
    for (const auto& [b, v] : it->second) out[b] = checked_add(out[b], checked_mul(c, v));
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  Poly check;
  for (const auto& [b, c] : out) check += products_.at(b) * c;
  if (check != p) throw InvariantViolation("expand_in_elementary_basis: re-expansion mismatch");
  return out;
}

std::map<ElementaryIndex, std::int64_t> expand_in_elementary_basis(const Poly& p, int n) {
  return ElementaryBasis(n).expand(p);
}

Poly reduce_modulo_symmetric(const Poly& p, int n) {
  check_n(n);
  // h_{n-i+1}(x_1..x_i) lies in the ideal; it rewrites x_i^{n-i+1}.
  std::vector<Poly> relations;
  for (int i = 1; i <= n; ++i) relations.push_back(complete_homogeneous(n - i + 1, i));

  Poly out;
  Poly work = p;
  while (!work.is_zero()) {
    const auto& [m, c] = *work.terms().rbegin();
    int bad = 0;
    for (int i = 1; i <= kMaxN && !bad; ++i)
      if (m.exponent(Var::x, i) > (i <= n ? n - i : 0)) bad = i;
    if (bad > n) throw std::invalid_argument("reduce_modulo_symmetric: variable beyond x_n");
    if (!bad) {
      out.add_term(m, c);
      work.add_term(Monomial(m), -c);
      continue;
    }
    const Monomial pivot = Monomial::variable(Var::x, bad, n - bad + 1);
    const Monomial shift = m / pivot;
    const std::int64_t coeff = c;
    work -= relations[static_cast<std::size_t>(bad - 1)].shifted(shift) * coeff;
  }
  return out;
}

std::map<Permutation, std::int64_t> classical_product(const Permutation& u, const Permutation& v,
                                                      const SchubertBasis& basis) {
  const int n = basis.n();
  const Poly reduced = reduce_modulo_symmetric(basis(u) * basis(v), n);
  std::map<Permutation, std::int64_t> out;
  for (const auto& [w, c] : expand_in_schubert(reduced, basis, Var::x)) out.emplace(w, c.coefficient(Monomial{}));
  return out;
}

std::map<Permutation, std::int64_t> classical_product(const Permutation& u, const Permutation& v, int n) {
  return classical_product(u, v, SchubertBasis(n));
}

Poly cauchy_product(int n) {
  check_n(n);
  Poly out(1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) out *= Poly::variable(Var::x, i) + Poly::variable(Var::y, j);
  return out;
}

Poly cauchy_elementary_form(int n) {
  check_n(n);
  Poly out(1);
  for (int k = 1; k < n; ++k) {
    Poly factor;
    for (int i = 0; i <= k; ++i)
      factor += Poly::monomial(Monomial::variable(Var::y, n - k, k - i)) * elementary_symmetric(i, k);
    out *= factor;
  }
  return out;
}

}  // namespace qbruhat
