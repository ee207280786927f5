#include <doctest.h>

#include "qbruhat/bruhat_graph.hpp"
#include "qbruhat/error.hpp"
#include "qbruhat/quantum.hpp"
#include "qbruhat/schubert.hpp"

using namespace qbruhat;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
QHElement S(const char* s) { return schubert_class(P(s)); }
QHElement qS(std::initializer_list<int> d, const char* s, std::int64_t c = 1) {
  QHElement el(static_cast<int>(d.size()));
  el.add(P(s), QDegree::from(d), c);
  return el;
}
Poly y(int i) { return Poly::variable(Var::y, i); }
Poly q(int i) { return Poly::variable(Var::q, i); }

// The Schubert class whose polynomial is p (p must be a single Schubert polynomial).
QHElement class_of(const Poly& p, int n) {
  const auto e = expand_in_schubert(p.rename(Var::x, Var::y), n);
  QHElement out(n - 1);
  for (const auto& [w, c] : e) out.add(w, QDegree(n - 1), c.leading_coefficient());
  return out;
}
}  // namespace

TEST_CASE("QH element bookkeeping") {
  QHElement el(2);
  el.add(P("123"), QDegree::from({1, 0}), 2);
  el.add(P("123"), QDegree::from({1, 0}), -2);
  CHECK(el.is_zero());
  CHECK_THROWS(el.add(P("123"), QDegree::from({1}), 1));
  CHECK(el.coefficient(P("321"), QDegree(2)) == 0);
  const auto a = S("213") + qS({1, 0}, "123");
  CHECK((a - a).is_zero());
  CHECK(a.scaled(3, QDegree::from({0, 1})).coefficient(P("213"), QDegree::from({0, 1})) == 3);
}

TEST_CASE("T operators") {
  CHECK(t_op(1, 2, S("213"), 3) == qS({1, 0}, "123"));
  CHECK(t_op(1, 3, S("213"), 3) == S("312"));
  CHECK(t_op(1, 3, S("132"), 3) == S("231"));
  CHECK(t_op(1, 3, S("312"), 3).is_zero());
  CHECK(t_op(1, 3, S("321"), 3) == qS({1, 1}, "123"));
  CHECK_THROWS(t_op(2, 2, S("123"), 3));
  CHECK_THROWS(t_op(1, 4, S("123"), 3));
}

TEST_CASE("T operators with disjoint indices commute") {
  for (const auto& w : all_permutations(5))
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        for (int k = 1; k <= 5; ++k)
          for (int l = k + 1; l <= 5; ++l) {
            if (k == i || k == j || l == i || l == j) continue;
            const auto el = schubert_class(w);
            CHECK(t_op(i, j, t_op(k, l, el, 5), 5) == t_op(k, l, t_op(i, j, el, 5), 5));
          }
}

TEST_CASE("Monk formula") {
  CHECK(monk_multiply(1, S("213"), 3) == S("312") + qS({1, 0}, "123"));
  CHECK(monk_multiply(2, S("321"), 3) == qS({1, 1}, "123") + qS({0, 1}, "312"));
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(monk_multiply(k, schubert_class(Permutation::identity(n)), n) ==
            schubert_class(Permutation::simple(n, k)));
  CHECK(monk_multiply(1, S("21"), 2) == qS({1}, "12"));
  CHECK(monk_multiply(1, QHElement(2), 3).is_zero());
}

TEST_CASE("general Chevalley formula") {
  const auto a1 = weyl_group(RootSystem::parse("A1"));
  const auto s1 = a1.parse("s1");
  WeylQHElement expected(1);
  expected.add(a1.identity(), QDegree::from({1}), 1);
  CHECK(chevalley_general(a1, 1, WeylQHElement::basis_element(s1, 1)) == expected);
  CHECK(chevalley_general(a1, 1, WeylQHElement(1)).is_zero());
  const auto b2 = weyl_group(RootSystem::parse("B2"));
  for (int i = 1; i <= 2; ++i) {
    const auto r = chevalley_general(b2, i, WeylQHElement::basis_element(b2.identity(), 2));
    CHECK(r == WeylQHElement::basis_element(b2.parse("s" + std::to_string(i)), 2));
  }
  // homogeneity in every supported type
  for (const char* label : {"B2", "C3", "G2", "B3"}) {
    const auto g = weyl_group(RootSystem::parse(label));
    for (std::size_t w = 0; w < g.size(); ++w)
      for (int i = 1; i <= g.root_system().rank(); ++i) {
        const auto r = chevalley_general(g, i, WeylQHElement::basis_element(w, g.root_system().rank()));
        for (const auto& [key, c] : r.terms()) {
          CHECK(c > 0);
          CHECK(2 * key.degree.total() + g[key.basis].length() == g[w].length() + 1);
        }
      }
  }
  CHECK_THROWS(chevalley_general(b2, 3, WeylQHElement(2)));
}

TEST_CASE("Pieri operators") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : all_permutations(n))
      for (int k = 1; k < n; ++k) {
        const auto el = schubert_class(w);
        CHECK(pieri_E(1, k, el, n) == monk_multiply(k, el, n));
        CHECK(pieri_H(1, k, el, n) == monk_multiply(k, el, n));
        CHECK(pieri_E(0, k, el, n) == el);
      }
  const auto id3 = schubert_class(Permutation::identity(3));
  CHECK(pieri_E(2, 2, id3, 3) == S("231"));
  CHECK_THROWS(pieri_E(3, 2, id3, 3));
  for (int n = 2; n <= 5; ++n) {
    const auto id = schubert_class(Permutation::identity(n));
    for (int k = 1; k < n; ++k) {
      for (int i = 0; i <= k; ++i) CHECK(pieri_E(i, k, id, n) == class_of(elementary_symmetric(i, k), n));
      for (int i = 0; i <= n - k; ++i) CHECK(pieri_H(i, k, id, n) == class_of(complete_homogeneous(i, k), n));
    }
  }
}

TEST_CASE("H operator rows") {
  auto row = apply_H_operator(P("12"), 2);
  CHECK(row.at(P("12")) == y(1));
  CHECK(row.at(P("21")) == 1);
  row = apply_H_operator(P("21"), 2);
  CHECK(row.at(P("21")) == y(1));
  CHECK(row.at(P("12")) == q(1));
  CHECK(path_schubert_polynomial(P("21"), P("12"), 2) == q(1));
  for (int n = 2; n <= 4; ++n)
    for (const auto& u : all_permutations(n))
      for (const auto& [v, p] : apply_H_operator(u, n)) CHECK(p.has_nonnegative_coefficients());
}

TEST_CASE("saturated chains give Schubert polynomials") {
  for (int n = 2; n <= 4; ++n) {
    const SchubertBasis basis(n);
    const auto wo = Permutation::longest(n);
    for (const auto& w : all_permutations(n)) {
      CHECK(path_schubert_polynomial(w, wo, n) == basis.in(Var::y, w));
      CHECK(path_schubert_polynomial(Permutation::identity(n), wo * w, n) == basis.in(Var::y, w));
    }
  }
}

TEST_CASE("gw_invariants") {
  for (const auto& v : all_permutations(4)) {
    const auto t = gw_invariants(Permutation::identity(4), v, 4);
    CHECK(t.size() == 1);
    CHECK(t(v, QDegree(3)) == 1);
  }
  auto t = gw_invariants(P("21"), P("21"), 2);
  CHECK(t.size() == 1);
  CHECK(t(P("12"), QDegree::from({1})) == 1);
  t = gw_invariants(P("213"), P("213"), 3);
  CHECK(t.product() == S("312") + qS({1, 0}, "123"));
  CHECK(t.product() == monk_multiply(1, S("213"), 3));
  CHECK(t(P("321"), QDegree(2)) == 0);
  CHECK(gw_invariants(P("123"), P("321"), 3).product() == S("321"));
  CHECK_THROWS(gw_invariants(P("12"), P("123"), 3));
  CHECK_THROWS_AS(GWTable(P("12"), P("12"), qS({0}, "12", -1)), InvariantViolation);
}

TEST_CASE("e-basis product agrees") {
  CHECK(quantum_product_ebasis(P("21"), P("21"), 2) == qS({1}, "12"));
  for (int n = 2; n <= 3; ++n)
    for (const auto& u : all_permutations(n)) {
      CHECK(quantum_product_ebasis(u, Permutation::identity(n), n) == schubert_class(u));
      for (const auto& v : all_permutations(n))
        CHECK(quantum_product_ebasis(u, v, n) == gw_invariants(u, v, n).product());
    }
}

TEST_CASE("omega") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(omega(schubert_class(Permutation::simple(n, k)), n) == schubert_class(Permutation::simple(n, n - k)));
  const auto el = S("213") + qS({1, 0}, "123", 3) + qS({2, 1}, "231");
  CHECK(omega(omega(el, 3), 3) == el);
  CHECK(omega(qS({1, 0}, "231"), 3) == qS({0, 1}, "312"));
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      for (int i = 0; i <= std::min(k, n - k); ++i)
        CHECK(omega(class_of(elementary_symmetric(i, k), n), n) == class_of(complete_homogeneous(i, n - k), n));
}

TEST_CASE("minimal monomial") {
  for (const auto& v : all_permutations(3)) CHECK(minimal_monomial(Permutation::identity(3), v, 3) == QDegree(2));
  CHECK(minimal_monomial(P("21"), P("21"), 2) == QDegree::from({1}));
  CHECK(minimal_monomial(P("321"), P("321"), 3) == QDegree::from({1, 1}));
  const auto g = build_graph(3);
  CHECK(minimal_monomial(g, P("321"), P("321")) == min_degree(g, P("321"), P("123")).degree);
}

TEST_CASE("product table") {
  const ProductTable table(3);
  CHECK(table(P("213"), P("213")).product() == S("312") + qS({1, 0}, "123"));
  const auto s = S("213") + S("132");
  const auto sq = table.multiply(s, s);
  CHECK(sq == table(P("213"), P("213")).product() + table(P("132"), P("132")).product() +
                  table(P("213"), P("132")).product().scaled(2, QDegree(2)));
}
