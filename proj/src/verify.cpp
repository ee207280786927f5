#include "qbruhat/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qbruhat/quantum.hpp"
#include "qbruhat/root_system.hpp"
#include "qbruhat/schubert.hpp"
#include "qbruhat/serialize.hpp"

namespace qbruhat {

namespace {

SuiteResult fail(SuiteResult r, std::string counterexample) {
  r.passed = false;
  r.counterexample = std::move(counterexample);
  return r;
}

std::string pair_text(const Permutation& u, const Permutation& v) {
  return "u=" + u.to_string() + " v=" + v.to_string();
}

std::set<QDegree> q_support(const QHElement& el) {
  std::set<QDegree> out;
  for (const auto& [key, c] : el.terms()) out.insert(key.degree);
  return out;
}

std::set<QDegree> q_support(const Poly& p, int rank) {
  std::set<QDegree> out;
  for (const auto& [m, c] : p.terms()) {
    QDegree d(rank);
    for (int i = 0; i < rank; ++i) d.set(i, m.exponent(Var::q, i + 1));
    out.insert(d);
  }
  return out;
}

std::string support_text(const std::set<QDegree>& s) {
  std::string out = "{";
  for (const auto& d : s) out += (out.size() > 1 ? ", " : "") + d.to_string();
  return out + "}";
}

std::map<Permutation, std::int64_t> classical_layer(const QHElement& el) {
  std::map<Permutation, std::int64_t> out;
  for (const auto& [key, c] : el.terms())
    if (key.degree.is_zero()) out.emplace(key.basis, c);
  return out;
}

Permutation conjugate_by_longest(const Permutation& w) {
  const auto wo = Permutation::longest(w.size());
  return wo * w * wo;
}

std::vector<QDegree> minimal_elements(const std::set<QDegree>& s) {
  std::vector<QDegree> out;
  for (const auto& d : s) {
    bool minimal = true;
    for (const auto& e : s)
      if (e != d && divides(e, d)) minimal = false;
    if (minimal) out.push_back(d);
  }
  return out;
}

QBGraph graph_of_type(const std::string& type) {
  return build_graph(weyl_group(RootSystem::parse(type)));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

}  // namespace

SuiteResult verify_graph_a2() {
  SuiteResult r{"graph-a2", true, {}, {}};
  const auto g = build_graph(3);
  struct Expected {
    const char* src;
    const char* dst;
    std::vector<int> weight;
  };
  const std::vector<Expected> expected = {
      {"123", "213", {0, 0}}, {"213", "123", {1, 0}}, {"123", "132", {0, 0}}, {"132", "123", {0, 1}},
      {"213", "231", {0, 0}}, {"231", "213", {0, 1}}, {"132", "312", {0, 0}}, {"312", "132", {1, 0}},
      {"231", "321", {0, 0}}, {"321", "231", {1, 0}}, {"312", "321", {0, 0}}, {"321", "312", {0, 1}},
      {"213", "312", {0, 0}}, {"132", "231", {0, 0}}, {"321", "123", {1, 1}},
  };
  if (g.edge_count() != expected.size())
    return fail(r, "edge count " + std::to_string(g.edge_count()) + ", expected 15");
  for (const auto& e : expected) {
    const auto edge = g.edge(g.vertex(e.src), g.vertex(e.dst));
    const auto w = QDegree::from(e.weight);
    if (!edge) return fail(r, std::string("missing edge ") + e.src + "->" + e.dst);
    if (edge->weight != w)
      return fail(r, std::string("edge ") + e.src + "->" + e.dst + " has weight " + edge->weight.to_string());
  }
  r.summary = "15 edges, quantum edge 321->123 of weight (1,1)";
  return r;
}

SuiteResult verify_cauchy(int max_n) {
  SuiteResult r{"cauchy", true, {}, {}};
  for (int n = 2; n <= max_n; ++n) {
    const SchubertBasis basis(n);
    const auto wo = Permutation::longest(n);
    Poly sum;
    for (const auto& w : all_permutations(n)) sum += basis(w) * basis.in(Var::y, w * wo);
    const Poly product = cauchy_product(n);
    if (product != sum) return fail(r, "n=" + std::to_string(n) + ": product differs from sum_w S_w(x) S_{w w_o}(y)");
    if (product != cauchy_elementary_form(n))
      return fail(r, "n=" + std::to_string(n) + ": product differs from its elementary form");
  }
  r.summary = "n=2.." + std::to_string(max_n);
  return r;
}

SuiteResult verify_saturated(int max_n) {
  SuiteResult r{"saturated", true, {}, {}};
  std::size_t count = 0;
  for (int n = 2; n <= max_n; ++n) {
    const SchubertBasis basis(n);
    const auto wo = Permutation::longest(n);
    const auto id_row = apply_H_operator(Permutation::identity(n), n);
    for (const auto& w : all_permutations(n)) {
      const auto& expected = basis.in(Var::y, w);
      const auto row = apply_H_operator(w, n);
      if (row.at(wo) != expected) return fail(r, "S_{w,w_o} != S_w for w=" + w.to_string());
      if (id_row.at(wo * w) != expected) return fail(r, "S_{1,w_o w} != S_w for w=" + w.to_string());
      ++count;
    }
  }
  r.summary = std::to_string(count) + " permutations, n<=" + std::to_string(max_n);
  return r;
}

namespace {

// Empty on agreement, else a description of the disagreement.
std::string compare_products(int n, const SchubertBasis& basis, const ElementaryBasis& ebasis, const Permutation& u,
                             const std::map<Permutation, Poly>& row, const Permutation& v, bool classical) {
  const auto table = gw_invariants(u, v, row, basis);
  const auto oracle = quantum_product_ebasis(u, v, ebasis, basis);
  if (table.product() != oracle)
    return "n=" + std::to_string(n) + " " + pair_text(u, v) + ": H-operator gives " +
           format_product(table.product()) + ", e-basis gives " + format_product(oracle);
  if (classical && classical_layer(table.product()) != classical_product(u, v, basis))
    return "n=" + std::to_string(n) + " " + pair_text(u, v) + ": q=0 layer differs from the classical product";
  return {};
}

}  // namespace

SuiteResult verify_products_exhaustive(int max_n) {
  SuiteResult r{"products", true, {}, {}};
  std::size_t count = 0;
  for (int n = 2; n <= max_n; ++n) {
    const SchubertBasis basis(n);
    const ElementaryBasis ebasis(n);
    const auto perms = all_permutations(n);
    for (const auto& u : perms) {
      const auto row = apply_H_operator(u, n);
      for (const auto& v : perms) {
        if (auto msg = compare_products(n, basis, ebasis, u, row, v, true); !msg.empty()) return fail(r, msg);
        ++count;
      }
    }
  }
  r.summary = std::to_string(count) + " pairs n<=" + std::to_string(max_n);
  return r;
}

SuiteResult verify_products_sampled(int n, std::size_t count, std::uint64_t seed) {
  SuiteResult r{"products", true, {}, {}};
  const SchubertBasis basis(n);
  const ElementaryBasis ebasis(n);
  const auto perms = all_permutations(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  std::vector<std::pair<Permutation, Permutation>> pairs;
  for (std::size_t i = 0; i < count; ++i) pairs.emplace_back(perms[pick(rng)], perms[pick(rng)]);
  std::sort(pairs.begin(), pairs.end());
  std::map<Permutation, std::map<Permutation, Poly>> rows;
  for (const auto& [u, v] : pairs) {
    auto it = rows.find(u);
    if (it == rows.end()) it = rows.emplace(u, apply_H_operator(u, n)).first;
    if (auto msg = compare_products(n, basis, ebasis, u, it->second, v, false); !msg.empty()) return fail(r, msg);
  }
  r.summary = std::to_string(count) + " sampled at n=" + std::to_string(n) + " (seed " + std::to_string(seed) + ")";
  return r;
}

SuiteResult verify_products(int max_n, std::size_t sample_n5, std::uint64_t seed) {
  auto r = verify_products_exhaustive(max_n);
  if (!r.passed || sample_n5 == 0) return r;
  const auto sampled = verify_products_sampled(max_n + 1, sample_n5, seed);
  if (!sampled.passed) return sampled;
  r.summary += ", " + sampled.summary;
  return r;
}

SuiteResult verify_chevalley(int max_n) {
  SuiteResult r{"chevalley", true, {}, {}};
  std::size_t count = 0;
  for (int n = 2; n <= max_n; ++n) {
    const SchubertBasis basis(n);
    const auto perms = all_permutations(n);
    const auto group = weyl_group(RootSystem::build('A', n - 1));
    if (group.size() != perms.size()) return fail(r, "n=" + std::to_string(n) + ": |W(A)| != n!");
    std::map<Permutation, std::size_t> to_weyl;
    std::set<std::size_t> image;
    for (const auto& w : perms) {
      const auto word = w.reduced_word();
      const auto idx = group.from_word(word);
      if (group[idx].length() != w.length()) return fail(r, "length mismatch under S_n -> W for " + w.to_string());
      to_weyl.emplace(w, idx);
      image.insert(idx);
    }
    if (image.size() != perms.size()) return fail(r, "n=" + std::to_string(n) + ": S_n -> W is not injective");
    auto convert = [&](const QHElement& el) {
      WeylQHElement out(n - 1);
      for (const auto& [key, c] : el.terms()) out.add(to_weyl.at(key.basis), key.degree, c);
      return out;
    };
    for (const auto& u : perms) {
      const auto row = apply_H_operator(u, n);
      for (int k = 1; k < n; ++k) {
        const auto monk = monk_multiply(k, schubert_class(u), n);
        const auto table = gw_invariants(u, Permutation::simple(n, k), row, basis);
        if (table.product() != monk)
          return fail(r, "n=" + std::to_string(n) + " u=" + u.to_string() + " k=" + std::to_string(k) +
                             ": product " + format_product(table.product()) + ", Monk " + format_product(monk));
        const auto general =
            chevalley_general(group, k, WeylQHElement::basis_element(to_weyl.at(u), n - 1));
        if (general != convert(monk))
          return fail(r, "n=" + std::to_string(n) + " u=" + u.to_string() + " k=" + std::to_string(k) +
                             ": root-system Chevalley differs from Monk");
        ++count;
      }
    }
  }
  r.summary = std::to_string(count) + " (u, k) cases, n<=" + std::to_string(max_n);
  return r;
}

SuiteResult verify_ring(int max_n, std::size_t triples, std::uint64_t seed) {
  SuiteResult r{"ring", true, {}, {}};
  std::size_t pairs = 0;
  std::size_t assoc = 0;
  std::mt19937_64 rng(seed);
  for (int n = 2; n <= max_n; ++n) {
    const ProductTable table(n);
    const auto perms = all_permutations(n);
    const auto tag = "n=" + std::to_string(n) + " ";
    for (const auto& u : perms) {
      for (const auto& v : perms) {
        const auto& p = table(u, v).product();
        if (p != table(v, u).product()) return fail(r, tag + pair_text(u, v) + ": not commutative");
        for (const auto& [key, c] : p.terms()) {
          if (c <= 0) return fail(r, tag + pair_text(u, v) + ": nonpositive coefficient");
          if (2 * key.degree.total() + key.basis.length() != u.length() + v.length())
            return fail(r, tag + pair_text(u, v) + ": inhomogeneous term at " + key.basis.to_string());
        }
        if (omega(p, n) != table(conjugate_by_longest(u), conjugate_by_longest(v)).product())
          return fail(r, tag + pair_text(u, v) + ": omega is not multiplicative");
        ++pairs;
      }
    }
    auto associative = [&](const Permutation& a, const Permutation& b, const Permutation& c) {
      const auto left = table.multiply(table(a, b).product(), schubert_class(c));
      const auto right = table.multiply(schubert_class(a), table(b, c).product());
      return left == right;
    };
    if (n < max_n) {
      for (const auto& a : perms)
        for (const auto& b : perms)
          for (const auto& c : perms) {
            if (!associative(a, b, c))
              return fail(r, tag + "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() +
                                 "): not associative");
            ++assoc;
          }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
      for (std::size_t i = 0; i < triples; ++i) {
        const auto &a = perms[pick(rng)], &b = perms[pick(rng)], &c = perms[pick(rng)];
        if (!associative(a, b, c))
          return fail(r, tag + "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() +
                             "): not associative");
        ++assoc;
      }
    }
  }
  r.summary = std::to_string(pairs) + " pairs, " + std::to_string(assoc) + " associativity triples, n<=" +
              std::to_string(max_n);
  return r;
}

SuiteResult verify_minimal_monomial(int max_n) {
  SuiteResult r{"minimal-monomial", true, {}, {}};
  std::size_t count = 0;
  for (int n = 2; n <= max_n; ++n) {
    const ProductTable table(n);
    const auto g = build_graph(n);
    const auto perms = all_permutations(n);
    const auto tag = "n=" + std::to_string(n) + " ";
    for (const auto& u : perms) {
      for (const auto& v : perms) {
        const auto mins = minimal_elements(q_support(table(u, v).product()));
        const auto dmin = minimal_monomial(g, u, v);
        if (mins.size() != 1 || mins.front() != dmin)
          return fail(r, tag + pair_text(u, v) + ": minimal monomials " +
                             support_text({mins.begin(), mins.end()}) + ", d_min(u, w_o v) = " + dmin.to_string());

        // v as the target class: coefficients of sigma_v in sigma_u * sigma_w.
        const auto md = min_degree(g, u, v);
        bool witnessed = false;
        for (const auto& w : perms) {
          std::set<QDegree> degrees;
          for (const auto& [key, c] : table(u, w).product().terms())
            if (key.basis == v) degrees.insert(key.degree);
          for (const auto& d : degrees)
            if (!divides(md.degree, d))
              return fail(r, tag + pair_text(u, v) + " w=" + w.to_string() + ": q^" + d.to_string() +
                                 " not divisible by q^d_min");
          if (degrees.size() == 1 && *degrees.begin() == md.degree) {
            if (w.length() != md.length)
              return fail(r, tag + pair_text(u, v) + " w=" + w.to_string() + ": witness length " +
                                 std::to_string(w.length()) + " != l(u,v) = " + std::to_string(md.length));
            witnessed = true;
          }
        }
        if (!witnessed) return fail(r, tag + pair_text(u, v) + ": no w with coefficient q^d_min * c");
        ++count;
      }
    }
  }
  r.summary = std::to_string(count) + " pairs, n<=" + std::to_string(max_n);
  return r;
}

SuiteResult verify_lemma_paths(const std::vector<std::string>& types, int slack) {
  SuiteResult r{"lemma-paths", true, {}, {}};
  std::vector<std::string> parts;
  for (const auto& type : types) {
    const auto g = graph_of_type(type);
    if (!strongly_connected(g)) return fail(r, type + ": not strongly connected");
    const int size = g.vertex_count();
    for (int s = 0; s < size; ++s) {
      const auto sp = shortest_paths_from(g, s);
      const int far = *std::max_element(sp.distance.begin(), sp.distance.end());
      const auto layers = walk_weights(g, s, far + slack);
      for (int t = 0; t < size; ++t) {
        const auto where = type + " " + g.name(s) + " -> " + g.name(t);
        if (sp.weights[t].size() != 1)
          return fail(r, where + ": shortest paths have weights " + support_text(sp.weights[t]));
        const auto& dmin = *sp.weights[t].begin();
        for (int len = 0; len <= sp.distance[t] + slack; ++len)
          for (const auto& d : layers[len][t])
            if (!divides(dmin, d))
              return fail(r, where + ": walk of length " + std::to_string(len) + " with weight " + d.to_string() +
                                 " not above d_min " + dmin.to_string());
      }
    }
    const auto pairs = std::to_string(size * (size - 1) / 2) + " pairs";
    parts.push_back(types.size() == 1 ? pairs : type + ": " + pairs);
  }
  r.summary = join(parts, ", ") + ", shortest-weight unique";
  return r;
}

SuiteResult verify_switch(const std::vector<std::string>& types) {
  SuiteResult r{"switch", true, {}, {}};
  std::vector<std::string> parts;
  for (const auto& type : types) {
    const auto g = graph_of_type(type);
    std::size_t count = 0;
    for (int a = 0; a < g.vertex_count(); ++a) {
      for (const auto& e1 : g.out_edges(a)) {
        for (const auto& e2 : g.out_edges(e1.target)) {
          const int c = e2.target;
          if (c == a) continue;
          const auto weight = e1.weight + e2.weight;
          int others = 0;
          bool same_weight = true;
          for (const auto& f1 : g.out_edges(a)) {
            if (f1.target == e1.target) continue;
            if (const auto f2 = g.edge(f1.target, c)) {
              ++others;
              if (f1.weight + f2->weight != weight) same_weight = false;
            }
          }
          const auto where = type + " " + g.name(a) + " -> " + g.name(e1.target) + " -> " + g.name(c);
          if (others != 1) return fail(r, where + ": " + std::to_string(others) + " alternative 2-paths");
          if (!same_weight) return fail(r, where + ": alternative 2-path changes the weight");
          ++count;
        }
      }
    }
    parts.push_back(type + ": " + std::to_string(count) + " 2-paths");
  }
  r.summary = join(parts, ", ");
  return r;
}

SuiteResult verify_admissible_support(int max_n, std::size_t sample_n4, std::uint64_t seed, std::size_t node_budget) {
  SuiteResult r{"admissible-support", true, {}, {}};
  std::size_t supports = 0;
  std::size_t path_sums = 0;
  std::mt19937_64 rng(seed);
  for (int n = 2; n <= max_n; ++n) {
    const ProductTable table(n);
    const auto g = build_graph(n);
    const auto perms = all_permutations(n);
    const auto wo = Permutation::longest(n);
    const auto tag = "n=" + std::to_string(n) + " ";
    for (const auto& u : perms) {
      for (const auto& v : perms) {
        const auto product = q_support(table(u, v).product());
        const auto admissible = admissible_weight_support(g, u, wo * v, node_budget);
        if (product != admissible)
          return fail(r, tag + pair_text(u, v) + ": product support " + support_text(product) +
                             ", admissible support " + support_text(admissible));
        ++supports;
      }
    }
    // y^beta-admissible walks: their weights and the polynomial they sum to.
    std::vector<std::pair<Permutation, Permutation>> pairs;
    for (const auto& u : perms)
      for (const auto& v : perms) pairs.emplace_back(u, v);
    if (n == max_n && n >= 4 && sample_n4 < pairs.size()) {
      std::shuffle(pairs.begin(), pairs.end(), rng);
      pairs.resize(sample_n4);
      std::sort(pairs.begin(), pairs.end());
    }
    std::map<Permutation, std::map<Permutation, Poly>> rows;
    for (const auto& [u, v] : pairs) {
      const auto sum = y_admissible_path_sum(g, g.vertex(u), g.vertex(v), node_budget);
      const auto admissible = admissible_weight_support(g, u, v, node_budget);
      if (q_support(sum, n - 1) != admissible)
        return fail(r, tag + pair_text(u, v) + ": y^beta-admissible weights " + support_text(q_support(sum, n - 1)) +
                           ", admissible weights " + support_text(admissible));
      auto it = rows.find(u);
      if (it == rows.end()) it = rows.emplace(u, apply_H_operator(u, n)).first;
      if (sum != it->second.at(v))
        return fail(r, tag + pair_text(u, v) + ": path sum " + sum.to_string() + ", S_{u,v} " +
                           it->second.at(v).to_string());
      ++path_sums;
    }
  }
  r.summary = std::to_string(supports) + " support pairs, " + std::to_string(path_sums) +
              " path-sum pairs, n<=" + std::to_string(max_n);
  return r;
}

SuiteResult verify_skew(int max_n) {
  SuiteResult r{"skew", true, {}, {}};
  std::size_t count = 0;
  for (int n = 2; n <= max_n; ++n) {
    const SchubertBasis basis(n);
    const auto perms = all_permutations(n);
    const auto wo = Permutation::longest(n);
    const auto tag = "n=" + std::to_string(n) + " ";
    for (const auto& u : perms) {
      const auto row = apply_H_operator(u, n);
      for (const auto& v : perms) {
        Poly skew = row.at(v).set_zero(Var::q);
        if (!skew.has_nonnegative_coefficients())
          return fail(r, tag + pair_text(u, v) + ": negative coefficient in " + skew.to_string());
        std::map<Permutation, std::int64_t> expansion;
        for (const auto& [w, c] : expand_in_schubert(skew, basis, Var::y)) {
          if (c.terms().size() != 1 || c.leading_monomial().degree() != 0)
            return fail(r, tag + pair_text(u, v) + ": non-constant coefficient " + c.to_string());
          expansion.emplace(w, c.leading_coefficient());
        }
        if (expansion != classical_product(u, wo * v, basis))
          return fail(r, tag + pair_text(u, v) + ": expansion differs from c^w_{u, w_o v}");
        ++count;
      }
    }
  }
  r.summary = std::to_string(count) + " pairs, n<=" + std::to_string(max_n);
  return r;
}

SuiteResult verify_bruhat_covers(int max_n) {
  SuiteResult r{"bruhat-covers", true, {}, {}};
  std::size_t count = 0;
  for (int n = 2; n <= max_n; ++n) {
    const auto g = build_graph(n);
    std::set<std::pair<Permutation, Permutation>> up, covers;
    for (const auto& e : g.edges())
      if (!e.quantum()) up.emplace(g.permutation(e.source), g.permutation(e.target));
    for (const auto& v : all_permutations(n)) {
      const auto word = v.reduced_word();
      for (std::size_t i = 0; i < word.size(); ++i) {
        auto sub = word;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        const auto u = from_word(n, sub);
        if (u.length() + 1 == v.length()) covers.emplace(u, v);
      }
    }
    if (up != covers) {
      for (const auto& c : covers)
        if (!up.contains(c)) return fail(r, "n=" + std::to_string(n) + ": cover " + pair_text(c.first, c.second) + " is not an up-edge");
      for (const auto& e : up)
        if (!covers.contains(e)) return fail(r, "n=" + std::to_string(n) + ": up-edge " + pair_text(e.first, e.second) + " is not a cover");
    }
    count += covers.size();
  }
  r.summary = std::to_string(count) + " covers, n<=" + std::to_string(max_n);
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"graph-a2", "cauchy",      "saturated", "products",
                                                 "chevalley", "ring",      "minimal-monomial",  "lemma-paths",
                                                 "switch",  "admissible-support",    "skew",      "bruhat-covers"};
  return names;
}

SuiteResult run_suite(std::string_view name, const VerifyOptions& o) {
  auto types = [&](std::vector<std::string> defaults) {
    return o.type ? std::vector<std::string>{*o.type} : defaults;
  };
  if (name == "graph-a2") return verify_graph_a2();
  if (name == "cauchy") return verify_cauchy(o.max_n.value_or(5));
  if (name == "saturated") return verify_saturated(o.max_n.value_or(4));
  if (name == "products") return verify_products(o.max_n.value_or(4), o.sample.value_or(200), o.seed);
  if (name == "chevalley") return verify_chevalley(o.max_n.value_or(5));
  if (name == "ring") return verify_ring(o.max_n.value_or(4), o.sample.value_or(100), o.seed);
  if (name == "minimal-monomial") return verify_minimal_monomial(o.max_n.value_or(4));
  if (name == "lemma-paths") return verify_lemma_paths(types({"A1", "A2", "A3", "B2", "G2"}), o.slack);
  if (name == "switch") return verify_switch(types({"A2", "B2", "G2"}));
  if (name == "admissible-support")
    return verify_admissible_support(o.max_n.value_or(4), o.sample.value_or(576), o.seed, o.node_budget);
  if (name == "skew") return verify_skew(o.max_n.value_or(4));
  if (name == "bruhat-covers") return verify_bruhat_covers(o.max_n.value_or(4));
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace qbruhat
