#include <doctest.h>

#include <set>

#include "qbruhat/bruhat_graph.hpp"
#include "qbruhat/error.hpp"

using namespace qbruhat;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<std::pair<int, int>> L(std::initializer_list<std::pair<int, int>> l) { return l; }
}  // namespace

TEST_CASE("Gamma_1 and Gamma_2") {
  const auto g1 = build_graph(1);
  CHECK(g1.vertex_count() == 1);
  CHECK(g1.edge_count() == 0);
  const auto g = build_graph(2);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 2);
  const auto down = g.edge(g.vertex(P("21")), g.vertex(P("12")));
  REQUIRE(down);
  CHECK(down->weight == QDegree::from({1}));
  CHECK(down->quantum());
  const auto up = g.edge(g.vertex(P("12")), g.vertex(P("21")));
  REQUIRE(up);
  CHECK_FALSE(up->quantum());
  CHECK(up->label.i == 1);
  CHECK(up->label.j == 2);
}

TEST_CASE("Gamma_3 matches the picture") {
  const auto g = build_graph(3);
  CHECK(g.edge_count() == 15);
  const std::set<std::pair<std::string, std::string>> both = {
      {"123", "213"}, {"123", "132"}, {"213", "231"}, {"132", "312"}, {"231", "321"}, {"312", "321"}};
  for (const auto& [a, b] : both) {
    CHECK(g.edge(g.vertex(a), g.vertex(b)).has_value());
    CHECK(g.edge(g.vertex(b), g.vertex(a)).has_value());
  }
  CHECK(g.edge(g.vertex("213"), g.vertex("312")).has_value());
  CHECK_FALSE(g.edge(g.vertex("312"), g.vertex("213")).has_value());
  CHECK(g.edge(g.vertex("132"), g.vertex("231")).has_value());
  CHECK_FALSE(g.edge(g.vertex("231"), g.vertex("132")).has_value());
  const auto q = g.edge(g.vertex("321"), g.vertex("123"));
  REQUIRE(q);
  CHECK(q->weight == QDegree::from({1, 1}));
  CHECK_FALSE(g.edge(g.vertex("123"), g.vertex("321")).has_value());
  CHECK(g.longest() == g.vertex("321"));
  CHECK(g.identity() == g.vertex("123"));
}

TEST_CASE("edges satisfy the two length conditions") {
  for (const char* label : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
    const auto rs = RootSystem::parse(label);
    const auto group = weyl_group(rs);
    const auto g = build_graph(group);
    std::size_t expected = 0;
    for (std::size_t u = 0; u < group.size(); ++u)
      for (int a = 0; a < rs.positive_count(); ++a) {
        const auto v = group.reflect_right(u, a);
        const int lu = group[u].length(), lv = group[v].length();
        const bool up = lv == lu + 1;
        const bool down = lv == lu + 1 - 2 * rs.height(a);
        const auto e = g.edge(static_cast<int>(u), static_cast<int>(v));
        CHECK(e.has_value() == (up || down));
        if (e) {
          ++expected;
          CHECK(e->weight == (up ? QDegree(rs.rank()) : rs.coroot(a)));
        }
      }
    CHECK(g.edge_count() == expected);
  }
}

TEST_CASE("type A graph agrees with the root-system graph") {
  for (int n = 2; n <= 5; ++n) {
    const auto g = build_graph(n);
    const auto group = weyl_group(build_root_system('A', n - 1));
    const auto h = build_graph(group);
    CHECK(g.edge_count() == h.edge_count());
    for (const auto& e : g.edges()) {
      const auto s = group.from_word(g.permutation(e.source).reduced_word());
      const auto t = group.from_word(g.permutation(e.target).reduced_word());
      const auto f = h.edge(static_cast<int>(s), static_cast<int>(t));
      REQUIRE(f);
      CHECK(f->weight == e.weight);
      CHECK(e.weight == (e.quantum() ? QDegree::range(n - 1, e.label.i, e.label.j) : QDegree(n - 1)));
    }
  }
}

TEST_CASE("min_degree") {
  const auto g = build_graph(3);
  CHECK(min_degree(g, P("213"), P("213")) == MinDegree{QDegree(2), 0});
  CHECK(min_degree(g, P("321"), P("123")) == MinDegree{QDegree::from({1, 1}), 1});
  CHECK(min_degree(g, P("123"), P("321")) == MinDegree{QDegree(2), 3});
  CHECK_THROWS(min_degree(g, P("12"), P("21")));
  const auto b2 = build_graph(weyl_group(RootSystem::parse("B2")));
  for (int u = 0; u < b2.vertex_count(); ++u) CHECK(min_degree(b2, u, u).length == 0);
}

TEST_CASE("strong connectivity") {
  for (const char* label : {"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "G2"})
    CHECK(strongly_connected(build_graph(weyl_group(RootSystem::parse(label)))));
}

TEST_CASE("enumerate_paths") {
  const auto g2 = build_graph(2);
  auto paths = enumerate_paths(g2, g2.vertex(P("12")), g2.vertex(P("21")), 1);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].weight() == QDegree(1));
  const auto g = build_graph(3);
  paths = enumerate_paths(g, g.vertex(P("321")), g.vertex(P("123")), 1);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].weight() == QDegree::from({1, 1}));
  paths = enumerate_paths(g, g.identity(), g.identity(), 2);
  CHECK(paths.size() == 3);
  CHECK(paths[0].length() == 0);
  CHECK_THROWS_AS(enumerate_paths(g, g.identity(), g.identity(), 12, 1000), BoundExceeded);
}

TEST_CASE("walk weights agree with enumeration") {
  const auto g = build_graph(3);
  for (int s = 0; s < g.vertex_count(); ++s) {
    const auto layers = walk_weights(g, s, 4);
    for (int t = 0; t < g.vertex_count(); ++t) {
      std::set<QDegree> all;
      for (int len = 0; len <= 4; ++len) all.insert(layers[len][t].begin(), layers[len][t].end());
      std::set<QDegree> enumerated;
      for (const auto& p : enumerate_paths(g, s, t, 4)) enumerated.insert(p.weight());
      CHECK(all == enumerated);
    }
  }
}

TEST_CASE("QPath") {
  const auto g = build_graph(3);
  QPath p(g.identity(), 2);
  CHECK(p.end() == g.identity());
  CHECK(p.weight() == QDegree(2));
  const auto e = *g.edge(g.identity(), g.vertex("213"));
  p.push(e);
  CHECK(p.end() == g.vertex("213"));
  CHECK(p.labels() == L({{1, 2}}));
  CHECK_THROWS(p.push(e));
  p.pop();
  CHECK(p.length() == 0);
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(L({})));
  CHECK(is_admissible(L({{1, 2}})));
  CHECK_FALSE(is_admissible(L({{1, 2}, {1, 2}})));
  CHECK(is_admissible(L({{1, 2}, {1, 3}})));
  CHECK(is_admissible(L({{1, 3}, {1, 3}})));  // k = 1, 2
  CHECK_FALSE(is_admissible(L({{2, 3}, {1, 2}})));
}

TEST_CASE("y^beta admissibility") {
  const std::vector<int> zero{0, 0};
  CHECK(is_y_beta_admissible(L({}), zero));
  const std::vector<int> e1{1};
  CHECK(is_y_beta_admissible(L({{1, 2}}), e1));
  for (const auto& beta : std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}})
    CHECK_FALSE(is_y_beta_admissible(L({{2, 3}, {1, 3}}), beta));
  const std::vector<int> b11{1, 1};
  CHECK(is_y_beta_admissible(L({{1, 2}, {2, 3}}), b11));
  CHECK(is_y_beta_admissible(L({{1, 3}, {2, 3}}), b11));
  CHECK_FALSE(is_y_beta_admissible(L({{1, 2}, {1, 2}}), b11));
  CHECK_THROWS(is_y_beta_admissible(L({{1, 2}}), b11));
}

TEST_CASE("admissibility: backtracking agrees with brute force") {
  // all label sequences of length <= 4 over S_4 transpositions
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) pairs.emplace_back(i, j);
  std::vector<std::pair<int, int>> labels;
  auto brute = [&](auto&& self, std::size_t pos, int lo, std::set<std::pair<int, int>>& used) -> bool {
    if (pos == labels.size()) return true;
    const auto [a, b] = labels[pos];
    for (int k = std::max(a, lo); k < b; ++k) {
      if (used.contains({k, b})) continue;
      used.insert({k, b});
      const bool ok = self(self, pos + 1, k, used);
      used.erase({k, b});
      if (ok) return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, int depth) -> void {
    std::set<std::pair<int, int>> used;
    CHECK(is_admissible(labels) == brute(brute, 0, 1, used));
    if (depth == 0) return;
    for (const auto& p : pairs) {
      labels.push_back(p);
      self(self, depth - 1);
      labels.pop_back();
    }
  };
  rec(rec, 4);
}

TEST_CASE("admissible weight support") {
  const auto g1 = build_graph(1);
  CHECK(admissible_weight_support(g1, 0, 0) == std::set<QDegree>{QDegree(0)});
  const auto g2 = build_graph(2);
  CHECK(admissible_weight_support(g2, P("12"), P("12")) == std::set<QDegree>{QDegree(1)});
  CHECK(admissible_weight_support(g2, P("21"), P("12")) == std::set<QDegree>{QDegree::from({1})});
  const auto g = build_graph(3);
  CHECK(admissible_weight_support(g, P("123"), P("321")) == std::set<QDegree>{QDegree(2)});
  CHECK_THROWS_AS(admissible_weight_support(build_graph(4), P("4321"), P("1234"), 5), BoundExceeded);
}

TEST_CASE("y^beta-admissible path sum") {
  const auto g = build_graph(2);
  const auto y1 = Poly::variable(Var::y, 1);
  CHECK(y_admissible_path_sum(g, g.vertex(P("12")), g.vertex(P("12"))) == y1);
  CHECK(y_admissible_path_sum(g, g.vertex(P("12")), g.vertex(P("21"))) == 1);
  CHECK(y_admissible_path_sum(g, g.vertex(P("21")), g.vertex(P("12"))) == Poly::variable(Var::q, 1));
}
