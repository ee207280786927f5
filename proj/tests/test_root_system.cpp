#include <doctest.h>

#include <algorithm>
#include <set>

#include "qbruhat/error.hpp"
#include "qbruhat/permutation.hpp"
#include "qbruhat/root_system.hpp"

using namespace qbruhat;

namespace {
std::multiset<int> heights(const RootSystem& rs) {
  std::multiset<int> out;
  for (int a = 0; a < rs.positive_count(); ++a) out.insert(rs.height(a));
  return out;
}
}  // namespace

TEST_CASE("positive root counts") {
  CHECK(build_root_system('A', 1).positive_count() == 1);
  CHECK(build_root_system('A', 2).positive_count() == 3);
  CHECK(build_root_system('A', 3).positive_count() == 6);
  CHECK(build_root_system('A', 4).positive_count() == 10);
  CHECK(build_root_system('B', 2).positive_count() == 4);
  CHECK(build_root_system('C', 2).positive_count() == 4);
  CHECK(build_root_system('G', 2).positive_count() == 6);
  CHECK(build_root_system('B', 3).positive_count() == 9);
  CHECK(build_root_system('C', 3).positive_count() == 9);
  CHECK(RootSystem::parse("A7").positive_count() == 28);
}

TEST_CASE("coroot heights") {
  CHECK(heights(build_root_system('A', 1)) == std::multiset<int>{1});
  CHECK(heights(build_root_system('A', 2)) == std::multiset<int>{1, 1, 2});
  const auto b2 = build_root_system('B', 2);
  CHECK(heights(b2) == std::multiset<int>{1, 1, 2, 3});
  // alpha_1 long, alpha_2 short: the short root alpha_1 + alpha_2 has coroot
  // 2h_1 + h_2, the long root alpha_1 + 2 alpha_2 has coroot h_1 + h_2.
  const int short_root = b2.index_of({1, 1});
  const int long_root = b2.index_of({1, 2});
  REQUIRE(short_root >= 0);
  REQUIRE(long_root >= 0);
  CHECK(coroot_qdegree(b2, short_root) == QDegree::from({2, 1}));
  CHECK(coroot_qdegree(b2, long_root) == QDegree::from({1, 1}));
  CHECK(b2.height(short_root) == 3);
  CHECK(b2.height(long_root) == 2);
  const auto a2 = build_root_system('A', 2);
  CHECK(coroot_qdegree(a2, a2.index_of({1, 1})) == QDegree::from({1, 1}));
}

TEST_CASE("simple coroots are unit vectors") {
  for (const char* label : {"A1", "A3", "B2", "B3", "C2", "C3", "G2"}) {
    const auto rs = RootSystem::parse(label);
    for (int i = 0; i < rs.rank(); ++i) {
      QDegree e(rs.rank());
      e.set(i, 1);
      CHECK(rs.coroot(i) == e);
      CHECK(rs.height(i) == 1);
    }
  }
}

TEST_CASE("unsupported systems are rejected") {
  CHECK_THROWS(RootSystem::parse("D4"));
  CHECK_THROWS(RootSystem::parse("B4"));
  CHECK_THROWS(RootSystem::parse("G3"));
  CHECK_THROWS(RootSystem::parse("A0"));
  CHECK_THROWS(RootSystem::parse("A8"));
  CHECK_THROWS(RootSystem::parse(""));
}

TEST_CASE("reflections") {
  for (const char* label : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
    const auto rs = RootSystem::parse(label);
    for (int a = 0; a < rs.positive_count(); ++a) {
      const auto& alpha = rs.root(a);
      auto minus = alpha;
      for (auto& c : minus) c = -c;
      CHECK(rs.reflect(a, alpha) == minus);
      for (int b = 0; b < 2 * rs.positive_count(); ++b) {
        const auto& beta = rs.root(b);
        const bool fixed = rs.reflect(a, beta) == beta;
        CHECK(fixed == (rs.inner(alpha, beta) == 0));
        CHECK(rs.index_of(rs.reflect(a, beta)) >= 0);
      }
    }
  }
}

TEST_CASE("Chevalley coefficient is the coroot coordinate") {
  // lambda_i(h_alpha) = <lambda_i, alpha^vee>, with <lambda_i, alpha_j^vee> = delta_ij
  for (const char* label : {"A3", "B2", "B3", "C3", "G2"}) {
    const auto rs = RootSystem::parse(label);
    for (int a = 0; a < rs.positive_count(); ++a) {
      int sum = 0;
      for (int i = 0; i < rs.rank(); ++i) sum += rs.coroot(a)[i];
      CHECK(sum == rs.height(a));
      // h_alpha = sum d_i h_{alpha_i}: pairing with alpha_j matches the Cartan combination
      for (int j = 0; j < rs.rank(); ++j) {
        int expected = 0;
        for (int i = 0; i < rs.rank(); ++i) expected += rs.coroot(a)[i] * rs.pairing(rs.root(j), i);
        CHECK(rs.pairing(rs.root(j), a) == expected);
      }
    }
  }
}

TEST_CASE("Weyl group sizes and lengths") {
  const auto a2 = weyl_group(RootSystem::parse("A2"));
  std::multiset<int> lengths;
  for (const auto& w : a2.elements()) lengths.insert(w.length());
  CHECK(lengths == std::multiset<int>{0, 1, 1, 2, 2, 3});
  const auto b2 = weyl_group(RootSystem::parse("B2"));
  CHECK(b2.size() == 8);
  CHECK(b2[b2.longest()].length() == 4);
  CHECK(weyl_group(RootSystem::parse("A3")).size() == 24);
  CHECK(weyl_group(RootSystem::parse("G2")).size() == 12);
  CHECK(weyl_group(RootSystem::parse("B3")).size() == 48);
  CHECK(weyl_group(RootSystem::parse("C3")).size() == 48);
  CHECK_THROWS_AS(weyl_group(RootSystem::parse("A4"), 100), BoundExceeded);
}

TEST_CASE("length is the number of positive roots sent negative") {
  for (const char* label : {"A3", "B2", "B3", "G2"}) {
    const auto rs = RootSystem::parse(label);
    const auto group = weyl_group(rs);
    for (const auto& w : group.elements()) {
      int neg = 0;
      for (int a = 0; a < rs.positive_count(); ++a) neg += !rs.is_positive(w.action()[a]);
      CHECK(neg == w.length());
    }
    const auto& wo = group[group.longest()];
    for (int a = 0; a < rs.positive_count(); ++a) CHECK_FALSE(rs.is_positive(wo.action()[a]));
    CHECK(wo.length() == rs.positive_count());
  }
}

TEST_CASE("Weyl names and parsing") {
  const auto g = weyl_group(RootSystem::parse("B2"));
  CHECK(g.name(g.identity()) == "id");
  CHECK(g.parse("id") == g.identity());
  CHECK(g.parse("e") == g.identity());
  CHECK(g.parse("s1s2") == g.parse("12"));
  CHECK(g.name(g.parse("s1")) == "s1");
  CHECK(g.parse("s1s1") == g.identity());
  CHECK(g.parse("s1s2s1s2") == g.parse("s2s1s2s1"));
  CHECK(g.parse("s1s2s1s2") == g.longest());
  CHECK_THROWS(g.parse("s3"));
  CHECK_THROWS(g.parse("x"));
}

TEST_CASE("type A Weyl group is S_n") {
  for (int n = 2; n <= 5; ++n) {
    const auto group = weyl_group(build_root_system('A', n - 1));
    std::set<std::size_t> seen;
    for (const auto& w : all_permutations(n)) {
      const auto idx = group.from_word(w.reduced_word());
      CHECK(group[idx].length() == w.length());
      seen.insert(idx);
      for (const auto& v : all_permutations(n)) {
        if (v.length() > 1) continue;
        CHECK(group.multiply(idx, group.from_word(v.reduced_word())) == group.from_word((w * v).reduced_word()));
      }
    }
    CHECK(seen.size() == group.size());
  }
}
