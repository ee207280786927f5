#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbruhat/bruhat_graph.hpp"

namespace qbruhat {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::string summary;
  /// First failing case in enumeration order (smallest n, then lex).
  std::string counterexample;
};

/// Unset fields fall back to each suite's own default bounds.
struct VerifyOptions {
  std::optional<int> max_n;
  std::optional<std::string> type;
  /// Random pairs at n = 5 for "products", random triples for "ring",
  /// random n = 4 pairs for the path-sum check of "admissible-support".
  std::optional<std::size_t> sample;
  std::uint64_t seed = 20240501;
  /// Extra length over l(u, v) for the walk-weight check of "lemma-paths".
  int slack = 4;
  std::size_t node_budget = kDefaultNodeBudget;
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(std::string_view name, const VerifyOptions& options = {});

SuiteResult verify_graph_a2();
SuiteResult verify_cauchy(int max_n);
SuiteResult verify_saturated(int max_n);
/// All pairs n <= max_n, then sample_n5 random pairs at n = max_n + 1.
SuiteResult verify_products(int max_n, std::size_t sample_n5, std::uint64_t seed);
SuiteResult verify_products_exhaustive(int max_n);
SuiteResult verify_products_sampled(int n, std::size_t count, std::uint64_t seed);
SuiteResult verify_chevalley(int max_n);
SuiteResult verify_ring(int max_n, std::size_t triples, std::uint64_t seed);
SuiteResult verify_minimal_monomial(int max_n);
SuiteResult verify_lemma_paths(const std::vector<std::string>& types, int slack);
SuiteResult verify_switch(const std::vector<std::string>& types);
SuiteResult verify_admissible_support(int max_n, std::size_t sample_n4, std::uint64_t seed, std::size_t node_budget);
SuiteResult verify_skew(int max_n);
SuiteResult verify_bruhat_covers(int max_n);

}  // namespace qbruhat
