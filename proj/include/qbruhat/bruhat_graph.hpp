#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qbruhat/permutation.hpp"
#include "qbruhat/poly.hpp"
#include "qbruhat/qdegree.hpp"
#include "qbruhat/root_system.hpp"

namespace qbruhat {

inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

/// Edge label: a positive root index, plus the transposition (i, j) for
/// graphs on S_n (i = j = 0 otherwise).
struct EdgeLabel {
  int root = -1;
  int i = 0;
  int j = 0;
  bool is_transposition() const { return i > 0; }
  friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

struct QEdge {
  int source = 0;
  int target = 0;
  EdgeLabel label;
  QDegree weight;  // zero for up-edges, q^{h_alpha} for down-edges
  bool quantum() const { return !weight.is_zero(); }
  friend auto operator<=>(const QEdge&, const QEdge&) = default;
  friend bool operator==(const QEdge&, const QEdge&) = default;
};

struct RootRecord {
  RootVector root;
  QDegree coroot;
  friend bool operator==(const RootRecord&, const RootRecord&) = default;
};

/// The quantum Bruhat graph on a Weyl group. Vertices are 0..N-1; vertex 0
/// is the identity. Immutable after construction.
class QBGraph {
 public:
  /// With n > 0 the vertex names are parsed as the permutations of S_n.
  QBGraph(std::string system, int rank, std::vector<std::string> names, std::vector<int> lengths,
          std::vector<QEdge> edges, std::vector<RootRecord> roots = {}, int n = 0);

  const std::string& system() const { return system_; }
  int rank() const { return rank_; }
  int vertex_count() const { return static_cast<int>(names_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
  int length(int v) const { return lengths_[static_cast<std::size_t>(v)]; }
  const std::vector<QEdge>& out_edges(int v) const { return out_[static_cast<std::size_t>(v)]; }
  std::vector<QEdge> edges() const;
  std::optional<QEdge> edge(int source, int target) const;
  const std::vector<RootRecord>& roots() const { return roots_; }
  /// Vertex with the given name; throws std::out_of_range.
  int vertex(const std::string& name) const;

  /// For graphs on S_n (built by build_graph(n)), the permutation data.
  bool on_permutations() const { return n_ > 0; }
  int n() const { return n_; }
  const Permutation& permutation(int v) const { return perms_[static_cast<std::size_t>(v)]; }
  int vertex(const Permutation& w) const;
  int identity() const { return 0; }
  int longest() const;

  friend bool operator==(const QBGraph& a, const QBGraph& b) {
    return a.system_ == b.system_ && a.rank_ == b.rank_ && a.names_ == b.names_ && a.lengths_ == b.lengths_ &&
           a.out_ == b.out_ && a.roots_ == b.roots_ && a.n_ == b.n_;
  }

 private:
  std::string system_;
  int rank_;
  std::vector<std::string> names_;
  std::vector<int> lengths_;
  std::vector<std::vector<QEdge>> out_;
  std::size_t edge_count_ = 0;
  std::vector<RootRecord> roots_;
  std::map<std::string, int> by_name_;
  int n_ = 0;
  std::vector<Permutation> perms_;
};

/// Gamma_n on S_n, edges labeled by transpositions (i, j), weights q_ij.
QBGraph build_graph(int n);
/// Gamma_Phi on the Weyl group of a root system.
QBGraph build_graph(const WeylGroup& group);

/// A directed walk; vertices may repeat.
class QPath {
 public:
  QPath(int start, int rank) : start_(start), rank_(rank) {}

  int start() const { return start_; }
  int end() const { return edges_.empty() ? start_ : edges_.back().target; }
  std::size_t length() const { return edges_.size(); }
  const std::vector<QEdge>& edges() const { return edges_; }
  QDegree weight() const;
  /// (a_1, b_1), ..., (a_l, b_l); requires transposition labels.
  std::vector<std::pair<int, int>> labels() const;

  /// Throws std::invalid_argument if the edge does not leave end().
  void push(const QEdge& e);
  void pop() { edges_.pop_back(); }

 private:
  int start_;
  int rank_;
  std::vector<QEdge> edges_;
};

struct MinDegree {
  QDegree degree;
  int length = 0;
  friend bool operator==(const MinDegree&, const MinDegree&) = default;
};

/// Breadth-first distances from `source`, with the set of weights of all
/// shortest paths to each vertex (distance -1 when unreachable).
struct ShortestPaths {
  std::vector<int> distance;
  std::vector<std::set<QDegree>> weights;
};
ShortestPaths shortest_paths_from(const QBGraph& g, int source);

/// d_min(u, v) and l(u, v). Throws InvariantViolation if v is unreachable
/// or shortest paths disagree in weight.
MinDegree min_degree(const QBGraph& g, int u, int v);
MinDegree min_degree(const QBGraph& g, const Permutation& u, const Permutation& v);

bool strongly_connected(const QBGraph& g);

/// layers[L][v]: weights of all walks of length exactly L from `source` to v.
std::vector<std::vector<std::set<QDegree>>> walk_weights(const QBGraph& g, int source, int max_length);

/// Every walk u -> v with at most max_length edges.
std::vector<QPath> enumerate_paths(const QBGraph& g, int u, int v, int max_length,
                                   std::size_t node_budget = kDefaultNodeBudget);

/// Exists k_1 <= ... <= k_l with a_i <= k_i < b_i and the pairs (k_i, b_i)
/// distinct.
bool is_admissible(const QPath& path);
bool is_admissible(std::span<const std::pair<int, int>> labels);

/// Splits into consecutive segments of lengths beta_1, ..., beta_{n-1},
/// segment k having weakly increasing a's, a <= k < b and distinct b's.
bool is_y_beta_admissible(const QPath& path, std::span<const int> beta);
bool is_y_beta_admissible(std::span<const std::pair<int, int>> labels, std::span<const int> beta);

/// Weights of admissible walks u -> v (all such walks have at most
/// n(n-1)/2 edges).
std::set<QDegree> admissible_weight_support(const QBGraph& g, int u, int v,
                                            std::size_t node_budget = kDefaultNodeBudget);
std::set<QDegree> admissible_weight_support(const QBGraph& g, const Permutation& u, const Permutation& v,
                                            std::size_t node_budget = kDefaultNodeBudget);

/// sum_beta y^{delta - beta} sum_P q^{weight(P)} over y^beta-admissible
/// walks P from u to v.
Poly y_admissible_path_sum(const QBGraph& g, int u, int v, std::size_t node_budget = kDefaultNodeBudget);

}  // namespace qbruhat
