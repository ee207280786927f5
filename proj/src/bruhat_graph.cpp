#include "qbruhat/bruhat_graph.hpp"

#include <algorithm>
#include <deque>
#include <tuple>
#include <functional>
#include <stdexcept>

#include "qbruhat/error.hpp"

namespace qbruhat {

QBGraph::QBGraph(std::string system, int rank, std::vector<std::string> names, std::vector<int> lengths,
                 std::vector<QEdge> edges, std::vector<RootRecord> roots, int n)
    : system_(std::move(system)),
      rank_(rank),
      names_(std::move(names)),
      lengths_(std::move(lengths)),
      out_(names_.size()),
      roots_(std::move(roots)) {
  if (lengths_.size() != names_.size()) throw std::invalid_argument("QBGraph: lengths/names mismatch");
  for (std::size_t v = 0; v < names_.size(); ++v)
    if (!by_name_.emplace(names_[v], static_cast<int>(v)).second)
      throw std::invalid_argument("QBGraph: duplicate vertex name " + names_[v]);
  for (auto& e : edges) {
    if (e.source < 0 || e.target < 0 || e.source >= vertex_count() || e.target >= vertex_count())
      throw std::invalid_argument("QBGraph: edge endpoint out of range");
    if (e.weight.rank() != rank_) throw std::invalid_argument("QBGraph: edge weight rank mismatch");
    out_[static_cast<std::size_t>(e.source)].push_back(e);
  }
  for (auto& list : out_) std::sort(list.begin(), list.end());
  edge_count_ = edges.size();
  if (n > 0) {
    n_ = n;
    for (const auto& name : names_) {
      perms_.push_back(Permutation::parse(name));
      if (perms_.back().size() != n) throw std::invalid_argument("QBGraph: vertex is not in S_n");
    }
  }
}

std::vector<QEdge> QBGraph::edges() const {
  std::vector<QEdge> all;
  for (const auto& list : out_) all.insert(all.end(), list.begin(), list.end());
  return all;
}

std::optional<QEdge> QBGraph::edge(int source, int target) const {
  for (const auto& e : out_edges(source))
    if (e.target == target) return e;
  return std::nullopt;
}

int QBGraph::vertex(const std::string& name) const {
  const auto it = by_name_.find(name);
  if (it == by_name_.end()) throw std::out_of_range("no vertex named '" + name + "' in " + system_);
  return it->second;
}

int QBGraph::vertex(const Permutation& w) const {
  if (!on_permutations() || w.size() != n_) throw std::invalid_argument("permutation does not index this graph");
  return vertex(w.to_string());
}

int QBGraph::longest() const {
  int best = 0;
  for (int v = 0; v < vertex_count(); ++v)
    if (length(v) > length(best)) best = v;
  return best;
}

QBGraph build_graph(int n) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("build_graph: n out of range");
  const auto perms = all_permutations(n);
  std::map<Permutation, int> index;
  std::vector<std::string> names;
  std::vector<int> lengths;
  for (const auto& w : perms) {
    index.emplace(w, static_cast<int>(names.size()));
    names.push_back(w.to_string());
    lengths.push_back(w.length());
  }
  const int rank = n - 1;
  std::vector<RootRecord> roots;
  std::map<std::pair<int, int>, int> root_of_pair;
  if (n >= 2) {
    const RootSystem rs = RootSystem::build('A', rank);
    for (int a = 0; a < rs.positive_count(); ++a) {
      const auto& r = rs.root(a);
      int i = 0;
      while (r[static_cast<std::size_t>(i)] == 0) ++i;
      int j = i;
      while (j < rank && r[static_cast<std::size_t>(j)] == 1) ++j;
      root_of_pair.emplace(std::make_pair(i + 1, j + 1), a);
      roots.push_back({r, rs.coroot(a)});
    }
  }
  std::vector<QEdge> edges;
  for (const auto& w : perms) {
    const int lw = w.length();
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const Permutation v = w.times_transposition(i, j);
        const int lv = v.length();
        const bool up = lv == lw + 1;
        if (!up && lv != lw + 1 - 2 * (j - i)) continue;
        const QDegree weight = up ? QDegree(rank) : QDegree::range(rank, i, j);
        edges.push_back({index.at(w), index.at(v), EdgeLabel{root_of_pair.at({i, j}), i, j}, weight});
      }
  }
  return QBGraph("A" + std::to_string(rank), rank, std::move(names), std::move(lengths), std::move(edges),
                 std::move(roots), n);
}

QBGraph build_graph(const WeylGroup& group) {
  const RootSystem& rs = group.root_system();
  std::vector<std::string> names;
  std::vector<int> lengths;
  for (std::size_t w = 0; w < group.size(); ++w) {
    names.push_back(group.name(w));
    lengths.push_back(group[w].length());
  }
  std::vector<RootRecord> roots;
  for (int a = 0; a < rs.positive_count(); ++a) roots.push_back({rs.root(a), rs.coroot(a)});
  std::vector<QEdge> edges;
  for (std::size_t w = 0; w < group.size(); ++w) {
    const int lw = group[w].length();
    for (int a = 0; a < rs.positive_count(); ++a) {
      const std::size_t v = group.reflect_right(w, a);
      const int lv = group[v].length();
      const bool up = lv == lw + 1;
      if (!up && lv != lw + 1 - 2 * rs.height(a)) continue;
      const QDegree weight = up ? QDegree(rs.rank()) : rs.coroot(a);
      edges.push_back({static_cast<int>(w), static_cast<int>(v), EdgeLabel{a, 0, 0}, weight});
    }
  }
  return QBGraph(rs.label(), rs.rank(), std::move(names), std::move(lengths), std::move(edges), std::move(roots));
}

QDegree QPath::weight() const {
  QDegree d(rank_);
  for (const auto& e : edges_) d += e.weight;
  return d;
}

std::vector<std::pair<int, int>> QPath::labels() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : edges_) {
    if (!e.label.is_transposition()) throw std::invalid_argument("path labels are not transpositions");
    out.emplace_back(e.label.i, e.label.j);
  }
  return out;
}

void QPath::push(const QEdge& e) {
  if (e.source != end()) throw std::invalid_argument("QPath: edge is not incident to the path end");
  edges_.push_back(e);
}

ShortestPaths shortest_paths_from(const QBGraph& g, int source) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  ShortestPaths sp{std::vector<int>(n, -1), std::vector<std::set<QDegree>>(n)};
  std::vector<int> order;
  std::deque<int> queue{source};
  sp.distance[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    order.push_back(x);
    for (const auto& e : g.out_edges(x))
      if (sp.distance[static_cast<std::size_t>(e.target)] < 0) {
        sp.distance[static_cast<std::size_t>(e.target)] = sp.distance[static_cast<std::size_t>(x)] + 1;
        queue.push_back(e.target);
      }
  }
  sp.weights[static_cast<std::size_t>(source)].insert(QDegree(g.rank()));
  for (int x : order)
    for (const auto& e : g.out_edges(x)) {
      const auto t = static_cast<std::size_t>(e.target);
      if (sp.distance[t] != sp.distance[static_cast<std::size_t>(x)] + 1) continue;
      for (const auto& w : sp.weights[static_cast<std::size_t>(x)]) sp.weights[t].insert(w + e.weight);
    }
  return sp;
}

MinDegree min_degree(const QBGraph& g, int u, int v) {
  const auto sp = shortest_paths_from(g, u);
  const auto uv = static_cast<std::size_t>(v);
  if (sp.distance[uv] < 0)
    throw InvariantViolation("min_degree: " + g.name(v) + " unreachable from " + g.name(u));
  if (sp.weights[uv].size() != 1)
    throw InvariantViolation("min_degree: shortest paths " + g.name(u) + " -> " + g.name(v) +
                             " have different weights");
  return {*sp.weights[uv].begin(), sp.distance[uv]};
}

MinDegree min_degree(const QBGraph& g, const Permutation& u, const Permutation& v) {
  return min_degree(g, g.vertex(u), g.vertex(v));
}

bool strongly_connected(const QBGraph& g) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    const auto sp = shortest_paths_from(g, u);
    for (int d : sp.distance)
      if (d < 0) return false;
  }
  return true;
}

std::vector<std::vector<std::set<QDegree>>> walk_weights(const QBGraph& g, int source, int max_length) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<std::set<QDegree>>> layers(1, std::vector<std::set<QDegree>>(n));
  layers[0][static_cast<std::size_t>(source)].insert(QDegree(g.rank()));
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::set<QDegree>> next(n);
    const auto& prev = layers.back();
    for (int x = 0; x < g.vertex_count(); ++x)
      for (const auto& e : g.out_edges(x))
        for (const auto& w : prev[static_cast<std::size_t>(x)]) next[static_cast<std::size_t>(e.target)].insert(w + e.weight);
    layers.push_back(std::move(next));
  }
  return layers;
}

namespace {

class NodeCounter {
 public:
  explicit NodeCounter(std::size_t budget) : budget_(budget) {}
  void tick() {
    if (++count_ > budget_)
      throw BoundExceeded("path enumeration exceeded node budget " + std::to_string(budget_));
  }

 private:
  std::size_t budget_;
  std::size_t count_ = 0;
};

// Forward state of the admissibility search: the current k and the set of
// b's already paired with it (bit b).
struct KState {
  int k;
  std::uint32_t used;
  friend auto operator<=>(const KState&, const KState&) = default;
};

std::set<KState> admissible_step(const std::set<KState>& states, int a, int b) {
  std::set<KState> next;
  for (const auto& s : states)
    for (int k = std::max(s.k, a); k < b; ++k) {
      if (k == s.k) {
        if (s.used & (1u << b)) continue;
        next.insert({k, s.used | (1u << b)});
      } else {
        next.insert({k, 1u << b});
      }
    }
  return next;
}

}  // namespace

std::vector<QPath> enumerate_paths(const QBGraph& g, int u, int v, int max_length, std::size_t node_budget) {
  if (max_length < 0) throw std::invalid_argument("enumerate_paths: negative max_length");
  NodeCounter counter(node_budget);
  std::vector<QPath> out;
  QPath path(u, g.rank());
  std::function<void()> dfs = [&] {
    counter.tick();
    if (path.end() == v) out.push_back(path);
    if (static_cast<int>(path.length()) == max_length) return;
    for (const auto& e : g.out_edges(path.end())) {
      path.push(e);
      dfs();
      path.pop();
    }
  };
  dfs();
  return out;
}

bool is_admissible(std::span<const std::pair<int, int>> labels) {
  const std::size_t l = labels.size();
  std::set<std::tuple<std::size_t, int, std::uint32_t>> failed;
  // Backtrack over k-assignments in position order.
  std::function<bool(std::size_t, int, std::uint32_t)> search = [&](std::size_t pos, int k, std::uint32_t used) {
    if (pos == l) return true;
    if (failed.contains({pos, k, used})) return false;
    const auto [a, b] = labels[pos];
    if (a < 1 || b <= a || b > 31) throw std::invalid_argument("is_admissible: bad label");
    for (int kk = std::max(k, a); kk < b; ++kk) {
      if (kk == k) {
        if (used & (1u << b)) continue;
        if (search(pos + 1, k, used | (1u << b))) return true;
      } else if (search(pos + 1, kk, 1u << b)) {
        return true;
      }
    }
    failed.insert({pos, k, used});
    return false;
  };
  return search(0, 0, 0);
}

bool is_admissible(const QPath& path) {
  const auto labels = path.labels();
  return is_admissible(labels);
}

bool is_y_beta_admissible(std::span<const std::pair<int, int>> labels, std::span<const int> beta) {
  std::size_t total = 0;
  for (int b : beta) {
    if (b < 0) throw std::invalid_argument("is_y_beta_admissible: negative beta");
    total += static_cast<std::size_t>(b);
  }
  if (total != labels.size()) throw std::invalid_argument("is_y_beta_admissible: |beta| != path length");
  std::size_t pos = 0;
  for (std::size_t seg = 0; seg < beta.size(); ++seg) {
    const int k = static_cast<int>(seg) + 1;
    std::uint32_t used = 0;
    int last_a = 0;
    for (int t = 0; t < beta[seg]; ++t, ++pos) {
      const auto [a, b] = labels[pos];
      if (a < last_a || a > k || b <= k || (used & (1u << b))) return false;
      used |= 1u << b;
      last_a = a;
    }
  }
  return true;
}

bool is_y_beta_admissible(const QPath& path, std::span<const int> beta) {
  const auto labels = path.labels();
  return is_y_beta_admissible(labels, beta);
}

std::set<QDegree> admissible_weight_support(const QBGraph& g, int u, int v, std::size_t node_budget) {
  if (!g.on_permutations()) throw std::invalid_argument("admissible_weight_support needs a graph on S_n");
  NodeCounter counter(node_budget);
  std::set<QDegree> support;
  std::function<void(int, const QDegree&, const std::set<KState>&)> dfs = [&](int x, const QDegree& weight,
                                                                               const std::set<KState>& states) {
    counter.tick();
    if (x == v) support.insert(weight);
    for (const auto& e : g.out_edges(x)) {
      auto next = admissible_step(states, e.label.i, e.label.j);
      if (next.empty()) continue;
      dfs(e.target, weight + e.weight, next);
    }
  };
  dfs(u, QDegree(g.rank()), {KState{0, 0}});
  return support;
}

std::set<QDegree> admissible_weight_support(const QBGraph& g, const Permutation& u, const Permutation& v,
                                            std::size_t node_budget) {
  return admissible_weight_support(g, g.vertex(u), g.vertex(v), node_budget);
}

Poly y_admissible_path_sum(const QBGraph& g, int u, int v, std::size_t node_budget) {
  if (!g.on_permutations()) throw std::invalid_argument("y_admissible_path_sum needs a graph on S_n");
  const int n = g.n();
  NodeCounter counter(node_budget);
  Poly sum;
  std::vector<int> beta(static_cast<std::size_t>(n), 0);  // 1-based segments
  std::function<void(int, const QDegree&, int, int, std::uint32_t)> dfs = [&](int x, const QDegree& weight, int seg,
                                                                             int last_a, std::uint32_t used) {
    counter.tick();
    if (x == v) {
      Monomial m;
      for (int k = 1; k < n; ++k) m.set_exponent(Var::y, k, n - k - beta[static_cast<std::size_t>(k)]);
      for (int i = 0; i < weight.rank(); ++i) m.set_exponent(Var::q, i + 1, weight[i]);
      sum.add_term(m, 1);
    }
    for (const auto& e : g.out_edges(x)) {
      const int a = e.label.i, b = e.label.j;
      // Continue the current segment.
      if (seg >= 1 && a >= last_a && a <= seg && b > seg && !(used & (1u << b))) {
        ++beta[static_cast<std::size_t>(seg)];
        dfs(e.target, weight + e.weight, seg, a, used | (1u << b));
        --beta[static_cast<std::size_t>(seg)];
      }
      // Open a later segment.
      for (int k = std::max(seg + 1, a); k < b && k < n; ++k) {
        ++beta[static_cast<std::size_t>(k)];
        dfs(e.target, weight + e.weight, k, a, 1u << b);
        --beta[static_cast<std::size_t>(k)];
      }
    }
  };
  dfs(u, QDegree(g.rank()), 0, 0, 0);
  return sum;
}

}  // namespace qbruhat
