#include "qbruhat/root_system.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "qbruhat/error.hpp"

namespace qbruhat {

namespace {

std::vector<std::vector<int>> gram_matrix(char type, int rank) {
  std::vector<std::vector<int>> g(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  auto at = [&](int i, int j) -> int& { return g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  auto link = [&](int i, int j, int v) { at(i, j) = at(j, i) = v; };
  switch (type) {
    case 'A':
      if (rank < 1 || rank > 7) break;
      for (int i = 0; i < rank; ++i) at(i, i) = 2;
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -1);
      return g;
    case 'B':  // alpha_1..alpha_{r-1} long, alpha_r short
      if (rank < 2 || rank > 3) break;
      for (int i = 0; i + 1 < rank; ++i) at(i, i) = 4;
      at(rank - 1, rank - 1) = 2;
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -2);
      return g;
    case 'C':  // alpha_1..alpha_{r-1} short, alpha_r long
      if (rank < 2 || rank > 3) break;
      for (int i = 0; i + 1 < rank; ++i) at(i, i) = 2;
      at(rank - 1, rank - 1) = 4;
      for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1);
      link(rank - 2, rank - 1, -2);
      return g;
    case 'G':  // alpha_1 short, alpha_2 long
      if (rank != 2) break;
      at(0, 0) = 2;
      at(1, 1) = 6;
      link(0, 1, -3);
      return g;
    default:
      break;
  }
  throw std::invalid_argument(std::string("unsupported root system ") + type + std::to_string(rank));
}

}  // namespace

RootSystem RootSystem::parse(std::string_view label) {
  if (label.size() != 2 || label[1] < '1' || label[1] > '9')
    throw std::invalid_argument("bad root system label '" + std::string(label) + "'");
  return build(label[0], label[1] - '0');
}

RootSystem RootSystem::build(char type, int rank) {
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.gram_ = gram_matrix(type, rank);
  rs.cartan_.assign(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank)));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      rs.cartan_[ui][uj] = 2 * rs.gram_[ui][uj] / rs.gram_[uj][uj];
    }

  // Close the simple roots under simple reflections, keeping positive roots.
  std::vector<RootVector> positive;
  std::map<RootVector, int> seen;
  std::deque<RootVector> queue;
  for (int i = 0; i < rank; ++i) {
    RootVector e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.emplace(e, static_cast<int>(positive.size()));
    positive.push_back(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const RootVector beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      int dot = 0;
      for (int j = 0; j < rank; ++j) dot += beta[static_cast<std::size_t>(j)] * rs.gram_[static_cast<std::size_t>(j)][ui];
      const int c = 2 * dot / rs.gram_[ui][ui];
      RootVector image = beta;
      image[ui] -= c;
      if (std::any_of(image.begin(), image.end(), [](int v) { return v < 0; })) continue;
      if (seen.contains(image)) continue;
      seen.emplace(image, static_cast<int>(positive.size()));
      positive.push_back(image);
      queue.push_back(image);
    }
  }
  // Order positive roots by height then lexicographically (simple roots first).
  std::stable_sort(positive.begin(), positive.end(), [](const RootVector& a, const RootVector& b) {
    int ha = 0, hb = 0;
    for (int v : a) ha += v;
    for (int v : b) hb += v;
    if (ha != hb) return ha < hb;
    return a > b;
  });

  const int n = static_cast<int>(positive.size());
  rs.roots_ = positive;
  for (const auto& r : positive) {
    RootVector neg = r;
    for (int& v : neg) v = -v;
    rs.roots_.push_back(neg);
  }
  for (int i = 0; i < 2 * n; ++i) rs.index_.emplace(rs.roots_[static_cast<std::size_t>(i)], i);

  for (const auto& alpha : positive) {
    const int norm = rs.inner(alpha, alpha);
    QDegree h(rank);
    for (int i = 0; i < rank; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const int num = alpha[ui] * rs.gram_[ui][ui];
      if (num % norm != 0) throw InvariantViolation("non-integral coroot coordinate");
      h.set(i, num / norm);
    }
    rs.coroots_.push_back(h);
  }
  return rs;
}

int RootSystem::index_of(const RootVector& r) const {
  const auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::negate(int signed_index) const {
  const int n = positive_count();
  return signed_index < n ? signed_index + n : signed_index - n;
}

int RootSystem::inner(const RootVector& a, const RootVector& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      s += a[static_cast<std::size_t>(i)] * gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
           b[static_cast<std::size_t>(j)];
  return s;
}

int RootSystem::pairing(const RootVector& beta, int positive_index) const {
  const RootVector& alpha = root(positive_index);
  const int num = 2 * inner(beta, alpha);
  const int den = inner(alpha, alpha);
  if (num % den != 0) throw InvariantViolation("non-integral root pairing");
  return num / den;
}

RootVector RootSystem::reflect(int positive_index, const RootVector& beta) const {
  const int c = pairing(beta, positive_index);
  RootVector out = beta;
  const RootVector& alpha = root(positive_index);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * alpha[i];
  return out;
}

QDegree coroot_qdegree(const RootSystem& rs, int positive_index) {
  if (positive_index < 0 || positive_index >= rs.positive_count())
    throw std::invalid_argument("coroot_qdegree: not a positive root index");
  return rs.coroot(positive_index);
}

WeylGroup::WeylGroup(RootSystem rs, std::size_t bound) : rs_(std::move(rs)) {
  const int n = rs_.positive_count();
  const int total = 2 * n;
  for (int a = 0; a < n; ++a) {
    std::vector<int> action(static_cast<std::size_t>(total));
    for (int r = 0; r < total; ++r) {
      const int image = rs_.index_of(rs_.reflect(a, rs_.root(r)));
      if (image < 0) throw InvariantViolation("reflection left the root system");
      action[static_cast<std::size_t>(r)] = image;
    }
    reflections_.push_back(std::move(action));
  }

  auto compose = [&](const std::vector<int>& lhs, const std::vector<int>& rhs) {
    std::vector<int> out(rhs.size());
    for (std::size_t r = 0; r < rhs.size(); ++r) out[r] = lhs[static_cast<std::size_t>(rhs[r])];
    return out;
  };
  auto length_of = [&](const std::vector<int>& action) {
    int len = 0;
    for (int r = 0; r < n; ++r)
      if (!rs_.is_positive(action[static_cast<std::size_t>(r)])) ++len;
    return len;
  };

  std::vector<int> id(static_cast<std::size_t>(total));
  for (int r = 0; r < total; ++r) id[static_cast<std::size_t>(r)] = r;
  elements_.emplace_back(id, std::vector<int>{}, 0);
  index_.emplace(id, 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (int i = 0; i < rs_.rank(); ++i) {
      auto action = compose(elements_[head].action(), reflections_[static_cast<std::size_t>(i)]);
      if (index_.contains(action)) continue;
      if (elements_.size() >= bound)
        throw BoundExceeded("Weyl group of " + rs_.label() + " exceeds bound " + std::to_string(bound));
      auto word = elements_[head].word();
      word.push_back(i + 1);
      const int len = length_of(action);
      index_.emplace(action, elements_.size());
      elements_.emplace_back(std::move(action), std::move(word), len);
    }
  }

  right_reflection_.resize(elements_.size());
  for (std::size_t w = 0; w < elements_.size(); ++w) {
    if (elements_[w].length() > elements_[longest_].length()) longest_ = w;
    for (int a = 0; a < n; ++a)
      right_reflection_[w].push_back(index_of(compose(elements_[w].action(), reflections_[static_cast<std::size_t>(a)])));
  }
}

std::size_t WeylGroup::index_of(const std::vector<int>& action) const {
  const auto it = index_.find(action);
  if (it == index_.end()) throw std::out_of_range("action is not a Weyl group element");
  return it->second;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  const auto& lhs = elements_[a].action();
  const auto& rhs = elements_[b].action();
  std::vector<int> out(rhs.size());
  for (std::size_t r = 0; r < rhs.size(); ++r) out[r] = lhs[static_cast<std::size_t>(rhs[r])];
  return index_of(out);
}

std::size_t WeylGroup::from_word(std::span<const int> word) const {
  std::size_t w = identity();
  for (int i : word) {
    if (i < 1 || i > rs_.rank()) throw std::invalid_argument("generator index out of range");
    w = reflect_right(w, i - 1);
  }
  return w;
}

std::string WeylGroup::name(std::size_t w) const {
  const auto& word = elements_[w].word();
  if (word.empty()) return "id";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

std::size_t WeylGroup::parse(std::string_view text) const {
  if (text == "id" || text == "e") return identity();
  std::vector<int> word;
  for (char ch : text) {
    if (ch == 's') continue;
    if (ch < '1' || ch > '9') throw std::invalid_argument("bad Weyl group word '" + std::string(text) + "'");
    word.push_back(ch - '0');
  }
  return from_word(word);
}

}  // namespace qbruhat
