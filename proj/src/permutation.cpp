#include "qbruhat/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace qbruhat {

namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("permutation size " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxN));
}

}  // namespace

Permutation Permutation::identity(int n) {
  check_size(n);
  Permutation w;
  w.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) w.entries_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return w;
}

Permutation Permutation::longest(int n) {
  Permutation w = identity(n);
  std::reverse(w.entries_.begin(), w.entries_.begin() + n);
  return w;
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j > n || i >= j)
    throw std::invalid_argument("transposition needs 1 <= i < j <= n");
  return identity(n).times_transposition(i, j);
}

Permutation Permutation::from_one_line(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  check_size(n);
  Permutation w;
  w.n_ = static_cast<std::uint8_t>(n);
  std::array<bool, kMaxN> seen{};
  for (int i = 0; i < n; ++i) {
    const int v = values[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v - 1)] = true;
    w.entries_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v - 1);
  }
  return w;
}

Permutation Permutation::from_code(int n, std::span<const int> code) {
  check_size(n);
  if (static_cast<int>(code.size()) > n)
    throw std::invalid_argument("code longer than n");
  std::vector<int> remaining(static_cast<std::size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<int> values;
  for (int i = 0; i < n; ++i) {
    const int c = i < static_cast<int>(code.size()) ? code[static_cast<std::size_t>(i)] : 0;
    if (c < 0 || c > n - 1 - i) throw std::invalid_argument("code entry out of range");
    values.push_back(remaining[static_cast<std::size_t>(c)]);
    remaining.erase(remaining.begin() + c);
  }
  return from_one_line(values);
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    while (!text.empty()) {
      const auto comma = text.find(',');
      const auto token = text.substr(0, comma);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw std::invalid_argument("bad permutation entry '" + std::string(token) + "'");
      values.push_back(v);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument("bad permutation '" + std::string(text) + "'");
      values.push_back(ch - '0');
    }
  }
  if (values.empty()) throw std::invalid_argument("empty permutation");
  return from_one_line(values);
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) out.push_back((*this)(i));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation w = *this;
  for (int i = 0; i < n_; ++i) w.entries_[entries_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return w;
}

Permutation Permutation::times_transposition(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw std::invalid_argument("transposition index out of range");
  Permutation w = *this;
  std::swap(w.entries_[static_cast<std::size_t>(i - 1)], w.entries_[static_cast<std::size_t>(j - 1)]);
  return w;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (entries_[static_cast<std::size_t>(i)] > entries_[static_cast<std::size_t>(j)]) ++inv;
  return inv;
}

std::vector<int> Permutation::code() const {
  std::vector<int> c(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (entries_[static_cast<std::size_t>(j)] < entries_[static_cast<std::size_t>(i)])
        ++c[static_cast<std::size_t>(i)];
  return c;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int k = 1; k < n_; ++k)
    if (entries_[static_cast<std::size_t>(k - 1)] > entries_[static_cast<std::size_t>(k)]) d.push_back(k);
  return d;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation w = *this;
  while (true) {
    const auto d = w.descents();
    if (d.empty()) break;
    word.push_back(d.front());
    w = w.times_transposition(d.front(), d.front() + 1);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (entries_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 1; i <= n_; ++i) {
    if (n_ >= 10 && i > 1) s += ',';
    s += std::to_string((*this)(i));
  }
  return s;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.n_ != v.n_) throw std::invalid_argument("compose: size mismatch");
  Permutation w = u;
  for (int i = 0; i < u.n_; ++i)
    w.entries_[static_cast<std::size_t>(i)] = u.entries_[v.entries_[static_cast<std::size_t>(i)]];
  return w;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(values));
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

Permutation from_word(int n, std::span<const int> word) {
  Permutation w = Permutation::identity(n);
  for (int k : word) w = w.times_transposition(k, k + 1);
  return w;
}

}  // namespace qbruhat
