#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qbruhat {

/// Largest supported n for S_n. Factorial enumerations stay tractable.
inline constexpr int kMaxN = 8;

/// An element of S_n in one-line notation. All public indices and values
/// are 1-based; composition is (u*v)(i) = u(v(i)), so w * s_ij swaps the
/// entries in positions i and j of w.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);
  static Permutation longest(int n);
  /// The transposition s_ij, 1 <= i < j <= n.
  static Permutation transposition(int n, int i, int j);
  static Permutation simple(int n, int k) { return transposition(n, k, k + 1); }
  static Permutation from_one_line(std::span<const int> values);
  static Permutation from_one_line(std::initializer_list<int> values) {
    return from_one_line(std::span<const int>(values.begin(), values.size()));
  }
  /// Inverse of code(): c_i = #{j > i : w(j) < w(i)} with 0 <= c_i <= n-i.
  static Permutation from_code(int n, std::span<const int> code);
  /// Accepts "231" (n <= 9) or "10,2,1,..." comma-separated.
  static Permutation parse(std::string_view text);

  int size() const { return n_; }
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)] + 1; }
  std::vector<int> one_line() const;

  Permutation inverse() const;
  /// w * s_ij.
  Permutation times_transposition(int i, int j) const;
  int length() const;
  std::vector<int> code() const;
  std::vector<int> descents() const;
  /// Strip the smallest descent repeatedly: w = (w s_k) s_k.
  std::vector<int> reduced_word() const;
  bool is_identity() const;
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxN> entries_{};  // 0-based values

  friend Permutation compose(const Permutation& u, const Permutation& v);
  friend struct std::hash<Permutation>;
};

Permutation compose(const Permutation& u, const Permutation& v);
inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

inline int length(const Permutation& w) { return w.length(); }
inline std::vector<int> code(const Permutation& w) { return w.code(); }
inline std::vector<int> descents(const Permutation& w) { return w.descents(); }
inline std::vector<int> reduced_word(const Permutation& w) { return w.reduced_word(); }
inline Permutation longest_element(int n) { return Permutation::longest(n); }

/// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

/// Product s_{k_1} * ... * s_{k_m} in S_n.
Permutation from_word(int n, std::span<const int> word);

}  // namespace qbruhat

template <>
struct std::hash<qbruhat::Permutation> {
  std::size_t operator()(const qbruhat::Permutation& w) const noexcept {
    std::size_t h = w.n_;
    for (int i = 0; i < w.n_; ++i) h = h * 31 + w.entries_[static_cast<std::size_t>(i)];
    return h;
  }
};
