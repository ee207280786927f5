#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qbruhat {

inline constexpr int kMaxRank = 8;

/// Exponent vector d of the monomial q^d = q_1^{d_1} ... q_r^{d_r}.
/// Ordering is lexicographic on (d_1, ..., d_r).
class QDegree {
 public:
  QDegree() = default;
  explicit QDegree(int rank);
  static QDegree from(std::span<const int> exponents);
  static QDegree from(std::initializer_list<int> exponents) {
    return from(std::span<const int>(exponents.begin(), exponents.size()));
  }
  /// e_i + e_{i+1} + ... + e_{j-1} (1-based), the type A weight q_ij.
  static QDegree range(int rank, int i, int j);

  int rank() const { return rank_; }
  int operator[](int i) const { return d_[static_cast<std::size_t>(i)]; }
  void set(int i, int value);
  int total() const;
  bool is_zero() const { return total() == 0; }
  std::vector<int> values() const;
  QDegree reversed() const;

  QDegree& operator+=(const QDegree& other);
  friend QDegree operator+(QDegree a, const QDegree& b) { return a += b; }

  /// "(1,0,2)"
  std::string to_string() const;

  friend auto operator<=>(const QDegree&, const QDegree&) = default;
  friend bool operator==(const QDegree&, const QDegree&) = default;

 private:
  std::uint8_t rank_ = 0;
  std::array<std::int16_t, kMaxRank> d_{};
};

/// q^a divides q^b.
bool divides(const QDegree& a, const QDegree& b);

/// Orders by total degree |d| first, then lexicographically.
struct GradedLess {
  bool operator()(const QDegree& a, const QDegree& b) const {
    const int ta = a.total(), tb = b.total();
    return ta != tb ? ta < tb : a < b;
  }
};

}  // namespace qbruhat
