#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "qbruhat/permutation.hpp"

namespace qbruhat {

/// Variable blocks of the polynomial alphabet: x_1..x_n, y_1..y_n and
/// q_1..q_{n-1}.
enum class Var : std::uint8_t { x = 0, y = 1, q = 2 };

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Exponent vector over the fixed alphabet. Ordering is lexicographic with
/// x_1 > x_2 > ... > y_1 > ... > q_1 > ...
class Monomial {
 public:
  static constexpr int kSlots = 3 * kMaxN;

  Monomial() = default;
  /// v_index^power, index 1-based.
  static Monomial variable(Var block, int index, int power = 1);

  int exponent(Var block, int index) const { return e_[slot(block, index)]; }
  void set_exponent(Var block, int index, int power);
  int degree() const;
  int block_degree(Var block) const;
  /// The sub-monomial restricted to one block.
  Monomial restrict_to(Var block) const;
  /// The sub-monomial with one block removed.
  Monomial without(Var block) const;
  bool divisible_by(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires divisible_by.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  static std::size_t slot(Var block, int index);
  std::array<std::uint8_t, kSlots> e_{};
};

/// Sparse multivariate polynomial with exact std::int64_t coefficients.
/// Zero coefficients are never stored; overflow throws OverflowError.
class Poly {
 public:
  using Terms = std::map<Monomial, std::int64_t>;

  Poly() = default;
  Poly(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  static Poly variable(Var block, int index) { return monomial(Monomial::variable(block, index)); }
  static Poly monomial(const Monomial& m, std::int64_t coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t coefficient(const Monomial& m) const;
  /// Lex-greatest monomial; requires !is_zero().
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  std::int64_t leading_coefficient() const { return terms_.rbegin()->second; }

  void add_term(const Monomial& m, std::int64_t coeff);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(std::int64_t c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, std::int64_t c) { return a *= c; }
  friend Poly operator*(std::int64_t c, Poly a) { return a *= c; }
  Poly operator-() const { return *this * -1; }
  /// Multiply every term by a monomial.
  Poly shifted(const Monomial& m) const;

  int degree(Var block, int index) const;
  bool has_nonnegative_coefficients() const;

  /// Swap v_k and v_{k+1} within one block (the action of s_k).
  Poly swap_variables(Var block, int k) const;
  /// Rename block `from` into block `to`; requires `to` unused.
  Poly rename(Var from, Var to) const;
  /// Substitute zero for every variable of a block.
  Poly set_zero(Var block) const;

  /// "q1^2*q2*y1 + 3*x1 - 1"; terms in decreasing lex order, variables
  /// within a monomial in the order q, x, y.
  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Terms terms_;
};

/// Exact division f / g by multivariate long division in lex order.
/// Throws InvariantViolation if g does not divide f.
Poly divide_exact(const Poly& f, const Poly& g);

/// d_k f = (f - s_k f) / (x_k - x_{k+1}).
Poly divided_difference(const Poly& f, int k, Var block = Var::x);

}  // namespace qbruhat
