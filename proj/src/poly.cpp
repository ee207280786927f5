#include "qbruhat/poly.hpp"

#include <stdexcept>

#include "qbruhat/error.hpp"

namespace qbruhat {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

std::size_t Monomial::slot(Var block, int index) {
  if (index < 1 || index > kMaxN) throw std::out_of_range("variable index out of range");
  return static_cast<std::size_t>(static_cast<int>(block) * kMaxN + index - 1);
}

Monomial Monomial::variable(Var block, int index, int power) {
  Monomial m;
  m.set_exponent(block, index, power);
  return m;
}

void Monomial::set_exponent(Var block, int index, int power) {
  if (power < 0 || power > 255) throw OverflowError("monomial exponent out of range");
  e_[slot(block, index)] = static_cast<std::uint8_t>(power);
}

int Monomial::degree() const {
  int d = 0;
  for (auto v : e_) d += v;
  return d;
}

int Monomial::block_degree(Var block) const {
  int d = 0;
  for (int i = 1; i <= kMaxN; ++i) d += exponent(block, i);
  return d;
}

Monomial Monomial::restrict_to(Var block) const {
  Monomial m;
  for (int i = 1; i <= kMaxN; ++i) m.e_[slot(block, i)] = e_[slot(block, i)];
  return m;
}

Monomial Monomial::without(Var block) const {
  Monomial m = *this;
  for (int i = 1; i <= kMaxN; ++i) m.e_[slot(block, i)] = 0;
  return m;
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] < other.e_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < m.e_.size(); ++i) {
    const int s = a.e_[i] + b.e_[i];
    if (s > 255) throw OverflowError("monomial exponent overflow");
    m.e_[i] = static_cast<std::uint8_t>(s);
  }
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!a.divisible_by(b)) throw std::invalid_argument("monomial not divisible");
  Monomial m;
  for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = static_cast<std::uint8_t>(a.e_[i] - b.e_[i]);
  return m;
}

Poly::Poly(std::int64_t constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Poly Poly::monomial(const Monomial& m, std::int64_t coeff) {
  Poly p;
  p.add_term(m, coeff);
  return p;
}

std::int64_t Poly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Poly::add_term(const Monomial& m, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, checked_mul(ca, cb));
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(std::int64_t c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v = checked_mul(v, c);
  return *this;
}

Poly Poly::shifted(const Monomial& m) const {
  Poly out;
  for (const auto& [mm, c] : terms_) out.terms_.emplace(mm * m, c);
  return out;
}

int Poly::degree(Var block, int index) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(block, index));
  return d;
}

bool Poly::has_nonnegative_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (c < 0) return false;
  return true;
}

Poly Poly::swap_variables(Var block, int k) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    s.set_exponent(block, k, m.exponent(block, k + 1));
    s.set_exponent(block, k + 1, m.exponent(block, k));
    out.add_term(s, c);
  }
  return out;
}

Poly Poly::rename(Var from, Var to) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    if (from != to && m.block_degree(to) != 0) throw std::invalid_argument("rename target block in use");
    Monomial s = m.without(from);
    for (int i = 1; i <= kMaxN; ++i) s.set_exponent(to, i, m.exponent(from, i));
    out.add_term(s, c);
  }
  return out;
}

Poly Poly::set_zero(Var block) const {
  Poly out;
  for (const auto& [m, c] : terms_)
    if (m.block_degree(block) == 0) out.terms_.emplace(m, c);
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    for (Var block : {Var::q, Var::x, Var::y}) {
      const char name = block == Var::q ? 'q' : block == Var::x ? 'x' : 'y';
      for (int i = 1; i <= kMaxN; ++i) {
        const int e = m.exponent(block, i);
        if (e == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += name + std::to_string(i);
        if (e > 1) mono += "^" + std::to_string(e);
      }
    }
    if (mono.empty())
      s += std::to_string(mag);
    else if (mag == 1)
      s += mono;
    else
      s += std::to_string(mag) + "*" + mono;
  }
  return s;
}

Poly divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const Monomial lead = g.leading_monomial();
  const std::int64_t lc = g.leading_coefficient();
  Poly quotient, rest = f, remainder;
  while (!rest.is_zero()) {
    const Monomial m = rest.leading_monomial();
    const std::int64_t c = rest.leading_coefficient();
    if (m.divisible_by(lead) && c % lc == 0) {
      const Poly t = Poly::monomial(m / lead, c / lc);
      quotient += t;
      rest -= t * g;
    } else {
      remainder.add_term(m, c);
      rest.add_term(m, -c);
    }
  }
  if (!remainder.is_zero()) throw InvariantViolation("inexact polynomial division");
  return quotient;
}

Poly divided_difference(const Poly& f, int k, Var block) {
  const Poly numerator = f - f.swap_variables(block, k);
  const Poly divisor = Poly::variable(block, k) - Poly::variable(block, k + 1);
  return divide_exact(numerator, divisor);
}

}  // namespace qbruhat
