#include "qbruhat/qdegree.hpp"

#include <algorithm>
#include <stdexcept>

namespace qbruhat {

QDegree::QDegree(int rank) {
  if (rank < 0 || rank > kMaxRank) throw std::invalid_argument("QDegree rank out of range");
  rank_ = static_cast<std::uint8_t>(rank);
}

QDegree QDegree::from(std::span<const int> exponents) {
  QDegree d(static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) d.set(static_cast<int>(i), exponents[i]);
  return d;
}

QDegree QDegree::range(int rank, int i, int j) {
  QDegree d(rank);
  for (int k = i; k < j; ++k) d.set(k - 1, 1);
  return d;
}

void QDegree::set(int i, int value) {
  if (i < 0 || i >= rank_) throw std::out_of_range("QDegree index");
  if (value < 0 || value > 30000) throw std::invalid_argument("QDegree entry out of range");
  d_[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(value);
}

int QDegree::total() const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += d_[static_cast<std::size_t>(i)];
  return s;
}

std::vector<int> QDegree::values() const {
  return {d_.begin(), d_.begin() + rank_};
}

QDegree QDegree::reversed() const {
  QDegree r = *this;
  std::reverse(r.d_.begin(), r.d_.begin() + rank_);
  return r;
}

QDegree& QDegree::operator+=(const QDegree& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("QDegree rank mismatch");
  for (int i = 0; i < rank_; ++i) set(i, d_[static_cast<std::size_t>(i)] + other.d_[static_cast<std::size_t>(i)]);
  return *this;
}

std::string QDegree::to_string() const {
  std::string s = "(";
  for (int i = 0; i < rank_; ++i) {
    if (i) s += ',';
    s += std::to_string(d_[static_cast<std::size_t>(i)]);
  }
  return s + ")";
}

bool divides(const QDegree& a, const QDegree& b) {
  if (a.rank() != b.rank()) return false;
  for (int i = 0; i < a.rank(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace qbruhat
