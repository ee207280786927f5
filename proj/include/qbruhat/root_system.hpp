#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qbruhat/qdegree.hpp"

namespace qbruhat {

/// Coordinates of a root in the basis of simple roots.
using RootVector = std::vector<int>;

/// A finite crystallographic root system of type A_r (r <= 7), B_2, B_3,
/// C_2, C_3 or G_2. The invariant form is normalized so that short roots
/// have squared length 2.
///
/// Roots carry a signed index: 0..N-1 are the positive roots, N..2N-1 their
/// negatives in the same order. Simple root alpha_i (1-based i) is positive
/// root i-1.
class RootSystem {
 public:
  static RootSystem build(char type, int rank);
  /// "A3", "B2", "G2", ...
  static RootSystem parse(std::string_view label);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  /// a_ij = <alpha_i, alpha_j^vee> = 2 (alpha_i|alpha_j) / (alpha_j|alpha_j).
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  int positive_count() const { return static_cast<int>(roots_.size() / 2); }
  const RootVector& root(int signed_index) const { return roots_[static_cast<std::size_t>(signed_index)]; }
  std::span<const RootVector> positive_roots() const {
    return {roots_.data(), roots_.size() / 2};
  }
  /// Signed index of a root vector, or -1 if it is not a root.
  int index_of(const RootVector& r) const;
  bool is_positive(int signed_index) const { return signed_index < positive_count(); }
  int negate(int signed_index) const;

  /// h_alpha in the basis of simple coroots.
  const QDegree& coroot(int positive_index) const { return coroots_[static_cast<std::size_t>(positive_index)]; }
  /// |h_alpha|.
  int height(int positive_index) const { return coroot(positive_index).total(); }

  int inner(const RootVector& a, const RootVector& b) const;
  /// <beta, alpha^vee> = 2 (beta|alpha) / (alpha|alpha).
  int pairing(const RootVector& beta, int positive_index) const;
  /// s_alpha(beta) = beta - <beta, alpha^vee> alpha.
  RootVector reflect(int positive_index, const RootVector& beta) const;

 private:
  char type_ = 'A';
  int rank_ = 0;
  std::vector<std::vector<int>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootVector> roots_;
  std::map<RootVector, int> index_;
  std::vector<QDegree> coroots_;
};

inline RootSystem build_root_system(char type, int rank) { return RootSystem::build(type, rank); }

/// (d_1, ..., d_r) with h_alpha = sum d_i h_{alpha_i}.
QDegree coroot_qdegree(const RootSystem& rs, int positive_index);

/// A Weyl group element, stored as its action on the signed root indices.
/// Equality is equality of actions.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(std::vector<int> action, std::vector<int> word, int length)
      : action_(std::move(action)), word_(std::move(word)), length_(length) {}

  /// Image of each signed root index.
  const std::vector<int>& action() const { return action_; }
  /// Canonical reduced word, generators numbered 1..r.
  const std::vector<int>& word() const { return word_; }
  int length() const { return length_; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action_ == b.action_; }

 private:
  std::vector<int> action_;
  std::vector<int> word_;
  int length_ = 0;
};

inline constexpr std::size_t kDefaultWeylBound = 1152;

/// The full Weyl group, enumerated breadth-first from the identity by right
/// multiplication with simple reflections. Element 0 is the identity and
/// canonical words are the first ones found (shortlex-minimal).
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem rs, std::size_t bound = kDefaultWeylBound);

  const RootSystem& root_system() const { return rs_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& operator[](std::size_t w) const { return elements_[w]; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t identity() const { return 0; }
  std::size_t longest() const { return longest_; }

  /// Throws std::out_of_range for an action not in the group.
  std::size_t index_of(const std::vector<int>& action) const;
  /// w * s_alpha.
  std::size_t reflect_right(std::size_t w, int positive_index) const {
    return right_reflection_[w][static_cast<std::size_t>(positive_index)];
  }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t from_word(std::span<const int> word) const;
  /// "id" or the canonical word, e.g. "s1s2s1".
  std::string name(std::size_t w) const;
  /// Accepts "id", "e", "s1s2" or a bare digit word "12".
  std::size_t parse(std::string_view text) const;

 private:
  RootSystem rs_;
  std::vector<WeylElement> elements_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::vector<int>> reflections_;  // actions of s_alpha
  std::vector<std::vector<std::size_t>> right_reflection_;
  std::size_t longest_ = 0;
};

inline WeylGroup weyl_group(const RootSystem& rs, std::size_t bound = kDefaultWeylBound) {
  return WeylGroup(rs, bound);
}

}  // namespace qbruhat
