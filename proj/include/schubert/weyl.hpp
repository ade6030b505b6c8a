#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/rootsys.hpp"

namespace schubert {

/// A word in the simple reflections. Letters are 0-based simple-root indices;
/// format_word / parse_word translate to the 1-based notation used by the CLI
/// and reports.
using Word = std::vector<std::size_t>;

std::string format_word(const Word& w);
/// Comma separated, 1-based ("2,1"). Empty text is the empty word.
Word parse_word(std::string_view text, std::size_t rank);

/// Thrown when an operation would enumerate a group larger than the guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weyl group element, stored as its integer matrix on fundamental-weight
/// coordinates together with a canonical reduced word. Equality and hashing
/// use the matrix only.
class WeylElement {
 public:
  WeylElement() = default;

  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] int entry(std::size_t i, std::size_t j) const { return m_[i * kMaxRank + j]; }
  [[nodiscard]] const Word& word() const { return word_; }
  [[nodiscard]] std::size_t length() const { return word_.size(); }
  [[nodiscard]] bool is_identity() const { return word_.empty(); }

  [[nodiscard]] Weight apply(const Weight& lambda) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.rank_ == b.rank_ && a.m_ == b.m_; }

 private:
  friend class WeylGroup;
  friend struct WeylElementHash;

  std::array<int, kMaxRank * kMaxRank> m_{};
  std::size_t rank_ = 0;
  Word word_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept;
};

/// Operations on the Weyl group of a root system. Holds a reference to the
/// root system, which must outlive it.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs);

  [[nodiscard]] const RootSystem& root_system() const { return *rs_; }
  [[nodiscard]] std::size_t rank() const { return rs_->rank(); }

  [[nodiscard]] WeylElement identity() const;
  [[nodiscard]] WeylElement simple_reflection(std::size_t i) const;
  /// s_{i1} o s_{i2} o ... o s_{in}; the canonical word is recomputed.
  [[nodiscard]] WeylElement from_word(const Word& w) const;
  [[nodiscard]] WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  [[nodiscard]] WeylElement inverse(const WeylElement& w) const;
  [[nodiscard]] WeylElement power(const WeylElement& w, long long k) const;

  /// Deterministic reduced word: repeatedly peel the smallest right descent.
  [[nodiscard]] Word reduced_word(const WeylElement& w) const { return w.word(); }
  /// {beta in R+ : w(beta) in R-}, in positive_roots() order.
  [[nodiscard]] std::vector<Weight> inversion_set(const WeylElement& w) const;
  [[nodiscard]] bool is_right_descent(const WeylElement& w, std::size_t i) const;
  [[nodiscard]] bool is_left_descent(const WeylElement& w, std::size_t i) const;

  [[nodiscard]] bool bruhat_leq(const WeylElement& u, const WeylElement& w) const;

  [[nodiscard]] const WeylElement& longest_element() const { return w0_; }
  /// Longest element of the parabolic subgroup generated by `generators`.
  [[nodiscard]] WeylElement parabolic_longest(const std::vector<std::size_t>& generators) const;
  /// Minimal representative w_alpha of w0 modulo the maximal parabolic that
  /// omits alpha_i.
  [[nodiscard]] WeylElement min_parabolic_rep(std::size_t i) const;

  /// Every element exactly once, ordered by (length, canonical word).
  [[nodiscard]] std::vector<WeylElement> enumerate(std::uint64_t guard = 1'000'000) const;

  /// w . lambda = w(lambda + rho) - rho.
  [[nodiscard]] Weight dot_action(const WeylElement& w, const Weight& lambda) const;

 private:
  WeylElement from_matrix(const std::array<int, kMaxRank * kMaxRank>& m) const;
  std::array<int, kMaxRank * kMaxRank> product(const std::array<int, kMaxRank * kMaxRank>& a,
                                               const std::array<int, kMaxRank * kMaxRank>& b) const;
  bool sends_negative(const std::array<int, kMaxRank * kMaxRank>& m, const Weight& root) const;

  const RootSystem* rs_;
  std::vector<std::array<int, kMaxRank * kMaxRank>> simple_;
  WeylElement w0_;
};

}  // namespace schubert
