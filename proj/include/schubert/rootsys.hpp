#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/rational.hpp>

namespace schubert {

inline constexpr std::size_t kMaxRank = 8;

using Rational = boost::rational<std::int64_t>;

/// Raised for malformed input: bad Cartan type, index out of range, a weight
/// that is not a root where a root is required.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family = Family::A;
  std::size_t rank = 1;

  /// Throws InvalidArgument if the rank is not admissible for the family.
  CartanType(Family f, std::size_t r);

  /// Parses strings like "A3", "e8", "G2".
  static CartanType parse(std::string_view text);

  [[nodiscard]] std::string name() const;
  [[nodiscard]] bool simply_laced() const;
  /// |W| from the classical order formulas, without enumerating anything.
  [[nodiscard]] std::uint64_t weyl_group_order() const;
  /// Number of roots, from the classical counts.
  [[nodiscard]] std::size_t root_count() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// An integral weight in fundamental-weight coordinates, so that
/// coords[i] == <lambda, alpha_i^vee>.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank);
  Weight(std::initializer_list<int> coords);
  static Weight from_span(std::span<const int> coords);

  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  [[nodiscard]] std::span<const int> coords() const { return {coords_.data(), rank_}; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_dominant() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(const Weight& a);
  /// Checked scalar multiple.
  friend Weight operator*(long long k, const Weight& a);

  friend bool operator==(const Weight& a, const Weight& b) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) = default;

  [[nodiscard]] std::string str() const;

 private:
  std::array<int, kMaxRank> coords_{};
  std::size_t rank_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

struct Root {
  Weight weight;
  std::vector<int> root_coords;
  bool positive = true;
  int height = 0;
  bool is_long = true;
  /// <lambda, beta^vee> == sum_i lambda[i] * coroot_coeffs[i].
  std::vector<int> coroot_coeffs;
};

/// A finite irreducible crystallographic root system with Bourbaki labels.
/// Immutable once built; all queries are const and thread-safe.
class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  [[nodiscard]] const CartanType& type() const { return type_; }
  [[nodiscard]] std::size_t rank() const { return type_.rank; }
  [[nodiscard]] bool simply_laced() const { return type_.simply_laced(); }

  /// C[i][j] = <alpha_j, alpha_i^vee>.
  [[nodiscard]] int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }

  /// All roots: positive roots sorted by (height, root coords), then their
  /// negatives in the same order.
  [[nodiscard]] std::span<const Root> roots() const { return roots_; }
  [[nodiscard]] std::span<const Root> positive_roots() const {
    return std::span<const Root>(roots_).first(roots_.size() / 2);
  }
  [[nodiscard]] const Weight& simple_root(std::size_t i) const;
  [[nodiscard]] const Weight& fundamental_weight(std::size_t i) const;
  [[nodiscard]] const Weight& rho() const { return rho_; }
  [[nodiscard]] const Root& highest_root() const { return roots_[highest_root_]; }
  [[nodiscard]] const Root& highest_short_root() const { return roots_[highest_short_root_]; }

  /// Index into roots() if `w` is a root.
  [[nodiscard]] std::optional<std::size_t> find_root(const Weight& w) const;
  [[nodiscard]] bool is_root(const Weight& w) const { return find_root(w).has_value(); }
  [[nodiscard]] bool is_positive_root(const Weight& w) const;
  /// Throws InvalidArgument if `w` is not a root.
  [[nodiscard]] const Root& root(const Weight& w) const;

  /// <lambda, alpha_i^vee>; throws InvalidArgument for a bad index.
  [[nodiscard]] int pairing(const Weight& lambda, std::size_t i) const;
  /// <lambda, beta^vee> for an arbitrary root beta.
  [[nodiscard]] int pairing(const Weight& lambda, const Root& beta) const;

  [[nodiscard]] Weight reflect(const Weight& lambda, std::size_t i) const;
  /// s_beta(lambda); throws InvalidArgument if beta is not a root.
  [[nodiscard]] Weight reflect(const Weight& lambda, const Weight& beta) const;

  /// Exact simple-root coordinates (rational in general).
  [[nodiscard]] std::vector<Rational> root_coords(const Weight& w) const;
  [[nodiscard]] Weight from_root_coords(std::span<const int> coords) const;
  /// Sum of the simple-root coordinates.
  [[nodiscard]] Rational height(const Weight& w) const;

  /// mu <= lambda: lambda - mu is a nonnegative integral combination of simple roots.
  [[nodiscard]] bool dominance_leq(const Weight& mu, const Weight& lambda) const;

  /// Invariant form scaled so that every value is an integer and the short
  /// simple roots have (alpha, alpha) == 2 * det(C).
  [[nodiscard]] std::int64_t scaled_form(const Weight& a, const Weight& b) const;

  /// Half squared length of alpha_i, short roots normalized to 1.
  [[nodiscard]] int half_length(std::size_t i) const { return half_len_[i]; }
  [[nodiscard]] std::int64_t cartan_determinant() const { return det_; }

 private:
  void check_index(std::size_t i) const;

  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<std::int64_t>> adjugate_;  // det(C) * C^{-1}
  std::int64_t det_ = 1;
  std::vector<int> half_len_;
  std::vector<Weight> simple_;
  std::vector<Weight> fundamental_;
  Weight rho_;
  std::vector<Root> roots_;
  std::unordered_map<Weight, std::size_t, WeightHash> index_;
  std::size_t highest_root_ = 0;
  std::size_t highest_short_root_ = 0;
};

}  // namespace schubert
