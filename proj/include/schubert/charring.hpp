#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schubert/rootsys.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/// Element of the representation ring of T: a finite map weight -> nonzero
/// integer multiplicity. Zero multiplicities are never stored.
class Character {
 public:
  using Term = std::pair<Weight, std::int64_t>;

  Character() = default;
  static Character monomial(const Weight& w, std::int64_t mult = 1);

  void add(const Weight& w, std::int64_t mult);
  [[nodiscard]] std::int64_t mult(const Weight& w) const;
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  /// Sum of multiplicities (the virtual dimension).
  [[nodiscard]] std::int64_t dimension() const;
  [[nodiscard]] bool nonnegative() const;
  /// Every multiplicity of *this is <= the matching multiplicity of `other`.
  [[nodiscard]] bool termwise_leq(const Character& other) const;

  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(std::int64_t k, const Character& c);
  friend bool operator==(const Character& a, const Character& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] const std::unordered_map<Weight, std::int64_t, WeightHash>& terms() const { return terms_; }
  /// Terms sorted by (height of weight, fundamental coordinates).
  [[nodiscard]] std::vector<Term> sorted_terms(const RootSystem& rs) const;
  [[nodiscard]] std::string str(const RootSystem& rs) const;

 private:
  std::unordered_map<Weight, std::int64_t, WeightHash> terms_;
};

/// Rank-one Demazure (Euler characteristic) operator for simple root alpha_i,
/// applied termwise through the closed string formula.
Character demazure_op(const RootSystem& rs, std::size_t i, const Character& f);

/// D_{i1}(D_{i2}(... D_{in}(f))): the operator of the last letter acts first.
Character demazure_along_word(const RootSystem& rs, const Word& word, const Character& f);

/// sum over all roots of e^beta, plus rank copies of e^0.
Character adjoint_character(const RootSystem& rs);

/// Irreducible character of highest weight lambda by Freudenthal's formula.
/// Independent of the Demazure path; used as an oracle.
Character freudenthal_char(const RootSystem& rs, const Weight& lambda);

/// Weyl dimension formula; throws InvalidArgument for non-dominant lambda.
std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda);

}  // namespace schubert
