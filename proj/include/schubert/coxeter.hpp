#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "schubert/report.hpp"
#include "schubert/weyl.hpp"

namespace schubert::coxeter {

/// A Coxeter element together with the reduced expression that was used to
/// define it. The expression matters: J, J' and phi depend on it.
///
/// Positions follow the right-to-left convention: if c = s_{i_1} ... s_{i_n}
/// as written, the last letter s_{i_n} sits at position 1 and the first at
/// position n.
struct CoxeterAnalysis {
  WeylElement c;
  Word ordering;
  std::size_t coxeter_number = 0;
  std::vector<std::size_t> position;  // simple index -> position (1-based)
  /// j in J' -> a_j, where c^i(alpha_j) is simple for i < a_j and c^{a_j}(alpha_j) < 0.
  std::map<std::size_t, std::size_t> exponents;
  /// j in J' -> the simple indices of alpha_j, c(alpha_j), ..., c^{a_j - 1}(alpha_j).
  std::map<std::size_t, Word> orbits;
  /// Members of J' whose preimage c^{-1}(alpha_j) is not simple.
  std::vector<std::size_t> J;
  /// phi_j = s_{alpha_j} s_{c(alpha_j)} ... for j in J.
  std::map<std::size_t, Word> phi_factors;
  WeylElement phi;
  /// c = tau * phi.
  WeylElement tau;
};

/// Throws InvalidArgument unless `ordering` uses every simple index exactly once.
CoxeterAnalysis analyze(const WeylGroup& g, const Word& ordering);

/// Order of w in W.
std::size_t order(const WeylGroup& g, const WeylElement& w);

/// Distinct Coxeter elements, each paired with the lexicographically first
/// ordering that produces it.
std::vector<std::pair<Word, WeylElement>> coxeter_elements(const WeylGroup& g);

/// All rank! orderings of the simple roots in lexicographic order.
std::vector<Word> all_orderings(std::size_t rank);

/// Least j >= 1 with c^j(omega_i) = w0(omega_i). Throws std::logic_error if
/// no such j exists below the order of c.
std::size_t yz_exponent(const WeylGroup& g, const WeylElement& c, std::size_t i);

/// Type A with c or c^{-1} equal to s_n ... s_1.
bool is_typeA_extremal(const WeylGroup& g, const WeylElement& c);

Report verify_lemma54_55_56(const WeylGroup& g, const SweepOptions& opt = {});
Report verify_prop51(const WeylGroup& g, const SweepOptions& opt = {});
Report verify_thmC_typeA(const WeylGroup& g, const SweepOptions& opt = {});
Report verify_cor52_53_58(const WeylGroup& g, const SweepOptions& opt = {});

}  // namespace schubert::coxeter
