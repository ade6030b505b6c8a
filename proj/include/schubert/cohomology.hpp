#pragma once

#include <cstddef>
#include <optional>

#include "schubert/charring.hpp"
#include "schubert/report.hpp"
#include "schubert/rootsys.hpp"
#include "schubert/weyl.hpp"

namespace schubert::cohomology {

/// Euler characteristic sum_i (-1)^i char H^i(X(tau), f) of the filtered
/// B-module with T-character f. Additive in f.
Character euler_char(const WeylGroup& g, const WeylElement& tau, const Character& f);

/// char H^0(X(tau), L_lambda), only where higher cohomology is known to
/// vanish: lambda dominant, or lambda a positive root of a simply-laced
/// system. Anywhere else throws ApplicabilityError.
Character h0_line(const WeylGroup& g, const WeylElement& tau, const Weight& lambda);

/// Semistable locus of X(w) for L_{alpha_0} is nonempty iff w(-alpha_0) > 0.
bool ss_nonempty(const WeylGroup& g, const WeylElement& w);

/// Character of the global sections of the tangent bundle restricted to X(tau),
/// as the sum of h0_line over positive roots. Simply-laced only.
Character tangent_h0_char(const WeylGroup& g, const WeylElement& tau);

/// Char(g) - tangent_h0_char(tau): the character of H^0(tau, b). Throws
/// std::logic_error if a multiplicity comes out negative.
Character kernel_char(const WeylGroup& g, const WeylElement& tau);

/// 2 e^0 + sum over positive roots of e^{-beta}.
Character borel_character(const RootSystem& rs);

/// Tangent sections equal Char(g) exactly when the semistable locus of
/// X(tau^{-1}) is nonempty, for every tau.
Report verify_thmA(const WeylGroup& g, const SweepOptions& opt = {});

/// For tau >= w_alpha: sections over R+(tau) sum to Char(g) and vanish off R+(tau).
/// With no index, every simple root is swept.
Report verify_thm42(const WeylGroup& g, std::optional<std::size_t> alpha, const SweepOptions& opt = {});

/// Exploratory non-simply-laced sweep of the Euler data of the tangent bundle.
Report verify_thmB_criterion(const WeylGroup& g, const SweepOptions& opt = {});

/// Consistency of the one-dimensional H^1(s1 s2 s1, b) in type B2.
Report remark_b2_check(const WeylGroup& g);

/// Every root other than +-alpha pairs with a simple coroot into {-1, 0, 1}.
Report verify_lemma26(const RootSystem& rs);

struct HighestShortWitness {
  std::size_t alpha;  // simple root index
  Weight beta;        // positive root
  Weight image;       // s_alpha . beta
  bool orthogonal;    // <nu, alpha^vee> == 0
  bool nu_plus_alpha_is_root;
};

/// Finds a simple alpha and positive beta with s_alpha . beta equal to the
/// highest short root nu. In types B, C, F the search insists on
/// <nu, alpha^vee> = 0 with nu + alpha a root; in G2 any pair qualifies.
std::optional<HighestShortWitness> highest_short_search(const WeylGroup& g);

Report verify_lemma61(const WeylGroup& g);

}  // namespace schubert::cohomology
