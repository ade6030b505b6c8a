#include "schubert/cohomology.hpp"

#include <algorithm>

#include "schubert/parallel.hpp"

namespace schubert::cohomology {

using nlohmann::json;

namespace {

void require_simply_laced(const RootSystem& rs, const char* what) {
  if (!rs.simply_laced()) {
    throw ApplicabilityError(std::string(what) + " requires a simply-laced type; got " + rs.type().name());
  }
}

Counterexample make_cx(const WeylGroup& g, const WeylElement& tau, json expected, json actual, std::string note) {
  return {tau.word(), g.inverse(tau).word(), std::move(expected), std::move(actual), std::move(note)};
}

// Per-element outcome of a sweep. `flag` is a char, not bool, so that
// parallel_map never writes into a packed vector<bool>.
struct Row {
  std::vector<Counterexample> cx;
  json info;
  char flag = 0;
};

}  // namespace

Character euler_char(const WeylGroup& g, const WeylElement& tau, const Character& f) {
  return demazure_along_word(g.root_system(), tau.word(), f);
}

Character h0_line(const WeylGroup& g, const WeylElement& tau, const Weight& lambda) {
  const RootSystem& rs = g.root_system();
  const bool positive_root = rs.is_positive_root(lambda);
  if (!lambda.is_dominant() && !(rs.simply_laced() && positive_root)) {
    throw ApplicabilityError("H^0 of L_" + lambda.str() + " on " + rs.type().name() +
                             " is not certified by Euler data: need a dominant weight, or a positive root "
                             "in a simply-laced type");
  }
  Character c = euler_char(g, tau, Character::monomial(lambda));
  if (!c.nonnegative()) {
    throw std::logic_error("Euler characteristic of L_" + lambda.str() + " on X(" + format_word(tau.word()) +
                           ") has a negative multiplicity inside a vanishing regime");
  }
  return c;
}

bool ss_nonempty(const WeylGroup& g, const WeylElement& w) {
  const RootSystem& rs = g.root_system();
  return rs.is_positive_root(w.apply(-rs.highest_root().weight));
}

Character tangent_h0_char(const WeylGroup& g, const WeylElement& tau) {
  require_simply_laced(g.root_system(), "tangent_h0_char");
  Character out;
  for (const auto& beta : g.root_system().positive_roots()) out += h0_line(g, tau, beta.weight);
  return out;
}

Character kernel_char(const WeylGroup& g, const WeylElement& tau) {
  const RootSystem& rs = g.root_system();
  Character k = adjoint_character(rs) - tangent_h0_char(g, tau);
  if (!k.nonnegative()) {
    throw std::logic_error("kernel character of X(" + format_word(tau.word()) + ") has a negative multiplicity");
  }
  return k;
}

Character borel_character(const RootSystem& rs) {
  Character b = Character::monomial(Weight(rs.rank()), static_cast<std::int64_t>(rs.rank()));
  for (const auto& beta : rs.positive_roots()) b.add(-beta.weight, 1);
  return b;
}

Report verify_thmA(const WeylGroup& g, const SweepOptions& opt) {
  const RootSystem& rs = g.root_system();
  require_simply_laced(rs, "thmA");
  return timed("thmA", rs, [&](Report& rep) {
    const auto elements = g.enumerate(opt.guard);
    const Character adj = adjoint_character(rs);
    const Weight minus_a0 = -rs.highest_root().weight;
    rep.universe_size = elements.size();

    auto rows = parallel_map<Row>(elements.size(), opt.workers, [&](std::size_t k) {
      Row row;
      const WeylElement& tau = elements[k];
      const WeylElement tau_inv = g.inverse(tau);
      const bool ss = ss_nonempty(g, tau_inv);
      const Character tangent = tangent_h0_char(g, tau);
      const bool full = tangent == adj;
      row.flag = ss;
      if (full != ss) {
        row.cx.push_back(make_cx(g, tau, json{{"tangent_is_adjoint", ss}}, json{{"tangent_is_adjoint", full}},
                                 "tangent sections vs semistability of X(tau^-1)"));
      }
      const Character kernel = adj - tangent;
      bool supported = true;
      for (const auto& [w, m] : kernel.terms()) {
        if (!w.is_zero() && !rs.is_positive_root(-w)) supported = false;
      }
      if (!kernel.nonnegative() || !supported || kernel.empty() != ss) {
        row.cx.push_back(make_cx(g, tau, json{{"kernel_zero", ss}}, character_json(rs, kernel),
                                 "kernel must be a nonnegative character on weights of b, zero iff semistable"));
      }
      if (!kernel.empty() && kernel.mult(minus_a0) <= 0) {
        row.cx.push_back(make_cx(g, tau, json{{"mult_minus_alpha0", ">0"}}, character_json(rs, kernel),
                                 "a nonzero kernel contains the weight -alpha_0"));
      }
      return row;
    });

    json ss_set = json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      for (auto& c : rows[k].cx) rep.counterexamples.push_back(std::move(c));
      if (rows[k].flag) ss_set.push_back(word_json(elements[k].word()));
    }
    rep.details = {{"semistable_count", ss_set.size()}, {"semistable_tau", std::move(ss_set)}};
  });
}

Report verify_thm42(const WeylGroup& g, std::optional<std::size_t> alpha, const SweepOptions& opt) {
  const RootSystem& rs = g.root_system();
  require_simply_laced(rs, "thm42");
  if (alpha && *alpha >= rs.rank()) throw InvalidArgument("simple root index out of range");
  return timed("thm42", rs, [&](Report& rep) {
    const auto elements = g.enumerate(opt.guard);
    const Character adj = adjoint_character(rs);
    std::vector<std::size_t> alphas;
    if (alpha) alphas.push_back(*alpha);
    else
      for (std::size_t i = 0; i < rs.rank(); ++i) alphas.push_back(i);

    json per_alpha = json::array();
    for (std::size_t a : alphas) {
      const WeylElement wa = g.min_parabolic_rep(a);
      auto rows = parallel_map<Row>(elements.size(), opt.workers, [&](std::size_t k) {
        Row row;
        const WeylElement& tau = elements[k];
        if (!g.bruhat_leq(wa, tau)) return row;
        row.flag = 1;
        const auto inv = g.inversion_set(tau);
        Character sum;
        for (const auto& beta : rs.positive_roots()) {
          const Character h0 = h0_line(g, tau, beta.weight);
          if (std::find(inv.begin(), inv.end(), beta.weight) != inv.end()) {
            sum += h0;
          } else if (!h0.empty()) {
            row.cx.push_back(make_cx(g, tau, json::array(), character_json(rs, h0),
                                     "h0(tau, " + beta.weight.str() + ") must vanish off R+(tau)"));
          }
        }
        if (sum != adj) {
          row.cx.push_back(make_cx(g, tau, character_json(rs, adj), character_json(rs, sum),
                                   "sum of h0 over R+(tau) must equal Char(g)"));
        }
        return row;
      });
      std::size_t count = 0;
      for (auto& row : rows) {
        count += row.flag;
        for (auto& c : row.cx) rep.counterexamples.push_back(std::move(c));
      }
      rep.universe_size += count;
      per_alpha.push_back({{"alpha", a + 1}, {"w_alpha", word_json(wa.word())}, {"tau_count", count}});
    }
    rep.details = {{"per_alpha", std::move(per_alpha)}};
  });
}

Report verify_thmB_criterion(const WeylGroup& g, const SweepOptions& opt) {
  const RootSystem& rs = g.root_system();
  if (rs.simply_laced()) throw ApplicabilityError("thmB requires a non-simply-laced type; got " + rs.type().name());
  return timed("thmB", rs, [&](Report& rep) {
    const auto elements = g.enumerate(opt.guard);
    const Character adj = adjoint_character(rs);
    rep.universe_size = elements.size();

    auto rows = parallel_map<Row>(elements.size(), opt.workers, [&](std::size_t k) {
      Row row;
      const WeylElement& tau = elements[k];
      const WeylElement tau_inv = g.inverse(tau);
      Character e;
      for (const auto& beta : rs.positive_roots()) e += euler_char(g, tau, Character::monomial(beta.weight));
      const bool ss = ss_nonempty(g, tau_inv);
      const bool is_adj = e == adj;
      const bool negative = !e.nonnegative();
      row.info = {{"tau", word_json(tau.word())},
                  {"tau_inverse", word_json(tau_inv.word())},
                  {"euler_equals_adjoint", is_adj},
                  {"semistable", ss},
                  {"equivalence_holds", is_adj == ss},
                  {"negative_multiplicity", negative}};
      // With ss nonempty H^0(tau, b) = 0, so chi(tau, g/b) = Char(g) + char H^1(tau, b) >= Char(g).
      if (ss && !adj.termwise_leq(e)) {
        row.cx.push_back(make_cx(g, tau, character_json(rs, adj), character_json(rs, e),
                                 "semistable tau must have Euler data dominating Char(g) termwise"));
      }
      return row;
    });

    json table = json::array();
    std::size_t mismatches = 0, negatives = 0;
    for (auto& row : rows) {
      mismatches += !row.info["equivalence_holds"].get<bool>();
      negatives += row.info["negative_multiplicity"].get<bool>();
      table.push_back(std::move(row.info));
      for (auto& c : row.cx) rep.counterexamples.push_back(std::move(c));
    }
    rep.details = {{"rows", std::move(table)},
                   {"equivalence_mismatches", mismatches},
                   {"negative_rows", negatives},
                   {"note", "exploratory: rows where Euler data differs from Char(g) are findings, not failures"}};
  });
}

Report remark_b2_check(const WeylGroup& g) {
  const RootSystem& rs = g.root_system();
  if (rs.type() != CartanType(Family::B, 2)) {
    throw ApplicabilityError("remarkB2 applies only to type B2; got " + rs.type().name());
  }
  return timed("remarkB2", rs, [&](Report& rep) {
    rep.universe_size = 1;
    const WeylElement tau = g.from_word({0, 1, 0});
    const Character b = borel_character(rs);
    const Character e = euler_char(g, tau, b);
    const Weight h1_weight = -(rs.simple_root(0) + rs.simple_root(1));
    const Character cand = e + Character::monomial(h1_weight);
    if (!cand.nonnegative()) {
      rep.counterexamples.push_back(make_cx(g, tau, "nonnegative", character_json(rs, cand),
                                            "chi(tau, b) + e^{-(a1+a2)} must be an honest character"));
    }
    if (!cand.termwise_leq(b)) {
      rep.counterexamples.push_back(make_cx(g, tau, character_json(rs, b), character_json(rs, cand),
                                            "H^0(tau, b) embeds in b"));
    }
    rep.details = {{"tau", word_json(tau.word())},
                   {"euler_b", character_json(rs, e)},
                   {"h0_candidate", character_json(rs, cand)},
                   {"char_b", character_json(rs, b)}};
  });
}

Report verify_lemma26(const RootSystem& rs) {
  require_simply_laced(rs, "lemma26");
  return timed("lemma26", rs, [&](Report& rep) {
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      const Weight& a = rs.simple_root(i);
      for (const auto& beta : rs.roots()) {
        if (beta.weight == a || beta.weight == -a) continue;
        ++rep.universe_size;
        const int p = rs.pairing(beta.weight, i);
        if (p < -1 || p > 1) {
          rep.counterexamples.push_back({{i}, {i}, json::array({-1, 0, 1}), p, "pairing of " + beta.weight.str()});
        }
      }
    }
  });
}

std::optional<HighestShortWitness> highest_short_search(const WeylGroup& g) {
  const RootSystem& rs = g.root_system();
  if (rs.simply_laced()) throw ApplicabilityError("lemma61 requires a non-simply-laced type; got " + rs.type().name());
  const Weight& nu = rs.highest_short_root().weight;
  const bool g2 = rs.type().family == Family::G;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    const WeylElement s = g.simple_reflection(i);
    const Weight beta = g.dot_action(s, nu);
    if (!rs.is_positive_root(beta)) continue;
    HighestShortWitness w{i, beta, g.dot_action(s, beta), rs.pairing(nu, i) == 0, rs.is_root(nu + rs.simple_root(i))};
    if (g2 || (w.orthogonal && w.nu_plus_alpha_is_root)) return w;
  }
  return std::nullopt;
}

Report verify_lemma61(const WeylGroup& g) {
  const RootSystem& rs = g.root_system();
  auto found = highest_short_search(g);
  return timed("lemma61", rs, [&](Report& rep) {
    rep.universe_size = rs.rank();
    const Weight& nu = rs.highest_short_root().weight;
    if (!found || found->image != nu) {
      rep.counterexamples.push_back({{}, {}, json{{"highest_short_root", nu.str()}}, nullptr,
                                     "no simple alpha, positive beta with s_alpha . beta = nu"});
      return;
    }
    rep.details = {{"alpha", found->alpha + 1},
                   {"beta", json(std::vector<int>(found->beta.coords().begin(), found->beta.coords().end()))},
                   {"beta_root_coords", rs.root(found->beta).root_coords},
                   {"image", json(std::vector<int>(found->image.coords().begin(), found->image.coords().end()))},
                   {"image_root_coords", rs.root(found->image).root_coords},
                   {"orthogonal", found->orthogonal},
                   {"nu_plus_alpha_is_root", found->nu_plus_alpha_is_root}};
  });
}

}  // namespace schubert::cohomology
