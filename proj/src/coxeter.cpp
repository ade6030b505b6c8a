#include "schubert/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_set>

#include "schubert/charring.hpp"
#include "schubert/cohomology.hpp"
#include "schubert/parallel.hpp"

namespace schubert::coxeter {

using nlohmann::json;

namespace {

std::optional<std::size_t> simple_index(const RootSystem& rs, const Weight& v) {
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    if (rs.simple_root(i) == v) return i;
  }
  return std::nullopt;
}

Counterexample make_cx(const WeylGroup& g, const Word& ordering, json expected, json actual, std::string note) {
  return {ordering, g.inverse(g.from_word(ordering)).word(), std::move(expected), std::move(actual), std::move(note)};
}

json weight_json(const Weight& w) {
  json out = json::array();
  for (int x : w.coords()) out.push_back(x);
  return out;
}

void require_simply_laced(const RootSystem& rs, const char* what) {
  if (!rs.simply_laced()) {
    throw ApplicabilityError(std::string(what) + " requires a simply-laced type; got " + rs.type().name());
  }
}

void require_type_a(const RootSystem& rs, const char* what) {
  if (rs.type().family != Family::A) {
    throw ApplicabilityError(std::string(what) + " applies only to type A; got " + rs.type().name());
  }
}

// s_n ... s_1 as a 0-based word.
Word descending_word(std::size_t rank) {
  Word w(rank);
  for (std::size_t k = 0; k < rank; ++k) w[k] = rank - 1 - k;
  return w;
}

// Sum over beta in R+(w) of H^0(w, L_beta).
Character inversion_tangent(const WeylGroup& g, const WeylElement& w) {
  Character sum;
  for (const Weight& beta : g.inversion_set(w)) sum += cohomology::h0_line(g, w, beta);
  return sum;
}

// (-1)^{l(w)} chi(w, e^{w^{-1} . 0}).
Character signed_dot_euler(const WeylGroup& g, const WeylElement& w) {
  const Weight mu = g.dot_action(g.inverse(w), Weight(g.rank()));
  const std::int64_t sign = w.length() % 2 == 0 ? 1 : -1;
  return sign * cohomology::euler_char(g, w, Character::monomial(mu));
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

struct Row {
  std::vector<Counterexample> cx;
  json info;
};

}  // namespace

std::vector<Word> all_orderings(std::size_t rank) {
  Word p(rank);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Word> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t order(const WeylGroup& g, const WeylElement& w) {
  WeylElement cur = w;
  std::size_t k = 1;
  while (!cur.is_identity()) {
    cur = g.multiply(cur, w);
    ++k;
  }
  return k;
}

CoxeterAnalysis analyze(const WeylGroup& g, const Word& ordering) {
  const RootSystem& rs = g.root_system();
  const std::size_t n = rs.rank();
  Word sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  bool perm = sorted.size() == n;
  for (std::size_t k = 0; perm && k < n; ++k) perm = sorted[k] == k;
  if (!perm) throw InvalidArgument("Coxeter ordering " + format_word(ordering) + " is not a permutation of the simple roots");

  CoxeterAnalysis a;
  a.ordering = ordering;
  a.c = g.from_word(ordering);
  a.coxeter_number = order(g, a.c);
  a.position.resize(n);
  for (std::size_t k = 0; k < n; ++k) a.position[ordering[k]] = n - k;

  const WeylElement c_inv = g.inverse(a.c);
  for (std::size_t j = 0; j < n; ++j) {
    Word orbit;
    Weight v = rs.simple_root(j);
    std::optional<std::size_t> s;
    while ((s = simple_index(rs, v)) && orbit.size() <= a.coxeter_number) {
      orbit.push_back(*s);
      v = a.c.apply(v);
    }
    if (rs.is_positive_root(v)) continue;
    a.exponents[j] = orbit.size();
    a.orbits[j] = orbit;
    if (!simple_index(rs, c_inv.apply(rs.simple_root(j)))) {
      a.J.push_back(j);
      a.phi_factors[j] = orbit;
    }
  }
  Word phi_word;
  for (std::size_t j : a.J) phi_word.insert(phi_word.end(), a.phi_factors[j].begin(), a.phi_factors[j].end());
  a.phi = g.from_word(phi_word);
  a.tau = g.multiply(a.c, g.inverse(a.phi));
  return a;
}

std::vector<std::pair<Word, WeylElement>> coxeter_elements(const WeylGroup& g) {
  std::vector<std::pair<Word, WeylElement>> out;
  std::unordered_set<WeylElement, WeylElementHash> seen;
  for (const Word& o : all_orderings(g.rank())) {
    WeylElement c = g.from_word(o);
    if (seen.insert(c).second) out.emplace_back(o, std::move(c));
  }
  return out;
}

std::size_t yz_exponent(const WeylGroup& g, const WeylElement& c, std::size_t i) {
  const RootSystem& rs = g.root_system();
  const Weight target = g.longest_element().apply(rs.fundamental_weight(i));
  const std::size_t h = order(g, c);
  Weight cur = rs.fundamental_weight(i);
  for (std::size_t j = 1; j < h; ++j) {
    cur = c.apply(cur);
    if (cur == target) return j;
  }
  throw std::logic_error("no j < " + std::to_string(h) + " with c^j(omega_" + std::to_string(i + 1) +
                         ") = w0(omega_" + std::to_string(i + 1) + ") for c = " + format_word(c.word()));
}

bool is_typeA_extremal(const WeylGroup& g, const WeylElement& c) {
  if (g.root_system().type().family != Family::A) return false;
  const WeylElement down = g.from_word(descending_word(g.rank()));
  return c == down || c == g.inverse(down);
}

Report verify_lemma54_55_56(const WeylGroup& g, const SweepOptions& opt) {
  const RootSystem& rs = g.root_system();
  require_simply_laced(rs, "lemma54_56");
  const std::size_t n = rs.rank();
  if (factorial(n) > opt.guard) {
    throw GuardExceeded("lemma54_56 on " + rs.type().name() + " sweeps " + std::to_string(factorial(n)) +
                        " orderings, above the guard " + std::to_string(opt.guard));
  }
  return timed("lemma54_56", rs, [&](Report& rep) {
    const auto orderings = all_orderings(n);
    rep.universe_size = orderings.size();

    auto rows = parallel_map<Row>(orderings.size(), opt.workers, [&](std::size_t k) {
      Row row;
      const Word& ord = orderings[k];
      const CoxeterAnalysis a = analyze(g, ord);
      auto fail = [&](json expected, json actual, std::string note) {
        row.cx.push_back(make_cx(g, ord, std::move(expected), std::move(actual), std::move(note)));
      };
      auto adjacent = [&](std::size_t x, std::size_t y) { return rs.cartan(y, x) != 0; };

      // c(alpha_i) = alpha_j iff j is the only neighbour of i placed to its
      // right and i the only neighbour of j placed to its left.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          const bool maps = a.c.apply(rs.simple_root(i)) == rs.simple_root(j);
          std::vector<std::size_t> lower, upper;
          for (std::size_t q = 0; q < n; ++q) {
            if (a.position[q] < a.position[i] && adjacent(q, i)) lower.push_back(q);
            if (a.position[q] > a.position[j] && adjacent(j, q)) upper.push_back(q);
          }
          const bool predicted = lower == std::vector<std::size_t>{j} && upper == std::vector<std::size_t>{i};
          if (maps != predicted) {
            fail(json{{"i", i + 1}, {"j", j + 1}, {"maps", predicted}}, json{{"maps", maps}},
                 "c(alpha_i) = alpha_j vs neighbour positions");
          }
        }
      }

      for (auto it = a.J.begin(); it != a.J.end(); ++it) {
        for (auto jt = std::next(it); jt != a.J.end(); ++jt) {
          for (std::size_t p : a.orbits.at(*it)) {
            for (std::size_t q : a.orbits.at(*jt)) {
              if (rs.cartan(q, p) != 0) {
                fail(0, rs.cartan(q, p),
                     "orbit roots alpha_" + std::to_string(p + 1) + " and alpha_" + std::to_string(q + 1) +
                         " of distinct members of J must be orthogonal");
              }
            }
          }
          const WeylElement pj = g.from_word(a.phi_factors.at(*it));
          const WeylElement pk = g.from_word(a.phi_factors.at(*jt));
          if (!(g.multiply(pj, pk) == g.multiply(pk, pj))) {
            fail("commute", "differ", "phi_" + std::to_string(*it + 1) + " and phi_" + std::to_string(*jt + 1));
          }
        }
      }

      for (std::size_t j : a.J) {
        const Word& w = a.phi_factors.at(j);
        if (g.from_word(w).length() != w.size()) fail(w.size(), g.from_word(w).length(), "phi_j word is not reduced");
      }
      if (!(g.multiply(a.tau, a.phi) == a.c) || a.tau.length() + a.phi.length() != a.c.length()) {
        fail(a.c.length(), json{{"l_tau", a.tau.length()}, {"l_phi", a.phi.length()}}, "c = tau phi with lengths adding");
      }

      for (std::size_t r = 0; r < n; ++r) {
        if (!g.bruhat_leq(g.simple_reflection(r), a.tau)) continue;
        const Weight ca = a.c.apply(rs.simple_root(r));
        const Weight pa = a.phi.apply(rs.simple_root(r));
        if (rs.height(ca) < rs.height(pa)) {
          fail(json{{"ht_phi", weight_json(pa)}}, json{{"ht_c", weight_json(ca)}},
               "ht c(alpha_" + std::to_string(r + 1) + ") >= ht phi(alpha_" + std::to_string(r + 1) + ")");
        }
      }

      json exps = json::object();
      for (const auto& [j, aj] : a.exponents) exps[std::to_string(j + 1)] = aj;
      json J = json::array();
      for (std::size_t j : a.J) J.push_back(j + 1);
      row.info = {{"ordering", word_json(ord)}, {"J_prime", std::move(exps)}, {"J", std::move(J)},
                  {"phi", word_json(a.phi.word())}, {"tau", word_json(a.tau.word())}};
      return row;
    });

    json table = json::array();
    for (auto& row : rows) {
      for (auto& c : row.cx) rep.counterexamples.push_back(std::move(c));
      if (rows.size() <= 120) table.push_back(std::move(row.info));
    }
    rep.details = {{"orderings", rows.size()}};
    if (!table.empty()) rep.details["rows"] = std::move(table);
  });
}

Report verify_prop51(const WeylGroup& g, const SweepOptions& opt) {
  const RootSystem& rs = g.root_system();
  if (factorial(rs.rank()) > opt.guard) {
    throw GuardExceeded("prop51 on " + rs.type().name() + " sweeps " + std::to_string(factorial(rs.rank())) +
                        " orderings, above the guard " + std::to_string(opt.guard));
  }
  return timed("prop51", rs, [&](Report& rep) {
    const auto elements = coxeter_elements(g);
    rep.universe_size = elements.size();
    auto rows = parallel_map<Row>(elements.size(), opt.workers, [&](std::size_t k) {
      Row row;
      const auto& [ord, c] = elements[k];
      const std::size_t h = order(g, c);
      json exps = json::array();
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        try {
          exps.push_back(yz_exponent(g, c, i));
        } catch (const std::logic_error& e) {
          exps.push_back(nullptr);
          row.cx.push_back(make_cx(g, ord, "j < h", nullptr, e.what()));
        }
      }
      row.info = {{"ordering", word_json(ord)}, {"order", h}, {"exponents", std::move(exps)}};
      return row;
    });

    const std::size_t h = rows.empty() ? 0 : rows.front().info["order"].get<std::size_t>();
    json table = json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].info["order"].get<std::size_t>() != h) {
        rep.counterexamples.push_back(make_cx(g, elements[k].first, h, rows[k].info["order"],
                                              "all Coxeter elements share one order"));
      }
      for (auto& c : rows[k].cx) rep.counterexamples.push_back(std::move(c));
      table.push_back(std::move(rows[k].info));
    }
    rep.details = {{"coxeter_number", h}, {"coxeter_elements", std::move(table)}};
  });
}

Report verify_thmC_typeA(const WeylGroup& g, const SweepOptions& opt) {
  const RootSystem& rs = g.root_system();
  require_type_a(rs, "thmC_typeA");
  const std::size_t n = rs.rank();
  if (factorial(n) > opt.guard) {
    throw GuardExceeded("thmC_typeA on " + rs.type().name() + " sweeps " + std::to_string(factorial(n)) +
                        " orderings, above the guard " + std::to_string(opt.guard));
  }
  return timed("thmC_typeA", rs, [&](Report& rep) {
    const Word cw = descending_word(n);
    const WeylElement c = g.from_word(cw);
    const Weight zero(n);
    const auto n1 = static_cast<int>(n + 1);
    std::optional<int> epsilon;
    json steps = json::array();

    Weight sum_simple(n);
    for (std::size_t t = 0; t < n; ++t) sum_simple = sum_simple + rs.simple_root(t);

    for (std::size_t r = 1; r <= n; ++r) {
      ++rep.universe_size;
      const WeylElement cr = g.power(c, static_cast<long long>(r));
      const WeylElement wa = g.min_parabolic_rep(r - 1);
      if (!(cr == wa)) {
        rep.counterexamples.push_back({cr.word(), g.inverse(cr).word(), word_json(wa.word()), word_json(cr.word()),
                                       "c^" + std::to_string(r) + " = w_alpha_" + std::to_string(r)});
      }
      // c^r(alpha_j) = alpha_{(n+1+j-r) mod (n+1)} for j != r, and -theta for j = r.
      for (std::size_t j = 1; j <= n; ++j) {
        const Weight img = cr.apply(rs.simple_root(j - 1));
        const Weight want = j == r ? -sum_simple : rs.simple_root((n + 1 + j - r) % (n + 1) - 1);
        if (img != want) {
          rep.counterexamples.push_back({cr.word(), g.inverse(cr).word(), weight_json(want), weight_json(img),
                                         "c^" + std::to_string(r) + "(alpha_" + std::to_string(j) + ")"});
        }
      }

      const Weight mu = g.dot_action(g.inverse(cr), zero);
      const Weight omega = rs.fundamental_weight(r - 1);
      std::optional<int> eps;
      if (mu == n1 * omega) eps = 1;
      else if (mu == -n1 * omega) eps = -1;
      if (!eps || (epsilon && *epsilon != *eps)) {
        rep.counterexamples.push_back({cr.word(), g.inverse(cr).word(),
                                       json{{"omega", weight_json(omega)}, {"scale", n1}}, weight_json(mu),
                                       "(c^r)^{-1} . 0 = eps (n+1) omega_r with one sign for all r"});
      }
      if (eps && !epsilon) epsilon = eps;

      const std::int64_t sign = cr.length() % 2 == 0 ? 1 : -1;
      const Character chi = cohomology::euler_char(g, cr, Character::monomial(mu));
      const Character want = Character::monomial(zero, sign);
      if (chi != want) {
        rep.counterexamples.push_back({cr.word(), g.inverse(cr).word(), character_json(rs, want),
                                       character_json(rs, chi), "chi(c^r, e^{(c^r)^{-1} . 0}) = (-1)^{l} e^0"});
      }
      steps.push_back({{"r", r},
                       {"c_power", word_json(cr.word())},
                       {"length", cr.length()},
                       {"dot_zero", weight_json(mu)},
                       {"euler", character_json(rs, chi)}});
    }

    json others = json::array();
    for (const auto& [ord, cp] : coxeter_elements(g)) {
      if (is_typeA_extremal(g, cp)) continue;
      const Weight mu = g.dot_action(g.inverse(cp), zero);
      const Character chi = cohomology::euler_char(g, cp, Character::monomial(mu));
      const std::int64_t sign = cp.length() % 2 == 0 ? 1 : -1;
      others.push_back({{"ordering", word_json(ord)},
                        {"dot_zero", weight_json(mu)},
                        {"euler", character_json(rs, chi)},
                        {"matches_signed_unit", chi == Character::monomial(zero, sign)}});
    }

    rep.details = {{"coxeter_element", word_json(cw)},
                   {"epsilon", epsilon ? json(*epsilon) : json(nullptr)},
                   {"steps", std::move(steps)},
                   {"non_extremal", std::move(others)}};
  });
}

Report verify_cor52_53_58(const WeylGroup& g, const SweepOptions& opt) {
  const RootSystem& rs = g.root_system();
  require_simply_laced(rs, "cor52_53_58");
  if (factorial(rs.rank()) > opt.guard) {
    throw GuardExceeded("cor52_53_58 on " + rs.type().name() + " sweeps " + std::to_string(factorial(rs.rank())) +
                        " orderings, above the guard " + std::to_string(opt.guard));
  }
  return timed("cor52_53_58", rs, [&](Report& rep) {
    const auto elements = coxeter_elements(g);
    const Character adj = adjoint_character(rs);
    const Weight zero(rs.rank());
    rep.universe_size = elements.size();

    auto rows = parallel_map<Row>(elements.size(), opt.workers, [&](std::size_t k) {
      Row row;
      const auto& [ord, c] = elements[k];
      const std::size_t h = order(g, c);
      const bool extremal = is_typeA_extremal(g, c);

      // Least j with the tangent sections of X(c^j) filling Char(g), and the
      // running sums over C' = {c, ..., c^{h-1}} and C = {1, c, ..., c^{h-1}}.
      std::optional<std::size_t> first_full;
      Character tangent_total;
      Character euler_total = signed_dot_euler(g, g.identity());
      WeylElement cj = g.identity();
      for (std::size_t j = 1; j < h; ++j) {
        cj = g.multiply(cj, c);
        const Character t = inversion_tangent(g, cj);
        if (!first_full && t == adj) first_full = j;
        tangent_total += t;
        euler_total += signed_dot_euler(g, cj);
      }
      if (!first_full) {
        row.cx.push_back(make_cx(g, ord, "j <= h", nullptr, "no power of c has tangent sections equal to Char(g)"));
      }
      const Character tangent_want = static_cast<std::int64_t>(h - 1) * adj;
      const Character euler_want = Character::monomial(zero, static_cast<std::int64_t>(h));
      const bool tangent_ok = tangent_total == tangent_want;
      const bool euler_ok = euler_total == euler_want;
      if (extremal && !tangent_ok) {
        row.cx.push_back(make_cx(g, ord, character_json(rs, tangent_want), character_json(rs, tangent_total),
                                 "tangent sum over C' = (h-1) Char(g)"));
      }
      if (extremal && !euler_ok) {
        row.cx.push_back(make_cx(g, ord, character_json(rs, euler_want), character_json(rs, euler_total),
                                 "signed Euler sum over C = h e^0"));
      }
      row.info = {{"ordering", word_json(ord)},
                  {"order", h},
                  {"minimal_full_power", first_full ? json(*first_full) : json(nullptr)},
                  {"extremal", extremal},
                  {"tangent_sum_is_multiple", tangent_ok},
                  {"euler_sum_is_h", euler_ok}};
      return row;
    });

    json table = json::array();
    for (auto& row : rows) {
      for (auto& c : row.cx) rep.counterexamples.push_back(std::move(c));
      table.push_back(std::move(row.info));
    }
    rep.details = {{"coxeter_elements", std::move(table)}};
  });
}

}  // namespace schubert::coxeter
