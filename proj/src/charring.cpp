#include "schubert/charring.hpp"

#include <algorithm>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "schubert/checked.hpp"

namespace schubert {

Character Character::monomial(const Weight& w, std::int64_t mult) {
  Character c;
  c.add(w, mult);
  return c;
}

void Character::add(const Weight& w, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, mult);
  if (inserted) return;
  it->second = checked_add(it->second, mult);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t Character::mult(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Character::dimension() const {
  std::int64_t d = 0;
  for (const auto& [w, m] : terms_) d = checked_add(d, m);
  return d;
}

bool Character::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

bool Character::termwise_leq(const Character& other) const {
  for (const auto& [w, m] : terms_)
    if (m > other.mult(w)) return false;
  for (const auto& [w, m] : other.terms_)
    if (m < 0 && mult(w) > m) return false;
  return true;
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [w, m] : o.terms_) add(w, m);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  for (const auto& [w, m] : o.terms_) add(w, checked_sub<std::int64_t>(0, m));
  return *this;
}

Character operator*(std::int64_t k, const Character& c) {
  Character out;
  if (k == 0) return out;
  for (const auto& [w, m] : c.terms_) out.terms_.emplace(w, checked_mul(k, m));
  return out;
}

std::vector<Character::Term> Character::sorted_terms(const RootSystem& rs) const {
  std::vector<std::pair<Rational, Term>> keyed;
  keyed.reserve(terms_.size());
  for (const auto& t : terms_) keyed.emplace_back(rs.height(t.first), t);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.first < b.second.first;
  });
  std::vector<Term> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

std::string Character::str(const RootSystem& rs) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, m] : sorted_terms(rs)) {
    if (!first) s += m < 0 ? " - " : " + ";
    else if (m < 0) s += "-";
    first = false;
    const std::int64_t a = m < 0 ? -m : m;
    if (a != 1) s += std::to_string(a);
    s += "e^" + w.str();
  }
  return s;
}

Character demazure_op(const RootSystem& rs, std::size_t i, const Character& f) {
  const Weight& alpha = rs.simple_root(i);
  Character out;
  for (const auto& [lambda, mult] : f.terms()) {
    const int m = rs.pairing(lambda, i);
    if (m >= 0) {
      Weight w = lambda;
      for (int k = 0; k <= m; ++k) {
        out.add(w, mult);
        w -= alpha;
      }
    } else if (m <= -2) {
      Weight w = lambda;
      for (int k = 1; k <= -m - 1; ++k) {
        w += alpha;
        out.add(w, checked_sub<std::int64_t>(0, mult));
      }
    }
    // m == -1 contributes nothing.
  }
  return out;
}

Character demazure_along_word(const RootSystem& rs, const Word& word, const Character& f) {
  Character cur = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = demazure_op(rs, *it, cur);
  return cur;
}

Character adjoint_character(const RootSystem& rs) {
  Character c;
  for (const auto& r : rs.roots()) c.add(r.weight, 1);
  c.add(Weight(rs.rank()), static_cast<std::int64_t>(rs.rank()));
  return c;
}

Character freudenthal_char(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_dominant()) throw InvalidArgument("highest weight " + lambda.str() + " is not dominant");
  const auto& rho = rs.rho();
  const std::int64_t top = rs.scaled_form(lambda + rho, lambda + rho);

  Character out = Character::monomial(lambda);
  std::vector<Weight> level{lambda};
  for (int depth = 1; !level.empty(); ++depth) {
    std::unordered_set<Weight, WeightHash> candidates;
    for (const auto& nu : level)
      for (std::size_t i = 0; i < rs.rank(); ++i) candidates.insert(nu - rs.simple_root(i));

    std::vector<Weight> sorted(candidates.begin(), candidates.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Weight> next;
    for (const auto& mu : sorted) {
      std::int64_t rhs = 0;
      for (const auto& beta : rs.positive_roots()) {
        Weight up = mu;
        for (int k = 1; k * beta.height <= depth; ++k) {
          up += beta.weight;
          const std::int64_t m = out.mult(up);
          if (m == 0) continue;
          rhs = checked_add(rhs, checked_mul(m, rs.scaled_form(up, beta.weight)));
        }
      }
      rhs = checked_mul<std::int64_t>(2, rhs);
      const std::int64_t den = top - rs.scaled_form(mu + rho, mu + rho);
      if (den == 0) {
        if (rhs != 0) throw std::logic_error("Freudenthal recursion hit a zero denominator");
        continue;
      }
      if (rhs % den != 0) throw std::logic_error("Freudenthal multiplicity is not integral");
      const std::int64_t m = rhs / den;
      if (m < 0) throw std::logic_error("negative Freudenthal multiplicity");
      if (m > 0) {
        out.add(mu, m);
        next.push_back(mu);
      }
    }
    level = std::move(next);
  }
  return out;
}

std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_dominant()) throw InvalidArgument("weight " + lambda.str() + " is not dominant");
  using boost::multiprecision::cpp_int;
  cpp_int num = 1, den = 1;
  const Weight shifted = lambda + rs.rho();
  for (const auto& beta : rs.positive_roots()) {
    num *= rs.pairing(shifted, beta);
    den *= rs.pairing(rs.rho(), beta);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension formula gave a non-integer");
  const cpp_int q = num / den;
  if (q > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("Weyl dimension exceeds 64 bits");
  return q.convert_to<std::int64_t>();
}

}  // namespace schubert
