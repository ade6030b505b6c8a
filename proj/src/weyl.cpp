#include "schubert/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "schubert/checked.hpp"

namespace schubert {

using Matrix = std::array<int, kMaxRank * kMaxRank>;

std::string format_word(const Word& w) {
  std::string s = "[";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(w[k] + 1);
  }
  return s + "]";
}

Word parse_word(std::string_view text, std::size_t rank) {
  Word out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view tok = text.substr(pos, end - pos);
    std::size_t letter = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), letter);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw InvalidArgument("bad letter '" + std::string(tok) + "' in word");
    }
    if (letter < 1 || letter > rank) {
      throw InvalidArgument("letter " + std::to_string(letter) + " out of range 1.." + std::to_string(rank));
    }
    out.push_back(letter - 1);
    pos = end + 1;
  }
  return out;
}

Weight WeylElement::apply(const Weight& lambda) const {
  if (lambda.rank() != rank_) throw InvalidArgument("rank mismatch applying Weyl element");
  Weight out(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    long long s = 0;
    for (std::size_t j = 0; j < rank_; ++j) {
      s = checked_add(s, checked_mul<long long>(m_[i * kMaxRank + j], lambda[j]));
    }
    out[i] = checked_cast<int>(s);
  }
  return out;
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const noexcept {
  std::size_t h = w.rank_;
  for (std::size_t i = 0; i < w.rank_; ++i)
    for (std::size_t j = 0; j < w.rank_; ++j)
      h = h * 1000003u ^ static_cast<std::size_t>(static_cast<unsigned>(w.m_[i * kMaxRank + j]));
  return h;
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(&rs) {
  const std::size_t n = rs.rank();
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m{};
    for (std::size_t k = 0; k < n; ++k) m[k * kMaxRank + k] = 1;
    // s_i(lambda) = lambda - lambda_i alpha_i, so only column i changes.
    for (std::size_t k = 0; k < n; ++k) m[k * kMaxRank + i] -= rs.cartan(k, i);
    simple_.push_back(m);
  }
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  w0_ = parabolic_longest(all);
}

Matrix WeylGroup::product(const Matrix& a, const Matrix& b) const {
  const std::size_t n = rank();
  Matrix out{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const int aik = a[i * kMaxRank + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out[i * kMaxRank + j] =
            checked_add(out[i * kMaxRank + j], checked_mul(aik, b[k * kMaxRank + j]));
      }
    }
  return out;
}

bool WeylGroup::sends_negative(const Matrix& m, const Weight& root) const {
  const std::size_t n = rank();
  Weight img(n);
  for (std::size_t i = 0; i < n; ++i) {
    int s = 0;
    for (std::size_t j = 0; j < n; ++j) s = checked_add(s, checked_mul(m[i * kMaxRank + j], root[j]));
    img[i] = s;
  }
  auto k = rs_->find_root(img);
  if (!k) throw std::logic_error("Weyl element maps a root outside the root system");
  return !rs_->roots()[*k].positive;
}

WeylElement WeylGroup::from_matrix(const Matrix& m) const {
  const std::size_t n = rank();
  WeylElement out;
  out.rank_ = n;
  out.m_ = m;
  Matrix cur = m;
  Word rev;
  const std::size_t bound = rs_->positive_roots().size();
  for (;;) {
    std::size_t i = 0;
    while (i < n && !sends_negative(cur, rs_->simple_root(i))) ++i;
    if (i == n) break;
    rev.push_back(i);
    if (rev.size() > bound) throw std::logic_error("matrix is not a Weyl group element");
    cur = product(cur, simple_[i]);
  }
  Matrix id{};
  for (std::size_t k = 0; k < n; ++k) id[k * kMaxRank + k] = 1;
  if (cur != id) throw std::logic_error("matrix is not a Weyl group element");
  out.word_.assign(rev.rbegin(), rev.rend());
  return out;
}

WeylElement WeylGroup::identity() const { return from_word({}); }

WeylElement WeylGroup::simple_reflection(std::size_t i) const { return from_word({i}); }

WeylElement WeylGroup::from_word(const Word& w) const {
  const std::size_t n = rank();
  Matrix m{};
  for (std::size_t k = 0; k < n; ++k) m[k * kMaxRank + k] = 1;
  for (std::size_t letter : w) {
    if (letter >= n) throw InvalidArgument("letter " + std::to_string(letter + 1) + " out of range");
    m = product(m, simple_[letter]);
  }
  return from_matrix(m);
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  return from_matrix(product(a.m_, b.m_));
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  return from_word(Word(w.word().rbegin(), w.word().rend()));
}

WeylElement WeylGroup::power(const WeylElement& w, long long k) const {
  const WeylElement base = k < 0 ? inverse(w) : w;
  WeylElement out = identity();
  for (long long e = k < 0 ? -k : k; e > 0; --e) out = multiply(out, base);
  return out;
}

std::vector<Weight> WeylGroup::inversion_set(const WeylElement& w) const {
  std::vector<Weight> out;
  for (const auto& r : rs_->positive_roots()) {
    if (sends_negative(w.m_, r.weight)) out.push_back(r.weight);
  }
  return out;
}

bool WeylGroup::is_right_descent(const WeylElement& w, std::size_t i) const {
  return sends_negative(w.m_, rs_->simple_root(i));
}

bool WeylGroup::is_left_descent(const WeylElement& w, std::size_t i) const {
  // <w rho, alpha_i^vee> < 0, and rho has all fundamental coordinates 1.
  int s = 0;
  for (std::size_t j = 0; j < rank(); ++j) s += w.entry(i, j);
  return s < 0;
}

bool WeylGroup::bruhat_leq(const WeylElement& u, const WeylElement& w) const {
  WeylElement x = u, y = w;
  for (;;) {
    if (x.length() > y.length()) return false;
    if (y.is_identity()) return x.is_identity();
    std::size_t i = 0;
    while (!is_left_descent(y, i)) ++i;
    const WeylElement s = simple_reflection(i);
    y = multiply(s, y);
    if (is_left_descent(x, i)) x = multiply(s, x);
  }
}

WeylElement WeylGroup::parabolic_longest(const std::vector<std::size_t>& generators) const {
  WeylElement cur = identity();
  for (;;) {
    auto it = std::find_if(generators.begin(), generators.end(),
                           [&](std::size_t j) { return !is_right_descent(cur, j); });
    if (it == generators.end()) return cur;
    cur = multiply(cur, simple_reflection(*it));
  }
}

WeylElement WeylGroup::min_parabolic_rep(std::size_t i) const {
  if (i >= rank()) throw InvalidArgument("simple root index " + std::to_string(i + 1) + " out of range");
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < rank(); ++j)
    if (j != i) others.push_back(j);
  WeylElement rep = multiply(w0_, parabolic_longest(others));

  // R+(w_alpha) must be exactly the positive roots that dominate alpha.
  const auto inv = inversion_set(rep);
  std::vector<Weight> expected;
  for (const auto& r : rs_->positive_roots())
    if (r.root_coords[i] >= 1) expected.push_back(r.weight);
  if (inv != expected) throw std::logic_error("minimal parabolic representative has wrong inversion set");
  return rep;
}

std::vector<WeylElement> WeylGroup::enumerate(std::uint64_t guard) const {
  const std::uint64_t order = rs_->type().weyl_group_order();
  if (order > guard) {
    throw GuardExceeded("|W(" + rs_->type().name() + ")| = " + std::to_string(order) + " exceeds guard " +
                        std::to_string(guard));
  }
  std::vector<WeylElement> out;
  out.reserve(order);
  std::unordered_set<WeylElement, WeylElementHash> seen;
  std::vector<WeylElement> level{identity()};
  seen.insert(level.front());
  while (!level.empty()) {
    out.insert(out.end(), level.begin(), level.end());
    std::vector<WeylElement> next;
    for (const auto& w : level) {
      for (std::size_t i = 0; i < rank(); ++i) {
        if (is_right_descent(w, i)) continue;
        WeylElement child = from_matrix(product(w.m_, simple_[i]));
        if (seen.insert(child).second) next.push_back(std::move(child));
      }
    }
    std::sort(next.begin(), next.end(), [](const WeylElement& a, const WeylElement& b) { return a.word() < b.word(); });
    level = std::move(next);
  }
  if (out.size() != order) throw std::logic_error("enumeration size disagrees with |W|");
  return out;
}

Weight WeylGroup::dot_action(const WeylElement& w, const Weight& lambda) const {
  return w.apply(lambda + rs_->rho()) - rs_->rho();
}

}  // namespace schubert
