#include "schubert/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>

#include "schubert/checked.hpp"

namespace schubert {

namespace {

bool admissible(Family f, std::size_t r) {
  switch (f) {
    case Family::A: return r >= 1 && r <= kMaxRank;
    case Family::B:
    case Family::C: return r >= 2 && r <= kMaxRank;
    case Family::D: return r >= 3 && r <= kMaxRank;
    case Family::E: return r >= 6 && r <= 8;
    case Family::F: return r == 4;
    case Family::G: return r == 2;
  }
  return false;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t out = 1;
  for (std::uint64_t k = 2; k <= n; ++k) out = checked_mul(out, k);
  return out;
}

std::vector<std::vector<int>> cartan_matrix(const CartanType& t) {
  const std::size_t n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  // c[i][j] = a, c[j][i] = b
  auto link = [&](std::size_t i, std::size_t j, int a = -1, int b = -1) {
    c[i][j] = a;
    c[j][i] = b;
  };
  switch (t.family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -1, -2);
      break;
    case Family::C:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -2, -1);
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2, -1, -2);
      link(2, 3);
      break;
    case Family::G:
      link(0, 1, -3, -1);
      break;
  }
  return c;
}

// Exact inverse by Gauss-Jordan over the rationals.
std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m, Rational& det) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].numerator() == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Cartan matrix");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].numerator() == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

CartanType::CartanType(Family f, std::size_t r) : family(f), rank(r) {
  if (!admissible(f, r)) {
    throw InvalidArgument("rank " + std::to_string(r) + " is not admissible for family " +
                          std::string(1, static_cast<char>(f)));
  }
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidArgument("cannot parse Cartan type '" + std::string(text) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (f < 'A' || f > 'G') throw InvalidArgument("unknown Cartan family '" + std::string(1, text[0]) + "'");
  std::size_t r = 0;
  const auto* first = text.data() + 1;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, r);
  if (ec != std::errc{} || ptr != last) {
    throw InvalidArgument("cannot parse rank in Cartan type '" + std::string(text) + "'");
  }
  return CartanType(static_cast<Family>(f), r);
}

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool CartanType::simply_laced() const {
  return family == Family::A || family == Family::D || family == Family::E;
}

std::uint64_t CartanType::weyl_group_order() const {
  const std::uint64_t n = rank;
  switch (family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return checked_mul(std::uint64_t{1} << n, factorial(n));
    case Family::D: return checked_mul(std::uint64_t{1} << (n - 1), factorial(n));
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::size_t CartanType::root_count() const {
  const std::size_t n = rank;
  switch (family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

Weight::Weight(std::size_t rank) : rank_(rank) {
  if (rank > kMaxRank) throw InvalidArgument("rank exceeds " + std::to_string(kMaxRank));
}

Weight::Weight(std::initializer_list<int> coords) : Weight(coords.size()) {
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

Weight Weight::from_span(std::span<const int> coords) {
  Weight w(coords.size());
  std::copy(coords.begin(), coords.end(), w.coords_.begin());
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.begin() + rank_, [](int c) { return c == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.begin() + rank_, [](int c) { return c >= 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank_ != rank_) throw InvalidArgument("rank mismatch in weight addition");
  for (std::size_t i = 0; i < rank_; ++i) coords_[i] = checked_add(coords_[i], o.coords_[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank_ != rank_) throw InvalidArgument("rank mismatch in weight subtraction");
  for (std::size_t i = 0; i < rank_; ++i) coords_[i] = checked_sub(coords_[i], o.coords_[i]);
  return *this;
}

Weight operator-(const Weight& a) { return Weight(a.rank()) - a; }

Weight operator*(long long k, const Weight& a) {
  Weight out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    out[i] = checked_cast<int>(checked_mul<long long>(k, a[i]));
  }
  return out;
}

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = w.rank();
  for (int c : w.coords()) h = h * 1000003u ^ static_cast<std::size_t>(static_cast<unsigned>(c));
  return h;
}

RootSystem::RootSystem(CartanType type) : type_(type), cartan_(cartan_matrix(type)) {
  const std::size_t n = type_.rank;

  Rational det;
  const auto inv = invert(cartan_, det);
  if (det.denominator() != 1) throw std::logic_error("non-integral Cartan determinant");
  det_ = det.numerator();
  adjugate_.assign(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational a = inv[i][j] * det_;
      if (a.denominator() != 1) throw std::logic_error("non-integral adjugate");
      adjugate_[i][j] = a.numerator();
    }
  }

  // d_i c[i][j] = d_j c[j][i]; propagate along the (connected) diagram.
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || cartan_[i][j] == 0 || d[j].numerator() != 0) continue;
      d[j] = d[i] * Rational(cartan_[i][j], cartan_[j][i]);
      queue.push_back(j);
    }
  }
  const Rational dmin = *std::min_element(d.begin(), d.end());
  half_len_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational v = d[i] / dmin;
    if (v.denominator() != 1) throw std::logic_error("non-integral root length ratio");
    half_len_[i] = static_cast<int>(v.numerator());
  }

  for (std::size_t j = 0; j < n; ++j) {
    Weight a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = cartan_[i][j];
    simple_.push_back(a);
    Weight w(n);
    w[j] = 1;
    fundamental_.push_back(w);
  }
  rho_ = Weight(n);
  for (std::size_t i = 0; i < n; ++i) rho_[i] = 1;

  // Reflection closure of the simple roots, tracking both coordinate systems.
  struct Raw {
    Weight w;
    std::vector<int> rc;
  };
  std::vector<Raw> all;
  std::unordered_map<Weight, std::size_t, WeightHash> seen;
  std::deque<std::size_t> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> rc(n, 0);
    rc[i] = 1;
    seen.emplace(simple_[i], all.size());
    frontier.push_back(all.size());
    all.push_back({simple_[i], rc});
  }
  while (!frontier.empty()) {
    const std::size_t k = frontier.front();
    frontier.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      const int m = all[k].w[i];
      Weight w = all[k].w - static_cast<long long>(m) * simple_[i];
      if (seen.contains(w)) continue;
      std::vector<int> rc = all[k].rc;
      rc[i] = checked_sub(rc[i], m);
      seen.emplace(w, all.size());
      frontier.push_back(all.size());
      all.push_back({w, std::move(rc)});
    }
  }
  if (all.size() != type_.root_count()) {
    throw std::logic_error("root enumeration produced " + std::to_string(all.size()) + " roots for " +
                           type_.name());
  }

  std::vector<Raw> pos;
  for (auto& r : all) {
    const bool nonneg = std::all_of(r.rc.begin(), r.rc.end(), [](int c) { return c >= 0; });
    const bool nonpos = std::all_of(r.rc.begin(), r.rc.end(), [](int c) { return c <= 0; });
    if (nonneg == nonpos) throw std::logic_error("root with mixed-sign coordinates");
    if (nonneg) pos.push_back(r);
  }
  auto height_of = [](const std::vector<int>& rc) { return std::accumulate(rc.begin(), rc.end(), 0); };
  std::sort(pos.begin(), pos.end(), [&](const Raw& a, const Raw& b) {
    const int ha = height_of(a.rc), hb = height_of(b.rc);
    if (ha != hb) return ha < hb;
    return a.rc < b.rc;
  });

  auto make_root = [&](const Weight& w, const std::vector<int>& rc, bool positive) {
    Root r;
    r.weight = w;
    r.root_coords = rc;
    r.positive = positive;
    r.height = height_of(rc);
    // (beta, beta) = sum_i beta_i d_i rc_i
    std::int64_t norm = 0;
    for (std::size_t i = 0; i < n; ++i) norm += static_cast<std::int64_t>(w[i]) * half_len_[i] * rc[i];
    r.coroot_coeffs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t num = 2LL * half_len_[i] * rc[i];
      if (num % norm != 0) throw std::logic_error("non-integral coroot coefficient");
      r.coroot_coeffs[i] = static_cast<int>(num / norm);
    }
    return std::pair{r, norm};
  };

  std::vector<std::int64_t> norms;
  for (const auto& p : pos) {
    auto [r, norm] = make_root(p.w, p.rc, true);
    roots_.push_back(std::move(r));
    norms.push_back(norm);
  }
  for (const auto& p : pos) {
    std::vector<int> rc(n);
    for (std::size_t i = 0; i < n; ++i) rc[i] = -p.rc[i];
    auto [r, norm] = make_root(-p.w, rc, false);
    roots_.push_back(std::move(r));
    norms.push_back(norm);
  }
  const std::int64_t longest = *std::max_element(norms.begin(), norms.end());
  for (std::size_t k = 0; k < roots_.size(); ++k) roots_[k].is_long = norms[k] == longest;
  for (std::size_t k = 0; k < roots_.size(); ++k) index_.emplace(roots_[k].weight, k);

  highest_root_ = pos.size() - 1;
  highest_short_root_ = highest_root_;
  for (std::size_t k = pos.size(); k-- > 0;) {
    if (!roots_[k].is_long || simply_laced()) {
      highest_short_root_ = k;
      break;
    }
  }
  for (const auto& r : positive_roots()) {
    if (!dominance_leq(r.weight, highest_root().weight)) {
      throw std::logic_error("highest root does not dominate " + r.weight.str());
    }
  }
}

void RootSystem::check_index(std::size_t i) const {
  if (i >= rank()) {
    throw InvalidArgument("simple root index " + std::to_string(i + 1) + " out of range for " + type_.name());
  }
}

const Weight& RootSystem::simple_root(std::size_t i) const {
  check_index(i);
  return simple_[i];
}

const Weight& RootSystem::fundamental_weight(std::size_t i) const {
  check_index(i);
  return fundamental_[i];
}

std::optional<std::size_t> RootSystem::find_root(const Weight& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_positive_root(const Weight& w) const {
  auto k = find_root(w);
  return k && roots_[*k].positive;
}

const Root& RootSystem::root(const Weight& w) const {
  auto k = find_root(w);
  if (!k) throw InvalidArgument(w.str() + " is not a root of " + type_.name());
  return roots_[*k];
}

int RootSystem::pairing(const Weight& lambda, std::size_t i) const {
  check_index(i);
  return lambda[i];
}

int RootSystem::pairing(const Weight& lambda, const Root& beta) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    s = checked_add<std::int64_t>(s, checked_mul<std::int64_t>(lambda[i], beta.coroot_coeffs[i]));
  }
  return checked_cast<int>(s);
}

Weight RootSystem::reflect(const Weight& lambda, std::size_t i) const {
  check_index(i);
  return lambda - static_cast<long long>(lambda[i]) * simple_[i];
}

Weight RootSystem::reflect(const Weight& lambda, const Weight& beta) const {
  const Root& r = root(beta);
  return lambda - static_cast<long long>(pairing(lambda, r)) * r.weight;
}

std::vector<Rational> RootSystem::root_coords(const Weight& w) const {
  const std::size_t n = rank();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s = checked_add(s, checked_mul<std::int64_t>(adjugate_[i][j], w[j]));
    out[i] = Rational(s, det_);
  }
  return out;
}

Weight RootSystem::from_root_coords(std::span<const int> coords) const {
  if (coords.size() != rank()) throw InvalidArgument("expected " + std::to_string(rank()) + " root coordinates");
  Weight w(rank());
  for (std::size_t j = 0; j < rank(); ++j) w += static_cast<long long>(coords[j]) * simple_[j];
  return w;
}

Rational RootSystem::height(const Weight& w) const {
  Rational h = 0;
  for (const auto& c : root_coords(w)) h += c;
  return h;
}

bool RootSystem::dominance_leq(const Weight& mu, const Weight& lambda) const {
  for (const auto& c : root_coords(lambda - mu)) {
    if (c.denominator() != 1 || c < 0) return false;
  }
  return true;
}

std::int64_t RootSystem::scaled_form(const Weight& a, const Weight& b) const {
  const std::size_t n = rank();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t adj_b = 0;
    for (std::size_t j = 0; j < n; ++j) adj_b = checked_add(adj_b, checked_mul<std::int64_t>(adjugate_[i][j], b[j]));
    s = checked_add(s, checked_mul(checked_mul<std::int64_t>(a[i], half_len_[i]), adj_b));
  }
  return s;
}

}  // namespace schubert
