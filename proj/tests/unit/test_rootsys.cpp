#include <doctest.h>

#include <numeric>
#include <set>

#include "schubert/rootsys.hpp"
#include "support.hpp"

using namespace schubert;
using schubert::test::rs_of;

namespace {

std::vector<int> coords_of(const Root& r) { return r.root_coords; }

std::vector<bool> simple_lengths(const RootSystem& rs) {
  std::vector<bool> out;
  for (std::size_t i = 0; i < rs.rank(); ++i) out.push_back(rs.root(rs.simple_root(i)).is_long);
  return out;
}

const char* const kAllTypes[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5", "B8",
                                 "C2", "C3", "C4", "C8", "D3", "D4", "D5", "D6", "D8", "E6", "E7", "E8", "F4", "G2"};

}  // namespace

TEST_SUITE("rootsys") {
  TEST_CASE("parsing accepts the seven families and rejects the rest") {
    CHECK(CartanType::parse("a3") == CartanType(Family::A, 3));
    CHECK(CartanType::parse("E8").name() == "E8");
    CHECK_THROWS_AS(CartanType::parse("H3"), InvalidArgument);
    CHECK_THROWS_AS(CartanType::parse("A0"), InvalidArgument);
    CHECK_THROWS_AS(CartanType::parse("E5"), InvalidArgument);
    CHECK_THROWS_AS(CartanType::parse("G3"), InvalidArgument);
    CHECK_THROWS_AS(CartanType::parse("B"), InvalidArgument);
    CHECK_THROWS_AS(CartanType::parse("A3x"), InvalidArgument);
    CHECK_THROWS_AS(CartanType::parse("A9"), InvalidArgument);
  }

  TEST_CASE("root counts follow the classical formulas") {
    for (int n = 1; n <= 8; ++n) CHECK(rs_of(("A" + std::to_string(n)).c_str()).roots().size() == n * (n + 1u));
    for (int n = 2; n <= 8; ++n) {
      CHECK(rs_of(("B" + std::to_string(n)).c_str()).roots().size() == 2u * n * n);
      CHECK(rs_of(("C" + std::to_string(n)).c_str()).roots().size() == 2u * n * n);
    }
    for (int n = 3; n <= 8; ++n) CHECK(rs_of(("D" + std::to_string(n)).c_str()).roots().size() == 2u * n * (n - 1));
    CHECK(rs_of("E6").roots().size() == 72);
    CHECK(rs_of("E7").roots().size() == 126);
    CHECK(rs_of("E8").roots().size() == 240);
    CHECK(rs_of("F4").roots().size() == 48);
    CHECK(rs_of("G2").roots().size() == 12);
  }

  TEST_CASE("Bourbaki labels: which simple roots are long") {
    CHECK(simple_lengths(rs_of("B3")) == std::vector<bool>{true, true, false});
    CHECK(simple_lengths(rs_of("C3")) == std::vector<bool>{false, false, true});
    CHECK(simple_lengths(rs_of("F4")) == std::vector<bool>{true, true, false, false});
    CHECK(simple_lengths(rs_of("G2")) == std::vector<bool>{false, true});
    CHECK(simple_lengths(rs_of("D4")) == std::vector<bool>{true, true, true, true});

    const RootSystem g2 = rs_of("G2");
    CHECK(g2.cartan(0, 1) == -3);
    CHECK(g2.cartan(1, 0) == -1);
    const RootSystem b2 = rs_of("B2");
    CHECK(b2.cartan(1, 0) == -2);
    CHECK(b2.cartan(0, 1) == -1);
  }

  TEST_CASE("E-series diagram: alpha_2 hangs off alpha_4") {
    const RootSystem e6 = rs_of("E6");
    CHECK(e6.cartan(1, 3) == -1);
    CHECK(e6.cartan(0, 2) == -1);
    CHECK(e6.cartan(1, 2) == 0);
    CHECK(e6.cartan(0, 1) == 0);
  }

  TEST_CASE("highest roots in simple-root coordinates") {
    CHECK(coords_of(rs_of("A4").highest_root()) == std::vector<int>{1, 1, 1, 1});
    CHECK(coords_of(rs_of("B4").highest_root()) == std::vector<int>{1, 2, 2, 2});
    CHECK(coords_of(rs_of("C4").highest_root()) == std::vector<int>{2, 2, 2, 1});
    CHECK(coords_of(rs_of("D5").highest_root()) == std::vector<int>{1, 2, 2, 1, 1});
    CHECK(coords_of(rs_of("E6").highest_root()) == std::vector<int>{1, 2, 2, 3, 2, 1});
    CHECK(coords_of(rs_of("E7").highest_root()) == std::vector<int>{2, 2, 3, 4, 3, 2, 1});
    CHECK(coords_of(rs_of("E8").highest_root()) == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(coords_of(rs_of("F4").highest_root()) == std::vector<int>{2, 3, 4, 2});
    CHECK(coords_of(rs_of("G2").highest_root()) == std::vector<int>{3, 2});

    CHECK(coords_of(rs_of("B3").highest_short_root()) == std::vector<int>{1, 1, 1});
    CHECK(coords_of(rs_of("C3").highest_short_root()) == std::vector<int>{1, 2, 1});
    CHECK(coords_of(rs_of("F4").highest_short_root()) == std::vector<int>{1, 2, 3, 2});
    CHECK(coords_of(rs_of("G2").highest_short_root()) == std::vector<int>{2, 1});
    CHECK(rs_of("E6").highest_short_root().weight == rs_of("E6").highest_root().weight);
  }

  TEST_CASE("the highest root is long and dominant, in fundamental coordinates") {
    CHECK(rs_of("A3").highest_root().weight == Weight{1, 0, 1});
    CHECK(rs_of("G2").highest_root().weight == Weight{0, 1});
    CHECK(rs_of("G2").highest_root().is_long);
    CHECK(rs_of("B3").highest_root().weight == Weight{0, 1, 0});
    CHECK(rs_of("C3").highest_root().weight == Weight{2, 0, 0});
  }

  TEST_CASE("Cartan determinants") {
    CHECK(rs_of("A5").cartan_determinant() == 6);
    CHECK(rs_of("B4").cartan_determinant() == 2);
    CHECK(rs_of("C4").cartan_determinant() == 2);
    CHECK(rs_of("D6").cartan_determinant() == 4);
    CHECK(rs_of("E6").cartan_determinant() == 3);
    CHECK(rs_of("E7").cartan_determinant() == 2);
    CHECK(rs_of("E8").cartan_determinant() == 1);
    CHECK(rs_of("F4").cartan_determinant() == 1);
    CHECK(rs_of("G2").cartan_determinant() == 1);
  }

  TEST_CASE("every root pairs to 2 with its own coroot and reflections permute R") {
    for (const char* name : kAllTypes) {
      CAPTURE(name);
      const RootSystem rs = rs_of(name);
      std::set<Weight> all;
      for (const auto& r : rs.roots()) all.insert(r.weight);
      for (const auto& beta : rs.roots()) {
        CHECK(rs.pairing(beta.weight, beta) == 2);
        for (const auto& gamma : rs.roots()) {
          const Weight s = rs.reflect(gamma.weight, beta.weight);
          if (!all.contains(s)) FAIL("reflection left the root system");
        }
      }
    }
  }

  TEST_CASE("rho is half the sum of the positive roots") {
    for (const char* name : kAllTypes) {
      CAPTURE(name);
      const RootSystem rs = rs_of(name);
      Weight sum(rs.rank());
      for (const auto& b : rs.positive_roots()) sum += b.weight;
      CHECK(sum == 2 * rs.rho());
    }
  }

  TEST_CASE("root coordinates are integral, sign-coherent and round-trip") {
    for (const char* name : kAllTypes) {
      CAPTURE(name);
      const RootSystem rs = rs_of(name);
      for (const auto& r : rs.roots()) {
        const auto q = rs.root_coords(r.weight);
        for (std::size_t i = 0; i < rs.rank(); ++i) {
          CHECK(q[i].denominator() == 1);
          CHECK(q[i].numerator() == r.root_coords[i]);
          CHECK((r.positive ? r.root_coords[i] >= 0 : r.root_coords[i] <= 0));
        }
        CHECK(rs.from_root_coords(r.root_coords) == r.weight);
        CHECK(std::accumulate(r.root_coords.begin(), r.root_coords.end(), 0) == r.height);
      }
    }
  }

  TEST_CASE("fundamental weights are rational in the root basis") {
    const RootSystem a2 = rs_of("A2");
    const auto q = a2.root_coords(a2.fundamental_weight(0));
    CHECK(q[0] == Rational(2, 3));
    CHECK(q[1] == Rational(1, 3));
    CHECK(a2.height(a2.rho()) == Rational(2));
  }

  TEST_CASE("root lookup and errors") {
    const RootSystem a2 = rs_of("A2");
    CHECK(a2.is_positive_root(Weight{1, 1}));
    CHECK(!a2.is_positive_root(Weight{-1, -1}));
    CHECK(a2.is_root(Weight{-1, -1}));
    CHECK(!a2.is_root(Weight{0, 0}));
    CHECK_THROWS_AS((void)a2.root(Weight{3, 0}), InvalidArgument);
    CHECK_THROWS_AS((void)a2.pairing(Weight{1, 0}, 2), InvalidArgument);
    CHECK_THROWS_AS((void)a2.simple_root(5), InvalidArgument);
  }

  TEST_CASE("dominance order") {
    const RootSystem a2 = rs_of("A2");
    CHECK(a2.dominance_leq(Weight{0, 0}, Weight{1, 1}));
    CHECK(!a2.dominance_leq(Weight{1, 0}, Weight{1, 1}));
    CHECK(a2.dominance_leq(Weight{-1, 2}, Weight{1, 1}));
  }

  TEST_CASE("the invariant form agrees with the Cartan matrix") {
    for (const char* name : {"B3", "C3", "F4", "G2", "E6"}) {
      CAPTURE(name);
      const RootSystem rs = rs_of(name);
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        for (std::size_t j = 0; j < rs.rank(); ++j) {
          const auto aij = rs.scaled_form(rs.simple_root(i), rs.simple_root(j));
          const auto aii = rs.scaled_form(rs.simple_root(i), rs.simple_root(i));
          CHECK(2 * aij == rs.cartan(i, j) * aii);
        }
      }
    }
  }

  TEST_CASE("weight arithmetic refuses to overflow") {
    Weight big(2);
    big[0] = std::numeric_limits<int>::max();
    CHECK_THROWS_AS((big + Weight{1, 0}), std::overflow_error);
    CHECK_THROWS_AS((Weight{1, 0} + Weight{1, 0, 0}), InvalidArgument);
  }
}
