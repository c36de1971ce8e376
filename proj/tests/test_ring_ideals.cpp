#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "zdlat/enumerate.hpp"
#include "zdlat/graph_metrics.hpp"
#include "zdlat/ring_ideals.hpp"

using namespace zdlat;

namespace {

std::uint64_t generator(const std::string& label, std::uint64_t n) {
  return label == "(0)" ? n : std::stoull(label.substr(1, label.size() - 2));
}

}  // namespace

TEST_CASE("ideal lattice of Z_n against divisor arithmetic") {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    CAPTURE(n);
    const auto m = ideal_lattice_zn(n);
    const auto& L = m.lattice();
    CHECK(L.size() == oracle::divisors(n).size());
    CHECK(L.label(L.bottom()) == "(0)");
    CHECK(L.label(L.top()) == "(1)");
    for (Element a = 0; a < L.size(); ++a)
      for (Element b = 0; b < L.size(); ++b) {
        const auto d = generator(L.label(a), n), e = generator(L.label(b), n);
        CHECK(L.leq(a, b) == (d % e == 0));
        CHECK(generator(L.label(L.meet(a, b)), n) == std::lcm(d, e));
        CHECK(generator(L.label(L.join(a, b)), n) == std::gcd(d, e));
        CHECK(generator(L.label(m.mult(a, b)), n) == std::gcd(d * e, n));
      }
    CHECK(is_reduced(m) == oracle::squarefree(n));
    std::vector<std::string> expected;
    for (auto p : oracle::prime_factors(n)) expected.push_back(oracle::ideal_label(p, n));
    std::vector<std::string> got;
    for (Element p : minimal_prime_elements(m).members()) got.push_back(L.label(p));
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("prime modulus") {
  const auto m = ideal_lattice_zn(13);
  CHECK(m.size() == 2);
  CHECK(gamma_mult(m).empty());
}

TEST_CASE("modulus guards") {
  try {
    ideal_lattice_zn(1);
    FAIL("expected InvalidModulus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_modulus);
  }
  try {
    ideal_lattice_zn(kMaxModulus + 1);
    FAIL("expected size guard");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::size_guard);
  }
  try {
    ideal_lattice_product({30, 30, 30});
    FAIL("expected size guard");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::size_guard);
  }
}

TEST_CASE("products") {
  SUBCASE("Z_2 x Z_2") {
    const auto m = ideal_lattice_product({2, 2});
    CHECK(m.size() == 4);
    CHECK(gamma_mult(m).edge_count() == 1);
    CHECK(minimal_prime_elements(m).count() == 2);
    CHECK(metrics(gamma_mult(m)).diameter.equals(1));
    CHECK(m.lattice().find("(1,0)").has_value());
  }
  SUBCASE("Z_2 x Z_2 x Z_2") {
    const auto m = ideal_lattice_product({2, 2, 2});
    CHECK(m.size() == 8);
    CHECK(minimal_prime_elements(m).count() == 3);
    CHECK(metrics(gamma_mult(m)).girth == 3);
  }
  SUBCASE("one-element factor") {
    const auto one = with_trivial_mult(build_lattice({"0"}, {}));
    const auto z12 = ideal_lattice_zn(12);
    const auto m = product(z12, one);
    REQUIRE(m.size() == z12.size());
    for (Element a = 0; a < m.size(); ++a)
      for (Element b = 0; b < m.size(); ++b) {
        CHECK(m.lattice().leq(a, b) == z12.lattice().leq(a, b));
        CHECK(m.mult(a, b) == z12.mult(a, b));
      }
  }
  SUBCASE("reducedness is preserved") {
    for (std::uint64_t a : {2, 4, 6, 9}) {
      for (std::uint64_t b : {3, 5, 8}) {
        const auto m = product(ideal_lattice_zn(a), ideal_lattice_zn(b));
        CHECK(is_reduced(m) == (oracle::squarefree(a) && oracle::squarefree(b)));
      }
    }
  }
}

TEST_CASE("trivial multiplication") {
  const auto fig = with_trivial_mult(catalog_entry("fig1"));
  CHECK(fig.size() == 6);
  try {
    with_trivial_mult(catalog_entry("b2"));
    FAIL("expected TopJoinReducible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::top_join_reducible);
    const auto& L = catalog_entry("b2");
    REQUIRE(e.witness().size() == 2);
    CHECK(L.join(e.witness()[0], e.witness()[1]) == L.top());
  }
  const auto c2 = with_trivial_mult(chain(2));
  for (Element a = 0; a < 2; ++a)
    for (Element b = 0; b < 2; ++b) CHECK(c2.mult(a, b) == c2.lattice().meet(a, b));
}

TEST_CASE("meet multiplication") {
  const auto grid = with_meet_mult(catalog_entry("grid3x3"));
  const Graph g = gamma_mult(grid);
  CHECK(g.size() == 4);
  const auto gm = metrics(g);
  CHECK(gm.complete_bipartite);
  CHECK(gm.part_a.size() == 2);
  CHECK(gm.part_b.size() == 2);
  CHECK(gm.diameter.equals(2));
  try {
    with_meet_mult(catalog_entry("n5"));
    FAIL("expected NotDistributive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_distributive);
    CHECK(e.witness().size() == 3);
  }
  for (std::size_t k = 2; k <= 6; ++k) CHECK(gamma_mult(with_meet_mult(chain(k))).empty());
}

TEST_CASE("annihilators") {
  const auto z12 = ideal_lattice_zn(12);
  CHECK(annihilator(z12, z12.lattice().index_of("(2)")) == z12.lattice().index_of("(6)"));
  CHECK(annihilator(z12, z12.top()) == z12.bottom());
  const auto z30 = ideal_lattice_zn(30);
  CHECK(annihilator(z30, z30.lattice().index_of("(6)")) == z30.lattice().index_of("(5)"));
  for (std::uint64_t n = 2; n <= 40; ++n) {
    const auto m = ideal_lattice_zn(n);
    const auto zd = zero_divisor_set(m);
    for (Element a = 0; a < m.size(); ++a)
      CHECK(zd.z_star.contains(a) == (a != m.bottom() && annihilator(m, a) != m.bottom()));
  }
}
