#include <doctest.h>

#include "oracles.hpp"
#include "zdlat/enumerate.hpp"
#include "zdlat/mult_lattice.hpp"
#include "zdlat/ring_ideals.hpp"

using namespace zdlat;

namespace {

struct Named {
  const MultLattice& m;
  Element operator()(const char* s) const { return m.lattice().index_of(s); }
};

ElementSet set_of(const MultLattice& m, std::initializer_list<const char*> labels) {
  ElementSet s(m.size());
  for (const char* l : labels) s.insert(m.lattice().index_of(l));
  return s;
}

std::vector<Element> trivial_table(const FiniteLattice& L) {
  std::vector<Element> t(L.size() * L.size(), L.bottom());
  for (Element a = 0; a < L.size(); ++a) t[a * L.size() + L.top()] = t[L.top() * L.size() + a] = a;
  return t;
}

}  // namespace

TEST_CASE("fig1 with the trivial multiplication") {
  const auto m = with_trivial_mult(catalog_entry("fig1"));
  const Named at{m};
  CHECK(m.mult(at("a"), at("b")) == at("0"));
  CHECK(m.mult(at("d"), at("1")) == at("d"));
  CHECK(residual(m, at("0"), at("a")) == at("d"));
  const auto d = nilpotence(m, at("d"));
  CHECK(d.nilpotent);
  CHECK(d.stabilization_index == 2);
  CHECK_FALSE(is_reduced(m));
  const auto zd = zero_divisor_set(m);
  CHECK(zd.z_star == set_of(m, {"a", "b", "c", "d"}));
  CHECK(zd.z == set_of(m, {"0", "a", "b", "c", "d"}));
  CHECK(zd.z_is_ideal);
  CHECK(zd.downward_closed);
}

TEST_CASE("axiom violations report the first axiom and a witness") {
  SUBCASE("diamond with the trivial table breaks axiom 3") {
    const auto& L = catalog_entry("b2");
    try {
      attach_multiplication(L, trivial_table(L));
      FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
      CHECK(e.axiom() == 3);
      const auto w = first_axiom_violation(L, trivial_table(L));
      REQUIRE(w);
      CHECK(describe(L, *w) == "axiom 3 (distributivity over joins) violated at (x, x, y)");
      CHECK(e.witness() == w->elements);
    }
  }
  SUBCASE("each axiom") {
    const auto L = chain(3);
    const Element z = 0, m = 1, t = 2;
    auto base = [&] {
      std::vector<Element> tab(9, z);
      for (Element a = 0; a < 3; ++a) tab[a * 3 + t] = tab[t * 3 + a] = a;
      return tab;
    };
    auto tab = base();
    tab[z * 3 + m] = m;  // not symmetric
    CHECK(first_axiom_violation(L, tab)->axiom == 1);

    tab = base();
    tab[m * 3 + m] = t;
    CHECK(first_axiom_violation(L, tab)->axiom == 3);

    tab = base();
    tab[t * 3 + t] = m;
    CHECK(first_axiom_violation(L, tab)->axiom == 2);

    tab = base();
    tab[m * 3 + m] = t;
    tab[m * 3 + t] = tab[t * 3 + m] = t;
    tab[t * 3 + t] = t;
    const auto w = first_axiom_violation(L, tab);
    REQUIRE(w);
    CHECK(w->axiom == 4);
    CHECK(w->elements == std::vector<Element>{m, m});

    CHECK_FALSE(first_axiom_violation(L, base()).has_value());
  }
  SUBCASE("axiom 5 on the two-element chain") {
    const auto L = chain(2);
    CHECK(first_axiom_violation(L, std::vector<Element>{0, 0, 0, 0})->axiom == 5);
  }
  SUBCASE("wrong table size") {
    CHECK_THROWS_AS(attach_multiplication(chain(2), {0, 0, 0}), Error);
  }
}

TEST_CASE("ideals of Z_12") {
  const auto m = ideal_lattice_zn(12);
  const Named at{m};
  CHECK(residual(m, at("(4)"), at("(2)")) == at("(2)"));
  CHECK(oracle::naive_residual(m, at("(4)"), at("(2)")) == at("(2)"));
  const auto six = nilpotence(m, at("(6)"));
  CHECK(six.nilpotent);
  CHECK(six.stabilization_index == 2);
  CHECK(nilpotence(m, at("(0)")).stabilization_index == 1);
  CHECK(nilpotence(m, at("(0)")).nilpotent);
  CHECK_FALSE(is_reduced(m));
  CHECK(nil_set(m) == set_of(m, {"(0)", "(6)"}));
  CHECK(star(m, at("(6)")) == at("(1)"));
  CHECK(prime_elements(m) == set_of(m, {"(2)", "(3)"}));
  CHECK(minimal_prime_elements(m) == set_of(m, {"(2)", "(3)"}));
  CHECK(minimal_prime_via_compact_test(m, at("(2)")));
  const auto zd = zero_divisor_set(m);
  CHECK(zd.z_star == set_of(m, {"(2)", "(3)", "(4)", "(6)"}));
  CHECK_FALSE(zd.z_is_ideal);
}

TEST_CASE("ideals of Z_30") {
  const auto m = ideal_lattice_zn(30);
  const Named at{m};
  CHECK(is_reduced(m));
  CHECK(star(m, at("(6)")) == at("(5)"));
  CHECK(star(m, at("(6)")) == residual(m, at("(0)"), at("(6)")));
  CHECK(star(m, at("(0)")) == at("(1)"));
  CHECK(prime_elements(m) == set_of(m, {"(2)", "(3)", "(5)"}));
  CHECK(minimal_prime_elements(m) == set_of(m, {"(2)", "(3)", "(5)"}));
  CHECK(minimal_prime_via_compact_test(m, at("(2)")));
  CHECK_THROWS_AS(minimal_prime_via_compact_test(m, at("(6)")), Error);
}

TEST_CASE("residual laws") {
  const auto m = ideal_lattice_zn(36);
  for (Element a = 0; a < m.size(); ++a) {
    CHECK(residual(m, a, m.top()) == a);
    for (Element b = 0; b < m.size(); ++b) {
      CHECK(m.lattice().leq(a, residual(m, a, b)));
      CHECK(residual(m, a, b) == oracle::naive_residual(m, a, b));
    }
  }
}

TEST_CASE("meet multiplication is reduced") {
  const auto m = with_meet_mult(catalog_entry("grid3x3"));
  CHECK(is_reduced(m));
  const Named at{m};
  CHECK(minimal_prime_elements(m) == set_of(m, {"(2,0)", "(0,2)"}));
  CHECK(m.lattice().meet(at("(2,0)"), at("(0,2)")) == m.bottom());
}

TEST_CASE("bottom is prime in a domain") {
  const auto m = ideal_lattice_zn(7);
  CHECK(prime_elements(m) == set_of(m, {"(0)"}));
  CHECK(minimal_prime_via_compact_test(m, m.bottom()));
  const auto zd = zero_divisor_set(m);
  CHECK(zd.z_star.empty());
  CHECK(zd.z_is_ideal);
}

TEST_CASE("powers") {
  const auto m = ideal_lattice_zn(16);
  const Named at{m};
  CHECK(m.power(at("(2)"), 1) == at("(2)"));
  CHECK(m.power(at("(2)"), 3) == at("(8)"));
  CHECK(m.power(at("(2)"), 4) == at("(0)"));
  CHECK(nilpotence(m, at("(2)")).stabilization_index == 4);
}
