#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "zdlat/enumerate.hpp"
#include "zdlat/lattice.hpp"
#include "zdlat/ring_ideals.hpp"

using namespace zdlat;

namespace {

FiniteLattice fig1() { return catalog_entry("fig1"); }

ElementSet set_of(const FiniteLattice& L, std::initializer_list<const char*> labels) {
  ElementSet s(L.size());
  for (const char* l : labels) s.insert(L.index_of(l));
  return s;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::parse_error;
}

}  // namespace

TEST_CASE("fig1 lattice meets and joins") {
  const auto L = fig1();
  auto at = [&](const char* s) { return L.index_of(s); };
  CHECK(L.size() == 6);
  CHECK(L.bottom() == at("0"));
  CHECK(L.top() == at("1"));
  CHECK(L.meet(at("b"), at("c")) == at("0"));
  CHECK(L.meet(at("d"), at("c")) == at("c"));
  CHECK(L.meet(at("a"), at("c")) == at("0"));
  CHECK(L.join(at("b"), at("c")) == at("d"));
  CHECK(L.join(at("a"), at("c")) == at("d"));
  CHECK(L.leq(at("a"), at("d")));
  CHECK_FALSE(L.leq(at("c"), at("b")));
  CHECK(atoms(L) == set_of(L, {"a", "c"}));
  CHECK(L.lower_covers(L.top()) == std::vector<Element>{at("d")});
}

TEST_CASE("one-element lattice") {
  const auto L = build_lattice({"0"}, {});
  CHECK(L.size() == 1);
  CHECK(L.bottom() == L.top());
  CHECK(atoms(L).empty());
}

TEST_CASE("diamond") {
  const auto& L = catalog_entry("b2");
  auto at = [&](const char* s) { return L.index_of(s); };
  CHECK(L.meet(at("x"), at("y")) == at("0"));
  CHECK(L.join(at("x"), at("y")) == at("1"));
  for (Element x = 0; x < L.size(); ++x) CHECK(L.meet(x, L.top()) == x);
}

TEST_CASE("divisor lattice of 12 against brute-force glb and lub") {
  const auto m = ideal_lattice_zn(12);
  const auto& L = m.lattice();
  const auto le = oracle::order_of(L);
  for (Element a = 0; a < L.size(); ++a)
    for (Element b = 0; b < L.size(); ++b) {
      CHECK(L.meet(a, b) == *oracle::glb(le, a, b));
      CHECK(L.join(a, b) == *oracle::lub(le, a, b));
    }
  CHECK(L.meet(L.index_of("(2)"), L.index_of("(3)")) == L.index_of("(6)"));
  CHECK(L.join(L.index_of("(2)"), L.index_of("(3)")) == L.index_of("(1)"));
}

TEST_CASE("atoms of the divisor lattice of 6") {
  const auto L = ideal_lattice_zn(6).lattice();
  CHECK(atoms(L) == set_of(L, {"(2)", "(3)"}));
}

TEST_CASE("build_lattice errors") {
  CHECK(code_of([] { build_lattice({}, {}); }) == ErrorCode::empty_lattice);
  CHECK(code_of([] { build_lattice({"a", "a"}, {}); }) == ErrorCode::duplicate_label);
  CHECK(code_of([] { build_lattice({"a", "b"}, {{"a", "z"}}); }) == ErrorCode::unknown_label);
  CHECK(code_of([] { build_lattice({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorCode::not_a_partial_order);
  CHECK(code_of([] { build_lattice({"a", "b"}, {}); }) == ErrorCode::no_bounds);
  // Two maximal lower bounds for c and d.
  try {
    build_lattice({"0", "a", "b", "c", "d", "1"},
                  {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
    FAIL("expected NotALattice");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_lattice);
    CHECK(e.witness().size() == 2);
  }
}

TEST_CASE("classify_subset on fig1") {
  const auto L = fig1();
  const auto down_b = classify_subset(L, set_of(L, {"0", "a", "b"}));
  CHECK(down_b.semi_ideal);
  CHECK(down_b.ideal);
  CHECK(down_b.prime_ideal);

  const auto ac = classify_subset(L, set_of(L, {"0", "a", "c"}));
  CHECK(ac.semi_ideal);
  CHECK_FALSE(ac.ideal);

  const auto zero = classify_subset(L, set_of(L, {"0"}));
  CHECK(zero.ideal);
  CHECK(zero.semiprime_ideal == is_0_distributive(L));

  const auto top_filter = classify_subset(L, set_of(L, {"d", "1"}));
  CHECK(top_filter.filter);
  CHECK_FALSE(top_filter.ideal);

  CHECK(code_of([&] { classify_subset(L, ElementSet(L.size())); }) == ErrorCode::empty_subset);
}

TEST_CASE("maximal filter") {
  const auto& L = catalog_entry("b2");
  CHECK(classify_subset(L, set_of(L, {"x", "1"})).maximal_filter);
  CHECK_FALSE(classify_subset(L, set_of(L, {"1"})).maximal_filter);
  CHECK_FALSE(classify_subset(L, ElementSet::full(L.size())).maximal_filter);
}

TEST_CASE("minimal prime ideals") {
  SUBCASE("fig1") {
    const auto L = fig1();
    const auto found = minimal_prime_ideals(L);
    CHECK(std::find(found.begin(), found.end(), set_of(L, {"0", "a", "b"})) != found.end());
    CHECK(std::find(found.begin(), found.end(), set_of(L, {"0", "c"})) != found.end());
    CHECK(found.size() == 2);
  }
  SUBCASE("two-element chain") {
    const auto L = chain(2);
    CHECK(minimal_prime_ideals(L) == std::vector<ElementSet>{set_of(L, {"0"})});
  }
  SUBCASE("diamond") {
    const auto& L = catalog_entry("b2");
    const auto found = minimal_prime_ideals(L);
    CHECK(std::set<ElementSet>(found.begin(), found.end()) ==
          std::set<ElementSet>{set_of(L, {"0", "x"}), set_of(L, {"0", "y"})});
  }
  SUBCASE("oracle agreement on the catalog") {
    for (const auto& [name, L] : catalog()) {
      CAPTURE(name);
      std::set<std::vector<std::size_t>> got;
      for (const auto& s : minimal_prime_ideals(L)) got.insert(s.members());
      CHECK(got == oracle::naive_minimal_prime_ideals(L));
    }
  }
  SUBCASE("principal route agrees with subset search") {
    for (const auto& [name, L] : catalog()) {
      CAPTURE(name);
      CHECK(minimal_prime_ideals(L, 0) == minimal_prime_ideals(L));
    }
  }
  SUBCASE("lexicographic order") {
    for (const auto& [name, L] : catalog()) {
      const auto found = minimal_prime_ideals(L);
      CHECK(std::is_sorted(found.begin(), found.end()));
    }
  }
}

TEST_CASE("0-distributivity and distributivity") {
  CHECK(is_0_distributive(fig1()));
  CHECK(is_0_distributive(catalog_entry("n5")));
  for (std::size_t k = 2; k <= 6; ++k) CHECK(is_0_distributive(chain(k)));
  CHECK_FALSE(is_0_distributive(catalog_entry("m3")));
  CHECK_FALSE(is_distributive(catalog_entry("n5")));
  CHECK_FALSE(is_distributive(catalog_entry("m3")));
  CHECK(is_distributive(catalog_entry("grid3x3")));
  CHECK_FALSE(is_distributive(fig1()));
}

TEST_CASE("product lattice labels flatten") {
  const auto L = product_lattice(product_lattice(chain(2), chain(2)), chain(2));
  CHECK(L.size() == 8);
  CHECK(L.find("(0,1,0)").has_value());
  CHECK(tuple_label("(a,b)", "c") == "(a,b,c)");
}

TEST_CASE("prime ideals contain a minimal prime ideal") {
  for (const auto& [name, L] : catalog()) {
    CAPTURE(name);
    const auto minimal = minimal_prime_ideals(L);
    for (const auto& p : prime_ideals(L))
      CHECK(std::any_of(minimal.begin(), minimal.end(), [&](const ElementSet& q) { return q.is_subset_of(p); }));
  }
}

TEST_CASE("minimal prime semi-ideals size guard") {
  CHECK(code_of([] { minimal_prime_semi_ideals(chain(5), 4); }) == ErrorCode::size_guard);
  const auto& L = catalog_entry("b2");
  const auto found = minimal_prime_semi_ideals(L);
  CHECK(std::set<ElementSet>(found.begin(), found.end()) ==
        std::set<ElementSet>{set_of(L, {"0", "x"}), set_of(L, {"0", "y"})});
}

TEST_CASE("format_set") {
  const auto L = fig1();
  CHECK(format_set(L, set_of(L, {"a", "c"})) == "{a, c}");
  CHECK(format_set(L, ElementSet(L.size())) == "{}");
}
