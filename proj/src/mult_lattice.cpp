#include "zdlat/mult_lattice.hpp"

#include <sstream>

namespace zdlat {

Element MultLattice::power(Element a, std::size_t k) const {
  Element acc = a;
  for (std::size_t i = 1; i < k; ++i) acc = mult(acc, a);
  return acc;
}

std::optional<AxiomWitness> first_axiom_violation(const FiniteLattice& L, std::span<const Element> table) {
  const std::size_t n = L.size();
  if (table.size() != n * n) throw Error(ErrorCode::invalid_table, "multiplication table must have n*n entries");
  for (Element v : table)
    if (v >= n) throw Error(ErrorCode::invalid_table, "multiplication table entry out of range");
  auto m = [&](Element a, Element b) { return table[a * n + b]; };

  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (m(a, b) != m(b, a)) return AxiomWitness{1, {a, b}};

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (m(a, m(b, c)) != m(m(a, b), c)) return AxiomWitness{2, {a, b, c}};

  for (Element a = 0; a < n; ++a) {
    if (m(a, L.bottom()) != L.bottom()) return AxiomWitness{3, {a}};
    for (Element b = 0; b < n; ++b)
      for (Element c = b; c < n; ++c)
        if (m(a, L.join(b, c)) != L.join(m(a, b), m(a, c))) return AxiomWitness{3, {a, b, c}};
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = a; b < n; ++b)
      if (!L.leq(m(a, b), L.meet(a, b))) return AxiomWitness{4, {a, b}};

  for (Element a = 0; a < n; ++a)
    if (m(a, L.top()) != a) return AxiomWitness{5, {a}};

  return std::nullopt;
}

std::string describe(const FiniteLattice& L, const AxiomWitness& w) {
  static const char* const names[] = {"", "commutativity", "associativity", "distributivity over joins",
                                      "product below meet", "top is the identity"};
  std::ostringstream os;
  os << "axiom " << w.axiom << " (" << names[w.axiom] << ") violated at (";
  for (std::size_t i = 0; i < w.elements.size(); ++i) os << (i ? ", " : "") << L.label(w.elements[i]);
  os << ')';
  if (w.axiom == 3 && w.elements.size() == 1) os << " times the bottom";
  return os.str();
}

MultLattice attach_multiplication(FiniteLattice lattice, std::vector<Element> table) {
  if (auto w = first_axiom_violation(lattice, table)) throw AxiomViolation(w->axiom, describe(lattice, *w), w->elements);
  return MultLattice(std::move(lattice), std::move(table));
}

Element residual(const MultLattice& m, Element a, Element b) {
  const auto& L = m.lattice();
  Element acc = L.bottom();
  for (Element x = 0; x < m.size(); ++x)
    if (L.leq(m.mult(x, b), a)) acc = L.join(acc, x);
  return acc;
}

Nilpotence nilpotence(const MultLattice& m, Element a) {
  Nilpotence out;
  Element current = a;
  std::size_t k = 1;
  // a ≥ a² ≥ ... strictly descends until it stabilizes, so k <= n.
  for (;;) {
    Element next = m.mult(current, a);
    if (next == current) break;
    current = next;
    ++k;
  }
  out.stabilization_index = k;
  out.stable_power = current;
  out.nilpotent = current == m.bottom();
  return out;
}

ElementSet nil_set(const MultLattice& m) {
  ElementSet out(m.size());
  for (Element x = 0; x < m.size(); ++x)
    if (nilpotence(m, x).nilpotent) out.insert(x);
  return out;
}

bool is_reduced(const MultLattice& m) { return nil_set(m).count() == 1; }

Element star(const MultLattice& m, Element a) {
  const auto& L = m.lattice();
  const std::size_t bound = nilpotence(m, a).stabilization_index;
  Element acc = L.bottom();
  for (Element x = 0; x < m.size(); ++x) {
    Element power = a;
    for (std::size_t k = 1; k <= bound; ++k) {
      if (m.mult(power, x) == L.bottom()) {
        acc = L.join(acc, x);
        break;
      }
      power = m.mult(power, a);
    }
  }
  return acc;
}

namespace {

bool is_prime_element(const MultLattice& m, Element p) {
  const auto& L = m.lattice();
  if (p == L.top()) return false;
  for (Element a = 0; a < m.size(); ++a) {
    if (L.leq(a, p)) continue;
    for (Element b = a; b < m.size(); ++b)
      if (!L.leq(b, p) && L.leq(m.mult(a, b), p)) return false;
  }
  return true;
}

}  // namespace

ElementSet prime_elements(const MultLattice& m) {
  ElementSet out(m.size());
  for (Element p = 0; p < m.size(); ++p)
    if (is_prime_element(m, p)) out.insert(p);
  return out;
}

ElementSet minimal_prime_elements(const MultLattice& m) {
  const auto& L = m.lattice();
  const ElementSet primes = prime_elements(m);
  ElementSet out(m.size());
  for (Element p : primes.members()) {
    bool minimal = true;
    for (Element q : primes.members())
      if (L.lt(q, p)) {
        minimal = false;
        break;
      }
    if (minimal) out.insert(p);
  }
  return out;
}

bool minimal_prime_via_compact_test(const MultLattice& m, Element p) {
  const auto& L = m.lattice();
  if (!is_prime_element(m, p))
    throw Error(ErrorCode::not_prime, "'" + L.label(p) + "' is not a prime element", {p});
  for (Element x = 0; x < m.size(); ++x) {
    if (!L.leq(x, p)) continue;
    const std::size_t bound = nilpotence(m, x).stabilization_index;
    bool found = false;
    for (Element y = 0; y < m.size() && !found; ++y) {
      if (L.leq(y, p)) continue;
      for (std::size_t k = 1; k <= bound && !found; ++k)
        found = m.mult(m.power(x, k), y) == L.bottom();
    }
    if (!found) return false;
  }
  return true;
}

ZeroDivisors zero_divisor_set(const MultLattice& m) {
  const auto& L = m.lattice();
  const std::size_t n = m.size();
  ZeroDivisors out{ElementSet(n), ElementSet(n), false, true};
  for (Element x = 0; x < n; ++x) {
    if (x == L.bottom()) continue;
    for (Element y = 0; y < n; ++y)
      if (y != L.bottom() && m.mult(x, y) == L.bottom()) {
        out.z_star.insert(x);
        break;
      }
  }
  out.z = out.z_star;
  out.z.insert(L.bottom());

  for (Element a : out.z.members())
    for (Element x = 0; x < n; ++x)
      if (L.leq(x, a) && !out.z.contains(x)) out.downward_closed = false;

  out.z_is_ideal = true;
  for (Element a : out.z.members())
    for (Element b : out.z.members())
      if (!out.z.contains(L.join(a, b))) out.z_is_ideal = false;
  out.z_is_ideal = out.z_is_ideal && out.downward_closed;
  return out;
}

}  // namespace zdlat
