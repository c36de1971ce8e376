#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zdlat/lattice.hpp"

namespace zdlat {

/// A finite lattice with a validated multiplication.
///
/// Axiom (3) asks multiplication to distribute over arbitrary joins. For a
/// finite lattice that is the same as distributing over binary joins plus
/// the empty join (a·0 = 0), by induction on the size of the family, so
/// those two are what the validator checks. Every element of a finite
/// lattice is compact, so the lattice is trivially 1-compact, compactly
/// generated, and its compact elements are closed under multiplication.
class MultLattice {
 public:
  const FiniteLattice& lattice() const { return base_; }
  std::size_t size() const { return base_.size(); }
  Element bottom() const { return base_.bottom(); }
  Element top() const { return base_.top(); }
  const std::string& label(Element x) const { return base_.label(x); }

  Element mult(Element a, Element b) const { return table_[a * size() + b]; }
  /// a^k for k >= 1.
  Element power(Element a, std::size_t k) const;
  /// Row-major n*n table.
  const std::vector<Element>& table() const { return table_; }

 private:
  MultLattice(FiniteLattice base, std::vector<Element> table)
      : base_(std::move(base)), table_(std::move(table)) {}
  friend MultLattice attach_multiplication(FiniteLattice lattice, std::vector<Element> table);

  FiniteLattice base_;
  std::vector<Element> table_;
};

struct AxiomWitness {
  int axiom = 0;
  std::vector<Element> elements;
};

/// First violated axiom (checked in order 1..5) with its lexicographically
/// first witness, or nullopt when the table is a valid multiplication.
/// Witnesses: (1) (a,b); (2) (a,b,c); (3) (a,b,c) for binary joins and
/// (a) for the empty join; (4) (a,b); (5) (a).
std::optional<AxiomWitness> first_axiom_violation(const FiniteLattice& lattice,
                                                  std::span<const Element> table);

std::string describe(const FiniteLattice& lattice, const AxiomWitness& witness);

/// Validates and attaches `table` (row-major, n*n). Throws AxiomViolation.
MultLattice attach_multiplication(FiniteLattice lattice, std::vector<Element> table);

/// (a:b), the join of every x with x·b <= a.
Element residual(const MultLattice& m, Element a, Element b);

struct Nilpotence {
  std::size_t stabilization_index = 1;  // first k with a^k == a^(k+1)
  Element stable_power = 0;
  bool nilpotent = false;
};

Nilpotence nilpotence(const MultLattice& m, Element a);
ElementSet nil_set(const MultLattice& m);
bool is_reduced(const MultLattice& m);

/// a*, the join of every x killed by some power of a.
Element star(const MultLattice& m, Element a);

ElementSet prime_elements(const MultLattice& m);
ElementSet minimal_prime_elements(const MultLattice& m);

/// Minimal-prime test through annihilation: p is minimal iff every x <= p
/// has some y not below p and some power n with x^n·y = 0.
/// Throws not_prime if p is not prime.
bool minimal_prime_via_compact_test(const MultLattice& m, Element p);

struct ZeroDivisors {
  ElementSet z_star;  // nonzero zero divisors
  ElementSet z;       // z_star plus bottom
  bool z_is_ideal = false;
  /// Always true for a valid multiplication; recorded so that a failure
  /// shows up as an internal-consistency error.
  bool downward_closed = true;
};

ZeroDivisors zero_divisor_set(const MultLattice& m);

}  // namespace zdlat
