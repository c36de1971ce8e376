#pragma once

#include <cstdint>
#include <vector>

#include "zdlat/mult_lattice.hpp"

namespace zdlat {

inline constexpr std::uint64_t kMaxModulus = 1'000'000;
inline constexpr std::size_t kMaxIdealCount = 128;

/// Lattice of ideals of Z_n. One element per positive divisor d of n,
/// labeled "(d)" except the zero ideal (n), which is labeled "(0)".
/// (d) <= (e) iff e | d; meet is lcm, join is gcd, and the product is
/// gcd(d·e, n). Elements are indexed by decreasing divisor, so the zero
/// ideal comes first and (1) last.
/// Throws invalid_modulus for n < 2 and size_guard past the desk-scale
/// limits above.
MultLattice ideal_lattice_zn(std::uint64_t n);

/// Ideal lattice of Z_m1 × Z_m2 × ..., i.e. the product of the factors'
/// ideal lattices. Labels are tuples of generators, e.g. "(1,0)".
MultLattice ideal_lattice_product(const std::vector<std::uint64_t>& moduli);

/// Componentwise product of two multiplicative lattices.
MultLattice product(const MultLattice& first, const MultLattice& second);

/// x·y = 0 for x, y != 1 and x·1 = x. Needs 1 to have exactly one lower
/// cover; throws top_join_reducible with two lower covers of 1 otherwise.
MultLattice with_trivial_mult(const FiniteLattice& lattice);

/// Multiplication equal to meet. Throws not_distributive with a witness
/// triple (a, b, c) where a ∧ (b ∨ c) differs from (a ∧ b) ∨ (a ∧ c).
MultLattice with_meet_mult(const FiniteLattice& lattice);

/// The annihilator (0 : a).
Element annihilator(const MultLattice& m, Element a);

}  // namespace zdlat
