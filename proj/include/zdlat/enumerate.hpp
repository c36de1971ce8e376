#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdlat/mult_lattice.hpp"

namespace zdlat {

inline constexpr std::size_t kEnumerationCap = 6;

/// A cell (a, b), a <= b by index, of the commutative multiplication table
/// that the axioms do not force. Cells involving bottom (a·0 = 0) or top
/// (a·1 = a) are fixed and never enumerated.
struct Cell {
  Element a;
  Element b;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Free cells in row-major order over the upper triangle.
std::vector<Cell> free_cells(const FiniteLattice& lattice);

struct EnumerationJob {
  FiniteLattice base;
  std::optional<std::size_t> limit;
  /// Fixed values for the first k free cells. Disjoint prefixes partition
  /// the search space.
  std::vector<Element> partition_prefix;
  std::size_t size_cap = kEnumerationCap;
};

/// Receives each instance; return false to stop early.
using InstanceSink = std::function<bool(const MultLattice&)>;

/// Emits every valid multiplication on job.base exactly once, in a fixed
/// order (free cells row-major, candidate values ascending by index).
/// Candidates for a·b range over elements below a ∧ b, and partial
/// associativity and distributivity checks prune as soon as a constraint is
/// fully determined. Returns the number emitted. Throws cap_exceeded when
/// the base lattice is larger than job.size_cap.
std::size_t enumerate_multiplications(const EnumerationJob& job, const InstanceSink& sink);

/// Convenience wrapper collecting all instances.
std::vector<MultLattice> all_multiplications(const FiniteLattice& base, std::size_t size_cap = kEnumerationCap);

/// Every assignment of candidate values (those below a ∧ b) to the first
/// `depth` free cells, in enumeration order. Running one job per prefix
/// covers the whole space exactly once.
std::vector<std::vector<Element>> partition_prefixes(const FiniteLattice& base, std::size_t depth);

/// Runs the prefix partitions on `workers` threads and concatenates results
/// in prefix order, so output matches the sequential run.
std::vector<MultLattice> enumerate_parallel(const FiniteLattice& base, std::size_t depth, std::size_t workers,
                                            std::size_t size_cap = kEnumerationCap);

/// Built-in lattices: c2..c6, b2, b3, m3, n5, grid3x3, fig1.
const std::vector<std::pair<std::string, FiniteLattice>>& catalog();

/// Throws unknown_label for a name not in the catalog.
const FiniteLattice& catalog_entry(const std::string& name);

FiniteLattice chain(std::size_t length);

}  // namespace zdlat
