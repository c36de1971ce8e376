#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zdlat/graph.hpp"

namespace zdlat {

enum class MultKind { none, meet, trivial, explicit_table };

struct ProductLine {
  std::string a, b, product;
  friend bool operator==(const ProductLine&, const ProductLine&) = default;
};

/// Line-oriented lattice description:
///
///   lattice <name>
///   elements <label> <label> ...
///   cover <a> <b>              # a < b; the order is the closure
///   mult meet | mult trivial   # or explicit lines:
///   prod <a> <b> <c>           # a·b = c
///
/// `#` starts a comment and blank lines are ignored. An explicit table must
/// give every unordered pair that does not involve the top element.
struct LatticeFile {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  MultKind mult = MultKind::none;
  std::vector<ProductLine> products;
  friend bool operator==(const LatticeFile&, const LatticeFile&) = default;
};

/// Throws parse_error naming the offending line.
LatticeFile parse_lattice_file(std::string_view text);
LatticeFile read_lattice_file(const std::filesystem::path& path);

/// Canonical text: one directive per line, single spaces, no comments.
std::string serialize(const LatticeFile& file);

FiniteLattice to_lattice(const LatticeFile& file);
/// Throws parse_error when the file has no multiplication, and the usual
/// validation errors (e.g. AxiomViolation, top_join_reducible) otherwise.
MultLattice to_mult_lattice(const LatticeFile& file);

/// Describes `m` with its covering relation and an explicit table.
LatticeFile to_lattice_file(const std::string& name, const MultLattice& m);

/// Graphviz text. Vertices and edges sorted by label; isolated vertices are
/// written as bare node statements.
std::string to_dot(const Graph& graph);

}  // namespace zdlat
