#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "zdlat/graph.hpp"

namespace zdlat {

/// Graph diameter. Undefined on the empty graph, 0 on one vertex, infinite
/// when some pair of vertices is disconnected.
struct Diameter {
  enum class Kind { undefined, finite, infinite };
  Kind kind = Kind::undefined;
  int value = 0;

  static Diameter undefined() { return {}; }
  static Diameter finite(int d) { return {Kind::finite, d}; }
  static Diameter infinite() { return {Kind::infinite, 0}; }

  bool is_finite() const { return kind == Kind::finite; }
  bool equals(int d) const { return is_finite() && value == d; }
  std::string to_string() const;
  friend bool operator==(const Diameter&, const Diameter&) = default;
};

/// Girth; nullopt means no cycle (infinite girth).
using Girth = std::optional<int>;
std::string girth_to_string(const Girth& g);

struct MetricsOptions {
  bool colorings = true;           // compute clique and chromatic numbers
  std::size_t vertex_cap = 64;     // exact solvers refuse larger graphs
};

struct GraphMetrics {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool connected = true;
  Diameter diameter;
  Girth girth;
  bool bipartite = true;
  bool complete_bipartite = false;
  /// Positions of the two parts when complete_bipartite.
  std::vector<std::size_t> part_a, part_b;
  std::optional<std::size_t> clique_number;
  std::optional<std::size_t> chromatic_number;
  bool size_guard_exceeded = false;
  bool is_star = false;
  bool is_complete = false;
};

GraphMetrics metrics(const Graph& g, const MetricsOptions& options = {});

/// BFS distance matrix; -1 marks unreachable pairs.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);
Diameter diameter(const Graph& g);
Girth girth(const Graph& g);
bool is_connected(const Graph& g);

/// Two-coloring by BFS; nullopt when an odd cycle exists.
std::optional<std::vector<int>> two_coloring(const Graph& g);

/// Parts of a complete bipartite graph with two nonempty parts, or nullopt.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> complete_bipartition(const Graph& g);

bool is_star(const Graph& g);

/// Lexicographically first triangle (positions u < v < w).
std::optional<std::array<std::size_t, 3>> find_triangle(const Graph& g);

/// Exact; throw size_guard above `vertex_cap` vertices.
std::size_t clique_number(const Graph& g, std::size_t vertex_cap = 64);
std::size_t chromatic_number(const Graph& g, std::size_t vertex_cap = 64);

}  // namespace zdlat
