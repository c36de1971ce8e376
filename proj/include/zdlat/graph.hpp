#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zdlat/mult_lattice.hpp"

namespace zdlat {

/// Simple undirected graph whose vertices are lattice elements. Vertex
/// positions (0..size-1) follow element-index order.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Element> elements, std::vector<std::string> labels);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  Element element(std::size_t v) const { return elements_[v]; }
  const std::vector<Element>& elements() const { return elements_; }
  const std::string& label(std::size_t v) const { return labels_[v]; }

  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * size() + v]; }
  /// No-op for u == v: the graph stays loop-free.
  void add_edge(std::size_t u, std::size_t v);
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  /// Edges as position pairs (u < v), lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const;

  /// Same vertex elements and same edges.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.elements_ == b.elements_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<Element> elements_;
  std::vector<std::string> labels_;
  std::vector<bool> adj_;
};

/// Meet-based zero-divisor graph of a lattice with respect to an ideal:
/// vertices are x outside the ideal with x ∧ y inside it for some y outside
/// it; distinct vertices are adjacent when their meet lies in the ideal.
/// Throws not_an_ideal, or degenerate_lattice on the one-element lattice.
Graph gamma_meet(const FiniteLattice& lattice, const ElementSet& ideal);

/// Same with the ideal {0}.
Graph gamma_meet(const FiniteLattice& lattice);

/// Product-based zero-divisor graph with respect to an element i: vertices
/// are x not below i with x·y <= i for some y not below i; distinct vertices
/// are adjacent when their product is below i. i = bottom gives the graph
/// on the nonzero zero divisors.
Graph gamma_mult(const MultLattice& m, Element i);

inline Graph gamma_mult(const MultLattice& m) { return gamma_mult(m, m.bottom()); }

}  // namespace zdlat
