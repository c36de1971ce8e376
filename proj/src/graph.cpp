#include "zdlat/graph.hpp"

namespace zdlat {

Graph::Graph(std::vector<Element> elements, std::vector<std::string> labels)
    : elements_(std::move(elements)), labels_(std::move(labels)), adj_(elements_.size() * elements_.size(), false) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  adj_[u * size() + v] = true;
  adj_[v * size() + u] = true;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < size(); ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

std::size_t Graph::degree(std::size_t v) const { return neighbors(v).size(); }

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = u + 1; v < size(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::edge_count() const { return edges().size(); }

namespace {

void require_nondegenerate(const FiniteLattice& L) {
  if (L.size() < 2)
    throw Error(ErrorCode::degenerate_lattice, "zero-divisor graphs need a lattice with at least two elements");
}

template <typename Related, typename Outside>
Graph build_graph(const FiniteLattice& L, Outside outside, Related related) {
  const std::size_t n = L.size();
  std::vector<Element> vertices;
  std::vector<std::string> labels;
  for (Element x = 0; x < n; ++x) {
    if (!outside(x)) continue;
    for (Element y = 0; y < n; ++y)
      if (outside(y) && related(x, y)) {
        vertices.push_back(x);
        labels.push_back(L.label(x));
        break;
      }
  }
  Graph g(vertices, labels);
  for (std::size_t u = 0; u < vertices.size(); ++u)
    for (std::size_t v = u + 1; v < vertices.size(); ++v)
      if (related(vertices[u], vertices[v])) g.add_edge(u, v);
  return g;
}

}  // namespace

Graph gamma_meet(const FiniteLattice& L, const ElementSet& ideal) {
  require_nondegenerate(L);
  if (ideal.universe_size() != L.size() || ideal.empty() || !classify_subset(L, ideal).ideal)
    throw Error(ErrorCode::not_an_ideal, "gamma_meet needs an ideal of the lattice");
  return build_graph(
      L, [&](Element x) { return !ideal.contains(x); },
      [&](Element x, Element y) { return ideal.contains(L.meet(x, y)); });
}

Graph gamma_meet(const FiniteLattice& L) {
  require_nondegenerate(L);
  return gamma_meet(L, ElementSet(L.size(), {L.bottom()}));
}

Graph gamma_mult(const MultLattice& m, Element i) {
  const auto& L = m.lattice();
  require_nondegenerate(L);
  return build_graph(
      L, [&](Element x) { return !L.leq(x, i); }, [&](Element x, Element y) { return L.leq(m.mult(x, y), i); });
}

}  // namespace zdlat
