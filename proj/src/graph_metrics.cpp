#include "zdlat/graph_metrics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>

namespace zdlat {

std::string Diameter::to_string() const {
  switch (kind) {
    case Kind::undefined: return "undefined";
    case Kind::infinite: return "inf";
    case Kind::finite: return std::to_string(value);
  }
  return "undefined";
}

std::string girth_to_string(const Girth& g) { return g ? std::to_string(*g) : "inf"; }

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v)
        if (g.adjacent(u, v) && dist[s][v] < 0) {
          dist[s][v] = dist[s][u] + 1;
          queue.push_back(v);
        }
    }
  }
  return dist;
}

Diameter diameter(const Graph& g) {
  if (g.empty()) return Diameter::undefined();
  int best = 0;
  for (const auto& row : all_pairs_distances(g))
    for (int d : row) {
      if (d < 0) return Diameter::infinite();
      best = std::max(best, d);
    }
  return Diameter::finite(best);
}

bool is_connected(const Graph& g) { return g.size() <= 1 || diameter(g).is_finite(); }

Girth girth(const Graph& g) {
  const std::size_t n = g.size();
  int best = std::numeric_limits<int>::max();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<std::size_t> parent(n, n);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (!g.adjacent(u, v)) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<int> color(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (!g.adjacent(u, v)) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> complete_bipartition(const Graph& g) {
  if (g.size() < 2 || !is_connected(g)) return std::nullopt;
  auto color = two_coloring(g);
  if (!color) return std::nullopt;
  std::vector<std::size_t> a, b;
  for (std::size_t v = 0; v < g.size(); ++v) ((*color)[v] == (*color)[0] ? a : b).push_back(v);
  if (a.empty() || b.empty() || g.edge_count() != a.size() * b.size()) return std::nullopt;
  return std::make_pair(std::move(a), std::move(b));
}

bool is_star(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0) return false;
  if (g.edge_count() != n - 1) return false;
  for (std::size_t c = 0; c < n; ++c)
    if (g.degree(c) == n - 1) return true;
  return false;
}

std::optional<std::array<std::size_t, 3>> find_triangle(const Graph& g) {
  const std::size_t n = g.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      for (std::size_t w = v + 1; w < n; ++w)
        if (g.adjacent(u, w) && g.adjacent(v, w)) return std::array<std::size_t, 3>{u, v, w};
    }
  return std::nullopt;
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g, std::size_t vertex_cap) {
  const std::size_t cap = std::min<std::size_t>(vertex_cap, 64);
  if (g.size() > cap)
    throw Error(ErrorCode::size_guard,
                "exact clique/chromatic solver is limited to " + std::to_string(cap) + " vertices");
  std::vector<Mask> adj(g.size(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

void max_clique(const std::vector<Mask>& adj, Mask candidates, std::size_t size, std::size_t& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates) {
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
    const int v = std::countr_zero(candidates);
    candidates &= ~(Mask{1} << v);
    max_clique(adj, candidates & adj[v], size + 1, best);
  }
  best = std::max(best, size);
}

bool colorable(const std::vector<Mask>& adj, const std::vector<std::size_t>& order, std::size_t pos,
               std::vector<int>& color, int k, int used) {
  if (pos == order.size()) return true;
  const std::size_t v = order[pos];
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool ok = true;
    for (std::size_t u = 0; u < adj.size() && ok; ++u)
      if ((adj[v] >> u & 1u) && color[u] == c) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (colorable(adj, order, pos + 1, color, k, std::max(used, c + 1))) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

std::size_t clique_number(const Graph& g, std::size_t vertex_cap) {
  const auto adj = adjacency_masks(g, vertex_cap);
  if (g.empty()) return 0;
  const Mask all = g.size() == 64 ? ~Mask{0} : (Mask{1} << g.size()) - 1;
  std::size_t best = 0;
  max_clique(adj, all, 0, best);
  return best;
}

std::size_t chromatic_number(const Graph& g, std::size_t vertex_cap) {
  const auto adj = adjacency_masks(g, vertex_cap);
  if (g.empty()) return 0;
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::popcount(adj[a]) > std::popcount(adj[b]); });
  for (std::size_t k = std::max<std::size_t>(1, clique_number(g, vertex_cap));; ++k) {
    std::vector<int> color(g.size(), -1);
    if (colorable(adj, order, 0, color, static_cast<int>(k), 0)) return k;
  }
}

GraphMetrics metrics(const Graph& g, const MetricsOptions& options) {
  GraphMetrics m;
  m.vertex_count = g.size();
  m.edge_count = g.edge_count();
  m.diameter = diameter(g);
  m.connected = g.size() <= 1 || m.diameter.is_finite();
  m.girth = girth(g);
  m.bipartite = two_coloring(g).has_value();
  if (auto parts = complete_bipartition(g)) {
    m.complete_bipartite = true;
    m.part_a = std::move(parts->first);
    m.part_b = std::move(parts->second);
  }
  m.is_star = is_star(g);
  m.is_complete = !g.empty() && m.edge_count == g.size() * (g.size() - 1) / 2;
  if (options.colorings) {
    try {
      m.clique_number = clique_number(g, options.vertex_cap);
      m.chromatic_number = chromatic_number(g, options.vertex_cap);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::size_guard) throw;
      m.size_guard_exceeded = true;
    }
  }
  return m;
}

}  // namespace zdlat
