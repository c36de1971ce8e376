#include "zdlat/enumerate.hpp"

#include <thread>

namespace zdlat {

std::vector<Cell> free_cells(const FiniteLattice& L) {
  std::vector<Cell> cells;
  for (Element a = 0; a < L.size(); ++a)
    for (Element b = a; b < L.size(); ++b) {
      if (a == L.bottom() || b == L.bottom() || a == L.top() || b == L.top()) continue;
      cells.push_back({a, b});
    }
  return cells;
}

namespace {

std::vector<std::vector<Element>> candidate_values(const FiniteLattice& L, const std::vector<Cell>& cells) {
  std::vector<std::vector<Element>> out;
  for (const Cell& cell : cells) {
    std::vector<Element> values;
    const Element bound = L.meet(cell.a, cell.b);
    for (Element v = 0; v < L.size(); ++v)
      if (L.leq(v, bound)) values.push_back(v);
    out.push_back(std::move(values));
  }
  return out;
}

class Search {
 public:
  Search(const EnumerationJob& job, const InstanceSink& sink)
      : job_(job),
        L_(job.base),
        n_(L_.size()),
        unknown_(L_.size()),
        cells_(free_cells(L_)),
        candidates_(candidate_values(L_, cells_)),
        table_(n_ * n_, unknown_),
        sink_(sink) {
    for (Element a = 0; a < n_; ++a) {
      set(a, L_.bottom(), L_.bottom());
      set(a, L_.top(), a);
    }
    set(L_.bottom(), L_.top(), L_.bottom());
  }

  std::size_t run() {
    if (job_.partition_prefix.size() > cells_.size()) return 0;
    descend(0);
    return emitted_;
  }

 private:
  Element at(Element a, Element b) const { return table_[a * n_ + b]; }
  void set(Element a, Element b, Element v) { table_[a * n_ + b] = table_[b * n_ + a] = v; }

  // Checks every associativity and binary-distributivity instance whose
  // cells are all assigned. Unassigned cells hold `unknown_`.
  bool consistent() const {
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        for (Element z = 0; z < n_; ++z) {
          const Element xy = at(x, y), yz = at(y, z);
          if (xy != unknown_ && yz != unknown_) {
            const Element left = at(xy, z), right = at(x, yz);
            if (left != unknown_ && right != unknown_ && left != right) return false;
          }
          if (z < y) continue;
          const Element xj = at(x, L_.join(y, z)), xz = at(x, z);
          if (xj != unknown_ && xy != unknown_ && xz != unknown_ && xj != L_.join(xy, xz)) return false;
        }
    return true;
  }

  void descend(std::size_t k) {
    if (stop_) return;
    if (k == cells_.size()) {
      if (first_axiom_violation(L_, table_)) return;
      ++emitted_;
      if (!sink_(attach_multiplication(L_, table_))) stop_ = true;
      if (job_.limit && emitted_ >= *job_.limit) stop_ = true;
      return;
    }
    const Cell& cell = cells_[k];
    for (Element v : candidates_[k]) {
      if (k < job_.partition_prefix.size() && v != job_.partition_prefix[k]) continue;
      set(cell.a, cell.b, v);
      if (consistent()) descend(k + 1);
      if (stop_) break;
    }
    set(cell.a, cell.b, unknown_);
  }

  const EnumerationJob& job_;
  const FiniteLattice& L_;
  std::size_t n_;
  Element unknown_;
  std::vector<Cell> cells_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> table_;
  const InstanceSink& sink_;
  std::size_t emitted_ = 0;
  bool stop_ = false;
};

}  // namespace

std::size_t enumerate_multiplications(const EnumerationJob& job, const InstanceSink& sink) {
  if (job.base.size() > job.size_cap)
    throw Error(ErrorCode::cap_exceeded, "enumeration is capped at " + std::to_string(job.size_cap) +
                                             " elements; lattice has " + std::to_string(job.base.size()));
  if (job.limit && *job.limit == 0) return 0;
  return Search(job, sink).run();
}

std::vector<MultLattice> all_multiplications(const FiniteLattice& base, std::size_t size_cap) {
  std::vector<MultLattice> out;
  enumerate_multiplications({base, std::nullopt, {}, size_cap}, [&](const MultLattice& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<std::vector<Element>> partition_prefixes(const FiniteLattice& base, std::size_t depth) {
  const auto cells = free_cells(base);
  const auto candidates = candidate_values(base, cells);
  depth = std::min(depth, cells.size());
  std::vector<std::vector<Element>> prefixes{{}};
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<std::vector<Element>> next;
    for (const auto& p : prefixes)
      for (Element v : candidates[k]) {
        next.push_back(p);
        next.back().push_back(v);
      }
    prefixes = std::move(next);
  }
  return prefixes;
}

std::vector<MultLattice> enumerate_parallel(const FiniteLattice& base, std::size_t depth, std::size_t workers,
                                            std::size_t size_cap) {
  if (base.size() > size_cap)
    throw Error(ErrorCode::cap_exceeded, "enumeration is capped at " + std::to_string(size_cap) + " elements");
  const auto prefixes = partition_prefixes(base, depth);
  std::vector<std::vector<MultLattice>> results(prefixes.size());
  workers = std::max<std::size_t>(1, workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < prefixes.size(); i += workers)
          enumerate_multiplications({base, std::nullopt, prefixes[i], size_cap}, [&](const MultLattice& m) {
            results[i].push_back(m);
            return true;
          });
      });
  }
  std::vector<MultLattice> out;
  for (auto& chunk : results)
    for (auto& m : chunk) out.push_back(std::move(m));
  return out;
}

// ------------------------------------------------------------------ catalog

FiniteLattice chain(std::size_t length) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> relations;
  for (std::size_t i = 0; i < length; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) relations.emplace_back(labels[i - 1], labels[i]);
  }
  return build_lattice(labels, relations);
}

const std::vector<std::pair<std::string, FiniteLattice>>& catalog() {
  static const std::vector<std::pair<std::string, FiniteLattice>> entries = [] {
    std::vector<std::pair<std::string, FiniteLattice>> e;
    for (std::size_t k = 2; k <= 6; ++k) e.emplace_back("c" + std::to_string(k), chain(k));
    e.emplace_back("b2", build_lattice({"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}}));
    e.emplace_back("b3", build_lattice({"0", "a", "b", "c", "ab", "ac", "bc", "1"},
                                       {{"0", "a"},
                                        {"0", "b"},
                                        {"0", "c"},
                                        {"a", "ab"},
                                        {"b", "ab"},
                                        {"a", "ac"},
                                        {"c", "ac"},
                                        {"b", "bc"},
                                        {"c", "bc"},
                                        {"ab", "1"},
                                        {"ac", "1"},
                                        {"bc", "1"}}));
    e.emplace_back("m3", build_lattice({"0", "x", "y", "z", "1"},
                                       {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}}));
    e.emplace_back("n5", build_lattice({"0", "p", "q", "r", "1"},
                                       {{"0", "p"}, {"p", "q"}, {"q", "1"}, {"0", "r"}, {"r", "1"}}));
    e.emplace_back("grid3x3", product_lattice(chain(3), chain(3)));
    e.emplace_back("fig1", build_lattice({"0", "a", "b", "c", "d", "1"},
                                         {{"0", "a"}, {"a", "b"}, {"b", "d"}, {"0", "c"}, {"c", "d"}, {"d", "1"}}));
    return e;
  }();
  return entries;
}

const FiniteLattice& catalog_entry(const std::string& name) {
  for (const auto& [key, lattice] : catalog())
    if (key == name) return lattice;
  throw Error(ErrorCode::unknown_label, "no catalog lattice named '" + name + "'");
}

}  // namespace zdlat
