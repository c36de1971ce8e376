#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zdlat/error.hpp"

namespace zdlat {

/// A subset of the elements of a finite lattice, stored as a membership
/// vector. Ordering is lexicographic on the membership vector.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe, false) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> members);

  static ElementSet full(std::size_t universe);

  std::size_t universe_size() const { return bits_.size(); }
  bool contains(Element x) const { return bits_[x]; }
  void insert(Element x) { bits_[x] = true; }
  void erase(Element x) { bits_[x] = false; }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<Element> members() const;

  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersection(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<bool> bits_;
};

/// A finite bounded lattice given by its order relation. Meet and join
/// tables are derived once at construction; all queries are table lookups.
class FiniteLattice {
 public:
  std::size_t size() const { return labels_.size(); }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find(std::string_view label) const;
  /// Like find(), but throws unknown_label.
  Element index_of(std::string_view label) const;

  bool leq(Element a, Element b) const { return leq_[a * size() + b]; }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }

  Element join_of(const std::vector<Element>& xs) const;
  Element meet_of(const std::vector<Element>& xs) const;
  Element join_of(const ElementSet& xs) const { return join_of(xs.members()); }

  /// Elements covered by `x` (immediately below it).
  std::vector<Element> lower_covers(Element x) const;
  std::vector<Element> upper_covers(Element x) const;
  /// All covering pairs (a, b) with a covered by b, in index order.
  std::vector<std::pair<Element, Element>> covering_pairs() const;

  /// Builds from a full order matrix (row-major, n*n). Validates every
  /// lattice axiom; throws Error on failure.
  static FiniteLattice from_order(std::vector<std::string> labels, std::vector<bool> leq);

 private:
  FiniteLattice() = default;

  std::vector<std::string> labels_;
  std::vector<bool> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Builds a lattice whose order is the reflexive-transitive closure of
/// `relations` (each pair (a, b) means a <= b).
FiniteLattice build_lattice(const std::vector<std::string>& labels,
                            const std::vector<std::pair<std::string, std::string>>& relations);

/// Componentwise product. Labels are "(x,y)"; a factor label already
/// written as "(...)" contributes its inside, so iterated products flatten.
FiniteLattice product_lattice(const FiniteLattice& first, const FiniteLattice& second);

/// Joins component labels into a tuple label, flattening parenthesized parts.
std::string tuple_label(std::string_view first, std::string_view second);

ElementSet atoms(const FiniteLattice& lattice);
ElementSet principal_ideal(const FiniteLattice& lattice, Element a);
ElementSet principal_filter(const FiniteLattice& lattice, Element a);

struct SubsetFlags {
  bool semi_ideal = false;
  bool ideal = false;
  bool prime_ideal = false;
  bool prime_semi_ideal = false;
  bool semiprime_ideal = false;
  bool filter = false;
  /// Maximal among proper filters.
  bool maximal_filter = false;
};

/// Evaluates each classification by direct quantification over the
/// lattice. Throws empty_subset on an empty set.
SubsetFlags classify_subset(const FiniteLattice& lattice, const ElementSet& subset);

bool is_0_distributive(const FiniteLattice& lattice);
bool is_distributive(const FiniteLattice& lattice);

/// Default bound on lattice size for exhaustive subset search.
inline constexpr std::size_t kSubsetSearchCap = 20;

/// True when minimal_prime_ideals() will search all subsets rather than
/// principal ideals only.
bool prime_ideal_search_is_exhaustive(const FiniteLattice& lattice,
                                      std::size_t subset_cap = kSubsetSearchCap);

/// Prime ideals of the lattice, lexicographically ordered.
std::vector<ElementSet> prime_ideals(const FiniteLattice& lattice,
                                     std::size_t subset_cap = kSubsetSearchCap);

/// Inclusion-minimal prime ideals. Searches every subset while
/// n <= subset_cap, otherwise the principal ideals (p] only (which is exact
/// for finite lattices, where every ideal is principal).
std::vector<ElementSet> minimal_prime_ideals(const FiniteLattice& lattice,
                                             std::size_t subset_cap = kSubsetSearchCap);

/// Inclusion-minimal prime semi-ideals, by exhaustive subset search.
/// Throws size_guard when n > subset_cap.
std::vector<ElementSet> minimal_prime_semi_ideals(const FiniteLattice& lattice,
                                                  std::size_t subset_cap = 16);

/// "{a, b, c}" using the lattice labels.
std::string format_set(const FiniteLattice& lattice, const ElementSet& set);
std::string format_elements(const FiniteLattice& lattice, const std::vector<Element>& xs);

}  // namespace zdlat
