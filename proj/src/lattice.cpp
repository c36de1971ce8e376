#include "zdlat/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

namespace zdlat {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::empty_lattice: return "EmptyLattice";
    case ErrorCode::duplicate_label: return "DuplicateLabel";
    case ErrorCode::unknown_label: return "UnknownLabel";
    case ErrorCode::not_a_partial_order: return "NotAPartialOrder";
    case ErrorCode::not_a_lattice: return "NotALattice";
    case ErrorCode::no_bounds: return "NoBounds";
    case ErrorCode::empty_subset: return "EmptySubset";
    case ErrorCode::invalid_table: return "InvalidTable";
    case ErrorCode::axiom_violation: return "AxiomViolation";
    case ErrorCode::not_prime: return "NotPrime";
    case ErrorCode::not_an_ideal: return "NotAnIdeal";
    case ErrorCode::degenerate_lattice: return "DegenerateLattice";
    case ErrorCode::top_join_reducible: return "TopJoinReducible";
    case ErrorCode::not_distributive: return "NotDistributive";
    case ErrorCode::invalid_modulus: return "InvalidModulus";
    case ErrorCode::size_guard: return "SizeGuardExceeded";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Error";
}

// ---------------------------------------------------------------- ElementSet

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Element> members)
    : bits_(universe, false) {
  for (Element x : members) bits_.at(x) = true;
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  s.bits_.assign(universe, true);
  return s;
}

std::size_t ElementSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  for (Element x = 0; x < bits_.size(); ++x)
    if (bits_[x]) out.push_back(x);
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (Element x = 0; x < bits_.size(); ++x)
    if (bits_[x] && !other.bits_[x]) return false;
  return true;
}

ElementSet ElementSet::intersection(const ElementSet& other) const {
  ElementSet out(bits_.size());
  for (Element x = 0; x < bits_.size(); ++x) out.bits_[x] = bits_[x] && other.bits_[x];
  return out;
}

// ------------------------------------------------------------- FiniteLattice

std::optional<Element> FiniteLattice::find(std::string_view label) const {
  for (Element x = 0; x < labels_.size(); ++x)
    if (labels_[x] == label) return x;
  return std::nullopt;
}

Element FiniteLattice::index_of(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw Error(ErrorCode::unknown_label, "unknown element label '" + std::string(label) + "'");
}

Element FiniteLattice::join_of(const std::vector<Element>& xs) const {
  Element acc = bottom_;
  for (Element x : xs) acc = join(acc, x);
  return acc;
}

Element FiniteLattice::meet_of(const std::vector<Element>& xs) const {
  Element acc = top_;
  for (Element x : xs) acc = meet(acc, x);
  return acc;
}

std::vector<Element> FiniteLattice::lower_covers(Element x) const {
  std::vector<Element> out;
  for (Element y = 0; y < size(); ++y) {
    if (!lt(y, x)) continue;
    bool covered = true;
    for (Element z = 0; z < size() && covered; ++z)
      if (lt(y, z) && lt(z, x)) covered = false;
    if (covered) out.push_back(y);
  }
  return out;
}

std::vector<Element> FiniteLattice::upper_covers(Element x) const {
  std::vector<Element> out;
  for (Element y = 0; y < size(); ++y) {
    if (!lt(x, y)) continue;
    bool covers = true;
    for (Element z = 0; z < size() && covers; ++z)
      if (lt(x, z) && lt(z, y)) covers = false;
    if (covers) out.push_back(y);
  }
  return out;
}

std::vector<std::pair<Element, Element>> FiniteLattice::covering_pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < size(); ++a)
    for (Element b : upper_covers(a)) out.emplace_back(a, b);
  return out;
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> labels, std::vector<bool> leq) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::empty_lattice, "a lattice needs at least one element");
  if (leq.size() != n * n) throw Error(ErrorCode::invalid_table, "order matrix has wrong size");

  auto le = [&](Element a, Element b) { return leq[a * n + b]; };
  for (Element a = 0; a < n; ++a) {
    if (!le(a, a)) throw Error(ErrorCode::not_a_partial_order, "order is not reflexive at '" + labels[a] + "'", {a});
    for (Element b = a + 1; b < n; ++b)
      if (le(a, b) && le(b, a))
        throw Error(ErrorCode::not_a_partial_order,
                    "antisymmetry fails: '" + labels[a] + "' and '" + labels[b] + "' are mutually below each other",
                    {a, b});
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (le(a, b) && le(b, c) && !le(a, c))
          throw Error(ErrorCode::not_a_partial_order,
                      "transitivity fails at '" + labels[a] + "' <= '" + labels[b] + "' <= '" + labels[c] + "'",
                      {a, b, c});

  std::optional<Element> bottom, top;
  for (Element x = 0; x < n; ++x) {
    bool is_min = true, is_max = true;
    for (Element y = 0; y < n; ++y) {
      is_min = is_min && le(x, y);
      is_max = is_max && le(y, x);
    }
    if (is_min) bottom = x;
    if (is_max) top = x;
  }
  if (!bottom || !top)
    throw Error(ErrorCode::no_bounds, bottom ? "no greatest element" : "no least element");

  FiniteLattice L;
  L.labels_ = std::move(labels);
  L.leq_ = leq;
  L.bottom_ = *bottom;
  L.top_ = *top;
  L.meet_.assign(n * n, 0);
  L.join_.assign(n * n, 0);

  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      std::optional<Element> glb, lub;
      for (Element x = 0; x < n; ++x) {
        if (le(x, a) && le(x, b)) {
          bool greatest = true;
          for (Element y = 0; y < n && greatest; ++y)
            if (le(y, a) && le(y, b) && !le(y, x)) greatest = false;
          if (greatest) glb = x;
        }
        if (le(a, x) && le(b, x)) {
          bool least = true;
          for (Element y = 0; y < n && least; ++y)
            if (le(a, y) && le(b, y) && !le(x, y)) least = false;
          if (least) lub = x;
        }
      }
      if (!glb || !lub)
        throw Error(ErrorCode::not_a_lattice,
                    std::string("'") + L.labels_[a] + "' and '" + L.labels_[b] + "' have no " +
                        (glb ? "least upper bound" : "greatest lower bound"),
                    {a, b});
      L.meet_[a * n + b] = L.meet_[b * n + a] = *glb;
      L.join_[a * n + b] = L.join_[b * n + a] = *lub;
    }
  }
  return L;
}

FiniteLattice build_lattice(const std::vector<std::string>& labels,
                            const std::vector<std::pair<std::string, std::string>>& relations) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::empty_lattice, "a lattice needs at least one element");
  std::map<std::string, Element, std::less<>> index;
  for (Element x = 0; x < n; ++x)
    if (!index.emplace(labels[x], x).second)
      throw Error(ErrorCode::duplicate_label, "duplicate element label '" + labels[x] + "'", {x});

  auto lookup = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) throw Error(ErrorCode::unknown_label, "relation uses undeclared label '" + s + "'");
    return it->second;
  };

  std::vector<bool> leq(n * n, false);
  for (Element x = 0; x < n; ++x) leq[x * n + x] = true;
  for (const auto& [lo, hi] : relations) leq[lookup(lo) * n + lookup(hi)] = true;
  // Warshall closure.
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (Element j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = true;

  return FiniteLattice::from_order(labels, std::move(leq));
}

std::string tuple_label(std::string_view first, std::string_view second) {
  auto inner = [](std::string_view s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
    return s;
  };
  std::string out = "(";
  out += inner(first);
  out += ',';
  out += inner(second);
  out += ')';
  return out;
}

FiniteLattice product_lattice(const FiniteLattice& first, const FiniteLattice& second) {
  const std::size_t n1 = first.size(), n2 = second.size(), n = n1 * n2;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element a = 0; a < n1; ++a)
    for (Element b = 0; b < n2; ++b) labels.push_back(tuple_label(first.label(a), second.label(b)));
  std::vector<bool> leq(n * n, false);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      leq[x * n + y] = first.leq(x / n2, y / n2) && second.leq(x % n2, y % n2);
  return FiniteLattice::from_order(std::move(labels), std::move(leq));
}

// ------------------------------------------------------- order-theoretic ops

ElementSet atoms(const FiniteLattice& L) {
  ElementSet out(L.size());
  if (L.size() < 2) return out;
  for (Element x : L.upper_covers(L.bottom())) out.insert(x);
  return out;
}

ElementSet principal_ideal(const FiniteLattice& L, Element a) {
  ElementSet out(L.size());
  for (Element x = 0; x < L.size(); ++x)
    if (L.leq(x, a)) out.insert(x);
  return out;
}

ElementSet principal_filter(const FiniteLattice& L, Element a) {
  ElementSet out(L.size());
  for (Element x = 0; x < L.size(); ++x)
    if (L.leq(a, x)) out.insert(x);
  return out;
}

namespace {

bool is_down_closed(const FiniteLattice& L, const ElementSet& S) {
  for (Element a = 0; a < L.size(); ++a)
    if (S.contains(a))
      for (Element x = 0; x < L.size(); ++x)
        if (L.leq(x, a) && !S.contains(x)) return false;
  return true;
}

bool is_up_closed(const FiniteLattice& L, const ElementSet& S) {
  for (Element a = 0; a < L.size(); ++a)
    if (S.contains(a))
      for (Element x = 0; x < L.size(); ++x)
        if (L.leq(a, x) && !S.contains(x)) return false;
  return true;
}

bool is_join_closed(const FiniteLattice& L, const ElementSet& S) {
  for (Element a = 0; a < L.size(); ++a)
    for (Element b = a + 1; b < L.size(); ++b)
      if (S.contains(a) && S.contains(b) && !S.contains(L.join(a, b))) return false;
  return true;
}

bool is_meet_closed(const FiniteLattice& L, const ElementSet& S) {
  for (Element a = 0; a < L.size(); ++a)
    for (Element b = a + 1; b < L.size(); ++b)
      if (S.contains(a) && S.contains(b) && !S.contains(L.meet(a, b))) return false;
  return true;
}

// a ∧ b ∈ S implies a ∈ S or b ∈ S.
bool is_meet_prime(const FiniteLattice& L, const ElementSet& S) {
  for (Element a = 0; a < L.size(); ++a)
    for (Element b = a; b < L.size(); ++b)
      if (S.contains(L.meet(a, b)) && !S.contains(a) && !S.contains(b)) return false;
  return true;
}

bool is_semiprime(const FiniteLattice& L, const ElementSet& S) {
  const std::size_t n = L.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = b; c < n; ++c)
        if (S.contains(L.meet(a, b)) && S.contains(L.meet(a, c)) && !S.contains(L.meet(a, L.join(b, c))))
          return false;
  return true;
}

std::vector<ElementSet> inclusion_minimal(std::vector<ElementSet> sets) {
  std::vector<ElementSet> out;
  for (const auto& s : sets) {
    bool minimal = true;
    for (const auto& t : sets)
      if (t != s && t.is_subset_of(s)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Enumerates every proper down-set containing bottom that passes `accept`,
// via bitmask subsets; n is bounded by the caller.
template <typename Accept>
std::vector<ElementSet> search_down_sets(const FiniteLattice& L, Accept accept) {
  const std::size_t n = L.size();
  std::vector<std::uint32_t> below(n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (L.leq(y, x)) below[x] |= std::uint32_t{1} << y;

  std::vector<ElementSet> found;
  const std::uint32_t limit = std::uint32_t{1} << n;
  const std::uint32_t bottom_bit = std::uint32_t{1} << L.bottom();
  const std::uint32_t all = limit - 1;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    if (!(mask & bottom_bit) || mask == all) continue;
    bool closed = true;
    for (Element x = 0; x < n && closed; ++x)
      if ((mask >> x & 1u) && (below[x] & ~mask)) closed = false;
    if (!closed) continue;
    ElementSet s(n);
    for (Element x = 0; x < n; ++x)
      if (mask >> x & 1u) s.insert(x);
    if (accept(s)) found.push_back(std::move(s));
  }
  return found;
}

}  // namespace

SubsetFlags classify_subset(const FiniteLattice& L, const ElementSet& S) {
  if (S.universe_size() != L.size()) throw Error(ErrorCode::invalid_table, "subset universe does not match lattice");
  if (S.empty()) throw Error(ErrorCode::empty_subset, "ideal and filter classifications need a nonempty subset");
  const bool proper = S.count() < L.size();

  SubsetFlags f;
  f.semi_ideal = is_down_closed(L, S);
  f.ideal = f.semi_ideal && is_join_closed(L, S);
  const bool prime = is_meet_prime(L, S);
  f.prime_semi_ideal = f.semi_ideal && proper && prime;
  f.prime_ideal = f.ideal && proper && prime;
  f.semiprime_ideal = f.ideal && is_semiprime(L, S);
  f.filter = is_up_closed(L, S) && is_meet_closed(L, S);
  if (f.filter && proper) {
    // Filters of a finite lattice are the principal filters [a); S is
    // maximal among proper ones when no proper filter strictly contains it.
    f.maximal_filter = true;
    for (Element x = 0; x < L.size(); ++x) {
      if (x == L.bottom()) continue;
      ElementSet other = principal_filter(L, x);
      if (other != S && S.is_subset_of(other)) {
        f.maximal_filter = false;
        break;
      }
    }
  }
  return f;
}

bool is_0_distributive(const FiniteLattice& L) {
  const std::size_t n = L.size();
  const Element zero = L.bottom();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (L.meet(a, b) != zero) continue;
      for (Element c = b; c < n; ++c)
        if (L.meet(a, c) == zero && L.meet(a, L.join(b, c)) != zero) return false;
    }
  return true;
}

bool is_distributive(const FiniteLattice& L) {
  const std::size_t n = L.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = b; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
  return true;
}

bool prime_ideal_search_is_exhaustive(const FiniteLattice& L, std::size_t subset_cap) {
  return L.size() <= subset_cap && L.size() <= 31;
}

std::vector<ElementSet> prime_ideals(const FiniteLattice& L, std::size_t subset_cap) {
  if (L.size() < 2) return {};
  std::vector<ElementSet> out;
  if (prime_ideal_search_is_exhaustive(L, subset_cap)) {
    out = search_down_sets(L, [&](const ElementSet& s) { return is_join_closed(L, s) && is_meet_prime(L, s); });
  } else {
    for (Element p = 0; p < L.size(); ++p) {
      if (p == L.top()) continue;
      ElementSet s = principal_ideal(L, p);
      if (is_meet_prime(L, s)) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> minimal_prime_ideals(const FiniteLattice& L, std::size_t subset_cap) {
  return inclusion_minimal(prime_ideals(L, subset_cap));
}

std::vector<ElementSet> minimal_prime_semi_ideals(const FiniteLattice& L, std::size_t subset_cap) {
  if (L.size() > subset_cap || L.size() > 31)
    throw Error(ErrorCode::size_guard, "semi-ideal search is limited to " + std::to_string(subset_cap) + " elements");
  if (L.size() < 2) return {};
  return inclusion_minimal(search_down_sets(L, [&](const ElementSet& s) { return is_meet_prime(L, s); }));
}

std::string format_elements(const FiniteLattice& L, const std::vector<Element>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << L.label(xs[i]);
  os << '}';
  return os.str();
}

std::string format_set(const FiniteLattice& L, const ElementSet& set) { return format_elements(L, set.members()); }

}  // namespace zdlat
