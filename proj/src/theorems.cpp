#include "zdlat/theorems.hpp"

#include <algorithm>
#include <sstream>

#include "zdlat/graph.hpp"

namespace zdlat {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::vacuous: return "vacuous";
    case Verdict::refuted: return "REFUTED";
    case Verdict::size_skipped: return "size-skipped";
  }
  return "vacuous";
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "equiv-reduced-graphs", "reduced-0dist", "thm-2.9",  "thm-2.4",  "lem-2.4a", "thm-2.5",  "thm-2.7",
      "thm-2.6",              "lem-2.11",      "lem-2.18", "thm-2.22", "lem-2.11a", "thm-2.13", "thm-2.14",
      "thm-2.24",             "thm-2.26",      "lem-2.29", "lem-2.29a", "lem-2.30", "cor-1.4"};
  return ids;
}

namespace {

const char* yn(bool b) { return b ? "true" : "false"; }

/// Everything the statements need, computed once per lattice.
struct Context {
  const MultLattice& m;
  const FiniteLattice& L;
  SuiteOptions options;
  bool reduced;
  bool zero_distributive;
  ElementSet nil;
  ZeroDivisors zd;
  ElementSet primes;
  ElementSet min_primes;
  std::size_t min_prime_count;
  ElementSet atom_set;
  Graph meet_graph;
  Graph mult_graph;
  GraphMetrics meet_metrics;
  GraphMetrics mult_metrics;

  Context(const MultLattice& mm, const SuiteOptions& opts)
      : m(mm),
        L(mm.lattice()),
        options(opts),
        reduced(is_reduced(mm)),
        zero_distributive(is_0_distributive(mm.lattice())),
        nil(nil_set(mm)),
        zd(zero_divisor_set(mm)),
        primes(prime_elements(mm)),
        min_primes(minimal_prime_elements(mm)),
        min_prime_count(min_primes.count()),
        atom_set(atoms(mm.lattice())),
        meet_graph(gamma_meet(mm.lattice())),
        mult_graph(gamma_mult(mm)),
        meet_metrics(metrics(meet_graph, {.colorings = false})),
        mult_metrics(metrics(mult_graph, {.colorings = false})) {}

  std::string label(Element x) const { return L.label(x); }
  std::string set(const ElementSet& s) const { return format_set(L, s); }
  const Diameter& mult_diam() const { return mult_metrics.diameter; }
};

TheoremReport make(const char* id, const char* statement) {
  TheoremReport r;
  r.id = id;
  r.statement = statement;
  return r;
}

bool hypotheses_hold(const TheoremReport& r) {
  return std::all_of(r.hypotheses.begin(), r.hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
}

// Sets the verdict from the claim; the witness is only kept when it is
// needed (refutation) or explicitly requested as evidence.
void decide(TheoremReport& r, bool claim, std::string witness, bool keep_witness_on_success = false) {
  if (!hypotheses_hold(r)) {
    r.verdict = Verdict::vacuous;
    return;
  }
  r.verdict = claim ? Verdict::confirmed : Verdict::refuted;
  if (!claim || keep_witness_on_success) r.witness = std::move(witness);
  if (!claim && r.witness.empty()) r.witness = "lhs=" + r.lhs + ";rhs=" + r.rhs;
}

std::string statements_witness(const std::vector<bool>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << '(' << i + 1 << ")=" << yn(values[i]);
  return os.str();
}

bool all_equal(const std::vector<bool>& values) {
  return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
}

// Two distinct sets, neither equal to {0}, meeting in exactly {0}.
bool two_disjoint_nonzero(const FiniteLattice& L, const std::vector<ElementSet>& sets) {
  const ElementSet zero(L.size(), {L.bottom()});
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i] != zero && sets[j] != zero && sets[i].intersection(sets[j]) == zero) return true;
  return false;
}

bool two_minimal_primes_meeting_at_zero(const Context& c) {
  const auto mp = c.min_primes.members();
  for (std::size_t i = 0; i < mp.size(); ++i)
    for (std::size_t j = i + 1; j < mp.size(); ++j)
      if (c.L.meet(mp[i], mp[j]) == c.L.bottom()) return true;
  return false;
}

Hypothesis finite_compactness() { return {"compactly-generated(finite)", true}; }

// ---------------------------------------------------------------- catalog

TheoremReport equiv_reduced_graphs(const Context& c) {
  auto r = make("equiv-reduced-graphs", "reduced iff the meet and product zero-divisor graphs coincide");
  const bool equal = c.meet_graph == c.mult_graph;
  r.lhs = std::string("reduced=") + yn(c.reduced);
  r.rhs = std::string("graphs_equal=") + yn(equal);
  decide(r, c.reduced == equal, "reduced=" + std::string(yn(c.reduced)) + ",graphs_equal=" + yn(equal));
  return r;
}

TheoremReport reduced_0dist(const Context& c) {
  auto r = make("reduced-0dist", "reduced implies 0-distributive");
  r.hypotheses = {{"reduced", c.reduced}};
  r.lhs = std::string("reduced=") + yn(c.reduced);
  r.rhs = std::string("0-distributive=") + yn(c.zero_distributive);
  std::string witness;
  if (!c.zero_distributive) {
    const auto& L = c.L;
    for (Element a = 0; a < L.size() && witness.empty(); ++a)
      for (Element b = 0; b < L.size() && witness.empty(); ++b)
        for (Element d = 0; d < L.size() && witness.empty(); ++d)
          if (L.meet(a, b) == L.bottom() && L.meet(a, d) == L.bottom() && L.meet(a, L.join(b, d)) != L.bottom())
            witness = "a=" + c.label(a) + ",b=" + c.label(b) + ",c=" + c.label(d);
  }
  decide(r, c.zero_distributive, witness);
  return r;
}

TheoremReport thm_2_9(const Context& c) {
  auto r = make("thm-2.9", "product graph is connected with diameter <= 3 and girth in {3, 4, inf}");
  const auto& g = c.mult_metrics;
  r.hypotheses = {{"graph-nonempty", g.vertex_count > 0}};
  const bool diam_ok = g.diameter.is_finite() && g.diameter.value <= 3;
  const bool girth_ok = !g.girth || *g.girth == 3 || *g.girth == 4;
  r.lhs = "connected=" + std::string(yn(g.connected)) + ",diam=" + g.diameter.to_string();
  r.rhs = "girth=" + girth_to_string(g.girth);
  decide(r, g.connected && diam_ok && girth_ok, r.lhs + "," + r.rhs);
  return r;
}

TheoremReport thm_2_4(const Context& c) {
  auto r = make("thm-2.4",
                "meet graph: two nonzero minimal prime semi-ideals meeting in {0} iff complete bipartite iff "
                "bipartite");
  r.hypotheses = {{"meet-graph-nonempty", !c.meet_graph.empty()}};
  if (c.L.size() > c.options.semi_ideal_cap) {
    r.verdict = Verdict::size_skipped;
    r.note = "semi-ideal search skipped above " + std::to_string(c.options.semi_ideal_cap) + " elements";
    return r;
  }
  const auto semi = minimal_prime_semi_ideals(c.L, c.options.semi_ideal_cap);
  const std::vector<bool> s = {two_disjoint_nonzero(c.L, semi), c.meet_metrics.complete_bipartite,
                               c.meet_metrics.bipartite};
  r.lhs = std::string("semi-ideals=") + yn(s[0]);
  r.rhs = std::string("complete_bipartite=") + yn(s[1]) + ",bipartite=" + yn(s[2]);
  decide(r, all_equal(s), statements_witness(s));
  return r;
}

TheoremReport lem_2_4a(const Context& c) {
  auto r = make("lem-2.4a", "reduced: (p] is a prime ideal for every minimal prime element p");
  r.hypotheses = {{"reduced", c.reduced}};
  std::string witness;
  for (Element p : c.min_primes.members())
    if (!classify_subset(c.L, principal_ideal(c.L, p)).prime_ideal && witness.empty()) witness = "p=" + c.label(p);
  r.lhs = "minimal_primes=" + c.set(c.min_primes);
  r.rhs = std::string("all_principal_prime=") + yn(witness.empty());
  decide(r, witness.empty(), witness);
  return r;
}

TheoremReport thm_2_5(const Context& c) {
  auto r = make("thm-2.5",
                "reduced: product graph complete bipartite iff two minimal prime elements meet at 0");
  r.hypotheses = {{"reduced", c.reduced}};
  const bool lhs = c.mult_metrics.complete_bipartite;
  const bool rhs = two_minimal_primes_meeting_at_zero(c);
  r.lhs = std::string("complete_bipartite=") + yn(lhs);
  r.rhs = std::string("minimal_primes_meet_zero=") + yn(rhs);
  decide(r, lhs == rhs, r.lhs + "," + r.rhs);
  return r;
}

TheoremReport thm_2_7(const Context& c) {
  auto r = make("thm-2.7", "reduced: five equivalent forms of complete bipartiteness");
  r.hypotheses = {{"reduced", c.reduced}, {"meet-graph-nonempty", !c.meet_graph.empty()}};
  const auto ideals = minimal_prime_ideals(c.L, c.options.subset_cap);
  const std::vector<bool> s = {two_disjoint_nonzero(c.L, ideals), c.meet_metrics.complete_bipartite,
                               c.meet_metrics.bipartite, c.mult_metrics.complete_bipartite,
                               two_minimal_primes_meeting_at_zero(c)};
  r.lhs = std::string("(1)=") + yn(s[0]);
  r.rhs = statements_witness(s);
  decide(r, all_equal(s), statements_witness(s));
  return r;
}

TheoremReport thm_2_6(const Context& c) {
  auto r = make("thm-2.6", "reduced with more than two minimal primes: product graph has girth 3");
  r.hypotheses = {{"reduced", c.reduced},
                  {"minimal-primes>2", c.min_prime_count > 2},
                  finite_compactness()};
  r.lhs = "minimal_primes=" + std::to_string(c.min_prime_count);
  r.rhs = "girth=" + girth_to_string(c.mult_metrics.girth);
  const auto tri = find_triangle(c.mult_graph);
  std::string witness = r.rhs;
  if (tri)
    witness = "triangle={" + c.mult_graph.label((*tri)[0]) + "," + c.mult_graph.label((*tri)[1]) + "," +
              c.mult_graph.label((*tri)[2]) + "}";
  decide(r, c.mult_metrics.girth == 3 && tri.has_value(), witness, true);
  return r;
}

TheoremReport lem_2_11(const Context& c) {
  auto r = make("lem-2.11", "Z(L) an ideal implies product-graph diameter <= 2");
  r.hypotheses = {{"Z-ideal", c.zd.z_is_ideal}, {"graph-nonempty", !c.mult_graph.empty()}};
  r.lhs = std::string("Z_ideal=") + yn(c.zd.z_is_ideal);
  r.rhs = "diam=" + c.mult_diam().to_string();
  decide(r, c.mult_diam().is_finite() && c.mult_diam().value <= 2, r.rhs);
  return r;
}

TheoremReport lem_2_18(const Context& c) {
  auto r = make("lem-2.18", "non-reduced: a v (b·q) is a zero divisor for zero divisors a, b and nilpotent q");
  r.hypotheses = {{"non-reduced", !c.reduced}};
  std::string witness;
  std::size_t checked = 0;
  for (Element a : c.zd.z_star.members())
    for (Element b : c.zd.z_star.members())
      for (Element q : c.nil.members()) {
        ++checked;
        const Element v = c.L.join(a, c.m.mult(b, q));
        if (v != c.L.bottom() && !c.zd.z_star.contains(v) && witness.empty())
          witness = "a=" + c.label(a) + ",b=" + c.label(b) + ",q=" + c.label(q);
      }
  r.lhs = "triples=" + std::to_string(checked);
  r.rhs = std::string("all_in_Z*=") + yn(witness.empty());
  decide(r, witness.empty(), witness);
  return r;
}

TheoremReport thm_2_22(const Context& c) {
  auto r = make("thm-2.22", "non-reduced: Z(L) not an ideal iff product-graph diameter is 3");
  r.hypotheses = {{"non-reduced", !c.reduced}};
  const bool lhs = !c.zd.z_is_ideal;
  const bool rhs = c.mult_diam().equals(3);
  r.lhs = std::string("Z_not_ideal=") + yn(lhs);
  r.rhs = "diam=" + c.mult_diam().to_string();
  decide(r, lhs == rhs, r.lhs + "," + r.rhs);
  return r;
}

TheoremReport lem_2_11a(const Context& c) {
  auto r = make("lem-2.11a",
                "reduced: diameter 1 implies Z(L) not an ideal; Z(L) an ideal (nonempty graph) implies diameter 2");
  const bool diam1 = c.mult_diam().equals(1);
  const bool ideal_nonempty = c.zd.z_is_ideal && !c.mult_graph.empty();
  r.hypotheses = {{"reduced", c.reduced}, {"diam=1|Z-ideal-nonempty", diam1 || ideal_nonempty}};
  const bool first = !diam1 || !c.zd.z_is_ideal;
  const bool second = !ideal_nonempty || c.mult_diam().equals(2);
  r.lhs = "diam=" + c.mult_diam().to_string();
  r.rhs = std::string("Z_ideal=") + yn(c.zd.z_is_ideal);
  decide(r, first && second, r.lhs + "," + r.rhs);
  return r;
}

TheoremReport thm_2_13(const Context& c) {
  auto r = make("thm-2.13",
                "0-distributive, V(meet graph) u {0} not an ideal: meet-graph diameter <= 2 iff exactly two "
                "minimal prime ideals");
  ElementSet v0(c.L.size(), {c.L.bottom()});
  for (Element x : c.meet_graph.elements()) v0.insert(x);
  const bool v0_ideal = classify_subset(c.L, v0).ideal;
  r.hypotheses = {{"0-distributive", c.zero_distributive}, {"V-u-0-not-ideal", !v0_ideal}};
  const auto ideals = minimal_prime_ideals(c.L, c.options.subset_cap);
  const auto& d = c.meet_metrics.diameter;
  const bool lhs = d.is_finite() && d.value <= 2;
  const bool rhs = ideals.size() == 2;
  r.lhs = "diam=" + d.to_string();
  r.rhs = "minimal_prime_ideals=" + std::to_string(ideals.size());
  decide(r, lhs == rhs, r.lhs + "," + r.rhs);
  return r;
}

TheoremReport thm_2_14(const Context& c) {
  auto r = make("thm-2.14",
                "Z(L) not an ideal: product-graph diameter 2 iff reduced with exactly two minimal prime elements");
  r.hypotheses = {{"Z-not-ideal", !c.zd.z_is_ideal}, finite_compactness()};
  const bool lhs = c.mult_diam().equals(2);
  const bool rhs = c.reduced && c.min_prime_count == 2;
  r.lhs = "diam=" + c.mult_diam().to_string();
  r.rhs = std::string("reduced=") + yn(c.reduced) + ",minimal_primes=" + std::to_string(c.min_prime_count);
  decide(r, lhs == rhs, r.lhs + "," + r.rhs);
  return r;
}

TheoremReport thm_2_24(const Context& c) {
  auto r = make("thm-2.24",
                "Z(L) not an ideal: diameter 3 iff reduced with more than two minimal primes or non-reduced");
  r.hypotheses = {{"Z-not-ideal", !c.zd.z_is_ideal}, finite_compactness()};
  const bool lhs = c.mult_diam().equals(3);
  const bool rhs = (c.reduced && c.min_prime_count > 2) || !c.reduced;
  r.lhs = "diam=" + c.mult_diam().to_string();
  r.rhs = std::string("reduced=") + yn(c.reduced) + ",minimal_primes=" + std::to_string(c.min_prime_count);
  decide(r, lhs == rhs, r.lhs + "," + r.rhs);
  return r;
}

TheoremReport thm_2_26(const Context& c, const DiameterClass& dc) {
  auto r = make("thm-2.26", "Z(L) not an ideal: 1 <= diameter <= 3 with the three-case classification");
  r.hypotheses = {{"Z-not-ideal", !c.zd.z_is_ideal}, finite_compactness()};
  const auto& d = c.mult_diam();
  const std::size_t zs = c.zd.z_star.count(), na = c.atom_set.count();
  const bool in_range = d.is_finite() && d.value >= 1 && d.value <= 3;
  const bool case1 = d.equals(1) == (c.reduced && zs == 2 && na == 2);
  const bool case2 = d.equals(2) == (c.reduced && c.min_prime_count == 2 && zs > 2);
  const bool case3 = d.equals(3) == ((c.reduced && c.min_prime_count > 2) || !c.reduced);
  // A diameter-1 graph forces the zero divisors to be exactly the atoms.
  const bool atoms_match = !d.equals(1) || c.zd.z_star == c.atom_set;
  r.lhs = "diam=" + d.to_string();
  r.rhs = "predicted=" + (dc.predicted ? std::to_string(*dc.predicted) : std::string("none"));
  std::string witness = r.lhs + "," + r.rhs + ",|Z*|=" + std::to_string(zs) + ",|A|=" + std::to_string(na) +
                        ",reduced=" + yn(c.reduced) + ",minimal_primes=" + std::to_string(c.min_prime_count);
  if (!atoms_match) witness += ",Z*=" + c.set(c.zd.z_star) + ",A=" + c.set(c.atom_set);
  decide(r, in_range && case1 && case2 && case3 && atoms_match, witness);
  return r;
}

TheoremReport lem_2_29(const Context& c) {
  auto r = make("lem-2.29", "reduced: x in Z(L) iff x lies below some minimal prime element");
  r.hypotheses = {{"reduced", c.reduced}, finite_compactness()};
  std::string witness;
  for (Element x = 0; x < c.m.size() && witness.empty(); ++x) {
    bool below = false;
    for (Element p : c.min_primes.members()) below = below || c.L.leq(x, p);
    if (below != c.zd.z.contains(x))
      witness = "x=" + c.label(x) + ",in_Z=" + yn(c.zd.z.contains(x)) + ",below_minimal_prime=" + yn(below);
  }
  r.lhs = "Z=" + c.set(c.zd.z);
  r.rhs = "minimal_primes=" + c.set(c.min_primes);
  decide(r, witness.empty(), witness);
  return r;
}

TheoremReport lem_2_29a(const Context& c) {
  auto r = make("lem-2.29a", "reduced: every minimal prime contains exactly one of a and a*");
  r.hypotheses = {{"reduced", c.reduced}, finite_compactness()};
  std::string witness;
  for (Element p : c.min_primes.members())
    for (Element a = 0; a < c.m.size() && witness.empty(); ++a) {
      const Element s = star(c.m, a);
      if (c.L.leq(a, p) == c.L.leq(s, p)) witness = "p=" + c.label(p) + ",a=" + c.label(a) + ",a*=" + c.label(s);
    }
  r.lhs = "minimal_primes=" + c.set(c.min_primes);
  r.rhs = std::string("exactly_one=") + yn(witness.empty());
  decide(r, witness.empty(), witness);
  return r;
}

TheoremReport lem_2_30(const Context& c) {
  auto r = make("lem-2.30", "reduced with more than two minimal primes: Z(L) not an ideal and diameter 3");
  r.hypotheses = {{"reduced", c.reduced}, {"minimal-primes>2", c.min_prime_count > 2}, finite_compactness()};
  r.lhs = std::string("Z_not_ideal=") + yn(!c.zd.z_is_ideal);
  r.rhs = "diam=" + c.mult_diam().to_string();
  decide(r, !c.zd.z_is_ideal && c.mult_diam().equals(3), r.lhs + "," + r.rhs);
  return r;
}

TheoremReport cor_1_4(const Context& c) {
  auto r = make("cor-1.4",
                "every prime contains a minimal prime; reduced: every a != 0 escapes some prime and the minimal "
                "primes meet at 0");
  r.hypotheses = {finite_compactness()};
  std::string witness;
  for (Element p : c.primes.members()) {
    bool contains = false;
    for (Element q : c.min_primes.members()) contains = contains || c.L.leq(q, p);
    if (!contains && witness.empty()) witness = "prime_without_minimal=" + c.label(p);
  }
  if (c.reduced) {
    for (Element a = 0; a < c.m.size() && witness.empty(); ++a) {
      if (a == c.L.bottom()) continue;
      bool escapes = false;
      for (Element p : c.primes.members()) escapes = escapes || !c.L.leq(a, p);
      if (!escapes) witness = "below_every_prime=" + c.label(a);
    }
    const Element meet = c.L.meet_of(c.min_primes.members());
    if (meet != c.L.bottom() && witness.empty()) witness = "meet_of_minimal_primes=" + c.label(meet);
  }
  r.lhs = "primes=" + c.set(c.primes);
  r.rhs = "minimal_primes=" + c.set(c.min_primes);
  decide(r, witness.empty(), witness);
  return r;
}

DiameterClass classify(const Context& c) {
  DiameterClass out;
  out.computed = c.mult_diam();
  out.applicable = !c.zd.z_is_ideal;
  if (!out.applicable) {
    out.bound = "diam<=2 (Z(L) is an ideal)";
    return out;
  }
  const std::size_t zs = c.zd.z_star.count();
  if (c.reduced && zs == 2 && c.atom_set.count() == 2)
    out.predicted = 1;
  else if (c.reduced && c.min_prime_count == 2 && zs > 2)
    out.predicted = 2;
  else if (!c.reduced || c.min_prime_count > 2)
    out.predicted = 3;
  out.agree = out.predicted && out.computed.equals(*out.predicted);
  return out;
}

}  // namespace

std::vector<TheoremReport> check_all(const MultLattice& m, const SuiteOptions& options) {
  const Context c(m, options);
  const DiameterClass dc = classify(c);
  return {equiv_reduced_graphs(c), reduced_0dist(c), thm_2_9(c),   thm_2_4(c),     lem_2_4a(c),
          thm_2_5(c),              thm_2_7(c),       thm_2_6(c),   lem_2_11(c),    lem_2_18(c),
          thm_2_22(c),             lem_2_11a(c),     thm_2_13(c),  thm_2_14(c),    thm_2_24(c),
          thm_2_26(c, dc),         lem_2_29(c),      lem_2_29a(c), lem_2_30(c),    cor_1_4(c)};
}

DiameterClass classify_diameter(const MultLattice& m) { return classify(Context(m, {})); }

std::string format_line(const TheoremReport& r) {
  std::string line = r.id + " " + to_string(r.verdict);
  if (!r.witness.empty()) line += " " + r.witness;
  return line;
}

bool any_refuted(const std::vector<TheoremReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const TheoremReport& r) { return r.verdict == Verdict::refuted; });
}

}  // namespace zdlat
