#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdlat/graph_metrics.hpp"
#include "zdlat/mult_lattice.hpp"

namespace zdlat {

enum class Verdict { confirmed, vacuous, refuted, size_skipped };

/// "confirmed", "vacuous", "REFUTED", "size-skipped".
const char* to_string(Verdict v);

struct Hypothesis {
  std::string name;
  bool holds = false;
};

/// Outcome of checking one statement on one multiplicative lattice.
///
/// A statement with hypotheses is only a claim when they all hold; when one
/// fails the verdict is vacuous and lhs/rhs are kept for diagnostics only.
/// A refuted report always carries a witness.
struct TheoremReport {
  std::string id;
  std::string statement;
  std::vector<Hypothesis> hypotheses;
  std::string lhs;
  std::string rhs;
  Verdict verdict = Verdict::vacuous;
  std::string witness;
  std::string note;
};

struct SuiteOptions {
  /// Minimal prime semi-ideals are brute-forced up to this many elements.
  std::size_t semi_ideal_cap = 16;
  std::size_t subset_cap = kSubsetSearchCap;
};

/// Stable catalog of statement ids, in report order.
const std::vector<std::string>& theorem_ids();

/// Evaluates the whole catalog. Failures are verdicts, never exceptions;
/// only a one-element lattice (no graphs) throws degenerate_lattice.
std::vector<TheoremReport> check_all(const MultLattice& m, const SuiteOptions& options = {});

/// Diameter class predicted from algebra alone when Z(L) is not an ideal:
///   1  reduced and |Z*| = |atoms| = 2
///   2  reduced, exactly two minimal primes and |Z*| > 2
///   3  reduced with more than two minimal primes, or not reduced
/// When Z(L) is an ideal the classifier does not apply and `bound` records
/// the diam <= 2 bound instead.
struct DiameterClass {
  bool applicable = false;
  std::optional<int> predicted;
  Diameter computed;
  bool agree = false;
  std::string bound;
};

DiameterClass classify_diameter(const MultLattice& m);

/// "<id> <verdict>[ <witness>]".
std::string format_line(const TheoremReport& report);

/// True when any report is refuted.
bool any_refuted(const std::vector<TheoremReport>& reports);

}  // namespace zdlat
