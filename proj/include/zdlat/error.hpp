#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace zdlat {

/// Index of an element inside a finite lattice. Elements are numbered
/// 0..n-1 in the order the labels were declared.
using Element = std::size_t;

enum class ErrorCode {
  empty_lattice,
  duplicate_label,
  unknown_label,
  not_a_partial_order,
  not_a_lattice,
  no_bounds,
  empty_subset,
  invalid_table,
  axiom_violation,
  not_prime,
  not_an_ideal,
  degenerate_lattice,
  top_join_reducible,
  not_distributive,
  invalid_modulus,
  size_guard,
  cap_exceeded,
  parse_error,
};

const char* to_string(ErrorCode code);

/// Base error for every failed precondition or validation in the library.
/// `witness` carries the offending elements when there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<Element> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Element> witness_;
};

/// Raised when a multiplication table breaks one of the five
/// multiplicative-lattice axioms. `axiom()` is 1..5.
class AxiomViolation : public Error {
 public:
  AxiomViolation(int axiom, const std::string& message, std::vector<Element> witness)
      : Error(ErrorCode::axiom_violation, message, std::move(witness)), axiom_(axiom) {}

  int axiom() const noexcept { return axiom_; }

 private:
  int axiom_;
};

}  // namespace zdlat
