#ifndef CU2_EXPR_HPP
#define CU2_EXPR_HPP

#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"

namespace cu2 {

/// Surface-syntax AST: a sum of scalar-multiplied products of atoms.
///
///   expr     := term (("+"|"-") term)* ;
///   term     := [coeff] atom ("#" atom)* ;
///   atom     := "e" | "s1" | "s2" | "s1*" | "s2*" | "(" expr ")" ;
///   coeff    := rational | "(" rational "," rational ")" ;
///   rational := ["-"] digits ["/" digits] ;
struct Expression {
  struct Term {
    Scalar coeff = Scalar::one();
    std::vector<AlgElement> factors;  // atoms, already lowered
  };
  std::vector<Term> terms;  // signs folded into the coefficients

  AlgElement lower() const;
};

/// Parses the surface syntax; whitespace-insensitive, longest-match on
/// the starred generators. Throws ParseError with the byte offset and
/// the expected-token set.
Expression parse(const std::string& text);

/// parse + lower in one step.
AlgElement parse_element(const std::string& text);

/// Prints an element in the surface syntax so that parse_element
/// round-trips it exactly.
std::string format_element(const AlgElement& f);

}  // namespace cu2

#endif
