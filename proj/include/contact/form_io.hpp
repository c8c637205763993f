#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "contact/exterior.hpp"

namespace contact {

/// Thrown for malformed form or polynomial text; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   form     := [sign] term (("+"|"-") term)*
//   term     := factor (["*"] factor)*        whitespace between factors multiplies
//   factor   := rational | var ["^" INT] | basis ("^" basis)*
//   rational := INT ["/" INT]
//   var      := "x"INT | "y"INT | "z"
//   basis    := "dx"INT | "dy"INT | "dz"
// Every term must have the same number of basis factors (the form degree).

DifferentialForm parse_form(std::string_view text, int n);
Polynomial parse_polynomial(std::string_view text, int n);

/// Canonical text: words in covector order, monomials in exponent order, lowest-terms coefficients.
std::string format_form(const DifferentialForm& omega);
std::string format_polynomial(const Polynomial& p);
std::string format_monomial(const Monomial& m, int n);
std::string format_word(Word w, int n);
std::string format_vector_field(const VectorField& X);

}  // namespace contact
