#pragma once

#include <cstdint>
#include <random>

#include "contact/exterior.hpp"
#include "contact/lefschetz.hpp"
#include "contact/polynomial.hpp"

namespace contact {

/// Seeded generator of random polynomials, forms and vector fields.
///
/// Draws use `engine() % k` rather than the standard distributions, whose
/// output is not specified across library implementations; a given seed gives
/// the same objects everywhere.
///
/// Coefficients come from {1, -1, 2, -2, 1/2, -1/3, 3}. A polynomial has one
/// to three monomials of total degree <= max_degree. A form includes each
/// basis word with probability 1/2 (and at least one word when any exists).
class FormSampler {
 public:
  explicit FormSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  int below(int bound);
  Rational coefficient();
  Monomial monomial(int n, int max_degree);
  Polynomial polynomial(int n, int max_degree);
  DifferentialForm form(int n, int degree, int max_degree);
  HorizontalForm horizontal(int n, int degree, int max_degree);
  VectorField field(int n, int max_degree);

 private:
  std::mt19937_64 engine_;
};

/// All words of the given degree over `count` covectors, in canonical order.
std::vector<Word> words_of_degree(int count, int degree);

}  // namespace contact
