#include "contact/random.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace contact {

int FormSampler::below(int bound) {
  if (bound <= 0) throw std::invalid_argument("FormSampler::below: bound must be positive");
  return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound));
}

Rational FormSampler::coefficient() {
  static const std::array<Rational, 7> pool = {Rational(1),  Rational(-1),    Rational(2), Rational(-2),
                                               Rational(1, 2), Rational(-1, 3), Rational(3)};
  return pool[static_cast<std::size_t>(below(static_cast<int>(pool.size())))];
}

Monomial FormSampler::monomial(int n, int max_degree) {
  Monomial m;
  const int degree = below(max_degree + 1);
  const int vars = coordinate_count(n);
  for (int k = 0; k < degree; ++k) m = m * Monomial::variable(below(vars));
  return m;
}

Polynomial FormSampler::polynomial(int n, int max_degree) {
  Polynomial p(n);
  const int terms = 1 + below(3);
  for (int k = 0; k < terms; ++k) {
    const Monomial m = monomial(n, max_degree);
    p.add_term(m, coefficient());
  }
  return p;
}

DifferentialForm FormSampler::form(int n, int degree, int max_degree) {
  DifferentialForm out(n, degree);
  const std::vector<Word> words = words_of_degree(coordinate_count(n), degree);
  for (Word w : words) {
    if (below(2) == 0) out.add_term(w, polynomial(n, max_degree));
  }
  if (out.is_zero() && !words.empty()) {
    out.add_term(words[static_cast<std::size_t>(below(static_cast<int>(words.size())))], polynomial(n, max_degree));
  }
  return out;
}

HorizontalForm FormSampler::horizontal(int n, int degree, int max_degree) {
  DifferentialForm out(n, degree);
  const std::vector<Word> words = words_of_degree(2 * n, degree);
  for (Word w : words) {
    if (below(2) == 0) out.add_term(w, polynomial(n, max_degree));
  }
  if (out.is_zero() && !words.empty()) {
    out.add_term(words[static_cast<std::size_t>(below(static_cast<int>(words.size())))], polynomial(n, max_degree));
  }
  return HorizontalForm(std::move(out));
}

VectorField FormSampler::field(int n, int max_degree) {
  std::vector<Polynomial> components;
  for (int k = 0; k < coordinate_count(n); ++k) {
    components.push_back(below(2) == 0 ? polynomial(n, max_degree) : Polynomial(n));
  }
  return VectorField(n, std::move(components));
}

std::vector<Word> words_of_degree(int count, int degree) {
  std::vector<Word> out;
  if (degree < 0 || degree > count) return out;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << count); ++bits) {
    if (std::popcount(bits) == degree) out.push_back(Word(bits));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace contact
