#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "contact/polynomial.hpp"

namespace contact {

/// Strictly increasing word of covector indices dx_1 < ... < dx_n < dy_1 < ... < dy_n < dz,
/// stored as a bit set over coordinate positions.
///
/// Words are ordered by degree, then lexicographically on their index sequences.
class Word {
 public:
  constexpr Word() = default;
  constexpr explicit Word(std::uint32_t bits) : bits_(bits) {}
  /// Throws std::invalid_argument if the indices are not strictly increasing.
  static Word from_indices(std::span<const int> indices);
  static constexpr Word single(int index) { return Word(std::uint32_t{1} << index); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int degree() const { return std::popcount(bits_); }
  constexpr bool contains(int index) const { return (bits_ >> index) & 1U; }
  std::vector<int> indices() const;

  friend constexpr bool operator==(Word, Word) = default;
  friend std::strong_ordering operator<=>(Word lhs, Word rhs);

 private:
  std::uint32_t bits_ = 0;
};

/// Sign of the permutation sorting the concatenation lhs ++ rhs; 0 if the words overlap.
int wedge_sign(Word lhs, Word rhs);

/// Differential form of a fixed degree on R^{2n+1} with polynomial coefficients.
///
/// Only the zero form may carry a degree above 2n+1 (wedge overflow keeps the
/// nominal degree and simply has no terms).
class DifferentialForm {
 public:
  using TermMap = std::map<Word, Polynomial>;

  DifferentialForm(int n, int degree);
  static DifferentialForm zero(int n, int degree) { return DifferentialForm(n, degree); }
  static DifferentialForm function(const Polynomial& f);
  static DifferentialForm constant(int n, const Rational& c);
  static DifferentialForm covector(int n, Coordinate c);
  static DifferentialForm term(const Polynomial& coeff, Word w);

  int n() const { return n_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(Word w) const;
  /// True iff no word contains dz.
  bool is_horizontal() const;

  void add_term(Word w, const Polynomial& coeff);

  DifferentialForm& operator+=(const DifferentialForm& rhs);
  DifferentialForm& operator-=(const DifferentialForm& rhs);
  DifferentialForm& operator*=(const Polynomial& f);
  DifferentialForm& operator*=(const Rational& c);

  friend DifferentialForm operator+(DifferentialForm lhs, const DifferentialForm& rhs) { return lhs += rhs; }
  friend DifferentialForm operator-(DifferentialForm lhs, const DifferentialForm& rhs) { return lhs -= rhs; }
  friend DifferentialForm operator-(DifferentialForm x) { return x *= Rational(-1); }
  friend DifferentialForm operator*(const Polynomial& f, DifferentialForm x) { return x *= f; }
  friend DifferentialForm operator*(const Rational& c, DifferentialForm x) { return x *= c; }

  /// Equal as forms; zero forms compare equal regardless of nominal degree.
  friend bool operator==(const DifferentialForm& lhs, const DifferentialForm& rhs);

 private:
  void absorb(const DifferentialForm& rhs, const Rational& scale);

  int n_;
  int degree_;
  TermMap terms_;
};

/// Vector field with 2n+1 polynomial components along d/dx_1..d/dx_n, d/dy_1..d/dy_n, d/dz.
class VectorField {
 public:
  explicit VectorField(int n);
  VectorField(int n, std::vector<Polynomial> components);
  static VectorField coordinate(int n, Coordinate c);

  int n() const { return n_; }
  const Polynomial& operator[](int index) const { return components_[static_cast<std::size_t>(index)]; }
  const std::vector<Polynomial>& components() const { return components_; }

  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  int n_;
  std::vector<Polynomial> components_;
};

/// Graded-commutative exact product. Degree overflow yields the zero form.
DifferentialForm wedge(const DifferentialForm& lhs, const DifferentialForm& rhs);

/// i_X omega; a 0-form maps to the zero 0-form.
DifferentialForm interior_product(const VectorField& X, const DifferentialForm& omega);

/// The dz-free representative of omega restricted to the contact plane,
/// obtained by substituting dz -> -sum_i x_i dy_i.
DifferentialForm restrict_to_Q(const DifferentialForm& omega);

/// Coefficients evaluated at a point (2n+1 rationals); the result has constant coefficients.
DifferentialForm evaluate_coefficients(const DifferentialForm& omega, std::span<const Rational> point);

/// omega(v_1, ..., v_a) with constant vectors v_i given in coordinates, evaluated at `point`.
Rational evaluate_on_vectors(const DifferentialForm& omega, std::span<const RationalVector> vectors,
                             std::span<const Rational> point);

}  // namespace contact
