#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "contact/rational.hpp"

namespace contact {

/// Largest supported number of coordinates, i.e. n <= 7.
inline constexpr int kMaxCoordinates = 15;

inline int coordinate_count(int n) { return 2 * n + 1; }

/// Coordinate on R^{2n+1}, ordered x_1..x_n, y_1..y_n, z.
///
/// The same tag names the covectors dx_k, dy_k, dz and the vectors
/// d/dx_k, d/dy_k, d/dz; index() gives the position in that order.
struct Coordinate {
  enum class Kind : std::uint8_t { X, Y, Z };
  Kind kind = Kind::Z;
  int k = 0;  // 1-based for X and Y, unused for Z

  static Coordinate x(int k) { return {Kind::X, k}; }
  static Coordinate y(int k) { return {Kind::Y, k}; }
  static Coordinate z() { return {Kind::Z, 0}; }
  static Coordinate from_index(int n, int index);

  int index(int n) const;
  std::string name() const;  // "x1", "y2", "z"

  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

/// Exponent vector of a monomial in the 2n+1 coordinates.
class Monomial {
 public:
  Monomial() { exponents_.fill(0); }

  static Monomial variable(int index, int power = 1);

  int operator[](int index) const { return exponents_[static_cast<std::size_t>(index)]; }
  void set(int index, int power);
  int total_degree() const;
  bool is_constant() const { return total_degree() == 0; }

  /// Product of monomials; throws std::overflow_error if an exponent exceeds 255.
  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxCoordinates> exponents_{};
};

/// Multivariate polynomial over Q in x_1..x_n, y_1..y_n, z.
///
/// Never stores a zero coefficient. Values are immutable through the public
/// interface apart from the compound assignment operators.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(int n = 1);
  static Polynomial constant(int n, const Rational& c);
  static Polynomial variable(int n, Coordinate c);
  static Polynomial monomial(int n, const Monomial& m, const Rational& c = Rational(1));

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.n_ == rhs.n_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void require_same_dimension(const Polynomial& rhs) const;

  int n_;
  TermMap terms_;
};

enum class ArithKind { Add, Sub, Mul };

/// Exact ring operation; throws std::invalid_argument when dimensions differ.
Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithKind kind);

/// Formal partial derivative with respect to the coordinate at `index`.
Polynomial partial(const Polynomial& p, int index);
inline Polynomial partial(const Polynomial& p, Coordinate c) { return partial(p, c.index(p.n())); }

/// Replaces the coordinate at `index` by `value`.
Polynomial substitute(const Polynomial& p, int index, const Polynomial& value);

/// Evaluates at a point given by 2n+1 rationals.
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

}  // namespace contact
