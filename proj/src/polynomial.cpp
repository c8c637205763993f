#include "contact/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace contact {

Coordinate Coordinate::from_index(int n, int index) {
  if (index < 0 || index > 2 * n) throw std::out_of_range("Coordinate: index out of range");
  if (index < n) return x(index + 1);
  if (index < 2 * n) return y(index - n + 1);
  return z();
}

int Coordinate::index(int n) const {
  switch (kind) {
    case Kind::X:
      if (k < 1 || k > n) throw std::out_of_range("Coordinate: x index out of range");
      return k - 1;
    case Kind::Y:
      if (k < 1 || k > n) throw std::out_of_range("Coordinate: y index out of range");
      return n + k - 1;
    case Kind::Z:
      return 2 * n;
  }
  return 2 * n;
}

std::string Coordinate::name() const {
  switch (kind) {
    case Kind::X:
      return "x" + std::to_string(k);
    case Kind::Y:
      return "y" + std::to_string(k);
    case Kind::Z:
      return "z";
  }
  return "z";
}

Monomial Monomial::variable(int index, int power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(int index, int power) {
  if (index < 0 || index >= kMaxCoordinates) throw std::out_of_range("Monomial: variable index out of range");
  if (power < 0 || power > 255) throw std::overflow_error("Monomial: exponent out of range");
  exponents_[static_cast<std::size_t>(index)] = static_cast<std::uint8_t>(power);
}

int Monomial::total_degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  Monomial out;
  for (std::size_t i = 0; i < out.exponents_.size(); ++i) {
    const int e = lhs.exponents_[i] + rhs.exponents_[i];
    if (e > 255) throw std::overflow_error("Monomial: exponent overflow");
    out.exponents_[i] = static_cast<std::uint8_t>(e);
  }
  return out;
}

Polynomial::Polynomial(int n) : n_(n) {
  if (n < 1 || coordinate_count(n) > kMaxCoordinates) {
    throw std::invalid_argument("Polynomial: dimension parameter n must be in 1..7");
  }
}

Polynomial Polynomial::constant(int n, const Rational& c) {
  Polynomial p(n);
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(int n, Coordinate c) {
  Polynomial p(n);
  p.add_term(Monomial::variable(c.index(n)), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(int n, const Monomial& m, const Rational& c) {
  Polynomial p(n);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

int Polynomial::total_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.total_degree());
  return deg;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  for (int i = coordinate_count(n_); i < kMaxCoordinates; ++i) {
    if (m[i] != 0) throw std::out_of_range("Polynomial: monomial uses a variable beyond 2n+1");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::require_same_dimension(const Polynomial& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("Polynomial: dimension mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_dimension(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_dimension(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.require_same_dimension(rhs);
  Polynomial out(lhs.n_);
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) out.add_term(ml * mr, cl * cr);
  }
  return out;
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add:
      return p + q;
    case ArithKind::Sub:
      return p - q;
    case ArithKind::Mul:
      return p * q;
  }
  throw std::invalid_argument("poly_arith: unknown kind");
}

Polynomial partial(const Polynomial& p, int index) {
  if (index < 0 || index >= coordinate_count(p.n())) throw std::out_of_range("partial: variable index out of range");
  Polynomial out(p.n());
  for (const auto& [m, c] : p.terms()) {
    const int e = m[index];
    if (e == 0) continue;
    Monomial lowered = m;
    lowered.set(index, e - 1);
    out.add_term(lowered, c * Rational(e));
  }
  return out;
}

Polynomial substitute(const Polynomial& p, int index, const Polynomial& value) {
  if (index < 0 || index >= coordinate_count(p.n())) throw std::out_of_range("substitute: variable index out of range");
  Polynomial out(p.n());
  std::vector<Polynomial> powers{Polynomial::constant(p.n(), Rational(1))};
  for (const auto& [m, c] : p.terms()) {
    const int e = m[index];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest.set(index, 0);
    out += Polynomial::monomial(p.n(), rest, c) * powers[static_cast<std::size_t>(e)];
  }
  return out;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  const int dim = coordinate_count(p.n());
  if (static_cast<int>(point.size()) != dim) throw std::invalid_argument("evaluate: point has wrong dimension");
  Rational total(0);
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (int i = 0; i < dim; ++i) {
      for (int e = 0; e < m[i]; ++e) term *= point[static_cast<std::size_t>(i)];
    }
    total += term;
  }
  return total;
}

}  // namespace contact
