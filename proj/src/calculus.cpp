#include "contact/calculus.hpp"

#include <stdexcept>

namespace contact {

ContactContext::ContactContext(int n_)
    : n(n_), alpha(n_, 1), dalpha(n_, 2), reeb(VectorField::coordinate(n_, Coordinate::z())) {
  alpha += DifferentialForm::covector(n, Coordinate::z());
  for (int i = 1; i <= n; ++i) {
    alpha += Polynomial::variable(n, Coordinate::x(i)) * DifferentialForm::covector(n, Coordinate::y(i));
    dalpha += wedge(DifferentialForm::covector(n, Coordinate::x(i)), DifferentialForm::covector(n, Coordinate::y(i)));
  }
}

DifferentialForm exterior_derivative(const DifferentialForm& omega) {
  const int n = omega.n();
  DifferentialForm out(n, omega.degree() + 1);
  if (out.degree() > coordinate_count(n)) return out;
  for (const auto& [w, c] : omega.terms()) {
    for (int k = 0; k < coordinate_count(n); ++k) {
      if (w.contains(k)) continue;
      Polynomial dc = partial(c, k);
      if (dc.is_zero()) continue;
      const Word dk = Word::single(k);
      if (wedge_sign(dk, w) < 0) dc *= Rational(-1);
      out.add_term(Word(w.bits() | dk.bits()), dc);
    }
  }
  return out;
}

Polynomial apply_field(const VectorField& X, const Polynomial& f) {
  if (X.n() != f.n()) throw std::invalid_argument("apply_field: dimension mismatch");
  Polynomial out(f.n());
  for (int k = 0; k < coordinate_count(f.n()); ++k) {
    if (!X[k].is_zero()) out += X[k] * partial(f, k);
  }
  return out;
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
  if (X.n() != Y.n()) throw std::invalid_argument("lie_bracket: dimension mismatch");
  std::vector<Polynomial> comps;
  comps.reserve(static_cast<std::size_t>(coordinate_count(X.n())));
  for (int k = 0; k < coordinate_count(X.n()); ++k) comps.push_back(apply_field(X, Y[k]) - apply_field(Y, X[k]));
  return VectorField(X.n(), std::move(comps));
}

VectorField contact_field_from_h(const Polynomial& h) {
  const int n = h.n();
  std::vector<Polynomial> comps(static_cast<std::size_t>(coordinate_count(n)), Polynomial(n));
  const Polynomial hz = partial(h, Coordinate::z());
  Polynomial z_component = h;
  for (int i = 1; i <= n; ++i) {
    const Polynomial xi = Polynomial::variable(n, Coordinate::x(i));
    const Polynomial hx = partial(h, Coordinate::x(i));
    comps[static_cast<std::size_t>(Coordinate::x(i).index(n))] = hz * xi - partial(h, Coordinate::y(i));
    comps[static_cast<std::size_t>(Coordinate::y(i).index(n))] = hx;
    z_component -= hx * xi;
  }
  comps[static_cast<std::size_t>(Coordinate::z().index(n))] = z_component;
  return VectorField(n, std::move(comps));
}

DifferentialForm lie_derivative(const VectorField& X, const DifferentialForm& omega) {
  DifferentialForm out = exterior_derivative(interior_product(X, omega));
  out += interior_product(X, exterior_derivative(omega));
  if (out.is_zero()) return DifferentialForm::zero(omega.n(), omega.degree());
  return out;
}

}  // namespace contact
