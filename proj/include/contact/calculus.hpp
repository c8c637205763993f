#pragma once

#include "contact/exterior.hpp"

namespace contact {

/// Standard contact structure on R^{2n+1}: alpha = dz + sum x_i dy_i.
struct ContactContext {
  int n;
  DifferentialForm alpha;
  DifferentialForm dalpha;  // sum dx_i ^ dy_i
  VectorField reeb;         // d/dz

  explicit ContactContext(int n);
};

DifferentialForm exterior_derivative(const DifferentialForm& omega);

/// X(f) = sum_k X^k df/du_k.
Polynomial apply_field(const VectorField& X, const Polynomial& f);

/// Componentwise bracket [X, Y]^k = X(Y^k) - Y(X^k).
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

/// Contact vector field with Hamiltonian h for alpha = dz + sum x_i dy_i:
///   X = sum (h_z x_i - h_{y_i}) d/dx_i + sum h_{x_i} d/dy_i + (h - sum h_{x_i} x_i) d/dz.
/// It satisfies alpha(X) = h and i_X dalpha = dh(R) alpha - dh.
VectorField contact_field_from_h(const Polynomial& h);

/// Cartan formula L_X = i_X d + d i_X.
DifferentialForm lie_derivative(const VectorField& X, const DifferentialForm& omega);

}  // namespace contact
