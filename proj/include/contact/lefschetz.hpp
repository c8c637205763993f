#pragma once

#include <map>
#include <vector>

#include "contact/exterior.hpp"

namespace contact {

/// A form on the contact plane in its dz-free model (words over dx_i, dy_i only).
class HorizontalForm {
 public:
  /// Throws std::invalid_argument if some word contains dz.
  explicit HorizontalForm(DifferentialForm form);
  static HorizontalForm zero(int n, int degree) { return HorizontalForm(DifferentialForm::zero(n, degree)); }

  const DifferentialForm& form() const { return form_; }
  int n() const { return form_.n(); }
  int degree() const { return form_.degree(); }
  bool is_zero() const { return form_.is_zero(); }

  friend bool operator==(const HorizontalForm&, const HorizontalForm&) = default;

 private:
  DifferentialForm form_;
};

/// Indices i with 0 <= i <= min(a, 2n-a), i = a mod 2; empty when a > 2n.
std::vector<int> decomposition_indices(int a, int n);

/// phi ^ (sum dx_i ^ dy_i)^power.
HorizontalForm lefschetz_L(const HorizontalForm& phi, int power = 1);

/// sum_k i_{d/dy_k} i_{d/dx_k} phi, normalised so that Lambda(dx_k ^ dy_k) = 1.
/// Satisfies [L, Lambda] = (a - n) on degree-a forms.
HorizontalForm lefschetz_dual(const HorizontalForm& phi, int power = 1);

/// True iff deg phi <= n and Lambda phi = 0.
bool is_primitive(const HorizontalForm& phi);

/// phi = sum_i L^{(a-i)/2} pi_i with each pi_i primitive.
struct LefschetzDecomposition {
  int n = 1;
  int degree = 0;
  std::map<int, HorizontalForm> components;  // keyed by decomposition_indices(degree, n)

  const HorizontalForm& component(int i) const;
  HorizontalForm reconstruct() const;
};

/// Closed-form projections Pi_i = sum_j c'(i,j) L^{j+(i-a)/2} Lambda^j applied
/// coefficient-wise; requires deg phi <= 2n.
LefschetzDecomposition primitive_projections(const HorizontalForm& phi);

/// Pi_i(phi) for a single index i.
HorizontalForm primitive_projection(const HorizontalForm& phi, int i);

enum class Sl2Family {
  LambdaPower,       // c(s, i):  Lambda^s = sum_i c(s,i) L^{(a-i)/2 - s} Pi_i
  Projection,        // c'(i, j): Pi_i = sum_j c'(i,j) L^{j + (i-a)/2} Lambda^j
  LambdaInLPowers,   // c''(s, j): Lambda^s = sum_j c''(s,j) L^{j-s} Lambda^j
};

/// Coefficient of Lambda L^j pi = -j(i - n + j - 1) L^{j-1} pi for primitive pi of degree i.
Rational lambda_l_coefficient(int n, int i, int j);

/// The universal constants of the sl2 relations on forms of degree a.
/// Throws std::out_of_range when (first, second) lies outside the index range.
Rational sl2_constant(int n, int a, Sl2Family family, int first, int second);

}  // namespace contact
