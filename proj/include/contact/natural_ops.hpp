#pragma once

#include <string>
#include <vector>

#include "contact/exterior.hpp"
#include "contact/lefschetz.hpp"

namespace contact {

/// i with 0 <= i <= min(a-2, 2n-a), i = a mod 2: the indices for which P_{a,i} exists.
std::vector<int> admissible_indices(int a, int n);

/// P_{a,i}(omega) = L^{(a-i-2)/2} pi_i ^ alpha, where pi_i is taken from the
/// decomposition of the dz-free restriction of omega.
DifferentialForm apply_P(int a, int i, const DifferentialForm& omega);

enum class RuminPath {
  Xi,           // solve d(omega)|_Q = -L xi and use omega + alpha ^ xi
  Composition,  // id + (-1)^n sum_i P_{n+1,i} o d
};

/// The correction xi of degree n-1 with restrict_to_Q(d omega) = -L xi.
HorizontalForm rumin_xi(const DifferentialForm& omega);
DifferentialForm apply_Q(const DifferentialForm& omega, RuminPath path = RuminPath::Xi);
DifferentialForm apply_rumin(const DifferentialForm& omega, RuminPath path = RuminPath::Xi);

/// Immutable descriptor of one of the natural operators or a composition of them.
class NaturalOperator {
 public:
  enum class Kind { Id, ExtD, P, QOp, RuminD, Compose };

  static NaturalOperator identity(int n, int a);
  static NaturalOperator exterior_d(int n, int a);
  static NaturalOperator P(int n, int a, int i);
  static NaturalOperator Q(int n);
  static NaturalOperator rumin(int n);
  /// compose({A, B, C}) = A o B o C; throws std::invalid_argument on degree mismatch.
  static NaturalOperator compose(const std::vector<NaturalOperator>& ops);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int domain_degree() const { return a_; }
  int codomain_degree() const { return b_; }
  int order() const { return r_; }
  int index() const { return i_; }
  const std::vector<NaturalOperator>& factors() const { return factors_; }
  std::string name() const;

  /// Throws std::invalid_argument if omega's degree or dimension does not match the domain.
  DifferentialForm apply(const DifferentialForm& omega) const;

 private:
  NaturalOperator(Kind kind, int n, int a, int b, int r, int i = -1) : kind_(kind), n_(n), a_(a), b_(b), r_(r), i_(i) {}

  Kind kind_;
  int n_;
  int a_;
  int b_;
  int r_;
  int i_;
  std::vector<NaturalOperator> factors_;
};

/// Every P_{a,i}, Q, D and the identity/d in each degree for dimension n.
std::vector<NaturalOperator> registered_operators(int n);

/// Operators that commute with strict contactomorphisms only or not at all;
/// used as negative controls for the equivariance check.
enum class ControlOperator {
  WedgeDz,           // omega -> dz ^ omega
  ReebLie,           // omega -> L_R omega
  AlphaDalphaD,      // omega -> alpha ^ dalpha ^ d omega
};

std::string control_name(ControlOperator op);
DifferentialForm apply_control(ControlOperator op, const DifferentialForm& omega);

/// L_X(P omega) - P(L_X omega) for X = contact_field_from_h(h).
DifferentialForm equivariance_residual(const NaturalOperator& op, const Polynomial& h, const DifferentialForm& omega);
DifferentialForm equivariance_residual(ControlOperator op, const Polynomial& h, const DifferentialForm& omega);

}  // namespace contact
