#include "contact/natural_ops.hpp"

#include <algorithm>
#include <stdexcept>

#include "contact/calculus.hpp"

namespace contact {
namespace {

void require_degree(const DifferentialForm& omega, int degree, const char* what) {
  if (omega.degree() != degree) {
    throw std::invalid_argument(std::string(what) + ": expected a " + std::to_string(degree) + "-form, got degree " +
                                std::to_string(omega.degree()));
  }
}

}  // namespace

std::vector<int> admissible_indices(int a, int n) {
  std::vector<int> out;
  if (a < 2) return out;
  for (int i = a % 2; i <= std::min(a - 2, 2 * n - a); i += 2) out.push_back(i);
  return out;
}

DifferentialForm apply_P(int a, int i, const DifferentialForm& omega) {
  require_degree(omega, a, "apply_P");
  const int n = omega.n();
  const std::vector<int> allowed = admissible_indices(a, n);
  if (std::find(allowed.begin(), allowed.end(), i) == allowed.end()) {
    throw std::invalid_argument("apply_P: P_{" + std::to_string(a) + "," + std::to_string(i) +
                                "} is not defined for n=" + std::to_string(n));
  }
  const HorizontalForm pi = primitive_projection(HorizontalForm(restrict_to_Q(omega)), i);
  const ContactContext ctx(n);
  return wedge(lefschetz_L(pi, (a - i - 2) / 2).form(), ctx.alpha);
}

HorizontalForm rumin_xi(const DifferentialForm& omega) {
  const int n = omega.n();
  require_degree(omega, n, "rumin_xi");
  const LefschetzDecomposition dec = primitive_projections(HorizontalForm(restrict_to_Q(exterior_derivative(omega))));
  DifferentialForm xi(n, n - 1);
  for (const auto& [i, pi] : dec.components) xi -= lefschetz_L(pi, (n - 1 - i) / 2).form();
  return HorizontalForm(std::move(xi));
}

DifferentialForm apply_Q(const DifferentialForm& omega, RuminPath path) {
  const int n = omega.n();
  require_degree(omega, n, "apply_Q");
  if (path == RuminPath::Xi) {
    const ContactContext ctx(n);
    return omega + wedge(ctx.alpha, rumin_xi(omega).form());
  }
  const DifferentialForm domega = exterior_derivative(omega);
  DifferentialForm correction(n, n);
  for (int i : admissible_indices(n + 1, n)) correction += apply_P(n + 1, i, domega);
  return omega + sign_power(n) * correction;
}

DifferentialForm apply_rumin(const DifferentialForm& omega, RuminPath path) {
  const int n = omega.n();
  require_degree(omega, n, "apply_rumin");
  if (path == RuminPath::Xi) return exterior_derivative(apply_Q(omega, RuminPath::Xi));
  const DifferentialForm domega = exterior_derivative(omega);
  DifferentialForm correction(n, n + 1);
  for (int i : admissible_indices(n + 1, n)) correction += exterior_derivative(apply_P(n + 1, i, domega));
  return domega + sign_power(n) * correction;
}

NaturalOperator NaturalOperator::identity(int n, int a) { return {Kind::Id, n, a, a, 0}; }

NaturalOperator NaturalOperator::exterior_d(int n, int a) { return {Kind::ExtD, n, a, a + 1, 1}; }

NaturalOperator NaturalOperator::P(int n, int a, int i) {
  const std::vector<int> allowed = admissible_indices(a, n);
  if (std::find(allowed.begin(), allowed.end(), i) == allowed.end()) {
    throw std::invalid_argument("NaturalOperator::P: inadmissible (a, i)");
  }
  return {Kind::P, n, a, a - 1, 0, i};
}

NaturalOperator NaturalOperator::Q(int n) { return {Kind::QOp, n, n, n, 1}; }

NaturalOperator NaturalOperator::rumin(int n) { return {Kind::RuminD, n, n, n + 1, 2}; }

NaturalOperator NaturalOperator::compose(const std::vector<NaturalOperator>& ops) {
  if (ops.empty()) throw std::invalid_argument("NaturalOperator::compose: empty list");
  int order = 0;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (ops[k].n_ != ops.front().n_) throw std::invalid_argument("NaturalOperator::compose: dimension mismatch");
    if (k + 1 < ops.size() && ops[k].a_ != ops[k + 1].b_) {
      throw std::invalid_argument("NaturalOperator::compose: degree mismatch between " + ops[k].name() + " and " +
                                  ops[k + 1].name());
    }
    order += ops[k].r_;
  }
  NaturalOperator out(Kind::Compose, ops.front().n_, ops.back().a_, ops.front().b_, order);
  out.factors_ = ops;
  return out;
}

std::string NaturalOperator::name() const {
  switch (kind_) {
    case Kind::Id:
      return "id";
    case Kind::ExtD:
      return "d";
    case Kind::P:
      return "P_{" + std::to_string(a_) + "," + std::to_string(i_) + "}";
    case Kind::QOp:
      return "Q";
    case Kind::RuminD:
      return "D";
    case Kind::Compose: {
      std::string out;
      for (const auto& f : factors_) out += (out.empty() ? "" : " o ") + f.name();
      return out;
    }
  }
  return "?";
}

DifferentialForm NaturalOperator::apply(const DifferentialForm& omega) const {
  if (omega.n() != n_) throw std::invalid_argument("NaturalOperator::apply: dimension mismatch");
  require_degree(omega, a_, "NaturalOperator::apply");
  switch (kind_) {
    case Kind::Id:
      return omega;
    case Kind::ExtD:
      return exterior_derivative(omega);
    case Kind::P:
      return apply_P(a_, i_, omega);
    case Kind::QOp:
      return apply_Q(omega);
    case Kind::RuminD:
      return apply_rumin(omega);
    case Kind::Compose: {
      DifferentialForm current = omega;
      for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) current = it->apply(current);
      return current;
    }
  }
  throw std::logic_error("NaturalOperator::apply: unknown kind");
}

std::vector<NaturalOperator> registered_operators(int n) {
  std::vector<NaturalOperator> out;
  for (int a = 0; a <= 2 * n + 1; ++a) {
    out.push_back(NaturalOperator::identity(n, a));
    if (a <= 2 * n) out.push_back(NaturalOperator::exterior_d(n, a));
    for (int i : admissible_indices(a, n)) out.push_back(NaturalOperator::P(n, a, i));
  }
  out.push_back(NaturalOperator::Q(n));
  out.push_back(NaturalOperator::rumin(n));
  return out;
}

std::string control_name(ControlOperator op) {
  switch (op) {
    case ControlOperator::WedgeDz:
      return "wedge_dz";
    case ControlOperator::ReebLie:
      return "reeb_lie_derivative";
    case ControlOperator::AlphaDalphaD:
      return "alpha_dalpha_d";
  }
  return "?";
}

DifferentialForm apply_control(ControlOperator op, const DifferentialForm& omega) {
  const ContactContext ctx(omega.n());
  switch (op) {
    case ControlOperator::WedgeDz:
      return wedge(DifferentialForm::covector(omega.n(), Coordinate::z()), omega);
    case ControlOperator::ReebLie:
      return lie_derivative(ctx.reeb, omega);
    case ControlOperator::AlphaDalphaD:
      return wedge(wedge(ctx.alpha, ctx.dalpha), exterior_derivative(omega));
  }
  throw std::logic_error("apply_control: unknown operator");
}

DifferentialForm equivariance_residual(const NaturalOperator& op, const Polynomial& h, const DifferentialForm& omega) {
  const VectorField X = contact_field_from_h(h);
  return lie_derivative(X, op.apply(omega)) - op.apply(lie_derivative(X, omega));
}

DifferentialForm equivariance_residual(ControlOperator op, const Polynomial& h, const DifferentialForm& omega) {
  const VectorField X = contact_field_from_h(h);
  return lie_derivative(X, apply_control(op, omega)) - apply_control(op, lie_derivative(X, omega));
}

}  // namespace contact
