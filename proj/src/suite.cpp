#include "contact/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "contact/calculus.hpp"
#include "contact/form_io.hpp"
#include "contact/invariants.hpp"
#include "contact/linalg.hpp"
#include "contact/natural_ops.hpp"
#include "contact/random.hpp"

namespace contact {
namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t suite_seed(const SuiteConfig& config, Suite suite) {
  return splitmix(splitmix(config.seed) ^ (static_cast<std::uint64_t>(suite) << 32) ^ static_cast<std::uint64_t>(config.n));
}

class Tally {
 public:
  Tally(Suite suite, std::string name, int n) {
    result_.suite = suite_name(suite);
    result_.name = std::move(name);
    result_.n = n;
  }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures == 0) result_.detail = describe();
    ++result_.failures;
  }

  CheckResult done(std::string detail_if_ok = {}) {
    if (result_.failures == 0) result_.detail = std::move(detail_if_ok);
    return result_;
  }

 private:
  CheckResult result_;
};

std::string show(const DifferentialForm& omega) { return format_form(omega) + " (degree " + std::to_string(omega.degree()) + ")"; }

DifferentialForm alpha(int n) { return ContactContext(n).alpha; }

template <typename Derived>
int nonzeros(const Eigen::MatrixBase<Derived>& m) {
  int count = 0;
  for (Eigen::Index k = 0; k < m.size(); ++k) count += m(k).is_zero() ? 0 : 1;
  return count;
}

template <typename Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  return nonzeros(m) == 0;
}

// ---------------------------------------------------------------- ring

std::vector<CheckResult> ring_suite(const SuiteConfig& cfg, FormSampler& rng) {
  const int n = cfg.n;
  const int vars = coordinate_count(n);
  Tally assoc(Suite::Ring, "ring_associativity", n);
  Tally distrib(Suite::Ring, "ring_distributivity", n);
  Tally mixed(Suite::Ring, "partials_commute", n);
  Tally leibniz(Suite::Ring, "leibniz_rule", n);
  for (int s = 0; s < cfg.samples; ++s) {
    const Polynomial p = rng.polynomial(n, cfg.degree_bound);
    const Polynomial q = rng.polynomial(n, cfg.degree_bound);
    const Polynomial r = rng.polynomial(n, cfg.degree_bound);
    const auto describe = [&] { return "p = " + format_polynomial(p) + ", q = " + format_polynomial(q) + ", r = " + format_polynomial(r); };
    assoc.check((p * q) * r == p * (q * r) && (p + q) + r == p + (q + r), describe);
    distrib.check(p * (q + r) == p * q + p * r, describe);
    for (int u = 0; u < vars; ++u) {
      for (int v = u + 1; v < vars; ++v) {
        mixed.check(partial(partial(p, u), v) == partial(partial(p, v), u), describe);
      }
      leibniz.check(partial(p * q, u) == partial(p, u) * q + p * partial(q, u), describe);
    }
  }
  return {assoc.done(), distrib.done(), mixed.done(), leibniz.done()};
}

// ---------------------------------------------------------------- exactness

std::vector<CheckResult> exactness_suite(const SuiteConfig& cfg, FormSampler& rng) {
  const int n = cfg.n;
  const int top = 2 * n + 1;
  const int deg = cfg.degree_bound;
  Tally dd(Suite::Exactness, "d_squared_zero", n);
  Tally assoc(Suite::Exactness, "wedge_associative", n);
  Tally graded(Suite::Exactness, "wedge_graded_commutative", n);
  Tally anti(Suite::Exactness, "interior_antiderivation", n);
  Tally morph(Suite::Exactness, "restriction_is_morphism", n);
  Tally frame(Suite::Exactness, "restriction_matches_frame_evaluation", n);
  for (int s = 0; s < cfg.samples; ++s) {
    const DifferentialForm omega = rng.form(n, rng.below(top - 1), deg);
    dd.check(exterior_derivative(exterior_derivative(omega)).is_zero(), [&] { return "omega = " + show(omega); });

    const DifferentialForm u = rng.form(n, rng.below(3), deg);
    const DifferentialForm v = rng.form(n, rng.below(3), deg);
    const DifferentialForm w = rng.form(n, rng.below(3), deg);
    const auto three = [&] { return "u = " + show(u) + ", v = " + show(v) + ", w = " + show(w); };
    assoc.check(wedge(wedge(u, v), w) == wedge(u, wedge(v, w)), three);
    graded.check(wedge(u, v) == sign_power(u.degree() * v.degree()) * wedge(v, u), three);

    const VectorField X = rng.field(n, std::min(deg, 2));
    const DifferentialForm lhs = interior_product(X, wedge(u, v));
    const DifferentialForm rhs = wedge(interior_product(X, u), v) + sign_power(u.degree()) * wedge(u, interior_product(X, v));
    anti.check(lhs == rhs, [&] { return three() + ", X = " + format_vector_field(X); });

    morph.check(restrict_to_Q(wedge(u, v)) == wedge(restrict_to_Q(u), restrict_to_Q(v)), three);

    // omega|_Q on the frame X_i = d/dx_i, Y_i = d/dy_i - x_i d/dz at a random point
    const int a = 1 + rng.below(2 * n);
    const DifferentialForm eta = rng.form(n, a, deg);
    std::vector<Rational> point;
    for (int k = 0; k < top; ++k) point.push_back(rng.coefficient());
    std::vector<int> slots(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < 2 * n; ++k) slots[static_cast<std::size_t>(k)] = k;
    for (int k = 2 * n - 1; k > 0; --k) std::swap(slots[static_cast<std::size_t>(k)], slots[static_cast<std::size_t>(rng.below(k + 1))]);
    std::vector<RationalVector> vectors;
    for (int k = 0; k < a; ++k) {
      const int slot = slots[static_cast<std::size_t>(k)];
      RationalVector vec = RationalVector::Zero(top);
      vec(slot) = Rational(1);
      if (slot >= n) vec(2 * n) = -point[static_cast<std::size_t>(slot - n)];
      vectors.push_back(std::move(vec));
    }
    frame.check(evaluate_on_vectors(restrict_to_Q(eta), vectors, point) == evaluate_on_vectors(eta, vectors, point),
                [&] { return "omega = " + show(eta); });
  }
  return {dd.done(), assoc.done(), graded.done(), anti.done(), morph.done(), frame.done()};
}

// ---------------------------------------------------------------- calculus

std::vector<CheckResult> calculus_suite(const SuiteConfig& cfg, FormSampler& rng) {
  const int n = cfg.n;
  const int top = 2 * n + 1;
  const int deg = cfg.degree_bound;
  const ContactContext ctx(n);
  Tally context(Suite::Calculus, "contact_context", n);
  Tally commute(Suite::Calculus, "lie_derivative_commutes_with_d", n);
  Tally field(Suite::Calculus, "contact_field_equations", n);
  Tally scale(Suite::Calculus, "lie_derivative_of_alpha", n);
  Tally bracket(Suite::Calculus, "lie_bracket_homomorphism", n);

  DifferentialForm volume = ctx.alpha;
  for (int k = 0; k < n; ++k) volume = wedge(volume, ctx.dalpha);
  context.check(exterior_derivative(ctx.alpha) == ctx.dalpha, [] { return std::string("d(alpha) != dalpha"); });
  context.check(!volume.is_zero(), [] { return std::string("alpha ^ dalpha^n = 0"); });
  context.check(interior_product(ctx.reeb, ctx.alpha) == DifferentialForm::constant(n, Rational(1)),
                [] { return std::string("i_R alpha != 1"); });
  context.check(interior_product(ctx.reeb, ctx.dalpha).is_zero(), [] { return std::string("i_R dalpha != 0"); });

  for (int s = 0; s < cfg.samples; ++s) {
    const VectorField X = rng.field(n, std::min(deg, 2));
    const DifferentialForm omega = rng.form(n, rng.below(top), deg);
    commute.check(lie_derivative(X, exterior_derivative(omega)) == exterior_derivative(lie_derivative(X, omega)),
                  [&] { return "X = " + format_vector_field(X) + ", omega = " + show(omega); });

    const Polynomial h = rng.polynomial(n, deg);
    const VectorField Xh = contact_field_from_h(h);
    const DifferentialForm dh = exterior_derivative(DifferentialForm::function(h));
    const Polynomial hz = partial(h, Coordinate::z());
    const auto show_h = [&] { return "h = " + format_polynomial(h); };
    field.check(interior_product(Xh, ctx.alpha) == DifferentialForm::function(h) &&
                    (interior_product(Xh, ctx.dalpha) + dh - hz * ctx.alpha).is_zero(),
                show_h);
    scale.check(lie_derivative(Xh, ctx.alpha) == hz * ctx.alpha, show_h);

    const VectorField Y = rng.field(n, 1);
    const DifferentialForm eta = rng.form(n, rng.below(top), std::min(deg, 2));
    const DifferentialForm lhs = lie_derivative(lie_bracket(X, Y), eta);
    const DifferentialForm rhs = lie_derivative(X, lie_derivative(Y, eta)) - lie_derivative(Y, lie_derivative(X, eta));
    bracket.check(lhs == rhs, [&] {
      return "X = " + format_vector_field(X) + ", Y = " + format_vector_field(Y) + ", omega = " + show(eta);
    });
  }
  return {context.done(), commute.done(), field.done(), scale.done(), bracket.done()};
}

// ---------------------------------------------------------------- sl2

bool same_decomposition(const LefschetzDecomposition& lhs, const LefschetzDecomposition& rhs) {
  if (lhs.components.size() != rhs.components.size()) return false;
  for (const auto& [i, pi] : lhs.components) {
    auto it = rhs.components.find(i);
    if (it == rhs.components.end() || !(it->second.form() == pi.form())) return false;
  }
  return true;
}

std::vector<CheckResult> sl2_suite(const SuiteConfig& cfg, FormSampler& rng) {
  const int n = cfg.n;
  const int deg = cfg.degree_bound;
  Tally commutator(Suite::Sl2, "commutator_L_Lambda", n);
  Tally ladder(Suite::Sl2, "lambda_on_L_powers", n);
  Tally killed(Suite::Sl2, "primitive_killed_by_L_power", n);
  Tally oracle(Suite::Sl2, "projections_match_linear_solve", n);
  Tally rebuild(Suite::Sl2, "reconstruction_and_primitivity", n);
  Tally constants(Suite::Sl2, "sl2_constant_identities", n);

  for (int a = 0; a <= 2 * n; ++a) {
    for (Word w : words_of_degree(2 * n, a)) {
      const HorizontalForm phi(DifferentialForm::term(Polynomial::constant(n, Rational(1)), w));
      const DifferentialForm lhs = lefschetz_L(lefschetz_dual(phi)).form() - lefschetz_dual(lefschetz_L(phi)).form();
      commutator.check(lhs == Rational(a - n) * phi.form(), [&] { return "phi = " + show(phi.form()); });
      oracle.check(same_decomposition(primitive_projections(phi), decompose_by_linear_solve(phi)),
                   [&] { return "phi = " + show(phi.form()); });

      // Lambda^s = sum_i c(s,i) L^{(a-i)/2-s} Pi_i  and  Lambda^s = sum_j c''(s,j) L^{j-s} Lambda^j
      const LefschetzDecomposition dec = primitive_projections(phi);
      for (int s = 0; s <= a / 2; ++s) {
        DifferentialForm via_projections(n, a - 2 * s);
        for (int i : decomposition_indices(a, n)) {
          if (i > a - 2 * s) continue;
          via_projections += sl2_constant(n, a, Sl2Family::LambdaPower, s, i) *
                             lefschetz_L(dec.component(i), (a - i) / 2 - s).form();
        }
        DifferentialForm via_lambda(n, a - 2 * s);
        for (int j = std::max(s, a - n); j <= a / 2; ++j) {
          via_lambda += sl2_constant(n, a, Sl2Family::LambdaInLPowers, s, j) *
                        lefschetz_L(lefschetz_dual(phi, j), j - s).form();
        }
        const DifferentialForm expected = lefschetz_dual(phi, s).form();
        constants.check(via_projections == expected && via_lambda == expected,
                        [&] { return "phi = " + show(phi.form()) + ", s = " + std::to_string(s); });
      }
    }
  }

  for (int s = 0; s < cfg.samples; ++s) {
    const int i = rng.below(n + 1);
    const HorizontalForm pi = primitive_projection(rng.horizontal(n, i, deg), i);
    for (int j = 1; j <= n - i + 1; ++j) {
      const DifferentialForm lhs = lefschetz_dual(lefschetz_L(pi, j)).form();
      const DifferentialForm rhs = lambda_l_coefficient(n, i, j) * lefschetz_L(pi, j - 1).form();
      ladder.check(lhs == rhs, [&] { return "pi = " + show(pi.form()) + ", j = " + std::to_string(j); });
    }
    killed.check(lefschetz_L(pi, n - i + 1).is_zero() && is_primitive(pi), [&] { return "pi = " + show(pi.form()); });

    const HorizontalForm phi = rng.horizontal(n, rng.below(2 * n + 1), deg);
    const LefschetzDecomposition dec = primitive_projections(phi);
    bool ok = dec.reconstruct().form() == phi.form();
    for (const auto& [k, component] : dec.components) ok = ok && lefschetz_dual(component).is_zero();
    rebuild.check(ok, [&] { return "phi = " + show(phi.form()); });
    oracle.check(same_decomposition(dec, decompose_by_linear_solve(phi)), [&] { return "phi = " + show(phi.form()); });
  }
  return {commutator.done(), ladder.done(), killed.done(), oracle.done(), rebuild.done(), constants.done()};
}

// ---------------------------------------------------------------- worked values

std::vector<CheckResult> worked_suite(const SuiteConfig& cfg) {
  const int n = cfg.n;
  std::vector<CheckResult> out;
  struct Case {
    std::string name;
    std::function<DifferentialForm()> compute;
    std::string expected;
  };
  std::vector<Case> cases;
  const auto both_Q = [](const std::string& text, int dim) {
    return [text, dim] {
      const DifferentialForm omega = parse_form(text, dim);
      const DifferentialForm q = apply_Q(omega, RuminPath::Xi);
      return q == apply_Q(omega, RuminPath::Composition) ? q : Rational(99) * DifferentialForm::covector(dim, Coordinate::z());
    };
  };
  const auto both_D = [](const std::string& text, int dim) {
    return [text, dim] {
      const DifferentialForm omega = parse_form(text, dim);
      const DifferentialForm d = apply_rumin(omega, RuminPath::Xi);
      return d == apply_rumin(omega, RuminPath::Composition) ? d : Rational(99) * DifferentialForm::covector(dim, Coordinate::z());
    };
  };
  if (n == 1) {
    cases.push_back({"Q(x1 dy1) = -dz", both_Q("x1 dy1", 1), "-dz"});
    cases.push_back({"Q(alpha) = 0", both_Q("dz + x1 dy1", 1), "0"});
    cases.push_back({"D(z dx1) = 2 alpha^dx1", both_D("z dx1", 1), "2 dz^dx1 + 2 x1 dy1^dx1"});
    cases.push_back({"D(x1 dy1) = 0", both_D("x1 dy1", 1), "0"});
    cases.push_back({"P_{2,0}(dx1^dy1) = alpha", [] { return apply_P(2, 0, parse_form("dx1^dy1", 1)); }, "dz + x1 dy1"});
  } else if (n == 2) {
    cases.push_back({"P_{3,1}(dx1^dy1^dx2) = dx2^alpha",
                     [] { return apply_P(3, 1, parse_form("dx1^dy1^dx2", 2)); }, "dx2^dz + x1 dx2^dy1 + x2 dx2^dy2"});
    // same value through the linear-solve decomposition
    cases.push_back({"P_{3,1} via linear-solve pi_1",
                     [] {
                       const HorizontalForm phi(parse_form("dx1^dy1^dx2", 2));
                       return wedge(decompose_by_linear_solve(phi).component(1).form(), alpha(2));
                     },
                     "dx2^dz + x1 dx2^dy1 + x2 dx2^dy2"});
  }
  for (const auto& c : cases) {
    Tally t(Suite::Worked, c.name, n);
    const DifferentialForm got = c.compute();
    const DifferentialForm want = parse_form(c.expected, n);
    t.check(got == want, [&] { return "got " + format_form(got) + ", expected " + format_form(want); });
    out.push_back(t.done("= " + format_form(got)));
  }
  return out;
}

// ---------------------------------------------------------------- composition identities

std::vector<CheckResult> composition_suite(const SuiteConfig& cfg, FormSampler& rng) {
  const int n = cfg.n;
  const int deg = cfg.degree_bound;
  Tally pp(Suite::Composition, "P_after_P_vanishes", n);
  Tally pdp_same(Suite::Composition, "P_d_P_same_index", n);
  Tally pdp_other(Suite::Composition, "P_d_P_other_index", n);
  Tally kills_alpha(Suite::Composition, "P_kills_alpha_multiples", n);
  Tally q_paths(Suite::Composition, "Q_paths_agree", n);
  Tally d_paths(Suite::Composition, "D_paths_agree", n);
  Tally horizontal(Suite::Composition, "D_restricts_to_zero", n);
  Tally closed(Suite::Composition, "D_closed_and_D_of_exact", n);

  const DifferentialForm a0 = alpha(n);
  for (int s = 0; s < cfg.samples; ++s) {
    for (int a = 2; a <= 2 * n + 1; ++a) {
      const std::vector<int> outer = admissible_indices(a, n);
      if (outer.empty()) continue;
      const DifferentialForm omega = rng.form(n, a, deg);
      const auto show_omega = [&] { return "omega = " + show(omega); };
      for (int i : outer) {
        const DifferentialForm p = apply_P(a, i, omega);
        for (int j : admissible_indices(a - 1, n)) pp.check(apply_P(a - 1, j, p).is_zero(), show_omega);
        const DifferentialForm dp = exterior_derivative(p);
        for (int j : outer) {
          const DifferentialForm pdp = apply_P(a, j, dp);
          if (i == j) {
            pdp_same.check(pdp == sign_power(a) * p, show_omega);
          } else {
            pdp_other.check(pdp.is_zero(), show_omega);
          }
        }
        const DifferentialForm eta = rng.form(n, a - 1, deg);
        kills_alpha.check(apply_P(a, i, wedge(a0, eta)).is_zero() && apply_P(a, i, omega + wedge(a0, eta)) == p,
                          [&] { return "eta = " + show(eta); });
      }
    }
    const DifferentialForm omega = rng.form(n, n, deg);
    const auto show_omega = [&] { return "omega = " + show(omega); };
    const DifferentialForm q = apply_Q(omega, RuminPath::Xi);
    q_paths.check(q == apply_Q(omega, RuminPath::Composition), show_omega);
    const DifferentialForm d = apply_rumin(omega, RuminPath::Xi);
    d_paths.check(d == apply_rumin(omega, RuminPath::Composition) && d == exterior_derivative(q), show_omega);
    horizontal.check(restrict_to_Q(d).is_zero() && restrict_to_Q(exterior_derivative(q)).is_zero(), show_omega);
    const DifferentialForm eta = rng.form(n, n - 1, deg);
    closed.check(exterior_derivative(d).is_zero() && apply_rumin(exterior_derivative(eta)).is_zero(),
                 [&] { return show_omega() + ", eta = " + show(eta); });
  }
  // rows with no applicable degrees are dropped: P o P needs two consecutive
  // admissible degrees (n >= 2), P_j o d o P_i with i != j two indices in one degree (n >= 3)
  std::vector<CheckResult> out;
  for (Tally* t : {&pp, &pdp_same, &pdp_other, &kills_alpha, &q_paths, &d_paths, &horizontal, &closed}) {
    CheckResult row = t->done();
    if (row.cases > 0) out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------- equivariance

bool control_applies(ControlOperator op, int n, int degree) {
  switch (op) {
    case ControlOperator::WedgeDz:
      return degree + 1 <= 2 * n + 1;
    case ControlOperator::ReebLie:
      return true;
    case ControlOperator::AlphaDalphaD:
      return degree + 4 <= 2 * n + 1;
  }
  return false;
}

std::vector<CheckResult> equivariance_suite(const SuiteConfig& cfg, FormSampler& rng) {
  const int n = cfg.n;
  const int deg = cfg.degree_bound;
  std::vector<CheckResult> out;
  for (const NaturalOperator& op : registered_operators(n)) {
    Tally t(Suite::Equivariance, "natural: " + op.name() + " on " + std::to_string(op.domain_degree()) + "-forms", n);
    for (int s = 0; s < cfg.samples; ++s) {
      const Polynomial h = rng.polynomial(n, deg);
      const DifferentialForm omega = rng.form(n, op.domain_degree(), deg);
      t.check(equivariance_residual(op, h, omega).is_zero(),
              [&] { return "h = " + format_polynomial(h) + ", omega = " + show(omega); });
    }
    out.push_back(t.done());
  }

  Tally detected(Suite::Equivariance, "negative_controls_detected", n);
  std::vector<CheckResult> controls;
  for (ControlOperator op : {ControlOperator::WedgeDz, ControlOperator::ReebLie, ControlOperator::AlphaDalphaD}) {
    std::vector<int> degrees;
    for (int a = 0; a <= 2 * n + 1; ++a) {
      if (control_applies(op, n, a)) degrees.push_back(a);
    }
    if (degrees.empty()) continue;  // e.g. alpha ^ dalpha ^ d vanishes identically for n = 1
    CheckResult row;
    row.suite = suite_name(Suite::Equivariance);
    row.name = "control: " + control_name(op);
    row.n = n;
    row.expected_failure = true;
    for (int s = 0; s < cfg.samples; ++s) {
      const Polynomial h = rng.polynomial(n, deg);
      const DifferentialForm omega = rng.form(n, degrees[static_cast<std::size_t>(rng.below(static_cast<int>(degrees.size())))], deg);
      ++row.cases;
      if (!equivariance_residual(op, h, omega).is_zero()) {
        if (row.failures == 0) row.detail = "nonzero residual at h = " + format_polynomial(h) + ", omega = " + show(omega);
        ++row.failures;
      }
    }
    detected.check(row.failures > 0, [&] { return control_name(op) + " never produced a nonzero residual"; });
    controls.push_back(std::move(row));
  }
  out.push_back(detected.done());
  if (cfg.negative_controls) out.insert(out.end(), controls.begin(), controls.end());
  return out;
}

// ---------------------------------------------------------------- symbol classification

std::vector<CheckResult> fft_suite(const SuiteConfig& cfg) {
  const int n = cfg.n;
  Tally match(Suite::Fft, "sp_solver_matches_spanning_rank", n);
  Tally vanish(Suite::Fft, "odd_parity_or_cubic_vanishes", n);
  Tally intertwine(Suite::Fft, "spanning_maps_are_intertwiners", n);
  for (int a = 0; a <= 2 * n; ++a) {
    for (int b = 0; b <= 2 * n; ++b) {
      const ClassifyReport report = classify(n, a, b, 3, Algebra::SpOnly);
      for (const ClassifyRow& row : report.rows) {
        const auto cell = [&] {
          return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " r=" + std::to_string(row.r) +
                 ": solver " + std::to_string(row.solver_dim) + ", spanning rank " + std::to_string(row.spanning_rank);
        };
        match.check(row.pass, cell);
        if (row.r == 3 || (row.r + a + b) % 2 != 0) vanish.check(row.solver_dim == 0, cell);
        if (row.r <= 2) {
          for (const SymbolMap& m : contraction_spanning_set(n, a, row.r, b)) {
            intertwine.check(is_intertwiner(m, Algebra::SpOnly), cell);
          }
        }
      }
    }
  }
  return {match.done(), vanish.done(), intertwine.done()};
}

std::vector<CheckResult> classification_suite(const SuiteConfig& cfg) {
  const int n = cfg.n;
  const int top = 2 * n + 1;
  Tally match(Suite::Classification, "full_solver_matches_symbol_rank", n);
  Tally trivial(Suite::Classification, "nonadjacent_degrees_vanish", n);
  Tally horizontal(Suite::Classification, "intertwiners_determined_on_horizontal_part", n);
  Tally origin(Suite::Classification, "symbol_of_P_matches_apply_P_at_origin", n);
  Tally sanity(Suite::Classification, "generator_sanity", n);
  std::map<std::tuple<int, int, int>, int> dims;

  for (int a = 0; a <= top; ++a) {
    for (int b = 0; b <= top; ++b) {
      const ClassifyReport report = classify(n, a, b, 3, Algebra::Full);
      for (const ClassifyRow& row : report.rows) {
        dims[{a, b, row.r}] = row.solver_dim;
        const auto cell = [&] {
          return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " r=" + std::to_string(row.r) +
                 ": solver " + std::to_string(row.solver_dim) + ", symbol rank " + std::to_string(row.spanning_rank);
        };
        match.check(row.pass, cell);
        if (std::abs(a - b) > 1) trivial.check(row.solver_dim == 0, cell);
        if (a < 2 * n && row.solver_dim > 0) {
          const TensorSpaceBasis domain(n, TensorSpaceBasis::Space::Ambient, a, row.r);
          const IntertwinerSolution sol = solve_intertwiners(n, a, row.r, b, Algebra::Full);
          std::vector<int> flat;
          for (int k = 0; k < domain.size(); ++k) {
            const auto& e = domain.element(k);
            const bool has_dz = e.word.contains(2 * n) || std::find(e.sym.begin(), e.sym.end(), 2 * n) != e.sym.end();
            if (!has_dz) flat.push_back(k);
          }
          std::vector<RationalMatrix> restricted;
          for (const SymbolMap& m : sol.basis) {
            RationalMatrix part(m.matrix.rows(), static_cast<Eigen::Index>(flat.size()));
            for (std::size_t k = 0; k < flat.size(); ++k) part.col(static_cast<Eigen::Index>(k)) = m.matrix.col(flat[k]);
            restricted.push_back(std::move(part));
          }
          horizontal.check(span_rank(restricted) == sol.dimension, cell);
        }
      }
    }
  }

  const std::vector<Rational> origin_point(static_cast<std::size_t>(top), Rational(0));
  for (int a = 2; a <= top; ++a) {
    for (int i : admissible_indices(a, n)) {
      const SymbolMap sym = symbol_of(NaturalOperator::P(n, a, i));
      const TensorSpaceBasis domain(n, TensorSpaceBasis::Space::Ambient, a, 0);
      const TensorSpaceBasis codomain(n, TensorSpaceBasis::Space::Ambient, a - 1, 0);
      for (int k = 0; k < domain.size(); ++k) {
        const DifferentialForm phi = DifferentialForm::term(Polynomial::constant(n, Rational(1)), domain.element(k).word);
        const DifferentialForm at_origin = evaluate_coefficients(apply_P(a, i, phi), origin_point);
        RationalVector column = RationalVector::Zero(codomain.size());
        for (const auto& [w, c] : at_origin.terms()) column(codomain.index_of(w, {})) = c.constant_term();
        origin.check(column == sym.matrix.col(k), [&] { return "P_{" + std::to_string(a) + "," + std::to_string(i) + "} on " + show(phi); });
      }
    }
  }

  // sp generators fix Omega_0 and alpha_0; scaling has weights -1 on dx, dy and -2 on dz;
  // E_y(1) sends dx1 to dz and E_x(1) sends dy1 to -dz.
  const TensorSpaceBasis one(n, TensorSpaceBasis::Space::Ambient, 1, 0);
  const TensorSpaceBasis two(n, TensorSpaceBasis::Space::Ambient, 2, 0);
  RationalVector omega0 = RationalVector::Zero(two.size());
  for (int k = 0; k < n; ++k) omega0(two.index_of(Word(std::uint32_t{1} << k | std::uint32_t{1} << (n + k)), {})) = Rational(1);
  RationalVector alpha0 = RationalVector::Zero(one.size());
  alpha0(one.index_of(Word::single(2 * n), {})) = Rational(1);
  for (const LieGenerator& g : isotropy_generators(n, Algebra::Full)) {
    const RationalMatrix rho1 = induced_action(g, one);
    const RationalMatrix rho2 = induced_action(g, two);
    const auto label = [&] { return g.label(); };
    switch (g.block) {
      case LieGenerator::Block::ASym:
      case LieGenerator::Block::BGeneral:
      case LieGenerator::Block::CSym:
        sanity.check(all_zero(rho2 * omega0) && all_zero(rho1 * alpha0), label);
        break;
      case LieGenerator::Block::Scaling: {
        RationalMatrix expected = RationalMatrix::Zero(one.size(), one.size());
        for (int k = 0; k < 2 * n; ++k) expected(k, k) = Rational(-1);
        expected(2 * n, 2 * n) = Rational(-2);
        sanity.check(rho1 == expected, label);
        break;
      }
      case LieGenerator::Block::Ex:
        sanity.check(rho1(2 * n, n + g.i - 1) == Rational(-1) && nonzeros(rho1.col(n + g.i - 1)) == 1 &&
                         all_zero(rho1 * alpha0),
                     label);
        break;
      case LieGenerator::Block::Ey:
        sanity.check(rho1(2 * n, g.i - 1) == Rational(1) && nonzeros(rho1.col(g.i - 1)) == 1 && all_zero(rho1 * alpha0),
                     label);
        break;
    }
  }

  std::vector<CheckResult> out = {match.done(), trivial.done(), horizontal.done(), origin.done(), sanity.done()};
  struct Spot {
    int n, a, b, r, dim;
  };
  const Spot spots[] = {{1, 1, 2, 1, 1}, {1, 1, 2, 2, 1}, {2, 2, 1, 0, 1}, {2, 3, 4, 1, 1}, {2, 3, 4, 2, 1}};
  for (const Spot& s : spots) {
    if (s.n != n) continue;
    Tally t(Suite::Classification,
            "spot a=" + std::to_string(s.a) + " b=" + std::to_string(s.b) + " r=" + std::to_string(s.r) + " dim " + std::to_string(s.dim), n);
    const int got = dims[{s.a, s.b, s.r}];
    t.check(got == s.dim, [&] { return "solver dimension " + std::to_string(got); });
    out.push_back(t.done("solver dimension " + std::to_string(got)));
  }
  return out;
}

}  // namespace

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::Ring:
      return "ring";
    case Suite::Exactness:
      return "exactness";
    case Suite::Calculus:
      return "calculus";
    case Suite::Sl2:
      return "sl2";
    case Suite::Worked:
      return "worked";
    case Suite::Composition:
      return "composition";
    case Suite::Equivariance:
      return "equivariance";
    case Suite::Fft:
      return "fft";
    case Suite::Classification:
      return "classification";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : all_suites()) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = {Suite::Ring,        Suite::Exactness,    Suite::Calculus,
                                            Suite::Sl2,         Suite::Worked,       Suite::Composition,
                                            Suite::Equivariance, Suite::Fft,         Suite::Classification};
  return suites;
}

std::vector<CheckResult> run_suite(Suite suite, const SuiteConfig& config) {
  if (config.n < 1 || coordinate_count(config.n) > kMaxCoordinates) throw std::invalid_argument("run_suite: unsupported n");
  if (config.samples < 1) throw std::invalid_argument("run_suite: samples must be positive");
  FormSampler rng(suite_seed(config, suite));
  switch (suite) {
    case Suite::Ring:
      return ring_suite(config, rng);
    case Suite::Exactness:
      return exactness_suite(config, rng);
    case Suite::Calculus:
      return calculus_suite(config, rng);
    case Suite::Sl2:
      return sl2_suite(config, rng);
    case Suite::Worked:
      return worked_suite(config);
    case Suite::Composition:
      return composition_suite(config, rng);
    case Suite::Equivariance:
      return equivariance_suite(config, rng);
    case Suite::Fft:
      return fft_suite(config);
    case Suite::Classification:
      return classification_suite(config);
  }
  throw std::invalid_argument("run_suite: unknown suite");
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria = {
      {1, "exactness", {Suite::Ring, Suite::Exactness, Suite::Calculus}},
      {2, "sl2", {Suite::Sl2}},
      {3, "worked values", {Suite::Worked}},
      {4, "composition identities", {Suite::Composition}},
      {5, "equivariance", {Suite::Equivariance}},
      {6, "first fundamental theorem", {Suite::Fft}},
      {7, "classification", {Suite::Classification}},
  };
  return criteria;
}

std::string reproduce_command(const CheckResult& result, const SuiteConfig& config) {
  std::ostringstream out;
  out << "contact check --n " << result.n << " --seed " << config.seed << " --samples " << config.samples << " --degree "
      << config.degree_bound << " --only " << result.suite;
  if (result.expected_failure) out << " --negative-controls";
  return out.str();
}

LefschetzDecomposition decompose_by_linear_solve(const HorizontalForm& phi) {
  const int n = phi.n();
  const int a = phi.degree();
  if (a > 2 * n) throw std::invalid_argument("decompose_by_linear_solve: degree exceeds 2n");
  const std::vector<Word> target_words = words_of_degree(2 * n, a);
  std::map<Word, int> row_of;
  for (std::size_t k = 0; k < target_words.size(); ++k) row_of[target_words[k]] = static_cast<int>(k);

  // primitive basis in each degree i: nullspace of Lambda on constant i-forms
  struct Column {
    int i;
    DifferentialForm primitive;
  };
  std::vector<Column> columns;
  for (int i : decomposition_indices(a, n)) {
    const std::vector<Word> words = words_of_degree(2 * n, i);
    const std::vector<Word> lower = words_of_degree(2 * n, i - 2);
    std::map<Word, int> lower_row;
    for (std::size_t k = 0; k < lower.size(); ++k) lower_row[lower[k]] = static_cast<int>(k);
    RationalMatrix lambda = RationalMatrix::Zero(static_cast<Eigen::Index>(lower.size()), static_cast<Eigen::Index>(words.size()));
    for (std::size_t k = 0; k < words.size(); ++k) {
      const HorizontalForm image = lefschetz_dual(HorizontalForm(DifferentialForm::term(Polynomial::constant(n, Rational(1)), words[k])));
      for (const auto& [w, c] : image.form().terms()) lambda(lower_row.at(w), static_cast<Eigen::Index>(k)) = c.constant_term();
    }
    const RationalMatrix kernel = lower.empty() ? RationalMatrix::Identity(static_cast<Eigen::Index>(words.size()), static_cast<Eigen::Index>(words.size()))
                                                : exact_nullspace(lambda);
    for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
      DifferentialForm primitive(n, i);
      for (std::size_t k = 0; k < words.size(); ++k) {
        const Rational& v = kernel(static_cast<Eigen::Index>(k), c);
        if (!v.is_zero()) primitive.add_term(words[k], Polynomial::constant(n, v));
      }
      columns.push_back({i, std::move(primitive)});
    }
  }

  // system M c = phi_m per monomial m, solved through the nullspace of [M | phi_m]
  const Eigen::Index rows = static_cast<Eigen::Index>(target_words.size());
  const Eigen::Index unknowns = static_cast<Eigen::Index>(columns.size());
  RationalMatrix system = RationalMatrix::Zero(rows, unknowns + 1);
  for (Eigen::Index c = 0; c < unknowns; ++c) {
    const Column& col = columns[static_cast<std::size_t>(c)];
    const HorizontalForm lifted = lefschetz_L(HorizontalForm(col.primitive), (a - col.i) / 2);
    for (const auto& [w, coeff] : lifted.form().terms()) system(row_of.at(w), c) = coeff.constant_term();
  }
  std::map<Monomial, RationalVector> by_monomial;
  for (const auto& [w, coeff] : phi.form().terms()) {
    for (const auto& [m, v] : coeff.terms()) {
      auto it = by_monomial.find(m);
      if (it == by_monomial.end()) it = by_monomial.emplace(m, RationalVector::Zero(rows)).first;
      it->second(row_of.at(w)) = v;
    }
  }

  LefschetzDecomposition out;
  out.n = n;
  out.degree = a;
  for (int i : decomposition_indices(a, n)) out.components.emplace(i, HorizontalForm::zero(n, i));
  std::map<int, DifferentialForm> sums;
  for (int i : decomposition_indices(a, n)) sums.emplace(i, DifferentialForm(n, i));
  for (const auto& [m, rhs] : by_monomial) {
    system.col(unknowns) = rhs;
    const RationalMatrix kernel = exact_nullspace(system);
    Eigen::Index pick = -1;
    for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
      if (!kernel(unknowns, c).is_zero()) pick = c;
    }
    if (pick < 0 || kernel.cols() != 1) throw std::logic_error("decompose_by_linear_solve: system is not uniquely solvable");
    const Rational scale = -kernel(unknowns, pick);
    const Polynomial mono = Polynomial::monomial(n, m);
    for (Eigen::Index c = 0; c < unknowns; ++c) {
      const Rational coeff = kernel(c, pick) / scale;
      if (coeff.is_zero()) continue;
      DifferentialForm term = columns[static_cast<std::size_t>(c)].primitive;
      term *= mono * Polynomial::constant(n, coeff);
      sums.at(columns[static_cast<std::size_t>(c)].i) += term;
    }
  }
  for (auto& [i, form] : sums) out.components.at(i) = HorizontalForm(std::move(form));
  return out;
}

}  // namespace contact
