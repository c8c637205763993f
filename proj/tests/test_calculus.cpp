#include <gtest/gtest.h>

#include "contact/calculus.hpp"
#include "contact/natural_ops.hpp"
#include "contact/random.hpp"
#include "helpers.hpp"

using namespace contact;
using contact::testing::F;
using contact::testing::P;

TEST(ExteriorDerivative, Examples) {
  EXPECT_EQ(exterior_derivative(F("z dx1", 1)), F("dz^dx1", 1));
  for (int n = 1; n <= 3; ++n) {
    const ContactContext ctx(n);
    EXPECT_EQ(exterior_derivative(ctx.alpha), ctx.dalpha);
  }
  EXPECT_TRUE(exterior_derivative(exterior_derivative(F("x1*y1 dz", 1))).is_zero());
  EXPECT_EQ(exterior_derivative(F("x1^2*y1", 1)), F("2 x1*y1 dx1 + x1^2 dy1", 1));
}

TEST(ContactContext, Invariants) {
  for (int n = 1; n <= 3; ++n) {
    const ContactContext ctx(n);
    DifferentialForm volume = ctx.alpha;
    for (int k = 0; k < n; ++k) volume = wedge(volume, ctx.dalpha);
    EXPECT_FALSE(volume.is_zero());
    EXPECT_EQ(interior_product(ctx.reeb, ctx.alpha), DifferentialForm::constant(n, Rational(1)));
    EXPECT_TRUE(interior_product(ctx.reeb, ctx.dalpha).is_zero());
  }
}

TEST(ContactField, Examples) {
  EXPECT_EQ(contact_field_from_h(P("1", 1)).components(), VectorField::coordinate(1, Coordinate::z()).components());
  EXPECT_EQ(contact_field_from_h(P("x1", 1)).components(), VectorField::coordinate(1, Coordinate::y(1)).components());
  const VectorField X = contact_field_from_h(P("z", 2));
  const std::vector<Polynomial> expected = {P("x1", 2), P("x2", 2), P("0", 2), P("0", 2), P("z", 2)};
  EXPECT_EQ(X.components(), expected);
  EXPECT_EQ(interior_product(X, ContactContext(2).alpha), DifferentialForm::function(P("z", 2)));
}

TEST(LieDerivative, Examples) {
  const ContactContext ctx(1);
  EXPECT_TRUE(lie_derivative(ctx.reeb, ctx.alpha).is_zero());
  const VectorField X = VectorField(1, {P("y1", 1), P("0", 1), P("x1", 1)});
  EXPECT_EQ(lie_derivative(X, F("x1*z", 1)), DifferentialForm::function(apply_field(X, P("x1*z", 1))));
  EXPECT_EQ(lie_derivative(X, F("x1*z", 1)), F("y1*z + x1^2", 1));
  const DifferentialForm zero = lie_derivative(X, DifferentialForm(1, 2));
  EXPECT_EQ(zero.degree(), 2);
}

TEST(LieDerivative, AlphaScalesByHz) {
  FormSampler rng(400);
  for (int s = 0; s < 20; ++s) {
    const int n = 1 + s % 2;
    const Polynomial h = rng.polynomial(n, 3);
    const ContactContext ctx(n);
    const VectorField X = contact_field_from_h(h);
    EXPECT_EQ(lie_derivative(X, ctx.alpha), partial(h, Coordinate::z()) * ctx.alpha) << format_polynomial(h);
    EXPECT_TRUE((interior_product(X, ctx.dalpha) + exterior_derivative(DifferentialForm::function(h)) -
                 partial(h, Coordinate::z()) * ctx.alpha)
                    .is_zero());
  }
}

TEST(LieDerivative, Properties) {
  FormSampler rng(401);
  for (int n = 1; n <= 2; ++n) {
    for (int s = 0; s < 15; ++s) {
      const VectorField X = rng.field(n, 2);
      const VectorField Y = rng.field(n, 1);
      const DifferentialForm omega = rng.form(n, rng.below(2 * n + 1), 2);
      EXPECT_EQ(lie_derivative(X, exterior_derivative(omega)), exterior_derivative(lie_derivative(X, omega)));
      EXPECT_EQ(lie_derivative(lie_bracket(X, Y), omega),
                lie_derivative(X, lie_derivative(Y, omega)) - lie_derivative(Y, lie_derivative(X, omega)));
    }
  }
}

TEST(Equivariance, ExteriorDerivativeIsNatural) {
  FormSampler rng(402);
  for (int s = 0; s < 10; ++s) {
    const Polynomial h = rng.polynomial(2, 3);
    const DifferentialForm omega = rng.form(2, rng.below(5), 3);
    EXPECT_TRUE(equivariance_residual(NaturalOperator::exterior_d(2, omega.degree()), h, omega).is_zero());
  }
}

TEST(Equivariance, P20IsNatural) {
  FormSampler rng(403);
  const NaturalOperator p = NaturalOperator::P(1, 2, 0);
  for (int s = 0; s < 20; ++s) {
    const Polynomial h = rng.polynomial(1, 3);
    const DifferentialForm omega = rng.form(1, 2, 3);
    EXPECT_TRUE(equivariance_residual(p, h, omega).is_zero());
  }
}

TEST(Equivariance, WedgeDzControlFails) {
  // h = y1: X = -d/dx1 + y1 d/dz, L_X dz = dy1, L_X dx1 = 0
  const DifferentialForm residual = equivariance_residual(ControlOperator::WedgeDz, P("y1", 1), F("dx1", 1));
  EXPECT_EQ(residual, F("-dx1^dy1", 1));
}

TEST(Equivariance, DegreeMismatchThrows) {
  EXPECT_THROW(equivariance_residual(NaturalOperator::Q(1), P("x1", 1), F("dx1^dy1", 1)), std::invalid_argument);
}
