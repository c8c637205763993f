#include <gtest/gtest.h>

#include <map>

#include "contact/calculus.hpp"
#include "contact/invariants.hpp"
#include "contact/random.hpp"
#include "helpers.hpp"

using namespace contact;
using contact::testing::F;
using Space = TensorSpaceBasis::Space;

namespace {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const LieGenerator& find_generator(const std::vector<LieGenerator>& gens, LieGenerator::Block block, int i, int j = 0) {
  for (const auto& g : gens) {
    if (g.block == block && g.i == i && g.j == j) return g;
  }
  throw std::logic_error("generator not found");
}

// Operators of R_{a,b} by order, counted from the index ranges alone.
int expected_full_dimension(int n, int a, int b, int r) {
  const int top = 2 * n + 1;
  if (a > top || b > top) return 0;
  const int here = static_cast<int>(admissible_indices(a, n).size());
  const int next = static_cast<int>(admissible_indices(a + 1, n).size());
  if (b == a - 1) return r == 0 ? here : 0;
  if (b == a) return r == 0 ? 1 : (r == 1 ? here + next : 0);
  if (b == a + 1) return r == 1 ? 1 : (r == 2 ? next : 0);
  return 0;
}

}  // namespace

TEST(Generators, Counts) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(isotropy_generators(n, Algebra::SpOnly).size(), static_cast<std::size_t>(n * (2 * n + 1)));
    EXPECT_EQ(isotropy_generators(n, Algebra::Full).size(), static_cast<std::size_t>(n * (2 * n + 1) + 2 * n + 1));
  }
  EXPECT_THROW(isotropy_generators(0, Algebra::Full), std::invalid_argument);
}

TEST(Generators, ScalingIsDiag112) {
  const auto gens = isotropy_generators(1, Algebra::Full);
  const LieGenerator& s = find_generator(gens, LieGenerator::Block::Scaling, 0);
  RationalMatrix expected = RationalMatrix::Zero(3, 3);
  expected(0, 0) = Rational(1);
  expected(1, 1) = Rational(1);
  expected(2, 2) = Rational(2);
  EXPECT_EQ(s.matrix, expected);
  EXPECT_EQ(s.label(), "scaling");
}

// Each generator is the linear part at 0 of the contact field of a quadratic h.
TEST(Generators, MatchContactFieldJacobians) {
  const int n = 2;
  const auto gens = isotropy_generators(n, Algebra::Full);
  const auto jacobian = [&](const std::string& h) {
    const VectorField X = contact_field_from_h(parse_polynomial(h, n));
    RationalMatrix m = RationalMatrix::Zero(2 * n + 1, 2 * n + 1);
    for (int r = 0; r <= 2 * n; ++r) {
      for (int c = 0; c <= 2 * n; ++c) m(r, c) = partial(X[r], c).constant_term();
    }
    return m;
  };
  EXPECT_EQ(find_generator(gens, LieGenerator::Block::ASym, 1, 2).matrix, jacobian("x1*x2"));
  EXPECT_EQ(find_generator(gens, LieGenerator::Block::ASym, 2, 2).matrix, jacobian("1/2 x2^2"));
  EXPECT_EQ(find_generator(gens, LieGenerator::Block::BGeneral, 1, 2).matrix, jacobian("x1*y2"));
  EXPECT_EQ(find_generator(gens, LieGenerator::Block::CSym, 1, 2).matrix, jacobian("y1*y2"));
  EXPECT_EQ(find_generator(gens, LieGenerator::Block::Ex, 2).matrix, jacobian("x2*z"));
  EXPECT_EQ(find_generator(gens, LieGenerator::Block::Ey, 1).matrix, jacobian("y1*z"));
  EXPECT_EQ(find_generator(gens, LieGenerator::Block::Scaling, 0).matrix, jacobian("2 z + x1*y1 + x2*y2"));
}

TEST(InducedAction, ScalingWeights) {
  const auto gens = isotropy_generators(1, Algebra::Full);
  const TensorSpaceBasis one(1, Space::Ambient, 1);
  const RationalMatrix rho = induced_action(find_generator(gens, LieGenerator::Block::Scaling, 0), one);
  EXPECT_EQ(rho(0, 0), Rational(-1));
  EXPECT_EQ(rho(1, 1), Rational(-1));
  EXPECT_EQ(rho(2, 2), Rational(-2));
  const TensorSpaceBasis zero(1, Space::Ambient, 0);
  for (const auto& g : gens) {
    const RationalMatrix r0 = induced_action(g, zero);
    EXPECT_EQ(r0, RationalMatrix::Zero(1, 1));
  }
}

// R_w(xi) = xi(w) dz with w = (-E_y, E_x, 0): E_y(1) sends dx1 to dz, E_x(1) sends dy1 to -dz.
TEST(InducedAction, TranslationRule) {
  const auto gens = isotropy_generators(1, Algebra::Full);
  const TensorSpaceBasis one(1, Space::Ambient, 1);
  const RationalMatrix ey = induced_action(find_generator(gens, LieGenerator::Block::Ey, 1), one);
  const RationalMatrix ex = induced_action(find_generator(gens, LieGenerator::Block::Ex, 1), one);
  RationalMatrix want_ey = RationalMatrix::Zero(3, 3);
  want_ey(2, 0) = Rational(1);
  RationalMatrix want_ex = RationalMatrix::Zero(3, 3);
  want_ex(2, 1) = Rational(-1);
  EXPECT_EQ(ey, want_ey);
  EXPECT_EQ(ex, want_ex);
}

TEST(InducedAction, IsLieAlgebraHomomorphism) {
  const int n = 2;
  const auto gens = isotropy_generators(n, Algebra::Full);
  const TensorSpaceBasis basis(n, Space::Ambient, 2, 1);
  for (std::size_t p = 0; p < gens.size(); p += 3) {
    for (std::size_t q = 1; q < gens.size(); q += 4) {
      LieGenerator bracket{LieGenerator::Block::ASym, 0, 0, gens[p].matrix * gens[q].matrix - gens[q].matrix * gens[p].matrix};
      const RationalMatrix rp = induced_action(gens[p], basis);
      const RationalMatrix rq = induced_action(gens[q], basis);
      EXPECT_EQ(induced_action(bracket, basis), rp * rq - rq * rp);
    }
  }
}

TEST(TensorSpaceBasis, DimensionAndOrder) {
  for (int n = 1; n <= 2; ++n) {
    for (int a = 0; a <= 2 * n + 1; ++a) {
      for (int r = 0; r <= 3; ++r) {
        const TensorSpaceBasis basis(n, Space::Ambient, a, r);
        EXPECT_EQ(basis.size(), binomial(2 * n + 1, a) * binomial(2 * n + r, r));
        for (int k = 0; k < basis.size(); ++k) EXPECT_EQ(basis.index_of(basis.element(k).word, basis.element(k).sym), k);
      }
    }
  }
  const TensorSpaceBasis b(1, Space::Ambient, 1, 2);
  EXPECT_EQ(b.element(0).word, Word::single(0));
  EXPECT_EQ(b.element(0).sym, (std::vector<int>{0, 0}));
  EXPECT_EQ(b.element(1).sym, (std::vector<int>{0, 1}));
  EXPECT_EQ(b.element(6).word, Word::single(1));
  EXPECT_EQ(TensorSpaceBasis(2, Space::Plane, 2, 0).size(), 6);
}

TEST(Solver, Examples) {
  for (int n = 1; n <= 2; ++n) {
    for (int a = 0; a <= 2 * n; ++a) {
      for (int b = 0; b <= 2 * n; ++b) {
        EXPECT_EQ(solve_intertwiners(n, a, 3, b, Algebra::SpOnly, false).dimension, 0);
        if ((a + b) % 2 != 0) {
          EXPECT_EQ(solve_intertwiners(n, a, 0, b, Algebra::SpOnly, false).dimension, 0);
        }
      }
    }
  }
  const IntertwinerSolution sp = solve_intertwiners(1, 1, 0, 1, Algebra::SpOnly);
  EXPECT_GE(sp.dimension, 1);
  const IntertwinerSolution full = solve_intertwiners(1, 1, 0, 1, Algebra::Full);
  ASSERT_EQ(full.dimension, 1);
  RationalMatrix id = RationalMatrix::Identity(3, 3);
  EXPECT_EQ(span_rank(std::vector<RationalMatrix>{full.basis[0].matrix, id}), 1);
  for (const auto& m : full.basis) EXPECT_TRUE(is_intertwiner(m, Algebra::Full));
}

TEST(Solver, OverVHasOddParityInvariantsForSp) {
  // dz is sp-invariant, so over V the parity rule fails; the sp check runs on W
  const TensorSpaceBasis v1(1, TensorSpaceBasis::Space::Ambient, 1);
  const TensorSpaceBasis v0(1, TensorSpaceBasis::Space::Ambient, 0);
  EXPECT_EQ(solve_intertwiners(v1, v0, isotropy_generators(1, Algebra::SpOnly), false).dimension, 1);
  EXPECT_EQ(solve_intertwiners(1, 1, 0, 0, Algebra::SpOnly, false).dimension, 0);
}

TEST(SpanningSet, Examples) {
  const auto lam = contraction_spanning_set(1, 2, 0, 0);
  ASSERT_EQ(lam.size(), 1u);
  RationalMatrix expected(1, 1);
  expected(0, 0) = Rational(1);  // Lambda(dx1^dy1) = 1
  EXPECT_EQ(lam[0].matrix, expected);

  const auto mult = contraction_spanning_set(1, 0, 1, 1);
  ASSERT_EQ(mult.size(), 1u);
  EXPECT_EQ(mult[0].matrix, RationalMatrix::Identity(2, 2));

  EXPECT_TRUE(contraction_spanning_set(2, 1, 0, 2).empty());
  EXPECT_TRUE(contraction_spanning_set(2, 1, 3, 2).empty());
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int r = 0; r <= 2; ++r) {
        for (const auto& m : contraction_spanning_set(2, a, r, b)) EXPECT_TRUE(is_intertwiner(m, Algebra::SpOnly));
      }
    }
  }
}

TEST(Symbols, TableRows) {
  const SymbolMap id = symbol_of(NaturalOperator::identity(2, 2));
  EXPECT_EQ(id.matrix, RationalMatrix::Identity(10, 10));

  const SymbolMap d = symbol_of(NaturalOperator::exterior_d(1, 1));
  const TensorSpaceBasis dom(1, Space::Ambient, 1, 1);
  const TensorSpaceBasis cod(1, Space::Ambient, 2, 0);
  for (int k = 0; k < dom.size(); ++k) {
    const auto& e = dom.element(k);
    const DifferentialForm image = wedge(DifferentialForm::term(Polynomial::constant(1, Rational(1)), e.word),
                                         DifferentialForm::covector(1, Coordinate::from_index(1, e.sym[0])));
    RationalVector col = RationalVector::Zero(cod.size());
    for (const auto& [w, c] : image.terms()) col(cod.index_of(w, {})) = c.constant_term();
    EXPECT_EQ(d.matrix.col(k), col);
  }

  // p_{2,0}(dx1^dy1) = alpha_0 = dz
  const SymbolMap p = symbol_of(NaturalOperator::P(1, 2, 0));
  const TensorSpaceBasis two(1, Space::Ambient, 2, 0);
  const TensorSpaceBasis one(1, Space::Ambient, 1, 0);
  const int col = two.index_of(Word::from_indices(std::vector<int>{0, 1}), {});
  RationalVector dz = RationalVector::Zero(one.size());
  dz(one.index_of(Word::single(2), {})) = Rational(1);
  EXPECT_EQ(p.matrix.col(col), dz);
  EXPECT_EQ(algebraic_P(2, 0, F("dx1^dy1", 1)), F("dz", 1));
  EXPECT_EQ(algebraic_P(3, 1, F("dx1^dy1^dx2 + dz^dx1^dy1", 2)), F("dx2^dz", 2));

  EXPECT_THROW(symbol_of(NaturalOperator::Q(1)), std::invalid_argument);
  EXPECT_THROW(symbol_of(NaturalOperator::rumin(1)), std::invalid_argument);
}

TEST(Classify, Examples) {
  const ClassifyReport a = classify(2, 2, 1);
  ASSERT_EQ(a.rows.size(), 4u);
  EXPECT_EQ(a.rows[0].solver_dim, 1);
  for (int r = 1; r <= 3; ++r) EXPECT_EQ(a.rows[static_cast<std::size_t>(r)].solver_dim, 0);
  EXPECT_TRUE(a.overall_pass);

  const ClassifyReport b = classify(1, 1, 2);
  const std::vector<int> dims_b = {0, 1, 1, 0};
  for (int r = 0; r <= 3; ++r) EXPECT_EQ(b.rows[static_cast<std::size_t>(r)].solver_dim, dims_b[static_cast<std::size_t>(r)]);
  EXPECT_TRUE(b.overall_pass);

  const ClassifyReport c = classify(1, 0, 2);
  for (const auto& row : c.rows) EXPECT_EQ(row.solver_dim, 0);
  EXPECT_TRUE(c.overall_pass);

  const ClassifyReport d = classify(2, 3, 4, 2);
  EXPECT_EQ(d.rows.size(), 3u);
  EXPECT_EQ(d.rows[1].solver_dim, 1);
  EXPECT_EQ(d.rows[2].solver_dim, 1);
}

TEST(Classify, FullDimensionsMatchIndexCounts) {
  for (int n = 1; n <= 2; ++n) {
    for (int a = 0; a <= 2 * n + 1; ++a) {
      for (int b = 0; b <= 2 * n + 1; ++b) {
        const ClassifyReport rep = classify(n, a, b);
        EXPECT_TRUE(rep.overall_pass) << "n=" << n << " a=" << a << " b=" << b;
        for (const auto& row : rep.rows) {
          EXPECT_EQ(row.solver_dim, expected_full_dimension(n, a, b, row.r)) << "n=" << n << " a=" << a << " b=" << b << " r=" << row.r;
        }
      }
    }
  }
}

TEST(Classify, SpOnlyGrid) {
  for (int n = 1; n <= 2; ++n) {
    for (int a = 0; a <= 2 * n; ++a) {
      for (int b = 0; b <= 2 * n; ++b) EXPECT_TRUE(classify(n, a, b, 3, Algebra::SpOnly).overall_pass);
    }
  }
}
