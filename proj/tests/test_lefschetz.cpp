#include <gtest/gtest.h>

#include <map>

#include "contact/lefschetz.hpp"
#include "contact/linalg.hpp"
#include "contact/random.hpp"
#include "contact/suite.hpp"
#include "helpers.hpp"

using namespace contact;
using contact::testing::F;

namespace {

HorizontalForm H(const std::string& text, int n) { return HorizontalForm(F(text, n)); }

HorizontalForm basis_form(int n, Word w) {
  return HorizontalForm(DifferentialForm::term(Polynomial::constant(n, Rational(1)), w));
}

}  // namespace

TEST(HorizontalForm, RejectsDz) {
  EXPECT_THROW(H("dz", 1), std::invalid_argument);
  EXPECT_NO_THROW(H("x1 dy1", 1));
}

TEST(Lefschetz, LExamples) {
  EXPECT_EQ(lefschetz_L(HorizontalForm(DifferentialForm::constant(1, Rational(1)))).form(), F("dx1^dy1", 1));
  EXPECT_EQ(lefschetz_L(H("dx2", 2)).form(), F("dx1^dy1^dx2", 2));
  EXPECT_EQ(lefschetz_L(H("dx2", 2)).form(), F("-dx1^dx2^dy1", 2));
  EXPECT_TRUE(lefschetz_L(HorizontalForm(DifferentialForm::constant(1, Rational(1))), 2).is_zero());
}

TEST(Lefschetz, DualExamples) {
  EXPECT_EQ(lefschetz_dual(H("dx1^dy1", 1)).form(), DifferentialForm::constant(1, Rational(1)));
  EXPECT_TRUE(lefschetz_dual(H("dx1^dx2", 2)).is_zero());
  EXPECT_EQ(lefschetz_dual(H("dx1^dy1 + dx2^dy2", 2)).form(), DifferentialForm::constant(2, Rational(2)));
  EXPECT_EQ(lefschetz_dual(H("dx1^dy1^dx2", 2)).form(), F("dx2", 2));
}

TEST(Lefschetz, IsPrimitive) {
  EXPECT_TRUE(is_primitive(HorizontalForm(DifferentialForm::constant(2, Rational(1)))));
  EXPECT_FALSE(is_primitive(H("dx1^dy1", 2)));
  EXPECT_TRUE(is_primitive(H("dx1^dy1 - dx2^dy2", 2)));
  EXPECT_FALSE(is_primitive(H("dx1^dx2^dy1", 2)));  // degree > n is never primitive
}

TEST(Lefschetz, CommutatorOnEveryBasisWord) {
  for (int n = 1; n <= 3; ++n) {
    for (int a = 0; a <= 2 * n; ++a) {
      for (Word w : words_of_degree(2 * n, a)) {
        const HorizontalForm phi = basis_form(n, w);
        const DifferentialForm lhs = lefschetz_L(lefschetz_dual(phi)).form() - lefschetz_dual(lefschetz_L(phi)).form();
        EXPECT_EQ(lhs, Rational(a - n) * phi.form());
      }
    }
  }
}

TEST(Lefschetz, DecompositionIndices) {
  EXPECT_EQ(decomposition_indices(2, 1), (std::vector<int>{0}));
  EXPECT_EQ(decomposition_indices(2, 2), (std::vector<int>{0, 2}));
  EXPECT_EQ(decomposition_indices(3, 2), (std::vector<int>{1}));
  EXPECT_EQ(decomposition_indices(3, 3), (std::vector<int>{1, 3}));
}

TEST(Projections, Examples) {
  const LefschetzDecomposition a = primitive_projections(H("dx1^dy1", 1));
  ASSERT_EQ(a.components.size(), 1u);
  EXPECT_EQ(a.component(0).form(), DifferentialForm::constant(1, Rational(1)));

  const LefschetzDecomposition b = primitive_projections(H("dx1^dx2", 2));
  EXPECT_TRUE(b.component(0).is_zero());
  EXPECT_EQ(b.component(2).form(), F("dx1^dx2", 2));

  const LefschetzDecomposition c = primitive_projections(H("dx1^dy1^dx2", 2));
  EXPECT_EQ(c.component(1).form(), F("dx2", 2));
  const LefschetzDecomposition c3 = primitive_projections(H("dx1^dy1^dx2", 3));
  EXPECT_EQ(c3.component(1).form(), Rational(1, 2) * F("dx2", 3));
  EXPECT_EQ(c3.component(3).form(), F("1/2 dx1^dy1^dx2 - 1/2 dx2^dx3^dy3", 3));
}

TEST(Projections, MatchLinearSolveOracle) {
  for (int n = 1; n <= 3; ++n) {
    for (int a = 0; a <= 2 * n; ++a) {
      for (Word w : words_of_degree(2 * n, a)) {
        const HorizontalForm phi = basis_form(n, w);
        const LefschetzDecomposition got = primitive_projections(phi);
        const LefschetzDecomposition want = decompose_by_linear_solve(phi);
        for (int i : decomposition_indices(a, n)) EXPECT_EQ(got.component(i).form(), want.component(i).form());
      }
    }
  }
}

TEST(Projections, ReconstructionOnPolynomialForms) {
  FormSampler rng(500);
  for (int n = 1; n <= 3; ++n) {
    for (int s = 0; s < 15; ++s) {
      const HorizontalForm phi = rng.horizontal(n, rng.below(2 * n + 1), 3);
      const LefschetzDecomposition dec = primitive_projections(phi);
      EXPECT_EQ(dec.reconstruct().form(), phi.form());
      for (const auto& [i, pi] : dec.components) EXPECT_TRUE(lefschetz_dual(pi).is_zero());
    }
  }
}

TEST(Projections, SingleProjectionMatchesTable) {
  const HorizontalForm phi = H("x1 dx1^dy1 + z dx1^dx2", 2);
  EXPECT_EQ(primitive_projection(phi, 0).form(), primitive_projections(phi).component(0).form());
  EXPECT_EQ(primitive_projection(phi, 2).form(), F("1/2 x1 dx1^dy1 - 1/2 x1 dx2^dy2 + z dx1^dx2", 2));
}

TEST(Sl2, LambdaOnLPowers) {
  EXPECT_EQ(lambda_l_coefficient(1, 0, 1), Rational(1));
  FormSampler rng(501);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i <= n; ++i) {
      const HorizontalForm pi = primitive_projection(rng.horizontal(n, i, 2), i);
      for (int j = 1; j <= n - i + 1; ++j) {
        EXPECT_EQ(lefschetz_dual(lefschetz_L(pi, j)).form(), lambda_l_coefficient(n, i, j) * lefschetz_L(pi, j - 1).form());
      }
      EXPECT_TRUE(lefschetz_L(pi, n - i + 1).is_zero());
    }
  }
}

TEST(Sl2, ConstantExamples) {
  for (int n = 1; n <= 3; ++n) {
    for (int a = 0; a <= n; ++a) EXPECT_EQ(sl2_constant(n, a, Sl2Family::Projection, a, 0), Rational(1));
  }
  EXPECT_EQ(sl2_constant(1, 2, Sl2Family::Projection, 0, 1), Rational(1));
  EXPECT_THROW(sl2_constant(1, 2, Sl2Family::Projection, 0, 2), std::out_of_range);
  EXPECT_THROW(sl2_constant(1, 2, Sl2Family::Projection, 1, 0), std::out_of_range);
  EXPECT_THROW(sl2_constant(1, 3, Sl2Family::LambdaPower, 0, 1), std::out_of_range);
}

// c'(i, j) recovered by solving sum_j c'_j L^{j+(i-a)/2} Lambda^j phi = pi_i(phi) over
// every basis phi, with pi_i from the linear-solve decomposition.
TEST(Sl2, ProjectionConstantsMatchBruteForce) {
  for (int n = 1; n <= 3; ++n) {
    for (int a = 0; a <= 2 * n; ++a) {
      for (int i : decomposition_indices(a, n)) {
        const int j0 = (a - i) / 2;
        const int unknowns = a / 2 - j0 + 1;
        std::vector<Word> out_words = words_of_degree(2 * n, i);
        std::map<Word, int> out_index;
        for (std::size_t k = 0; k < out_words.size(); ++k) out_index[out_words[k]] = static_cast<int>(k);
        std::vector<SparseRow<Rational>> rows;
        for (Word w : words_of_degree(2 * n, a)) {
          const HorizontalForm phi = basis_form(n, w);
          std::vector<std::vector<Rational>> block(out_words.size(), std::vector<Rational>(static_cast<std::size_t>(unknowns + 1)));
          for (int j = j0; j <= a / 2; ++j) {
            const HorizontalForm image = lefschetz_L(lefschetz_dual(phi, j), j + (i - a) / 2);
            for (const auto& [word, c] : image.form().terms()) block[static_cast<std::size_t>(out_index[word])][static_cast<std::size_t>(j - j0)] = c.constant_term();
          }
          const LefschetzDecomposition solved = decompose_by_linear_solve(phi);
          for (const auto& [word, c] : solved.component(i).form().terms()) {
            block[static_cast<std::size_t>(out_index[word])][static_cast<std::size_t>(unknowns)] = -c.constant_term();
          }
          for (const auto& line : block) {
            SparseRow<Rational> row;
            for (int k = 0; k <= unknowns; ++k) {
              if (!line[static_cast<std::size_t>(k)].is_zero()) row.emplace_back(k, line[static_cast<std::size_t>(k)]);
            }
            rows.push_back(row);
          }
        }
        SparseEchelon<Rational> echelon(unknowns + 1);
        for (auto& row : rows) echelon.insert(row);
        const auto kernel = echelon.nullspace();
        // the constants must be a solution; compare when it is unique
        SparseRow<Rational> candidate;
        for (int j = j0; j <= a / 2; ++j) {
          const Rational c = sl2_constant(n, a, Sl2Family::Projection, i, j);
          if (!c.is_zero()) candidate.emplace_back(j - j0, c);
        }
        candidate.emplace_back(unknowns, Rational(1));
        SparseEchelon<Rational> span(unknowns + 1);
        for (const auto& v : kernel) span.insert(v);
        EXPECT_TRUE(span.contains(candidate)) << "n=" << n << " a=" << a << " i=" << i;
        if (kernel.size() == 1) {
          const Rational scale = kernel.front().back().second;
          for (const auto& [k, v] : kernel.front()) {
            if (k < unknowns) {
              EXPECT_EQ(v / scale, sl2_constant(n, a, Sl2Family::Projection, i, k + j0));
            }
          }
        }
      }
    }
  }
}
