#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "contact/exterior.hpp"
#include "contact/linalg.hpp"
#include "contact/natural_ops.hpp"
#include "contact/rational.hpp"

namespace contact {

enum class Algebra {
  SpOnly,  // the symplectic block, acting on the contact plane W
  Full,    // symplectic block, translations R_w and scaling, acting on V = W + D
};

/// One element of the isotropy algebra at the origin, as the derivative of
/// the linearised flow:
///
///   [ hz Id - B^t   -C   -E_y ]
///   [ A              B    E_x ]
///   [ 0              0    hz  ]
///
/// in the basis (x_1..x_n, y_1..y_n, z), with A and C symmetric.
struct LieGenerator {
  enum class Block { ASym, BGeneral, CSym, Ex, Ey, Scaling };
  Block block;
  int i = 0;  // 1-based block entry (row), 0 when unused
  int j = 0;  // 1-based block entry (column), 0 when unused
  RationalMatrix matrix;

  std::string label() const;
};

/// Assembles the block matrix above.
RationalMatrix isotropy_block_matrix(const RationalMatrix& A, const RationalMatrix& B, const RationalMatrix& C,
                                     const RationalVector& Ex, const RationalVector& Ey, const Rational& hz);

/// SpOnly: n(2n+1) generators. Full: additionally n E_x, n E_y and the scaling generator.
std::vector<LieGenerator> isotropy_generators(int n, Algebra algebra);

/// Ordered basis of Lambda^a U* (x) Sym^r U*, U = W or V.
///
/// Elements are ordered exterior-major: exterior words by degree-then-lexicographic
/// index order, then symmetric words as sorted multisets in lexicographic order.
/// Covector indices follow dx_1..dx_n, dy_1..dy_n[, dz].
class TensorSpaceBasis {
 public:
  enum class Space { Plane, Ambient };

  struct Element {
    Word word;
    std::vector<int> sym;  // nondecreasing covector indices
  };

  TensorSpaceBasis(int n, Space space, int exterior_degree, int symmetric_degree = 0);

  int n() const { return n_; }
  Space space() const { return space_; }
  int exterior_degree() const { return a_; }
  int symmetric_degree() const { return r_; }
  int covector_count() const { return space_ == Space::Plane ? 2 * n_ : 2 * n_ + 1; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Element& element(int k) const { return elements_[static_cast<std::size_t>(k)]; }
  const std::vector<Element>& elements() const { return elements_; }
  /// -1 when absent; `sym` must be sorted.
  int index_of(Word word, const std::vector<int>& sym) const;

 private:
  static std::uint64_t key(Word word, const std::vector<int>& sym);

  int n_;
  Space space_;
  int a_;
  int r_;
  std::vector<Element> elements_;
  std::unordered_map<std::uint64_t, int> lookup_;
};

/// Exact matrix of a linear map domain -> codomain (rows index the codomain basis).
struct SymbolMap {
  int n = 1;
  int a = 0;
  int r = 0;
  int b = 0;
  TensorSpaceBasis::Space space = TensorSpaceBasis::Space::Ambient;
  RationalMatrix matrix;
};

/// Image of every basis element under the derivation induced by g; column k
/// holds the image of element k. Acts on covectors by -g^t.
std::vector<SparseRow<Rational>> induced_action_columns(const LieGenerator& g, const TensorSpaceBasis& basis);
RationalMatrix induced_action(const LieGenerator& g, const TensorSpaceBasis& basis);

struct IntertwinerSolution {
  int dimension = 0;
  std::vector<SymbolMap> basis;
};

/// Exact nullspace of rho_out(g) sigma - sigma rho_in(g) = 0 over the given generators.
IntertwinerSolution solve_intertwiners(const TensorSpaceBasis& domain, const TensorSpaceBasis& codomain,
                                       const std::vector<LieGenerator>& generators, bool want_basis = true);

/// SpOnly works on the plane W, Full on V.
IntertwinerSolution solve_intertwiners(int n, int a, int r, int b, Algebra algebra, bool want_basis = true);

/// True iff sigma commutes with every generator of the algebra.
bool is_intertwiner(const SymbolMap& sigma, Algebra algebra);

/// The symplectic contraction maps L^t Lambda^s (and their r = 1, 2 variants) on the
/// plane W. Empty when r + a + b is odd or r > 2. Duplicate matrices are dropped.
std::vector<SymbolMap> contraction_spanning_set(int n, int a, int r, int b);

/// p_{a,i}(phi) = L^{(a-i-2)/2} Pi_i(phi|_W) ^ dz for a constant form phi at the origin.
DifferentialForm algebraic_P(int a, int i, const DifferentialForm& phi);

/// Principal symbol at the origin of id, d, P_{a,i}, d o P_{a,i}, P_{a+1,i} o d or
/// d o P_{a+1,i} o d. Throws std::invalid_argument for any other operator.
SymbolMap symbol_of(const NaturalOperator& op);

/// Operators spanning the classified space from a-forms to b-forms (empty unless b in {a-1, a, a+1}).
std::vector<NaturalOperator> classified_operators(int n, int a, int b);

struct ClassifyRow {
  int r = 0;
  int solver_dim = 0;
  int spanning_rank = 0;
  bool pass = false;
};

struct ClassifyReport {
  int n = 1;
  int a = 0;
  int b = 0;
  Algebra algebra = Algebra::Full;
  std::vector<ClassifyRow> rows;
  bool overall_pass = false;
};

/// Full: solver dimension on V against the rank of the order-r symbols of the
/// classified operators. SpOnly: solver dimension on W against the rank of the
/// contraction spanning set.
ClassifyReport classify(int n, int a, int b, int max_order = 3, Algebra algebra = Algebra::Full);

}  // namespace contact
