#include "contact/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "contact/lefschetz.hpp"

namespace contact {
namespace {

using Space = TensorSpaceBasis::Space;
using SymbolRule = std::function<DifferentialForm(const DifferentialForm& phi, const std::vector<DifferentialForm>& taus)>;

RationalMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols) { return RationalMatrix::Zero(rows, cols); }

DifferentialForm constant_word(int n, Word w) {
  return DifferentialForm::term(Polynomial::constant(n, Rational(1)), w);
}

// Dense matrix of a rule evaluated on every basis element of the domain.
SymbolMap assemble(const TensorSpaceBasis& domain, const TensorSpaceBasis& codomain, const SymbolRule& rule) {
  const int n = domain.n();
  SymbolMap out;
  out.n = n;
  out.a = domain.exterior_degree();
  out.r = domain.symmetric_degree();
  out.b = codomain.exterior_degree();
  out.space = domain.space();
  out.matrix = zero_matrix(codomain.size(), domain.size());
  for (int col = 0; col < domain.size(); ++col) {
    const auto& e = domain.element(col);
    std::vector<DifferentialForm> taus;
    taus.reserve(e.sym.size());
    for (int t : e.sym) taus.push_back(constant_word(n, Word::single(t)));
    const DifferentialForm image = rule(constant_word(n, e.word), taus);
    for (const auto& [w, c] : image.terms()) {
      if (!c.is_constant()) throw std::logic_error("symbol rule produced a non-constant coefficient");
      const int row = codomain.index_of(w, {});
      if (row < 0) throw std::logic_error("symbol rule left the codomain space");
      out.matrix(row, col) = c.constant_term();
    }
  }
  return out;
}

bool is_diagonal(const std::vector<SparseRow<Rational>>& columns) {
  for (std::size_t k = 0; k < columns.size(); ++k) {
    for (const auto& [row, v] : columns[k]) {
      if (row != static_cast<int>(k)) return false;
    }
  }
  return true;
}

Rational diagonal_entry(const SparseRow<Rational>& column, int k) {
  for (const auto& [row, v] : column) {
    if (row == k) return v;
  }
  return Rational(0);
}

// The matrix of g acting on the chosen covector space.
RationalMatrix generator_on_space(const LieGenerator& g, int n, Space space) {
  if (space == Space::Ambient) return g.matrix;
  const int w = 2 * n;
  for (int c = 0; c < w; ++c) {
    if (!g.matrix(c, w).is_zero()) {
      throw std::invalid_argument("generator " + g.label() + " does not preserve the plane covectors");
    }
  }
  return g.matrix.topLeftCorner(w, w);
}

TensorSpaceBasis::Space natural_space(Algebra algebra) {
  return algebra == Algebra::SpOnly ? Space::Plane : Space::Ambient;
}

// L^t Lambda^s on a horizontal constant form.
DifferentialForm lefschetz_monomial(const DifferentialForm& phi, int t, int s) {
  return lefschetz_L(lefschetz_dual(HorizontalForm(phi), s), t).form();
}

}  // namespace

std::string LieGenerator::label() const {
  auto pair = [&] { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  switch (block) {
    case Block::ASym:
      return "A" + pair();
    case Block::BGeneral:
      return "B" + pair();
    case Block::CSym:
      return "C" + pair();
    case Block::Ex:
      return "E_x(" + std::to_string(i) + ")";
    case Block::Ey:
      return "E_y(" + std::to_string(i) + ")";
    case Block::Scaling:
      return "scaling";
  }
  return "?";
}

RationalMatrix isotropy_block_matrix(const RationalMatrix& A, const RationalMatrix& B, const RationalMatrix& C,
                                     const RationalVector& Ex, const RationalVector& Ey, const Rational& hz) {
  const Eigen::Index n = A.rows();
  RationalMatrix m = zero_matrix(2 * n + 1, 2 * n + 1);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = (r == c ? hz : Rational(0)) - B(c, r);
      m(r, n + c) = -C(r, c);
      m(n + r, c) = A(r, c);
      m(n + r, n + c) = B(r, c);
    }
    m(r, 2 * n) = -Ey(r);
    m(n + r, 2 * n) = Ex(r);
  }
  m(2 * n, 2 * n) = hz;
  return m;
}

std::vector<LieGenerator> isotropy_generators(int n, Algebra algebra) {
  if (n < 1) throw std::invalid_argument("isotropy_generators: n must be positive");
  const RationalMatrix zero_block = zero_matrix(n, n);
  const RationalVector zero_vec = RationalVector::Zero(n);
  std::vector<LieGenerator> out;
  auto unit = [&](int i, int j, bool symmetric) {
    RationalMatrix e = zero_block;
    e(i - 1, j - 1) = Rational(1);
    if (symmetric) e(j - 1, i - 1) = Rational(1);
    return e;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      out.push_back({LieGenerator::Block::ASym, i, j,
                     isotropy_block_matrix(unit(i, j, true), zero_block, zero_block, zero_vec, zero_vec, Rational(0))});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      out.push_back({LieGenerator::Block::BGeneral, i, j,
                     isotropy_block_matrix(zero_block, unit(i, j, false), zero_block, zero_vec, zero_vec, Rational(0))});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      out.push_back({LieGenerator::Block::CSym, i, j,
                     isotropy_block_matrix(zero_block, zero_block, unit(i, j, true), zero_vec, zero_vec, Rational(0))});
    }
  }
  if (algebra == Algebra::SpOnly) return out;
  for (int i = 1; i <= n; ++i) {
    RationalVector e = zero_vec;
    e(i - 1) = Rational(1);
    out.push_back({LieGenerator::Block::Ex, i, 0,
                   isotropy_block_matrix(zero_block, zero_block, zero_block, e, zero_vec, Rational(0))});
  }
  for (int i = 1; i <= n; ++i) {
    RationalVector e = zero_vec;
    e(i - 1) = Rational(1);
    out.push_back({LieGenerator::Block::Ey, i, 0,
                   isotropy_block_matrix(zero_block, zero_block, zero_block, zero_vec, e, Rational(0))});
  }
  RationalMatrix id = zero_block;
  for (int i = 0; i < n; ++i) id(i, i) = Rational(1);
  out.push_back({LieGenerator::Block::Scaling, 0, 0,
                 isotropy_block_matrix(zero_block, id, zero_block, zero_vec, zero_vec, Rational(2))});
  return out;
}

TensorSpaceBasis::TensorSpaceBasis(int n, Space space, int exterior_degree, int symmetric_degree)
    : n_(n), space_(space), a_(exterior_degree), r_(symmetric_degree) {
  if (n < 1 || coordinate_count(n) > kMaxCoordinates) throw std::invalid_argument("TensorSpaceBasis: bad n");
  if (exterior_degree < 0 || symmetric_degree < 0) throw std::invalid_argument("TensorSpaceBasis: negative degree");
  if (symmetric_degree > 12) throw std::invalid_argument("TensorSpaceBasis: symmetric degree too large");
  const int m = covector_count();

  std::vector<Word> words;
  if (exterior_degree <= m) {
    std::vector<int> idx(static_cast<std::size_t>(exterior_degree));
    std::function<void(int, int)> rec = [&](int pos, int start) {
      if (pos == exterior_degree) {
        words.push_back(Word::from_indices(idx));
        return;
      }
      for (int v = start; v < m; ++v) {
        idx[static_cast<std::size_t>(pos)] = v;
        rec(pos + 1, v + 1);
      }
    };
    rec(0, 0);
  }

  std::vector<std::vector<int>> multisets;
  std::vector<int> sym(static_cast<std::size_t>(symmetric_degree));
  std::function<void(int, int)> rec_sym = [&](int pos, int start) {
    if (pos == symmetric_degree) {
      multisets.push_back(sym);
      return;
    }
    for (int v = start; v < m; ++v) {
      sym[static_cast<std::size_t>(pos)] = v;
      rec_sym(pos + 1, v);
    }
  };
  rec_sym(0, 0);

  for (Word w : words) {
    for (const auto& s : multisets) {
      lookup_.emplace(key(w, s), static_cast<int>(elements_.size()));
      elements_.push_back({w, s});
    }
  }
}

std::uint64_t TensorSpaceBasis::key(Word word, const std::vector<int>& sym) {
  std::uint64_t code = 0;
  for (int s : sym) code = code * 16 + static_cast<std::uint64_t>(s + 1);
  return (static_cast<std::uint64_t>(word.bits()) << 48) | code;
}

int TensorSpaceBasis::index_of(Word word, const std::vector<int>& sym) const {
  auto it = lookup_.find(key(word, sym));
  return it == lookup_.end() ? -1 : it->second;
}

std::vector<SparseRow<Rational>> induced_action_columns(const LieGenerator& g, const TensorSpaceBasis& basis) {
  const int n = basis.n();
  const RationalMatrix m = generator_on_space(g, n, basis.space());
  const int dim = basis.covector_count();
  // covector e^c -> -sum_d m(c, d) e^d
  std::vector<std::vector<std::pair<int, Rational>>> covector_image(static_cast<std::size_t>(dim));
  for (int c = 0; c < dim; ++c) {
    for (int d = 0; d < dim; ++d) {
      if (!m(c, d).is_zero()) covector_image[static_cast<std::size_t>(c)].emplace_back(d, -m(c, d));
    }
  }

  std::vector<SparseRow<Rational>> columns(static_cast<std::size_t>(basis.size()));
  for (int k = 0; k < basis.size(); ++k) {
    const auto& e = basis.element(k);
    std::map<int, Rational> image;
    auto accumulate = [&](Word w, const std::vector<int>& sym, const Rational& v) {
      std::vector<int> sorted = sym;
      std::sort(sorted.begin(), sorted.end());
      const int idx = basis.index_of(w, sorted);
      if (idx < 0) throw std::logic_error("induced_action: image outside the basis");
      image[idx] += v;
    };
    // exterior factor: replace one entry at a time
    const std::vector<int> letters = e.word.indices();
    for (std::size_t pos = 0; pos < letters.size(); ++pos) {
      const Word rest(e.word.bits() & ~(std::uint32_t{1} << letters[pos]));
      for (const auto& [d, v] : covector_image[static_cast<std::size_t>(letters[pos])]) {
        const int s = wedge_sign(Word::single(d), rest);
        if (s == 0) continue;
        // moving the replaced entry to the front passes `pos` letters
        const Rational sign = sign_power(static_cast<long>(pos)) * Rational(s);
        accumulate(Word(rest.bits() | (std::uint32_t{1} << d)), e.sym, sign * v);
      }
    }
    // symmetric factor
    for (std::size_t pos = 0; pos < e.sym.size(); ++pos) {
      for (const auto& [d, v] : covector_image[static_cast<std::size_t>(e.sym[pos])]) {
        std::vector<int> sym = e.sym;
        sym[pos] = d;
        accumulate(e.word, sym, v);
      }
    }
    SparseRow<Rational>& col = columns[static_cast<std::size_t>(k)];
    for (auto& [row, v] : image) {
      if (!v.is_zero()) col.emplace_back(row, std::move(v));
    }
  }
  return columns;
}

RationalMatrix induced_action(const LieGenerator& g, const TensorSpaceBasis& basis) {
  RationalMatrix out = zero_matrix(basis.size(), basis.size());
  const auto columns = induced_action_columns(g, basis);
  for (std::size_t k = 0; k < columns.size(); ++k) {
    for (const auto& [row, v] : columns[k]) out(row, static_cast<Eigen::Index>(k)) = v;
  }
  return out;
}

IntertwinerSolution solve_intertwiners(const TensorSpaceBasis& domain, const TensorSpaceBasis& codomain,
                                       const std::vector<LieGenerator>& generators, bool want_basis) {
  if (domain.n() != codomain.n() || domain.space() != codomain.space()) {
    throw std::invalid_argument("solve_intertwiners: domain and codomain live on different spaces");
  }
  const int m = domain.size();
  const int p = codomain.size();
  IntertwinerSolution solution;
  if (m == 0 || p == 0) return solution;

  struct Action {
    std::vector<SparseRow<Rational>> in_columns;
    std::vector<SparseRow<Rational>> out_columns;
  };
  std::vector<Action> actions;
  actions.reserve(generators.size());
  for (const auto& g : generators) {
    actions.push_back({induced_action_columns(g, domain), induced_action_columns(g, codomain)});
  }

  // Diagonal generators only allow sigma(o, i) != 0 where the eigenvalues agree.
  std::vector<char> alive(static_cast<std::size_t>(m) * static_cast<std::size_t>(p), 1);
  std::vector<const Action*> coupling;
  for (const auto& act : actions) {
    if (!is_diagonal(act.in_columns) || !is_diagonal(act.out_columns)) {
      coupling.push_back(&act);
      continue;
    }
    for (int o = 0; o < p; ++o) {
      const Rational wo = diagonal_entry(act.out_columns[static_cast<std::size_t>(o)], o);
      for (int i = 0; i < m; ++i) {
        if (wo != diagonal_entry(act.in_columns[static_cast<std::size_t>(i)], i)) {
          alive[static_cast<std::size_t>(o) * static_cast<std::size_t>(m) + static_cast<std::size_t>(i)] = 0;
        }
      }
    }
  }
  std::vector<int> variable(alive.size(), -1);
  std::vector<std::size_t> entry_of_variable;
  for (std::size_t e = 0; e < alive.size(); ++e) {
    if (alive[e]) {
      variable[e] = static_cast<int>(entry_of_variable.size());
      entry_of_variable.push_back(e);
    }
  }
  const int unknowns = static_cast<int>(entry_of_variable.size());
  SparseEchelon<Rational> echelon(unknowns);

  for (const Action* act : coupling) {
    // rows of rho_in: for each k, the (i, coefficient) with rho_in(k, i) != 0
    std::vector<std::vector<std::pair<int, Rational>>> in_rows(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      for (const auto& [k, v] : act->in_columns[static_cast<std::size_t>(i)]) in_rows[static_cast<std::size_t>(k)].emplace_back(i, v);
    }
    // equation (o, i): sum_k rho_out(o,k) sigma(k,i) - sum_k sigma(o,k) rho_in(k,i)
    std::map<std::size_t, std::map<int, Rational>> equations;
    for (int var = 0; var < unknowns; ++var) {
      const std::size_t e = entry_of_variable[static_cast<std::size_t>(var)];
      const int row = static_cast<int>(e / static_cast<std::size_t>(m));
      const int col = static_cast<int>(e % static_cast<std::size_t>(m));
      for (const auto& [o, v] : act->out_columns[static_cast<std::size_t>(row)]) {
        equations[static_cast<std::size_t>(o) * static_cast<std::size_t>(m) + static_cast<std::size_t>(col)][var] += v;
      }
      for (const auto& [i, v] : in_rows[static_cast<std::size_t>(col)]) {
        equations[static_cast<std::size_t>(row) * static_cast<std::size_t>(m) + static_cast<std::size_t>(i)][var] -= v;
      }
    }
    for (auto& [key, eq] : equations) {
      SparseRow<Rational> sparse;
      for (auto& [var, v] : eq) {
        if (!v.is_zero()) sparse.emplace_back(var, std::move(v));
      }
      if (!sparse.empty()) echelon.insert(std::move(sparse));
    }
  }

  solution.dimension = unknowns - echelon.rank();
  if (!want_basis) return solution;
  for (const auto& vec : echelon.nullspace()) {
    SymbolMap map;
    map.n = domain.n();
    map.a = domain.exterior_degree();
    map.r = domain.symmetric_degree();
    map.b = codomain.exterior_degree();
    map.space = domain.space();
    map.matrix = zero_matrix(p, m);
    for (const auto& [var, v] : vec) {
      const std::size_t e = entry_of_variable[static_cast<std::size_t>(var)];
      map.matrix(static_cast<Eigen::Index>(e / static_cast<std::size_t>(m)), static_cast<Eigen::Index>(e % static_cast<std::size_t>(m))) = v;
    }
    solution.basis.push_back(std::move(map));
  }
  return solution;
}

IntertwinerSolution solve_intertwiners(int n, int a, int r, int b, Algebra algebra, bool want_basis) {
  const Space space = natural_space(algebra);
  const TensorSpaceBasis domain(n, space, a, r);
  const TensorSpaceBasis codomain(n, space, b, 0);
  return solve_intertwiners(domain, codomain, isotropy_generators(n, algebra), want_basis);
}

bool is_intertwiner(const SymbolMap& sigma, Algebra algebra) {
  const TensorSpaceBasis domain(sigma.n, sigma.space, sigma.a, sigma.r);
  const TensorSpaceBasis codomain(sigma.n, sigma.space, sigma.b, 0);
  if (sigma.matrix.rows() != codomain.size() || sigma.matrix.cols() != domain.size()) {
    throw std::invalid_argument("is_intertwiner: matrix does not match its bases");
  }
  for (const auto& g : isotropy_generators(sigma.n, algebra)) {
    if (sigma.space == Space::Plane && (g.block == LieGenerator::Block::Ex || g.block == LieGenerator::Block::Ey)) {
      throw std::invalid_argument("is_intertwiner: the full algebra does not act on the plane alone");
    }
    const RationalMatrix residual = induced_action(g, codomain) * sigma.matrix - sigma.matrix * induced_action(g, domain);
    for (Eigen::Index k = 0; k < residual.size(); ++k) {
      if (!residual(k).is_zero()) return false;
    }
  }
  return true;
}

std::vector<SymbolMap> contraction_spanning_set(int n, int a, int r, int b) {
  std::vector<SymbolMap> out;
  if (r > 2 || r < 0 || (r + a + b) % 2 != 0 || a < 0 || b < 0) return out;
  const TensorSpaceBasis domain(n, Space::Plane, a, r);
  const TensorSpaceBasis codomain(n, Space::Plane, b, 0);
  if (domain.size() == 0 || codomain.size() == 0) return out;

  auto add = [&](const SymbolRule& rule) {
    SymbolMap map = assemble(domain, codomain, rule);
    for (const auto& existing : out) {
      if (existing.matrix == map.matrix) return;
    }
    out.push_back(std::move(map));
  };
  // (s, t) with lo <= s <= s_hi, 0 <= t <= t_hi, t - s = shift
  auto pairs = [](int lo, int s_hi, int t_hi, int shift) {
    std::vector<std::pair<int, int>> st;
    for (int s = std::max(lo, 0); s <= s_hi; ++s) {
      const int t = s + shift;
      if (t >= 0 && t <= t_hi) st.emplace_back(s, t);
    }
    return st;
  };
  auto half_floor = [](int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); };

  if (r == 0) {
    for (auto [s, t] : pairs(a - n, half_floor(a), half_floor(b), (b - a) / 2)) {
      add([s, t](const DifferentialForm& phi, const std::vector<DifferentialForm>&) { return lefschetz_monomial(phi, t, s); });
    }
  } else if (r == 1) {
    for (auto [s, t] : pairs(a + 1 - n, half_floor(a + 1), half_floor(b), (b - a - 1) / 2)) {
      add([s, t](const DifferentialForm& phi, const std::vector<DifferentialForm>& tau) {
        return lefschetz_monomial(wedge(phi, tau[0]), t, s);
      });
    }
    for (auto [s, t] : pairs(a - n, half_floor(a), half_floor(b - 1), (b - a - 1) / 2)) {
      add([s, t](const DifferentialForm& phi, const std::vector<DifferentialForm>& tau) {
        return wedge(lefschetz_monomial(phi, t, s), tau[0]);
      });
    }
  } else {
    for (auto [s, t] : pairs(a + 1 - n, half_floor(a + 1), half_floor(b - 1), (b - a - 2) / 2)) {
      add([s, t](const DifferentialForm& phi, const std::vector<DifferentialForm>& tau) {
        return wedge(lefschetz_monomial(wedge(phi, tau[0]), t, s), tau[1]) +
               wedge(lefschetz_monomial(wedge(phi, tau[1]), t, s), tau[0]);
      });
    }
  }
  return out;
}

DifferentialForm algebraic_P(int a, int i, const DifferentialForm& phi) {
  const int n = phi.n();
  if (phi.degree() != a) throw std::invalid_argument("algebraic_P: degree mismatch");
  const std::vector<int> allowed = admissible_indices(a, n);
  if (std::find(allowed.begin(), allowed.end(), i) == allowed.end()) {
    throw std::invalid_argument("algebraic_P: inadmissible (a, i)");
  }
  const int dz = 2 * n;
  DifferentialForm plane(n, a);
  for (const auto& [w, c] : phi.terms()) {
    if (!w.contains(dz)) plane.add_term(w, c);
  }
  const HorizontalForm pi = primitive_projection(HorizontalForm(std::move(plane)), i);
  return wedge(lefschetz_L(pi, (a - i - 2) / 2).form(), DifferentialForm::covector(n, Coordinate::z()));
}

SymbolMap symbol_of(const NaturalOperator& op) {
  using Kind = NaturalOperator::Kind;
  const int n = op.n();
  const int a = op.domain_degree();
  const int b = op.codomain_degree();
  const TensorSpaceBasis codomain(n, Space::Ambient, b, 0);

  // p_{deg,i} on words, cached
  std::map<std::pair<int, std::uint32_t>, DifferentialForm> cache;
  auto p = [&](int deg, int i, const DifferentialForm& phi) {
    DifferentialForm out(n, deg - 1);
    for (const auto& [w, c] : phi.terms()) {
      auto key = std::make_pair(deg * 64 + i, w.bits());
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, algebraic_P(deg, i, constant_word(n, w))).first;
      out += c * it->second;
    }
    return out;
  };

  auto is = [](const NaturalOperator& f, Kind k) { return f.kind() == k; };
  const auto& f = op.factors();

  if (op.kind() == Kind::Id) {
    return assemble(TensorSpaceBasis(n, Space::Ambient, a, 0), codomain,
                    [](const DifferentialForm& phi, const std::vector<DifferentialForm>&) { return phi; });
  }
  if (op.kind() == Kind::ExtD) {
    return assemble(TensorSpaceBasis(n, Space::Ambient, a, 1), codomain,
                    [](const DifferentialForm& phi, const std::vector<DifferentialForm>& tau) { return wedge(phi, tau[0]); });
  }
  if (op.kind() == Kind::P) {
    const int i = op.index();
    return assemble(TensorSpaceBasis(n, Space::Ambient, a, 0), codomain,
                    [&, i](const DifferentialForm& phi, const std::vector<DifferentialForm>&) { return p(a, i, phi); });
  }
  if (op.kind() == Kind::Compose && f.size() == 2 && is(f[0], Kind::ExtD) && is(f[1], Kind::P)) {
    const int i = f[1].index();
    return assemble(TensorSpaceBasis(n, Space::Ambient, a, 1), codomain,
                    [&, i](const DifferentialForm& phi, const std::vector<DifferentialForm>& tau) {
                      return wedge(p(a, i, phi), tau[0]);
                    });
  }
  if (op.kind() == Kind::Compose && f.size() == 2 && is(f[0], Kind::P) && is(f[1], Kind::ExtD)) {
    const int i = f[0].index();
    return assemble(TensorSpaceBasis(n, Space::Ambient, a, 1), codomain,
                    [&, i](const DifferentialForm& phi, const std::vector<DifferentialForm>& tau) {
                      return p(a + 1, i, wedge(phi, tau[0]));
                    });
  }
  if (op.kind() == Kind::Compose && f.size() == 3 && is(f[0], Kind::ExtD) && is(f[1], Kind::P) && is(f[2], Kind::ExtD)) {
    const int i = f[1].index();
    return assemble(TensorSpaceBasis(n, Space::Ambient, a, 2), codomain,
                    [&, i](const DifferentialForm& phi, const std::vector<DifferentialForm>& tau) {
                      return wedge(p(a + 1, i, wedge(phi, tau[0])), tau[1]) + wedge(p(a + 1, i, wedge(phi, tau[1])), tau[0]);
                    });
  }
  throw std::invalid_argument("symbol_of: " + op.name() + " is not in the symbol table");
}

std::vector<NaturalOperator> classified_operators(int n, int a, int b) {
  std::vector<NaturalOperator> out;
  const int top = 2 * n + 1;
  if (a < 0 || b < 0 || a > top || b > top) return out;
  const auto d = [n](int deg) { return NaturalOperator::exterior_d(n, deg); };
  if (b == a - 1) {
    for (int i : admissible_indices(a, n)) out.push_back(NaturalOperator::P(n, a, i));
  } else if (b == a) {
    out.push_back(NaturalOperator::identity(n, a));
    for (int i : admissible_indices(a, n)) out.push_back(NaturalOperator::compose({d(a - 1), NaturalOperator::P(n, a, i)}));
    for (int i : admissible_indices(a + 1, n)) out.push_back(NaturalOperator::compose({NaturalOperator::P(n, a + 1, i), d(a)}));
  } else if (b == a + 1) {
    out.push_back(d(a));
    for (int i : admissible_indices(a + 1, n)) {
      out.push_back(NaturalOperator::compose({d(a), NaturalOperator::P(n, a + 1, i), d(a)}));
    }
  }
  return out;
}

ClassifyReport classify(int n, int a, int b, int max_order, Algebra algebra) {
  ClassifyReport report;
  report.n = n;
  report.a = a;
  report.b = b;
  report.algebra = algebra;
  const bool adjacent = (b == a - 1 || b == a || b == a + 1);
  const std::vector<NaturalOperator> ops = classified_operators(n, a, b);
  report.overall_pass = true;
  for (int r = 0; r <= max_order; ++r) {
    ClassifyRow row;
    row.r = r;
    row.solver_dim = solve_intertwiners(n, a, r, b, algebra, false).dimension;
    if (algebra == Algebra::Full) {
      std::vector<RationalMatrix> symbols;
      for (const auto& op : ops) {
        if (op.order() == r) symbols.push_back(symbol_of(op).matrix);
      }
      row.spanning_rank = span_rank(symbols);
      row.pass = row.solver_dim == row.spanning_rank && (adjacent || row.solver_dim == 0);
    } else {
      std::vector<RationalMatrix> maps;
      for (const auto& m : contraction_spanning_set(n, a, r, b)) maps.push_back(m.matrix);
      row.spanning_rank = span_rank(maps);
      row.pass = row.solver_dim == row.spanning_rank;
    }
    report.overall_pass = report.overall_pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace contact
