#include "contact/lefschetz.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

#include "contact/calculus.hpp"

namespace contact {
namespace {

// Lambda^j L^m pi = mu(k, m, j) L^{m-j} pi for primitive pi of degree k.
Rational ladder_product(int n, int k, int m, int j) {
  if (j > m) return Rational(0);
  Rational out(1);
  for (int q = m - j + 1; q <= m; ++q) out *= lambda_l_coefficient(n, k, q);
  return out;
}

bool in_index_set(int i, int a, int n) {
  return i >= 0 && i <= std::min(a, 2 * n - a) && (a - i) % 2 == 0;
}

// c'(i, j) for j = (a-i)/2 .. floor(a/2), solved from the triangular system
//   sum_j c'(i,j) mu(k, (a-k)/2, j) = delta_{ik}   for k <= i in the index set.
std::vector<Rational> solve_projection_constants(int n, int a, int i) {
  const int j_min = (a - i) / 2;
  const int j_max = a / 2;
  std::vector<Rational> c(static_cast<std::size_t>(j_max - j_min + 1), Rational(0));
  if (!in_index_set(i, a, n)) return c;
  for (int k = i; k >= 0; k -= 2) {
    const int m = (a - k) / 2;
    Rational rhs = (k == i) ? Rational(1) : Rational(0);
    for (int j = j_min; j < m; ++j) rhs -= c[static_cast<std::size_t>(j - j_min)] * ladder_product(n, k, m, j);
    c[static_cast<std::size_t>(m - j_min)] = rhs / ladder_product(n, k, m, m);
  }
  return c;
}

class ProjectionCache {
 public:
  const std::vector<Rational>& get(int n, int a, int i) {
    std::lock_guard lock(mutex_);
    auto key = std::make_tuple(n, a, i);
    auto it = table_.find(key);
    if (it == table_.end()) it = table_.emplace(key, solve_projection_constants(n, a, i)).first;
    return it->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, std::vector<Rational>> table_;
};

ProjectionCache& projection_cache() {
  static ProjectionCache cache;
  return cache;
}

void require_horizontal_degree(int a, int n) {
  if (a < 0 || a > 2 * n) throw std::out_of_range("sl2: degree must lie in 0..2n");
}

}  // namespace

HorizontalForm::HorizontalForm(DifferentialForm form) : form_(std::move(form)) {
  if (!form_.is_horizontal()) throw std::invalid_argument("HorizontalForm: form contains dz");
}

std::vector<int> decomposition_indices(int a, int n) {
  std::vector<int> out;
  for (int i = a % 2; i <= std::min(a, 2 * n - a); i += 2) out.push_back(i);
  return out;
}

HorizontalForm lefschetz_L(const HorizontalForm& phi, int power) {
  if (power < 0) throw std::invalid_argument("lefschetz_L: negative power");
  const ContactContext ctx(phi.n());
  DifferentialForm out = phi.form();
  for (int p = 0; p < power; ++p) out = wedge(out, ctx.dalpha);
  return HorizontalForm(std::move(out));
}

HorizontalForm lefschetz_dual(const HorizontalForm& phi, int power) {
  if (power < 0) throw std::invalid_argument("lefschetz_dual: negative power");
  const int n = phi.n();
  DifferentialForm current = phi.form();
  for (int p = 0; p < power; ++p) {
    DifferentialForm next(n, std::max(current.degree() - 2, 0));
    for (const auto& [w, c] : current.terms()) {
      for (int k = 1; k <= n; ++k) {
        const int xk = Coordinate::x(k).index(n);
        const int yk = Coordinate::y(k).index(n);
        if (!w.contains(xk) || !w.contains(yk)) continue;
        // i_{dx_k} first, then i_{dy_k} on the shortened word
        const std::uint32_t below_x = w.bits() & ((std::uint32_t{1} << xk) - 1);
        const std::uint32_t without_x = w.bits() & ~(std::uint32_t{1} << xk);
        const std::uint32_t below_y = without_x & ((std::uint32_t{1} << yk) - 1);
        const int s = std::popcount(below_x) + std::popcount(below_y);
        Polynomial coeff = c;
        if (s % 2 != 0) coeff *= Rational(-1);
        next.add_term(Word(without_x & ~(std::uint32_t{1} << yk)), coeff);
      }
    }
    current = std::move(next);
  }
  return HorizontalForm(std::move(current));
}

bool is_primitive(const HorizontalForm& phi) {
  return phi.degree() <= phi.n() && lefschetz_dual(phi).is_zero();
}

const HorizontalForm& LefschetzDecomposition::component(int i) const {
  auto it = components.find(i);
  if (it == components.end()) throw std::out_of_range("LefschetzDecomposition: index not in decomposition range");
  return it->second;
}

HorizontalForm LefschetzDecomposition::reconstruct() const {
  DifferentialForm out(n, degree);
  for (const auto& [i, pi] : components) out += lefschetz_L(pi, (degree - i) / 2).form();
  return HorizontalForm(std::move(out));
}

Rational lambda_l_coefficient(int n, int i, int j) { return Rational(-j) * Rational(i - n + j - 1); }

HorizontalForm primitive_projection(const HorizontalForm& phi, int i) {
  const int n = phi.n();
  const int a = phi.degree();
  require_horizontal_degree(a, n);
  if (!in_index_set(i, a, n)) throw std::out_of_range("primitive_projection: index not in decomposition range");
  const std::vector<Rational>& c = projection_cache().get(n, a, i);
  const int j_min = (a - i) / 2;
  DifferentialForm out(n, i);
  HorizontalForm lambda_power = lefschetz_dual(phi, j_min);
  for (int j = j_min; j <= a / 2; ++j) {
    const Rational& cj = c[static_cast<std::size_t>(j - j_min)];
    if (!cj.is_zero()) out += cj * lefschetz_L(lambda_power, j + (i - a) / 2).form();
    lambda_power = lefschetz_dual(lambda_power);
  }
  return HorizontalForm(std::move(out));
}

LefschetzDecomposition primitive_projections(const HorizontalForm& phi) {
  require_horizontal_degree(phi.degree(), phi.n());
  LefschetzDecomposition out;
  out.n = phi.n();
  out.degree = phi.degree();
  for (int i : decomposition_indices(phi.degree(), phi.n())) out.components.emplace(i, primitive_projection(phi, i));
  return out;
}

Rational sl2_constant(int n, int a, Sl2Family family, int first, int second) {
  if (n < 1) throw std::out_of_range("sl2_constant: n must be positive");
  require_horizontal_degree(a, n);
  switch (family) {
    case Sl2Family::LambdaPower: {
      const int s = first;
      const int i = second;
      if (s < 0 || i < 0 || i > std::min(a - 2 * s, 2 * n - a) || (a - i) % 2 != 0) {
        throw std::out_of_range("sl2_constant: c(s,i) index out of range");
      }
      return ladder_product(n, i, (a - i) / 2, s);
    }
    case Sl2Family::Projection: {
      const int i = first;
      const int j = second;
      if (i < 0 || i > a || (a - i) % 2 != 0 || j < (a - i) / 2 || j > a / 2) {
        throw std::out_of_range("sl2_constant: c'(i,j) index out of range");
      }
      return projection_cache().get(n, a, i)[static_cast<std::size_t>(j - (a - i) / 2)];
    }
    case Sl2Family::LambdaInLPowers: {
      const int s = first;
      const int j = second;
      if (s < 0 || j < std::max(s, a - n) || j > a / 2) {
        throw std::out_of_range("sl2_constant: c''(s,j) index out of range");
      }
      Rational total(0);
      for (int i : decomposition_indices(a, n)) {
        if (i > a - 2 * s || j < (a - i) / 2) continue;
        total += ladder_product(n, i, (a - i) / 2, s) * projection_cache().get(n, a, i)[static_cast<std::size_t>(j - (a - i) / 2)];
      }
      return total;
    }
  }
  throw std::invalid_argument("sl2_constant: unknown family");
}

}  // namespace contact
