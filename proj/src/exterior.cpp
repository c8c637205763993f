#include "contact/exterior.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace contact {

Word Word::from_indices(std::span<const int> indices) {
  std::uint32_t bits = 0;
  int previous = -1;
  for (int i : indices) {
    if (i <= previous) throw std::invalid_argument("Word: indices must be strictly increasing");
    if (i >= kMaxCoordinates) throw std::out_of_range("Word: index out of range");
    bits |= std::uint32_t{1} << i;
    previous = i;
  }
  return Word(bits);
}

std::vector<int> Word::indices() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::strong_ordering operator<=>(Word lhs, Word rhs) {
  if (lhs.degree() != rhs.degree()) return lhs.degree() <=> rhs.degree();
  const std::uint32_t diff = lhs.bits_ ^ rhs.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  // Equal length and identical below the lowest differing index: the word
  // holding that index has the smaller entry at that position.
  const std::uint32_t lowest = diff & (~diff + 1);
  return (lhs.bits_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

int wedge_sign(Word lhs, Word rhs) {
  if ((lhs.bits() & rhs.bits()) != 0) return 0;
  int inversions = 0;
  for (std::uint32_t b = rhs.bits(); b != 0; b &= b - 1) {
    const int j = std::countr_zero(b);
    // entries of lhs that sit above j must move past it
    inversions += std::popcount(lhs.bits() >> (j + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

DifferentialForm::DifferentialForm(int n, int degree) : n_(n), degree_(degree) {
  if (n < 1 || coordinate_count(n) > kMaxCoordinates) {
    throw std::invalid_argument("DifferentialForm: dimension parameter n must be in 1..7");
  }
  if (degree < 0) throw std::invalid_argument("DifferentialForm: negative degree");
}

DifferentialForm DifferentialForm::function(const Polynomial& f) {
  DifferentialForm out(f.n(), 0);
  out.add_term(Word{}, f);
  return out;
}

DifferentialForm DifferentialForm::constant(int n, const Rational& c) {
  return function(Polynomial::constant(n, c));
}

DifferentialForm DifferentialForm::covector(int n, Coordinate c) {
  DifferentialForm out(n, 1);
  out.add_term(Word::single(c.index(n)), Polynomial::constant(n, Rational(1)));
  return out;
}

DifferentialForm DifferentialForm::term(const Polynomial& coeff, Word w) {
  DifferentialForm out(coeff.n(), w.degree());
  out.add_term(w, coeff);
  return out;
}

Polynomial DifferentialForm::coefficient(Word w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Polynomial(n_) : it->second;
}

bool DifferentialForm::is_horizontal() const {
  const int dz = 2 * n_;
  return std::none_of(terms_.begin(), terms_.end(), [dz](const auto& t) { return t.first.contains(dz); });
}

void DifferentialForm::add_term(Word w, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  if (coeff.n() != n_) throw std::invalid_argument("DifferentialForm: coefficient dimension mismatch");
  if (w.degree() != degree_) throw std::invalid_argument("DifferentialForm: word degree does not match form degree");
  if ((w.bits() >> coordinate_count(n_)) != 0) throw std::out_of_range("DifferentialForm: word index beyond 2n+1");
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DifferentialForm::absorb(const DifferentialForm& rhs, const Rational& scale) {
  if (rhs.n_ != n_) throw std::invalid_argument("DifferentialForm: dimension mismatch");
  if (rhs.is_zero()) return;
  if (rhs.degree_ != degree_) {
    if (!is_zero()) throw std::invalid_argument("DifferentialForm: adding forms of different degree");
    degree_ = rhs.degree_;
  }
  for (const auto& [w, c] : rhs.terms_) add_term(w, c * scale);
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& rhs) {
  absorb(rhs, Rational(1));
  return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& rhs) {
  absorb(rhs, Rational(-1));
  return *this;
}

DifferentialForm& DifferentialForm::operator*=(const Polynomial& f) {
  if (f.n() != n_) throw std::invalid_argument("DifferentialForm: dimension mismatch");
  TermMap out;
  for (const auto& [w, c] : terms_) {
    Polynomial product = c * f;
    if (!product.is_zero()) out.emplace(w, std::move(product));
  }
  terms_ = std::move(out);
  return *this;
}

DifferentialForm& DifferentialForm::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

bool operator==(const DifferentialForm& lhs, const DifferentialForm& rhs) {
  if (lhs.n_ != rhs.n_) return false;
  if (lhs.is_zero() && rhs.is_zero()) return true;
  return lhs.degree_ == rhs.degree_ && lhs.terms_ == rhs.terms_;
}

VectorField::VectorField(int n) : n_(n), components_(static_cast<std::size_t>(coordinate_count(n)), Polynomial(n)) {}

VectorField::VectorField(int n, std::vector<Polynomial> components) : n_(n), components_(std::move(components)) {
  if (static_cast<int>(components_.size()) != coordinate_count(n)) {
    throw std::invalid_argument("VectorField: expected 2n+1 components");
  }
  for (const auto& c : components_) {
    if (c.n() != n) throw std::invalid_argument("VectorField: component dimension mismatch");
  }
}

VectorField VectorField::coordinate(int n, Coordinate c) {
  VectorField out(n);
  out.components_[static_cast<std::size_t>(c.index(n))] = Polynomial::constant(n, Rational(1));
  return out;
}

DifferentialForm wedge(const DifferentialForm& lhs, const DifferentialForm& rhs) {
  if (lhs.n() != rhs.n()) throw std::invalid_argument("wedge: dimension mismatch");
  DifferentialForm out(lhs.n(), lhs.degree() + rhs.degree());
  if (out.degree() > coordinate_count(lhs.n())) return out;
  for (const auto& [wl, cl] : lhs.terms()) {
    for (const auto& [wr, cr] : rhs.terms()) {
      const int s = wedge_sign(wl, wr);
      if (s == 0) continue;
      Polynomial c = cl * cr;
      if (s < 0) c *= Rational(-1);
      out.add_term(Word(wl.bits() | wr.bits()), c);
    }
  }
  return out;
}

DifferentialForm interior_product(const VectorField& X, const DifferentialForm& omega) {
  if (X.n() != omega.n()) throw std::invalid_argument("interior_product: dimension mismatch");
  if (omega.degree() == 0) return DifferentialForm::zero(omega.n(), 0);
  DifferentialForm out(omega.n(), omega.degree() - 1);
  for (const auto& [w, c] : omega.terms()) {
    for (std::uint32_t b = w.bits(); b != 0; b &= b - 1) {
      const int k = std::countr_zero(b);
      const Polynomial& component = X[k];
      if (component.is_zero()) continue;
      // moving dx_k to the front passes the lower entries of the word
      const int below = std::popcount(w.bits() & ((std::uint32_t{1} << k) - 1));
      Polynomial coeff = component * c;
      if (below % 2 != 0) coeff *= Rational(-1);
      out.add_term(Word(w.bits() & ~(std::uint32_t{1} << k)), coeff);
    }
  }
  return out;
}

DifferentialForm restrict_to_Q(const DifferentialForm& omega) {
  const int n = omega.n();
  const int dz = 2 * n;
  DifferentialForm out(n, omega.degree());
  for (const auto& [w, c] : omega.terms()) {
    if (!w.contains(dz)) {
      out.add_term(w, c);
      continue;
    }
    // dz is the largest index, so f w' ^ dz -> -sum_i x_i f w' ^ dy_i
    const Word rest(w.bits() & ~(std::uint32_t{1} << dz));
    for (int i = 1; i <= n; ++i) {
      const int dy = Coordinate::y(i).index(n);
      const int s = wedge_sign(rest, Word::single(dy));
      if (s == 0) continue;
      Polynomial coeff = c * Polynomial::variable(n, Coordinate::x(i));
      coeff *= Rational(-s);
      out.add_term(Word(rest.bits() | (std::uint32_t{1} << dy)), coeff);
    }
  }
  return out;
}

DifferentialForm evaluate_coefficients(const DifferentialForm& omega, std::span<const Rational> point) {
  DifferentialForm out(omega.n(), omega.degree());
  for (const auto& [w, c] : omega.terms()) {
    out.add_term(w, Polynomial::constant(omega.n(), evaluate(c, point)));
  }
  return out;
}

Rational evaluate_on_vectors(const DifferentialForm& omega, std::span<const RationalVector> vectors,
                             std::span<const Rational> point) {
  const int a = omega.degree();
  if (static_cast<int>(vectors.size()) != a) throw std::invalid_argument("evaluate_on_vectors: need deg(omega) vectors");
  Rational total(0);
  std::vector<int> perm(static_cast<std::size_t>(a));
  for (const auto& [w, c] : omega.terms()) {
    const std::vector<int> idx = w.indices();
    // determinant of [v_j(idx_k)] by permutation expansion
    Rational det(0);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inversions = 0;
      for (int p = 0; p < a; ++p) {
        for (int q = p + 1; q < a; ++q) inversions += perm[static_cast<std::size_t>(p)] > perm[static_cast<std::size_t>(q)];
      }
      Rational prod = sign_power(inversions);
      for (int k = 0; k < a && !prod.is_zero(); ++k) {
        prod *= vectors[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])](idx[static_cast<std::size_t>(k)]);
      }
      det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!det.is_zero()) total += evaluate(c, point) * det;
  }
  return total;
}

}  // namespace contact
