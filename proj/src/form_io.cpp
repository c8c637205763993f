#include "contact/form_io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace contact {
namespace {

enum class TokenKind { Number, Var, Basis, Caret, Star, Slash, Plus, Minus, End };

struct Token {
  TokenKind kind;
  std::size_t pos;
  std::string text;  // digits for Number
  Coordinate coord;  // for Var and Basis
};

class Lexer {
 public:
  Lexer(std::string_view text, int n) : text_(text), n_(n) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ >= text_.size()) {
        out.push_back({TokenKind::End, pos_, {}, {}});
        return out;
      }
      const std::size_t start = pos_;
      const char ch = text_[pos_];
      switch (ch) {
        case '^':
          ++pos_;
          out.push_back({TokenKind::Caret, start, {}, {}});
          continue;
        case '*':
          ++pos_;
          out.push_back({TokenKind::Star, start, {}, {}});
          continue;
        case '/':
          ++pos_;
          out.push_back({TokenKind::Slash, start, {}, {}});
          continue;
        case '+':
          ++pos_;
          out.push_back({TokenKind::Plus, start, {}, {}});
          continue;
        case '-':
          ++pos_;
          out.push_back({TokenKind::Minus, start, {}, {}});
          continue;
        default:
          break;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        out.push_back({TokenKind::Number, start, digits(), {}});
        continue;
      }
      if (ch == 'd') {
        ++pos_;
        out.push_back({TokenKind::Basis, start, {}, coordinate(start)});
        continue;
      }
      if (ch == 'x' || ch == 'y' || ch == 'z') {
        out.push_back({TokenKind::Var, start, {}, coordinate(start)});
        continue;
      }
      throw ParseError(std::string("unexpected character '") + ch + "'", start);
    }
  }

 private:
  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Coordinate coordinate(std::size_t token_start) {
    if (pos_ >= text_.size()) throw ParseError("expected x, y or z", pos_);
    const char ch = text_[pos_];
    if (ch == 'z') {
      ++pos_;
      return Coordinate::z();
    }
    if (ch != 'x' && ch != 'y') throw ParseError("expected x, y or z", pos_);
    ++pos_;
    const std::size_t digit_pos = pos_;
    const std::string d = digits();
    if (d.empty()) throw ParseError("expected coordinate index", digit_pos);
    if (d.size() > 3) throw ParseError("unknown variable index " + d, token_start);
    const int k = std::stoi(d);
    if (k < 1 || k > n_) {
      throw ParseError("unknown variable index " + d + " for n=" + std::to_string(n_), token_start);
    }
    return ch == 'x' ? Coordinate::x(k) : Coordinate::y(k);
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, int n) : tokens_(Lexer(text, n).run()), n_(n) {}

  DifferentialForm parse() {
    std::optional<DifferentialForm> result;
    std::optional<int> degree;
    bool negative = false;
    if (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      negative = next().kind == TokenKind::Minus;
    }
    while (true) {
      const std::size_t term_pos = peek().pos;
      DifferentialForm term = parse_term();
      if (degree && *degree != term.degree()) {
        throw ParseError("mixed degrees: expected a " + std::to_string(*degree) + "-form term, got degree " +
                             std::to_string(term.degree()),
                         term_pos);
      }
      degree = term.degree();
      if (negative) term *= Rational(-1);
      if (!result) result = DifferentialForm(n_, term.degree());
      *result += term;
      if (peek().kind == TokenKind::End) break;
      if (peek().kind != TokenKind::Plus && peek().kind != TokenKind::Minus) {
        throw ParseError("expected '+' or '-'", peek().pos);
      }
      negative = next().kind == TokenKind::Minus;
    }
    return *result;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(index_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[std::min(index_++, tokens_.size() - 1)]; }

  int parse_int(const Token& tok) const {
    if (tok.text.size() > 9) throw ParseError("integer too large", tok.pos);
    return std::stoi(tok.text);
  }

  DifferentialForm parse_term() {
    Rational coeff(1);
    Monomial mono;
    std::vector<int> basis;
    bool have_word = false;
    int factors = 0;
    while (true) {
      const Token& tok = peek();
      if (tok.kind == TokenKind::Star) {
        if (factors == 0) throw ParseError("unexpected '*'", tok.pos);
        next();
        const TokenKind k = peek().kind;
        if (k != TokenKind::Number && k != TokenKind::Var && k != TokenKind::Basis) {
          throw ParseError("expected a factor after '*'", peek().pos);
        }
        continue;
      }
      if (tok.kind == TokenKind::Number) {
        next();
        Rational value = Rational::parse(tok.text);
        if (peek().kind == TokenKind::Slash) {
          next();
          if (peek().kind != TokenKind::Number) throw ParseError("expected denominator", peek().pos);
          const Token& den = next();
          if (Rational::parse(den.text).is_zero()) throw ParseError("zero denominator", den.pos);
          value /= Rational::parse(den.text);
        }
        coeff *= value;
      } else if (tok.kind == TokenKind::Var) {
        next();
        int power = 1;
        if (peek().kind == TokenKind::Caret && peek(1).kind == TokenKind::Number) {
          next();
          power = parse_int(next());
        }
        const int idx = tok.coord.index(n_);
        if (mono[idx] + power > 255) throw ParseError("exponent too large", tok.pos);
        mono.set(idx, mono[idx] + power);
      } else if (tok.kind == TokenKind::Basis) {
        if (have_word) throw ParseError("a term may contain only one wedge word", tok.pos);
        have_word = true;
        next();
        basis.push_back(tok.coord.index(n_));
        while (peek().kind == TokenKind::Caret) {
          next();
          if (peek().kind != TokenKind::Basis) throw ParseError("expected dx, dy or dz after '^'", peek().pos);
          basis.push_back(next().coord.index(n_));
        }
      } else {
        break;
      }
      ++factors;
    }
    if (factors == 0) throw ParseError("expected a term", peek().pos);

    const int degree = static_cast<int>(basis.size());
    DifferentialForm out(n_, degree);
    // sort the word, tracking the permutation sign; repeats give zero
    int inversions = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        if (basis[i] == basis[j]) return out;
        inversions += basis[i] > basis[j];
      }
    }
    std::sort(basis.begin(), basis.end());
    coeff *= sign_power(inversions);
    out.add_term(Word::from_indices(basis), Polynomial::monomial(n_, mono, coeff));
    return out;
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  int n_;
};

std::string coefficient_prefix(const Rational& magnitude, bool has_rest) {
  if (magnitude == Rational(1) && has_rest) return {};
  return magnitude.str() + (has_rest ? " " : "");
}

}  // namespace

DifferentialForm parse_form(std::string_view text, int n) {
  if (n < 1 || coordinate_count(n) > kMaxCoordinates) throw std::invalid_argument("parse_form: n must be in 1..7");
  return Parser(text, n).parse();
}

Polynomial parse_polynomial(std::string_view text, int n) {
  DifferentialForm f = parse_form(text, n);
  if (f.degree() != 0) throw ParseError("expected a polynomial, found a wedge word", 0);
  return f.coefficient(Word{});
}

std::string format_monomial(const Monomial& m, int n) {
  std::string out;
  for (int i = 0; i < coordinate_count(n); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += Coordinate::from_index(n, i).name();
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string format_word(Word w, int n) {
  std::string out;
  for (int i : w.indices()) {
    if (!out.empty()) out += '^';
    out += "d" + Coordinate::from_index(n, i).name();
  }
  return out;
}

std::string format_form(const DifferentialForm& omega) {
  std::string out;
  const int n = omega.n();
  for (const auto& [w, poly] : omega.terms()) {
    const std::string word = format_word(w, n);
    for (const auto& [m, c] : poly.terms()) {
      const std::string mono = format_monomial(m, n);
      std::string body = mono;
      if (!word.empty()) body += (body.empty() ? "" : " ") + word;
      const Rational magnitude = abs(c);
      const std::string piece = coefficient_prefix(magnitude, !body.empty()) + body;
      if (out.empty()) {
        out = (c.sign() < 0 ? "-" : "") + piece;
      } else {
        out += (c.sign() < 0 ? " - " : " + ") + piece;
      }
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_polynomial(const Polynomial& p) { return format_form(DifferentialForm::function(p)); }

std::string format_vector_field(const VectorField& X) {
  std::string out;
  for (int i = 0; i < coordinate_count(X.n()); ++i) {
    if (X[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + format_polynomial(X[i]) + ") d/d" + Coordinate::from_index(X.n(), i).name();
  }
  return out.empty() ? "0" : out;
}

}  // namespace contact
