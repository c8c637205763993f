#include "contact/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace contact {

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty literal");
  const auto slash = text.find('/');
  auto check_digits = [&](std::string_view part, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
    if (part.size() == start) throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
      }
    }
  };
  std::string_view num = text.substr(0, slash);
  check_digits(num, true);
  std::string num_str(num[0] == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) return Rational(mpz_class(num_str));
  std::string_view den = text.substr(slash + 1);
  check_digits(den, false);
  mpz_class d(std::string{den});
  if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(mpz_class(num_str), d));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.value_.get_str(); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace contact

std::size_t std::hash<contact::Rational>::operator()(const contact::Rational& x) const noexcept {
  return std::hash<std::string>{}(x.str());
}
