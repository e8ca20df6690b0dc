#include "explab/rational.hpp"

#include <cctype>
#include <ostream>

#include "explab/errors.hpp"

namespace explab {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational normalize(const mpz_class& num, const mpz_class& den) {
  return Rational(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(den(), num());
}

Rational Rational::pow(unsigned long k) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), k);
  Rational out;
  out.q_ = mpq_class(n, d);  // already canonical: gcd(num,den)=1 is preserved by powers
  return out;
}

std::optional<std::int64_t> Rational::as_int64(std::int64_t limit) const {
  if (!is_integer()) return std::nullopt;
  const mpz_class& n = num();
  if (!n.fits_slong_p()) return std::nullopt;
  long v = n.get_si();
  if (v > limit || v < -limit) return std::nullopt;
  return static_cast<std::int64_t>(v);
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { throw ParseError("invalid rational '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  std::size_t slash = text.find('/');
  auto check_int = [&](std::string_view part) {
    if (part.empty()) fail();
    std::size_t i = (part[0] == '-') ? 1 : 0;
    if (i == part.size()) fail();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) fail();
  };
  if (slash == std::string_view::npos) {
    check_int(text);
    return Rational(mpz_class{std::string(text)});
  }
  std::string_view np = text.substr(0, slash);
  std::string_view dp = text.substr(slash + 1);
  check_int(np);
  check_int(dp);
  if (dp[0] == '-') fail();  // sign lives on the numerator
  mpz_class den{std::string(dp)};
  if (den == 0) throw ParseError("invalid rational '" + std::string(text) + "': zero denominator");
  return Rational(mpz_class{std::string(np)}, den);
}

}  // namespace explab
