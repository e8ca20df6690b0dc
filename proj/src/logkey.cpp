#include "explab/logkey.hpp"

#include <cassert>

#include "explab/errors.hpp"

namespace explab {

namespace {

// 2-adic valuation of a nonzero integer.
long val2(const mpz_class& v) {
  assert(v != 0);
  return static_cast<long>(mpz_scan1(v.get_mpz_t(), 0));
}

}  // namespace

DyadicSplit dyadic_split(const Rational& u) {
  if (!u.is_positive()) throw DomainError("dyadic_split requires a positive value");
  long vn = val2(u.num());
  long vd = val2(u.den());
  mpz_class n, d;
  mpz_tdiv_q_2exp(n.get_mpz_t(), u.num().get_mpz_t(), static_cast<mp_bitcnt_t>(vn));
  mpz_tdiv_q_2exp(d.get_mpz_t(), u.den().get_mpz_t(), static_cast<mp_bitcnt_t>(vd));
  return DyadicSplit{vn - vd, Rational(n, d)};
}

LogKey::LogKey(Rational rational_part, Rational odd_part)
    : r_(std::move(rational_part)), u0_(std::move(odd_part)) {
  assert(u0_.is_positive());
  assert(mpz_odd_p(u0_.num().get_mpz_t()) && mpz_odd_p(u0_.den().get_mpz_t()));
}

LogKey logkey_make(const Rational& s, const Rational& a) {
  if (!a.is_positive()) throw DomainError("logarithm of a nonpositive value");
  DyadicSplit split = dyadic_split(a);
  return LogKey(s * s + Rational(split.exponent), split.odd_part);
}

std::string LogKey::str() const {
  return r_.str() + "+log2(" + u0_.str() + ")";
}

}  // namespace explab
