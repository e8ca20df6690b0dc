#include "explab/interval.hpp"

#include <algorithm>
#include <cassert>

#include "explab/errors.hpp"

namespace explab {

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
  Rational lo = std::min(std::min(c1, c2), std::min(c3, c4));
  Rational hi = std::max(std::max(c1, c2), std::max(c3, c4));
  return RatInterval(std::move(lo), std::move(hi));
}

RatInterval RatInterval::pow(unsigned long k) const {
  assert(lo.sign() >= 0);
  return RatInterval(lo.pow(k), hi.pow(k));  // monotone on [0, inf)
}

std::string RatInterval::str() const {
  if (is_point()) return lo.str();
  return "[" + lo.str() + ", " + hi.str() + "]";
}

RatInterval sqrt_enclosure(const mpz_class& v, unsigned bits) {
  if (v < 0) throw DomainError("square root of a negative integer");
  if (v == 0) return RatInterval::point(Rational(0));
  // floor(sqrt(v * 4^bits)) / 2^bits brackets sqrt(v) from below within 2^-bits.
  mpz_class scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), v.get_mpz_t(), 2 * static_cast<mp_bitcnt_t>(bits));
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, bits);
  if (root * root == scaled) return RatInterval::point(Rational(root, denom));
  return RatInterval(Rational(root, denom), Rational(root + 1, denom));
}

Tri certainly_le(const RatInterval& x, const RatInterval& y) {
  if (x.hi <= y.lo) return Tri::True;
  if (x.lo > y.hi) return Tri::False;
  return Tri::Unknown;
}

}  // namespace explab
