#pragma once

#include <gmpxx.h>

#include "explab/rational.hpp"

namespace explab {

/// Closed interval with exact rational endpoints, certified to contain the
/// real value it stands for. Fractional powers (square roots in particular)
/// are the only source of genuine width; everything else stays a point.
struct RatInterval {
  Rational lo;
  Rational hi;

  RatInterval() = default;
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
  static RatInterval point(Rational v) { return RatInterval(v, v); }

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo + b.lo, a.hi + b.hi);
  }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo - b.hi, a.hi - b.lo);
  }
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b);

  // k-th power; requires lo >= 0 (all uses are nonnegative quantities).
  RatInterval pow(unsigned long k) const;

  // "[lo, hi]" or just the value for a point.
  std::string str() const;
};

// Certified enclosure of sqrt(v) for integer v >= 0, of width <= 2^-bits.
// Exact (a point) when v is a perfect square.
RatInterval sqrt_enclosure(const mpz_class& v, unsigned bits);

enum class Tri { True, False, Unknown };

// Is x <= y for the true values enclosed by the intervals?
Tri certainly_le(const RatInterval& x, const RatInterval& y);

}  // namespace explab
