#pragma once

#include <string>

#include "explab/rational.hpp"

namespace explab {

// u = 2^exponent * odd_part, with both numerator and denominator of odd_part odd.
struct DyadicSplit {
  long exponent;
  Rational odd_part;
};

// Requires u > 0. The exponent is the 2-adic valuation of the numerator minus
// that of the denominator.
DyadicSplit dyadic_split(const Rational& u);

/// Canonical form of the real number s^2 + log2(a) for rationals s and a > 0.
///
/// With a = 2^e * u0 (u0 odd/odd), the value equals (s^2 + e) + log2(u0).
/// Two such values coincide iff their keys are componentwise equal: log2 of a
/// positive rational is rational only for integer powers of 2, so equal values
/// force equal odd parts and then equal rational parts. This makes equality of
/// the five-variable expander's image values decidable in exact arithmetic.
class LogKey {
 public:
  LogKey(Rational rational_part, Rational odd_part);

  const Rational& rational_part() const { return r_; }
  const Rational& odd_part() const { return u0_; }

  // "r+log2(u0)" with both parts as lowest-terms rational strings.
  std::string str() const;

  friend bool operator==(const LogKey& a, const LogKey& b) {
    return a.r_ == b.r_ && a.u0_ == b.u0_;
  }
  friend bool operator!=(const LogKey& a, const LogKey& b) { return !(a == b); }
  friend bool operator<(const LogKey& a, const LogKey& b) {
    if (a.r_ != b.r_) return a.r_ < b.r_;
    return a.u0_ < b.u0_;
  }

 private:
  Rational r_;   // s^2 + e
  Rational u0_;  // positive, odd numerator and denominator
};

// Key of s^2 + log2(a); DomainError when a <= 0.
LogKey logkey_make(const Rational& s, const Rational& a);

}  // namespace explab
