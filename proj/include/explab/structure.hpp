#pragma once

#include <gmpxx.h>

#include <vector>

#include "explab/rational.hpp"
#include "explab/rset.hpp"

namespace explab {

struct DUpperResult {
  Rational bound;
  RSet best;
};

// min over the supplied candidates C of |AC|^2 / (|A||C|). An upper bound for
// the product-set characteristic d(A), hence also for d_*(A). Requires a
// nonempty candidate list with 0 in no candidate.
DUpperResult d_upper(const RSet& a, const std::vector<RSet>& candidates);

// Checks the side conditions max{|Q|,|R|} >= |A| and |Q cap aR^{-1}| >= t for
// every a in A, then returns the certified upper bound |Q|^2|R|^2/(|A| t^3).
// Throws ValidationError naming the first failing condition.
Rational dstar_witness_check(const RSet& a, const RSet& q, const RSet& r, const Rational& t);

/// Output of the two-stage dyadic pigeonholing pipeline. tau and t are the
/// lower endpoints of the winning dyadic classes [2^{j-1}, 2^j); the class
/// counts record how many classes were populated at each stage, so tests can
/// verify the pigeonhole inequalities with explicit denominators.
struct DyadicWitness {
  Rational tau;
  RSet s_tau;     // {x : tau <= |A cap xA| < 2 tau}
  Rational t;
  RSet a_prime;   // {a in A : t <= |A cap a S_tau| < 2t}
  Rational dstar_bound;  // |A|^2 |S_tau|^2 / (|A'| t^3), certifies d_*(A')
  long class_count_tau = 0;
  long class_count_t = 0;
};

// Constructive witness extraction: (1) build r(x) = |A cap xA| over A/A,
// (2) discard x with r(x) < E*(A)/(2|A|^2), (3) pick the dyadic class of the
// retained x maximizing sum r^2, giving tau and S_tau, (4) class the values
// |A cap a S_tau| over a in A by the sum they carry, giving t and A', and
// (5) emit the certified d_* upper bound for A'. Requires 0 not in A.
DyadicWitness dyadic_pigeonhole(const RSet& a);

// |{x : r_{A-B}(x) >= tau}| for tau >= 1.
mpz_class tail_count(const RSet& a, const RSet& b, const Rational& tau);

}  // namespace explab
