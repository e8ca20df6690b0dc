#pragma once

#include <gmpxx.h>

#include "explab/interval.hpp"
#include "explab/multiplicity.hpp"
#include "explab/rset.hpp"
#include "explab/setops.hpp"

namespace explab {

// Full representation function of {a o b : (a,b) in A x B}: the counts sum
// to |A||B|. Ratio requires 0 not in B.
MultiplicityTable rep_table(const RSet& a, const RSet& b, BinaryOp op);

// Sum of squared representation counts = number of solution quadruples
// a1 o b1 = a2 o b2. Difference gives the additive energy, ratio the
// multiplicative energy.
mpz_class energy(const RSet& a, const RSet& b, BinaryOp op);

inline mpz_class additive_energy(const RSet& a) { return energy(a, a, BinaryOp::Difference); }
// Requires 0 not in A.
inline mpz_class mult_energy(const RSet& a) { return energy(a, a, BinaryOp::Ratio); }

enum class Moment { ThreeHalves, Two, Three };

/// A k-th moment of the difference representation function: exact for
/// integer k, a certified enclosure for k = 3/2.
struct EnergyValue {
  bool is_exact = true;
  Rational exact;        // meaningful when is_exact
  RatInterval interval;  // meaningful when !is_exact; contains the true value
};

// Sum over x in A-A of r(x)^k. For k = 3/2 the result is an interval of
// width <= 2^-bits.
EnergyValue energy_k(const RSet& a, Moment k, unsigned bits = 64);

// Enclosure of sum r(x)^{3/2}, width <= 2^-bits.
RatInterval e15_enclosure(const RSet& a, unsigned bits);

// Combines two tables: value x o y with weight count(x)*count(y), for every
// pair of entries. This carries multiplicities through composed images.
MultiplicityTable table_combine(const MultiplicityTable& x, const MultiplicityTable& y,
                                BinaryOp op);

// value -> value^2, merging v and -v.
MultiplicityTable square_table(const MultiplicityTable& t);

// Number of 8-tuples with (a1-a2)^2 + (a3-a4)^2 = (a5-a6)^2 + (a7-a8)^2,
// via the second moment of the two-stage multiplicity table.
mpz_class quartic_count_squares(const RSet& a);

// Number of 8-tuples with (a1-a2)(a3-a4) = (a5-a6)(a7-a8).
mpz_class quartic_count_products(const RSet& a);

/// Solutions of a1 + (b1+b2)^2 = a2 + (b3+b4)^2 over A^2 x B^4, with the two
/// double-counting comparands: cs_lower = |A|^2|B|^4 / |A+(B+B)^2| <= S, and
/// S^2 <= cs_upper = E+(A) * sum_x r^2 over the squared-sum difference table.
struct ShiftSquareCount {
  mpz_class solutions;
  Rational cs_lower;
  mpz_class cs_upper;
};

ShiftSquareCount shift_square_solutions(const RSet& a, const RSet& b);

}  // namespace explab
