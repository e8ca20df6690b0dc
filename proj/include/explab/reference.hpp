#pragma once

#include <gmpxx.h>

#include "explab/multiplicity.hpp"
#include "explab/rset.hpp"
#include "explab/setops.hpp"
#include "explab/structure.hpp"

// Serial reference implementations: direct tuple enumeration with no shared
// kernels, no fast paths and no parallelism. These are the ground truth the
// test suites compare the production kernels against, and the baseline the
// benchmark times. Complexity is the naive bound (up to |A|^8), so keep the
// inputs small.
namespace explab::ref {

RSet binary_image(const RSet& a, const RSet& b, BinaryOp op);
RSet composite_image(const RSet& a, CompositeKind kind);
RSet ungar_image(const RSet& a);
RSet balog_image(const RSet& a);
RSet jones_image(const RSet& a);
RSet shift_square_image(const RSet& a, const RSet& b);
KeySet five_var_image(const RSet& a);

MultiplicityTable rep_table(const RSet& a, const RSet& b, BinaryOp op);

// Quadruple count of a1 o b1 = a2 o b2 by four nested loops.
mpz_class energy(const RSet& a, const RSet& b, BinaryOp op);

// Sextuple count of a1 - a2 = a3 - a4 = a5 - a6.
mpz_class third_moment(const RSet& a);

// Eight nested loops; |A| <= 5 stays well under a second.
mpz_class quartic_count_squares(const RSet& a);
mpz_class quartic_count_products(const RSet& a);

// Six nested loops over A^2 x B^4.
mpz_class shift_square_solutions(const RSet& a, const RSet& b);

mpz_class tail_count(const RSet& a, const RSet& b, const Rational& tau);

// The five pipeline steps, re-derived with scalar maps and loops.
DyadicWitness dyadic_pigeonhole(const RSet& a);

}  // namespace explab::ref
