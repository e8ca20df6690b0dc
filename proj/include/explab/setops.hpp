#pragma once

#include "explab/rset.hpp"

namespace explab {

enum class BinaryOp { Sum, Difference, Product, Ratio };

enum class CompositeKind {
  ProdDiff,     // A(A-A)
  ProdSum,      // A(A+A)
  SumTimesSum,  // (A+A)(A+A)
  ProdFourSum,  // A(A+A+A+A)
};

// {a o b : a in A, b in B}, deduplicated. Ratio requires 0 not in B.
RSet binary_image(const RSet& a, const RSet& b, BinaryOp op);

// Composite images built from binary images.
RSet composite_image(const RSet& a, CompositeKind kind);

// {(a-b)/(c-d) : a,b,c,d in A, c != d}; requires |A| >= 2.
RSet ungar_image(const RSet& a);

// {(a+b)/(c+d) : a,b,c,d in A}; requires all elements positive.
RSet balog_image(const RSet& a);

// {(a-c)/(a-b) : a,b,c in A, a != b}; requires |A| >= 2.
RSet jones_image(const RSet& a);

// {a + (b1+b2)^2 : a in A, b1,b2 in B}.
RSet shift_square_image(const RSet& a, const RSet& b);

// Keys of (a1+a2+a3+a4)^2 + log2(a5) over five-tuples from A, deduplicated
// under canonical key equality. Computed through the four-fold sumset, so the
// cost is |A+A+A+A| * |A| rather than |A|^5. Requires all elements positive.
KeySet five_var_image(const RSet& a);

// {v^2 : v in S}.
RSet elementwise_square(const RSet& s);

// S without 0.
RSet remove_zero(const RSet& s);

// {1/v : v in S}; DomainError if 0 in S.
RSet inverses(const RSet& s);

}  // namespace explab
