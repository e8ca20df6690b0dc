#include "explab/setops.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "explab/errors.hpp"
#include "int64_kernels.hpp"

namespace explab {

namespace {

using detail::Frac64;

std::int64_t op_limit(BinaryOp op) {
  return op == BinaryOp::Product ? detail::kMulLimit : detail::kAddLimit;
}

RSet image_int64(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                 BinaryOp op) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(b.size());
  if (op == BinaryOp::Ratio) {
    std::vector<Frac64> vals(static_cast<std::size_t>(n * m));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      for (std::ptrdiff_t j = 0; j < m; ++j)
        vals[static_cast<std::size_t>(i * m + j)] = detail::reduce64(a[i], b[j]);
    std::sort(vals.begin(), vals.end(), detail::frac_less);
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<Rational> out;
    out.reserve(vals.size());
    for (const Frac64& f : vals) out.emplace_back(mpz_class(static_cast<long>(f.p)), mpz_class(static_cast<long>(f.q)));
    return RSet::from_sorted_unique(std::move(out));
  }
  std::vector<std::int64_t> vals(static_cast<std::size_t>(n * m));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::ptrdiff_t j = 0; j < m; ++j) {
      std::int64_t v = op == BinaryOp::Sum          ? a[i] + b[j]
                       : op == BinaryOp::Difference ? a[i] - b[j]
                                                    : a[i] * b[j];
      vals[static_cast<std::size_t>(i * m + j)] = v;
    }
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<Rational> out;
  out.reserve(vals.size());
  for (std::int64_t v : vals) out.emplace_back(Rational(mpz_class(static_cast<long>(v))));
  return RSet::from_sorted_unique(std::move(out));
}

RSet image_generic(const RSet& a, const RSet& b, BinaryOp op) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(b.size());
  std::vector<Rational> vals(static_cast<std::size_t>(n * m));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::ptrdiff_t j = 0; j < m; ++j) {
      Rational v;
      switch (op) {
        case BinaryOp::Sum: v = a[i] + b[j]; break;
        case BinaryOp::Difference: v = a[i] - b[j]; break;
        case BinaryOp::Product: v = a[i] * b[j]; break;
        case BinaryOp::Ratio: v = a[i] / b[j]; break;
      }
      vals[static_cast<std::size_t>(i * m + j)] = std::move(v);
    }
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return RSet::from_sorted_unique(std::move(vals));
}

}  // namespace

RSet binary_image(const RSet& a, const RSet& b, BinaryOp op) {
  if (a.empty() || b.empty()) throw DomainError("image of an empty set");
  if (op == BinaryOp::Ratio && b.contains_zero())
    throw DomainError("ratio image with 0 in the denominator set");
  auto av = a.as_int64(op_limit(op));
  auto bv = b.as_int64(op_limit(op));
  if (av && bv) return image_int64(*av, *bv, op);
  return image_generic(a, b, op);
}

RSet composite_image(const RSet& a, CompositeKind kind) {
  if (a.empty()) throw DomainError("image of an empty set");
  switch (kind) {
    case CompositeKind::ProdDiff:
      return binary_image(a, binary_image(a, a, BinaryOp::Difference), BinaryOp::Product);
    case CompositeKind::ProdSum:
      return binary_image(a, binary_image(a, a, BinaryOp::Sum), BinaryOp::Product);
    case CompositeKind::SumTimesSum: {
      RSet s = binary_image(a, a, BinaryOp::Sum);
      return binary_image(s, s, BinaryOp::Product);
    }
    case CompositeKind::ProdFourSum: {
      RSet s2 = binary_image(a, a, BinaryOp::Sum);
      RSet s4 = binary_image(s2, s2, BinaryOp::Sum);
      return binary_image(a, s4, BinaryOp::Product);
    }
  }
  throw DomainError("unknown composite kind");
}

RSet ungar_image(const RSet& a) {
  if (a.size() < 2) throw DomainError("quotient of differences needs at least 2 elements");
  RSet d = binary_image(a, a, BinaryOp::Difference);
  return binary_image(d, remove_zero(d), BinaryOp::Ratio);
}

RSet balog_image(const RSet& a) {
  if (a.empty()) throw DomainError("image of an empty set");
  if (!a.all_positive()) throw DomainError("quotient of sums requires all-positive elements");
  RSet s = binary_image(a, a, BinaryOp::Sum);
  return binary_image(s, s, BinaryOp::Ratio);
}

RSet jones_image(const RSet& a) {
  if (a.size() < 2) throw DomainError("three-variable quotient needs at least 2 elements");
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
  std::vector<Rational> vals;
#pragma omp parallel
  {
    std::vector<Rational> local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n * n; ++i) {
      const std::ptrdiff_t ia = i / n, ib = i % n;
      if (ia == ib) continue;
      Rational ab = a[ia] - a[ib];
      for (std::ptrdiff_t ic = 0; ic < n; ++ic) local.push_back((a[ia] - a[ic]) / ab);
    }
#pragma omp critical
    vals.insert(vals.end(), std::make_move_iterator(local.begin()),
                std::make_move_iterator(local.end()));
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return RSet::from_sorted_unique(std::move(vals));
}

RSet shift_square_image(const RSet& a, const RSet& b) {
  if (a.empty() || b.empty()) throw DomainError("image of an empty set");
  RSet sums = binary_image(b, b, BinaryOp::Sum);
  return binary_image(a, elementwise_square(sums), BinaryOp::Sum);
}

KeySet five_var_image(const RSet& a) {
  if (a.empty()) throw DomainError("image of an empty set");
  if (!a.all_positive()) throw DomainError("five-variable image requires all-positive elements");
  RSet s2 = binary_image(a, a, BinaryOp::Sum);
  RSet s4 = binary_image(s2, s2, BinaryOp::Sum);
  std::vector<DyadicSplit> splits;
  splits.reserve(a.size());
  for (const Rational& v : a) splits.push_back(dyadic_split(v));

  const std::ptrdiff_t ns = static_cast<std::ptrdiff_t>(s4.size());
  std::vector<LogKey> keys;
#pragma omp parallel
  {
    std::vector<LogKey> local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < ns; ++i) {
      Rational sq = s4[i] * s4[i];
      for (const DyadicSplit& sp : splits)
        local.emplace_back(sq + Rational(sp.exponent), sp.odd_part);
    }
#pragma omp critical
    keys.insert(keys.end(), std::make_move_iterator(local.begin()),
                std::make_move_iterator(local.end()));
  }
  return KeySet(std::move(keys));
}

RSet elementwise_square(const RSet& s) {
  std::vector<Rational> vals;
  vals.reserve(s.size());
  for (const Rational& v : s) vals.push_back(v * v);
  return RSet(std::move(vals));
}

RSet remove_zero(const RSet& s) {
  std::vector<Rational> vals;
  vals.reserve(s.size());
  for (const Rational& v : s)
    if (!v.is_zero()) vals.push_back(v);
  return RSet::from_sorted_unique(std::move(vals));
}

RSet inverses(const RSet& s) {
  if (s.contains_zero()) throw DomainError("inverse of a set containing 0");
  std::vector<Rational> vals;
  vals.reserve(s.size());
  for (const Rational& v : s) vals.push_back(v.reciprocal());
  return RSet(std::move(vals));
}

}  // namespace explab
