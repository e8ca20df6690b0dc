#include "explab/energy.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "explab/errors.hpp"
#include "int64_kernels.hpp"

namespace explab {

namespace {

using detail::Frac64;
using Entry = MultiplicityTable::Entry;

std::int64_t op_limit(BinaryOp op) {
  return op == BinaryOp::Product ? detail::kMulLimit : detail::kAddLimit;
}

std::int64_t apply_op(std::int64_t a, std::int64_t b, BinaryOp op) {
  switch (op) {
    case BinaryOp::Sum: return a + b;
    case BinaryOp::Difference: return a - b;
    default: return a * b;
  }
}

// Value spread small enough for a flat counter array (<= 64 MiB of counts).
constexpr std::int64_t kDirectSpan = std::int64_t(1) << 23;

MultiplicityTable table_from_int64_runs(std::vector<std::int64_t>& vals) {
  std::sort(vals.begin(), vals.end());
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < vals.size();) {
    std::size_t j = i;
    while (j < vals.size() && vals[j] == vals[i]) ++j;
    entries.push_back({Rational(mpz_class(static_cast<long>(vals[i]))),
                       mpz_class(static_cast<unsigned long>(j - i))});
    i = j;
  }
  return MultiplicityTable::from_sorted(std::move(entries));
}

MultiplicityTable rep_int64(const std::vector<std::int64_t>& a,
                            const std::vector<std::int64_t>& b, BinaryOp op) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(b.size());

  if (op == BinaryOp::Ratio) {
    std::vector<Frac64> vals(static_cast<std::size_t>(n * m));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      for (std::ptrdiff_t j = 0; j < m; ++j)
        vals[static_cast<std::size_t>(i * m + j)] = detail::reduce64(a[i], b[j]);
    std::sort(vals.begin(), vals.end(), detail::frac_less);
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < vals.size();) {
      std::size_t j = i;
      while (j < vals.size() && vals[j] == vals[i]) ++j;
      entries.push_back({Rational(mpz_class(static_cast<long>(vals[i].p)),
                                  mpz_class(static_cast<long>(vals[i].q))),
                         mpz_class(static_cast<unsigned long>(j - i))});
      i = j;
    }
    return MultiplicityTable::from_sorted(std::move(entries));
  }

  // Corner values bound the image of the op over the bounding box.
  std::int64_t c1 = apply_op(a.front(), b.front(), op), c2 = apply_op(a.front(), b.back(), op);
  std::int64_t c3 = apply_op(a.back(), b.front(), op), c4 = apply_op(a.back(), b.back(), op);
  std::int64_t vmin = std::min(std::min(c1, c2), std::min(c3, c4));
  std::int64_t vmax = std::max(std::max(c1, c2), std::max(c3, c4));

  if (static_cast<__int128>(vmax) - vmin <= kDirectSpan) {
    std::vector<unsigned long long> counts(static_cast<std::size_t>(vmax - vmin + 1), 0);
#pragma omp parallel
    {
      std::vector<unsigned long long> local(counts.size(), 0);
#pragma omp for schedule(static) nowait
      for (std::ptrdiff_t i = 0; i < n; ++i)
        for (std::ptrdiff_t j = 0; j < m; ++j)
          ++local[static_cast<std::size_t>(apply_op(a[i], b[j], op) - vmin)];
#pragma omp critical
      for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += local[k];
    }
    std::vector<Entry> entries;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] == 0) continue;
      entries.push_back({Rational(mpz_class(static_cast<long>(vmin + static_cast<std::int64_t>(k)))),
                         mpz_class(static_cast<unsigned long>(counts[k]))});
    }
    return MultiplicityTable::from_sorted(std::move(entries));
  }

  std::vector<std::int64_t> vals(static_cast<std::size_t>(n * m));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    for (std::ptrdiff_t j = 0; j < m; ++j)
      vals[static_cast<std::size_t>(i * m + j)] = apply_op(a[i], b[j], op);
  return table_from_int64_runs(vals);
}

MultiplicityTable rep_generic(const RSet& a, const RSet& b, BinaryOp op) {
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
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < vals.size();) {
    std::size_t j = i;
    while (j < vals.size() && vals[j] == vals[i]) ++j;
    entries.push_back({vals[i], mpz_class(static_cast<unsigned long>(j - i))});
    i = j;
  }
  return MultiplicityTable::from_sorted(std::move(entries));
}

}  // namespace

MultiplicityTable rep_table(const RSet& a, const RSet& b, BinaryOp op) {
  if (a.empty() || b.empty()) throw DomainError("representation function of an empty set");
  if (op == BinaryOp::Ratio && b.contains_zero())
    throw DomainError("ratio representation with 0 in the denominator set");
  auto av = a.as_int64(op_limit(op));
  auto bv = b.as_int64(op_limit(op));
  if (av && bv) return rep_int64(*av, *bv, op);
  return rep_generic(a, b, op);
}

mpz_class energy(const RSet& a, const RSet& b, BinaryOp op) {
  return rep_table(a, b, op).moment(2);
}

RatInterval e15_enclosure(const RSet& a, unsigned bits) {
  MultiplicityTable t = rep_table(a, a, BinaryOp::Difference);
  // Histogram of the counts themselves: r-value -> number of x attaining it.
  std::map<unsigned long, unsigned long long> hist;
  for (const Entry& e : t) ++hist[e.count.get_ui()];
  mpz_class total = t.total();
  unsigned p = bits + static_cast<unsigned>(mpz_sizeinbase(total.get_mpz_t(), 2)) + 1;
  RatInterval acc = RatInterval::point(Rational(0));
  for (const auto& [v, m] : hist) {
    // m * v^{3/2} = (m*v) * sqrt(v); per-term width (m*v) * 2^-p.
    mpz_class weight = mpz_class(v) * mpz_class(static_cast<unsigned long>(m));
    Rational scale{weight};
    RatInterval s = sqrt_enclosure(mpz_class(v), p);
    acc = acc + RatInterval(scale * s.lo, scale * s.hi);
  }
  return acc;
}

EnergyValue energy_k(const RSet& a, Moment k, unsigned bits) {
  if (a.empty()) throw DomainError("moment of an empty set");
  EnergyValue out;
  switch (k) {
    case Moment::Two:
      out.exact = Rational(additive_energy(a));
      return out;
    case Moment::Three:
      out.exact = Rational(rep_table(a, a, BinaryOp::Difference).moment(3));
      return out;
    case Moment::ThreeHalves:
      out.is_exact = false;
      out.interval = e15_enclosure(a, bits);
      return out;
  }
  throw DomainError("unsupported moment");
}

MultiplicityTable square_table(const MultiplicityTable& t) {
  std::vector<Entry> entries;
  entries.reserve(t.size());
  for (const Entry& e : t) entries.push_back({e.value * e.value, e.count});
  return MultiplicityTable::from_entries(std::move(entries));
}

namespace {

bool table_as_int64(const MultiplicityTable& t, std::int64_t vlimit,
                    std::vector<std::pair<std::int64_t, unsigned long long>>* out) {
  out->clear();
  out->reserve(t.size());
  for (const Entry& e : t) {
    auto v = e.value.as_int64(vlimit);
    if (!v || !e.count.fits_ulong_p()) return false;
    unsigned long c = e.count.get_ui();
    if (c > (1ULL << 31)) return false;  // keeps pairwise count products in range
    out->push_back({*v, c});
  }
  return true;
}

}  // namespace

MultiplicityTable table_combine(const MultiplicityTable& x, const MultiplicityTable& y,
                                BinaryOp op) {
  if (x.empty() || y.empty()) throw DomainError("combining an empty table");
  if (op == BinaryOp::Ratio) throw DomainError("ratio table combination is not defined");

  std::vector<std::pair<std::int64_t, unsigned long long>> xi, yi;
  if (table_as_int64(x, op_limit(op), &xi) && table_as_int64(y, op_limit(op), &yi)) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(xi.size());
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(yi.size());
    std::vector<std::pair<std::int64_t, unsigned long long>> vals(
        static_cast<std::size_t>(n * m));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      for (std::ptrdiff_t j = 0; j < m; ++j)
        vals[static_cast<std::size_t>(i * m + j)] = {apply_op(xi[i].first, yi[j].first, op),
                                                     xi[i].second * yi[j].second};
    std::sort(vals.begin(), vals.end());
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < vals.size();) {
      std::size_t j = i;
      mpz_class c = 0;
      while (j < vals.size() && vals[j].first == vals[i].first) c += mpz_class(static_cast<unsigned long>(vals[j++].second));
      entries.push_back({Rational(mpz_class(static_cast<long>(vals[i].first))), std::move(c)});
      i = j;
    }
    return MultiplicityTable::from_sorted(std::move(entries));
  }

  std::vector<Entry> entries;
  entries.reserve(x.size() * y.size());
  for (const Entry& ex : x) {
    for (const Entry& ey : y) {
      Rational v;
      switch (op) {
        case BinaryOp::Sum: v = ex.value + ey.value; break;
        case BinaryOp::Difference: v = ex.value - ey.value; break;
        default: v = ex.value * ey.value; break;
      }
      entries.push_back({std::move(v), ex.count * ey.count});
    }
  }
  return MultiplicityTable::from_entries(std::move(entries));
}

mpz_class quartic_count_squares(const RSet& a) {
  if (a.empty()) throw DomainError("count over an empty set");
  MultiplicityTable sq = square_table(rep_table(a, a, BinaryOp::Difference));
  return table_combine(sq, sq, BinaryOp::Sum).moment(2);
}

mpz_class quartic_count_products(const RSet& a) {
  if (a.empty()) throw DomainError("count over an empty set");
  MultiplicityTable d = rep_table(a, a, BinaryOp::Difference);
  return table_combine(d, d, BinaryOp::Product).moment(2);
}

ShiftSquareCount shift_square_solutions(const RSet& a, const RSet& b) {
  if (a.empty() || b.empty()) throw DomainError("count over an empty set");
  MultiplicityTable bsq = square_table(rep_table(b, b, BinaryOp::Sum));
  MultiplicityTable dd = table_combine(bsq, bsq, BinaryOp::Difference);
  MultiplicityTable ra = rep_table(a, a, BinaryOp::Difference);

  // S = sum_x r_{A-A}(x) * r_dd(x), a merge join over the sorted tables.
  mpz_class s = 0;
  std::size_t i = 0, j = 0;
  while (i < ra.size() && j < dd.size()) {
    if (ra[i].value < dd[j].value)
      ++i;
    else if (dd[j].value < ra[i].value)
      ++j;
    else
      s += ra[i++].count * dd[j++].count;
  }

  ShiftSquareCount out;
  out.solutions = s;
  out.cs_upper = ra.moment(2) * dd.moment(2);
  mpz_class a2, b4;
  mpz_ui_pow_ui(a2.get_mpz_t(), static_cast<unsigned long>(a.size()), 2);
  mpz_ui_pow_ui(b4.get_mpz_t(), static_cast<unsigned long>(b.size()), 4);
  out.cs_lower = Rational(a2 * b4, mpz_class(static_cast<unsigned long>(shift_square_image(a, b).size())));
  return out;
}

}  // namespace explab
