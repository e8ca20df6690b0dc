#include "explab/reference.hpp"

#include <map>
#include <set>

#include "explab/errors.hpp"

namespace explab::ref {

namespace {

Rational apply(const Rational& x, const Rational& y, BinaryOp op) {
  switch (op) {
    case BinaryOp::Sum: return x + y;
    case BinaryOp::Difference: return x - y;
    case BinaryOp::Product: return x * y;
    case BinaryOp::Ratio: return x / y;
  }
  throw DomainError("unknown op");
}

RSet to_rset(const std::set<Rational>& s) {
  return RSet::from_sorted_unique(std::vector<Rational>(s.begin(), s.end()));
}

}  // namespace

RSet binary_image(const RSet& a, const RSet& b, BinaryOp op) {
  std::set<Rational> out;
  for (const Rational& x : a)
    for (const Rational& y : b) out.insert(apply(x, y, op));
  return to_rset(out);
}

RSet composite_image(const RSet& a, CompositeKind kind) {
  std::set<Rational> out;
  switch (kind) {
    case CompositeKind::ProdDiff:
      for (const Rational& x : a)
        for (const Rational& y : a)
          for (const Rational& z : a) out.insert(x * (y - z));
      break;
    case CompositeKind::ProdSum:
      for (const Rational& x : a)
        for (const Rational& y : a)
          for (const Rational& z : a) out.insert(x * (y + z));
      break;
    case CompositeKind::SumTimesSum:
      for (const Rational& x : a)
        for (const Rational& y : a)
          for (const Rational& z : a)
            for (const Rational& w : a) out.insert((x + y) * (z + w));
      break;
    case CompositeKind::ProdFourSum:
      for (const Rational& x : a)
        for (const Rational& y : a)
          for (const Rational& z : a)
            for (const Rational& w : a)
              for (const Rational& v : a) out.insert(x * (y + z + w + v));
      break;
  }
  return to_rset(out);
}

RSet ungar_image(const RSet& a) {
  std::set<Rational> out;
  for (const Rational& x : a)
    for (const Rational& y : a)
      for (const Rational& z : a)
        for (const Rational& w : a)
          if (z != w) out.insert((x - y) / (z - w));
  return to_rset(out);
}

RSet balog_image(const RSet& a) {
  std::set<Rational> out;
  for (const Rational& x : a)
    for (const Rational& y : a)
      for (const Rational& z : a)
        for (const Rational& w : a) out.insert((x + y) / (z + w));
  return to_rset(out);
}

RSet jones_image(const RSet& a) {
  std::set<Rational> out;
  for (const Rational& x : a)
    for (const Rational& y : a)
      for (const Rational& z : a)
        if (x != y) out.insert((x - z) / (x - y));
  return to_rset(out);
}

RSet shift_square_image(const RSet& a, const RSet& b) {
  std::set<Rational> out;
  for (const Rational& x : a)
    for (const Rational& y : b)
      for (const Rational& z : b) out.insert(x + (y + z) * (y + z));
  return to_rset(out);
}

KeySet five_var_image(const RSet& a) {
  std::vector<LogKey> keys;
  for (const Rational& a1 : a)
    for (const Rational& a2 : a)
      for (const Rational& a3 : a)
        for (const Rational& a4 : a)
          for (const Rational& a5 : a) keys.push_back(logkey_make(a1 + a2 + a3 + a4, a5));
  return KeySet(std::move(keys));
}

MultiplicityTable rep_table(const RSet& a, const RSet& b, BinaryOp op) {
  std::map<Rational, mpz_class> counts;
  for (const Rational& x : a)
    for (const Rational& y : b) ++counts[apply(x, y, op)];
  std::vector<MultiplicityTable::Entry> entries;
  for (const auto& [v, c] : counts) entries.push_back({v, c});
  return MultiplicityTable::from_sorted(std::move(entries));
}

mpz_class energy(const RSet& a, const RSet& b, BinaryOp op) {
  mpz_class n = 0;
  for (const Rational& a1 : a)
    for (const Rational& b1 : b)
      for (const Rational& a2 : a)
        for (const Rational& b2 : b)
          if (apply(a1, b1, op) == apply(a2, b2, op)) ++n;
  return n;
}

mpz_class third_moment(const RSet& a) {
  mpz_class n = 0;
  for (const Rational& a1 : a)
    for (const Rational& a2 : a)
      for (const Rational& a3 : a)
        for (const Rational& a4 : a)
          for (const Rational& a5 : a)
            for (const Rational& a6 : a)
              if (a1 - a2 == a3 - a4 && a3 - a4 == a5 - a6) ++n;
  return n;
}

mpz_class quartic_count_squares(const RSet& a) {
  std::vector<Rational> sq;  // (x - y)^2 over ordered pairs
  for (const Rational& x : a)
    for (const Rational& y : a) sq.push_back((x - y) * (x - y));
  mpz_class n = 0;
  for (const Rational& p : sq)
    for (const Rational& q : sq)
      for (const Rational& r : sq)
        for (const Rational& s : sq)
          if (p + q == r + s) ++n;
  return n;
}

mpz_class quartic_count_products(const RSet& a) {
  std::vector<Rational> d;
  for (const Rational& x : a)
    for (const Rational& y : a) d.push_back(x - y);
  mpz_class n = 0;
  for (const Rational& p : d)
    for (const Rational& q : d)
      for (const Rational& r : d)
        for (const Rational& s : d)
          if (p * q == r * s) ++n;
  return n;
}

mpz_class shift_square_solutions(const RSet& a, const RSet& b) {
  mpz_class n = 0;
  for (const Rational& a1 : a)
    for (const Rational& a2 : a)
      for (const Rational& b1 : b)
        for (const Rational& b2 : b)
          for (const Rational& b3 : b)
            for (const Rational& b4 : b)
              if (a1 + (b1 + b2) * (b1 + b2) == a2 + (b3 + b4) * (b3 + b4)) ++n;
  return n;
}

mpz_class tail_count(const RSet& a, const RSet& b, const Rational& tau) {
  std::map<Rational, long> counts;
  for (const Rational& x : a)
    for (const Rational& y : b) ++counts[x - y];
  mpz_class n = 0;
  for (const auto& [v, c] : counts)
    if (Rational(c) >= tau) ++n;
  return n;
}

DyadicWitness dyadic_pigeonhole(const RSet& a) {
  // Step 1: r(x) = |A cap xA| over x in A/A.
  std::map<Rational, long> r;
  for (const Rational& a1 : a)
    for (const Rational& a2 : a) ++r[a1 / a2];
  mpz_class estar = 0;
  for (const auto& [x, c] : r) estar += mpz_class(c) * c;
  mpz_class two_n2 = 2 * mpz_class(static_cast<unsigned long>(a.size())) *
                     mpz_class(static_cast<unsigned long>(a.size()));

  // Step 2 and 3: drop light x, split the rest into classes [2^{j-1}, 2^j),
  // keep the class with the largest sum of r^2 (lowest class on ties).
  std::map<long, mpz_class> mass;
  for (const auto& [x, c] : r) {
    if (mpz_class(c) * two_n2 < estar) continue;
    long j = 0;
    for (long v = c; v > 0; v >>= 1) ++j;
    mass[j] += mpz_class(c) * c;
  }
  long best_j = 0;
  mpz_class best = -1;
  for (const auto& [j, m] : mass)
    if (m > best) {
      best = m;
      best_j = j;
    }
  long tau_lo = 1L << (best_j - 1);

  DyadicWitness w;
  w.class_count_tau = static_cast<long>(mass.size());
  w.tau = Rational(tau_lo);
  std::vector<Rational> members;
  for (const auto& [x, c] : r)
    if (c >= tau_lo && c < 2 * tau_lo) members.push_back(x);
  w.s_tau = RSet(std::move(members));

  // Step 4: the same classing over |A cap a S_tau|, by plain sums.
  std::map<Rational, long> hits;
  for (const Rational& av : a) {
    long h = 0;
    for (const Rational& s : w.s_tau)
      if (a.contains(av * s)) ++h;
    hits[av] = h;
  }
  std::map<long, long> sums;
  for (const auto& [av, h] : hits) {
    if (h == 0) continue;
    long j = 0;
    for (long v = h; v > 0; v >>= 1) ++j;
    sums[j] += h;
  }
  long best_jt = 0;
  long best_sum = -1;
  for (const auto& [j, m] : sums)
    if (m > best_sum) {
      best_sum = m;
      best_jt = j;
    }
  long t_lo = 1L << (best_jt - 1);

  w.class_count_t = static_cast<long>(sums.size());
  w.t = Rational(t_lo);
  std::vector<Rational> prime;
  for (const auto& [av, h] : hits)
    if (h >= t_lo && h < 2 * t_lo) prime.push_back(av);
  w.a_prime = RSet(std::move(prime));

  // Step 5.
  mpz_class n2 = mpz_class(static_cast<unsigned long>(a.size())) *
                 mpz_class(static_cast<unsigned long>(a.size()));
  mpz_class s2 = mpz_class(static_cast<unsigned long>(w.s_tau.size())) *
                 mpz_class(static_cast<unsigned long>(w.s_tau.size()));
  w.dstar_bound = Rational(mpz_class(n2 * s2)) /
                  (Rational(static_cast<long>(w.a_prime.size())) * w.t.pow(3));
  return w;
}

}  // namespace explab::ref
