#include "explab/structure.hpp"

#include <algorithm>
#include <map>

#include "explab/energy.hpp"
#include "explab/errors.hpp"
#include "explab/setops.hpp"

namespace explab {

namespace {

// Dyadic class index: j with 2^{j-1} <= c < 2^j, i.e. the bit length of c.
long dyadic_class(const mpz_class& c) {
  return static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2));
}

Rational pow2(long j) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(j));
  return Rational(p);
}

}  // namespace

DUpperResult d_upper(const RSet& a, const std::vector<RSet>& candidates) {
  if (a.empty()) throw DomainError("d bound of an empty set");
  if (candidates.empty()) throw DomainError("d bound needs at least one candidate set");
  DUpperResult best;
  bool have = false;
  for (const RSet& c : candidates) {
    if (c.empty()) throw DomainError("empty candidate set");
    if (c.contains_zero()) throw DomainError("candidate set containing 0");
    RSet ac = binary_image(a, c, BinaryOp::Product);
    mpz_class num = mpz_class(static_cast<unsigned long>(ac.size()));
    num *= num;
    mpz_class den = mpz_class(static_cast<unsigned long>(a.size())) *
                    mpz_class(static_cast<unsigned long>(c.size()));
    Rational bound(num, den);
    if (!have || bound < best.bound) {
      best.bound = bound;
      best.best = c;
      have = true;
    }
  }
  return best;
}

Rational dstar_witness_check(const RSet& a, const RSet& q, const RSet& r, const Rational& t) {
  if (a.empty() || q.empty() || r.empty()) throw DomainError("witness over an empty set");
  if (!t.is_positive()) throw DomainError("witness threshold t must be positive");
  if (q.contains_zero()) throw ValidationError("witness set Q contains 0");
  if (r.contains_zero()) throw ValidationError("witness set R contains 0");
  if (std::max(q.size(), r.size()) < a.size())
    throw ValidationError("witness size condition fails: max{|Q|,|R|} < |A|");
  // |Q cap aR^{-1}| = #{r in R : a/r in Q}.
  for (const Rational& av : a) {
    long hits = 0;
    if (!av.is_zero())
      for (const Rational& rv : r)
        if (q.contains(av / rv)) ++hits;
    if (Rational(hits) < t)
      throw ValidationError("witness intersection condition fails at a = " + av.str() + " (" +
                            std::to_string(hits) + " < " + t.str() + ")");
  }
  mpz_class qq = mpz_class(static_cast<unsigned long>(q.size()));
  mpz_class rr = mpz_class(static_cast<unsigned long>(r.size()));
  Rational num{mpz_class(qq * qq * rr * rr)};
  Rational den = Rational(static_cast<long>(a.size())) * t.pow(3);
  return num / den;
}

DyadicWitness dyadic_pigeonhole(const RSet& a) {
  if (a.empty()) throw DomainError("pigeonhole over an empty set");
  if (a.contains_zero()) throw DomainError("pigeonhole requires 0 not in A");

  // Stage 1: r(x) = |A cap xA| is the ratio representation function.
  MultiplicityTable ratio = rep_table(a, a, BinaryOp::Ratio);
  mpz_class estar = ratio.moment(2);
  mpz_class n2 = mpz_class(static_cast<unsigned long>(a.size()));
  n2 *= n2;
  // Retention threshold E*(A) / (2|A|^2); compare as c * 2|A|^2 >= E*.
  mpz_class thr_den = 2 * n2;

  std::map<long, mpz_class> mass;  // class j -> sum of r^2 over retained x
  for (const auto& e : ratio) {
    if (e.count * thr_den < estar) continue;
    mass[dyadic_class(e.count)] += e.count * e.count;
  }
  long best_j = 0;
  mpz_class best_mass = -1;
  for (const auto& [j, m] : mass)
    if (m > best_mass) {  // ties resolve to the lowest class
      best_j = j;
      best_mass = m;
    }

  DyadicWitness w;
  w.class_count_tau = static_cast<long>(mass.size());
  w.tau = pow2(best_j - 1);
  Rational two_tau = pow2(best_j);
  {
    std::vector<Rational> members;
    for (const auto& e : ratio) {
      Rational c{e.count};
      if (w.tau <= c && c < two_tau) members.push_back(e.value);
    }
    w.s_tau = RSet::from_sorted_unique(std::move(members));
  }

  // Stage 2: class the values |A cap a S_tau| by the sum they carry.
  std::vector<long> hits(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const Rational& s : w.s_tau)
      if (a.contains(a[i] * s)) ++hits[i];

  std::map<long, mpz_class> sums;  // class j -> sum of |A cap a S_tau|
  for (long h : hits) {
    if (h == 0) continue;
    sums[dyadic_class(mpz_class(h))] += h;
  }
  long best_jt = 0;
  mpz_class best_sum = -1;
  for (const auto& [j, m] : sums)
    if (m > best_sum) {
      best_jt = j;
      best_sum = m;
    }

  w.class_count_t = static_cast<long>(sums.size());
  w.t = pow2(best_jt - 1);
  Rational two_t = pow2(best_jt);
  {
    std::vector<Rational> members;
    for (std::size_t i = 0; i < a.size(); ++i) {
      Rational h(hits[i]);
      if (w.t <= h && h < two_t) members.push_back(a[i]);
    }
    w.a_prime = RSet::from_sorted_unique(std::move(members));
  }

  mpz_class s2 = mpz_class(static_cast<unsigned long>(w.s_tau.size()));
  s2 *= s2;
  Rational num{mpz_class(n2 * s2)};
  Rational den = Rational(static_cast<long>(w.a_prime.size())) * w.t.pow(3);
  w.dstar_bound = num / den;
  return w;
}

mpz_class tail_count(const RSet& a, const RSet& b, const Rational& tau) {
  if (tau < Rational(1)) throw DomainError("tail threshold must be at least 1");
  MultiplicityTable t = rep_table(a, b, BinaryOp::Difference);
  mpz_class n = 0;
  for (const auto& e : t)
    if (Rational(e.count) >= tau) ++n;
  return n;
}

}  // namespace explab
