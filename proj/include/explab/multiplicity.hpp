#pragma once

#include <gmpxx.h>

#include <vector>

#include "explab/rational.hpp"

namespace explab {

/// A representation function as data: value -> number of generating tuples.
/// Entries are sorted by value; every count is >= 1, and the counts sum to
/// the number of tuples enumerated.
class MultiplicityTable {
 public:
  struct Entry {
    Rational value;
    mpz_class count;
  };

  MultiplicityTable() = default;

  // Sorts by value and merges duplicates by summing counts.
  static MultiplicityTable from_entries(std::vector<Entry> entries);

  // Trusted: entries already sorted by value with no duplicates.
  static MultiplicityTable from_sorted(std::vector<Entry> entries);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  // Count for a value, 0 if absent.
  mpz_class count_of(const Rational& v) const;

  mpz_class total() const;                    // sum of counts
  mpz_class moment(unsigned long k) const;    // sum of count^k
  mpz_class max_count() const;

 private:
  std::vector<Entry> entries_;
};

}  // namespace explab
