#include "explab/multiplicity.hpp"

#include <algorithm>

namespace explab {

MultiplicityTable MultiplicityTable::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.value < b.value; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (Entry& e : entries) {
    if (!merged.empty() && merged.back().value == e.value)
      merged.back().count += e.count;
    else
      merged.push_back(std::move(e));
  }
  return from_sorted(std::move(merged));
}

MultiplicityTable MultiplicityTable::from_sorted(std::vector<Entry> entries) {
  MultiplicityTable t;
  t.entries_ = std::move(entries);
  return t;
}

mpz_class MultiplicityTable::count_of(const Rational& v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, const Rational& x) { return e.value < x; });
  if (it != entries_.end() && it->value == v) return it->count;
  return 0;
}

mpz_class MultiplicityTable::total() const {
  mpz_class s = 0;
  for (const Entry& e : entries_) s += e.count;
  return s;
}

mpz_class MultiplicityTable::moment(unsigned long k) const {
  mpz_class s = 0, p;
  for (const Entry& e : entries_) {
    mpz_pow_ui(p.get_mpz_t(), e.count.get_mpz_t(), k);
    s += p;
  }
  return s;
}

mpz_class MultiplicityTable::max_count() const {
  mpz_class m = 0;
  for (const Entry& e : entries_)
    if (e.count > m) m = e.count;
  return m;
}

}  // namespace explab
