#include "explab/rset.hpp"

#include <algorithm>

namespace explab {

RSet::RSet(std::vector<Rational> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

RSet RSet::from_sorted_unique(std::vector<Rational> elems) {
  RSet s;
  s.elems_ = std::move(elems);
  return s;
}

bool RSet::contains(const Rational& v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

bool RSet::contains_zero() const {
  return contains(Rational(0));
}

std::optional<std::vector<std::int64_t>> RSet::as_int64(std::int64_t limit) const {
  std::vector<std::int64_t> out;
  out.reserve(elems_.size());
  for (const Rational& r : elems_) {
    auto v = r.as_int64(limit);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

KeySet::KeySet(std::vector<LogKey> keys) : keys_(std::move(keys)) {
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
}

}  // namespace explab
