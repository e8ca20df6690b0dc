#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "explab/logkey.hpp"
#include "explab/rational.hpp"

namespace explab {

/// A finite set of rationals, stored strictly sorted with no duplicates.
class RSet {
 public:
  RSet() = default;
  // Sorts and removes duplicates.
  explicit RSet(std::vector<Rational> elems);

  // Trusted constructor for vectors already strictly sorted.
  static RSet from_sorted_unique(std::vector<Rational> elems);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const Rational& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<Rational>& elems() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(const Rational& v) const;
  bool contains_zero() const;
  bool all_positive() const { return !empty() && elems_.front().is_positive(); }

  // All elements as int64 integers bounded by |v| <= limit, when possible.
  // Kernels use this to dispatch onto machine-word fast paths.
  std::optional<std::vector<std::int64_t>> as_int64(std::int64_t limit) const;

  friend bool operator==(const RSet& a, const RSet& b) { return a.elems_ == b.elems_; }

 private:
  std::vector<Rational> elems_;
};

/// A set of LogKeys, deduplicated under canonical key equality.
class KeySet {
 public:
  KeySet() = default;
  explicit KeySet(std::vector<LogKey> keys);

  std::size_t size() const { return keys_.size(); }
  const LogKey& operator[](std::size_t i) const { return keys_[i]; }
  auto begin() const { return keys_.begin(); }
  auto end() const { return keys_.end(); }

  friend bool operator==(const KeySet& a, const KeySet& b) { return a.keys_ == b.keys_; }

 private:
  std::vector<LogKey> keys_;
};

}  // namespace explab
