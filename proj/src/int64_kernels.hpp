// Internal: machine-word fast paths shared by the set-image and counting
// kernels. Sets whose elements are int64 integers within the per-op limits
// are processed with native arithmetic; everything else takes the exact
// mpq path. Results are identical by construction.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>

namespace explab::detail {

// |a|,|b| <= kAddLimit keeps a+b and a-b inside int64.
inline constexpr std::int64_t kAddLimit = std::int64_t(1) << 61;
// |a|,|b| <= kMulLimit keeps a*b inside int64 (floor(sqrt(2^63)) - 1).
inline constexpr std::int64_t kMulLimit = 3037000498LL;

// Reduced fraction with positive denominator.
struct Frac64 {
  std::int64_t p;
  std::int64_t q;
  friend bool operator==(const Frac64&, const Frac64&) = default;
};

inline Frac64 reduce64(std::int64_t a, std::int64_t b) {
  if (a == 0) return {0, 1};
  std::int64_t g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
  std::int64_t p = a / g, q = b / g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

// Order by rational value; exact via 128-bit cross multiplication.
inline bool frac_less(const Frac64& x, const Frac64& y) {
  return static_cast<__int128>(x.p) * y.q < static_cast<__int128>(y.p) * x.q;
}

}  // namespace explab::detail
