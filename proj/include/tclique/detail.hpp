#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>

namespace tclique::detail {

// splitmix64: the fixed pseudo-random stream used for reproducible corpora.
// state advances by the golden-gamma constant; output is the finalizer of
// Steele/Lea/Burton. Identical seeds produce identical streams on every
// platform, unlike std::<distribution> which is implementation-defined.
class Splitmix64 {
 public:
  explicit Splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with 53 bits of precision
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Integer-exponent power by repeated multiplication. Exact for small integer
// bases, which the closed-form/ratio tests rely on (std::pow gives no such
// guarantee).
inline double ipow(double base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  double result = 1.0;
  double acc = base;
  while (exp > 0) {
    if (exp & 1) result *= acc;
    exp >>= 1;
    if (exp > 0) acc *= acc;
  }
  return result;
}

// C(n, k) as a double; exact below 2^53.
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  // the multiplicative form stays integral at every step up to rounding;
  // snap to the nearest integer to remove the last-ulp noise
  if (result < 9007199254740992.0) {  // 2^53
    return static_cast<double>(static_cast<std::uint64_t>(result + 0.5));
  }
  return result;
}

inline int popcount_words(std::span<const std::uint64_t> words) {
  int c = 0;
  for (std::uint64_t w : words) c += std::popcount(w);
  return c;
}

template <typename F>
inline void for_each_bit(std::span<const std::uint64_t> words, F&& f) {
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    std::uint64_t w = words[wi];
    while (w != 0) {
      const int b = std::countr_zero(w);
      f(static_cast<int>(wi * 64 + static_cast<std::size_t>(b)));
      w &= w - 1;
    }
  }
}

}  // namespace tclique::detail
