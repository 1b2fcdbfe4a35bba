#ifndef STEINER_RNG_HPP
#define STEINER_RNG_HPP

#include <cstdint>
#include <cmath>

namespace steiner {

// Deterministic generator with cheap independent substreams. All randomized
// components draw through this wrapper so that a fixed master seed gives
// bit-identical runs regardless of platform or standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(splitmix(seed + 0x9e3779b97f4a7c15ULL)) {}

  // Independent stream for (seed, salt): iteration k of a multistart run uses
  // stream(master, k) so its draws do not depend on earlier iterations' work.
  static Rng stream(std::uint64_t seed, std::uint64_t salt) {
    return Rng(splitmix(seed ^ splitmix(salt + 0x632be59bd9b4e019ULL)));
  }

  std::uint64_t next_u64() {
    // xorshift64* on a splitmix-initialized state
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dULL;
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi] inclusive.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next_u64());  // full range
    return lo + static_cast<std::int64_t>(bounded(span));
  }

  double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  bool next_bool() { return (next_u64() >> 63) != 0; }

 private:
  // Debiased multiply-shift (Lemire).
  std::uint64_t bounded(std::uint64_t n) {
    std::uint64_t x = next_u64();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
    std::uint64_t lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      std::uint64_t t = (0 - n) % n;
      while (lo < t) {
        x = next_u64();
        m = static_cast<unsigned __int128>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t state_;
};

}  // namespace steiner

#endif
