#pragma once

#include <cstdint>
#include <limits>

namespace dbis {

// SplitMix64 (Steele, Lea, Flood 2014). This is the only generator used in the
// library; its output sequence is fully determined by the 64-bit state, so
// seeded runs reproduce bit-for-bit on every platform.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, bound), bound >= 1. Rejection sampling keeps it
  // exactly uniform.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    for (;;) {
      const std::uint64_t r = (*this)();
      if (r < limit) return r % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  bool bernoulli(double prob) { return uniform() < prob; }

  // Exactly probability 1/den.
  bool one_in(std::uint64_t den) { return below(den) == 0; }

 private:
  std::uint64_t state_;
};

// Independent stream for trial `index` under `seed`. Depends only on the pair,
// never on which worker evaluates the trial.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t a = SplitMix64::mix(seed ^ 0x6a09e667f3bcc909ULL);
  const std::uint64_t b = SplitMix64::mix(index + 0x3c6ef372fe94f82bULL);
  return SplitMix64(SplitMix64::mix(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2))));
}

}  // namespace dbis
