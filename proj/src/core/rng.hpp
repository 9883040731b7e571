#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace domlab {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer (Stafford mix13).
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

// Seed of a numbered substream (trial index, attempt index, ...).
// Trial i of an experiment draws from derive_seed(master_seed, i), so
// results do not depend on which thread runs the trial.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix64((master ^ kGoldenGamma) + stream * 0xd6e8feb86659fd93ULL);
}

// Counter-based splitmix64 stream. Pure function of (seed, counter),
// no hidden state beyond the counter.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(seed) {}

  std::uint64_t next_u64() { return mix64(key_ + ++counter_ * kGoldenGamma); }

  // Uniform in [0,1), 53 bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_unit() < p; }

  // Failures before the first success of a Bernoulli(p) sequence,
  // with log_one_minus_p = log1p(-p) < 0 precomputed by the caller.
  // Saturates at UINT64_MAX for astronomically long gaps.
  std::uint64_t geometric_skip(double log_one_minus_p) {
    const double u = next_unit();
    const double g = std::floor(std::log1p(-u) / log_one_minus_p);
    if (!(g < 18446744073709549568.0)) {  // largest double below 2^64
      return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(g);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace domlab
