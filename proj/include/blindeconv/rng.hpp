#pragma once

#include "blindeconv/types.hpp"

#include <cstdint>
#include <random>

namespace blindeconv {

/// Counter-keyed random stream. A stream is identified by (seed, stream_id)
/// and produces the same draws on every platform and under any thread
/// schedule, as long as each stream is owned by exactly one consumer.
///
/// The generator is std::mt19937_64 (fully specified by the standard).
/// Gaussian variates use an explicit Box-Muller transform instead of
/// std::normal_distribution, whose algorithm is implementation-defined.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t bounded(std::uint64_t n);

  /// Standard real Gaussian N(0, 1).
  double normal();

  /// Standard complex Gaussian CN(0, 1): real and imaginary parts are
  /// independent N(0, 1/2), so E|z|^2 = 1.
  Complex cnormal() {
    const double re = normal();
    const double im = normal();
    return Complex(re * kInvSqrt2, im * kInvSqrt2);
  }

 private:
  static constexpr double kInvSqrt2 = 0.70710678118654752440;

  std::mt19937_64 gen_;
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// n i.i.d. CN(0, 1) entries.
CVec sample_complex_gaussian(RngStream& rng, Index n);

}  // namespace blindeconv
