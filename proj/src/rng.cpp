#include "blindeconv/rng.hpp"

#include <cmath>

namespace blindeconv {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  // seed_seq output is fully specified, so identical (seed, stream) pairs
  // give identical generator states everywhere.
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id & 0xffffffffu),
                    static_cast<std::uint32_t>(stream_id >> 32)};
  gen_.seed(seq);
}

std::uint64_t RngStream::bounded(std::uint64_t n) {
  require(n >= 1, "bounded: n must be >= 1");
  if (n == 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % n;
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 shifted into (0, 1] so the log is finite.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

CVec sample_complex_gaussian(RngStream& rng, Index n) {
  require(n >= 1, "sample_complex_gaussian: n must be >= 1");
  CVec v(n);
  for (Index i = 0; i < n; ++i) v[i] = rng.cnormal();
  return v;
}

}  // namespace blindeconv
