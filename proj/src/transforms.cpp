#include "blindeconv/transforms.hpp"

#include <cmath>
#include <unordered_map>
#include <vector>

namespace blindeconv {

namespace {

// Half-length twiddle table exp(-2*pi*i*j/n), j < n/2, cached per length.
// Tabulated values come straight from std::polar rather than repeated
// multiplication, which would drift past the 1e-12 round-trip budget at
// n = 2^16.
const std::vector<Complex>& twiddles(Index n) {
  thread_local std::unordered_map<Index, std::vector<Complex>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Complex> w(static_cast<std::size_t>(n / 2));
  for (Index j = 0; j < n / 2; ++j)
    w[static_cast<std::size_t>(j)] =
        std::polar(1.0, -2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n));
  return cache.emplace(n, std::move(w)).first->second;
}

void bit_reverse_permute(CVec& a) {
  const Index n = a.size();
  for (Index i = 1, j = 0; i < n; ++i) {
    Index bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

}  // namespace

CVec fft_unitary(const CVec& v, bool inverse) {
  const Index n = v.size();
  require(is_pow2(n), "fft_unitary: length must be a power of two");
  CVec a = v;
  if (n == 1) return a;
  bit_reverse_permute(a);
  const auto& w = twiddles(n);
  for (Index len = 2; len <= n; len <<= 1) {
    const Index stride = n / len;
    for (Index i = 0; i < n; i += len) {
      for (Index j = 0; j < len / 2; ++j) {
        Complex t = w[static_cast<std::size_t>(j * stride)];
        if (inverse) t = std::conj(t);
        const Complex u = a[i + j];
        const Complex s = a[i + j + len / 2] * t;
        a[i + j] = u + s;
        a[i + j + len / 2] = u - s;
      }
    }
  }
  a *= 1.0 / std::sqrt(static_cast<double>(n));
  return a;
}

CVec fwht_unitary(const CVec& v) {
  const Index n = v.size();
  require(is_pow2(n), "fwht_unitary: length must be a power of two");
  CVec a = v;
  for (Index len = 1; len < n; len <<= 1) {
    for (Index i = 0; i < n; i += len << 1) {
      for (Index j = i; j < i + len; ++j) {
        const Complex u = a[j];
        const Complex s = a[j + len];
        a[j] = u + s;
        a[j + len] = u - s;
      }
    }
  }
  a *= 1.0 / std::sqrt(static_cast<double>(n));
  return a;
}

}  // namespace blindeconv
