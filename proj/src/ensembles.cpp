#include "blindeconv/ensembles.hpp"

#include "blindeconv/transforms.hpp"

#include <cmath>
#include <numeric>

namespace blindeconv {

PartialDftB::PartialDftB(Index L, Index K) : L_(L), K_(K) {
  require(K >= 1 && L >= 1, "partial DFT B: dimensions must be positive");
  require(K <= L, "partial DFT B: K must not exceed L");
  if (!is_pow2(L)) {
    dense_.resize(L, K);
    const double scale = 1.0 / std::sqrt(static_cast<double>(L));
    for (Index l = 0; l < L; ++l)
      for (Index k = 0; k < K; ++k)
        dense_(l, k) = scale * std::polar(1.0, -2.0 * M_PI * static_cast<double>(l) *
                                                   static_cast<double>(k) / static_cast<double>(L));
  }
}

CVec PartialDftB::apply(const CVec& h) const {
  require(h.size() == K_, "partial DFT B: input length must equal K");
  if (!uses_fft()) return dense_ * h;
  CVec padded = CVec::Zero(L_);
  padded.head(K_) = h;
  return fft_unitary(padded, /*inverse=*/false);
}

CVec PartialDftB::adjoint(const CVec& w) const {
  require(w.size() == L_, "partial DFT B adjoint: input length must equal L");
  if (!uses_fft()) return dense_.adjoint() * w;
  return fft_unitary(w, /*inverse=*/true).head(K_);
}

PartialDftB make_partial_dft_b(Index L, Index K) { return PartialDftB(L, K); }

CVec GaussianA::apply(const CVec& x) const {
  require(x.size() == N(), "Gaussian A: input length must equal N");
  return mat * x;
}

CVec GaussianA::adjoint(const CVec& z) const {
  require(z.size() == L(), "Gaussian A adjoint: input length must equal L");
  return mat.adjoint() * z;
}

GaussianA make_gaussian_a(Index L, Index N, RngStream& rng) {
  require(L >= 1 && N >= 1, "Gaussian A: dimensions must be positive");
  GaussianA a;
  a.mat.resize(L, N);
  for (Index j = 0; j < N; ++j)
    for (Index i = 0; i < L; ++i) a.mat(i, j) = rng.cnormal();
  return a;
}

CVec PartialHadamardA::apply(const CVec& x) const {
  require(x.size() == N(), "partial Hadamard A: input length must equal N");
  CVec scattered = CVec::Zero(L_);
  for (Index j = 0; j < N(); ++j) scattered[columns[static_cast<std::size_t>(j)]] = x[j];
  // H * u = sqrt(L) * fwht_unitary(u)
  CVec w = fwht_unitary(scattered) * std::sqrt(static_cast<double>(L_));
  for (Index l = 0; l < L_; ++l) w[l] *= signs[l];
  return w;
}

CVec PartialHadamardA::adjoint(const CVec& z) const {
  require(z.size() == L_, "partial Hadamard A adjoint: input length must equal L");
  CVec flipped(L_);
  for (Index l = 0; l < L_; ++l) flipped[l] = signs[l] * z[l];
  const CVec w = fwht_unitary(flipped) * std::sqrt(static_cast<double>(L_));
  CVec out(N());
  for (Index j = 0; j < N(); ++j) out[j] = w[columns[static_cast<std::size_t>(j)]];
  return out;
}

CMat PartialHadamardA::materialize() const {
  CMat dense(L_, N());
  for (Index j = 0; j < N(); ++j) {
    CVec e = CVec::Zero(N());
    e[j] = 1.0;
    dense.col(j) = apply(e);
  }
  return dense;
}

PartialHadamardA make_partial_hadamard_a(Index L, Index N, RngStream& rng) {
  require(is_pow2(L), "partial Hadamard A: L must be a power of two");
  require(N >= 1 && N <= L, "partial Hadamard A: need 1 <= N <= L");
  PartialHadamardA a;
  a.L_ = L;
  a.signs.resize(L);
  for (Index l = 0; l < L; ++l) a.signs[l] = (rng.next_u64() >> 63) ? 1.0 : -1.0;
  // Uniform N-subset via partial Fisher-Yates.
  std::vector<Index> pool(static_cast<std::size_t>(L));
  std::iota(pool.begin(), pool.end(), Index{0});
  a.columns.resize(static_cast<std::size_t>(N));
  for (Index j = 0; j < N; ++j) {
    const auto pick = static_cast<std::size_t>(j) +
                      static_cast<std::size_t>(rng.bounded(static_cast<std::uint64_t>(L - j)));
    std::swap(pool[static_cast<std::size_t>(j)], pool[pick]);
    a.columns[static_cast<std::size_t>(j)] = pool[static_cast<std::size_t>(j)];
  }
  return a;
}

SubspaceOperators SubspaceOperators::make_gaussian(Index L, Index K, Index N, RngStream& rng) {
  return SubspaceOperators(PartialDftB(L, K), make_gaussian_a(L, N, rng));
}

SubspaceOperators SubspaceOperators::make_partial_hadamard(Index L, Index K, Index N,
                                                           RngStream& rng) {
  return SubspaceOperators(PartialDftB(L, K), make_partial_hadamard_a(L, N, rng));
}

Index SubspaceOperators::N() const {
  return std::visit([](const auto& a) { return a.N(); }, a_);
}

AKind SubspaceOperators::a_kind() const {
  return std::holds_alternative<GaussianA>(a_) ? AKind::Gaussian : AKind::PartialHadamard;
}

CVec SubspaceOperators::apply_a(const CVec& x) const {
  return std::visit([&](const auto& a) { return a.apply(x); }, a_);
}

CVec SubspaceOperators::adjoint_a(const CVec& z) const {
  return std::visit([&](const auto& a) { return a.adjoint(z); }, a_);
}

CMat SubspaceOperators::dense_a() const {
  if (const auto* g = std::get_if<GaussianA>(&a_)) return g->mat;
  return std::get<PartialHadamardA>(a_).materialize();
}

}  // namespace blindeconv
