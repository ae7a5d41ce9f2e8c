#pragma once

#include "blindeconv/rng.hpp"
#include "blindeconv/types.hpp"

#include <variant>
#include <vector>

namespace blindeconv {

/// B: the first K columns of the L x L unitary DFT matrix, applied
/// matrix-free. B*B = I_K. For power-of-two L both directions are one FFT;
/// otherwise a dense DFT block is stored (the Gaussian experiment grids use
/// non-power-of-two L).
class PartialDftB {
 public:
  PartialDftB(Index L, Index K);

  Index L() const { return L_; }
  Index K() const { return K_; }

  /// Bh: C^K -> C^L (zero-pad, unitary DFT).
  CVec apply(const CVec& h) const;
  /// B*w: C^L -> C^K (inverse unitary DFT, keep the first K entries).
  CVec adjoint(const CVec& w) const;

  bool uses_fft() const { return dense_.size() == 0; }

 private:
  Index L_, K_;
  CMat dense_;  // empty when L is a power of two
};

/// A: L x N complex Gaussian, entries CN(0, 1). Dense storage.
struct GaussianA {
  CMat mat;

  Index L() const { return mat.rows(); }
  Index N() const { return mat.cols(); }
  CVec apply(const CVec& x) const;
  CVec adjoint(const CVec& z) const;
};

/// A = D * H[:, S]: N distinct columns of the +-1 Sylvester Hadamard matrix,
/// sign-flipped rowwise by the random diagonal D. Entries have magnitude 1
/// exactly; both directions cost one FWHT.
struct PartialHadamardA {
  Index L_ = 0;
  Eigen::VectorXd signs;         // +-1, length L
  std::vector<Index> columns;    // N distinct indices in [0, L)

  Index L() const { return L_; }
  Index N() const { return static_cast<Index>(columns.size()); }
  CVec apply(const CVec& x) const;
  CVec adjoint(const CVec& z) const;
  CMat materialize() const;      // dense L x N, for tests and small cases
};

PartialDftB make_partial_dft_b(Index L, Index K);
GaussianA make_gaussian_a(Index L, Index N, RngStream& rng);
PartialHadamardA make_partial_hadamard_a(Index L, Index N, RngStream& rng);

enum class AKind { Gaussian, PartialHadamard };

/// The measurement pair (B, A) of the subspace model y = diag(Bh) conj(Ax).
class SubspaceOperators {
 public:
  static SubspaceOperators make_gaussian(Index L, Index K, Index N, RngStream& rng);
  static SubspaceOperators make_partial_hadamard(Index L, Index K, Index N, RngStream& rng);

  Index L() const { return b_.L(); }
  Index K() const { return b_.K(); }
  Index N() const;
  AKind a_kind() const;

  const PartialDftB& b() const { return b_; }

  CVec apply_b(const CVec& h) const { return b_.apply(h); }
  CVec adjoint_b(const CVec& w) const { return b_.adjoint(w); }
  CVec apply_a(const CVec& x) const;
  CVec adjoint_a(const CVec& z) const;

  /// Dense copy of A (tests, small cases only).
  CMat dense_a() const;

 private:
  SubspaceOperators(PartialDftB b, std::variant<GaussianA, PartialHadamardA> a)
      : b_(std::move(b)), a_(std::move(a)) {}

  PartialDftB b_;
  std::variant<GaussianA, PartialHadamardA> a_;
};

}  // namespace blindeconv
