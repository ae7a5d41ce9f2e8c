#pragma once

#include "blindeconv/ensembles.hpp"

#include <memory>
#include <optional>
#include <utility>

namespace blindeconv {

/// Ground truth of a synthetic instance. d0 = ||h0|| * ||x0|| is the scale of
/// the rank-one matrix h0 x0*; mu_h2 its incoherence against the rows of B.
struct Truth {
  CVec h0;
  CVec x0;
  double d0 = 0.0;
  double mu_h2 = 0.0;
};

struct Observation {
  CVec y;
  double sigma = 0.0;
  std::optional<Truth> truth;
};

/// The lifted measurement map A(Z) = {b_l* Z a_l}_{l=1..L} and its adjoint
/// A*(z) = sum_l z_l b_l a_l*, specialized to rank-one arguments so every
/// action costs one B-transform plus one A-transform. The K x N matrix
/// A*(z) is never materialized outside the dense test oracle.
class LiftedOperator {
 public:
  explicit LiftedOperator(std::shared_ptr<const SubspaceOperators> ops)
      : ops_(std::move(ops)) {}

  const SubspaceOperators& ops() const { return *ops_; }
  std::shared_ptr<const SubspaceOperators> ops_ptr() const { return ops_; }

  /// A(h x*) = (Bh) o conj(Ax), elementwise over l.
  CVec forward_rank1(const CVec& h, const CVec& x) const;

  /// A*(z) x = B*(z o Ax).
  CVec adjoint_apply_right(const CVec& z, const CVec& x) const;

  /// (A*(z))* h = A^H(conj(z) o Bh).
  CVec adjoint_apply_left(const CVec& z, const CVec& h) const;

  /// The two matvecs one power iteration needs: (A*(y) v, (A*(y))* u).
  std::pair<CVec, CVec> adjoint_power_step(const CVec& y, const CVec& v, const CVec& u) const;

  /// Dense L x (K*N) matrix M with M vec(Z) = A(Z), vec column-major.
  /// Guarded to K*N <= 4096; test oracle only.
  CMat dense_lifted_matrix() const;

 private:
  std::shared_ptr<const SubspaceOperators> ops_;
};

enum class NoiseMode { Absolute, Relative };

struct NoisyMeasurement {
  CVec y;
  CVec e;
};

/// Additive noise. Absolute mode draws e ~ CN(0, sigma^2 d0^2 / L * I)
/// (the theory model, which is why the scale d0 must be supplied); relative
/// mode returns e = sigma * ||y0|| * w/||w|| so that ||e||/||y0|| = sigma
/// exactly (the experiment model).
NoisyMeasurement add_noise(const CVec& y0, double sigma, double d0, NoiseMode mode,
                           RngStream& rng);

}  // namespace blindeconv
