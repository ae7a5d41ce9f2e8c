#pragma once

#include "blindeconv/objective.hpp"

namespace blindeconv {

struct PowerMethodResult {
  double d = 0.0;  // Rayleigh estimate of the leading singular value at exit
  CVec hhat;       // unit left singular vector estimate
  CVec xhat;       // unit right singular vector estimate
  std::vector<double> d_history;  // one Rayleigh value per iteration, non-decreasing
};

/// Matrix-free power iteration for the leading singular triple of A*(y).
/// Alternating (Gauss-Seidel) updates keep the Rayleigh sequence monotone:
///   v <- normalize((A*(y))* u),  u <- normalize(A*(y) v).
/// The start vector is complex Gaussian from rng; runs exactly `iters`
/// iterations.
PowerMethodResult power_method(const CVec& y, const LiftedOperator& lifted, int iters,
                               RngStream& rng);

struct ProjectionResult {
  CVec z;
  bool converged = true;
  int sweeps = 0;
};

/// Euclidean projection of z0 onto {z : sqrt(L) ||Bz||_inf <= bound} via
/// Dykstra's alternating projections in w = Bz coordinates, between the
/// clip set {w : sqrt(L) |w_l| <= bound} and range(B). B is an isometry, so
/// distances transfer: ||z - z0|| = ||Bz - Bz0||.
ProjectionResult project_incoherence(const CVec& z0, double bound, const PartialDftB& b,
                                     double tol = 1e-9, int max_iters = 500);

struct InitOptions {
  int power_iters = 50;
  bool skip_projection = false;
};

struct InitResult {
  CVec u0;
  CVec v0;
  double d = 0.0;
  int power_iters = 0;
  bool projection_applied = false;
  bool projection_converged = true;
};

/// Spectral initialization: power method for (d, h^, x^) of A*(y), then
/// v0 = sqrt(d) x^ and u0 = the projection of sqrt(d) h^ onto the
/// incoherence set with bound 2 sqrt(d) mu (skipped on request, as in the
/// phase-transition experiments). Only p.mu2 is consulted; d comes from the
/// data.
InitResult initialize(const CVec& y, const LiftedOperator& lifted, const RegParams& p,
                      const InitOptions& options, RngStream& rng);

}  // namespace blindeconv
