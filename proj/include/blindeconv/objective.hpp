#pragma once

#include "blindeconv/lifted.hpp"

#include <vector>

namespace blindeconv {

/// Parameters of the penalty G and the neighborhood system.
///   rho  - penalty weight (rho = d^2/100 in the experiments)
///   d    - scale estimate, 0.9 d0 <= d <= 1.1 d0 when initialization works
///   mu2  - incoherence budget mu^2 (mu >= mu_h required by the theory)
///   eps  - neighborhood radius, in (0, 1/15]
struct RegParams {
  double rho = 0.0;
  double d = 1.0;
  double mu2 = 1.0;
  double eps = 1.0 / 15.0;

  void validate() const {
    require(rho >= 0.0, "RegParams: rho must be >= 0");
    require(d > 0.0, "RegParams: d must be > 0");
    require(mu2 > 0.0, "RegParams: mu2 must be > 0");
    require(eps > 0.0 && eps <= 1.0 / 15.0 + 1e-15, "RegParams: eps must lie in (0, 1/15]");
  }
};

/// Candidate pair (h, x) with the transforms Bh, Ax cached. Caches are
/// refreshed whenever the pair changes; all evaluations below trust them.
struct Iterate {
  CVec h;
  CVec x;
  CVec Bh;
  CVec Ax;

  static Iterate make(const SubspaceOperators& ops, CVec h, CVec x);
  void refresh(const SubspaceOperators& ops);
};

struct Gradients {
  CVec gh;
  CVec gx;

  double squared_norm() const { return gh.squaredNorm() + gx.squaredNorm(); }
};

struct Membership {
  bool in_nd0 = false;
  bool in_nmu = false;
  bool in_neps = false;
};

struct Metrics {
  double delta = 0.0;
  double f_val = 0.0;
  double g_val = 0.0;
  double ftilde_val = 0.0;
  double grad_norm = 0.0;
  Membership membership;
};

// Truncated quadratic G0(z) = max(z - 1, 0)^2 and G0'(z) = 2 max(z - 1, 0).
inline double g0(double z) {
  const double t = z - 1.0;
  return t > 0.0 ? t * t : 0.0;
}
inline double g0_prime(double z) {
  const double t = z - 1.0;
  return t > 0.0 ? 2.0 * t : 0.0;
}

/// F(h, x) = || (Bh) o conj(Ax) - y ||^2.
double loss_f(const Iterate& it, const CVec& y);

/// G(h, x) = rho [ G0(||h||^2/2d) + G0(||x||^2/2d)
///                 + sum_l G0(L |b_l* h|^2 / (8 d mu^2)) ].
double penalty_g(const Iterate& it, const RegParams& p);

/// Wirtinger gradients dF/d(conj h), dF/d(conj x).
Gradients grad_f(const SubspaceOperators& ops, const Iterate& it, const CVec& y);

/// Wirtinger gradients of the penalty; the b_l sum is evaluated through one
/// B* transform.
Gradients grad_g(const SubspaceOperators& ops, const Iterate& it, const RegParams& p);

/// grad_f plus (optionally) grad_g.
Gradients grad_ftilde(const SubspaceOperators& ops, const Iterate& it, const CVec& y,
                      const RegParams& p, bool regularized);

/// delta = ||h x* - h0 x0*||_F / d0 via the expanded inner-product form;
/// tiny negative radicands (> -1e-12 d0^2) clamp to zero.
double delta_metric(const CVec& h, const CVec& x, const Truth& truth);
inline double delta_metric(const Iterate& it, const Truth& truth) {
  return delta_metric(it.h, it.x, truth);
}

/// mu_h^2 = L ||Bh||_inf^2 / ||h||^2; in [1, K] for the partial DFT B.
double incoherence_mu2(const CVec& h, const PartialDftB& b);

/// Membership in N_d0, N_mu, N_eps (closed sets, boundaries included).
Membership membership(const Iterate& it, const RegParams& p, const Truth& truth);

/// ||A(h x* - h0 x0*)||^2 / ||h x* - h0 x0*||_F^2 at one point.
double rip_ratio(const LiftedOperator& lifted, const CVec& h, const CVec& x, const Truth& truth);

/// Samples points of N_d0 /\ N_mu /\ N_eps around the truth by rejection and
/// returns the local-RIP ratio at each. Throws SamplingError after 1000
/// consecutive rejections.
std::vector<double> empirical_rip_ratio(const Truth& truth, const LiftedOperator& lifted,
                                        const RegParams& p, int samples, RngStream& rng);

Metrics compute_metrics(const SubspaceOperators& ops, const Iterate& it, const CVec& y,
                        const RegParams& p, bool regularized, const Truth* truth);

}  // namespace blindeconv
