#include "blindeconv/init.hpp"

#include <cmath>

namespace blindeconv {

PowerMethodResult power_method(const CVec& y, const LiftedOperator& lifted, int iters,
                               RngStream& rng) {
  require(iters >= 1, "power_method: iters must be >= 1");
  if (y.norm() == 0.0) throw NumericalError("power_method: degenerate input y = 0");

  const Index K = lifted.ops().K();
  CVec u = sample_complex_gaussian(rng, K);
  u /= u.norm();

  PowerMethodResult out;
  out.d_history.reserve(static_cast<std::size_t>(iters));
  CVec v;
  for (int t = 0; t < iters; ++t) {
    CVec vraw = lifted.adjoint_apply_left(y, u);  // (A*(y))* u
    const double vn = vraw.norm();
    if (!(vn > 0.0)) throw NumericalError("power_method: iteration collapsed to zero");
    v = vraw / vn;
    CVec uraw = lifted.adjoint_apply_right(y, v);  // A*(y) v
    const double d = uraw.norm();
    if (!(d > 0.0)) throw NumericalError("power_method: iteration collapsed to zero");
    u = uraw / d;
    out.d_history.push_back(d);
  }
  out.d = out.d_history.back();
  out.hhat = u;
  out.xhat = v;
  return out;
}

ProjectionResult project_incoherence(const CVec& z0, double bound, const PartialDftB& b,
                                     double tol, int max_iters) {
  require(bound > 0.0, "project_incoherence: bound must be positive");
  require(z0.size() == b.K(), "project_incoherence: z0 must have length K");
  const Index L = b.L();
  const double radius = bound / std::sqrt(static_cast<double>(L));
  const double z0_norm = z0.norm();

  const auto clip = [&](const CVec& w) {
    CVec out = w;
    for (Index l = 0; l < L; ++l) {
      const double a = std::abs(out[l]);
      if (a > radius) out[l] *= radius / a;
    }
    return out;
  };

  CVec w = b.apply(z0);
  CVec p = CVec::Zero(L);  // Dykstra increment for the clip set
  CVec q = CVec::Zero(L);  // Dykstra increment for range(B)

  ProjectionResult res;
  for (int sweep = 1; sweep <= max_iters; ++sweep) {
    const CVec a = clip(w + p);
    p = w + p - a;
    const CVec aq = a + q;
    const CVec w_next = b.apply(b.adjoint(aq));  // projection onto range(B)
    q = aq - w_next;

    const double change = (w_next - w).norm();
    w = w_next;
    res.sweeps = sweep;
    const double overshoot =
        std::sqrt(static_cast<double>(L)) * w.cwiseAbs().maxCoeff() - bound;
    if (change <= tol * z0_norm && overshoot <= 1e-10 * bound) {
      res.z = b.adjoint(w);
      res.converged = true;
      return res;
    }
  }
  res.z = b.adjoint(clip(w));  // best feasible-side iterate
  res.converged = false;
  return res;
}

InitResult initialize(const CVec& y, const LiftedOperator& lifted, const RegParams& p,
                      const InitOptions& options, RngStream& rng) {
  const PowerMethodResult pm = power_method(y, lifted, options.power_iters, rng);
  const double sqrt_d = std::sqrt(pm.d);

  InitResult out;
  out.d = pm.d;
  out.power_iters = options.power_iters;
  out.v0 = sqrt_d * pm.xhat;
  if (options.skip_projection) {
    out.u0 = sqrt_d * pm.hhat;
    out.projection_applied = false;
  } else {
    const double bound = 2.0 * sqrt_d * std::sqrt(p.mu2);
    const ProjectionResult proj =
        project_incoherence(sqrt_d * pm.hhat, bound, lifted.ops().b());
    out.u0 = proj.z;
    out.projection_applied = true;
    out.projection_converged = proj.converged;
  }
  return out;
}

}  // namespace blindeconv
