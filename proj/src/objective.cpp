#include "blindeconv/objective.hpp"

#include <cmath>
#include <limits>

namespace blindeconv {

Iterate Iterate::make(const SubspaceOperators& ops, CVec h, CVec x) {
  Iterate it;
  it.h = std::move(h);
  it.x = std::move(x);
  it.refresh(ops);
  return it;
}

void Iterate::refresh(const SubspaceOperators& ops) {
  Bh = ops.apply_b(h);
  Ax = ops.apply_a(x);
}

double loss_f(const Iterate& it, const CVec& y) {
  require(y.size() == it.Bh.size(), "loss_f: y must have length L");
  return (it.Bh.cwiseProduct(it.Ax.conjugate()) - y).squaredNorm();
}

double penalty_g(const Iterate& it, const RegParams& p) {
  p.validate();
  if (p.rho == 0.0) return 0.0;
  const auto L = static_cast<double>(it.Bh.size());
  const double two_d = 2.0 * p.d;
  double sum = g0(it.h.squaredNorm() / two_d) + g0(it.x.squaredNorm() / two_d);
  const double row_scale = L / (8.0 * p.d * p.mu2);
  for (Index l = 0; l < it.Bh.size(); ++l) sum += g0(row_scale * std::norm(it.Bh[l]));
  return p.rho * sum;
}

Gradients grad_f(const SubspaceOperators& ops, const Iterate& it, const CVec& y) {
  require(y.size() == ops.L(), "grad_f: y must have length L");
  const CVec r = it.Bh.cwiseProduct(it.Ax.conjugate()) - y;
  Gradients g;
  g.gh = ops.adjoint_b(r.cwiseProduct(it.Ax));
  g.gx = ops.adjoint_a(r.conjugate().cwiseProduct(it.Bh));
  return g;
}

Gradients grad_g(const SubspaceOperators& ops, const Iterate& it, const RegParams& p) {
  p.validate();
  Gradients g;
  if (p.rho == 0.0) {
    g.gh = CVec::Zero(it.h.size());
    g.gx = CVec::Zero(it.x.size());
    return g;
  }
  const auto L = static_cast<double>(ops.L());
  const double two_d = 2.0 * p.d;
  const double lead = p.rho / two_d;
  const double row_scale = L / (8.0 * p.d * p.mu2);

  CVec s(it.Bh.size());
  for (Index l = 0; l < it.Bh.size(); ++l)
    s[l] = g0_prime(row_scale * std::norm(it.Bh[l]));

  g.gh = lead * (g0_prime(it.h.squaredNorm() / two_d) * it.h +
                 (L / (4.0 * p.mu2)) * ops.adjoint_b(s.cwiseProduct(it.Bh)));
  g.gx = lead * g0_prime(it.x.squaredNorm() / two_d) * it.x;
  return g;
}

Gradients grad_ftilde(const SubspaceOperators& ops, const Iterate& it, const CVec& y,
                      const RegParams& p, bool regularized) {
  Gradients g = grad_f(ops, it, y);
  if (regularized) {
    const Gradients pg = grad_g(ops, it, p);
    g.gh += pg.gh;
    g.gx += pg.gx;
  }
  return g;
}

double delta_metric(const CVec& h, const CVec& x, const Truth& truth) {
  require(truth.d0 > 0.0, "delta_metric: truth scale d0 must be positive");
  const double hh = h.squaredNorm();
  const double xx = x.squaredNorm();
  const Complex hh0 = h.dot(truth.h0);   // h* h0
  const Complex x0x = truth.x0.dot(x);   // x0* x
  double radicand = hh * xx + truth.d0 * truth.d0 - 2.0 * std::real(hh0 * x0x);
  if (radicand < 0.0) {
    if (radicand < -1e-12 * truth.d0 * truth.d0)
      throw NumericalError("delta_metric: radicand below roundoff clamp threshold");
    radicand = 0.0;
  }
  return std::sqrt(radicand) / truth.d0;
}

double incoherence_mu2(const CVec& h, const PartialDftB& b) {
  const double hn = h.squaredNorm();
  require(hn > 0.0, "incoherence_mu2: h must be nonzero");
  const CVec bh = b.apply(h);
  const double peak = bh.cwiseAbs().maxCoeff();
  return static_cast<double>(b.L()) * peak * peak / hn;
}

Membership membership(const Iterate& it, const RegParams& p, const Truth& truth) {
  p.validate();
  Membership m;
  const double two_sqrt_d0 = 2.0 * std::sqrt(truth.d0);
  m.in_nd0 = it.h.norm() <= two_sqrt_d0 && it.x.norm() <= two_sqrt_d0;
  const double sqrt_l = std::sqrt(static_cast<double>(it.Bh.size()));
  m.in_nmu = sqrt_l * it.Bh.cwiseAbs().maxCoeff() <= 4.0 * std::sqrt(truth.d0 * p.mu2);
  m.in_neps = delta_metric(it, truth) <= p.eps;
  return m;
}

double rip_ratio(const LiftedOperator& lifted, const CVec& h, const CVec& x,
                 const Truth& truth) {
  const double delta = delta_metric(h, x, truth);
  require(delta > 0.0, "rip_ratio: point must differ from the truth");
  const CVec diff = lifted.forward_rank1(h, x) - lifted.forward_rank1(truth.h0, truth.x0);
  const double denom = delta * truth.d0;
  return diff.squaredNorm() / (denom * denom);
}

std::vector<double> empirical_rip_ratio(const Truth& truth, const LiftedOperator& lifted,
                                        const RegParams& p, int samples, RngStream& rng) {
  p.validate();
  require(samples >= 1, "empirical_rip_ratio: samples must be >= 1");
  const Index K = truth.h0.size();
  const Index N = truth.x0.size();
  const SubspaceOperators& ops = lifted.ops();

  // Perturbation scale targeting E delta ~ eps/2; halved on long rejection
  // streaks so acceptance stays above ~10%.
  double sigma_p = 0.5 * p.eps * truth.d0 /
                   std::sqrt(static_cast<double>(K) * truth.x0.squaredNorm() +
                             static_cast<double>(N) * truth.h0.squaredNorm());

  std::vector<double> ratios;
  ratios.reserve(static_cast<std::size_t>(samples));
  int consecutive_failures = 0;
  while (ratios.size() < static_cast<std::size_t>(samples)) {
    const CVec h = truth.h0 + sigma_p * sample_complex_gaussian(rng, K);
    const CVec x = truth.x0 + sigma_p * sample_complex_gaussian(rng, N);
    const Iterate it = Iterate::make(ops, h, x);
    const Membership m = membership(it, p, truth);
    const double delta = delta_metric(it, truth);
    if (m.in_nd0 && m.in_nmu && m.in_neps && delta > 0.0) {
      ratios.push_back(rip_ratio(lifted, h, x, truth));
      consecutive_failures = 0;
    } else {
      ++consecutive_failures;
      if (consecutive_failures >= 1000)
        throw SamplingError("empirical_rip_ratio: 1000 consecutive rejections");
      if (consecutive_failures % 50 == 0) sigma_p *= 0.5;
    }
  }
  return ratios;
}

Metrics compute_metrics(const SubspaceOperators& ops, const Iterate& it, const CVec& y,
                        const RegParams& p, bool regularized, const Truth* truth) {
  Metrics m;
  m.f_val = loss_f(it, y);
  m.g_val = regularized ? penalty_g(it, p) : 0.0;
  m.ftilde_val = m.f_val + m.g_val;
  m.grad_norm = std::sqrt(grad_ftilde(ops, it, y, p, regularized).squared_norm());
  if (truth != nullptr) {
    m.delta = delta_metric(it, *truth);
    m.membership = membership(it, p, *truth);
  } else {
    m.delta = std::numeric_limits<double>::quiet_NaN();
  }
  return m;
}

}  // namespace blindeconv
