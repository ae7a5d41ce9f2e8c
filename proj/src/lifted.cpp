#include "blindeconv/lifted.hpp"

#include <cmath>

namespace blindeconv {

CVec LiftedOperator::forward_rank1(const CVec& h, const CVec& x) const {
  const CVec bh = ops_->apply_b(h);
  const CVec ax = ops_->apply_a(x);
  return bh.cwiseProduct(ax.conjugate());
}

CVec LiftedOperator::adjoint_apply_right(const CVec& z, const CVec& x) const {
  require(z.size() == ops_->L(), "adjoint_apply_right: z must have length L");
  const CVec ax = ops_->apply_a(x);
  return ops_->adjoint_b(z.cwiseProduct(ax));
}

CVec LiftedOperator::adjoint_apply_left(const CVec& z, const CVec& h) const {
  require(z.size() == ops_->L(), "adjoint_apply_left: z must have length L");
  const CVec bh = ops_->apply_b(h);
  return ops_->adjoint_a(z.conjugate().cwiseProduct(bh));
}

std::pair<CVec, CVec> LiftedOperator::adjoint_power_step(const CVec& y, const CVec& v,
                                                         const CVec& u) const {
  return {adjoint_apply_right(y, v), adjoint_apply_left(y, u)};
}

CMat LiftedOperator::dense_lifted_matrix() const {
  const Index L = ops_->L();
  const Index K = ops_->K();
  const Index N = ops_->N();
  require(K * N <= 4096, "dense_lifted_matrix: K*N exceeds the 4096 size guard");

  // Row l is vec(b_l a_l*)^* so that M vec(Z) = {b_l* Z a_l}. b_l* is the
  // l-th row of B and a_l* the l-th row of A; materialize both through
  // basis vectors.
  CMat bdense(L, K);
  for (Index k = 0; k < K; ++k) {
    CVec e = CVec::Zero(K);
    e[k] = 1.0;
    bdense.col(k) = ops_->apply_b(e);
  }
  const CMat adense = ops_->dense_a();

  CMat m(L, K * N);
  for (Index l = 0; l < L; ++l)
    for (Index j = 0; j < N; ++j)
      for (Index i = 0; i < K; ++i)
        m(l, j * K + i) = bdense(l, i) * std::conj(adense(l, j));
  return m;
}

NoisyMeasurement add_noise(const CVec& y0, double sigma, double d0, NoiseMode mode,
                           RngStream& rng) {
  require(sigma >= 0.0, "add_noise: sigma must be nonnegative");
  const Index L = y0.size();
  NoisyMeasurement out;
  if (sigma == 0.0) {
    out.y = y0;
    out.e = CVec::Zero(L);
    return out;
  }
  if (mode == NoiseMode::Absolute) {
    require(d0 > 0.0, "add_noise: absolute mode needs d0 > 0");
    const double scale = sigma * d0 / std::sqrt(static_cast<double>(L));
    out.e = scale * sample_complex_gaussian(rng, L);
  } else {
    CVec w = sample_complex_gaussian(rng, L);
    out.e = (sigma * y0.norm() / w.norm()) * w;
  }
  out.y = y0 + out.e;
  return out;
}

}  // namespace blindeconv
