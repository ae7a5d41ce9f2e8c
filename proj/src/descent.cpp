#include "blindeconv/descent.hpp"

#include <cmath>
#include <limits>

namespace blindeconv {

namespace {

double ftilde_value(const Iterate& it, const CVec& y, const RegParams& p, bool regularized) {
  return loss_f(it, y) + (regularized ? penalty_g(it, p) : 0.0);
}

bool finite(const CVec& v) { return v.allFinite(); }

// Backtracking body shared by step() and solve(); the gradient and the
// objective at `it` are computed by the caller.
StepResult step_with_grad(const SubspaceOperators& ops, const Iterate& it, const CVec& y,
                          const RegParams& p, const SolveOptions& opts, double eta_start,
                          const Gradients& g, double f0) {
  const double gn2 = g.squared_norm();
  StepResult res;
  if (!opts.use_backtracking) {
    res.next = Iterate::make(ops, it.h - opts.eta * g.gh, it.x - opts.eta * g.gx);
    res.eta_used = opts.eta;
    res.ftilde = ftilde_value(res.next, y, p, opts.regularized);
    return res;
  }
  double eta = eta_start;
  for (int k = 0; k <= opts.bt.max_halvings; ++k, eta *= opts.bt.shrink) {
    Iterate cand = Iterate::make(ops, it.h - eta * g.gh, it.x - eta * g.gx);
    const double fc = ftilde_value(cand, y, p, opts.regularized);
    if (std::isfinite(fc) && fc <= f0 - opts.bt.armijo * eta * gn2) {
      res.next = std::move(cand);
      res.eta_used = eta;
      res.ftilde = fc;
      return res;
    }
  }
  res.next = it;
  res.eta_used = 0.0;
  res.ftilde = f0;
  res.stalled = true;
  return res;
}

}  // namespace

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::GradTol: return "grad_tol";
    case StopReason::ObjPlateau: return "obj_plateau";
    case StopReason::DeltaTol: return "delta_tol";
    case StopReason::MaxIters: return "max_iters";
    case StopReason::Stalled: return "stalled";
    case StopReason::NumericalAbort: return "numerical_abort";
  }
  return "unknown";
}

bool SolveTrace::monotone() const {
  for (std::size_t i = 1; i < records.size(); ++i)
    if (records[i].ftilde > records[i - 1].ftilde) return false;
  return true;
}

StepResult step(const SubspaceOperators& ops, const Iterate& it, const CVec& y,
                const RegParams& p, const SolveOptions& opts, double eta_start) {
  opts.validate();
  const Gradients g = grad_ftilde(ops, it, y, p, opts.regularized);
  const double f0 = ftilde_value(it, y, p, opts.regularized);
  return step_with_grad(ops, it, y, p, opts, eta_start, g, f0);
}

SolveTrace solve(const CVec& y, const LiftedOperator& lifted, const RegParams& p,
                 const SolveOptions& opts, const InitResult& init, const Truth* truth) {
  opts.validate();
  p.validate();
  const SubspaceOperators& ops = lifted.ops();

  SolveTrace trace;
  trace.final = Iterate::make(ops, init.u0, init.v0);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double tol_grad = opts.tol_grad_factor * p.d * p.d;
  const double eta_cap = opts.bt.eta0 > 0.0 ? opts.bt.eta0 : 5.0 / p.d;

  const auto record = [&](int t, double f, double g, double gn, double eta) {
    IterationRecord r;
    r.t = t;
    r.f = f;
    r.g = g;
    r.ftilde = f + g;
    r.grad_norm = gn;
    r.delta = truth != nullptr ? delta_metric(trace.final, *truth) : nan;
    r.eta = eta;
    trace.records.push_back(r);
  };

  // Termination checks shared by the start point and every iterate.
  const auto stop_here = [&](double f_plus_g, double gn, int t) -> bool {
    if (!finite(trace.final.h) || !finite(trace.final.x) || !std::isfinite(f_plus_g) ||
        !std::isfinite(gn)) {
      trace.reason = StopReason::NumericalAbort;
      return true;
    }
    if (gn < tol_grad) {
      trace.reason = StopReason::GradTol;
      return true;
    }
    if (opts.tol_delta > 0.0 && truth != nullptr &&
        trace.records.back().delta < opts.tol_delta) {
      trace.reason = StopReason::DeltaTol;
      return true;
    }
    if (t >= 10) {
      const double prev = trace.records[static_cast<std::size_t>(t - 10)].ftilde;
      const double cur = trace.records.back().ftilde;
      if (std::abs(prev - cur) < opts.tol_obj * std::max(std::abs(prev), 1e-300)) {
        trace.reason = StopReason::ObjPlateau;
        return true;
      }
    }
    return false;
  };

  double f = loss_f(trace.final, y);
  double g = opts.regularized ? penalty_g(trace.final, p) : 0.0;
  Gradients grad = grad_ftilde(ops, trace.final, y, p, opts.regularized);
  double gn = std::sqrt(grad.squared_norm());
  record(0, f, g, gn, 0.0);
  if (stop_here(f + g, gn, 0)) return trace;

  double eta_start = eta_cap;
  for (int t = 1; t <= opts.max_iters; ++t) {
    const StepResult sr = step_with_grad(ops, trace.final, y, p, opts, eta_start, grad, f + g);
    if (sr.stalled) {
      trace.reason = StopReason::Stalled;
      return trace;
    }
    trace.final = sr.next;
    if (opts.use_backtracking)
      eta_start = std::min(sr.eta_used / opts.bt.shrink, eta_cap);

    f = loss_f(trace.final, y);
    g = opts.regularized ? penalty_g(trace.final, p) : 0.0;
    grad = grad_ftilde(ops, trace.final, y, p, opts.regularized);
    gn = std::sqrt(grad.squared_norm());
    record(t, f, g, gn, sr.eta_used);
    if (stop_here(f + g, gn, t)) return trace;
  }
  trace.reason = StopReason::MaxIters;
  return trace;
}

bool success(const SolveTrace& trace, const Truth& truth, double threshold) {
  return delta_metric(trace.final, truth) < threshold;
}

}  // namespace blindeconv
