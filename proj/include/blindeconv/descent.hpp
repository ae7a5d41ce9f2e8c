#pragma once

#include "blindeconv/init.hpp"

#include <string>

namespace blindeconv {

struct BacktrackingOptions {
  double eta0 = 0.0;      // largest stepsize tried; 0 = auto (5/d)
  double shrink = 0.5;    // beta in (0,1)
  double armijo = 0.5;    // c1 in (0,1)
  int max_halvings = 50;

  void validate() const {
    require(shrink > 0.0 && shrink < 1.0, "backtracking: shrink must lie in (0,1)");
    require(armijo > 0.0 && armijo < 1.0, "backtracking: armijo must lie in (0,1)");
    require(max_halvings >= 0, "backtracking: max_halvings must be >= 0");
  }
};

struct SolveOptions {
  bool use_backtracking = true;
  double eta = 0.0;  // constant stepsize (required when !use_backtracking)
  BacktrackingOptions bt;

  int max_iters = 5000;
  double tol_grad_factor = 1e-10;  // stop when ||grad|| < tol_grad_factor * d^2
  double tol_obj = 1e-12;          // relative Ftilde change over a 10-iteration window
  double tol_delta = 0.0;          // stop when delta < tol_delta (0 = off; needs truth)
  bool regularized = true;         // regGrad when true, plain Grad otherwise

  void validate() const {
    require(max_iters >= 1, "solve: max_iters must be >= 1");
    require(tol_grad_factor > 0.0, "solve: tol_grad_factor must be > 0");
    require(tol_obj > 0.0, "solve: tol_obj must be > 0");
    require(tol_delta >= 0.0, "solve: tol_delta must be >= 0");
    if (use_backtracking)
      bt.validate();
    else
      require(eta > 0.0, "solve: constant stepsize must be > 0");
  }
};

enum class StopReason {
  GradTol,
  ObjPlateau,
  DeltaTol,
  MaxIters,
  Stalled,         // backtracking exhausted max_halvings
  NumericalAbort,  // NaN/Inf encountered
};

std::string to_string(StopReason r);

struct IterationRecord {
  int t = 0;
  double ftilde = 0.0;
  double f = 0.0;
  double g = 0.0;
  double grad_norm = 0.0;
  double delta = 0.0;  // NaN when no truth
  double eta = 0.0;    // stepsize used to reach this iterate (0 at t = 0)
};

struct SolveTrace {
  std::vector<IterationRecord> records;
  Iterate final;
  StopReason reason = StopReason::MaxIters;

  int iterations() const { return records.empty() ? 0 : records.back().t; }
  /// Ftilde non-increasing across records (tested in backtracking mode).
  bool monotone() const;
};

struct StepResult {
  Iterate next;
  double eta_used = 0.0;
  double ftilde = 0.0;
  bool stalled = false;
};

/// One descent step. Backtracking accepts the largest eta = eta_start *
/// shrink^k (k <= max_halvings) with
///   Ftilde(z - eta grad) <= Ftilde(z) - armijo * eta * ||grad||^2,
/// and returns the iterate unchanged (stalled) when none qualifies. The
/// caches of the returned iterate are the ones evaluated at acceptance.
StepResult step(const SubspaceOperators& ops, const Iterate& it, const CVec& y,
                const RegParams& p, const SolveOptions& opts, double eta_start);

/// Wirtinger gradient descent from the spectral initialization. Records one
/// trace row per iteration (plus t = 0). In backtracking mode the search
/// restarts each iteration from min(previous eta / shrink, eta0), so the
/// stepsize adapts in both directions while Ftilde stays non-increasing.
SolveTrace solve(const CVec& y, const LiftedOperator& lifted, const RegParams& p,
                 const SolveOptions& opts, const InitResult& init,
                 const Truth* truth = nullptr);

/// Recovery criterion of the experiments: delta(final) < threshold (strict).
bool success(const SolveTrace& trace, const Truth& truth, double threshold = 1e-2);

}  // namespace blindeconv
