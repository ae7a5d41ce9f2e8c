#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace blindeconv {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Configuration / precondition violations (bad dimensions, bad grids, ...).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// NaN/Inf or other numerical breakdown.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File read/write failures.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rejection sampling gave up.
struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_pow2(Index n) { return n > 0 && (n & (n - 1)) == 0; }

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ConfigError(msg);
}

}  // namespace blindeconv
