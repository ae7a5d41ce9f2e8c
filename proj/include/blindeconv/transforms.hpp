#pragma once

#include "blindeconv/types.hpp"

namespace blindeconv {

/// Unitary DFT (scaled by 1/sqrt(L)). Forward kernel exp(-2*pi*i*jk/L).
/// Length must be a power of two; forward followed by inverse recovers the
/// input to machine precision.
CVec fft_unitary(const CVec& v, bool inverse = false);

/// Unitary Walsh-Hadamard transform: (1/sqrt(L)) * H_L * v with H_L the
/// +-1 Sylvester Hadamard matrix. Self-inverse. Length must be a power of
/// two.
CVec fwht_unitary(const CVec& v);

}  // namespace blindeconv
