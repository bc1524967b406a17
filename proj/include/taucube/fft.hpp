#pragma once

#include <vector>

#include "taucube/types.hpp"

namespace taucube {

/// Forward transform, unnormalized: X_m = sum_j x_j exp(-2 pi i j m / n).
/// Radix-2 only; throws std::domain_error unless the length is a power of two.
std::vector<Complex> dft(const std::vector<Complex>& v);

/// Inverse transform carrying the 1/n factor, so idft(dft(v)) == v up to roundoff.
std::vector<Complex> idft(const std::vector<Complex>& v);

}  // namespace taucube
