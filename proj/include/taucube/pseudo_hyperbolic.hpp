#pragma once

#include "taucube/types.hpp"

namespace taucube {

/// Order-3 pseudo-hyperbolic component C_m(alpha) = sum_{l>=0} alpha^(3l+m) / (3l+m)!.
/// Evaluated in closed form as (1/3) sum_j eps_j^(-m) exp(eps_j alpha) over the cube
/// roots of unity. Throws std::domain_error unless m is 0, 1 or 2.
Complex pseudo_hyp(int m, Complex alpha);

/// Partial sum of the defining series with `terms` summands. Slowly convergent by
/// design; used as an independent oracle for pseudo_hyp. Throws std::domain_error
/// for m outside {0, 1, 2} or terms < 1.
Complex pseudo_hyp_series(int m, Complex alpha, int terms);

}  // namespace taucube
