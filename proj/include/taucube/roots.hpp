#pragma once

#include <array>
#include <cmath>

#include "taucube/types.hpp"

namespace taucube {

/// The three cube roots of unity: eps0 = 1, eps± = -1/2 ± i sqrt(3)/2.
struct CubicRoots {
    Complex eps0;
    Complex eps_plus;
    Complex eps_minus;

    std::array<Complex, 3> all() const { return {eps0, eps_plus, eps_minus}; }
};

inline CubicRoots cube_roots_of_unity() {
    const double half_sqrt3 = std::sqrt(3.0) / 2.0;
    return {Complex(1.0, 0.0), Complex(-0.5, half_sqrt3), Complex(-0.5, -half_sqrt3)};
}

}  // namespace taucube
