#include "taucube/tau_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "taucube/pseudo_hyperbolic.hpp"
#include "taucube/roots.hpp"

namespace taucube {

Matrix3 tau(int j) {
    const CubicRoots eps = cube_roots_of_unity();
    Matrix3 m;
    switch (j) {
        case 1:
            m(0, 1) = 1.0;
            m(1, 2) = 1.0;
            m(2, 0) = 1.0;
            break;
        case 2:
            m(0, 1) = eps.eps_plus;
            m(1, 2) = eps.eps_minus;
            m(2, 0) = 1.0;
            break;
        case 3:
            m(0, 2) = 1.0;
            m(1, 0) = eps.eps_plus;
            m(2, 1) = eps.eps_minus;
            break;
        default:
            throw std::domain_error("generator index must be 1, 2 or 3");
    }
    return m;
}

CliffordReport check_cubic_clifford(const Matrix3& a, const Matrix3& b, double tol) {
    const Matrix3 id = Matrix3::identity();
    const Matrix3 a2 = a * a;
    const double cube_a = max_abs(a2 * a - id);
    const double cube_b = max_abs((b * b) * b - id);
    const double mixed = max_abs(a2 * b + a * (b * a) + b * a2);
    return {cube_a <= tol, cube_b <= tol, mixed <= tol, std::max({cube_a, cube_b, mixed})};
}

Matrix3 commutator(const Matrix3& a, const Matrix3& b) {
    return a * b - b * a;
}

Matrix3 exp_tau(int j, Complex alpha) {
    const Matrix3 t = tau(j);
    return pseudo_hyp(0, alpha) * Matrix3::identity() + pseudo_hyp(1, alpha) * t +
           pseudo_hyp(2, alpha) * (t * t);
}

Matrix3 exp_general(const Matrix3& m, Complex t) {
    Matrix3 a = t * m;
    int squarings = 0;
    for (double norm = max_abs(a); norm > 0.5; norm *= 0.5) ++squarings;
    if (squarings > 0) a = Complex(std::ldexp(1.0, -squarings)) * a;

    Matrix3 result = Matrix3::identity();
    Matrix3 term = Matrix3::identity();
    for (int i = 1; i <= 48; ++i) {
        term = Complex(1.0 / i) * (term * a);
        result = result + term;
        if (max_abs(term) <= 1e-16) break;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

Matrix3 cubic_combination(Complex b, Complex c) {
    return b * tau(1) + c * tau(2);
}

}  // namespace taucube
