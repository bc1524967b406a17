#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "taucube/types.hpp"

namespace taucube {

/// Dense 3x3 complex matrix, row-major, value semantics.
struct Matrix3 {
    std::array<Complex, 9> e{};

    Complex& operator()(int r, int c) { return e[static_cast<std::size_t>(3 * r + c)]; }
    const Complex& operator()(int r, int c) const { return e[static_cast<std::size_t>(3 * r + c)]; }

    static Matrix3 zero() { return {}; }

    static Matrix3 identity() {
        Matrix3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }
};

inline Matrix3 operator+(const Matrix3& a, const Matrix3& b) {
    Matrix3 r;
    for (std::size_t i = 0; i < 9; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline Matrix3 operator-(const Matrix3& a, const Matrix3& b) {
    Matrix3 r;
    for (std::size_t i = 0; i < 9; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

inline Matrix3 operator*(const Complex& s, const Matrix3& m) {
    Matrix3 r;
    for (std::size_t i = 0; i < 9; ++i) r.e[i] = s * m.e[i];
    return r;
}

inline Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Complex sum = 0.0;
            for (int k = 0; k < 3; ++k) sum += a(i, k) * b(k, j);
            r(i, j) = sum;
        }
    }
    return r;
}

/// Largest entry magnitude; the norm used for every residual in this library.
inline double max_abs(const Matrix3& m) {
    double best = 0.0;
    for (const Complex& z : m.e) best = std::max(best, std::abs(z));
    return best;
}

}  // namespace taucube
