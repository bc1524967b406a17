#pragma once

#include "taucube/matrix3.hpp"
#include "taucube/types.hpp"

namespace taucube {

/// Generator tau_j of the cubic Clifford family: tau_1 is the plain cyclic shift,
/// tau_2 and tau_3 carry cube-root-of-unity weights. Each satisfies tau^3 = I.
/// Throws std::domain_error unless j is 1, 2 or 3.
Matrix3 tau(int j);

struct CliffordReport {
    bool cube_a_ok;
    bool cube_b_ok;
    bool mixed_ok;
    double max_residual;
};

/// Verifies the cubic Clifford conditions for a pair (a, b): a^3 = I, b^3 = I and
/// a^2 b + a b a + b a^2 = 0, each in max-entry norm against tol.
CliffordReport check_cubic_clifford(const Matrix3& a, const Matrix3& b, double tol);

/// ab - ba.
Matrix3 commutator(const Matrix3& a, const Matrix3& b);

/// exp(alpha tau_j) through the closed three-term expansion
/// C0(alpha) I + C1(alpha) tau_j + C2(alpha) tau_j^2.
Matrix3 exp_tau(int j, Complex alpha);

/// exp(t m) by scaling and squaring around a truncated Taylor kernel. Makes no
/// diagonalizability assumption, so it stays correct on the nilpotent locus where
/// eigenvalue methods degenerate. The reference propagator for everything else here.
Matrix3 exp_general(const Matrix3& m, Complex t);

/// b tau_1 + c tau_2. Its cube is (b^3 + c^3) I for all complex b, c.
Matrix3 cubic_combination(Complex b, Complex c);

}  // namespace taucube
