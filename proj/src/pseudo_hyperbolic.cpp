#include "taucube/pseudo_hyperbolic.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "taucube/roots.hpp"

namespace taucube {

namespace {

void check_residue(int m) {
    if (m < 0 || m > 2) throw std::domain_error("residue index must be 0, 1 or 2");
}

}  // namespace

Complex pseudo_hyp(int m, Complex alpha) {
    check_residue(m);
    const CubicRoots eps = cube_roots_of_unity();
    const std::array<Complex, 3> roots = eps.all();
    // eps^(-1) = eps^2 for a cube root of unity, so the inverse powers are a lookup,
    // not a std::pow call (which loses the exact conjugation structure).
    const std::array<std::array<Complex, 3>, 3> inverse_powers = {{
        {Complex(1.0), Complex(1.0), Complex(1.0)},
        {Complex(1.0), eps.eps_minus, eps.eps_plus},
        {Complex(1.0), eps.eps_plus, eps.eps_minus},
    }};
    Complex sum = 0.0;
    for (int j = 0; j < 3; ++j) {
        sum += inverse_powers[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] *
               std::exp(roots[static_cast<std::size_t>(j)] * alpha);
    }
    return sum / 3.0;
}

Complex pseudo_hyp_series(int m, Complex alpha, int terms) {
    check_residue(m);
    if (terms < 1) throw std::domain_error("series needs at least one term");
    // First term alpha^m / m!, built by repeated multiplication so alpha = 0 is exact.
    Complex term = 1.0;
    for (int i = 0; i < m; ++i) term *= alpha;
    if (m == 2) term /= 2.0;
    const Complex alpha_cubed = alpha * alpha * alpha;
    Complex sum = term;
    for (int l = 0; l < terms - 1; ++l) {
        const double q = 3.0 * l + m;
        term *= alpha_cubed / ((q + 1.0) * (q + 2.0) * (q + 3.0));
        sum += term;
    }
    return sum;
}

}  // namespace taucube
