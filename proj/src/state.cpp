#include "taucube/state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace taucube {

void GridSpec::validate() const {
    if (n_points < 4 || (n_points & (n_points - 1)) != 0)
        throw std::domain_error("grid size must be a power of two, at least 4");
    if (!std::isfinite(length) || length <= 0.0)
        throw std::domain_error("grid length must be finite and positive");
}

long GridSpec::signed_mode(std::size_t m) const {
    const long n = static_cast<long>(n_points);
    const long idx = static_cast<long>(m);
    return idx < n / 2 ? idx : idx - n;
}

double GridSpec::wavenumber(std::size_t m) const {
    return 2.0 * std::numbers::pi * static_cast<double>(signed_mode(m)) / length;
}

StateVector zero_state(const GridSpec& grid) {
    grid.validate();
    StateVector s;
    for (auto& c : s.components) c.assign(grid.n_points, Complex(0.0));
    return s;
}

StateVector make_initial(const GridSpec& grid, Preset preset, long mode, int component) {
    grid.validate();
    if (component < 1 || component > 3)
        throw std::domain_error("component must be 1, 2 or 3");
    const long half = static_cast<long>(grid.n_points) / 2;
    if (preset == Preset::plane_wave && (mode < -half || mode >= half))
        throw std::domain_error("plane-wave mode out of the signed alias range");

    StateVector s = zero_state(grid);
    std::vector<Complex>& field = s.components[static_cast<std::size_t>(component - 1)];
    const double L = grid.length;
    switch (preset) {
        case Preset::gaussian: {
            const double sigma = L / 20.0;
            const double center = L / 2.0;
            for (std::size_t j = 0; j < grid.n_points; ++j) {
                const double d = grid.x(j) - center;
                field[j] = std::exp(-d * d / (2.0 * sigma * sigma));
            }
            break;
        }
        case Preset::plane_wave: {
            const double kappa = 2.0 * std::numbers::pi * static_cast<double>(mode) / L;
            for (std::size_t j = 0; j < grid.n_points; ++j)
                field[j] = std::polar(1.0, kappa * grid.x(j));
            break;
        }
        case Preset::box: {
            for (std::size_t j = 0; j < grid.n_points; ++j) {
                const double x = grid.x(j);
                field[j] = (x >= L / 4.0 && x < 3.0 * L / 4.0) ? 1.0 : 0.0;
            }
            break;
        }
    }
    return s;
}

}  // namespace taucube
