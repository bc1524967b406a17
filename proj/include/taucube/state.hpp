#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "taucube/types.hpp"

namespace taucube {

/// Uniform periodic grid on [0, length): x_j = j * length / n_points.
struct GridSpec {
    std::size_t n_points = 0;
    double length = 0.0;

    /// Throws std::domain_error unless n_points is a power of two >= 4 and
    /// length is finite and positive.
    void validate() const;

    double spacing() const { return length / static_cast<double>(n_points); }
    double x(std::size_t j) const { return static_cast<double>(j) * spacing(); }

    /// Wavenumber of DFT bin m under the signed alias convention: 2 pi m~ / length
    /// with m~ in [-n/2, n/2). The Nyquist bin maps to -n/2.
    double wavenumber(std::size_t m) const;

    /// Signed alias m~ of bin m.
    long signed_mode(std::size_t m) const;
};

/// Three complex fields sampled on a common grid (1-based component naming in
/// configs and CSV headers, 0-based storage here).
struct StateVector {
    std::array<std::vector<Complex>, 3> components;

    std::size_t n_points() const { return components[0].size(); }
};

/// One evolution run: d/dt Phi = (d/dx tau_1 + k tau_2) Phi integrated to t_final
/// in `steps` equal substeps.
struct EvolutionParams {
    Complex k;
    double t_final = 0.0;
    std::size_t steps = 1;
};

enum class Preset { gaussian, plane_wave, box };

/// All-zero state matching the grid.
StateVector zero_state(const GridSpec& grid);

/// Builds a preset initial condition in the given field component (1, 2 or 3);
/// the other two components stay zero.
///   gaussian:   exp(-(x - L/2)^2 / (2 sigma^2)), sigma = L/20
///   plane_wave: exp(i 2 pi mode x / L), mode is the signed index in [-n/2, n/2)
///   box:        1 on [L/4, 3L/4), 0 elsewhere
/// `mode` is ignored by the non-plane-wave presets. Throws std::domain_error on a
/// bad grid, component or mode.
StateVector make_initial(const GridSpec& grid, Preset preset, long mode, int component);

}  // namespace taucube
