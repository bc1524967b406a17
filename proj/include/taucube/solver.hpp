#pragma once

#include <vector>

#include "taucube/matrix3.hpp"
#include "taucube/state.hpp"
#include "taucube/types.hpp"

namespace taucube {

/// Per-mode generator M(kappa) = (i kappa) tau_1 + k tau_2. Satisfies
/// M^3 = ((i kappa)^3 + k^3) I, so exp(t M) has the closed pseudo-hyperbolic form.
Matrix3 mode_generator(double kappa, Complex k);

/// One first-order splitting step of size delta: transform to spectral space,
/// apply exp(i kappa delta tau_1) per mode, transform back, then apply the
/// x-independent factor exp(delta k tau_2) pointwise.
StateVector trotter_step(const StateVector& state, const GridSpec& grid, Complex k, double delta);

/// Composes `params.steps` splitting steps of size t_final / steps. The mass factor
/// exp(delta k tau_2) acts only on the component index, so it commutes with the
/// transform; the composition therefore runs entirely in spectral space with a single
/// transform pair. This avoids re-rounding the spectrum every step, which matters
/// because the high modes grow like exp(0.866 |kappa| t) and would amplify per-step
/// transform noise far above the splitting error. Throws std::domain_error on a bad
/// grid, mismatched state or steps == 0.
StateVector evolve(const StateVector& initial, const GridSpec& grid, const EvolutionParams& params);

/// Exact propagator: exp(t_final M(kappa)) applied per mode, no splitting.
/// Ignores params.steps.
StateVector evolve_exact(const StateVector& initial, const GridSpec& grid, const EvolutionParams& params);

/// Max-abs difference across all components and grid points. Throws
/// std::domain_error if the shapes differ.
double error_norm(const StateVector& a, const StateVector& b);

struct ConvergenceRow {
    std::size_t steps;
    double delta;
    double max_error;
};

/// Splitting error against evolve_exact for each step count. steps_list must be
/// non-empty and strictly increasing.
std::vector<ConvergenceRow> convergence_table(const StateVector& initial, const GridSpec& grid,
                                              Complex k, double t_final,
                                              const std::vector<std::size_t>& steps_list);

}  // namespace taucube
