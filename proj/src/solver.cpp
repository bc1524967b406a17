#include "taucube/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "taucube/fft.hpp"
#include "taucube/tau_algebra.hpp"

namespace taucube {

namespace {

void check_shape(const StateVector& s, const GridSpec& grid) {
    grid.validate();
    for (const auto& c : s.components)
        if (c.size() != grid.n_points)
            throw std::domain_error("state does not match the grid");
}

void apply_in_place(const Matrix3& m, Complex& a, Complex& b, Complex& c) {
    const Complex x = m(0, 0) * a + m(0, 1) * b + m(0, 2) * c;
    const Complex y = m(1, 0) * a + m(1, 1) * b + m(1, 2) * c;
    const Complex z = m(2, 0) * a + m(2, 1) * b + m(2, 2) * c;
    a = x;
    b = y;
    c = z;
}

}  // namespace

Matrix3 mode_generator(double kappa, Complex k) {
    return Complex(0.0, kappa) * tau(1) + k * tau(2);
}

StateVector trotter_step(const StateVector& state, const GridSpec& grid, Complex k, double delta) {
    check_shape(state, grid);

    StateVector spec;
    for (int c = 0; c < 3; ++c)
        spec.components[static_cast<std::size_t>(c)] =
            dft(state.components[static_cast<std::size_t>(c)]);

    for (std::size_t m = 0; m < grid.n_points; ++m) {
        const Matrix3 p = exp_tau(1, Complex(0.0, grid.wavenumber(m) * delta));
        apply_in_place(p, spec.components[0][m], spec.components[1][m], spec.components[2][m]);
    }

    StateVector out;
    for (int c = 0; c < 3; ++c)
        out.components[static_cast<std::size_t>(c)] =
            idft(spec.components[static_cast<std::size_t>(c)]);

    const Matrix3 q = exp_tau(2, delta * k);
    for (std::size_t j = 0; j < grid.n_points; ++j)
        apply_in_place(q, out.components[0][j], out.components[1][j], out.components[2][j]);
    return out;
}

StateVector evolve(const StateVector& initial, const GridSpec& grid, const EvolutionParams& params) {
    check_shape(initial, grid);
    if (params.steps == 0) throw std::domain_error("evolution needs at least one step");
    const double delta = params.t_final / static_cast<double>(params.steps);

    StateVector spec;
    for (int c = 0; c < 3; ++c)
        spec.components[static_cast<std::size_t>(c)] =
            dft(initial.components[static_cast<std::size_t>(c)]);

    std::vector<Matrix3> shift(grid.n_points);
    for (std::size_t m = 0; m < grid.n_points; ++m)
        shift[m] = exp_tau(1, Complex(0.0, grid.wavenumber(m) * delta));
    const Matrix3 mass = exp_tau(2, delta * params.k);

    for (std::size_t step = 0; step < params.steps; ++step) {
        for (std::size_t m = 0; m < grid.n_points; ++m) {
            Complex& a = spec.components[0][m];
            Complex& b = spec.components[1][m];
            Complex& c = spec.components[2][m];
            apply_in_place(shift[m], a, b, c);
            apply_in_place(mass, a, b, c);
        }
    }

    StateVector out;
    for (int c = 0; c < 3; ++c)
        out.components[static_cast<std::size_t>(c)] =
            idft(spec.components[static_cast<std::size_t>(c)]);
    return out;
}

StateVector evolve_exact(const StateVector& initial, const GridSpec& grid,
                         const EvolutionParams& params) {
    check_shape(initial, grid);

    StateVector spec;
    for (int c = 0; c < 3; ++c)
        spec.components[static_cast<std::size_t>(c)] =
            dft(initial.components[static_cast<std::size_t>(c)]);

    for (std::size_t m = 0; m < grid.n_points; ++m) {
        const Matrix3 propagator =
            exp_general(mode_generator(grid.wavenumber(m), params.k), Complex(params.t_final));
        apply_in_place(propagator, spec.components[0][m], spec.components[1][m],
                       spec.components[2][m]);
    }

    StateVector out;
    for (int c = 0; c < 3; ++c)
        out.components[static_cast<std::size_t>(c)] =
            idft(spec.components[static_cast<std::size_t>(c)]);
    return out;
}

double error_norm(const StateVector& a, const StateVector& b) {
    double best = 0.0;
    for (int c = 0; c < 3; ++c) {
        const auto& u = a.components[static_cast<std::size_t>(c)];
        const auto& v = b.components[static_cast<std::size_t>(c)];
        if (u.size() != v.size()) throw std::domain_error("state shapes differ");
        for (std::size_t j = 0; j < u.size(); ++j)
            best = std::max(best, std::abs(u[j] - v[j]));
    }
    return best;
}

std::vector<ConvergenceRow> convergence_table(const StateVector& initial, const GridSpec& grid,
                                              Complex k, double t_final,
                                              const std::vector<std::size_t>& steps_list) {
    if (steps_list.empty()) throw std::domain_error("step list is empty");
    for (std::size_t i = 0; i + 1 < steps_list.size(); ++i)
        if (steps_list[i] >= steps_list[i + 1])
            throw std::domain_error("step list must be strictly increasing");

    EvolutionParams params{k, t_final, 1};
    const StateVector exact = evolve_exact(initial, grid, params);

    std::vector<ConvergenceRow> rows;
    rows.reserve(steps_list.size());
    for (std::size_t n : steps_list) {
        params.steps = n;
        const StateVector approx = evolve(initial, grid, params);
        rows.push_back({n, t_final / static_cast<double>(n), error_norm(approx, exact)});
    }
    return rows;
}

}  // namespace taucube
